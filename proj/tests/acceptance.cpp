// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "mtc/clusterers.hpp"
#include "mtc/io.hpp"
#include "mtc/rng.hpp"
#include "mtc/selection.hpp"
#include "mtc/stats.hpp"
#include "oracles.hpp"

using namespace mtc;
using fixtures::labels;
using fixtures::make_fixture;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] %2d. %s — %s\n", pass ? "PASS" : "FAIL", index, name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

int hardware_jobs() {
#ifdef _OPENMP
    return 2;
#else
    return 1;
#endif
}

CampaignConfig base_config(std::vector<SystemKind> systems, std::vector<MrId> mrs,
                           int trials, std::uint64_t seed) {
    CampaignConfig config;
    config.systems = std::move(systems);
    config.mrs = std::move(mrs);
    config.n_trials = trials;
    config.master_seed = seed;
    config.jobs = hardware_jobs();
    return config;
}

int total_violations(const CampaignSummary& summary) {
    int total = 0;
    for (const auto& [system, row] : summary.cells)
        for (const auto& [mr, cell] : row) total += cell.violations;
    return total;
}

// --- criteria ---------------------------------------------------------

void criterion_1_scale_invariance() {
    auto start = std::chrono::steady_clock::now();
    auto config = base_config({SystemKind::KM, SystemKind::XM, SystemKind::EM,
                               SystemKind::AN, SystemKind::FF, SystemKind::DS},
                              {MrId::MR5_2}, 100, 42);
    auto result = run_campaign(config);
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    int violations = total_violations(result.summary);
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "MR5.2 violations across 6 systems x 100 trials: %d (need 0); "
                  "%.1fs (target < 60s)",
                  violations, elapsed);
    report(1, "uniform scaling leaves every system unchanged",
           violations == 0 && elapsed < 60.0, detail);
}

void criterion_2_fixed_centroids() {
    auto config = base_config({SystemKind::KM, SystemKind::XM, SystemKind::FF},
                              {MrId::MR1_2}, 100, 43);
    auto result = run_campaign(config);
    int violations = total_violations(result.summary);
    char detail[120];
    std::snprintf(detail, sizeof detail,
                  "MR1.2 violations for KM/XM/FF x 100 trials: %d (need 0)", violations);
    report(2, "reordering with fixed starting centroids", violations == 0, detail);
}

void criterion_3_an_order_independence() {
    auto config = base_config({SystemKind::AN}, {MrId::MR1_1}, 100, 44);
    auto result = run_campaign(config);
    int violations = total_violations(result.summary);
    char detail[96];
    std::snprintf(detail, sizeof detail, "AN x MR1.1 violations in 100 trials: %d (need 0)",
                  violations);
    report(3, "agglomerative order independence", violations == 0, detail);
}

void criterion_4_rotation_mechanism() {
    BlobConfig cfg;
    ClusterParams params;
    params.explicit_init = true;

    params.normalize = false;
    int raw_violations = 0;
    for (int t = 0; t < 100; ++t) {
        cfg.n_samples = 50 + static_cast<int>(derive_seed(45, t) % 151);
        auto rec = run_trial(SystemKind::KM, MrId::MR5_1, cfg, params,
                             trial_seed(45, SystemKind::KM, MrId::MR5_1, t), t);
        if (rec.violated) ++raw_violations;
    }
    params.normalize = true;
    int norm_violations = 0;
    for (int t = 0; t < 100; ++t) {
        cfg.n_samples = 50 + static_cast<int>(derive_seed(45, t) % 151);
        auto rec = run_trial(SystemKind::KM, MrId::MR5_1, cfg, params,
                             trial_seed(45, SystemKind::KM, MrId::MR5_1, t), t);
        if (rec.violated) ++norm_violations;
    }
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "KM x MR5.1: VR=%d%% without normalization (need 0), VR=%d%% with "
                  "(need > 0)",
                  raw_violations, norm_violations);
    report(4, "min-max normalization is the rotation-violation mechanism",
           raw_violations == 0 && norm_violations > 0, detail);
}

void criterion_5_small_instance_oracles() {
    int mismatches = 0;
    std::ostringstream detail;

    {
        Rng rng(1001);
        for (int rep = 0; rep < 200; ++rep) {
            std::size_t n = 5 + rng.next_below(26);
            Dataset ds;
            ds.dim = 2;
            for (std::size_t i = 0; i < n; ++i)
                ds.points.push_back({static_cast<std::int64_t>(i),
                                     {rng.next_gaussian(), rng.next_gaussian()}});
            double eps = 0.15 + rng.next_double() * 0.85;
            int min_pts = 2 + static_cast<int>(rng.next_below(5));
            bool normalize = rep % 2 == 0;
            ClusterParams params;
            params.normalize = normalize;
            auto got = dbscan(ds, eps, min_pts, params);
            if (got.assignments != oracle::dbscan_closure(ds, eps, min_pts, normalize))
                ++mismatches;
        }
        detail << "dbscan 200/" << 200 - mismatches << " ok";
    }
    {
        int bad = 0;
        Rng rng(1002);
        for (int rep = 0; rep < 100; ++rep) {
            std::size_t n = 4 + rng.next_below(7);
            Dataset ds;
            ds.dim = 2;
            for (std::size_t i = 0; i < n; ++i)
                ds.points.push_back({static_cast<std::int64_t>(i),
                                     {rng.next_gaussian(), rng.next_gaussian()}});
            int k = 1 + static_cast<int>(rng.next_below(3));
            for (Linkage linkage :
                 {Linkage::Single, Linkage::Complete, Linkage::Average}) {
                ClusterParams params;
                params.normalize = false;
                if (agglomerative(ds, k, linkage, params).assignments !=
                    oracle::agglomerative_rerun(ds, k, linkage, false))
                    ++bad;
            }
        }
        mismatches += bad;
        detail << ", agglomerative " << 300 - bad << "/300 ok";
    }
    {
        int bad = 0;
        Rng rng(1003);
        for (int rep = 0; rep < 100; ++rep) {
            std::size_t n = 4 + rng.next_below(5); // 4..8
            Dataset ds;
            ds.dim = 2;
            for (std::size_t i = 0; i < n; ++i)
                ds.points.push_back({static_cast<std::int64_t>(i),
                                     {rng.next_gaussian() * 2, rng.next_gaussian() * 2}});
            int k = 1 + static_cast<int>(rng.next_below(3));
            ClusterParams params;
            params.normalize = false;
            auto out = kmeans(ds, k, InitSpec::seeded(rep), params);
            if (out.km->sse_history.back() < oracle::best_partition_sse(ds, k) - 1e-9)
                ++bad;
        }
        mismatches += bad;
        detail << ", kmeans SSE bound " << 100 - bad << "/100 ok";
    }
    {
        int bad = 0;
        Rng rng(1004);
        for (int rep = 0; rep < 200; ++rep) {
            std::size_t n = 4 + rng.next_below(47); // 4..50
            std::vector<Point2> pts;
            for (std::size_t i = 0; i < n; ++i)
                pts.push_back({rng.next_gaussian() * 3, rng.next_gaussian() * 3});
            auto hull = convex_hull_2d(pts);
            std::set<std::size_t> got(hull.begin(), hull.end());
            if (got != oracle::hull_vertices(pts)) ++bad;
        }
        mismatches += bad;
        detail << ", hull " << 200 - bad << "/200 ok";
    }
    report(5, "small-instance oracle equivalence", mismatches == 0, detail.str());
}

void criterion_6_rp_unit_suite() {
    int failed = 0;
    auto expect = [&](const fixtures::Fixture& f, int d_old, int d_new) {
        auto rp = compute_rp(f.c, f.src, f.fup);
        bool ok = rp.d_old == d_old && rp.d_new == d_new &&
                  rp.rp == static_cast<double>(d_old + d_new) /
                               static_cast<double>(f.c.followup.size());
        if (!ok) ++failed;
    };

    // 1. identical outcomes
    expect(make_fixture(labels({{0, 10}, {1, 10}}), labels({{0, 10}, {1, 10}})), 0, 0);
    // 2. pure label permutation
    expect(make_fixture(labels({{0, 7}, {1, 7}, {2, 7}}),
                        labels({{2, 7}, {0, 7}, {1, 7}})),
           0, 0);
    // 3. permutation plus one stray point
    expect(make_fixture(labels({{0, 7}, {1, 7}, {2, 7}}),
                        labels({{2, 6}, {0, 1}, {0, 7}, {1, 7}})),
           1, 0);
    // 4. two flips and one misplaced added point: rp = 3/60 = 0.05
    {
        auto f = make_fixture(labels({{0, 30}, {1, 29}}),
                              labels({{1, 1}, {0, 29}, {0, 1}, {1, 28}}), {1},
                              ExpectationRule::ParentCluster);
        f.c.added_parent_label[f.c.added_ids[0]] = 0;
        auto rp = compute_rp(f.c, f.src, f.fup);
        if (!(rp.d_old == 2 && rp.d_new == 1 && rp.rp == 3.0 / 60.0)) ++failed;
    }
    // 5. noise -> cluster flips
    expect(make_fixture(labels({{0, 8}, {kNoise, 2}}), labels({{0, 8}, {0, 2}})), 2, 0);
    // 6. cluster -> noise flips
    expect(make_fixture(labels({{0, 9}, {1, 3}}), labels({{0, 9}, {kNoise, 3}})), 3, 0);
    // 7. added points all landing in their parent cluster
    {
        auto f = make_fixture(labels({{0, 6}, {1, 6}}), labels({{0, 6}, {1, 6}}),
                              {0, 0, 1}, ExpectationRule::ParentCluster);
        f.c.added_parent_label[f.c.added_ids[0]] = 0;
        f.c.added_parent_label[f.c.added_ids[1]] = 0;
        f.c.added_parent_label[f.c.added_ids[2]] = 1;
        auto rp = compute_rp(f.c, f.src, f.fup);
        if (!(rp.d_old == 0 && rp.d_new == 0 && rp.rp == 0.0)) ++failed;
    }
    // 8. outlier isolated in its own singleton: no violation
    expect(make_fixture(labels({{0, 5}, {1, 5}}), labels({{0, 5}, {1, 5}}), {2},
                        ExpectationRule::OutlierIsolated),
           0, 0);
    // 9. outlier swallowed by an existing cluster
    expect(make_fixture(labels({{0, 5}, {1, 5}}), labels({{0, 5}, {1, 5}}), {1},
                        ExpectationRule::OutlierIsolated),
           0, 1);
    // 10. mirror group 6/4 majority rule
    {
        auto f = make_fixture(labels({{0, 10}, {1, 10}}), labels({{0, 10}, {1, 10}}),
                              labels({{2, 6}, {3, 4}, {3, 10}}),
                              ExpectationRule::MirrorGroup, MrId::MR2_2);
        for (std::size_t i = 0; i < f.c.added_ids.size(); ++i)
            f.c.added_preimage[f.c.added_ids[i]] = static_cast<std::int64_t>(i);
        auto rp = compute_rp(f.c, f.src, f.fup);
        if (!(rp.d_old == 0 && rp.d_new == 4 && rp.rp == 4.0 / 40.0)) ++failed;
    }

    char detail[96];
    std::snprintf(detail, sizeof detail, "%d/10 constructed cases exact", 10 - failed);
    report(6, "RP formula unit suite", failed == 0, detail);
}

void criterion_7_correlation_contract() {
    int in_range = 0;
    const int seeds = 200;
    for (int s = 0; s < seeds; ++s) {
        Rng rng(derive_seed(4600, s));
        std::vector<double> a(200);
        for (double& v : a) v = rng.next_gaussian();
        auto corr = generate_correlated_attribute(a, 0.8, derive_seed(4700, s));
        double r = pearson(a, corr);
        if (r >= 0.65 && r <= 0.95) ++in_range;
    }
    char detail[96];
    std::snprintf(detail, sizeof detail,
                  "pearson in [0.65, 0.95] for %d/200 seeds (need >= 190)", in_range);
    report(7, "correlated-attribute statistical contract", in_range >= 190, detail);
}

void criterion_8_em_invariants() {
    int bad = 0;
    for (int rep = 0; rep < 50; ++rep) {
        BlobConfig cfg;
        cfg.n_samples = 50 + static_cast<int>(derive_seed(4800, rep) % 151);
        cfg.seed = derive_seed(4801, rep);
        Dataset ds = generate_blobs(cfg).first;
        ClusterParams params;
        auto out = em_cluster(ds, 3, params, derive_seed(4802, rep));
        const auto& hist = out.em->log_likelihood_history;
        for (std::size_t i = 1; i < hist.size(); ++i)
            if (hist[i] < hist[i - 1] - 1e-9) ++bad;
        double wsum = 0.0;
        for (double w : out.em->weights) wsum += w;
        if (std::abs(wsum - 1.0) > 1e-9) ++bad;
        for (const auto& r : out.em->responsibilities) {
            double rsum = 0.0;
            for (double v : r) rsum += v;
            if (std::abs(rsum - 1.0) > 1e-9) ++bad;
        }
    }
    char detail[96];
    std::snprintf(detail, sizeof detail, "%d invariant breaches over 50 datasets (need 0)",
                  bad);
    report(8, "EM numerical invariants", bad == 0, detail);
}

void criterion_9_pattern_fixtures() {
    int failed = 0;
    auto expect = [&](fixtures::Fixture f, PatternKind want) {
        auto rp = compute_rp(f.c, f.src, f.fup);
        if (classify_pattern(f.c, f.src, f.fup, rp).kind != want) {
            ++failed;
            return;
        }
        // Permuting follow-up labels must not change the verdict.
        int kf = f.fup.cluster_count();
        if (kf > 1) {
            for (int& a : f.fup.assignments)
                if (a != kNoise) a = (a + 1) % kf;
            auto rp2 = compute_rp(f.c, f.src, f.fup);
            if (classify_pattern(f.c, f.src, f.fup, rp2).kind != want) ++failed;
        }
    };

    // BORDER: a few boundary points drift between matched clusters.
    expect(make_fixture(labels({{0, 10}, {1, 10}, {2, 10}}),
                        labels({{0, 10}, {1, 9}, {2, 1}, {2, 10}})),
           PatternKind::Border);
    expect(make_fixture(labels({{0, 12}, {1, 12}}),
                        labels({{0, 11}, {1, 1}, {1, 11}, {0, 1}})),
           PatternKind::Border);
    expect(make_fixture(labels({{0, 20}, {1, 20}, {2, 20}}),
                        labels({{0, 19}, {1, 1}, {1, 19}, {2, 1}, {2, 20}})),
           PatternKind::Border);

    // MERGE & SPLIT: two sources merge into one follow-up cluster and a
    // third source splits, keeping the cluster count.
    expect(make_fixture(labels({{0, 10}, {1, 10}, {2, 10}}),
                        labels({{0, 10}, {0, 10}, {1, 5}, {2, 5}})),
           PatternKind::MergeAndSplit);
    expect(make_fixture(labels({{0, 8}, {1, 8}, {2, 10}}),
                        labels({{2, 8}, {2, 8}, {0, 7}, {1, 3}})),
           PatternKind::MergeAndSplit);
    expect(make_fixture(labels({{0, 10}, {1, 10}, {2, 16}, {3, 10}}),
                        labels({{0, 10}, {0, 10}, {1, 8}, {2, 8}, {3, 10}})),
           PatternKind::MergeAndSplit);

    // SPLIT: one source splits into two follow-up clusters; the spare
    // cluster count is absorbed by MR6's allowance.
    expect(make_fixture(labels({{0, 10}, {1, 10}, {2, 10}}),
                        labels({{0, 5}, {3, 5}, {1, 10}, {2, 10}}), {kNoise},
                        ExpectationRule::OutlierIsolated, MrId::MR6),
           PatternKind::Split);
    expect(make_fixture(labels({{0, 10}, {1, 10}}),
                        labels({{0, 6}, {2, 4}, {1, 10}}), {kNoise},
                        ExpectationRule::OutlierIsolated, MrId::MR6),
           PatternKind::Split);
    expect(make_fixture(labels({{0, 10}, {1, 15}, {2, 10}}),
                        labels({{0, 10}, {1, 8}, {3, 7}, {2, 10}}), {kNoise},
                        ExpectationRule::OutlierIsolated, MrId::MR6),
           PatternKind::Split);

    // NOISE: reclustering dominated by noise flips.
    expect(make_fixture(labels({{0, 20}, {1, 20}, {kNoise, 12}}),
                        labels({{0, 20}, {1, 20}, {0, 12}})),
           PatternKind::Noise);
    expect(make_fixture(labels({{0, 20}, {1, 10}}),
                        labels({{0, 20}, {1, 5}, {kNoise, 5}})),
           PatternKind::Noise);
    expect(make_fixture(labels({{0, 15}, {kNoise, 4}, {1, 15}}),
                        labels({{0, 14}, {kNoise, 1}, {0, 4}, {1, 15}})),
           PatternKind::Noise);

    // NUM: cluster counts change beyond the relation's allowance.
    expect(make_fixture(labels({{0, 10}, {1, 10}, {2, 10}}),
                        labels({{0, 10}, {1, 10}, {2, 4}, {3, 3}, {4, 3}})),
           PatternKind::Num);
    expect(make_fixture(labels({{0, 10}, {1, 10}, {2, 10}}),
                        labels({{0, 10}, {1, 10}, {1, 10}})),
           PatternKind::Num);
    {
        auto f = make_fixture(labels({{0, 10}, {1, 10}}),
                              labels({{0, 4}, {1, 4}, {2, 4}, {3, 4}, {4, 4}}),
                              labels({{5, 3}}), ExpectationRule::MirrorGroup,
                              MrId::MR2_2);
        for (std::size_t i = 0; i < f.c.added_ids.size(); ++i)
            f.c.added_preimage[f.c.added_ids[i]] = static_cast<std::int64_t>(i);
        expect(f, PatternKind::Num);
    }

    char detail[96];
    std::snprintf(detail, sizeof detail,
                  "%d/15 fixtures classified exactly (incl. permutation checks)",
                  15 - failed);
    report(9, "pattern classifier fixtures", failed == 0, detail);
}

void criterion_10_selection_framework() {
    bool ok = true;
    std::ostringstream detail;

    // Worked example: S = 0.5 * 0.3 + 0.8 * 0.99 = 0.942.
    SelectionScheme scheme;
    scheme.mr_weights = {{MrId::MR1_1, 0.5}, {MrId::MR5_1, 0.8}};
    scheme.pattern_weights = {{PatternKind::Border, 0.3},
                              {PatternKind::MergeAndSplit, 0.99}};
    std::map<MrId, CellSummary> row;
    CellSummary a;
    a.trials = 100;
    a.violations = 5;
    a.pattern_histogram[PatternKind::Border] = 5;
    row[MrId::MR1_1] = a;
    CellSummary b = a;
    b.pattern_histogram.clear();
    b.pattern_histogram[PatternKind::Border] = 2;
    b.pattern_histogram[PatternKind::MergeAndSplit] = 3;
    row[MrId::MR5_1] = b;
    double s = score_system(row, scheme);
    bool worked = s == 0.5 * 0.3 + 0.8 * 0.99 && std::abs(s - 0.942) < 1e-12;
    ok = ok && worked;
    detail << "worked example S=" << s;

    // Zero-violation score.
    std::map<MrId, CellSummary> clean;
    CellSummary zero;
    zero.trials = 100;
    clean[MrId::MR1_1] = zero;
    clean[MrId::MR5_1] = zero;
    bool zero_ok = score_system(clean, scheme) == 0.0;
    ok = ok && zero_ok;
    detail << (zero_ok ? ", S=0 case ok" : ", S=0 case FAILED");

    // Must-have elimination.
    CampaignSummary summary;
    summary.cells[SystemKind::KM][MrId::MR6] = a; // violated
    summary.cells[SystemKind::KM][MrId::MR1_1] = zero;
    summary.cells[SystemKind::AN][MrId::MR6] = zero;
    summary.cells[SystemKind::AN][MrId::MR1_1] = a;
    SelectionScheme with_must = scheme;
    with_must.must_have = {MrId::MR6};
    with_must.mr_weights.erase(MrId::MR5_1);
    auto sel = select_system(summary, with_must);
    bool elim_ok = sel.eliminated == std::vector<SystemKind>{SystemKind::KM} &&
                   sel.chosen == SystemKind::AN;
    ok = ok && elim_ok;
    detail << (elim_ok ? ", elimination ok" : ", elimination FAILED");

    // Ranking invariance under common w1 scaling.
    CampaignSummary multi;
    multi.cells[SystemKind::KM][MrId::MR1_1] = a;
    multi.cells[SystemKind::KM][MrId::MR5_1] = b;
    multi.cells[SystemKind::FF][MrId::MR1_1] = a;
    multi.cells[SystemKind::FF][MrId::MR5_1] = zero;
    multi.cells[SystemKind::AN][MrId::MR1_1] = zero;
    multi.cells[SystemKind::AN][MrId::MR5_1] = zero;
    auto before = select_system(multi, scheme);
    SelectionScheme scaled = scheme;
    for (auto& [mr, w] : scaled.mr_weights) w *= 0.25;
    auto after = select_system(multi, scaled);
    bool scale_ok = before.ranking == after.ranking && before.chosen == after.chosen;
    for (const auto& [system, score] : before.scores)
        if (std::abs(after.scores.at(system) - 0.25 * score) > 1e-12) scale_ok = false;
    ok = ok && scale_ok;
    detail << (scale_ok ? ", scaling invariance ok" : ", scaling invariance FAILED");

    report(10, "selection framework", ok, detail.str());
}

void criterion_11_determinism() {
    auto mrs = all_mrs();
    auto config = base_config({SystemKind::KM, SystemKind::XM, SystemKind::EM,
                               SystemKind::AN, SystemKind::FF, SystemKind::DS},
                              {mrs.begin(), mrs.end()}, 10, 4242);
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "mtc_acceptance_det";
    fs::remove_all(dir);
    fs::create_directories(dir);

    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };

    auto first = run_campaign(config);
    write_trials_csv(first.trials, dir / "a_trials.csv");
    write_summary_json(config, first.summary, dir / "a_summary.json");
    auto second = run_campaign(config);
    write_trials_csv(second.trials, dir / "b_trials.csv");
    write_summary_json(config, second.summary, dir / "b_summary.json");

    bool trials_equal = slurp(dir / "a_trials.csv") == slurp(dir / "b_trials.csv");
    bool summary_equal = slurp(dir / "a_summary.json") == slurp(dir / "b_summary.json");

    // The serial reference runner must agree with the parallel one too.
    CampaignConfig serial_config = config;
    serial_config.jobs = 1;
    auto serial = run_campaign_serial(serial_config);
    write_trials_csv(serial.trials, dir / "c_trials.csv");
    bool serial_equal = slurp(dir / "a_trials.csv") == slurp(dir / "c_trials.csv");
    fs::remove_all(dir);

    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "repeat run byte-identical: trials=%s summary=%s; serial==parallel: %s",
                  trials_equal ? "yes" : "NO", summary_equal ? "yes" : "NO",
                  serial_equal ? "yes" : "NO");
    report(11, "campaign determinism", trials_equal && summary_equal && serial_equal,
           detail);
}

void criterion_12_km_vs_an() {
    auto mrs = all_mrs();
    auto config = base_config({SystemKind::KM, SystemKind::AN},
                              {mrs.begin(), mrs.end()}, 100, 46);
    auto result = run_campaign(config);
    int km = result.summary.distinct_violated_mrs(SystemKind::KM);
    int an = result.summary.distinct_violated_mrs(SystemKind::AN);
    char detail[120];
    std::snprintf(detail, sizeof detail,
                  "distinct violated MRs over 100 trials: KM=%d, AN=%d (need KM > AN)", km,
                  an);
    report(12, "KM violates more relations than AN", km > an, detail);
}

} // namespace

int main() {
    auto start = std::chrono::steady_clock::now();
    criterion_1_scale_invariance();
    criterion_2_fixed_centroids();
    criterion_3_an_order_independence();
    criterion_4_rotation_mechanism();
    criterion_5_small_instance_oracles();
    criterion_6_rp_unit_suite();
    criterion_7_correlation_contract();
    criterion_8_em_invariants();
    criterion_9_pattern_fixtures();
    criterion_10_selection_framework();
    criterion_11_determinism();
    criterion_12_km_vs_an();
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s — %d/12 criteria passed in %.1fs\n",
                g_failures == 0 ? "ACCEPTED" : "REJECTED", 12 - g_failures, elapsed);
    return g_failures == 0 ? 0 : 1;
}
