#include "mtc/harness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "harness_internal.hpp"
#include "mtc/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mtc {

namespace detail_rp {

MappedPairs mapped_pairs(const MRCase& c, const ClusteringOutcome& src,
                         const ClusteringOutcome& fup) {
    if (src.assignments.size() != c.source.size() ||
        fup.assignments.size() != c.followup.size())
        throw ArgumentError("outcome sizes do not match the case's datasets");

    MappedPairs mp;
    auto src_index = id_index(c.source);
    auto fup_index = id_index(c.followup);
    mp.source_k = src.cluster_count();
    mp.followup_k = fup.cluster_count();
    mp.contingency.assign(mp.source_k, std::vector<int>(mp.followup_k, 0));
    for (const auto& [old_id, new_id] : c.old_to_new) {
        auto sit = src_index.find(old_id);
        auto fit = fup_index.find(new_id);
        if (sit == src_index.end() || fit == fup_index.end())
            throw ArgumentError("old_to_new refers to unknown point ids");
        int ls = src.assignments[sit->second];
        int lf = fup.assignments[fit->second];
        mp.labels.emplace_back(ls, lf);
        if (ls != kNoise && lf != kNoise) mp.contingency[ls][lf] += 1;
    }
    return mp;
}

MappedEval evaluate_mapped(const std::vector<std::pair<int, int>>& labels,
                           const LabelAlignment& alignment, const RpOptions& options) {
    MappedEval ev;
    for (const auto& [ls, lf] : labels) {
        if (ls == kNoise) ev.mapped_src_noise += 1;
        if (lf == kNoise) ev.mapped_fup_noise += 1;
        if (ls == kNoise && lf == kNoise) continue;
        if (ls == kNoise || lf == kNoise) {
            ev.noise_flips += 1;
            if (options.count_noise_flips) ev.d_old += 1;
            continue;
        }
        auto it = alignment.mapping.find(ls);
        if (it == alignment.mapping.end() || it->second != lf) ev.d_old += 1;
    }
    return ev;
}

} // namespace detail_rp

LabelAlignment align_labels(const ClusteringOutcome& source_outcome,
                            const ClusteringOutcome& followup_outcome,
                            const std::map<std::int64_t, std::int64_t>& old_to_new,
                            const MRCase& c) {
    (void)old_to_new; // carried by the case; kept in the signature for clarity
    detail_rp::MappedPairs mp =
        detail_rp::mapped_pairs(c, source_outcome, followup_outcome);

    LabelAlignment out;
    const int ks = mp.source_k, kf = mp.followup_k;
    if (ks == 0 || kf == 0) {
        for (int s = 0; s < ks; ++s) out.unmatched_source.insert(s);
        for (int f = 0; f < kf; ++f) out.unmatched_followup.insert(f);
        return out;
    }

    // Exact assignment by bitmask DP; cluster counts are tiny here. Rows are
    // matched to the lowest column consistent with the optimum, which yields
    // the documented tie-break.
    const bool transpose = kf < ks;
    const int rows = transpose ? kf : ks;
    const int cols = transpose ? ks : kf;
    auto weight = [&](int r, int col) -> long long {
        return transpose ? mp.contingency[col][r] : mp.contingency[r][col];
    };

    if (cols > 16) {
        // Far outside the expected label counts; a deterministic greedy
        // matching keeps degenerate inputs from exhausting memory.
        std::set<int> used_cols;
        for (int r = 0; r < rows; ++r) {
            int best_col = -1;
            long long best_w = -1;
            for (int col = 0; col < cols; ++col) {
                if (used_cols.count(col)) continue;
                if (weight(r, col) > best_w) {
                    best_w = weight(r, col);
                    best_col = col;
                }
            }
            used_cols.insert(best_col);
            int s = transpose ? best_col : r;
            int f = transpose ? r : best_col;
            out.mapping.emplace(s, f);
        }
        for (int s = 0; s < ks; ++s)
            if (!out.mapping.count(s)) out.unmatched_source.insert(s);
        std::set<int> used_f;
        for (const auto& [s, f] : out.mapping) used_f.insert(f);
        for (int f = 0; f < kf; ++f)
            if (!used_f.count(f)) out.unmatched_followup.insert(f);
        return out;
    }

    const int full = 1 << cols;
    // best[r][mask] = max overlap for rows r.. using only columns outside mask.
    std::vector<std::vector<long long>> best(
        static_cast<std::size_t>(rows) + 1, std::vector<long long>(full, 0));
    for (int r = rows - 1; r >= 0; --r)
        for (int mask = 0; mask < full; ++mask) {
            long long b = -1;
            for (int col = 0; col < cols; ++col) {
                if (mask & (1 << col)) continue;
                b = std::max(b, weight(r, col) + best[r + 1][mask | (1 << col)]);
            }
            best[r][mask] = b < 0 ? 0 : b;
        }

    std::vector<int> row_to_col(rows, -1);
    int used = 0;
    for (int r = 0; r < rows; ++r) {
        for (int col = 0; col < cols; ++col) {
            if (used & (1 << col)) continue;
            if (weight(r, col) + best[r + 1][used | (1 << col)] == best[r][used]) {
                row_to_col[r] = col;
                used |= 1 << col;
                break;
            }
        }
    }

    for (int r = 0; r < rows; ++r) {
        int s = transpose ? row_to_col[r] : r;
        int f = transpose ? r : row_to_col[r];
        out.mapping.emplace(s, f);
    }
    for (int s = 0; s < ks; ++s)
        if (!out.mapping.count(s)) out.unmatched_source.insert(s);
    std::set<int> used_f;
    for (const auto& [s, f] : out.mapping) used_f.insert(f);
    for (int f = 0; f < kf; ++f)
        if (!used_f.count(f)) out.unmatched_followup.insert(f);
    return out;
}

RPResult compute_rp(const MRCase& c, const ClusteringOutcome& source_outcome,
                    const ClusteringOutcome& followup_outcome,
                    const RpOptions& options) {
    detail_rp::MappedPairs mp =
        detail_rp::mapped_pairs(c, source_outcome, followup_outcome);
    LabelAlignment alignment =
        align_labels(source_outcome, followup_outcome, c.old_to_new, c);

    RPResult res;
    res.d_old = detail_rp::evaluate_mapped(mp.labels, alignment, options).d_old;

    auto fup_index = id_index(c.followup);
    auto src_index = id_index(c.source);
    std::set<int> matched_followup;
    for (const auto& [s, f] : alignment.mapping) matched_followup.insert(f);

    switch (c.expectation) {
    case ExpectationRule::SameAsSource:
        break;
    case ExpectationRule::ParentCluster: {
        for (std::int64_t id : c.added_ids) {
            int lf = followup_outcome.assignments[fup_index.at(id)];
            int parent = c.added_parent_label.at(id);
            auto it = alignment.mapping.find(parent);
            if (lf == kNoise || it == alignment.mapping.end() || it->second != lf)
                res.d_new += 1;
        }
        break;
    }
    case ExpectationRule::MirrorGroup: {
        // Mirrors grouped by the source cluster of their pre-image. A group
        // expects its own follow-up cluster: the majority non-noise label,
        // distinct from every matched source cluster; otherwise the whole
        // group counts.
        std::map<int, std::vector<std::int64_t>> groups;
        for (std::int64_t id : c.added_ids) {
            std::int64_t pre = c.added_preimage.at(id);
            int src_label = source_outcome.assignments[src_index.at(pre)];
            groups[src_label].push_back(id);
        }
        for (const auto& [src_label, ids] : groups) {
            std::map<int, int> votes;
            for (std::int64_t id : ids) {
                int lf = followup_outcome.assignments[fup_index.at(id)];
                if (lf != kNoise) votes[lf] += 1;
            }
            if (votes.empty()) {
                res.d_new += static_cast<int>(ids.size());
                continue;
            }
            auto majority = std::max_element(votes.begin(), votes.end(),
                                             [](const auto& a, const auto& b) {
                                                 if (a.second != b.second)
                                                     return a.second < b.second;
                                                 return a.first > b.first;
                                             });
            int expected = majority->first;
            if (matched_followup.count(expected)) {
                res.d_new += static_cast<int>(ids.size());
                continue;
            }
            for (std::int64_t id : ids)
                if (followup_outcome.assignments[fup_index.at(id)] != expected)
                    res.d_new += 1;
        }
        break;
    }
    case ExpectationRule::OutlierIsolated: {
        for (std::int64_t id : c.added_ids) {
            int lf = followup_outcome.assignments[fup_index.at(id)];
            if (lf == kNoise) continue;
            bool shared = false;
            for (const auto& [old_id, new_id] : c.old_to_new)
                if (followup_outcome.assignments[fup_index.at(new_id)] == lf) {
                    shared = true;
                    break;
                }
            if (shared) res.d_new += 1;
        }
        break;
    }
    }

    res.rp = static_cast<double>(res.d_old + res.d_new) /
             static_cast<double>(c.followup.size());
    return res;
}

namespace {

int effective_k(SystemKind system, MrId mr, const BlobConfig& cfg,
                const ClusterParams& params, bool followup) {
    int k = params.k.value_or(cfg.centers);
    if (mr == MrId::MR2_2) k = followup ? 4 : 2;
    if (mr == MrId::MR6 && followup &&
        (system == SystemKind::AN || system == SystemKind::FF))
        k += 1;
    return k;
}

// Number of starting centroids the system draws at initialization: x-means
// begins its first k-means run at the lower end of its [k-1, k] range.
int init_k(SystemKind system, int k) {
    return system == SystemKind::XM ? std::max(1, k - 1) : k;
}

} // namespace

TrialRecord run_trial(SystemKind system, MrId mr, const BlobConfig& blob_config,
                      const ClusterParams& params, std::uint64_t seed,
                      int trial_index, TrialArtifacts* artifacts) {
    if (!applicable(mr, system))
        throw ApplicabilityError(std::string(mr_name(mr)) + " not applicable to " +
                                 std::string(system_name(system)));

    const std::uint64_t data_seed = derive_seed(seed, "data");
    const std::uint64_t transform_seed = derive_seed(seed, "transform");
    const std::uint64_t init_seed = derive_seed(seed, "init");

    BlobConfig cfg = blob_config;
    cfg.seed = data_seed;

    // Source dataset; MR2.2 and MR4.2 construct their own.
    MRCase c;
    Dataset source;
    switch (mr) {
    case MrId::MR2_2: c = mr2_2_mirror(cfg, transform_seed); source = c.source; break;
    case MrId::MR4_2:
        c = mr4_2_remove_redundant_attribute(cfg, 0.8, transform_seed);
        source = c.source;
        break;
    default: source = generate_blobs(cfg).first; break;
    }

    const int k_src = effective_k(system, mr, cfg, params, false);
    const int k_fup = effective_k(system, mr, cfg, params, true);

    // The same seed drives both executions; MR1.2 (or the explicit-init
    // knob) pins identical starting centroid ids instead.
    InitSpec init_src = InitSpec::seeded(init_seed);
    InitSpec init_fup = InitSpec::seeded(init_seed);
    if (mr == MrId::MR1_2) {
        auto [mr_case, inits] = mr1_2_shuffle_fixed_centroids(
            source, init_k(system, k_src), transform_seed, system);
        c = std::move(mr_case);
        init_src = inits.first;
        init_fup = inits.second;
    } else if (params.explicit_init && k_src == k_fup &&
               (system == SystemKind::KM || system == SystemKind::XM ||
                system == SystemKind::FF)) {
        // Pinning ids only makes sense when both executions draw the same
        // number of starting centroids.
        Rng rng(init_seed);
        std::vector<std::int64_t> ids;
        for (std::size_t pos : rng.sample_distinct(
                 source.size(), static_cast<std::size_t>(init_k(system, k_src))))
            ids.push_back(source.points[pos].id);
        init_src = InitSpec::explicit_ids(ids);
        init_fup = InitSpec::explicit_ids(ids);
    }

    ClusteringOutcome src_out = run_system(system, source, params, init_src, k_src);

    switch (mr) {
    case MrId::MR1_1: c = mr1_1_shuffle(source, transform_seed); break;
    case MrId::MR1_2:
    case MrId::MR2_2:
    case MrId::MR4_2: break; // already built
    case MrId::MR2_1: {
        std::vector<int> all(src_out.cluster_count());
        std::iota(all.begin(), all.end(), 0);
        c = mr2_1_shrink(source, src_out, 0.5, all, transform_seed);
        break;
    }
    case MrId::MR3_1:
        c = mr3_1_add_near_centroids(source, src_out,
                                     std::max<int>(1, static_cast<int>(source.size()) / 20),
                                     transform_seed);
        break;
    case MrId::MR3_2:
        c = mr3_2_add_on_hull(source, src_out,
                              std::max<int>(1, static_cast<int>(source.size()) / 20),
                              transform_seed);
        break;
    case MrId::MR4_1: c = mr4_1_add_informative_attribute(source, src_out); break;
    case MrId::MR5_1: c = mr5_1_rotate(source, transform_seed); break;
    case MrId::MR5_2: c = mr5_2_scale(source, transform_seed); break;
    case MrId::MR6: c = mr6_insert_outlier(source, src_out, transform_seed); break;
    }

    ClusteringOutcome fup_out = run_system(system, c.followup, params, init_fup, k_fup);

    TrialRecord rec;
    rec.system = system;
    rec.mr = mr;
    rec.trial = trial_index;
    rec.seed = seed;
    rec.n_samples = static_cast<int>(source.size());
    rec.rp = compute_rp(c, src_out, fup_out);
    rec.source_iterations = src_out.iterations;
    rec.followup_iterations = fup_out.iterations;
    const bool iterative = system == SystemKind::KM || system == SystemKind::XM ||
                           system == SystemKind::EM;
    if (iterative)
        rec.sfr = static_cast<double>(rec.source_iterations) /
                  static_cast<double>(rec.followup_iterations);
    rec.pattern = classify_pattern(c, src_out, fup_out, rec.rp).kind;
    rec.violated = rec.rp.rp > 0.0;

    if (artifacts) {
        artifacts->mr_case = std::move(c);
        artifacts->source_outcome = std::move(src_out);
        artifacts->followup_outcome = std::move(fup_out);
    }
    return rec;
}

std::uint64_t trial_seed(std::uint64_t master_seed, SystemKind system, MrId mr,
                         int trial_index) {
    std::uint64_t s = derive_seed(master_seed, system_name(system));
    s = derive_seed(s, mr_name(mr));
    return derive_seed(s, static_cast<std::uint64_t>(trial_index));
}

int CampaignSummary::distinct_violated_mrs(SystemKind system) const {
    auto it = cells.find(system);
    if (it == cells.end()) return 0;
    int count = 0;
    for (const auto& [mr, cell] : it->second)
        if (cell.applicable && cell.violations > 0) count += 1;
    return count;
}

CampaignSummary summarize(const CampaignConfig& config,
                          const std::vector<TrialRecord>& trials) {
    CampaignSummary summary;
    for (SystemKind system : config.systems)
        for (MrId mr : config.mrs) {
            CellSummary cell;
            cell.applicable = applicable(mr, system);
            summary.cells[system][mr] = cell;
        }
    for (const TrialRecord& rec : trials) {
        CellSummary& cell = summary.cells[rec.system][rec.mr];
        cell.trials += 1;
        if (rec.violated) {
            cell.violations += 1;
            cell.mean_rp = cell.mean_rp.value_or(0.0) + rec.rp.rp;
            cell.pattern_histogram[rec.pattern] += 1;
        }
    }
    for (auto& [system, row] : summary.cells)
        for (auto& [mr, cell] : row) {
            if (cell.trials > 0)
                cell.vr = static_cast<double>(cell.violations) / cell.trials;
            if (cell.mean_rp) cell.mean_rp = *cell.mean_rp / cell.violations;
        }
    return summary;
}

namespace {

struct FlatTrial {
    SystemKind system;
    MrId mr;
    int trial;
    std::uint64_t seed;
    int n_samples;
};

std::vector<FlatTrial> flatten(const CampaignConfig& config) {
    if (config.n_trials < 1) throw ConfigError("n_trials must be >= 1");
    if (config.systems.empty() || config.mrs.empty())
        throw ConfigError("campaign needs at least one system and one relation");
    std::vector<FlatTrial> flat;
    for (SystemKind system : config.systems)
        for (MrId mr : config.mrs) {
            if (!applicable(mr, system)) continue;
            for (int t = 0; t < config.n_trials; ++t) {
                std::uint64_t seed = trial_seed(config.master_seed, system, mr, t);
                // Per-trial dataset size drawn from [50, 200].
                int n = 50 + static_cast<int>(derive_seed(seed, "n-samples") % 151);
                flat.push_back({system, mr, t, seed, n});
            }
        }
    return flat;
}

} // namespace

namespace {

// Some relations cannot be built on top of a particular source outcome (for
// example MR4.1 when DS labels part of the data as noise). Such trials are
// skipped and counted per cell rather than failing the campaign.
struct SlotResult {
    std::optional<TrialRecord> record;
    std::optional<TrialArtifacts> artifacts;
    std::string error; // non-applicability failure, fatal
};

SlotResult run_slot(const CampaignConfig& config, const FlatTrial& ft) {
    SlotResult slot;
    BlobConfig cfg = config.blob_template;
    cfg.n_samples = ft.n_samples;
    try {
        TrialArtifacts art;
        slot.record = run_trial(ft.system, ft.mr, cfg, config.params, ft.seed, ft.trial,
                                config.keep_artifacts ? &art : nullptr);
        if (config.keep_artifacts) slot.artifacts = std::move(art);
    } catch (const ApplicabilityError&) {
        // Skipped: the case was unconstructible for this trial's outcome.
    } catch (const std::exception& e) {
        slot.error = e.what();
    }
    return slot;
}

CampaignResult collect_slots(const CampaignConfig& config,
                             const std::vector<FlatTrial>& flat,
                             std::vector<SlotResult>&& slots) {
    CampaignResult result;
    std::map<SystemKind, std::map<MrId, int>> skipped;
    for (std::size_t i = 0; i < flat.size(); ++i) {
        if (!slots[i].error.empty()) throw Error(slots[i].error);
        if (!slots[i].record) {
            skipped[flat[i].system][flat[i].mr] += 1;
            continue;
        }
        result.trials.push_back(*slots[i].record);
        result.artifacts.push_back(std::move(slots[i].artifacts));
    }
    result.summary = summarize(config, result.trials);
    for (const auto& [system, row] : skipped)
        for (const auto& [mr, count] : row)
            result.summary.cells[system][mr].skipped = count;
    return result;
}

} // namespace

CampaignResult run_campaign_serial(const CampaignConfig& config) {
    std::vector<FlatTrial> flat = flatten(config);
    std::vector<SlotResult> slots(flat.size());
    for (std::size_t i = 0; i < flat.size(); ++i) slots[i] = run_slot(config, flat[i]);
    return collect_slots(config, flat, std::move(slots));
}

CampaignResult run_campaign(const CampaignConfig& config) {
    if (config.jobs <= 1) return run_campaign_serial(config);
    std::vector<FlatTrial> flat = flatten(config);
    std::vector<SlotResult> slots(flat.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(config.jobs)
#endif
    for (std::size_t i = 0; i < flat.size(); ++i) slots[i] = run_slot(config, flat[i]);
    return collect_slots(config, flat, std::move(slots));
}

} // namespace mtc
