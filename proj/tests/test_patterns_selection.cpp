#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "mtc/patterns.hpp"
#include "mtc/rng.hpp"
#include "mtc/selection.hpp"

using namespace mtc;
using fixtures::Fixture;
using fixtures::labels;
using fixtures::make_fixture;

namespace {

PatternKind classify(Fixture& f) {
    RPResult rp = compute_rp(f.c, f.src, f.fup);
    return classify_pattern(f.c, f.src, f.fup, rp).kind;
}

// Pattern classification must not depend on follow-up label identities.
void check_permutation_invariance(Fixture f, PatternKind expected) {
    int kf = f.fup.cluster_count();
    std::vector<int> perm(kf);
    for (int i = 0; i < kf; ++i) perm[i] = (i + 1) % kf;
    for (int& a : f.fup.assignments)
        if (a != kNoise) a = perm[a];
    CHECK(classify(f) == expected);
}

CellSummary cell(int violations, std::initializer_list<std::pair<PatternKind, int>> hist) {
    CellSummary c;
    c.trials = 100;
    c.violations = violations;
    c.vr = violations / 100.0;
    for (auto [kind, count] : hist) c.pattern_histogram[kind] = count;
    return c;
}

} // namespace

TEST_CASE("patterns: boundary reassignments classify as BORDER") {
    // Contingency [[10,0,0],[0,9,1],[0,0,10]]: one point drifts between
    // adjacent clusters.
    auto f = make_fixture(labels({{0, 10}, {1, 10}, {2, 10}}),
                          labels({{0, 10}, {1, 9}, {2, 1}, {2, 10}}));
    CHECK(classify(f) == PatternKind::Border);
    check_permutation_invariance(f, PatternKind::Border);
}

TEST_CASE("patterns: merge plus split classifies as MERGE_AND_SPLIT") {
    // A and B co-locate in one follow-up cluster; C splits 50/50.
    auto f = make_fixture(labels({{0, 10}, {1, 10}, {2, 10}}),
                          labels({{0, 10}, {0, 10}, {1, 5}, {2, 5}}));
    RPResult rp = compute_rp(f.c, f.src, f.fup);
    auto label = classify_pattern(f.c, f.src, f.fup, rp);
    CHECK(label.kind == PatternKind::MergeAndSplit);
    CHECK(label.evidence.merged_sources.size() >= 1);
    CHECK(label.evidence.split_sources.size() >= 1);
    check_permutation_invariance(f, PatternKind::MergeAndSplit);
}

TEST_CASE("patterns: reclustered noise classifies as NOISE") {
    // 12 source-noise points become clustered members; nothing else moves.
    auto f = make_fixture(labels({{0, 20}, {1, 20}, {kNoise, 12}}),
                          labels({{0, 20}, {1, 20}, {0, 12}}));
    CHECK(classify(f) == PatternKind::Noise);
    check_permutation_invariance(f, PatternKind::Noise);
}

TEST_CASE("patterns: NONE exactly when rp is zero") {
    auto clean = make_fixture(labels({{0, 10}, {1, 10}}), labels({{0, 10}, {1, 10}}));
    CHECK(classify(clean) == PatternKind::None);

    auto dirty = make_fixture(labels({{0, 10}, {1, 10}}),
                              labels({{0, 9}, {1, 1}, {1, 10}}));
    CHECK(classify(dirty) != PatternKind::None);
}

TEST_CASE("patterns: cluster-count changes classify as NUM") {
    // Three source clusters, five follow-up clusters.
    auto f = make_fixture(labels({{0, 10}, {1, 10}, {2, 10}}),
                          labels({{0, 10}, {1, 10}, {2, 4}, {3, 3}, {4, 3}}));
    CHECK(classify(f) == PatternKind::Num);
    check_permutation_invariance(f, PatternKind::Num);
}

TEST_CASE("patterns: MR6 tolerates one extra cluster before NUM fires") {
    // The outlier may form its own cluster: 2 -> 3 is expected under MR6.
    auto ok = make_fixture(labels({{0, 10}, {1, 10}}),
                           labels({{0, 9}, {1, 1}, {1, 10}}), {2},
                           ExpectationRule::OutlierIsolated, MrId::MR6);
    CHECK(classify(ok) == PatternKind::Border);

    auto too_many = make_fixture(labels({{0, 10}, {1, 10}}),
                                 labels({{0, 5}, {2, 5}, {1, 5}, {3, 5}}), {4},
                                 ExpectationRule::OutlierIsolated, MrId::MR6);
    CHECK(classify(too_many) == PatternKind::Num);
}

TEST_CASE("selection: worked score example") {
    SelectionScheme scheme;
    scheme.mr_weights = {{MrId::MR1_1, 0.5}, {MrId::MR5_1, 0.8}};
    scheme.pattern_weights = {{PatternKind::Border, 0.3},
                              {PatternKind::MergeAndSplit, 0.99}};
    std::map<MrId, CellSummary> row;
    row[MrId::MR1_1] = cell(5, {{PatternKind::Border, 5}});
    row[MrId::MR5_1] = cell(10, {{PatternKind::Border, 4},
                                 {PatternKind::MergeAndSplit, 6}});
    double s = score_system(row, scheme);
    CHECK(s == doctest::Approx(0.5 * 0.3 + 0.8 * 0.99).epsilon(1e-12));
    CHECK(s == doctest::Approx(0.942).epsilon(1e-12));
}

TEST_CASE("selection: zero violations score zero") {
    SelectionScheme scheme;
    scheme.mr_weights = {{MrId::MR1_1, 0.5}, {MrId::MR6, 0.9}};
    scheme.pattern_weights = {{PatternKind::Border, 0.5}};
    std::map<MrId, CellSummary> row;
    row[MrId::MR1_1] = cell(0, {});
    CHECK(score_system(row, scheme) == 0.0);
}

TEST_CASE("selection: adding a violation never decreases the score") {
    SelectionScheme scheme;
    scheme.mr_weights = {{MrId::MR1_1, 0.5}, {MrId::MR5_1, 0.7}, {MrId::MR6, 0.2}};
    scheme.pattern_weights = {{PatternKind::Border, 0.3},
                              {PatternKind::Split, 0.6}};
    std::map<MrId, CellSummary> row;
    row[MrId::MR1_1] = cell(3, {{PatternKind::Border, 3}});
    double base = score_system(row, scheme);
    row[MrId::MR6] = cell(1, {{PatternKind::Split, 1}});
    CHECK(score_system(row, scheme) >= base);
}

TEST_CASE("selection: elimination precedes scoring; ranking and ties") {
    CampaignSummary summary;
    // A violates must-have MR6; B scores high but survives; C is clean.
    summary.cells[SystemKind::KM][MrId::MR6] = cell(2, {{PatternKind::Border, 2}});
    summary.cells[SystemKind::KM][MrId::MR1_1] = cell(0, {});
    summary.cells[SystemKind::FF][MrId::MR6] = cell(0, {});
    summary.cells[SystemKind::FF][MrId::MR1_1] = cell(90, {{PatternKind::Border, 90}});
    summary.cells[SystemKind::AN][MrId::MR6] = cell(0, {});
    summary.cells[SystemKind::AN][MrId::MR1_1] = cell(0, {});

    SelectionScheme scheme;
    scheme.must_have = {MrId::MR6};
    scheme.mr_weights = {{MrId::MR1_1, 0.5}};
    scheme.pattern_weights = {{PatternKind::Border, 0.9}};

    auto result = select_system(summary, scheme);
    CHECK(result.eliminated == std::vector<SystemKind>{SystemKind::KM});
    CHECK(result.chosen == SystemKind::AN);
    CHECK(result.scores.at(SystemKind::AN) == 0.0);
    CHECK(result.scores.at(SystemKind::FF) ==
          doctest::Approx(0.45).epsilon(1e-12));

    // Equal scores fall back to the lexicographic name order.
    CampaignSummary tied;
    tied.cells[SystemKind::FF][MrId::MR1_1] = cell(0, {});
    tied.cells[SystemKind::AN][MrId::MR1_1] = cell(0, {});
    auto tie_result = select_system(tied, scheme);
    CHECK(tie_result.chosen == SystemKind::AN); // "AN" < "FF"
}

TEST_CASE("selection: scaling all mr weights rescales scores, ranking fixed") {
    CampaignSummary summary;
    Rng rng(5);
    for (SystemKind s : {SystemKind::KM, SystemKind::EM, SystemKind::DS}) {
        for (MrId mr : {MrId::MR1_1, MrId::MR3_1, MrId::MR5_1}) {
            int v = static_cast<int>(rng.next_below(20));
            summary.cells[s][mr] =
                cell(v, v > 0 ? std::initializer_list<std::pair<PatternKind, int>>{
                                    {PatternKind::Border, v}}
                              : std::initializer_list<std::pair<PatternKind, int>>{});
        }
    }
    SelectionScheme scheme;
    scheme.mr_weights = {{MrId::MR1_1, 0.6}, {MrId::MR3_1, 0.4}, {MrId::MR5_1, 0.9}};
    scheme.pattern_weights = {{PatternKind::Border, 0.5}};
    auto base = select_system(summary, scheme);

    double factor = 0.5;
    SelectionScheme scaled = scheme;
    for (auto& [mr, w] : scaled.mr_weights) w *= factor;
    auto after = select_system(summary, scaled);
    CHECK(after.ranking == base.ranking);
    CHECK(after.chosen == base.chosen);
    for (const auto& [s, score] : base.scores)
        CHECK(after.scores.at(s) == doctest::Approx(factor * score).epsilon(1e-12));
}

TEST_CASE("selection: all systems eliminated is an error with guidance") {
    CampaignSummary summary;
    summary.cells[SystemKind::KM][MrId::MR6] = cell(1, {{PatternKind::Border, 1}});
    SelectionScheme scheme;
    scheme.must_have = {MrId::MR6};
    CHECK_THROWS_WITH_AS(select_system(summary, scheme),
                         doctest::Contains("must-have"), EmptyCandidateError);
}

TEST_CASE("selection: a violated pattern without a weight is a config error") {
    std::map<MrId, CellSummary> row;
    row[MrId::MR1_1] = cell(2, {{PatternKind::Num, 2}});
    SelectionScheme scheme;
    scheme.mr_weights = {{MrId::MR1_1, 0.5}};
    scheme.pattern_weights = {{PatternKind::Border, 0.3}};
    CHECK_THROWS_AS(score_system(row, scheme), ConfigError);
}

TEST_CASE("selection: scheme validation") {
    SelectionScheme bad_weight;
    bad_weight.mr_weights = {{MrId::MR1_1, 1.0}};
    CHECK_THROWS_AS(bad_weight.validate(), ConfigError);

    SelectionScheme overlap;
    overlap.mr_weights = {{MrId::MR6, 0.5}};
    overlap.must_have = {MrId::MR6};
    CHECK_THROWS_AS(overlap.validate(), ConfigError);

    SelectionScheme bad_pattern;
    bad_pattern.pattern_weights = {{PatternKind::Border, 0.0}};
    CHECK_THROWS_AS(bad_pattern.validate(), ConfigError);
}

TEST_CASE("selection: inapplicable cells count as non-violations") {
    std::map<MrId, CellSummary> row;
    CellSummary na;
    na.applicable = false;
    row[MrId::MR1_2] = na;
    SelectionScheme scheme;
    scheme.mr_weights = {{MrId::MR1_2, 0.9}};
    scheme.pattern_weights = {{PatternKind::Border, 0.5}};
    CHECK(score_system(row, scheme) == 0.0);
}
