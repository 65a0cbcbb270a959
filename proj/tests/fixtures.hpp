#pragma once

// Label-vector fixtures for exercising alignment, RP and pattern
// classification without running any clusterer.

#include <initializer_list>
#include <utility>
#include <vector>

#include "mtc/harness.hpp"

namespace fixtures {

struct Fixture {
    mtc::MRCase c;
    mtc::ClusteringOutcome src;
    mtc::ClusteringOutcome fup;
};

inline Fixture make_fixture(const std::vector<int>& source_labels,
                            const std::vector<int>& followup_mapped_labels,
                            const std::vector<int>& added_labels = {},
                            mtc::ExpectationRule rule = mtc::ExpectationRule::SameAsSource,
                            mtc::MrId mr = mtc::MrId::MR1_1) {
    Fixture f;
    f.c.mr_id = mr;
    f.c.expectation = rule;
    f.c.source.dim = 1;
    f.c.followup.dim = 1;
    for (std::size_t i = 0; i < source_labels.size(); ++i) {
        f.c.source.points.push_back({static_cast<std::int64_t>(i), {0.0}});
        f.c.followup.points.push_back({static_cast<std::int64_t>(i), {0.0}});
        f.c.old_to_new[static_cast<std::int64_t>(i)] = static_cast<std::int64_t>(i);
    }
    std::int64_t next = static_cast<std::int64_t>(source_labels.size());
    for (std::size_t i = 0; i < added_labels.size(); ++i) {
        f.c.followup.points.push_back({next, {0.0}});
        f.c.added_ids.push_back(next);
        ++next;
    }
    f.src.assignments = source_labels;
    f.fup.assignments = followup_mapped_labels;
    f.fup.assignments.insert(f.fup.assignments.end(), added_labels.begin(),
                             added_labels.end());
    for (int a : f.src.assignments)
        if (a == mtc::kNoise) f.src.noise_count++;
    for (int a : f.fup.assignments)
        if (a == mtc::kNoise) f.fup.noise_count++;
    return f;
}

inline std::vector<int> labels(std::initializer_list<std::pair<int, int>> runs) {
    std::vector<int> out;
    for (auto [label, count] : runs)
        out.insert(out.end(), count, label);
    return out;
}

} // namespace fixtures
