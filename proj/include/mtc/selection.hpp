#pragma once

#include <map>
#include <set>
#include <vector>

#include "mtc/harness.hpp"
#include "mtc/patterns.hpp"

namespace mtc {

struct SelectionScheme {
    // Importance of each nice-to-have relation, strictly inside (0, 1).
    std::map<MrId, double> mr_weights;
    // Severity of each violation pattern, strictly inside (0, 1).
    std::map<PatternKind, double> pattern_weights;
    // Relations whose violation eliminates a system outright.
    std::set<MrId> must_have;

    void validate() const;
};

struct ScoreTerm {
    MrId mr;
    double mr_weight = 0.0;
    double pattern_weight = 0.0;
    PatternKind pattern = PatternKind::None;
    bool violated = false;
};

struct SelectionResult {
    std::vector<SystemKind> eliminated;
    std::map<SystemKind, double> scores; // survivors only
    std::map<SystemKind, std::vector<ScoreTerm>> breakdown;
    std::vector<SystemKind> ranking; // ascending score, ties by name
    SystemKind chosen;
};

/// S = sum of w1_j * w2_j * x_j over nice-to-have relations; x_j is 1 when
/// the system violated MR_j at least once, and w2_j is the weight of the
/// most severe pattern observed for that relation.
double score_system(const std::map<MrId, CellSummary>& row, const SelectionScheme& scheme,
                    std::vector<ScoreTerm>* terms = nullptr);

/// Must-have elimination, scoring, and ascending ranking. Throws
/// EmptyCandidateError when every system is eliminated.
SelectionResult select_system(const CampaignSummary& summary,
                              const SelectionScheme& scheme);

} // namespace mtc
