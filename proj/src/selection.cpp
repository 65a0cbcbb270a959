#include "mtc/selection.hpp"

#include <algorithm>
#include <string>

namespace mtc {

void SelectionScheme::validate() const {
    for (const auto& [mr, w] : mr_weights) {
        if (!(w > 0.0 && w < 1.0))
            throw ConfigError("mr weight for " + std::string(mr_name(mr)) +
                              " must lie strictly inside (0, 1)");
        if (must_have.count(mr))
            throw ConfigError(std::string(mr_name(mr)) +
                              " cannot be both must-have and nice-to-have");
    }
    for (const auto& [kind, w] : pattern_weights)
        if (!(w > 0.0 && w < 1.0))
            throw ConfigError("pattern weight for " + std::string(pattern_name(kind)) +
                              " must lie strictly inside (0, 1)");
}

double score_system(const std::map<MrId, CellSummary>& row, const SelectionScheme& scheme,
                    std::vector<ScoreTerm>* terms) {
    double score = 0.0;
    for (const auto& [mr, w1] : scheme.mr_weights) {
        ScoreTerm term;
        term.mr = mr;
        term.mr_weight = w1;
        auto it = row.find(mr);
        // Applicability gaps and missing cells count as non-violations.
        bool violated = it != row.end() && it->second.applicable &&
                        it->second.violations > 0;
        term.violated = violated;
        if (violated) {
            double best_w2 = -1.0;
            for (const auto& [kind, count] : it->second.pattern_histogram) {
                if (count == 0) continue;
                auto wit = scheme.pattern_weights.find(kind);
                if (wit == scheme.pattern_weights.end())
                    throw ConfigError("selection scheme has no weight for pattern " +
                                      std::string(pattern_name(kind)));
                if (wit->second > best_w2) {
                    best_w2 = wit->second;
                    term.pattern = kind;
                }
            }
            term.pattern_weight = best_w2;
            score += w1 * best_w2;
        }
        if (terms) terms->push_back(term);
    }
    return score;
}

SelectionResult select_system(const CampaignSummary& summary,
                              const SelectionScheme& scheme) {
    scheme.validate();
    SelectionResult result;
    for (const auto& [system, row] : summary.cells) {
        bool eliminated = false;
        for (MrId mr : scheme.must_have) {
            auto it = row.find(mr);
            if (it != row.end() && it->second.applicable && it->second.violations > 0) {
                eliminated = true;
                break;
            }
        }
        if (eliminated) {
            result.eliminated.push_back(system);
            continue;
        }
        std::vector<ScoreTerm> terms;
        result.scores[system] = score_system(row, scheme, &terms);
        result.breakdown[system] = std::move(terms);
    }
    if (result.scores.empty())
        throw EmptyCandidateError(
            "every candidate system violates a must-have relation; relax the "
            "must-have set to proceed");

    for (const auto& [system, score] : result.scores) result.ranking.push_back(system);
    std::sort(result.ranking.begin(), result.ranking.end(),
              [&](SystemKind a, SystemKind b) {
                  double sa = result.scores.at(a), sb = result.scores.at(b);
                  if (sa != sb) return sa < sb;
                  return system_name(a) < system_name(b);
              });
    result.chosen = result.ranking.front();
    return result;
}

} // namespace mtc
