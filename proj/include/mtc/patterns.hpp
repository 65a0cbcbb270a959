#pragma once

#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "mtc/clustering.hpp"
#include "mtc/relations.hpp"

namespace mtc {

enum class PatternKind { None, Border, MergeAndSplit, Split, Noise, Num };

std::string_view pattern_name(PatternKind kind);
PatternKind parse_pattern(std::string_view name);

struct PatternThresholds {
    double merge_share = 0.2;     // fraction of a source cluster inside a merge
    double split_share = 0.2;     // fraction of a source cluster per split part
    double noise_dominance = 0.5; // share of reclustering that involves noise
};

struct PatternEvidence {
    std::vector<std::pair<int, int>> merged_sources; // source label pairs
    std::vector<int> split_sources;
    int noise_delta = 0; // mapped follow-up noise minus mapped source noise
    int source_clusters = 0;
    int followup_clusters = 0;
};

struct PatternLabel {
    PatternKind kind = PatternKind::None;
    PatternEvidence evidence;
};

struct RPResult; // harness.hpp

/// Decision cascade NUM > NOISE > MERGE_AND_SPLIT > SPLIT > BORDER over the
/// mapped-point contingency structure; NONE exactly when rp == 0.
PatternLabel classify_pattern(const MRCase& c, const ClusteringOutcome& source_outcome,
                              const ClusteringOutcome& followup_outcome,
                              const RPResult& rp_result,
                              const PatternThresholds& thresholds = {});

} // namespace mtc
