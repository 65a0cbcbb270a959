#pragma once

#include <utility>
#include <vector>

#include "mtc/harness.hpp"

namespace mtc::detail_rp {

// Per-mapped-point (source, follow-up) labels plus the noise-free
// contingency matrix.
struct MappedPairs {
    std::vector<std::pair<int, int>> labels;
    std::vector<std::vector<int>> contingency;
    int source_k = 0;
    int followup_k = 0;
};

MappedPairs mapped_pairs(const MRCase& c, const ClusteringOutcome& src,
                         const ClusteringOutcome& fup);

struct MappedEval {
    int d_old = 0;
    int noise_flips = 0;       // mapped points flipping between noise and a cluster
    int mapped_src_noise = 0;
    int mapped_fup_noise = 0;
};

MappedEval evaluate_mapped(const std::vector<std::pair<int, int>>& labels,
                           const LabelAlignment& alignment, const RpOptions& options);

} // namespace mtc::detail_rp
