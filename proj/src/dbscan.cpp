#include <cmath>
#include <deque>
#include <string>

#include "clusterers_internal.hpp"
#include "mtc/clusterers.hpp"

namespace mtc {

ClusteringOutcome dbscan(const Dataset& ds, double eps, int min_pts,
                         const ClusterParams& params) {
    if (!(eps > 0.0)) throw ArgumentError("eps must be > 0");
    if (min_pts < 1) throw ArgumentError("min_pts must be >= 1");
    auto wc = detail::working_coords(ds, params.normalize);
    const std::size_t n = ds.size();
    const double eps_sq = eps * eps;

    // Neighborhoods include the point itself, listed in ascending id.
    std::vector<std::vector<std::size_t>> neighbors(n);
    for (std::size_t a : wc.id_order)
        for (std::size_t b : wc.id_order)
            if (detail::sq_dist(wc.x[a], wc.x[b]) <= eps_sq) neighbors[a].push_back(b);

    std::vector<bool> is_core(n, false);
    for (std::size_t i = 0; i < n; ++i)
        is_core[i] = neighbors[i].size() >= static_cast<std::size_t>(min_pts);

    ClusteringOutcome out;
    out.assignments.assign(n, kNoise);
    int next_label = 0;
    // Seeds scan in ascending point id, which fixes the cluster that claims a
    // border point reachable from more than one cluster.
    for (std::size_t seed : wc.id_order) {
        if (!is_core[seed] || out.assignments[seed] != kNoise) continue;
        int label = next_label++;
        std::deque<std::size_t> queue{seed};
        out.assignments[seed] = label;
        while (!queue.empty()) {
            std::size_t p = queue.front();
            queue.pop_front();
            if (!is_core[p]) continue;
            for (std::size_t q : neighbors[p]) {
                if (out.assignments[q] != kNoise) continue;
                out.assignments[q] = label;
                queue.push_back(q);
            }
        }
    }

    for (int a : out.assignments)
        if (a == kNoise) out.noise_count += 1;
    return out;
}

} // namespace mtc
