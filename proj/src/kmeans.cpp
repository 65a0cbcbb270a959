#include <string>

#include "clusterers_internal.hpp"
#include "mtc/clusterers.hpp"

namespace mtc {

namespace detail {

void check_k(int k, std::size_t n) {
    if (k < 1 || static_cast<std::size_t>(k) > n)
        throw ArgumentError("k must lie in [1, " + std::to_string(n) + "], got " +
                            std::to_string(k));
}

// Drops empty clusters, compacting labels in centroid-index order.
ClusteringOutcome finish_lloyd(const LloydResult& res, const WorkingCoords& wc) {
    const std::size_t k = res.centroids.size();
    std::vector<int> remap(k, -1);
    std::vector<int> counts(k, 0);
    for (int a : res.assign) counts[a] += 1;
    int next = 0;
    for (std::size_t c = 0; c < k; ++c)
        if (counts[c] > 0) remap[c] = next++;

    ClusteringOutcome out;
    out.assignments.reserve(res.assign.size());
    for (int a : res.assign) out.assignments.push_back(remap[a]);
    std::vector<std::vector<double>> centroids;
    for (std::size_t c = 0; c < k; ++c)
        if (counts[c] > 0) centroids.push_back(to_original(res.centroids[c], wc));
    out.centroids = std::move(centroids);
    out.iterations = res.iterations;
    out.km = KmModel{res.sse_history};
    return out;
}

} // namespace detail

ClusteringOutcome kmeans(const Dataset& ds, int k, const InitSpec& init,
                         const ClusterParams& params) {
    detail::check_k(k, ds.size());
    auto wc = detail::working_coords(ds, params.normalize);
    auto res = detail::lloyd(wc, detail::resolve_init(ds, wc, k, init),
                             params.max_iterations);
    return detail::finish_lloyd(res, wc);
}

} // namespace mtc
