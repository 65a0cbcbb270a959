#include <algorithm>
#include <cmath>
#include <string>

#include "clusterers_internal.hpp"
#include "mtc/clusterers.hpp"

namespace mtc {

ClusteringOutcome agglomerative(const Dataset& ds, int k, Linkage linkage,
                                const ClusterParams& params) {
    detail::check_k(k, ds.size());
    auto wc = detail::working_coords(ds, params.normalize);
    const std::size_t n = ds.size();

    // Active clusters ordered by their smallest member id. All distances and
    // scans run over this id-canonical order, so the merge sequence (and the
    // final partition) does not depend on the dataset's storage order.
    struct Cluster {
        std::int64_t smallest_id;
        int size;
        std::vector<std::size_t> members; // dataset positions
    };
    std::vector<Cluster> clusters;
    clusters.reserve(n);
    for (std::size_t pos : wc.id_order)
        clusters.push_back({ds.points[pos].id, 1, {pos}});

    std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            double d = std::sqrt(detail::sq_dist(wc.x[clusters[a].members[0]],
                                                 wc.x[clusters[b].members[0]]));
            dist[a][b] = dist[b][a] = d;
        }

    while (static_cast<int>(clusters.size()) > k) {
        std::size_t bi = 0, bj = 1;
        double best = dist[0][1];
        for (std::size_t i = 0; i < clusters.size(); ++i)
            for (std::size_t j = i + 1; j < clusters.size(); ++j)
                if (dist[i][j] < best) {
                    best = dist[i][j];
                    bi = i;
                    bj = j;
                }

        // Lance-Williams updates for the merged cluster.
        const int ni = clusters[bi].size, nj = clusters[bj].size;
        for (std::size_t t = 0; t < clusters.size(); ++t) {
            if (t == bi || t == bj) continue;
            double d = 0.0;
            switch (linkage) {
            case Linkage::Single: d = std::min(dist[bi][t], dist[bj][t]); break;
            case Linkage::Complete: d = std::max(dist[bi][t], dist[bj][t]); break;
            case Linkage::Average:
                d = (ni * dist[bi][t] + nj * dist[bj][t]) / static_cast<double>(ni + nj);
                break;
            }
            dist[bi][t] = dist[t][bi] = d;
        }
        clusters[bi].size += clusters[bj].size;
        clusters[bi].members.insert(clusters[bi].members.end(),
                                    clusters[bj].members.begin(),
                                    clusters[bj].members.end());
        clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(bj));
        for (auto& row : dist) row.erase(row.begin() + static_cast<std::ptrdiff_t>(bj));
        dist.erase(dist.begin() + static_cast<std::ptrdiff_t>(bj));
    }

    ClusteringOutcome out;
    out.assignments.assign(n, 0);
    for (std::size_t c = 0; c < clusters.size(); ++c)
        for (std::size_t pos : clusters[c].members)
            out.assignments[pos] = static_cast<int>(c);
    return out;
}

} // namespace mtc
