#pragma once

#include "mtc/clustering.hpp"

namespace mtc {

/// Lloyd's algorithm. Assignment ties break toward the lowest centroid
/// index; an empty cluster keeps its previous centroid; empty clusters are
/// dropped from the final result with labels compacted.
ClusteringOutcome kmeans(const Dataset& ds, int k, const InitSpec& init,
                         const ClusterParams& params);

/// k-means at k_min followed by BIC-guided 2-way splits up to k_max, with a
/// full k-means refinement at the accepted k.
ClusteringOutcome xmeans(const Dataset& ds, int k_min, int k_max,
                         const InitSpec& init, const ClusterParams& params);

/// Gaussian mixture with per-attribute (diagonal) variances. Initialized
/// from the best of 10 seeded k-means runs; when k is absent the cluster
/// count maximizing BIC over [1, 6] is used.
ClusteringOutcome em_cluster(const Dataset& ds, std::optional<int> k,
                             const ClusterParams& params, std::uint64_t seed);

/// Bottom-up merging under the given linkage, cut at exactly k clusters.
/// Merge ties break toward the pair with the lowest smallest member ids,
/// which makes the result independent of the input order.
ClusteringOutcome agglomerative(const Dataset& ds, int k, Linkage linkage,
                                const ClusterParams& params);

/// Farthest-first traversal; the first k visited points become centers.
ClusteringOutcome farthest_first(const Dataset& ds, int k, const InitSpec& init,
                                 const ClusterParams& params);

/// Density clustering; a core point has >= min_pts neighbors within eps
/// (itself included) and clusters are discovered in ascending point id.
ClusteringOutcome dbscan(const Dataset& ds, double eps, int min_pts,
                         const ClusterParams& params);

/// Dispatch by system kind using the parameter conventions of the harness.
/// k_override, when set, replaces params.k for the partitional systems and
/// derives x-means' range as [k-1, k].
ClusteringOutcome run_system(SystemKind system, const Dataset& ds,
                             const ClusterParams& params, const InitSpec& init,
                             std::optional<int> k_override = std::nullopt);

} // namespace mtc
