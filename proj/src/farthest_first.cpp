#include <cmath>
#include <limits>
#include <string>

#include "clusterers_internal.hpp"
#include "mtc/clusterers.hpp"
#include "mtc/rng.hpp"

namespace mtc {

ClusteringOutcome farthest_first(const Dataset& ds, int k, const InitSpec& init,
                                 const ClusterParams& params) {
    detail::check_k(k, ds.size());
    auto wc = detail::working_coords(ds, params.normalize);
    const std::size_t n = ds.size();

    std::size_t start;
    if (init.mode == InitSpec::Mode::ExplicitIds) {
        if (static_cast<int>(init.centroid_ids.size()) != k)
            throw ArgumentError("explicit initialization needs exactly " +
                                std::to_string(k) + " centroid ids, got " +
                                std::to_string(init.centroid_ids.size()));
        auto index = id_index(ds);
        auto it = index.find(init.centroid_ids.front());
        if (it == index.end())
            throw ArgumentError("centroid id " + std::to_string(init.centroid_ids.front()) +
                                " not present in the dataset");
        // The traversal start is the only free choice; the remaining centers
        // follow deterministically from the data.
        start = it->second;
    } else {
        start = Rng(init.seed).next_index(n);
    }

    FfModel model;
    model.parent.assign(n, -1);
    model.radius.assign(n, 0.0);
    model.traversal.reserve(n);
    model.traversal.push_back(start);

    std::vector<bool> labeled(n, false);
    labeled[start] = true;
    std::vector<double> dist_to_set(n, std::numeric_limits<double>::infinity());
    std::vector<int> nearest(n, static_cast<int>(start));
    for (std::size_t i = 0; i < n; ++i) {
        if (i == start) continue;
        dist_to_set[i] = std::sqrt(detail::sq_dist(wc.x[i], wc.x[start]));
    }

    for (std::size_t step = 1; step < n; ++step) {
        // Farthest unlabeled point; ties go to the lowest point id.
        bool have = false;
        std::size_t pick = 0;
        double best = -1.0;
        for (std::size_t pos : wc.id_order) {
            if (labeled[pos]) continue;
            if (!have || dist_to_set[pos] > best) {
                have = true;
                best = dist_to_set[pos];
                pick = pos;
            }
        }
        model.traversal.push_back(pick);
        model.parent[pick] = nearest[pick];
        model.radius[pick] = dist_to_set[pick];
        labeled[pick] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (labeled[i]) continue;
            double d = std::sqrt(detail::sq_dist(wc.x[i], wc.x[pick]));
            if (d < dist_to_set[i]) {
                dist_to_set[i] = d;
                nearest[i] = static_cast<int>(pick);
            }
        }
    }

    ClusteringOutcome out;
    out.assignments.assign(n, 0);
    std::vector<std::vector<double>> centroids;
    centroids.reserve(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c)
        centroids.push_back(ds.points[model.traversal[static_cast<std::size_t>(c)]].coords);
    for (std::size_t i = 0; i < n; ++i) {
        int best_c = 0;
        double best_d = detail::sq_dist(wc.x[i], wc.x[model.traversal[0]]);
        for (int c = 1; c < k; ++c) {
            double d = detail::sq_dist(wc.x[i], wc.x[model.traversal[static_cast<std::size_t>(c)]]);
            if (d < best_d) {
                best_d = d;
                best_c = c;
            }
        }
        out.assignments[i] = best_c;
    }
    out.centroids = std::move(centroids);
    out.ff = std::move(model);
    return out;
}

} // namespace mtc
