#include <algorithm>
#include <numeric>

#include "clusterers_internal.hpp"
#include "mtc/clusterers.hpp"
#include "mtc/rng.hpp"

namespace mtc {

Linkage parse_linkage(std::string_view name) {
    if (name == "single") return Linkage::Single;
    if (name == "complete") return Linkage::Complete;
    if (name == "average") return Linkage::Average;
    throw ConfigError("unknown linkage '" + std::string(name) +
                      "' (expected single, complete or average)");
}

std::string_view linkage_name(Linkage linkage) {
    switch (linkage) {
    case Linkage::Single: return "single";
    case Linkage::Complete: return "complete";
    case Linkage::Average: return "average";
    }
    return "?";
}

int ClusteringOutcome::cluster_count() const {
    int max_label = -1;
    for (int a : assignments) max_label = std::max(max_label, a);
    return max_label + 1;
}

std::vector<std::vector<double>> cluster_means(const Dataset& ds,
                                               const std::vector<int>& assignments) {
    int k = 0;
    for (int a : assignments) k = std::max(k, a + 1);
    std::vector<std::vector<double>> means(k, std::vector<double>(ds.dim, 0.0));
    std::vector<int> counts(k, 0);

    std::vector<std::size_t> order(ds.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return ds.points[a].id < ds.points[b].id;
    });
    for (std::size_t pos : order) {
        int a = assignments[pos];
        if (a == kNoise) continue;
        counts[a] += 1;
        for (int j = 0; j < ds.dim; ++j) means[a][j] += ds.points[pos].coords[j];
    }
    for (int c = 0; c < k; ++c)
        if (counts[c] > 0)
            for (int j = 0; j < ds.dim; ++j) means[c][j] /= counts[c];
    return means;
}

namespace detail {

WorkingCoords working_coords(const Dataset& ds, bool normalize) {
    WorkingCoords wc;
    wc.x.reserve(ds.size());
    if (normalize) {
        auto [norm, params] = minmax_normalize(ds);
        for (const Point& p : norm.points) wc.x.push_back(p.coords);
        wc.params = std::move(params);
        wc.normalized = true;
    } else {
        for (const Point& p : ds.points) wc.x.push_back(p.coords);
    }
    wc.id_order.resize(ds.size());
    std::iota(wc.id_order.begin(), wc.id_order.end(), std::size_t{0});
    std::sort(wc.id_order.begin(), wc.id_order.end(), [&](std::size_t a, std::size_t b) {
        return ds.points[a].id < ds.points[b].id;
    });
    return wc;
}

std::vector<double> to_original(const std::vector<double>& coords,
                                const WorkingCoords& wc) {
    if (!wc.normalized) return coords;
    std::vector<double> out(coords.size());
    for (std::size_t j = 0; j < coords.size(); ++j)
        out[j] = coords[j] * (wc.params.max[j] - wc.params.min[j]) + wc.params.min[j];
    return out;
}

double sq_dist(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

namespace {

std::vector<int> assign_nearest(const WorkingCoords& wc,
                                const std::vector<std::vector<double>>& centroids) {
    std::vector<int> assign(wc.x.size());
    for (std::size_t i = 0; i < wc.x.size(); ++i) {
        int best = 0;
        double best_d = sq_dist(wc.x[i], centroids[0]);
        for (std::size_t c = 1; c < centroids.size(); ++c) {
            double d = sq_dist(wc.x[i], centroids[c]);
            if (d < best_d) {
                best_d = d;
                best = static_cast<int>(c);
            }
        }
        assign[i] = best;
    }
    return assign;
}

} // namespace

double total_sse(const WorkingCoords& wc, const std::vector<int>& assign,
                 const std::vector<std::vector<double>>& centroids) {
    double sse = 0.0;
    for (std::size_t pos : wc.id_order) sse += sq_dist(wc.x[pos], centroids[assign[pos]]);
    return sse;
}

LloydResult lloyd(const WorkingCoords& wc,
                  std::vector<std::vector<double>> centroids,
                  int max_iterations) {
    const std::size_t k = centroids.size();
    const std::size_t d = centroids.empty() ? 0 : centroids[0].size();

    LloydResult res;
    res.assign = assign_nearest(wc, centroids);
    res.sse_history.push_back(total_sse(wc, res.assign, centroids));
    while (true) {
        // Means accumulate in ascending-id order; empty clusters keep their
        // previous centroid.
        std::vector<std::vector<double>> sums(k, std::vector<double>(d, 0.0));
        std::vector<int> counts(k, 0);
        for (std::size_t pos : wc.id_order) {
            int a = res.assign[pos];
            counts[a] += 1;
            for (std::size_t j = 0; j < d; ++j) sums[a][j] += wc.x[pos][j];
        }
        for (std::size_t c = 0; c < k; ++c)
            if (counts[c] > 0)
                for (std::size_t j = 0; j < d; ++j) centroids[c][j] = sums[c][j] / counts[c];

        res.iterations += 1;
        std::vector<int> next = assign_nearest(wc, centroids);
        res.sse_history.push_back(total_sse(wc, next, centroids));
        bool stable = next == res.assign;
        res.assign = std::move(next);
        if (stable || res.iterations >= max_iterations) break;
    }
    res.centroids = std::move(centroids);
    return res;
}

std::vector<std::vector<double>> resolve_init(const Dataset& ds,
                                              const WorkingCoords& wc, int k,
                                              const InitSpec& init) {
    std::vector<std::vector<double>> centroids;
    if (init.mode == InitSpec::Mode::ExplicitIds) {
        if (static_cast<int>(init.centroid_ids.size()) != k)
            throw ArgumentError("explicit initialization needs exactly " +
                                std::to_string(k) + " centroid ids, got " +
                                std::to_string(init.centroid_ids.size()));
        auto index = id_index(ds);
        for (std::int64_t id : init.centroid_ids) {
            auto it = index.find(id);
            if (it == index.end())
                throw ArgumentError("centroid id " + std::to_string(id) +
                                    " not present in the dataset");
            centroids.push_back(wc.x[it->second]);
        }
    } else {
        Rng rng(init.seed);
        for (std::size_t pos : rng.sample_distinct(ds.size(), static_cast<std::size_t>(k)))
            centroids.push_back(wc.x[pos]);
    }
    return centroids;
}

} // namespace detail

ClusteringOutcome run_system(SystemKind system, const Dataset& ds,
                             const ClusterParams& params, const InitSpec& init,
                             std::optional<int> k_override) {
    int k = k_override ? *k_override : params.k.value_or(3);
    switch (system) {
    case SystemKind::KM:
        return kmeans(ds, k, init, params);
    case SystemKind::XM: {
        int hi = k, lo = std::max(1, k - 1);
        if (!k_override && params.k_min && params.k_max) {
            lo = *params.k_min;
            hi = *params.k_max;
        }
        return xmeans(ds, lo, hi, init, params);
    }
    case SystemKind::EM:
        return em_cluster(ds, params.k, params, init.seed);
    case SystemKind::AN:
        return agglomerative(ds, k, params.linkage, params);
    case SystemKind::FF:
        return farthest_first(ds, k, init, params);
    case SystemKind::DS:
        return dbscan(ds, params.eps, params.min_pts, params);
    }
    throw ArgumentError("unknown system kind");
}

} // namespace mtc
