#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "clusterers_internal.hpp"
#include "mtc/clusterers.hpp"
#include "mtc/rng.hpp"

namespace mtc {

namespace detail {

double spherical_bic(const WorkingCoords& wc, const std::vector<std::size_t>& members,
                     const std::vector<int>& assign, int k) {
    const std::size_t n = members.size();
    const std::size_t d = wc.x[members[0]].size();

    std::vector<std::vector<double>> sums(k, std::vector<double>(d, 0.0));
    std::vector<int> counts(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
        int a = assign[i];
        counts[a] += 1;
        for (std::size_t j = 0; j < d; ++j) sums[a][j] += wc.x[members[i]][j];
    }
    std::vector<std::vector<double>> means(k);
    for (int c = 0; c < k; ++c) {
        means[c] = sums[c];
        if (counts[c] > 0)
            for (double& v : means[c]) v /= counts[c];
    }

    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) ss += sq_dist(wc.x[members[i]], means[assign[i]]);
    // Pooled per-coordinate MLE variance of identical spherical Gaussians.
    double denom = static_cast<double>(d) * static_cast<double>(n > static_cast<std::size_t>(k) ? n - k : 1);
    double var = std::max(ss / denom, 1e-30);

    double ll = 0.0;
    for (int c = 0; c < k; ++c)
        if (counts[c] > 0)
            ll += counts[c] * std::log(static_cast<double>(counts[c]) / static_cast<double>(n));
    ll -= 0.5 * static_cast<double>(n) * static_cast<double>(d) *
          std::log(2.0 * std::numbers::pi * var);
    ll -= 0.5 * static_cast<double>(d) *
          static_cast<double>(n > static_cast<std::size_t>(k) ? n - k : 0);

    double p = static_cast<double>(k) * (static_cast<double>(d) + 1.0);
    return ll - 0.5 * p * std::log(static_cast<double>(n));
}

} // namespace detail

ClusteringOutcome xmeans(const Dataset& ds, int k_min, int k_max,
                         const InitSpec& init, const ClusterParams& params) {
    if (k_min < 1 || k_min > k_max || static_cast<std::size_t>(k_max) > ds.size())
        throw ArgumentError("x-means range [" + std::to_string(k_min) + ", " +
                            std::to_string(k_max) + "] invalid for " +
                            std::to_string(ds.size()) + " points");
    using namespace detail;
    auto wc = working_coords(ds, params.normalize);
    LloydResult current = lloyd(wc, resolve_init(ds, wc, k_min, init), params.max_iterations);
    int iterations = current.iterations;

    XmModel model;
    Rng split_rng = Rng(init.seed).split("xm-split");
    int round = 0;
    while (static_cast<int>(current.centroids.size()) < k_max) {
        const int k = static_cast<int>(current.centroids.size());
        // Members per cluster in ascending-id order, so split candidates do
        // not depend on the dataset's storage order.
        std::vector<std::vector<std::size_t>> members(k);
        for (std::size_t pos : wc.id_order) members[current.assign[pos]].push_back(pos);

        struct Candidate {
            double gain;
            int cluster;
            std::vector<int> child_assign;
            std::vector<std::vector<double>> child_centroids;
        };
        std::vector<Candidate> candidates;
        for (int c = 0; c < k; ++c) {
            if (members[c].size() < 2) continue;
            Rng child_rng = split_rng.split(derive_seed(static_cast<std::uint64_t>(round),
                                                        static_cast<std::uint64_t>(c)));
            auto picks = child_rng.sample_distinct(members[c].size(), 2);
            WorkingCoords sub;
            sub.x.reserve(members[c].size());
            for (std::size_t pos : members[c]) sub.x.push_back(wc.x[pos]);
            sub.id_order.resize(sub.x.size());
            std::iota(sub.id_order.begin(), sub.id_order.end(), std::size_t{0});
            LloydResult child = lloyd(sub, {sub.x[picks[0]], sub.x[picks[1]]},
                                      params.max_iterations);

            double parent_bic = spherical_bic(wc, members[c],
                                              std::vector<int>(members[c].size(), 0), 1);
            double child_bic = spherical_bic(wc, members[c], child.assign, 2);
            bool accepted = child_bic > parent_bic;
            model.decisions.push_back({c, parent_bic, child_bic, accepted});
            if (accepted)
                candidates.push_back({child_bic - parent_bic, c,
                                      std::move(child.assign), std::move(child.centroids)});
        }
        if (candidates.empty()) break;
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](const Candidate& a, const Candidate& b) {
                             if (a.gain != b.gain) return a.gain > b.gain;
                             return a.cluster < b.cluster;
                         });

        std::vector<std::vector<double>> centroids = current.centroids;
        int room = k_max - k;
        for (const Candidate& cand : candidates) {
            if (room == 0) break;
            centroids[cand.cluster] = cand.child_centroids[0];
            centroids.push_back(cand.child_centroids[1]);
            --room;
        }
        current = lloyd(wc, std::move(centroids), params.max_iterations);
        iterations += current.iterations;
        ++round;
    }

    ClusteringOutcome out = finish_lloyd(current, wc);
    out.iterations = iterations;
    model.chosen_k = out.cluster_count();
    out.xm = std::move(model);
    return out;
}

} // namespace mtc
