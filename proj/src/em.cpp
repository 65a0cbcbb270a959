#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "clusterers_internal.hpp"
#include "mtc/clusterers.hpp"
#include "mtc/rng.hpp"

namespace mtc {

namespace {

using detail::WorkingCoords;

struct EmFit {
    EmModel model;
    std::vector<int> assignments;
    int iterations = 0;
    double log_likelihood = -std::numeric_limits<double>::infinity();
    double bic = -std::numeric_limits<double>::infinity();
};

// Best of 10 seeded k-means runs by total squared error.
detail::LloydResult best_kmeans_init(const WorkingCoords& wc, int k,
                                     int max_iterations, Rng seed_rng) {
    detail::LloydResult best;
    double best_sse = std::numeric_limits<double>::infinity();
    for (int run = 0; run < 10; ++run) {
        Rng rng = seed_rng.split(static_cast<std::uint64_t>(run));
        std::vector<std::vector<double>> init;
        for (std::size_t pos : rng.sample_distinct(wc.x.size(), static_cast<std::size_t>(k)))
            init.push_back(wc.x[pos]);
        detail::LloydResult res = detail::lloyd(wc, std::move(init), max_iterations);
        double sse = res.sse_history.back();
        if (sse < best_sse) {
            best_sse = sse;
            best = std::move(res);
        }
    }
    return best;
}

EmFit fit_em(const WorkingCoords& wc, int k, const ClusterParams& params,
             std::uint64_t seed) {
    const std::size_t n = wc.x.size();
    const std::size_t d = wc.x[0].size();

    // Variance floor: 1e-6 of the squared attribute range on the working
    // scale, guarding duplicate points.
    std::vector<double> floor_var(d);
    for (std::size_t j = 0; j < d; ++j) {
        double lo = wc.x[wc.id_order[0]][j], hi = lo;
        for (std::size_t i = 0; i < n; ++i) {
            lo = std::min(lo, wc.x[i][j]);
            hi = std::max(hi, wc.x[i][j]);
        }
        double range = hi - lo;
        floor_var[j] = std::max(1e-6 * range * range, 1e-12);
    }

    auto init = best_kmeans_init(wc, k, params.max_iterations,
                                 Rng(seed).split("em-init"));

    EmFit fit;
    EmModel& m = fit.model;
    m.weights.assign(k, 0.0);
    m.means.assign(k, std::vector<double>(d, 0.0));
    m.variances.assign(k, std::vector<double>(d, 0.0));
    {
        std::vector<int> counts(k, 0);
        for (std::size_t pos : wc.id_order) counts[init.assign[pos]] += 1;
        for (int c = 0; c < k; ++c) {
            m.weights[c] = std::max(counts[c], 1) / static_cast<double>(n);
            m.means[c] = init.centroids[c];
        }
        double wsum = 0.0;
        for (double w : m.weights) wsum += w;
        for (double& w : m.weights) w /= wsum;
        for (std::size_t pos : wc.id_order) {
            int c = init.assign[pos];
            for (std::size_t j = 0; j < d; ++j) {
                double dev = wc.x[pos][j] - m.means[c][j];
                m.variances[c][j] += dev * dev;
            }
        }
        for (int c = 0; c < k; ++c)
            for (std::size_t j = 0; j < d; ++j) {
                if (counts[c] > 0) m.variances[c][j] /= counts[c];
                m.variances[c][j] = std::max(m.variances[c][j], floor_var[j]);
            }
    }

    m.responsibilities.assign(n, std::vector<double>(k, 0.0));
    std::vector<double> log_w(k), log_norm(k);
    double prev_ll = -std::numeric_limits<double>::infinity();
    while (fit.iterations < params.max_iterations) {
        // E step in log space.
        for (int c = 0; c < k; ++c) {
            log_w[c] = std::log(m.weights[c]);
            double s = 0.0;
            for (std::size_t j = 0; j < d; ++j)
                s += std::log(2.0 * std::numbers::pi * m.variances[c][j]);
            log_norm[c] = -0.5 * s;
        }
        double ll = 0.0;
        for (std::size_t idx = 0; idx < n; ++idx) {
            std::size_t pos = wc.id_order[idx];
            double best = -std::numeric_limits<double>::infinity();
            std::vector<double>& r = m.responsibilities[pos];
            for (int c = 0; c < k; ++c) {
                double e = 0.0;
                for (std::size_t j = 0; j < d; ++j) {
                    double dev = wc.x[pos][j] - m.means[c][j];
                    e += dev * dev / m.variances[c][j];
                }
                r[c] = log_w[c] + log_norm[c] - 0.5 * e;
                best = std::max(best, r[c]);
            }
            double sum = 0.0;
            for (int c = 0; c < k; ++c) sum += std::exp(r[c] - best);
            ll += best + std::log(sum);
            for (int c = 0; c < k; ++c) r[c] = std::exp(r[c] - best) / sum;
        }
        m.log_likelihood_history.push_back(ll);
        fit.iterations += 1;
        fit.log_likelihood = ll;
        if (ll - prev_ll < params.em_tolerance && fit.iterations > 1) break;
        prev_ll = ll;

        // M step.
        for (int c = 0; c < k; ++c) {
            double rsum = 0.0;
            std::vector<double> mean(d, 0.0);
            for (std::size_t pos : wc.id_order) {
                double r = m.responsibilities[pos][c];
                rsum += r;
                for (std::size_t j = 0; j < d; ++j) mean[j] += r * wc.x[pos][j];
            }
            if (rsum > 0.0)
                for (double& v : mean) v /= rsum;
            std::vector<double> var(d, 0.0);
            for (std::size_t pos : wc.id_order) {
                double r = m.responsibilities[pos][c];
                for (std::size_t j = 0; j < d; ++j) {
                    double dev = wc.x[pos][j] - mean[j];
                    var[j] += r * dev * dev;
                }
            }
            for (std::size_t j = 0; j < d; ++j) {
                if (rsum > 0.0) var[j] /= rsum;
                var[j] = std::max(var[j], floor_var[j]);
            }
            m.weights[c] = rsum / static_cast<double>(n);
            m.means[c] = std::move(mean);
            m.variances[c] = std::move(var);
        }
    }

    fit.assignments.resize(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
        const std::vector<double>& r = m.responsibilities[pos];
        int best = 0;
        for (int c = 1; c < k; ++c)
            if (r[c] > r[best]) best = c;
        fit.assignments[pos] = best;
    }

    // Diagonal-GMM BIC: k-1 weights, k*d means, k*d variances.
    double p = static_cast<double>(k) * (2.0 * static_cast<double>(d) + 1.0) - 1.0;
    fit.bic = fit.log_likelihood - 0.5 * p * std::log(static_cast<double>(n));
    return fit;
}

} // namespace

ClusteringOutcome em_cluster(const Dataset& ds, std::optional<int> k,
                             const ClusterParams& params, std::uint64_t seed) {
    if (ds.points.empty()) throw ArgumentError("cannot cluster an empty dataset");
    if (k) detail::check_k(*k, ds.size());
    auto wc = detail::working_coords(ds, params.normalize);

    EmFit fit;
    if (k) {
        fit = fit_em(wc, *k, params, seed);
    } else {
        // No cluster count given: sweep [1, 6] and keep the best BIC.
        int k_cap = static_cast<int>(std::min<std::size_t>(6, ds.size()));
        bool first = true;
        for (int kk = 1; kk <= k_cap; ++kk) {
            EmFit cand = fit_em(wc, kk, params, derive_seed(seed, kk));
            if (first || cand.bic > fit.bic) {
                fit = std::move(cand);
                first = false;
            }
        }
    }

    // Components that claim no point are dropped from the reported clusters;
    // the mixture model itself keeps all of them.
    int k_fit = static_cast<int>(fit.model.weights.size());
    std::vector<int> counts(k_fit, 0);
    for (int a : fit.assignments) counts[a] += 1;
    std::vector<int> remap(k_fit, -1);
    int next = 0;
    for (int c = 0; c < k_fit; ++c)
        if (counts[c] > 0) remap[c] = next++;

    ClusteringOutcome out;
    out.assignments.reserve(fit.assignments.size());
    for (int a : fit.assignments) out.assignments.push_back(remap[a]);
    out.iterations = fit.iterations;
    std::vector<std::vector<double>> centroids;
    for (int c = 0; c < k_fit; ++c)
        if (counts[c] > 0)
            centroids.push_back(detail::to_original(fit.model.means[c], wc));
    out.centroids = std::move(centroids);
    out.em = std::move(fit.model);
    return out;
}

} // namespace mtc
