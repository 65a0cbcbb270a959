#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mtc/common.hpp"
#include "mtc/dataset.hpp"

namespace mtc {

enum class Linkage { Single, Complete, Average };

Linkage parse_linkage(std::string_view name);
std::string_view linkage_name(Linkage linkage);

struct InitSpec {
    enum class Mode { SeededRandom, ExplicitIds };
    Mode mode = Mode::SeededRandom;
    std::vector<std::int64_t> centroid_ids; // explicit mode only
    std::uint64_t seed = 0;

    static InitSpec seeded(std::uint64_t seed) {
        InitSpec s;
        s.seed = seed;
        return s;
    }
    static InitSpec explicit_ids(std::vector<std::int64_t> ids) {
        InitSpec s;
        s.mode = Mode::ExplicitIds;
        s.centroid_ids = std::move(ids);
        return s;
    }
};

struct ClusterParams {
    std::optional<int> k;
    std::optional<int> k_min;
    std::optional<int> k_max;
    Linkage linkage = Linkage::Average;
    double eps = 0.1;
    int min_pts = 8;
    bool normalize = true;
    int max_iterations = 500;
    double em_tolerance = 1e-6;
    // Harness knob: initialize partitional systems from explicit random point
    // ids (identical across the source and follow-up executions).
    bool explicit_init = false;
};

struct KmModel {
    std::vector<double> sse_history; // total within-cluster SSE per iteration
};

struct XmModel {
    struct SplitDecision {
        int cluster;
        double parent_bic;
        double child_bic;
        bool accepted;
    };
    std::vector<SplitDecision> decisions;
    int chosen_k = 0;
};

struct EmModel {
    std::vector<double> weights;
    std::vector<std::vector<double>> means;     // working scale
    std::vector<std::vector<double>> variances; // per-attribute, working scale
    std::vector<std::vector<double>> responsibilities; // n x k
    std::vector<double> log_likelihood_history;
};

struct FfModel {
    std::vector<std::size_t> traversal; // dataset positions in visit order
    std::vector<int> parent;            // parent position per point; -1 for start
    std::vector<double> radius;         // distance to parent at selection time
};

struct ClusteringOutcome {
    std::vector<int> assignments; // cluster index or kNoise, per dataset position
    std::optional<std::vector<std::vector<double>>> centroids; // original space
    int iterations = 0;
    int noise_count = 0;

    std::optional<KmModel> km;
    std::optional<XmModel> xm;
    std::optional<EmModel> em;
    std::optional<FfModel> ff;

    int cluster_count() const;
};

/// Arithmetic mean of each cluster's members in original coordinates,
/// indexed by cluster label. The reference points for systems that do not
/// report centroids.
std::vector<std::vector<double>> cluster_means(const Dataset& ds,
                                               const std::vector<int>& assignments);

} // namespace mtc
