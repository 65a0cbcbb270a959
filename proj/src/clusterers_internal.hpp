#pragma once

#include <cstdint>
#include <vector>

#include "mtc/clustering.hpp"
#include "mtc/dataset.hpp"

namespace mtc::detail {

// Coordinates the distance computations run on, plus what is needed to map
// centroids back to the original space.
struct WorkingCoords {
    std::vector<std::vector<double>> x; // per dataset position
    NormalizationParams params;
    bool normalized = false;
    std::vector<std::size_t> id_order; // positions sorted by point id
};

WorkingCoords working_coords(const Dataset& ds, bool normalize);

std::vector<double> to_original(const std::vector<double>& coords,
                                const WorkingCoords& wc);

double sq_dist(const std::vector<double>& a, const std::vector<double>& b);

struct LloydResult {
    std::vector<int> assign;
    std::vector<std::vector<double>> centroids;
    int iterations = 0;
    std::vector<double> sse_history;
};

// Reductions iterate points in ascending-id order so that the result is
// independent of the dataset's storage order.
LloydResult lloyd(const WorkingCoords& wc,
                  std::vector<std::vector<double>> centroids,
                  int max_iterations);

// Resolves an InitSpec to k initial centroids (copies of data points).
std::vector<std::vector<double>> resolve_init(const Dataset& ds,
                                              const WorkingCoords& wc, int k,
                                              const InitSpec& init);

double total_sse(const WorkingCoords& wc, const std::vector<int>& assign,
                 const std::vector<std::vector<double>>& centroids);

void check_k(int k, std::size_t n);

ClusteringOutcome finish_lloyd(const LloydResult& res, const WorkingCoords& wc);

// Spherical-Gaussian BIC of a partition of the given positions; larger is
// better. Free parameter count is k * (d + 1).
double spherical_bic(const WorkingCoords& wc, const std::vector<std::size_t>& members,
                     const std::vector<int>& assign, int k);

} // namespace mtc::detail
