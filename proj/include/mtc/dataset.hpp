#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mtc/common.hpp"

namespace mtc {

struct Point {
    std::int64_t id = 0;
    std::vector<double> coords;
};

/// Ordered point collection; point order is significant and ids are unique.
struct Dataset {
    std::vector<Point> points;
    int dim = 0;

    std::size_t size() const { return points.size(); }
    std::int64_t max_id() const;
};

/// id -> position lookup for a dataset.
std::unordered_map<std::int64_t, std::size_t> id_index(const Dataset& ds);

struct BlobConfig {
    int n_samples = 100;
    int centers = 3;
    int n_features = 2;
    double cluster_std = 0.5;
    double center_box_min = 0.0;
    double center_box_max = 10.0;
    std::uint64_t seed = 0;
};

struct NormalizationParams {
    std::vector<double> min;
    std::vector<double> max;
};

/// Isotropic Gaussian blobs around uniformly drawn, well-separated centers.
/// Points are divided as equally as possible among the centers and carry
/// sequential ids; the second element holds the true label of each point.
/// Pure function of the config, including its seed.
std::pair<Dataset, std::vector<int>> generate_blobs(const BlobConfig& config);

/// Per-attribute map onto [0,1]; a constant attribute maps to 0.
std::pair<Dataset, NormalizationParams> minmax_normalize(const Dataset& ds);

Dataset denormalize(const Dataset& ds, const NormalizationParams& params);

/// CSV with header `id,x0,...,x{d-1}[,label]`, 17 significant digits.
void write_dataset_csv(const Dataset& ds, const std::filesystem::path& path,
                       const std::vector<int>* labels = nullptr);

std::pair<Dataset, std::optional<std::vector<int>>>
read_dataset_csv(const std::filesystem::path& path);

} // namespace mtc
