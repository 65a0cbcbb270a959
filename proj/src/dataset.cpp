#include "mtc/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "mtc/rng.hpp"

namespace mtc {

std::int64_t Dataset::max_id() const {
    std::int64_t m = -1;
    for (const Point& p : points) m = std::max(m, p.id);
    return m;
}

std::unordered_map<std::int64_t, std::size_t> id_index(const Dataset& ds) {
    std::unordered_map<std::int64_t, std::size_t> index;
    index.reserve(ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) index.emplace(ds.points[i].id, i);
    return index;
}

namespace {

void validate(const BlobConfig& c) {
    if (c.centers < 1)
        throw ConfigError("centers must be >= 1, got " + std::to_string(c.centers));
    if (c.n_features < 1)
        throw ConfigError("n_features must be >= 1, got " + std::to_string(c.n_features));
    if (c.n_samples < c.centers)
        throw ConfigError("n_samples (" + std::to_string(c.n_samples) +
                          ") must be >= centers (" + std::to_string(c.centers) + ")");
    if (!(c.cluster_std >= 0.0))
        throw ConfigError("cluster_std must be >= 0, got " + std::to_string(c.cluster_std));
    if (!(c.center_box_min < c.center_box_max))
        throw ConfigError("center_box must be a non-empty interval");
}

double sq_dist(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

} // namespace

std::pair<Dataset, std::vector<int>> generate_blobs(const BlobConfig& config) {
    validate(config);
    Rng rng(config.seed);
    Rng center_rng = rng.split("centers");
    Rng point_rng = rng.split("points");

    const int k = config.centers;
    const int d = config.n_features;
    // Keep source clusters well separated: reject center sets with any pair
    // closer than 6 * cluster_std.
    const double min_sep_sq = 36.0 * config.cluster_std * config.cluster_std;
    std::vector<std::vector<double>> centers;
    constexpr int kMaxAttempts = 10000;
    for (int attempt = 0;; ++attempt) {
        if (attempt >= kMaxAttempts)
            throw ConfigError("could not place " + std::to_string(k) +
                              " centers with pairwise separation >= 6*cluster_std "
                              "inside the center box");
        centers.clear();
        for (int c = 0; c < k; ++c) {
            std::vector<double> center(d);
            for (int j = 0; j < d; ++j)
                center[j] = center_rng.next_uniform(config.center_box_min,
                                                    config.center_box_max);
            centers.push_back(std::move(center));
        }
        bool ok = true;
        for (int a = 0; a < k && ok; ++a)
            for (int b = a + 1; b < k && ok; ++b)
                if (sq_dist(centers[a], centers[b]) < min_sep_sq) ok = false;
        if (ok) break;
    }

    // n_samples divided as equally as possible: the first n % k groups get
    // one extra point.
    std::vector<int> sizes(k, config.n_samples / k);
    for (int c = 0; c < config.n_samples % k; ++c) sizes[c] += 1;

    Dataset ds;
    ds.dim = d;
    std::vector<int> labels;
    labels.reserve(config.n_samples);
    std::int64_t next_id = 0;
    for (int c = 0; c < k; ++c) {
        for (int i = 0; i < sizes[c]; ++i) {
            Point p;
            p.id = next_id++;
            p.coords.resize(d);
            for (int j = 0; j < d; ++j)
                p.coords[j] = centers[c][j] + config.cluster_std * point_rng.next_gaussian();
            ds.points.push_back(std::move(p));
            labels.push_back(c);
        }
    }
    return {std::move(ds), std::move(labels)};
}

std::pair<Dataset, NormalizationParams> minmax_normalize(const Dataset& ds) {
    if (ds.points.empty()) throw ArgumentError("cannot normalize an empty dataset");
    NormalizationParams params;
    params.min.assign(ds.dim, std::numeric_limits<double>::infinity());
    params.max.assign(ds.dim, -std::numeric_limits<double>::infinity());
    for (const Point& p : ds.points)
        for (int j = 0; j < ds.dim; ++j) {
            params.min[j] = std::min(params.min[j], p.coords[j]);
            params.max[j] = std::max(params.max[j], p.coords[j]);
        }

    Dataset out;
    out.dim = ds.dim;
    out.points.reserve(ds.size());
    for (const Point& p : ds.points) {
        Point q;
        q.id = p.id;
        q.coords.resize(ds.dim);
        for (int j = 0; j < ds.dim; ++j) {
            double range = params.max[j] - params.min[j];
            q.coords[j] = range > 0.0 ? (p.coords[j] - params.min[j]) / range : 0.0;
        }
        out.points.push_back(std::move(q));
    }
    return {std::move(out), std::move(params)};
}

Dataset denormalize(const Dataset& ds, const NormalizationParams& params) {
    Dataset out;
    out.dim = ds.dim;
    out.points.reserve(ds.size());
    for (const Point& p : ds.points) {
        Point q;
        q.id = p.id;
        q.coords.resize(ds.dim);
        for (int j = 0; j < ds.dim; ++j)
            q.coords[j] = p.coords[j] * (params.max[j] - params.min[j]) + params.min[j];
        out.points.push_back(std::move(q));
    }
    return out;
}

void write_dataset_csv(const Dataset& ds, const std::filesystem::path& path,
                       const std::vector<int>* labels) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open " + path.string() + " for writing");
    out << "id";
    for (int j = 0; j < ds.dim; ++j) out << ",x" << j;
    if (labels) out << ",label";
    out << '\n';
    char buf[64];
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const Point& p = ds.points[i];
        out << p.id;
        for (int j = 0; j < ds.dim; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", p.coords[j]);
            out << ',' << buf;
        }
        if (labels) out << ',' << (*labels)[i];
        out << '\n';
    }
}

std::pair<Dataset, std::optional<std::vector<int>>>
read_dataset_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("empty dataset file " + path.string());

    // Header: id,x0,...,x{d-1}[,label]
    std::vector<std::string> header;
    {
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) header.push_back(field);
    }
    if (header.empty() || header[0] != "id")
        throw ConfigError("malformed dataset header in " + path.string());
    bool has_label = !header.empty() && header.back() == "label";
    int dim = static_cast<int>(header.size()) - 1 - (has_label ? 1 : 0);
    if (dim < 1) throw ConfigError("dataset in " + path.string() + " has no attributes");

    Dataset ds;
    ds.dim = dim;
    std::vector<int> labels;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string field;
        Point p;
        if (!std::getline(ss, field, ',')) continue;
        p.id = std::stoll(field);
        p.coords.resize(dim);
        for (int j = 0; j < dim; ++j) {
            if (!std::getline(ss, field, ','))
                throw ConfigError("truncated row in " + path.string());
            p.coords[j] = std::stod(field);
        }
        if (has_label) {
            if (!std::getline(ss, field, ','))
                throw ConfigError("missing label in " + path.string());
            labels.push_back(std::stoi(field));
        }
        ds.points.push_back(std::move(p));
    }
    std::optional<std::vector<int>> out_labels;
    if (has_label) out_labels = std::move(labels);
    return {std::move(ds), std::move(out_labels)};
}

} // namespace mtc
