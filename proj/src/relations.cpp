#include "mtc/relations.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <set>

#include "mtc/geometry.hpp"
#include "mtc/rng.hpp"
#include "mtc/stats.hpp"

namespace mtc {

std::string_view expectation_name(ExpectationRule rule) {
    switch (rule) {
    case ExpectationRule::SameAsSource: return "SAME-AS-SOURCE";
    case ExpectationRule::ParentCluster: return "PARENT-CLUSTER";
    case ExpectationRule::MirrorGroup: return "MIRROR-GROUP";
    case ExpectationRule::OutlierIsolated: return "OUTLIER-ISOLATED";
    }
    return "?";
}

bool applicable(MrId mr, SystemKind system) {
    switch (mr) {
    case MrId::MR1_2:
        // Needs explicit starting centroids.
        return system == SystemKind::KM || system == SystemKind::XM ||
               system == SystemKind::FF;
    case MrId::MR2_1:
        // Needs centroids reported by the system itself.
        return system != SystemKind::AN && system != SystemKind::DS;
    default:
        return true;
    }
}

std::vector<std::vector<double>> reference_points(const Dataset& ds,
                                                  const ClusteringOutcome& outcome) {
    if (outcome.centroids) return *outcome.centroids;
    return cluster_means(ds, outcome.assignments);
}

namespace {

std::map<std::int64_t, std::int64_t> identity_map(const Dataset& ds) {
    std::map<std::int64_t, std::int64_t> m;
    for (const Point& p : ds.points) m.emplace(p.id, p.id);
    return m;
}

MRCase transformed_copy(MrId mr, const Dataset& source) {
    MRCase c;
    c.mr_id = mr;
    c.source = source;
    c.followup = source;
    c.old_to_new = identity_map(source);
    return c;
}

Dataset shuffled(const Dataset& source, std::uint64_t seed) {
    if (source.size() < 2)
        throw ArgumentError("shuffling needs at least 2 points");
    Rng rng(seed);
    std::vector<std::size_t> order(source.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    // A draw that happens to be the identity is re-drawn.
    do {
        rng.shuffle(order);
    } while (std::is_sorted(order.begin(), order.end()));
    Dataset out;
    out.dim = source.dim;
    out.points.reserve(source.size());
    for (std::size_t pos : order) out.points.push_back(source.points[pos]);
    return out;
}

// Members of each cluster as dataset positions in ascending point id.
std::vector<std::vector<std::size_t>> members_by_cluster(const Dataset& ds,
                                                         const std::vector<int>& assign) {
    int k = 0;
    for (int a : assign) k = std::max(k, a + 1);
    std::vector<std::size_t> order(ds.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return ds.points[a].id < ds.points[b].id;
    });
    std::vector<std::vector<std::size_t>> members(k);
    for (std::size_t pos : order)
        if (assign[pos] != kNoise) members[assign[pos]].push_back(pos);
    return members;
}

} // namespace

MRCase mr1_1_shuffle(const Dataset& source, std::uint64_t seed) {
    MRCase c;
    c.mr_id = MrId::MR1_1;
    c.source = source;
    c.followup = shuffled(source, seed);
    c.old_to_new = identity_map(source);
    c.transform_params["kind"] = "permutation";
    return c;
}

std::pair<MRCase, std::pair<InitSpec, InitSpec>>
mr1_2_shuffle_fixed_centroids(const Dataset& source, int k, std::uint64_t seed,
                              SystemKind system) {
    if (!applicable(MrId::MR1_2, system))
        throw ApplicabilityError(std::string(mr_name(MrId::MR1_2)) +
                                 " not applicable to " + std::string(system_name(system)) +
                                 ": the system has no explicit-centroid initialization");
    MRCase c = mr1_1_shuffle(source, derive_seed(seed, "order"));
    c.mr_id = MrId::MR1_2;

    Rng rng(derive_seed(seed, "centroid-ids"));
    std::vector<std::int64_t> ids;
    for (std::size_t pos : rng.sample_distinct(source.size(), static_cast<std::size_t>(k)))
        ids.push_back(source.points[pos].id);
    c.transform_params["centroid_ids"] = ids;
    InitSpec spec = InitSpec::explicit_ids(ids);
    return {std::move(c), {spec, spec}};
}

MRCase mr2_1_shrink(const Dataset& source, const ClusteringOutcome& source_outcome,
                    double shrink_fraction, const std::vector<int>& clusters_to_shrink,
                    [[maybe_unused]] std::uint64_t seed) {
    if (!source_outcome.centroids)
        throw ApplicabilityError(std::string(mr_name(MrId::MR2_1)) +
                                 " needs cluster centroids reported by the system");
    if (clusters_to_shrink.empty())
        throw ArgumentError("clusters_to_shrink must not be empty");
    const auto& centroids = *source_outcome.centroids;
    std::set<int> selected(clusters_to_shrink.begin(), clusters_to_shrink.end());

    MRCase c = transformed_copy(MrId::MR2_1, source);
    for (std::size_t i = 0; i < source.size(); ++i) {
        int label = source_outcome.assignments[i];
        if (label == kNoise || !selected.count(label)) continue;
        for (int j = 0; j < source.dim; ++j) {
            double x = source.points[i].coords[j];
            c.followup.points[i].coords[j] = x + shrink_fraction * (centroids[label][j] - x);
        }
    }
    c.transform_params["shrink_fraction"] = shrink_fraction;
    c.transform_params["clusters"] = clusters_to_shrink;
    return c;
}

MRCase mr2_2_mirror(const BlobConfig& source_config, std::uint64_t seed) {
    BlobConfig cfg = source_config;
    cfg.centers = 2;
    cfg.n_features = 2;
    // Centers at least 6 sigma inside the positive quadrant so the clusters
    // stay clear of the mirror axis.
    cfg.center_box_min = std::max(source_config.center_box_min, 6.0 * cfg.cluster_std);

    Dataset source;
    bool confined = false;
    for (int attempt = 0; attempt < 100 && !confined; ++attempt) {
        cfg.seed = derive_seed(seed, static_cast<std::uint64_t>(attempt));
        source = generate_blobs(cfg).first;
        confined = true;
        for (const Point& p : source.points)
            for (double v : p.coords)
                if (!(v > 0.0)) confined = false;
    }
    if (!confined)
        throw ArgumentError("could not confine the source clusters to the "
                            "positive quadrant");

    MRCase c = transformed_copy(MrId::MR2_2, source);
    c.expectation = ExpectationRule::MirrorGroup;
    std::int64_t next_id = source.max_id() + 1;
    for (const Point& p : source.points) {
        Point m;
        m.id = next_id++;
        m.coords = {-p.coords[0], p.coords[1]};
        c.followup.points.push_back(std::move(m));
        c.added_ids.push_back(c.followup.points.back().id);
        c.added_preimage[c.followup.points.back().id] = p.id;
    }
    c.transform_params["mirror_axis"] = "vertical";
    c.transform_params["quadrants_added"] = 1;
    return c;
}

MRCase mr3_1_add_near_centroids(const Dataset& source,
                                const ClusteringOutcome& source_outcome, int n_add,
                                std::uint64_t seed) {
    if (n_add < 1) throw ArgumentError("n_add must be >= 1");
    auto refs = reference_points(source, source_outcome);
    auto members = members_by_cluster(source, source_outcome.assignments);
    std::vector<int> eligible;
    for (std::size_t c = 0; c < members.size(); ++c)
        if (!members[c].empty()) eligible.push_back(static_cast<int>(c));
    if (eligible.empty())
        throw ApplicabilityError("no non-empty source cluster to extend");

    MRCase c = transformed_copy(MrId::MR3_1, source);
    c.expectation = ExpectationRule::ParentCluster;
    Rng rng(seed);
    std::int64_t next_id = source.max_id() + 1;
    for (int i = 0; i < n_add; ++i) {
        int label = eligible[rng.next_below(eligible.size())];
        const auto& m = members[label];
        std::size_t pos = m[rng.next_below(m.size())];
        Point p;
        p.id = next_id++;
        p.coords.resize(source.dim);
        for (int j = 0; j < source.dim; ++j)
            p.coords[j] = 0.5 * (refs[label][j] + source.points[pos].coords[j]);
        c.followup.points.push_back(std::move(p));
        c.added_ids.push_back(next_id - 1);
        c.added_parent_label[next_id - 1] = label;
    }
    c.transform_params["n_add"] = n_add;
    c.transform_params["placement"] = "midpoint-to-centroid";
    return c;
}

MRCase mr3_2_add_on_hull(const Dataset& source, const ClusteringOutcome& source_outcome,
                         int n_add, std::uint64_t seed) {
    if (n_add < 1) throw ArgumentError("n_add must be >= 1");
    if (source.dim != 2)
        throw ApplicabilityError(std::string(mr_name(MrId::MR3_2)) +
                                 " requires 2-D data");
    auto members = members_by_cluster(source, source_outcome.assignments);

    struct HullInfo {
        int label;
        std::vector<std::size_t> members;
        std::vector<std::size_t> hull;
    };
    std::vector<HullInfo> eligible;
    for (std::size_t c = 0; c < members.size(); ++c) {
        if (members[c].size() < 3) continue;
        std::vector<Point2> pts;
        for (std::size_t pos : members[c])
            pts.push_back({source.points[pos].coords[0], source.points[pos].coords[1]});
        try {
            eligible.push_back({static_cast<int>(c), members[c], convex_hull_2d(pts)});
        } catch (const ArgumentError&) {
            // Degenerate hull: this cluster is skipped.
        }
    }
    if (eligible.empty())
        throw ApplicabilityError("no source cluster has a non-degenerate convex hull");

    MRCase c = transformed_copy(MrId::MR3_2, source);
    c.expectation = ExpectationRule::ParentCluster;
    Rng rng(seed);
    std::int64_t next_id = source.max_id() + 1;
    for (int i = 0; i < n_add; ++i) {
        const HullInfo& info = eligible[rng.next_below(eligible.size())];
        std::size_t e = rng.next_below(info.hull.size());
        std::size_t a = info.members[info.hull[e]];
        std::size_t b = info.members[info.hull[(e + 1) % info.hull.size()]];
        double t = rng.next_double();
        Point2 v = lerp2({source.points[a].coords[0], source.points[a].coords[1]},
                         {source.points[b].coords[0], source.points[b].coords[1]}, t);
        Point p;
        p.id = next_id++;
        p.coords = {v[0], v[1]};
        c.followup.points.push_back(std::move(p));
        c.added_ids.push_back(next_id - 1);
        c.added_parent_label[next_id - 1] = info.label;
    }
    c.transform_params["n_add"] = n_add;
    c.transform_params["placement"] = "hull-edge";
    return c;
}

MRCase mr4_1_add_informative_attribute(const Dataset& source,
                                       const ClusteringOutcome& source_outcome) {
    for (int a : source_outcome.assignments)
        if (a == kNoise)
            throw ApplicabilityError(std::string(mr_name(MrId::MR4_1)) +
                                     " undefined when the source labels contain noise");
    MRCase c = transformed_copy(MrId::MR4_1, source);
    c.followup.dim = source.dim + 1;
    for (std::size_t i = 0; i < source.size(); ++i)
        c.followup.points[i].coords.push_back(
            static_cast<double>(source_outcome.assignments[i]));
    c.transform_params["attribute"] = "source-cluster-label";
    return c;
}

MRCase mr4_2_remove_redundant_attribute(const BlobConfig& blob_config, double rho,
                                        std::uint64_t seed) {
    BlobConfig cfg = blob_config;
    cfg.n_features = 2;
    cfg.seed = derive_seed(seed, "blobs");
    Dataset base = generate_blobs(cfg).first;

    std::vector<double> a(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) a[i] = base.points[i].coords[0];
    std::vector<double> corr =
        generate_correlated_attribute(a, rho, derive_seed(seed, "noise"));

    MRCase c;
    c.mr_id = MrId::MR4_2;
    c.source.dim = 3;
    c.followup = base;
    for (std::size_t i = 0; i < base.size(); ++i) {
        Point p = base.points[i];
        p.coords.push_back(corr[i]);
        c.source.points.push_back(std::move(p));
    }
    c.old_to_new = identity_map(c.source);
    c.transform_params["rho"] = rho;
    c.transform_params["removed_attribute"] = 2;
    return c;
}

MRCase mr5_1_rotate(const Dataset& source, std::uint64_t seed) {
    if (source.dim != 2)
        throw ApplicabilityError(std::string(mr_name(MrId::MR5_1)) +
                                 " requires 2-D data");
    Rng rng(seed);
    double degrees = rng.next_uniform(0.0, 90.0);
    double theta = degrees * std::numbers::pi / 180.0;
    double cs = std::cos(theta), sn = std::sin(theta);

    MRCase c = transformed_copy(MrId::MR5_1, source);
    for (Point& p : c.followup.points) {
        double a = p.coords[0], b = p.coords[1];
        p.coords[0] = a * cs + b * sn;
        p.coords[1] = -a * sn + b * cs;
    }
    c.transform_params["theta_degrees"] = degrees;
    return c;
}

MRCase mr5_2_scale(const Dataset& source, std::uint64_t seed) {
    Rng rng(seed);
    double s = rng.next_uniform(0.2, 5.0);
    MRCase c = transformed_copy(MrId::MR5_2, source);
    for (Point& p : c.followup.points)
        for (double& v : p.coords) v *= s;
    c.transform_params["s_a"] = s;
    c.transform_params["s_b"] = s;
    return c;
}

MRCase mr6_insert_outlier(const Dataset& source, const ClusteringOutcome& source_outcome,
                          std::uint64_t seed) {
    auto refs = reference_points(source, source_outcome);
    if (refs.size() < 2)
        throw ApplicabilityError(std::string(mr_name(MrId::MR6)) +
                                 " needs at least two source clusters");

    double mean_dist = 0.0;
    int pairs = 0;
    for (std::size_t a = 0; a < refs.size(); ++a)
        for (std::size_t b = a + 1; b < refs.size(); ++b) {
            double s = 0.0;
            for (std::size_t j = 0; j < refs[a].size(); ++j) {
                double d = refs[a][j] - refs[b][j];
                s += d * d;
            }
            mean_dist += std::sqrt(s);
            pairs += 1;
        }
    mean_dist /= pairs;

    std::vector<double> center(source.dim, 0.0);
    for (const Point& p : source.points)
        for (int j = 0; j < source.dim; ++j) center[j] += p.coords[j];
    for (double& v : center) v /= static_cast<double>(source.size());

    Rng rng(seed);
    std::vector<double> dir(source.dim);
    if (source.dim == 2) {
        double angle = rng.next_uniform(0.0, 2.0 * std::numbers::pi);
        dir = {std::cos(angle), std::sin(angle)};
    } else {
        double norm = 0.0;
        for (double& v : dir) {
            v = rng.next_gaussian();
            norm += v * v;
        }
        norm = std::sqrt(norm);
        for (double& v : dir) v /= norm;
    }

    MRCase c = transformed_copy(MrId::MR6, source);
    c.expectation = ExpectationRule::OutlierIsolated;
    Point outlier;
    outlier.id = source.max_id() + 1;
    outlier.coords.resize(source.dim);
    const double factor = 5.0;
    for (int j = 0; j < source.dim; ++j)
        outlier.coords[j] = center[j] + factor * mean_dist * dir[j];
    c.followup.points.push_back(outlier);
    c.added_ids.push_back(outlier.id);
    c.transform_params["distance_factor"] = factor;
    c.transform_params["mean_intercentroid_distance"] = mean_dist;
    c.transform_params["outlier"] = outlier.coords;
    return c;
}

nlohmann::ordered_json case_manifest(const MRCase& c) {
    nlohmann::ordered_json j;
    j["mr"] = mr_name(c.mr_id);
    j["expectation"] = expectation_name(c.expectation);
    nlohmann::ordered_json map = nlohmann::ordered_json::array();
    for (const auto& [old_id, new_id] : c.old_to_new)
        map.push_back({old_id, new_id});
    j["old_to_new"] = std::move(map);
    j["added_ids"] = c.added_ids;
    if (!c.added_parent_label.empty()) {
        nlohmann::ordered_json parents = nlohmann::ordered_json::object();
        for (const auto& [id, label] : c.added_parent_label)
            parents[std::to_string(id)] = label;
        j["added_parent_label"] = std::move(parents);
    }
    if (!c.added_preimage.empty()) {
        nlohmann::ordered_json pre = nlohmann::ordered_json::object();
        for (const auto& [id, src] : c.added_preimage) pre[std::to_string(id)] = src;
        j["added_preimage"] = std::move(pre);
    }
    j["transform_params"] = c.transform_params;
    return j;
}

void write_case(const MRCase& c, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    write_dataset_csv(c.source, dir / "source.csv");
    write_dataset_csv(c.followup, dir / "followup.csv");
    std::ofstream out(dir / "manifest.json");
    if (!out) throw ConfigError("cannot write " + (dir / "manifest.json").string());
    out << case_manifest(c).dump(2) << '\n';
}

} // namespace mtc
