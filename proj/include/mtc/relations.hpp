#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mtc/clustering.hpp"
#include "mtc/common.hpp"
#include "mtc/dataset.hpp"

namespace mtc {

/// How the follow-up labels of the points a relation adds are judged.
enum class ExpectationRule { SameAsSource, ParentCluster, MirrorGroup, OutlierIsolated };

std::string_view expectation_name(ExpectationRule rule);

struct MRCase {
    MrId mr_id;
    Dataset source;
    Dataset followup;
    // Total injective map from source point ids to follow-up point ids.
    std::map<std::int64_t, std::int64_t> old_to_new;
    std::vector<std::int64_t> added_ids;
    ExpectationRule expectation = ExpectationRule::SameAsSource;
    // MR3.x: the source cluster each added point is expected to join.
    std::map<std::int64_t, int> added_parent_label;
    // MR2.2: the source point each added point mirrors.
    std::map<std::int64_t, std::int64_t> added_preimage;
    nlohmann::ordered_json transform_params;
};

/// Table of (relation, system) support: MR1.2 needs explicit-centroid
/// initialization, MR2.1 needs reported centroids.
bool applicable(MrId mr, SystemKind system);

/// Random non-identity permutation of the point order; ids preserved.
MRCase mr1_1_shuffle(const Dataset& source, std::uint64_t seed);

/// Shuffle plus a pair of identical explicit-centroid InitSpecs for the
/// source and follow-up executions.
std::pair<MRCase, std::pair<InitSpec, InitSpec>>
mr1_2_shuffle_fixed_centroids(const Dataset& source, int k, std::uint64_t seed,
                              SystemKind system);

/// Moves each member of the selected clusters toward its centroid by
/// shrink_fraction (0.5 gives the midpoint).
MRCase mr2_1_shrink(const Dataset& source, const ClusteringOutcome& source_outcome,
                    double shrink_fraction, const std::vector<int>& clusters_to_shrink,
                    std::uint64_t seed);

/// Generates a 2-cluster source confined to the positive quadrant and a
/// follow-up that adds the reflection of every point across the vertical
/// axis, doubling the expected cluster count.
MRCase mr2_2_mirror(const BlobConfig& source_config, std::uint64_t seed);

/// Adds n_add points at the midpoint between random cluster members and
/// their cluster's reference point.
MRCase mr3_1_add_near_centroids(const Dataset& source,
                                const ClusteringOutcome& source_outcome, int n_add,
                                std::uint64_t seed);

/// Adds n_add points sampled uniformly on hull edges of random clusters.
MRCase mr3_2_add_on_hull(const Dataset& source, const ClusteringOutcome& source_outcome,
                         int n_add, std::uint64_t seed);

/// Appends an attribute holding each point's source cluster label.
MRCase mr4_1_add_informative_attribute(const Dataset& source,
                                       const ClusteringOutcome& source_outcome);

/// Source (A, B, A') with pearson(A, A') targeting rho; follow-up (A, B).
MRCase mr4_2_remove_redundant_attribute(const BlobConfig& blob_config, double rho,
                                        std::uint64_t seed);

/// Rotates 2-D coordinates by a random angle in [0, 90] degrees.
MRCase mr5_1_rotate(const Dataset& source, std::uint64_t seed);

/// Scales both axes by the same random factor in [0.2, 5].
MRCase mr5_2_scale(const Dataset& source, std::uint64_t seed);

/// Appends one point far outside every cluster (5x the mean inter-centroid
/// distance from the global mean, random direction).
MRCase mr6_insert_outlier(const Dataset& source, const ClusteringOutcome& source_outcome,
                          std::uint64_t seed);

/// Reference points for a relation: reported centroids when present,
/// otherwise per-cluster member means.
std::vector<std::vector<double>> reference_points(const Dataset& ds,
                                                  const ClusteringOutcome& outcome);

/// Serialization: source.csv, followup.csv and manifest.json under dir.
void write_case(const MRCase& c, const std::filesystem::path& dir);
nlohmann::ordered_json case_manifest(const MRCase& c);

} // namespace mtc
