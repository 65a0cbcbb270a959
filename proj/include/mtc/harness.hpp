#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "mtc/clusterers.hpp"
#include "mtc/patterns.hpp"
#include "mtc/relations.hpp"

namespace mtc {

struct LabelAlignment {
    // Partial injective map from source cluster labels to follow-up labels,
    // maximizing the shared-point overlap; noise never participates.
    std::map<int, int> mapping;
    std::set<int> unmatched_source;
    std::set<int> unmatched_followup;
};

struct RPResult {
    int d_old = 0;
    int d_new = 0;
    double rp = 0.0;
};

struct RpOptions {
    // Whether a mapped point moving between NOISE and a cluster counts
    // toward d_old.
    bool count_noise_flips = true;
};

/// Exact maximum-overlap assignment on the mapped-point contingency matrix;
/// ties resolve toward lower label indices.
LabelAlignment align_labels(const ClusteringOutcome& source_outcome,
                            const ClusteringOutcome& followup_outcome,
                            const std::map<std::int64_t, std::int64_t>& old_to_new,
                            const MRCase& c);

/// RP = (d_old + d_new) / |followup|; d_old counts mapped points whose
/// aligned label changed, d_new counts added points violating the MR's
/// expectation rule.
RPResult compute_rp(const MRCase& c, const ClusteringOutcome& source_outcome,
                    const ClusteringOutcome& followup_outcome,
                    const RpOptions& options = {});

struct TrialRecord {
    SystemKind system;
    MrId mr;
    int trial = 0;
    std::uint64_t seed = 0;
    int n_samples = 0;
    RPResult rp;
    int source_iterations = 0;
    int followup_iterations = 0;
    std::optional<double> sfr; // iterative systems only
    PatternKind pattern = PatternKind::None;
    bool violated = false;
};

/// Captured per-trial data for plotting / case files (opt-in).
struct TrialArtifacts {
    MRCase mr_case;
    ClusteringOutcome source_outcome;
    ClusteringOutcome followup_outcome;
};

/// One source/follow-up execution pair with aligned initial conditions.
TrialRecord run_trial(SystemKind system, MrId mr, const BlobConfig& blob_config,
                      const ClusterParams& params, std::uint64_t trial_seed,
                      int trial_index = 0, TrialArtifacts* artifacts = nullptr);

struct CellSummary {
    bool applicable = true;
    int trials = 0;   // executed trials
    int skipped = 0;  // planned trials whose case could not be constructed
    int violations = 0;
    double vr = 0.0;
    std::optional<double> mean_rp; // over violated trials only
    std::map<PatternKind, int> pattern_histogram;
};

struct CampaignSummary {
    std::map<SystemKind, std::map<MrId, CellSummary>> cells;
    int distinct_violated_mrs(SystemKind system) const;
};

struct CampaignConfig {
    std::vector<SystemKind> systems;
    std::vector<MrId> mrs;
    int n_trials = 100;
    std::uint64_t master_seed = 0;
    BlobConfig blob_template;     // n_samples is redrawn per trial from [50, 200]
    ClusterParams params;
    int jobs = 1;
    bool keep_artifacts = false;
};

struct CampaignResult {
    std::vector<TrialRecord> trials;
    CampaignSummary summary;
    std::vector<std::optional<TrialArtifacts>> artifacts; // parallel to trials
};

std::uint64_t trial_seed(std::uint64_t master_seed, SystemKind system, MrId mr,
                         int trial_index);

/// Straightforward sequential reference runner.
CampaignResult run_campaign_serial(const CampaignConfig& config);

/// OpenMP runner; trials are independent and keyed by derived seeds, so the
/// output is identical to the serial reference for any jobs value.
CampaignResult run_campaign(const CampaignConfig& config);

/// Aggregation of trial records into per-(system, MR) cells; associative and
/// order-independent.
CampaignSummary summarize(const CampaignConfig& config,
                          const std::vector<TrialRecord>& trials);

} // namespace mtc
