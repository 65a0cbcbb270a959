#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "mtc/harness.hpp"
#include "mtc/selection.hpp"

namespace mtc {

/// Columns: system,mr,trial,seed,n_samples,rp,d_old,d_new,source_iters,
/// followup_iters,sfr,pattern,violated. The sfr field is empty for
/// non-iterative systems.
void write_trials_csv(const std::vector<TrialRecord>& trials,
                      const std::filesystem::path& path);

nlohmann::ordered_json summary_to_json(const CampaignConfig& config,
                                       const CampaignSummary& summary);
void write_summary_json(const CampaignConfig& config, const CampaignSummary& summary,
                        const std::filesystem::path& path);

/// Summary as written by write_summary_json, for report/select commands.
CampaignSummary read_summary_json(const std::filesystem::path& path);

/// Keys: must_have (list), mr_weights (map), pattern_weights (map).
SelectionScheme read_scheme_json(const std::filesystem::path& path);

nlohmann::ordered_json selection_to_json(const SelectionResult& result);

/// Per-trial case directory (source.csv, followup.csv, manifest.json,
/// outcomes.json) used by the plot command; written when a run keeps data.
void write_trial_snapshot(const TrialRecord& record, const TrialArtifacts& artifacts,
                          const std::filesystem::path& run_dir);

struct TrialSnapshot {
    MRCase mr_case;
    std::vector<int> source_assignments;
    std::vector<int> followup_assignments;
};

TrialSnapshot read_trial_snapshot(const std::filesystem::path& run_dir,
                                  SystemKind system, MrId mr, int trial);

std::string snapshot_dir_name(SystemKind system, MrId mr, int trial);

} // namespace mtc
