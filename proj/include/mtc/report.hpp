#pragma once

#include <string>

#include "mtc/harness.hpp"

namespace mtc {

/// Violation-rate matrix (relations x systems); zero cells print "0",
/// inapplicable cells print "N/A", everything else a percentage.
std::string render_vr_matrix(const CampaignSummary& summary);

/// Mean reclustering percentage over violated trials, same layout.
std::string render_rp_matrix(const CampaignSummary& summary);

} // namespace mtc
