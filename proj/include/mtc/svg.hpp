#pragma once

#include <string>

#include "mtc/io.hpp"

namespace mtc {

/// Side-by-side source/follow-up scatter plot with cluster-coded markers;
/// noise points draw as crosses. Output bytes are deterministic for a fixed
/// snapshot. Requires 2-D data.
std::string render_case_svg(const TrialSnapshot& snapshot, const std::string& title);

} // namespace mtc
