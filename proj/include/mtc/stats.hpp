#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mtc/common.hpp"

namespace mtc {

/// Sample Pearson correlation in [-1, 1]. Throws ArgumentError when either
/// vector is constant (the coefficient is undefined) or lengths differ.
double pearson(std::span<const double> a, std::span<const double> b);

/// (x - mean) / stddev per element; population standard deviation.
std::vector<double> standardize(std::span<const double> a);

/// A' = rho * standardize(a) + sqrt(1 - rho^2) * N(0,1) noise, giving
/// population correlation rho with a. rho must lie in (0, 1).
std::vector<double> generate_correlated_attribute(std::span<const double> a,
                                                  double rho,
                                                  std::uint64_t seed);

} // namespace mtc
