#pragma once

#include <array>
#include <span>
#include <vector>

#include "mtc/common.hpp"

namespace mtc {

using Point2 = std::array<double, 2>;

/// Cross product of (b - a) x (c - a); positive when a->b->c turns left.
inline double cross2(const Point2& a, const Point2& b, const Point2& c) {
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

inline Point2 lerp2(const Point2& a, const Point2& b, double t) {
    return {a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])};
}

/// Counter-clockwise convex hull (monotone chain) as indices into the input.
/// Collinear boundary points are excluded. Throws ArgumentError when fewer
/// than 3 points are given or all points are collinear (degenerate hull).
std::vector<std::size_t> convex_hull_2d(std::span<const Point2> points);

} // namespace mtc
