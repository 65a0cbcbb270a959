#include "mtc/geometry.hpp"

#include <algorithm>
#include <numeric>

namespace mtc {

std::vector<std::size_t> convex_hull_2d(std::span<const Point2> points) {
    const std::size_t n = points.size();
    if (n < 3) throw ArgumentError("degenerate hull: need at least 3 points");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (points[a][0] != points[b][0]) return points[a][0] < points[b][0];
        return points[a][1] < points[b][1];
    });

    std::vector<std::size_t> hull(2 * n);
    std::size_t h = 0;
    // Lower chain, then upper chain; strict turns drop collinear points.
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t p = order[i];
        while (h >= 2 && cross2(points[hull[h - 2]], points[hull[h - 1]], points[p]) <= 0.0)
            --h;
        hull[h++] = p;
    }
    for (std::size_t i = n - 1, lower = h + 1; i-- > 0;) {
        std::size_t p = order[i];
        while (h >= lower && cross2(points[hull[h - 2]], points[hull[h - 1]], points[p]) <= 0.0)
            --h;
        hull[h++] = p;
    }
    hull.resize(h > 0 ? h - 1 : 0); // last point repeats the first
    if (hull.size() < 3) throw ArgumentError("degenerate hull: all points collinear");
    return hull;
}

} // namespace mtc
