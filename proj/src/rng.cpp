#include "mtc/rng.hpp"

#include <cmath>
#include <numbers>

namespace mtc {

double Rng::next_gaussian() {
    // u1 in (0, 1] so the log is finite.
    double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

std::size_t Rng::next_index(std::size_t n) {
    auto idx = static_cast<std::size_t>(next_double() * static_cast<double>(n));
    return idx < n ? idx : n - 1;
}

std::vector<std::size_t> Rng::sample_distinct(std::size_t n, std::size_t k) {
    // floor(u * n) rather than a modulus: the picks then mostly survive a
    // small change of n, keeping initial conditions aligned between a source
    // dataset and a follow-up that appends a few points.
    std::vector<std::size_t> picks;
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t idx = next_index(n);
        for (int tries = 0; used[idx] && tries < 64; ++tries) idx = next_index(n);
        while (used[idx]) idx = (idx + 1) % n;
        used[idx] = true;
        picks.push_back(idx);
    }
    return picks;
}

} // namespace mtc
