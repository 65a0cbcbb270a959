#include "mtc/stats.hpp"

#include <cmath>

#include "mtc/rng.hpp"

namespace mtc {

namespace {

double mean_of(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

bool is_constant(std::span<const double> v) {
    for (double x : v)
        if (x != v[0]) return false;
    return true;
}

} // namespace

double pearson(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw ArgumentError("pearson: vectors must have equal length");
    if (a.size() < 2)
        throw ArgumentError("pearson: need at least two observations");
    if (is_constant(a) || is_constant(b))
        throw ArgumentError("pearson: correlation undefined for a constant vector");

    double ma = mean_of(a), mb = mean_of(b);
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double da = a[i] - ma, db = b[i] - mb;
        sab += da * db;
        saa += da * da;
        sbb += db * db;
    }
    return sab / std::sqrt(saa * sbb);
}

std::vector<double> standardize(std::span<const double> a) {
    if (a.empty()) throw ArgumentError("standardize: empty vector");
    if (is_constant(a)) throw ArgumentError("standardize: constant vector");
    double m = mean_of(a);
    double var = 0.0;
    for (double x : a) var += (x - m) * (x - m);
    var /= static_cast<double>(a.size());
    double sd = std::sqrt(var);
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] - m) / sd;
    return out;
}

std::vector<double> generate_correlated_attribute(std::span<const double> a,
                                                  double rho,
                                                  std::uint64_t seed) {
    if (!(rho > 0.0 && rho < 1.0))
        throw ArgumentError("correlation target must lie in (0, 1), got " +
                            std::to_string(rho));
    std::vector<double> z = standardize(a);
    Rng rng(seed);
    double noise_scale = std::sqrt(1.0 - rho * rho);
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = rho * z[i] + noise_scale * rng.next_gaussian();
    return out;
}

} // namespace mtc
