#pragma once

#include <cstdint>
#include <numeric>
#include <string_view>
#include <vector>

namespace mtc {

/// SplitMix64 finalizer; full-avalanche mix of a 64-bit word.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
    return mix64(seed ^ mix64(tag + 0x9E3779B97F4A7C15ull));
}

/// Derives a child seed from a string tag (FNV-1a, then mixed).
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ull;
    }
    return derive_seed(seed, h);
}

/// Counter-based splittable generator. All randomness in the project flows
/// through explicitly seeded instances of this class; there is no global
/// RNG state, and results are reproducible bit-for-bit for a fixed seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix64(state_);
    }

    /// Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double next_uniform(double lo, double hi) {
        return lo + next_double() * (hi - lo);
    }

    /// Uniform in [0, n). Modulo bias is negligible for the small n used here.
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

    /// Uniform index in [0, n) as floor(u * n); picks drawn this way mostly
    /// coincide for nearby n, unlike the modulus form.
    std::size_t next_index(std::size_t n);

    /// Standard normal via Box-Muller; consumes exactly two words.
    double next_gaussian();

    /// Child generator for an independent stream.
    Rng split(std::uint64_t tag) const { return Rng(derive_seed(state_, tag)); }
    Rng split(std::string_view tag) const { return Rng(derive_seed(state_, tag)); }

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    /// k distinct indices drawn from [0, n) in selection order.
    std::vector<std::size_t> sample_distinct(std::size_t n, std::size_t k);

private:
    std::uint64_t state_;
};

} // namespace mtc
