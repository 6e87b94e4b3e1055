#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace citenet {

namespace detail {

// splitmix64, used to spread (seed, stream) pairs into engine seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace detail

/// Seeded random stream. Every random choice in the library goes through one
/// of these; a (seed, stream) pair always yields the same sequence, so call
/// sites that may run concurrently take distinct stream ids.
///
/// Draws are implemented on top of the raw engine output instead of
/// std::uniform_*_distribution, whose algorithms are implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : engine_(detail::splitmix64(detail::splitmix64(seed) ^ stream)) {}

    std::uint64_t raw() { return engine_(); }

    /// Unbiased uniform draw from [0, n). n must be positive.
    std::uint64_t index(std::uint64_t n) {
        const std::uint64_t umax = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t overhang = (umax % n + 1) % n; // 2^64 mod n
        std::uint64_t x = engine_();
        while (overhang != 0 && x > umax - overhang) x = engine_();
        return x % n;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double real01() { return (engine_() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double real(double lo, double hi) { return lo + (hi - lo) * real01(); }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(index(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace citenet
