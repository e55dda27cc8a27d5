#pragma once

#include <cmath>
#include <cstdint>

namespace pegsim {

// Counter-based Gaussian noise. Every draw is a pure function of
// (seed, stream, index), so sample streams are reproducible bit-for-bit no
// matter how queries interleave, and per-stream independence means adding a
// stream never perturbs the others.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Uniform double in (0, 1), 53-bit mantissa, never exactly 0 or 1.
inline double uniform_from_bits(std::uint64_t bits) {
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

/// Standard normal draw addressed by (seed, stream, index).
inline double gaussian_at(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    const std::uint64_t base = splitmix64(splitmix64(seed) ^ splitmix64(stream ^ 0x6a09e667f3bcc909ULL));
    const std::uint64_t a = splitmix64(base ^ splitmix64(index));
    const std::uint64_t b = splitmix64(a ^ 0x9e3779b97f4a7c15ULL);
    const double u1 = uniform_from_bits(a);
    const double u2 = uniform_from_bits(b);
    // Box-Muller, cosine branch only: one draw per index keeps addressing trivial.
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

} // namespace pegsim
