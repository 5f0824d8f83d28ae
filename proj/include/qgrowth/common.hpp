#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qgrowth {

// Single error type for load/validation/resource failures. Verification
// *results* (a bound that does not hold, a failed check) are reported in the
// corresponding report structs, not thrown.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr double kRelTol = 1e-9;              // default floating comparison tolerance
inline constexpr double kVerdictTol = 1e-6;          // growth verdict threshold around 1
inline constexpr std::size_t kMaxSupport = 1000000;  // decomposition support cap (entries)
inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

inline bool approx_eq(double a, double b, double rtol = kRelTol) {
    double scale = std::max({std::fabs(a), std::fabs(b), 1.0});
    return std::fabs(a - b) <= rtol * scale;
}

// b^e by binary exponentiation; exact for dyadic bases and small exponents,
// and deterministic across calls (unlike std::pow on some libms).
inline double pow_int(double base, std::int64_t e) {
    if (e < 0) return 1.0 / pow_int(base, -e);
    double acc = 1.0, p = base;
    for (std::uint64_t n = static_cast<std::uint64_t>(e); n; n >>= 1) {
        if (n & 1) acc *= p;
        p *= p;
    }
    return acc;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in multiplicity arithmetic");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in multiplicity arithmetic");
    return r;
}

// Small deterministic RNG (splitmix64 + Box-Muller). Seeded runs must be
// byte-reproducible across platforms, which rules out std::normal_distribution.
class Rng {
public:
    explicit Rng(std::uint64_t seed = kDefaultSeed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in (0, 1]
    double uniform() { return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {  // inclusive
        return lo + static_cast<std::int64_t>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    double gaussian() {
        double u1 = uniform(), u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    std::complex<double> complex_gaussian() {
        double a = gaussian(), b = gaussian();
        return {a * 0.7071067811865475244, b * 0.7071067811865475244};
    }

private:
    std::uint64_t state_;
};

}  // namespace qgrowth
