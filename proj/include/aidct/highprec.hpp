#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstdlib>
#include <stdexcept>

namespace aidct {

/// High-precision real used by decode_exact and the numeric oracles.
/// 100 decimal digits; value semantics, safe for concurrent use.
using HighPrec = boost::multiprecision::cpp_bin_float_100;

inline constexpr int kMinPrecision = 15;
inline constexpr int kMaxPrecision = 100;

/// The basis constants z1 = sqrt(2+sqrt 2)+sqrt(2-sqrt 2),
/// z2 = sqrt(2+sqrt 2)-sqrt(2-sqrt 2), z1z2 = 2*sqrt 2.
struct Zetas {
    HighPrec z1;
    HighPrec z2;
    HighPrec z1z2;
};

inline const Zetas& zetas()
{
    static const Zetas z = [] {
        using boost::multiprecision::sqrt;
        const HighPrec two(2);
        const HighPrec p = sqrt(two + sqrt(two));
        const HighPrec q = sqrt(two - sqrt(two));
        return Zetas{p + q, p - q, (p + q) * (p - q)};
    }();
    return z;
}

/// Validates a requested decode precision (decimal digits). All evaluation is
/// carried at 100 digits, so any request in [15,100] is served at >= the
/// requested precision; requests beyond 100 are not representable here.
inline int validate_precision(int digits)
{
    if (digits < kMinPrecision || digits > kMaxPrecision)
        throw std::invalid_argument("aidct: decode precision must be in [15,100] digits");
    return digits;
}

/// Default decode precision: AIDCT_PRECISION env var if set (clamped to the
/// valid range), otherwise 30 digits.
inline int default_precision()
{
    static const int digits = [] {
        if (const char* env = std::getenv("AIDCT_PRECISION")) {
            const long v = std::strtol(env, nullptr, 10);
            if (v < kMinPrecision) return kMinPrecision;
            if (v > kMaxPrecision) return kMaxPrecision;
            return static_cast<int>(v);
        }
        return 30;
    }();
    return digits;
}

} // namespace aidct
