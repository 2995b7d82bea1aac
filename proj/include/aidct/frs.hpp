#pragma once

#include "aidct/ai_quad.hpp"
#include "aidct/checked.hpp"
#include "aidct/highprec.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace aidct {

/**
 * ExpansionFactor: one final-reconstruction-step configuration. alpha scales
 * the basis constants to near-integers m1 ~ alpha*z1, m2 ~ alpha*z2,
 * m3 ~ alpha*z1z2, so the b/c/d channels become exact integer multiplies.
 *
 * alpha is held as the exact decimal rational alpha_num/alpha_den so the
 * scaled fixed-point path is bit-deterministic; the published instances are
 * 45958/10^4 (set 12,5,13) and 1672309/10^4 (set 437,181,473).
 */
struct ExpansionFactor {
    Int alpha_num = 0;
    Int alpha_den = 1;
    Int m1 = 0;
    Int m2 = 0;
    Int m3 = 0;
    int frac_bits = 12; ///< fractional bits of the fix(alpha*a) term

    double alpha() const { return static_cast<double>(alpha_num) / static_cast<double>(alpha_den); }
    HighPrec alpha_hp() const { return HighPrec(alpha_num) / HighPrec(alpha_den); }

    friend bool operator==(const ExpansionFactor&, const ExpansionFactor&) = default;
};

/// (alpha*z1 - m1, alpha*z2 - m2, alpha*z1z2 - m3) at full working precision.
inline std::array<HighPrec, 3> residuals(const ExpansionFactor& f)
{
    const Zetas& z = zetas();
    const HighPrec a = f.alpha_hp();
    return {a * z.z1 - f.m1, a * z.z2 - f.m2, a * z.z1z2 - f.m3};
}

namespace detail {

inline void validate_expansion_factor(const ExpansionFactor& f, bool nearest_check)
{
    if (f.alpha_num <= 0 || f.alpha_den <= 0)
        throw std::invalid_argument("aidct: expansion factor alpha must be positive");
    if (f.m1 <= 0 || f.m2 <= 0 || f.m3 <= 0)
        throw std::invalid_argument("aidct: expansion factor integers must be positive");
    if (f.frac_bits < 0 || f.frac_bits > 48)
        throw std::invalid_argument("aidct: frac_bits must be in [0,48]");
    if (nearest_check) {
        for (const HighPrec& r : residuals(f))
            if (abs(r) >= HighPrec(0.5))
                throw std::invalid_argument(
                    "aidct: (m1,m2,m3) are not the nearest integers to alpha*(z1,z2,z1z2)");
    }
}

} // namespace detail

/// Parses a positive decimal such as "4.5958" into an exact rational.
inline ExpansionFactor make_expansion_factor(const std::string& alpha_decimal, Int m1, Int m2,
                                             Int m3, int frac_bits = 12)
{
    Int num = 0, den = 1;
    bool seen_digit = false, seen_dot = false;
    for (const char ch : alpha_decimal) {
        if (ch == '.') {
            if (seen_dot) throw std::invalid_argument("aidct: bad alpha literal");
            seen_dot = true;
        } else if (ch >= '0' && ch <= '9') {
            num = chk_add(chk_mul(num, 10), ch - '0');
            if (seen_dot) den = chk_mul(den, 10);
            seen_digit = true;
        } else {
            throw std::invalid_argument("aidct: bad alpha literal");
        }
    }
    if (!seen_digit) throw std::invalid_argument("aidct: bad alpha literal");
    ExpansionFactor f{num, den, m1, m2, m3, frac_bits};
    detail::validate_expansion_factor(f, true);
    return f;
}

/// Published set (alpha = 4.5958; 12, 5, 13).
inline ExpansionFactor expansion_factor_12_5_13(int frac_bits = 12)
{
    return ExpansionFactor{45958, 10000, 12, 5, 13, frac_bits};
}

/// Published set (alpha = 167.2309; 437, 181, 473).
inline ExpansionFactor expansion_factor_437_181_473(int frac_bits = 12)
{
    return ExpansionFactor{1672309, 10000, 437, 181, 473, frac_bits};
}

/**
 * Fixed-point reconstruction: fix(alpha*a) + b*m1 + c*m2 + d*m3, scaled by
 * 2^frac_bits. fix() rounds alpha*a to frac_bits fractional bits, half up;
 * the m_i multiplies are exact. Intermediates run in 128-bit arithmetic and
 * the result is range-checked into 64 bits.
 */
inline Int frs_reconstruct_scaled(const AIQuad& q, const ExpansionFactor& f)
{
    const Int128 scale = Int128(1) << f.frac_bits;
    const Int128 num = chk_mul128(chk_mul128(f.alpha_num, q.a), scale);
    const Int128 fix = round_half_up_div(num, f.alpha_den);
    Int128 rest = chk_add128(chk_add128(chk_mul128(q.b, f.m1), chk_mul128(q.c, f.m2)),
                             chk_mul128(q.d, f.m3));
    rest = chk_mul128(rest, scale);
    return narrow_to_int(chk_add128(fix, rest), "frs_reconstruct_scaled");
}

/// De-scaled reconstruction: frs_reconstruct_scaled / (2^frac_bits * alpha).
/// Software comparison convenience; the scaled integer path is the bit-exact
/// contract. Approximates decode_exact(q) with error bounded by
/// (|b| e1 + |c| e2 + |d| e3 + 2^(-frac_bits-1)) / alpha.
inline double frs_reconstruct(const AIQuad& q, const ExpansionFactor& f)
{
    const double scaled = static_cast<double>(frs_reconstruct_scaled(q, f));
    return scaled * static_cast<double>(f.alpha_den) /
           (std::ldexp(static_cast<double>(f.alpha_num), f.frac_bits));
}

/// Exact value of the de-scaled reconstruction as a high-precision real
/// (scaled * alpha_den / (2^frac_bits * alpha_num), no rounding).
inline HighPrec frs_reconstruct_hp(const AIQuad& q, const ExpansionFactor& f)
{
    return HighPrec(frs_reconstruct_scaled(q, f)) * HighPrec(f.alpha_den) /
           (HighPrec(f.alpha_num) * HighPrec(Int128(1) << f.frac_bits));
}

/// Analytic error bound (|b| e1 + |c| e2 + |d| e3 + 2^(-frac_bits-1)) / alpha
/// on |frs_reconstruct - decode_exact|, with e_i the absolute residuals.
inline HighPrec frs_error_bound(const AIQuad& q, const ExpansionFactor& f)
{
    const auto r = residuals(f);
    HighPrec bound = abs(HighPrec(q.b)) * abs(r[0]) + abs(HighPrec(q.c)) * abs(r[1]) +
                     abs(HighPrec(q.d)) * abs(r[2]);
    bound += HighPrec(1) / HighPrec(Int128(1) << (f.frac_bits + 1));
    return bound / f.alpha_hp();
}

} // namespace aidct
