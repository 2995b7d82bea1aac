#pragma once

#include "aidct/checked.hpp"
#include "aidct/highprec.hpp"

#include <array>
#include <ostream>

namespace aidct {

/**
 * AIQuad: one element of the rank-4 integer module spanned by
 * {1, z1, z2, z1*z2}, stored as the four 64-bit integer coordinates
 * (a, b, c, d) of a + b*z1 + c*z2 + d*z1z2.
 *
 * All component arithmetic is overflow-checked; overflow throws
 * std::overflow_error, never wraps.
 *
 * Word-growth bound (why 64-bit components are ample): for input samples
 * |x| <= 2^15 (word length L <= 16), A*x*A^T entries are bounded by
 * 64*2^15 = 2^21 (row absolute sums of A are <= 8). Each B_i*Y*B_j^T entry
 * is a single Y entry, and the basis-product weights are <= 8 with at most
 * 17 accumulated terms per component, so |component| <= 17*2^21 < 2^26.
 * The FRS fixed-point path multiplies by alpha_num*2^frac_bits in 128-bit
 * arithmetic and narrows with a range check.
 */
struct AIQuad {
    Int a = 0; ///< coefficient of 1
    Int b = 0; ///< coefficient of z1
    Int c = 0; ///< coefficient of z2
    Int d = 0; ///< coefficient of z1*z2

    friend bool operator==(const AIQuad&, const AIQuad&) = default;

    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }

    friend std::ostream& operator<<(std::ostream& os, const AIQuad& q)
    {
        return os << "(" << q.a << "," << q.b << "," << q.c << "," << q.d << ")";
    }
};

inline AIQuad quad_add(const AIQuad& p, const AIQuad& q)
{
    return {chk_add(p.a, q.a), chk_add(p.b, q.b), chk_add(p.c, q.c), chk_add(p.d, q.d)};
}

inline AIQuad quad_sub(const AIQuad& p, const AIQuad& q)
{
    return {chk_sub(p.a, q.a), chk_sub(p.b, q.b), chk_sub(p.c, q.c), chk_sub(p.d, q.d)};
}

inline AIQuad quad_neg(const AIQuad& p)
{
    return {chk_neg(p.a), chk_neg(p.b), chk_neg(p.c), chk_neg(p.d)};
}

inline AIQuad quad_scale(const AIQuad& p, Int k)
{
    return {chk_mul(p.a, k), chk_mul(p.b, k), chk_mul(p.c, k), chk_mul(p.d, k)};
}

/// Bilinear product reduced back into the module via
///   z1^2 = 4 + z1z2,  z2^2 = 4 - z1z2,  (z1z2)^2 = 8,
///   z1*z2 = z1z2,  z1*z1z2 = 2 z1 + 2 z2,  z2*z1z2 = 2 z1 - 2 z2.
/// decode(quad_mul(p,q)) == decode(p) * decode(q) exactly.
inline AIQuad quad_mul(const AIQuad& p, const AIQuad& q)
{
    const Int a1 = p.a, b1 = p.b, c1 = p.c, d1 = p.d;
    const Int a2 = q.a, b2 = q.b, c2 = q.c, d2 = q.d;

    // shared cross terms
    const Int bd = chk_add(chk_mul(b1, d2), chk_mul(d1, b2));
    const Int cd = chk_add(chk_mul(c1, d2), chk_mul(d1, c2));

    Int a = chk_mul(a1, a2);
    a = chk_add(a, chk_mul(4, chk_add(chk_mul(b1, b2), chk_mul(c1, c2))));
    a = chk_add(a, chk_mul(8, chk_mul(d1, d2)));

    Int b = chk_add(chk_mul(a1, b2), chk_mul(b1, a2));
    b = chk_add(b, chk_mul(2, chk_add(bd, cd)));

    Int c = chk_add(chk_mul(a1, c2), chk_mul(c1, a2));
    c = chk_add(c, chk_mul(2, chk_sub(bd, cd)));

    Int d = chk_add(chk_mul(a1, d2), chk_mul(d1, a2));
    d = chk_add(d, chk_add(chk_mul(b1, c2), chk_mul(c1, b2)));
    d = chk_add(d, chk_sub(chk_mul(b1, b2), chk_mul(c1, c2)));

    return {a, b, c, d};
}

inline AIQuad operator+(const AIQuad& p, const AIQuad& q) { return quad_add(p, q); }
inline AIQuad operator-(const AIQuad& p, const AIQuad& q) { return quad_sub(p, q); }
inline AIQuad operator-(const AIQuad& p) { return quad_neg(p); }
inline AIQuad operator*(const AIQuad& p, const AIQuad& q) { return quad_mul(p, q); }
inline AIQuad operator*(const AIQuad& p, Int k) { return quad_scale(p, k); }
inline AIQuad operator*(Int k, const AIQuad& p) { return quad_scale(p, k); }

/// The four basis elements as quads: 1, z1, z2, z1z2.
inline const std::array<AIQuad, 4>& quad_basis()
{
    static const std::array<AIQuad, 4> basis = {
        AIQuad{1, 0, 0, 0}, AIQuad{0, 1, 0, 0}, AIQuad{0, 0, 1, 0}, AIQuad{0, 0, 0, 1}};
    return basis;
}

/// BasisProductTable: entry(i,j) is the reduction of basis_i * basis_j into
/// the module. Symmetric; entries verified to >= 12 significant digits
/// against an arbitrary-precision oracle in the test suite.
using BasisProductTable = std::array<std::array<AIQuad, 4>, 4>;

inline const BasisProductTable& basis_product_table()
{
    static const BasisProductTable table = [] {
        BasisProductTable t{};
        const auto& e = quad_basis();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                t[i][j] = quad_mul(e[i], e[j]);
        return t;
    }();
    return table;
}

/// Exact decode a + b*z1 + c*z2 + d*z1z2 with the basis constants carried at
/// >= `precision` decimal digits (all evaluation runs at 100 digits; the
/// parameter is validated to [15,100]). Deterministic for a fixed precision.
inline HighPrec decode_exact(const AIQuad& q, int precision = default_precision())
{
    validate_precision(precision);
    const Zetas& z = zetas();
    return HighPrec(q.a) + HighPrec(q.b) * z.z1 + HighPrec(q.c) * z.z2 + HighPrec(q.d) * z.z1z2;
}

} // namespace aidct
