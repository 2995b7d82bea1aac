#pragma once

#include "aidct/ai_quad.hpp"
#include "aidct/checked.hpp"

#include <array>
#include <cstdint>

namespace aidct {

using AIVec8 = Vec8<AIQuad>;
using AIBlock8 = Block8<AIQuad>;

/// The fast integer transform matrix A (entries in {-1,0,1}).
inline constexpr std::array<std::array<int, 8>, 8> kMatrixA = {{
    {1, 1, 1, 1, 1, 1, 1, 1},
    {1, -1, -1, 1, 1, -1, -1, 1},
    {1, 1, -1, -1, -1, -1, 1, 1},
    {1, 0, 0, -1, -1, 0, 0, 1},
    {1, 1, 1, 1, -1, -1, -1, -1},
    {0, -1, -1, 0, 0, 1, 1, 0},
    {-1, -1, 1, 1, -1, -1, 1, 1},
    {1, 0, 0, 0, 0, 0, 0, -1},
}};

/// Sparse {-1,0,1} components of the symbolic matrix
/// B = B0 + B1*z1 + B2*z2 + B3*z1z2. Each B_i has at most one non-zero
/// entry per row and is block diagonal with 4x4 blocks.
inline constexpr std::array<std::array<int, 8>, 8> kMatrixB0 = {{
    {1, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 1},
    {0, 0, 0, 0, 0, 0, 0, 1},
    {0, 0, 0, 0, 0, 0, 0, 1},
    {0, 0, 0, 0, 0, 0, 0, 1},
}};

inline constexpr std::array<std::array<int, 8>, 8> kMatrixB1 = {{
    {0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, -1, 0},
    {0, 0, 0, 0, 0, 0, 1, 0},
    {0, 0, 0, 0, -1, 0, 0, 0},
    {0, 0, 0, 0, 1, 0, 0, 0},
}};

inline constexpr std::array<std::array<int, 8>, 8> kMatrixB2 = {{
    {0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, -1, 0, 0, 0},
    {0, 0, 0, 0, 1, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 0},
    {0, 0, 0, 0, 0, 0, -1, 0},
}};

inline constexpr std::array<std::array<int, 8>, 8> kMatrixB3 = {{
    {0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, -1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, -1, 0, 0},
    {0, 0, 0, 0, 0, -1, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 0},
}};

inline constexpr std::array<const std::array<std::array<int, 8>, 8>*, 4> kMatrixBParts = {
    &kMatrixB0, &kMatrixB1, &kMatrixB2, &kMatrixB3};

/// One symbolic entry of B: `basis` indexes {1, z1, z2, z1z2} (-1 for a zero
/// entry), `sign` is +/-1.
struct BEntry {
    std::int8_t basis = -1;
    std::int8_t sign = 0;
};

/// The symbolic B reassembled entrywise from its sparse components.
inline const std::array<std::array<BEntry, 8>, 8>& symbolic_b()
{
    static const auto rows = [] {
        std::array<std::array<BEntry, 8>, 8> m;
        for (auto& row : m) row.fill(BEntry{-1, 0});
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c)
                for (int k = 0; k < 4; ++k)
                    if (const int v = (*kMatrixBParts[k])[r][c]; v != 0)
                        m[r][c] = BEntry{static_cast<std::int8_t>(k),
                                         static_cast<std::int8_t>(v)};
        return m;
    }();
    return rows;
}

/// Row selector view of one B_i: row r of B_i has its single non-zero at
/// column `col` with sign `sign`, or col = -1 when the row is zero.
struct RowSel {
    std::int8_t col = -1;
    std::int8_t sign = 0;
};

inline const std::array<std::array<RowSel, 8>, 4>& b_row_selectors()
{
    static const auto sel = [] {
        std::array<std::array<RowSel, 8>, 4> s;
        for (auto& part : s) part.fill(RowSel{-1, 0});
        for (int i = 0; i < 4; ++i)
            for (int r = 0; r < 8; ++r)
                for (int c = 0; c < 8; ++c)
                    if (const int v = (*kMatrixBParts[i])[r][c]; v != 0)
                        s[i][r] = RowSel{static_cast<std::int8_t>(c),
                                         static_cast<std::int8_t>(v)};
        return s;
    }();
    return sel;
}

/**
 * forward_a: y = A*x using 20 two-input add/sub operations (negations free).
 *
 * Factorization: 8 half-sample sums/differences, 7 additions for the even
 * half, 5 for the odd half. Generic over the scalar type so an instrumented
 * type can count the operations (see audit.hpp); for Int the adds are
 * overflow-checked.
 */
template <class T>
Vec8<T> forward_a(const Vec8<T>& x)
{
    const T s0 = add(x[0], x[7]), s1 = add(x[1], x[6]);
    const T s2 = add(x[2], x[5]), s3 = add(x[3], x[4]);
    const T d0 = sub(x[0], x[7]), d1 = sub(x[1], x[6]);
    const T d2 = sub(x[2], x[5]), d3 = sub(x[3], x[4]);

    // even half: 7 additions
    const T t0 = add(s0, s3), t1 = add(s1, s2);
    const T t2 = sub(s0, s3), t3 = sub(s1, s2);

    // odd half: 5 additions
    const T u0 = add(d1, d2);
    const T u1 = add(d0, d1), u2 = add(d2, d3);

    Vec8<T> y{};
    y[0] = add(t0, t1);
    y[1] = sub(t0, t1);
    y[2] = add(t2, t3);
    y[3] = t2;
    y[4] = add(u1, u2);
    y[5] = neg(u0);
    y[6] = sub(u2, u1);
    y[7] = d0;
    return y;
}

/// Row k of B applied to y with the symbolic z-coefficients folded into
/// AIQuad components. No additions: every component is a single +/-y_k.
inline AIVec8 encode_b(const IntVec8& y)
{
    AIVec8 out{};
    out[0] = {y[0], 0, 0, 0};
    out[1] = {y[1], 0, 0, 0};
    out[2] = {y[2], 0, 0, y[3]};
    out[3] = {y[2], 0, 0, chk_neg(y[3])};
    out[4] = {y[7], chk_neg(y[6]), chk_neg(y[4]), chk_neg(y[5])};
    out[5] = {y[7], y[6], y[4], chk_neg(y[5])};
    out[6] = {y[7], chk_neg(y[4]), y[6], y[5]};
    out[7] = {y[7], y[4], chk_neg(y[6]), y[5]};
    return out;
}

/// Same row combination applied to a vector of quads (right-side B^T step of
/// the 2-D path); multiplications by z-coefficients use exact quad products.
inline AIVec8 encode_b_quads(const AIVec8& r)
{
    const auto& e = quad_basis(); // {1, z1, z2, z1z2}
    AIVec8 out{};
    out[0] = r[0];
    out[1] = r[1];
    out[2] = quad_add(r[2], quad_mul(e[3], r[3]));
    out[3] = quad_sub(r[2], quad_mul(e[3], r[3]));
    const AIQuad z1y4 = quad_mul(e[1], r[4]);
    const AIQuad z12y5 = quad_mul(e[3], r[5]);
    const AIQuad z2y6 = quad_mul(e[2], r[6]);
    const AIQuad z2y4 = quad_mul(e[2], r[4]);
    const AIQuad z1y6 = quad_mul(e[1], r[6]);
    out[4] = quad_add(quad_sub(quad_sub(quad_neg(z2y4), z12y5), z1y6), r[7]);
    out[5] = quad_add(quad_add(quad_sub(z2y4, z12y5), z1y6), r[7]);
    out[6] = quad_add(quad_add(quad_sub(z12y5, z1y4), z2y6), r[7]);
    out[7] = quad_add(quad_sub(quad_add(z1y4, z12y5), z2y6), r[7]);
    return out;
}

/// X_1D = B * A * x: the exact 1-D AI DCT path.
inline AIVec8 dct1d_ai(const IntVec8& x)
{
    return encode_b(forward_a(x));
}

/// Y_2D = A * x * A^T, computed with 16 forward_a calls (<= 320 additions).
template <class T>
Block8<T> dct2d_core(const Block8<T>& x)
{
    Block8<T> cols{};
    for (int j = 0; j < 8; ++j) {
        Vec8<T> col{};
        for (int i = 0; i < 8; ++i) col[i] = x[i][j];
        const Vec8<T> t = forward_a(col);
        for (int i = 0; i < 8; ++i) cols[i][j] = t[i];
    }
    Block8<T> out{};
    for (int i = 0; i < 8; ++i) out[i] = forward_a(cols[i]);
    return out;
}

/// X_2D = B * A * x * A^T * B^T computed directly: encode_b over the columns
/// of Y_2D, then the symbolic B row combination over each row of quads.
inline AIBlock8 dct2d_ai_direct(const IntBlock8& x)
{
    const IntBlock8 y = dct2d_core(x);
    AIBlock8 by{};
    for (int j = 0; j < 8; ++j) {
        IntVec8 col{};
        for (int i = 0; i < 8; ++i) col[i] = y[i][j];
        const AIVec8 t = encode_b(col);
        for (int i = 0; i < 8; ++i) by[i][j] = t[i];
    }
    AIBlock8 out{};
    for (int i = 0; i < 8; ++i) out[i] = encode_b_quads(by[i]);
    return out;
}

/// B_i * Y * B_j^T as pure permutation/sign selection: entry (r,c) is
/// sign_i(r)*sign_j(c) * Y[col_i(r)][col_j(c)], with zero rows/columns where
/// B_i (B_j) has an all-zero row. No additions.
template <class T>
Block8<T> sparse_bib_product(int i, int j, const Block8<T>& y)
{
    const auto& sel = b_row_selectors();
    Block8<T> out{};
    for (int r = 0; r < 8; ++r) {
        const RowSel ri = sel[i][r];
        if (ri.col < 0) continue;
        for (int c = 0; c < 8; ++c) {
            const RowSel rj = sel[j][c];
            if (rj.col < 0) continue;
            const T v = y[ri.col][rj.col];
            out[r][c] = (ri.sign * rj.sign > 0) ? v : neg(v);
        }
    }
    return out;
}

/// X_2D via the decomposition sum over the 16 sparse products
/// B_i * Y_2D * B_j^T weighted by the basis-product quads. Bit-exactly equal
/// to dct2d_ai_direct.
inline AIBlock8 dct2d_ai_decomposed(const IntBlock8& x)
{
    const IntBlock8 y = dct2d_core(x);
    const auto& table = basis_product_table();
    AIBlock8 out{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const IntBlock8 m = sparse_bib_product(i, j, y);
            const AIQuad& w = table[i][j];
            for (int r = 0; r < 8; ++r)
                for (int c = 0; c < 8; ++c)
                    if (m[r][c] != 0)
                        out[r][c] = quad_add(out[r][c], quad_scale(w, m[r][c]));
        }
    }
    return out;
}

namespace detail {

/// 4x4 integer product L * M * R^T (naive, overflow-checked).
inline void block4_product(const std::array<std::array<int, 8>, 8>& bi, int bi_r0,
                           const IntBlock8& y, int y_r0, int y_c0,
                           const std::array<std::array<int, 8>, 8>& bj, int bj_r0,
                           IntBlock8& out, int o_r0, int o_c0)
{
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            Int acc = 0;
            for (int k = 0; k < 4; ++k) {
                if (bi[bi_r0 + r][bi_r0 + k] == 0) continue;
                Int inner = 0;
                for (int l = 0; l < 4; ++l) {
                    if (bj[bj_r0 + c][bj_r0 + l] == 0) continue;
                    inner = chk_add(inner, chk_mul(y[y_r0 + k][y_c0 + l],
                                                   bj[bj_r0 + c][bj_r0 + l]));
                }
                acc = chk_add(acc, chk_mul(Int(bi[bi_r0 + r][bi_r0 + k]), inner));
            }
            out[o_r0 + r][o_c0 + c] = acc;
        }
    }
}

} // namespace detail

/// B_i * Y * B_j^T assembled from the four 4x4 half-column sub-products
///   [ B_{i,0} Y_0 B_{j,0}^T   B_{i,0} Y_1 B_{j,1}^T ]
///   [ B_{i,1} Y_2 B_{j,0}^T   B_{i,1} Y_3 B_{j,1}^T ]
/// (B_i block diagonal). Equals the full 8x8 triple product.
inline IntBlock8 half_column_product(int i, int j, const IntBlock8& y)
{
    if (i < 0 || i > 3 || j < 0 || j > 3)
        throw std::invalid_argument("aidct: half_column_product indices must be in 0..3");
    const auto& bi = *kMatrixBParts[i];
    const auto& bj = *kMatrixBParts[j];
    IntBlock8 out{};
    detail::block4_product(bi, 0, y, 0, 0, bj, 0, out, 0, 0); // top-left
    detail::block4_product(bi, 0, y, 0, 4, bj, 4, out, 0, 4); // top-right
    detail::block4_product(bi, 4, y, 4, 0, bj, 0, out, 4, 0); // bottom-left
    detail::block4_product(bi, 4, y, 4, 4, bj, 4, out, 4, 4); // bottom-right
    return out;
}

} // namespace aidct
