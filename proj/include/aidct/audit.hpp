#pragma once

#include "aidct/checked.hpp"
#include "aidct/frs.hpp"
#include "aidct/transform.hpp"

#include <cstdlib>

namespace aidct::audit {

/// Thread-local two-input add/sub counter driven by the Counted scalar.
inline thread_local long long op_count = 0;

inline void reset_op_count() { op_count = 0; }

/// Int wrapper whose binary add/sub increment the audit counter. Negation is
/// free, matching the hardware costing convention.
struct Counted {
    Int v = 0;
};

inline Counted add(Counted x, Counted y)
{
    ++op_count;
    return {chk_add(x.v, y.v)};
}

inline Counted sub(Counted x, Counted y)
{
    ++op_count;
    return {chk_sub(x.v, y.v)};
}

inline Counted neg(Counted x) { return {chk_neg(x.v)}; }

inline Vec8<Counted> counted_vec(const IntVec8& x)
{
    Vec8<Counted> out{};
    for (int i = 0; i < 8; ++i) out[i] = {x[i]};
    return out;
}

/// Add/sub operations of one forward_a call, measured by instrumentation.
inline long long forward_a_add_count()
{
    const IntVec8 sample = {13, -7, 42, 0, -128, 127, 5, -1};
    reset_op_count();
    (void)forward_a(counted_vec(sample));
    const long long n = op_count;
    reset_op_count();
    return n;
}

/// Add/sub operations of one dct2d_core call (16 forward_a applications).
inline long long dct2d_core_add_count()
{
    Block8<Counted> block{};
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) block[i][j] = {Int(i * 8 + j - 31)};
    reset_op_count();
    (void)dct2d_core(block);
    const long long n = op_count;
    reset_op_count();
    return n;
}

/// Add/sub operations of the cross-wiring selection for all 16 sparse
/// B_i * Y * B_j^T products. Pure permutation/sign selection: must be zero.
inline long long crosswire_add_count()
{
    Block8<Counted> y{};
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) y[i][j] = {Int(3 * i - 5 * j)};
    reset_op_count();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) (void)sparse_bib_product(i, j, y);
    const long long n = op_count;
    reset_op_count();
    return n;
}

/// Adder estimate for a shift-add realization of one constant multiplier:
/// number of non-zero canonical-signed-digit terms minus one.
inline int csd_adder_estimate(Int m)
{
    if (m < 0) m = -m;
    int nonzero = 0;
    while (m != 0) {
        if (m & 1) {
            const int digit = 2 - static_cast<int>(m & 3); // +1 or -1
            m -= digit;
            ++nonzero;
        }
        m >>= 1;
    }
    return nonzero > 0 ? nonzero - 1 : 0;
}

struct FrsAdderReport {
    int m1_adders = 0;
    int m2_adders = 0;
    int m3_adders = 0;
};

inline FrsAdderReport frs_adder_report(const ExpansionFactor& f)
{
    return {csd_adder_estimate(f.m1), csd_adder_estimate(f.m2), csd_adder_estimate(f.m3)};
}

} // namespace aidct::audit
