#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace aidct {

using Int = std::int64_t;
using Int128 = __int128;

[[noreturn]] inline void throw_overflow(const char* where)
{
    throw std::overflow_error(std::string("aidct: integer overflow in ") + where);
}

inline Int chk_add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw_overflow("add");
    return r;
}

inline Int chk_sub(Int a, Int b)
{
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw_overflow("sub");
    return r;
}

inline Int chk_mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw_overflow("mul");
    return r;
}

inline Int chk_neg(Int a)
{
    if (a == std::numeric_limits<Int>::min()) throw_overflow("neg");
    return -a;
}

// Counted-arithmetic hooks: kernels templated on the scalar type call these
// unqualified so an instrumented scalar can interpose via ADL.
inline Int add(Int a, Int b) { return chk_add(a, b); }
inline Int sub(Int a, Int b) { return chk_sub(a, b); }
inline Int neg(Int a) { return chk_neg(a); }

inline Int128 chk_add128(Int128 a, Int128 b)
{
    Int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw_overflow("add128");
    return r;
}

inline Int128 chk_mul128(Int128 a, Int128 b)
{
    Int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw_overflow("mul128");
    return r;
}

// floor division for 128-bit ints (C++ / truncates toward zero)
inline Int128 floor_div(Int128 num, Int128 den)
{
    Int128 q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

// round-half-up of num/den, den > 0; exact for any sign and magnitude of num
inline Int128 round_half_up_div(Int128 num, Int128 den)
{
    const Int128 q = floor_div(num, den);
    const Int128 rem = num - q * den; // 0 <= rem < den
    return (2 * rem >= den) ? q + 1 : q;
}

inline Int narrow_to_int(Int128 v, const char* where)
{
    if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
        throw_overflow(where);
    return static_cast<Int>(v);
}

template <class T>
using Vec8 = std::array<T, 8>;

template <class T>
using Block8 = std::array<Vec8<T>, 8>;

using IntVec8 = Vec8<Int>;
using IntBlock8 = Block8<Int>;

} // namespace aidct
