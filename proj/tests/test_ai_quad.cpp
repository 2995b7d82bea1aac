#include "aidct/ai_quad.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <limits>

using aidct::AIQuad;
using aidct::HighPrec;
using aidct::Int;

namespace {

HighPrec hp_rel_err(const HighPrec& got, const HighPrec& want)
{
    HighPrec denom = abs(want);
    if (denom < 1) denom = 1;
    return abs(got - want) / denom;
}

} // namespace

TEST_CASE("quad_add componentwise examples")
{
    CHECK(AIQuad{1, 2, 3, 4} + AIQuad{0, 0, 0, 0} == AIQuad{1, 2, 3, 4});
    CHECK(AIQuad{1, 0, 0, 0} + AIQuad{0, 1, 0, 0} == AIQuad{1, 1, 0, 0});
    CHECK(AIQuad{2, -1, 5, 3} + AIQuad{-2, 1, -5, -3} == AIQuad{0, 0, 0, 0});
}

TEST_CASE("quad_mul basis reductions")
{
    const AIQuad z1{0, 1, 0, 0};
    const AIQuad z2{0, 0, 1, 0};
    const AIQuad z12{0, 0, 0, 1};

    CHECK(z1 * z2 == z12);
    CHECK(z1 * z1 == AIQuad{4, 0, 0, 1});
    CHECK(z12 * z12 == AIQuad{8, 0, 0, 0});
    CHECK(z2 * z2 == AIQuad{4, 0, 0, -1});
    CHECK(z1 * z12 == AIQuad{0, 2, 2, 0});
    CHECK(z2 * z12 == AIQuad{0, 2, -2, 0});
}

TEST_CASE("decode_exact values against independent square roots")
{
    using boost::multiprecision::sqrt;
    CHECK(aidct::decode_exact(AIQuad{0, 0, 0, 0}) == 0);

    // z1z2 = 2*sqrt(2), checked against the direct square root
    const HighPrec two_sqrt2 = 2 * sqrt(HighPrec(2));
    CHECK(abs(aidct::decode_exact(AIQuad{0, 0, 0, 1}) - two_sqrt2) < HighPrec("1e-90"));
    CHECK(abs(aidct::decode_exact(AIQuad{4, 0, 0, 1}) - (4 + two_sqrt2)) < HighPrec("1e-90"));

    // frozen 30-digit values
    CHECK(abs(aidct::decode_exact(AIQuad{0, 0, 0, 1}) -
              HighPrec("2.8284271247461900976033774484193962")) < HighPrec("1e-30"));
    CHECK(abs(aidct::decode_exact(AIQuad{4, 0, 0, 1}) -
              HighPrec("6.8284271247461900976033774484193962")) < HighPrec("1e-30"));
}

TEST_CASE("decode precision parameter")
{
    CHECK_THROWS_AS(aidct::decode_exact(AIQuad{1, 0, 0, 0}, 14), std::invalid_argument);
    CHECK_THROWS_AS(aidct::decode_exact(AIQuad{1, 0, 0, 0}, 101), std::invalid_argument);
    // deterministic for a fixed precision
    CHECK(aidct::decode_exact(AIQuad{3, -2, 7, 1}, 30) == aidct::decode_exact(AIQuad{3, -2, 7, 1}, 30));
}

TEST_CASE("basis product table: symmetry and numeric oracle to 12 digits")
{
    const auto& table = aidct::basis_product_table();
    const auto& z = aidct::zetas();
    const HighPrec vals[4] = {HighPrec(1), z.z1, z.z2, z.z1z2};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            CHECK(table[i][j] == table[j][i]);
            const HighPrec got = aidct::decode_exact(table[i][j]);
            const HighPrec want = vals[i] * vals[j]; // real product, no reduction
            CHECK(abs(got - want) <= abs(want) * HighPrec("1e-12"));
        }
    }
}

TEST_CASE("quad_mul commutative and associative over all basis triples")
{
    const auto& e = aidct::quad_basis();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            CHECK(e[i] * e[j] == e[j] * e[i]);
            for (int k = 0; k < 4; ++k)
                CHECK((e[i] * e[j]) * e[k] == e[i] * (e[j] * e[k]));
        }
}

TEST_CASE("ring homomorphism on random quads")
{
    aidct::Rng rng(2024);
    auto draw = [&]() -> AIQuad {
        auto r = [&]() { return static_cast<Int>(rng.next() % 2001) - 1000; };
        return {r(), r(), r(), r()};
    };
    for (int iter = 0; iter < 500; ++iter) {
        const AIQuad p = draw(), q = draw();
        const HighPrec dp = aidct::decode_exact(p), dq = aidct::decode_exact(q);
        // additive: zero up to the last bits of the 100-digit evaluation
        CHECK(hp_rel_err(aidct::decode_exact(p + q), dp + dq) < HighPrec("1e-80"));
        CHECK(hp_rel_err(aidct::decode_exact(p * q), dp * dq) < HighPrec("1e-9"));
    }
}

TEST_CASE("associativity on random quads, exact")
{
    aidct::Rng rng(7);
    auto draw = [&]() -> AIQuad {
        auto r = [&]() { return static_cast<Int>(rng.next() % 201) - 100; };
        return {r(), r(), r(), r()};
    };
    for (int iter = 0; iter < 200; ++iter) {
        const AIQuad p = draw(), q = draw(), s = draw();
        CHECK((p * q) * s == p * (q * s));
    }
}

TEST_CASE("component overflow is reported, never wrapped")
{
    const Int big = std::numeric_limits<Int>::max();
    CHECK_THROWS_AS((AIQuad{big, 0, 0, 0} + AIQuad{1, 0, 0, 0}), std::overflow_error);
    CHECK_THROWS_AS((AIQuad{0, big, 0, 0} * AIQuad{0, 2, 0, 0}), std::overflow_error);
    CHECK_THROWS_AS(aidct::quad_neg(AIQuad{std::numeric_limits<Int>::min(), 0, 0, 0}),
                    std::overflow_error);
}
