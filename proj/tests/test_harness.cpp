#include "aidct/harness.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using aidct::IntBlock8;
using aidct::SuccessConfig;
using aidct::SuccessReport;

TEST_CASE("reference_dct2d: DC, zero, Parseval")
{
    IntBlock8 ones{};
    for (auto& row : ones) row.fill(1);
    const auto dc = aidct::reference_dct2d(ones);
    CHECK(dc[0][0] == Catch::Approx(8.0).epsilon(1e-12));
    for (int u = 0; u < 8; ++u)
        for (int v = 0; v < 8; ++v)
            if (u || v) CHECK(std::abs(dc[u][v]) < 1e-9);

    const auto zero = aidct::reference_dct2d(IntBlock8{});
    for (const auto& row : zero)
        for (const double v : row) CHECK(v == 0.0);

    for (int iter = 0; iter < 20; ++iter) {
        const IntBlock8 x = oracle::random_block(9, iter, 8);
        const auto f = aidct::reference_dct2d(x);
        double in2 = 0, out2 = 0;
        for (int u = 0; u < 8; ++u)
            for (int v = 0; v < 8; ++v) {
                in2 += static_cast<double>(x[u][v]) * static_cast<double>(x[u][v]);
                out2 += f[u][v] * f[u][v];
            }
        CHECK(out2 == Catch::Approx(in2).epsilon(1e-9));
    }
}

TEST_CASE("calibration: DC row factors, full map does not")
{
    // the DC relation holds: decode of the 2-D DC output of the all-ones
    // block is 64, the orthonormal reference is 8, scale 8
    IntBlock8 ones{};
    for (auto& row : ones) row.fill(1);
    const auto ai = aidct::dct2d_ai_direct(ones);
    const double dc = static_cast<double>(aidct::decode_exact(ai[0][0]));
    const double ref = aidct::reference_dct2d(ones)[0][0];
    CHECK(dc == Catch::Approx(64.0));
    CHECK(dc / ref == Catch::Approx(8.0).epsilon(1e-12));

    // rows 0 and 1 of the decoded transform are proportional to DCT rows 0
    // and 4 with scale sqrt(8); rows 2..7 are not proportional to any row,
    // so the full permutation/scale factorization does not exist and
    // calibrate() reports the inconsistency.
    const aidct::CalibrationResult r = aidct::try_calibrate();
    CHECK_FALSE(r.consistent);
    CHECK(r.rows[0].matched_row == 0);
    CHECK(r.rows[0].scale == Catch::Approx(std::sqrt(8.0)).epsilon(1e-12));
    CHECK(r.rows[0].max_rel_dev < 1e-9);
    CHECK(r.rows[1].matched_row == 4);
    CHECK(r.rows[1].scale == Catch::Approx(std::sqrt(8.0)).epsilon(1e-12));
    CHECK(r.rows[1].max_rel_dev < 1e-9);
    for (int u = 2; u < 8; ++u) CHECK(r.rows[u].max_rel_dev > 1e-3);

    CHECK_THROWS_AS(aidct::calibrate(), aidct::CalibrationError);
}

TEST_CASE("DC scale is constant across random blocks")
{
    // the one 2-D cell that does factor: decode(X[0][0]) = 8 * reference DC
    for (int iter = 0; iter < 100; ++iter) {
        const IntBlock8 x = oracle::random_block(123, iter, 8);
        const double lhs = static_cast<double>(aidct::decode_exact(aidct::dct2d_ai_direct(x)[0][0]));
        const double rhs = aidct::reference_dct2d(x)[0][0];
        if (std::abs(rhs) < 1e-9) continue;
        CHECK(lhs / rhs == Catch::Approx(8.0).epsilon(1e-9));
    }
}

TEST_CASE("success_rate: determinism and config validation")
{
    SuccessConfig cfg;
    cfg.trials = 200;
    cfg.seed = 42;
    const SuccessReport a = aidct::success_rate(cfg);
    const SuccessReport b = aidct::success_rate(cfg);
    CHECK(a.success_pct == b.success_pct);
    CHECK(a.excluded == b.excluded);
    CHECK(a.total + a.excluded == 200 * 64);

    cfg.word_length = 1;
    CHECK_THROWS_AS(aidct::success_rate(cfg), std::invalid_argument);
    cfg.word_length = 8;
    cfg.trials = 0;
    CHECK_THROWS_AS(aidct::success_rate(cfg), std::invalid_argument);
    cfg.trials = 10;
    cfg.tolerances = {-1.0};
    CHECK_THROWS_AS(aidct::success_rate(cfg), std::invalid_argument);
}

TEST_CASE("success_rate: report independent of worker thread count")
{
    SuccessConfig cfg;
    cfg.trials = 400;
    cfg.seed = 5;
    cfg.threads = 1;
    const SuccessReport serial = aidct::success_rate(cfg);
    cfg.threads = 4;
    const SuccessReport parallel = aidct::success_rate(cfg);
    CHECK(serial.success_pct == parallel.success_pct);
    CHECK(serial.excluded == parallel.excluded);
    CHECK(serial.total == parallel.total);
}

TEST_CASE("success_rate: monotone in tolerance, saturates at huge tolerance")
{
    SuccessConfig cfg;
    cfg.trials = 500;
    cfg.tolerances = {1e9, 10, 5, 1, 0.1, 0.05, 0.01, 0.005};
    const SuccessReport rep = aidct::success_rate(cfg);
    CHECK(rep.success_pct[0] == 100.0);
    for (std::size_t t = 1; t < rep.success_pct.size(); ++t)
        CHECK(rep.success_pct[t] <= rep.success_pct[t - 1]);
}

TEST_CASE("success_rate: published-set examples")
{
    // set (437,181,473), e = 10% succeeds at 99.9%+
    SuccessConfig big;
    big.trials = 2000;
    big.tolerances = {10.0};
    CHECK(aidct::success_rate(big).success_pct[0] >= 99.9);

    // set (12,5,13) at L=8, e=0.005%: sharply degraded (the measured rate of
    // this FRS model is ~13.7%; much weaker than the large set's ~83%)
    SuccessConfig small;
    small.set = aidct::expansion_factor_12_5_13();
    small.trials = 2000;
    small.tolerances = {0.005};
    const double small_rate = aidct::success_rate(small).success_pct[0];
    CHECK(small_rate > 5.0);
    CHECK(small_rate < 30.0);

    // the large set dominates the small set at every tolerance
    SuccessConfig a, b;
    a.trials = b.trials = 1000;
    b.set = aidct::expansion_factor_12_5_13();
    const SuccessReport ra = aidct::success_rate(a);
    const SuccessReport rb = aidct::success_rate(b);
    for (std::size_t t = 0; t < ra.success_pct.size(); ++t)
        CHECK(ra.success_pct[t] >= rb.success_pct[t]);
}

TEST_CASE("success_rate: nearly independent of word length")
{
    for (const auto& set :
         {aidct::expansion_factor_437_181_473(), aidct::expansion_factor_12_5_13()}) {
        SuccessConfig l4, l8;
        l4.set = l8.set = set;
        l4.word_length = 4;
        l8.word_length = 8;
        l4.trials = l8.trials = 15625;
        const SuccessReport r4 = aidct::success_rate(l4);
        const SuccessReport r8 = aidct::success_rate(l8);
        for (std::size_t t = 0; t < r4.success_pct.size(); ++t)
            CHECK(std::abs(r4.success_pct[t] - r8.success_pct[t]) <= 2.0);
    }
}

TEST_CASE("random_block substreams are seed- and index-stable")
{
    const IntBlock8 a = aidct::random_block(1, 0, 8);
    const IntBlock8 b = aidct::random_block(1, 0, 8);
    CHECK(a == b);
    CHECK(aidct::random_block(1, 1, 8) != a);
    CHECK(aidct::random_block(2, 0, 8) != a);
    for (const auto& row : aidct::random_block(3, 9, 4))
        for (const auto v : row) {
            CHECK(v >= -8);
            CHECK(v <= 7);
        }
}
