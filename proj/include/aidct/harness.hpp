#pragma once

#include "aidct/ai_quad.hpp"
#include "aidct/frs.hpp"
#include "aidct/transform.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace aidct {

/// Textbook orthonormal 2-D DCT-II oracle, O(N^4) in double precision.
inline Block8<double> reference_dct2d(const IntBlock8& x)
{
    constexpr double pi = 3.14159265358979323846;
    Block8<double> out{};
    for (int u = 0; u < 8; ++u) {
        for (int v = 0; v < 8; ++v) {
            const double cu = u == 0 ? std::sqrt(1.0 / 8.0) : 0.5;
            const double cv = v == 0 ? std::sqrt(1.0 / 8.0) : 0.5;
            double acc = 0.0;
            for (int m = 0; m < 8; ++m)
                for (int n = 0; n < 8; ++n)
                    acc += static_cast<double>(x[m][n]) *
                           std::cos((2 * m + 1) * u * pi / 16.0) *
                           std::cos((2 * n + 1) * v * pi / 16.0);
            out[u][v] = cu * cv * acc;
        }
    }
    return out;
}

/// 1-D orthonormal DCT-II matrix (row u, sample n), used by calibration.
inline const Block8<double>& reference_dct1d_matrix()
{
    static const Block8<double> d = [] {
        constexpr double pi = 3.14159265358979323846;
        Block8<double> m{};
        for (int u = 0; u < 8; ++u)
            for (int n = 0; n < 8; ++n)
                m[u][n] = (u == 0 ? std::sqrt(1.0 / 8.0) : 0.5) *
                          std::cos((2 * n + 1) * u * pi / 16.0);
        return m;
    }();
    return d;
}

/// Row permutation and per-coefficient scale grid relating the decoded AI
/// transform to the canonical DCT-II:
///   decode(X_2D[u][v]) = scale[u][v] * DCT2D(x)[perm[u]][perm[v]].
struct CalibrationMap {
    std::array<int, 8> perm{};
    Block8<double> scale{};
};

/// Per-row calibration diagnostics: which reference row (if any) row u of the
/// decoded transform is proportional to.
struct CalibrationRow {
    int matched_row = -1;  ///< index into the DCT-II rows, -1 if none
    double scale = 0.0;
    double max_rel_dev = 0.0; ///< worst ratio deviation over the row (best candidate)
};

struct CalibrationResult {
    bool consistent = false;
    CalibrationMap map{};
    std::array<CalibrationRow, 8> rows{};
    std::string detail;
};

struct CalibrationError : std::runtime_error {
    explicit CalibrationError(const std::string& what) : std::runtime_error(what) {}
};

/// Attempts to factor the decoded 1-D transform as a permuted, row-scaled
/// DCT-II and to verify the induced 2-D map on all 64 impulse blocks.
/// Reports per-row findings instead of throwing.
inline CalibrationResult try_calibrate()
{
    constexpr double kRelTol = 1e-9;
    const auto& d = reference_dct1d_matrix();

    // decoded 1-D transform matrix from the 8 impulse vectors
    Block8<double> m{};
    for (int n = 0; n < 8; ++n) {
        IntVec8 impulse{};
        impulse[n] = 1;
        const AIVec8 out = dct1d_ai(impulse);
        for (int u = 0; u < 8; ++u)
            m[u][n] = static_cast<double>(decode_exact(out[u]));
    }

    CalibrationResult result;
    std::array<bool, 8> used{};
    bool all_matched = true;
    for (int u = 0; u < 8; ++u) {
        CalibrationRow best;
        best.max_rel_dev = std::numeric_limits<double>::infinity();
        for (int p = 0; p < 8; ++p) {
            // anchor the candidate scale at the largest reference entry
            int anchor = 0;
            for (int n = 1; n < 8; ++n)
                if (std::abs(d[p][n]) > std::abs(d[p][anchor])) anchor = n;
            if (std::abs(d[p][anchor]) < 1e-12) continue;
            const double ratio = m[u][anchor] / d[p][anchor];
            if (ratio == 0.0) continue;
            double dev = 0.0;
            bool ok = true;
            for (int n = 0; n < 8; ++n) {
                if (std::abs(d[p][n]) < 1e-12) {
                    if (std::abs(m[u][n]) > 1e-9) ok = false;
                    continue;
                }
                dev = std::max(dev, std::abs(m[u][n] / d[p][n] - ratio) / std::abs(ratio));
            }
            if (!ok) continue;
            if (dev < best.max_rel_dev) best = {p, ratio, dev};
        }
        if (best.matched_row >= 0 && best.max_rel_dev <= kRelTol) {
            result.rows[u] = best;
            if (used[best.matched_row]) all_matched = false;
            used[best.matched_row] = true;
            result.map.perm[u] = best.matched_row;
        } else {
            result.rows[u] = best;
            result.map.perm[u] = -1;
            all_matched = false;
        }
    }

    if (!all_matched) {
        result.detail =
            "decoded transform rows are not each proportional to a distinct DCT-II row";
        return result;
    }

    for (int u = 0; u < 8; ++u)
        for (int v = 0; v < 8; ++v)
            result.map.scale[u][v] = result.rows[u].scale * result.rows[v].scale;

    // verify the induced 2-D relation on the 64 impulse blocks
    for (int r = 0; r < 8; ++r) {
        for (int c = 0; c < 8; ++c) {
            IntBlock8 x{};
            x[r][c] = 1;
            const AIBlock8 ai = dct2d_ai_direct(x);
            const Block8<double> ref = reference_dct2d(x);
            for (int u = 0; u < 8; ++u) {
                for (int v = 0; v < 8; ++v) {
                    const double lhs = static_cast<double>(decode_exact(ai[u][v]));
                    const double rhs =
                        result.map.scale[u][v] * ref[result.map.perm[u]][result.map.perm[v]];
                    const double err = std::abs(lhs - rhs);
                    if (err > kRelTol * std::max({std::abs(lhs), std::abs(rhs), 1.0})) {
                        result.detail = "2-D impulse verification failed at output (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")";
                        return result;
                    }
                }
            }
        }
    }
    result.consistent = true;
    return result;
}

/// Returns the map, or throws CalibrationError when no consistent
/// (perm, scale) exists.
inline CalibrationMap calibrate()
{
    CalibrationResult r = try_calibrate();
    if (!r.consistent)
        throw CalibrationError("aidct: calibration inconsistency: " + r.detail);
    return r.map;
}

// --- deterministic RNG -----------------------------------------------------

/// splitmix64; used both directly and to seed per-block substreams.
inline std::uint64_t splitmix64(std::uint64_t& state)
{
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// xoshiro256** seeded via splitmix64; platform-independent stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed)
    {
        std::uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
    }

    std::uint64_t next()
    {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform signed L-bit sample in [-2^(L-1), 2^(L-1) - 1].
    Int signed_sample(int word_length)
    {
        const std::uint64_t r = next() >> (64 - word_length);
        return static_cast<Int>(r) - (Int(1) << (word_length - 1));
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::array<std::uint64_t, 4> s_{};
};

/// Uniform signed L-bit random block from the per-block substream
/// (seed, block_index), independent of evaluation order.
inline IntBlock8 random_block(std::uint64_t seed, std::uint64_t block_index, int word_length)
{
    std::uint64_t sm = seed ^ (0xa0761d6478bd642fULL + block_index * 0xe7037ed1a0b428dbULL);
    Rng rng(splitmix64(sm));
    IntBlock8 x{};
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) x[i][j] = rng.signed_sample(word_length);
    return x;
}

// --- success-rate evaluation ----------------------------------------------

inline const std::vector<double>& default_tolerances()
{
    static const std::vector<double> t = {10.0, 5.0, 1.0, 0.1, 0.05, 0.01, 0.005};
    return t;
}

struct SuccessConfig {
    int word_length = 8;                                ///< L, bits; 2..16
    std::vector<double> tolerances = default_tolerances(); ///< percentages e
    ExpansionFactor set = expansion_factor_437_181_473();
    long trials = 15625;                                ///< blocks
    std::uint64_t seed = 1;
    int threads = 0;                                    ///< 0 = hardware
};

struct SuccessReport {
    std::vector<double> tolerances;
    std::vector<double> success_pct; ///< per tolerance, non-decreasing in e
    long long excluded = 0;          ///< |exact| below the absolute floor
    long long total = 0;             ///< scored coefficients
};

/// Per `trials` random L-bit blocks, compares frs_reconstruct of every
/// dct2d_ai coefficient against decode_exact of the same quad; a coefficient
/// succeeds at tolerance e when |approx - exact| <= (e/100)*|exact|.
/// Coefficients with |exact| < 1e-9 are excluded and counted. Deterministic
/// for a fixed (seed, config); blocks are evaluated in parallel.
inline SuccessReport success_rate(const SuccessConfig& cfg)
{
    if (cfg.word_length < 2 || cfg.word_length > 16)
        throw std::invalid_argument("aidct: word length must be in [2,16]");
    if (cfg.trials < 1) throw std::invalid_argument("aidct: trials must be >= 1");
    for (const double e : cfg.tolerances)
        if (!(e > 0)) throw std::invalid_argument("aidct: tolerances must be positive");

    const std::size_t ntol = cfg.tolerances.size();
    const HighPrec floor_abs("1e-9");
    std::vector<HighPrec> rel(ntol);
    for (std::size_t t = 0; t < ntol; ++t) rel[t] = HighPrec(cfg.tolerances[t]) / 100;

    struct Partial {
        std::vector<long long> success;
        long long excluded = 0;
        long long total = 0;
    };

    const int nthreads =
        cfg.threads > 0 ? cfg.threads
                        : std::max(1u, std::thread::hardware_concurrency());
    std::vector<Partial> partials(nthreads, Partial{std::vector<long long>(ntol, 0), 0, 0});
    std::atomic<long> next_block{0};

    auto worker = [&](int tid) {
        Partial& p = partials[tid];
        for (;;) {
            const long blk = next_block.fetch_add(1);
            if (blk >= cfg.trials) break;
            const IntBlock8 x = random_block(cfg.seed, static_cast<std::uint64_t>(blk),
                                             cfg.word_length);
            const AIBlock8 ai = dct2d_ai_direct(x);
            for (int u = 0; u < 8; ++u) {
                for (int v = 0; v < 8; ++v) {
                    const HighPrec exact = decode_exact(ai[u][v]);
                    const HighPrec mag = abs(exact);
                    if (mag < floor_abs) {
                        ++p.excluded;
                        continue;
                    }
                    ++p.total;
                    const HighPrec err =
                        abs(HighPrec(frs_reconstruct(ai[u][v], cfg.set)) - exact);
                    for (std::size_t t = 0; t < ntol; ++t)
                        if (err <= rel[t] * mag) ++p.success[t];
                }
            }
        }
    };

    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    SuccessReport report;
    report.tolerances = cfg.tolerances;
    report.success_pct.assign(ntol, 0.0);
    for (const Partial& p : partials) {
        report.excluded += p.excluded;
        report.total += p.total;
    }
    for (std::size_t t = 0; t < ntol; ++t) {
        long long s = 0;
        for (const Partial& p : partials) s += p.success[t];
        report.success_pct[t] =
            report.total > 0 ? 100.0 * static_cast<double>(s) / static_cast<double>(report.total)
                             : 0.0;
    }
    return report;
}

} // namespace aidct
