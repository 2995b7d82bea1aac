#pragma once

#include "aidct/ai_quad.hpp"
#include "aidct/frs.hpp"
#include "aidct/transform.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

namespace aidct {

struct FramingError : std::runtime_error {
    explicit FramingError(const std::string& what) : std::runtime_error(what) {}
};

enum class PipelineInput {
    Transformed, ///< rows of Y_2D = A*x*A^T arrive (column transform upstream)
    Raw          ///< raw sample rows arrive; the integer transform runs in a
                 ///< front adapter ahead of the buffer sections
};

struct PipelineConfig {
    PipelineInput input = PipelineInput::Transformed;
    std::optional<ExpansionFactor> frs; ///< attach the FRS tail
};

/// Static resource accounting of the modeled buffer and cross-wiring
/// sections: shift-register words at F_clk, parallel-load words at F_clk/8,
/// and eight-input multiplexers.
struct StorageReport {
    int fast_words = 0;
    int slow_words = 0;
    int mux_count = 0;
};

struct PipelineOutRow {
    Vec8<AIQuad> quads{};            ///< one row of X_2D
    std::optional<IntVec8> fixed;    ///< FRS fixed-point row when attached
};

struct TickResult {
    std::optional<PipelineOutRow> out;
    int out_row_index = -1; ///< 0..7 within the emitting block, -1 if none
    bool load_strobe = false;
};

/// Sign/permute selection of the 16 term rows B_i * Y * B_j^T for output row
/// r, reading the four buffered rows of one Y half. Free of addition and
/// subtraction; generic so an instrumented scalar can verify that.
template <class T>
std::array<Vec8<T>, 16> crosswire_select_row(const std::array<Vec8<T>, 4>& bank,
                                             int half_base, int r)
{
    const auto& sel = b_row_selectors();
    std::array<Vec8<T>, 16> terms{};
    for (int i = 0; i < 4; ++i) {
        const RowSel ri = sel[i][r];
        if (ri.col < 0) continue;
        const Vec8<T>& src = bank[ri.col - half_base];
        for (int j = 0; j < 4; ++j) {
            Vec8<T>& t = terms[i * 4 + j];
            for (int c = 0; c < 8; ++c) {
                const RowSel rj = sel[j][c];
                if (rj.col < 0) continue;
                const T v = src[rj.col];
                t[c] = (ri.sign * rj.sign > 0) ? v : neg(v);
            }
        }
    }
    return terms;
}

/**
 * Cycle-accurate functional model of the single-channel row-parallel
 * architecture: a 24-word shift section (three rows; the fourth row of a
 * half is taken from the input wires at the load instant), a 32-word
 * parallel-load bank holding one four-row half of Y_2D for four cycles, the
 * addition-free cross-wiring stage with its 32 eight-input selectors, and an
 * optional FRS tail.
 *
 * Register counts are modeled as words: 24 = three 8-word shift rows,
 * 32 = one four-row parallel-load bank.
 *
 * Semantics: one row per tick. Blocks are 8 consecutive rows and must start
 * at a tick index that is a multiple of 8; a misaligned first row or an idle
 * inside a partial block raises FramingError. The parallel load fires
 * exactly when the phase counter k (ticks since reset, counted from 1) has
 * k mod 4 == 0. Output rows appear one per tick after a fixed latency of 4
 * cycles (Transformed input) or 12 cycles (Raw input).
 *
 * In Raw mode the front adapter's block accumulation is upstream of the
 * budgeted buffer sections; storage_report() covers the buffer and
 * cross-wiring sections in both modes.
 *
 * Single-owner sequential; distinct instances may run in parallel.
 */
class Pipeline {
public:
    explicit Pipeline(PipelineConfig config = {}) : config_(config) { reset(); }

    void reset()
    {
        phase_ = 0;
        tick_index_ = 0;
        rows_in_block_ = 0;
        rows_latched_ = 0;
        for (auto& r : shift_) r = {};
        shift_valid_ = {false, false, false};
        bank_ = {};
        bank_valid_ = false;
        emit_remaining_ = 0;
        emit_base_ = 0;
        raw_count_ = 0;
        ywait_head_ = 0;
        ywait_size_ = 0;
        last_strobe_ = false;
    }

    const PipelineConfig& config() const { return config_; }

    long phase() const { return phase_; }

    /// Fixed delay from a block's first input row to its first output row.
    int latency() const { return config_.input == PipelineInput::Raw ? 12 : 4; }

    StorageReport storage_report() const { return {24, 32, 32}; }

    int fast_occupied() const
    {
        int rows = 0;
        for (const bool v : shift_valid_) rows += v ? 1 : 0;
        return rows * 8;
    }

    int slow_occupied() const { return bank_valid_ ? 32 : 0; }

    bool load_strobe() const { return last_strobe_; }

    /// Advances one clock cycle. `in` is one input row or idle.
    TickResult tick(const std::optional<IntVec8>& in)
    {
        ++phase_;
        const long tick_index = tick_index_++;

        // input framing
        if (in.has_value()) {
            if (rows_in_block_ == 0 && tick_index % 8 != 0)
                throw FramingError("aidct: block must start on an 8-aligned cycle");
            rows_in_block_ = (rows_in_block_ + 1) % 8;
        } else if (rows_in_block_ != 0) {
            throw FramingError("aidct: idle cycle inside a partial block");
        }

        // front adapter (Raw mode): rows of Y become available one per tick
        // starting the cycle after a full block has been collected
        std::optional<IntVec8> wire;
        if (config_.input == PipelineInput::Raw) {
            if (ywait_size_ > 0) {
                wire = ywait_[ywait_head_];
                ywait_head_ = (ywait_head_ + 1) % 8;
                --ywait_size_;
            }
        } else {
            wire = in;
        }

        // cross-wiring + combine reads the bank before the load edge
        TickResult result;
        if (emit_remaining_ > 0 && bank_valid_) {
            const int r = emit_base_ + (4 - emit_remaining_);
            result.out = compute_row(r);
            result.out_row_index = r;
            --emit_remaining_;
        }

        // parallel load: fires exactly when phase k mod 4 == 0
        last_strobe_ = (phase_ % 4 == 0);
        if (last_strobe_) {
            const bool complete = shift_valid_[2] && shift_valid_[1] && shift_valid_[0] &&
                                  wire.has_value();
            if (complete) {
                bank_[0] = shift_[2];
                bank_[1] = shift_[1];
                bank_[2] = shift_[0];
                bank_[3] = *wire;
                bank_valid_ = true;
                const long latched = rows_latched_ + 1; // including the wire row
                emit_base_ = (latched % 8 == 4) ? 0 : 4;
                emit_remaining_ = 4;
            } else {
                bank_valid_ = false;
                emit_remaining_ = 0;
            }
        }
        result.load_strobe = last_strobe_;

        // shift section advances
        shift_[2] = shift_[1];
        shift_[1] = shift_[0];
        shift_valid_[2] = shift_valid_[1];
        shift_valid_[1] = shift_valid_[0];
        if (wire.has_value()) {
            shift_[0] = *wire;
            shift_valid_[0] = true;
            ++rows_latched_;
        } else {
            shift_valid_[0] = false;
        }

        // raw-mode block accumulation; the transformed rows enter the
        // buffer beginning next cycle
        if (config_.input == PipelineInput::Raw && in.has_value()) {
            raw_block_[raw_count_++] = *in;
            if (raw_count_ == 8) {
                raw_count_ = 0;
                const IntBlock8 y = dct2d_core(raw_block_);
                for (int r = 0; r < 8; ++r) {
                    ywait_[(ywait_head_ + ywait_size_) % 8] = y[r];
                    ++ywait_size_;
                }
            }
        }

        return result;
    }

    /// Idles the pipeline until all in-flight rows have been emitted and
    /// returns them in order. A partial input block is a framing error.
    std::vector<PipelineOutRow> drain()
    {
        std::vector<PipelineOutRow> out;
        const int limit = latency() + 24;
        for (int i = 0; i < limit; ++i) {
            if (!busy()) break;
            if (auto r = tick(std::nullopt); r.out.has_value()) out.push_back(std::move(*r.out));
        }
        return out;
    }

private:
    bool busy() const
    {
        return emit_remaining_ > 0 || ywait_size_ > 0 || shift_valid_[0] || shift_valid_[1] ||
               shift_valid_[2];
    }

    PipelineOutRow compute_row(int r) const
    {
        const int half_base = r < 4 ? 0 : 4;
        const auto terms = crosswire_select_row(bank_, half_base, r);
        const auto& table = basis_product_table();

        PipelineOutRow row;
        for (int c = 0; c < 8; ++c) {
            AIQuad acc{};
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    if (const Int v = terms[i * 4 + j][c]; v != 0)
                        acc = quad_add(acc, quad_scale(table[i][j], v));
            row.quads[c] = acc;
        }
        if (config_.frs.has_value()) {
            IntVec8 fixed{};
            for (int c = 0; c < 8; ++c) fixed[c] = frs_reconstruct_scaled(row.quads[c], *config_.frs);
            row.fixed = fixed;
        }
        return row;
    }

    PipelineConfig config_;
    long phase_ = 0;
    long tick_index_ = 0;
    int rows_in_block_ = 0;
    long rows_latched_ = 0;

    std::array<IntVec8, 3> shift_{};  // 24 words at F_clk (newest first)
    std::array<bool, 3> shift_valid_{};
    std::array<IntVec8, 4> bank_{};   // 32 words at F_clk/8
    bool bank_valid_ = false;
    int emit_remaining_ = 0;
    int emit_base_ = 0;
    bool last_strobe_ = false;

    IntBlock8 raw_block_{};           // Raw-mode front adapter (upstream)
    int raw_count_ = 0;
    std::array<IntVec8, 8> ywait_{};
    int ywait_head_ = 0;
    int ywait_size_ = 0;
};

} // namespace aidct
