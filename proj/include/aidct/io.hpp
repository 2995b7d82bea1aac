#pragma once

#include "aidct/ai_quad.hpp"
#include "aidct/checked.hpp"
#include "aidct/harness.hpp"
#include "aidct/pipeline.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace aidct {

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// One 8x8 block from CSV text: 8 rows of 8 comma- or space-separated
/// integers. Blank lines and lines starting with '#' are skipped.
inline IntBlock8 parse_block_csv(std::istream& in, const std::string& name)
{
    IntBlock8 block{};
    int row = 0;
    std::string line;
    while (row < 8 && std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        for (char& ch : line)
            if (ch == ',' || ch == ';' || ch == '\t') ch = ' ';
        std::istringstream ls(line);
        for (int col = 0; col < 8; ++col) {
            long long v;
            if (!(ls >> v))
                throw IoError("aidct: " + name + ": row " + std::to_string(row) +
                              " needs 8 integers");
            block[row][col] = v;
        }
        long long extra;
        if (ls >> extra)
            throw IoError("aidct: " + name + ": row " + std::to_string(row) +
                          " has more than 8 values");
        ++row;
    }
    if (row != 8) throw IoError("aidct: " + name + ": expected 8 rows of 8 integers");
    return block;
}

inline IntBlock8 read_block_csv(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw IoError("aidct: cannot open " + path);
    return parse_block_csv(in, path);
}

/// Binary PGM (P5, maxval <= 255) tiled into 8x8 blocks, row-major tile
/// order. Dimensions must be multiples of 8. Optionally level-shifts
/// samples by -128.
inline std::vector<IntBlock8> read_pgm_blocks(const std::string& path, bool level_shift = false)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("aidct: cannot open " + path);

    auto next_token = [&]() -> std::string {
        std::string tok;
        int c;
        while ((c = in.get()) != EOF) {
            if (c == '#') {
                while ((c = in.get()) != EOF && c != '\n') {}
                continue;
            }
            if (std::isspace(c)) {
                if (!tok.empty()) break;
                continue;
            }
            tok.push_back(static_cast<char>(c));
        }
        if (tok.empty()) throw IoError("aidct: " + path + ": truncated PGM header");
        return tok;
    };

    if (next_token() != "P5") throw IoError("aidct: " + path + ": not a binary (P5) PGM");
    const long width = std::stol(next_token());
    const long height = std::stol(next_token());
    const long maxval = std::stol(next_token());
    if (width <= 0 || height <= 0) throw IoError("aidct: " + path + ": bad dimensions");
    if (maxval <= 0 || maxval > 255)
        throw IoError("aidct: " + path + ": only 8-bit PGM is supported");
    if (width % 8 != 0 || height % 8 != 0)
        throw IoError("aidct: " + path + ": dimensions must be multiples of 8");

    std::vector<unsigned char> pixels(static_cast<std::size_t>(width) * height);
    in.read(reinterpret_cast<char*>(pixels.data()), static_cast<std::streamsize>(pixels.size()));
    if (in.gcount() != static_cast<std::streamsize>(pixels.size()))
        throw IoError("aidct: " + path + ": truncated pixel data");

    std::vector<IntBlock8> blocks;
    blocks.reserve(static_cast<std::size_t>((width / 8) * (height / 8)));
    for (long by = 0; by < height; by += 8) {
        for (long bx = 0; bx < width; bx += 8) {
            IntBlock8 b{};
            for (int r = 0; r < 8; ++r)
                for (int c = 0; c < 8; ++c) {
                    Int v = pixels[static_cast<std::size_t>((by + r) * width + bx + c)];
                    if (level_shift) v -= 128;
                    b[r][c] = v;
                }
            blocks.push_back(b);
        }
    }
    return blocks;
}

/// Reads blocks from a .csv (single block) or .pgm (tiled) file.
inline std::vector<IntBlock8> read_blocks(const std::string& path, bool level_shift = false)
{
    const auto dot = path.rfind('.');
    const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
    if (ext == ".csv" || ext == ".txt") return {read_block_csv(path)};
    if (ext == ".pgm") return read_pgm_blocks(path, level_shift);
    throw IoError("aidct: unsupported input format: " + path + " (use .csv or .pgm)");
}

// --- JSON serialization ------------------------------------------------------

inline void to_json(nlohmann::json& j, const AIQuad& q)
{
    j = nlohmann::json::array({q.a, q.b, q.c, q.d});
}

inline nlohmann::json quad_block_json(const AIBlock8& b)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : b) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& q : row) {
            nlohmann::json jq;
            to_json(jq, q);
            r.push_back(jq);
        }
        rows.push_back(r);
    }
    return rows;
}

inline void to_json(nlohmann::json& j, const SuccessReport& r)
{
    j = nlohmann::json{{"tolerances_pct", r.tolerances},
                       {"success_pct", r.success_pct},
                       {"excluded", r.excluded},
                       {"total", r.total}};
}

inline void to_json(nlohmann::json& j, const StorageReport& r)
{
    j = nlohmann::json{
        {"fast_words", r.fast_words}, {"slow_words", r.slow_words}, {"mux_count", r.mux_count}};
}

inline void to_json(nlohmann::json& j, const CalibrationResult& r)
{
    nlohmann::json rows = nlohmann::json::array();
    for (int u = 0; u < 8; ++u) {
        rows.push_back(nlohmann::json{{"output_row", u},
                                      {"matched_dct_row", r.rows[u].matched_row},
                                      {"scale", r.rows[u].scale},
                                      {"max_rel_deviation", r.rows[u].max_rel_dev}});
    }
    j = nlohmann::json{{"consistent", r.consistent}, {"rows", rows}};
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (r.consistent) {
        j["perm"] = r.map.perm;
        nlohmann::json scale = nlohmann::json::array();
        for (const auto& row : r.map.scale) scale.push_back(row);
        j["scale"] = scale;
    }
}

} // namespace aidct
