#include "aidct/io.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

using aidct::IntBlock8;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& bytes)
        : path(std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/" + name)
    {
        std::ofstream out(path, std::ios::binary);
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    }
    ~TempFile() { std::remove(path.c_str()); }
};

std::string pgm_bytes(int w, int h, int maxval, bool with_comment = false)
{
    std::ostringstream os;
    os << "P5\n";
    if (with_comment) os << "# test image\n";
    os << w << " " << h << "\n" << maxval << "\n";
    for (int i = 0; i < w * h; ++i) os.put(static_cast<char>(i % (maxval + 1)));
    return os.str();
}

} // namespace

TEST_CASE("CSV block parsing")
{
    std::istringstream good("# comment\n1,2,3,4,5,6,7,8\n" +
                            std::string("0 0 0 0 0 0 0 0\n") + "1;1;1;1;1;1;1;1\n" +
                            "-1,-2,-3,-4,-5,-6,-7,-8\n" + "9,9,9,9,9,9,9,9\n" +
                            "1,2,3,4,5,6,7,8\n" + "0,0,0,0,0,0,0,0\n" + "5,5,5,5,5,5,5,5\n");
    const IntBlock8 b = aidct::parse_block_csv(good, "test");
    CHECK(b[0][0] == 1);
    CHECK(b[0][7] == 8);
    CHECK(b[3][2] == -3);

    std::istringstream short_rows("1,2,3,4,5,6,7,8\n");
    CHECK_THROWS_AS(aidct::parse_block_csv(short_rows, "short"), aidct::IoError);

    std::istringstream wide("1,2,3,4,5,6,7,8,9\n");
    CHECK_THROWS_AS(aidct::parse_block_csv(wide, "wide"), aidct::IoError);

    std::istringstream bad("a,b,c,d,e,f,g,h\n");
    CHECK_THROWS_AS(aidct::parse_block_csv(bad, "bad"), aidct::IoError);

    CHECK_THROWS_AS(aidct::read_block_csv("/nonexistent/block.csv"), aidct::IoError);
}

TEST_CASE("PGM tiling, comments, level shift")
{
    TempFile f("aidct_t1.pgm", pgm_bytes(16, 8, 255, true));
    const auto blocks = aidct::read_pgm_blocks(f.path);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0][0][0] == 0);
    CHECK(blocks[1][0][0] == 8);  // second tile starts at column 8
    CHECK(blocks[0][1][0] == 16); // second image row

    const auto shifted = aidct::read_pgm_blocks(f.path, true);
    CHECK(shifted[0][0][0] == -128);

    const auto via_dispatch = aidct::read_blocks(f.path);
    CHECK(via_dispatch.size() == 2);
}

TEST_CASE("PGM error paths")
{
    TempFile not_p5("aidct_t2.pgm", "P2\n8 8\n255\n");
    CHECK_THROWS_AS(aidct::read_pgm_blocks(not_p5.path), aidct::IoError);

    TempFile bad_dims("aidct_t3.pgm", pgm_bytes(12, 8, 255));
    CHECK_THROWS_AS(aidct::read_pgm_blocks(bad_dims.path), aidct::IoError);

    TempFile big_maxval("aidct_t4.pgm", "P5\n8 8\n65535\n");
    CHECK_THROWS_AS(aidct::read_pgm_blocks(big_maxval.path), aidct::IoError);

    std::string truncated = pgm_bytes(8, 8, 255);
    truncated.resize(truncated.size() - 10);
    TempFile trunc("aidct_t5.pgm", truncated);
    CHECK_THROWS_AS(aidct::read_pgm_blocks(trunc.path), aidct::IoError);

    CHECK_THROWS_AS(aidct::read_blocks("picture.bmp"), aidct::IoError);
}

TEST_CASE("JSON shapes")
{
    nlohmann::json jq;
    aidct::to_json(jq, aidct::AIQuad{1, -2, 3, -4});
    CHECK(jq == nlohmann::json::array({1, -2, 3, -4}));

    aidct::SuccessReport rep;
    rep.tolerances = {10.0, 1.0};
    rep.success_pct = {99.0, 90.0};
    rep.excluded = 3;
    rep.total = 1000;
    nlohmann::json jr;
    aidct::to_json(jr, rep);
    CHECK(jr["success_pct"].size() == 2);
    CHECK(jr["excluded"] == 3);

    nlohmann::json js;
    aidct::to_json(js, aidct::StorageReport{24, 32, 32});
    CHECK(js["fast_words"] == 24);
}
