#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "sdc/io.hpp"

using namespace sdc;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("/tmp/sdc_test_" + name) {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("grid csv round trip") {
    TempFile f("grid.csv", "1,2,3\n4,5,6\n");
    const auto g = io::read_grid_csv(f.path);
    CHECK(g.integral);
    CHECK(g.igrid.width == 3);
    CHECK(g.igrid.height == 2);
    CHECK(g.igrid.at(2, 1) == 6);
    CHECK(g.dgrid.at(0, 1) == 4.0);
}

TEST_CASE("float grids fall back to doubles") {
    TempFile f("gridf.csv", "1.5,2\n3,4\n");
    const auto g = io::read_grid_csv(f.path);
    CHECK_FALSE(g.integral);
    CHECK(g.dgrid.at(0, 0) == 1.5);
}

TEST_CASE("ragged and malformed grids carry line numbers") {
    TempFile f("bad.csv", "1,2\n3\n");
    try {
        io::read_grid_csv(f.path);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    TempFile g("bad2.csv", "1,x\n");
    CHECK_THROWS_AS(io::read_grid_csv(g.path), ParseError);
}

TEST_CASE("boxes csv") {
    TempFile f("boxes.csv", "# comment\n0,2,0,2\n1,1,0,1\n");
    const auto boxes = io::read_boxes_csv(f.path);
    REQUIRE(boxes.size() == 2);
    CHECK(boxes[0].b == 2);
    CHECK(boxes[1].a == 1);
}

TEST_CASE("nd grid json") {
    TempFile f("grid.json", R"({"dims":[2,2],"values":[1,2,3,4]})");
    const auto g = io::read_grid_nd_json(f.path);
    CHECK(g.dims == std::vector<int>{2, 2});
    CHECK(g.values.size() == 4);
    TempFile b("boxes.json", R"({"boxes":[{"lo":[0,0],"hi":[1,1]}]})");
    const auto boxes = io::read_boxes_nd_json(b.path);
    REQUIRE(boxes.size() == 1);
    CHECK(boxes[0].hi == std::vector<int>{1, 1});
}

TEST_CASE("series csv with header") {
    TempFile f("series.csv", "t,value\n0,1\n1,2\n2,1\n");
    const auto s = io::read_series_csv(f.path);
    REQUIRE(s.t.size() == 3);
    CHECK(s.value[1] == 2.0);
}

TEST_CASE("curve csv, both column layouts") {
    TempFile f3("curve3.csv", "0,0,0\n1,1,0\n2,1,1\n");
    const auto c3 = io::read_curve_csv(f3.path, false);
    CHECK(c3.size() == 3);
    CHECK(c3.t[2] == 2.0);

    TempFile f2("curve2.csv", "0,0\n1,0\n1,1\n0,1\n");
    const auto c2 = io::read_curve_csv(f2.path, true);
    CHECK(c2.closed);
    CHECK(c2.size() == 4);
}

TEST_CASE("grd json validates") {
    TempFile f("grd.json", R"({"vertices":[[0,0],[1,0],[1,1],[0,1]]})");
    const auto g = io::read_grd_json(f.path);
    CHECK(g.vertices.size() == 4);
    TempFile bad("grdbad.json", R"({"vertices":[[0,0],[1,1],[0,2],[-1,1]]})");
    CHECK_THROWS_AS(io::read_grd_json(bad.path), ParseError);
}

TEST_CASE("limit config from json") {
    TempFile f("cfg.json", R"({"steps": 16, "zero_tol": 1e-10})");
    LimitConfig base;
    const auto cfg = io::read_limit_config_json(f.path, base);
    CHECK(cfg.steps == 16);
    CHECK(cfg.zero_tol == 1e-10);
    CHECK(cfg.h0 == base.h0);
    TempFile bad("cfgbad.json", R"({"ratio": 2.0})");
    CHECK_THROWS_AS(io::read_limit_config_json(bad.path, base), InvalidInput);
}

TEST_CASE("missing files") {
    CHECK_THROWS_AS(io::read_grid_csv("/tmp/definitely_not_here.csv"), ParseError);
}
