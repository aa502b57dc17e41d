#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "sdc/sat.hpp"

using namespace sdc;

namespace {

sat::Grid2<int64_t> random_grid2(std::mt19937_64& rng, int w, int h) {
    std::uniform_int_distribution<int64_t> val(-50, 50);
    sat::Grid2<int64_t> g{w, h, {}};
    g.values.resize(size_t(w) * h);
    for (auto& v : g.values) v = val(rng);
    return g;
}

int64_t brute2(const sat::Grid2<int64_t>& g, int a, int b, int c, int d) {
    int64_t s = 0;
    for (int y = c; y <= d; ++y)
        for (int x = a; x <= b; ++x) s += g.at(x, y);
    return s;
}

}  // namespace

TEST_CASE("single cell table") {
    sat::Grid2<int64_t> g{1, 1, {7}};
    const auto t = sat::build_sat_2d(g);
    CHECK(t.entry(1, 1) == 7);
    CHECK(t.region_sum(0, 0, 0, 0) == 7);
}

TEST_CASE("ones grid has product prefix sums") {
    sat::Grid2<int64_t> g{3, 3, std::vector<int64_t>(9, 1)};
    const auto t = sat::build_sat_2d(g);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) CHECK(t.entry(i, j) == int64_t(i) * j);
    CHECK(t.region_sum(0, 2, 0, 2) == 9);
    CHECK(t.region_sum(1, 2, 0, 1) == 4);  // (b-a+1)(d-c+1)
}

TEST_CASE("random 8x8 grid equals brute-force prefix sums") {
    std::mt19937_64 rng(7);
    const auto g = random_grid2(rng, 8, 8);
    const auto t = sat::build_sat_2d(g);
    for (int x = 1; x <= 8; ++x)
        for (int y = 1; y <= 8; ++y) CHECK(t.entry(x, y) == brute2(g, 0, x - 1, 0, y - 1));
}

TEST_CASE("random 16x16 boxes match brute force") {
    std::mt19937_64 rng(99);
    const auto g = random_grid2(rng, 16, 16);
    const auto t = sat::build_sat_2d(g);
    std::uniform_int_distribution<int> p(0, 15);
    for (int rep = 0; rep < 200; ++rep) {
        int a = p(rng), b = p(rng), c = p(rng), d = p(rng);
        if (a > b) std::swap(a, b);
        if (c > d) std::swap(c, d);
        CHECK(t.region_sum(a, b, c, d) == brute2(g, a, b, c, d));
    }
}

TEST_CASE("adjacent boxes are additive") {
    std::mt19937_64 rng(3);
    const auto g = random_grid2(rng, 12, 9);
    const auto t = sat::build_sat_2d(g);
    std::uniform_int_distribution<int> px(0, 11), py(0, 8);
    for (int rep = 0; rep < 100; ++rep) {
        int a = px(rng), b = px(rng), c = py(rng), d = py(rng);
        if (a > b) std::swap(a, b);
        if (c > d) std::swap(c, d);
        if (a == b) continue;
        std::uniform_int_distribution<int> mid(a, b - 1);
        const int m = mid(rng);
        CHECK(t.region_sum(a, b, c, d) ==
              t.region_sum(a, m, c, d) + t.region_sum(m + 1, b, c, d));
    }
}

TEST_CASE("range errors and empty grids") {
    sat::Grid2<int64_t> empty{0, 0, {}};
    CHECK_THROWS_AS(sat::build_sat_2d(empty), InvalidInput);
    sat::Grid2<int64_t> g{2, 2, {1, 2, 3, 4}};
    const auto t = sat::build_sat_2d(g);
    CHECK_THROWS_AS(t.region_sum(0, 2, 0, 1), RangeError);
    CHECK_THROWS_AS(t.region_sum(1, 0, 0, 1), RangeError);
    CHECK_THROWS_AS(t.region_sum(-1, 1, 0, 1), RangeError);
}

TEST_CASE("3-D table: full box, single cell, random boxes") {
    sat::Grid3<int64_t> ones{4, 4, 4, std::vector<int64_t>(64, 1)};
    const auto t = sat::build_sat_3d(ones);
    CHECK(t.region_sum(0, 3, 0, 3, 0, 3) == 64);

    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int64_t> val(-9, 9);
    sat::Grid3<int64_t> g{6, 6, 6, {}};
    g.values.resize(216);
    for (auto& v : g.values) v = val(rng);
    const auto tg = sat::build_sat_3d(g);
    CHECK(tg.region_sum(2, 2, 3, 3, 1, 1) == g.at(2, 3, 1));

    std::uniform_int_distribution<int> p(0, 5);
    for (int rep = 0; rep < 100; ++rep) {
        int a = p(rng), b = p(rng), c = p(rng), d = p(rng), e = p(rng), f = p(rng);
        if (a > b) std::swap(a, b);
        if (c > d) std::swap(c, d);
        if (e > f) std::swap(e, f);
        int64_t brute = 0;
        for (int z = e; z <= f; ++z)
            for (int y = c; y <= d; ++y)
                for (int x = a; x <= b; ++x) brute += g.at(x, y, z);
        CHECK(tg.region_sum(a, b, c, d, e, f) == brute);
    }
}

TEST_CASE("n-D k=1 reduces to cumulative differences") {
    sat::GridN<int64_t> g;
    g.dims = {10};
    g.values = {3, -1, 4, 1, -5, 9, 2, -6, 5, 3};
    const auto t = sat::build_sat_nd(g);
    for (int a = 0; a < 10; ++a)
        for (int b = a; b < 10; ++b) {
            int64_t brute = 0;
            for (int i = a; i <= b; ++i) brute += g.values[size_t(i)];
            sat::BoxN box{{a}, {b}};
            size_t corners = 0;
            CHECK(sat::region_sum_nd(t, box, &corners) == brute);
            CHECK(corners == 2);
        }
}

TEST_CASE("n-D k=2 agrees bit-for-bit with the 2-D table") {
    std::mt19937_64 rng(5);
    const auto g2 = random_grid2(rng, 7, 5);
    sat::GridN<int64_t> gn;
    gn.dims = {7, 5};
    gn.values = g2.values;
    const auto t2 = sat::build_sat_2d(g2);
    const auto tn = sat::build_sat_nd(gn);
    std::uniform_int_distribution<int> px(0, 6), py(0, 4);
    for (int rep = 0; rep < 100; ++rep) {
        int a = px(rng), b = px(rng), c = py(rng), d = py(rng);
        if (a > b) std::swap(a, b);
        if (c > d) std::swap(c, d);
        sat::BoxN box{{a, c}, {b, d}};
        CHECK(sat::region_sum_nd(tn, box) == t2.region_sum(a, b, c, d));
    }
}

TEST_CASE("n-D k=4 random boxes against brute force, 2^k corner evals") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int64_t> val(-20, 20);
    sat::GridN<int64_t> g;
    g.dims = {3, 3, 3, 3};
    g.values.resize(81);
    for (auto& v : g.values) v = val(rng);
    const auto t = sat::build_sat_nd(g);
    std::uniform_int_distribution<int> p(0, 2);
    for (int rep = 0; rep < 50; ++rep) {
        sat::BoxN box;
        for (int i = 0; i < 4; ++i) {
            int lo = p(rng), hi = p(rng);
            if (lo > hi) std::swap(lo, hi);
            box.lo.push_back(lo);
            box.hi.push_back(hi);
        }
        int64_t brute = 0;
        for (int i3 = box.lo[3]; i3 <= box.hi[3]; ++i3)
            for (int i2 = box.lo[2]; i2 <= box.hi[2]; ++i2)
                for (int i1 = box.lo[1]; i1 <= box.hi[1]; ++i1)
                    for (int i0 = box.lo[0]; i0 <= box.hi[0]; ++i0)
                        brute += g.values[size_t(((i3 * 3 + i2) * 3 + i1) * 3 + i0)];
        size_t corners = 0;
        CHECK(sat::region_sum_nd(t, box, &corners) == brute);
        CHECK(corners == 16);
    }
}

TEST_CASE("degenerate box returns the single cell") {
    sat::GridN<double> g;
    g.dims = {4, 3};
    g.values.resize(12);
    for (size_t i = 0; i < 12; ++i) g.values[i] = 0.5 * double(i) - 2.0;
    const auto t = sat::build_sat_nd(g);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 3; ++y) {
            sat::BoxN box{{x, y}, {x, y}};
            CHECK(sat::region_sum_nd(t, box) == doctest::Approx(g.values[size_t(y * 4 + x)]));
        }
}

TEST_CASE("floating grids meet the relative tolerance") {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> val(-10.0, 10.0);
    sat::Grid2<double> g{32, 32, {}};
    g.values.resize(1024);
    for (auto& v : g.values) v = val(rng);
    const auto t = sat::build_sat_2d(g);
    std::uniform_int_distribution<int> p(0, 31);
    for (int rep = 0; rep < 200; ++rep) {
        int a = p(rng), b = p(rng), c = p(rng), d = p(rng);
        if (a > b) std::swap(a, b);
        if (c > d) std::swap(c, d);
        double brute = 0.0;
        for (int y = c; y <= d; ++y)
            for (int x = a; x <= b; ++x) brute += g.at(x, y);
        const double got = t.region_sum(a, b, c, d);
        CHECK(std::fabs(got - brute) <= 1e-9 * std::max(1.0, std::fabs(brute)));
    }
}

TEST_CASE("dimension mismatch is rejected") {
    sat::GridN<double> g;
    g.dims = {2, 2};
    g.values = {1, 2, 3, 4};
    const auto t = sat::build_sat_nd(g);
    sat::BoxN box{{0}, {1}};
    CHECK_THROWS_AS(sat::region_sum_nd(t, box), InvalidInput);
}
