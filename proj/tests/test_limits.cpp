#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "sdc/limits.hpp"

using namespace sdc;

TEST_CASE("tail sign set of a constant tail") {
    LimitConfig cfg;
    std::vector<Sign> samples(8, +1);
    const SignSet s = tail_sign_set(samples, cfg);
    CHECK(s.singleton());
    CHECK(s.only() == +1);
}

TEST_CASE("alternating signs keep both partial limits") {
    LimitConfig cfg;
    std::vector<Sign> samples;
    for (int n = 0; n < 40; ++n) samples.push_back(n % 2 ? -1 : +1);
    const SignSet s = tail_sign_set(samples, cfg);
    CHECK(s.pos);
    CHECK(s.neg);
    CHECK_FALSE(s.zero);
}

TEST_CASE("only the tail matters") {
    LimitConfig cfg;
    std::vector<Sign> samples(32, +1);
    for (int i = 0; i < 8; ++i) samples.push_back(i % 2 ? +1 : -1);
    const SignSet s = tail_sign_set(samples, cfg);
    CHECK(s.pos);
    CHECK(s.neg);
    CHECK_FALSE(s.zero);
}

TEST_CASE("tail sign set ignores arbitrary prefixes") {
    LimitConfig cfg;
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> sign(-1, 1);
    std::uniform_int_distribution<int> len(0, 30);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<Sign> tail(cfg.tail_len);
        for (auto& s : tail) s = sign(rng);
        std::vector<Sign> tail_only = tail;
        // Pad to the minimum sample count.
        while ((int)tail_only.size() < cfg.steps)
            tail_only.insert(tail_only.begin(), tail.front());
        std::vector<Sign> prefixed;
        const int extra = len(rng);
        for (int i = 0; i < extra; ++i) prefixed.push_back(sign(rng));
        prefixed.insert(prefixed.end(), tail_only.begin(), tail_only.end());
        CHECK(tail_sign_set(prefixed, cfg) == tail_sign_set(tail_only, cfg));
    }
}

TEST_CASE("too few samples is an error") {
    LimitConfig cfg;
    std::vector<Sign> samples(3, 0);
    CHECK_THROWS_AS(tail_sign_set(samples, cfg), InsufficientData);
}

TEST_CASE("approx limit of a constant sequence") {
    LimitConfig cfg;
    std::vector<double> samples(20, 4.25);
    const auto lim = approx_limit(samples, cfg);
    REQUIRE(lim);
    CHECK(*lim == 4.25);
}

TEST_CASE("approx limit of 1/n sampled geometrically") {
    LimitConfig cfg;
    cfg.steps = 41;
    cfg.zero_tol = 1e-9;  // the tail is near zero at this depth, not equal to it
    std::vector<double> samples;
    for (int k = 0; k <= 40; ++k) samples.push_back(1.0 / std::pow(2.0, k));
    const auto lim = approx_limit(samples, cfg);
    REQUIRE(lim);
    CHECK(std::fabs(*lim) <= 1e-9);
}

TEST_CASE("alternating sequence has no limit") {
    LimitConfig cfg;
    std::vector<double> samples;
    for (int n = 0; n < 40; ++n) samples.push_back(n % 2 ? -1.0 : 1.0);
    CHECK_FALSE(approx_limit(samples, cfg));
}

TEST_CASE("approx limit scales with the sequence") {
    LimitConfig cfg;
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> noise(-1e-14, 1e-14);
    std::vector<double> samples;
    for (int i = 0; i < 20; ++i) samples.push_back(2.0 + noise(rng));
    for (double c : {-2.0, 0.5, 3.0}) {
        std::vector<double> scaled = samples;
        for (auto& v : scaled) v *= c;
        const auto base = approx_limit(samples, cfg);
        const auto lim = approx_limit(scaled, cfg);
        REQUIRE(base);
        REQUIRE(lim);
        CHECK(*lim == doctest::Approx(c * *base));
    }
}

TEST_CASE("sign samples of the identity at 0") {
    LimitConfig cfg;
    const auto s = one_sided_sign_samples([](double x) { return x; }, 0.0, Side::Right, cfg);
    for (Sign v : s) CHECK(v == +1);
}

TEST_CASE("sign samples of x^2 from the left are all positive") {
    LimitConfig cfg;
    const auto s = one_sided_sign_samples([](double x) { return x * x; }, 0.0, Side::Left, cfg);
    for (Sign v : s) CHECK(v == +1);
}

TEST_CASE("oscillator sign samples mix both signs") {
    // The geometric ladder never hits sin(1/h) = 0 exactly, so the sampled
    // tail carries both nonzero signs; the exact zero channel only exists in
    // the fixture oracle.
    LimitConfig cfg;
    auto f = [](double x) { return x == 0.0 ? 0.0 : x * x * std::sin(1.0 / x); };
    const auto s = one_sided_sign_samples(f, 0.0, Side::Right, cfg);
    const SignSet tail = tail_sign_set(s, cfg);
    CHECK(tail.pos);
    CHECK(tail.neg);
}

TEST_CASE("monotone functions stabilize on the first step") {
    LimitConfig cfg;
    const auto s = one_sided_sign_samples([](double x) { return 2 * x + 1; }, 0.3, Side::Right, cfg);
    for (size_t i = 1; i < s.size(); ++i) CHECK(s[i] == s[0]);
}

TEST_CASE("evaluation failures carry the offending step") {
    LimitConfig cfg;
    auto f = [](double x) { return x > 0.001 ? std::nan("") : x; };
    try {
        one_sided_sign_samples(f, 0.0, Side::Right, cfg);
        FAIL("expected EvalError");
    } catch (const EvalError& e) {
        CHECK(e.offending_h > 0.001);
    }
}

TEST_CASE("config validation") {
    LimitConfig cfg;
    cfg.ratio = 1.5;
    CHECK_THROWS_AS(cfg.validate(), InvalidInput);
    cfg = LimitConfig{};
    cfg.tail_len = 1;
    CHECK_THROWS_AS(cfg.validate(), InvalidInput);
    cfg = LimitConfig{};
    cfg.steps = 4;
    CHECK_THROWS_AS(cfg.validate(), InvalidInput);
}
