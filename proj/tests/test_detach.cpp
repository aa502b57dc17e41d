#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "sdc/detach.hpp"
#include "sdc/fixtures.hpp"

using namespace sdc;

namespace {
const LimitConfig cfg;

FunctionHandle handle_of(const std::string& name) { return get_fixture(name).handle; }
}  // namespace

TEST_CASE("one-sided detachments of the basic examples") {
    CHECK(*detachment(handle_of("identity"), 0.0, SideSpec::Right, cfg) == +1);
    CHECK(*detachment(handle_of("abs"), 0.0, SideSpec::Both, cfg) == +1);

    const auto shifted = handle_of("parabola_shifted");  // x^2 + x
    CHECK(*detachment(shifted, -1.0, SideSpec::Right, cfg) == -1);
    CHECK(*detachment(shifted, 0.0, SideSpec::Right, cfg) == +1);
}

TEST_CASE("signposted detachment") {
    CHECK(*signposted_detachment(handle_of("cubic"), 0.0, cfg) == +1);
    CHECK_FALSE(signposted_detachment(handle_of("parabola"), 0.0, cfg));
    CHECK(*signposted_detachment(handle_of("linear"), 0.7, cfg) == +1);
}

TEST_CASE("sided detachments of pathological fixtures") {
    const auto dirichlet = handle_of("dirichlet");
    auto d = sided_detachments(dirichlet, 0.25, cfg);
    CHECK(d.sup_plus == 0);
    CHECK(d.inf_plus == -1);
    CHECK(d.sup_minus == 0);
    CHECK(d.inf_minus == -1);

    const auto dirichlet_irr = handle_of("dirichlet_irrational");
    d = sided_detachments(dirichlet_irr, 0.25, cfg);
    CHECK(d.sup_plus == +1);
    CHECK(d.inf_plus == 0);

    const auto riemann = handle_of("riemann");
    d = sided_detachments(riemann, 0.5, cfg);
    CHECK(d.sup_plus == -1);
    CHECK(d.inf_plus == -1);
    const auto riemann_irr = handle_of("riemann_irrational");
    d = sided_detachments(riemann_irr, 0.5, cfg);
    CHECK(d.sup_plus == +1);
    CHECK(d.inf_plus == 0);

    const auto osc = handle_of("x2sin1x");
    d = sided_detachments(osc, 0.0, cfg);
    CHECK(d.sup_plus == +1);
    CHECK(d.inf_plus == -1);
    CHECK(d.sup_minus == +1);
    CHECK(d.inf_minus == -1);
}

TEST_CASE("monotone sided detachments") {
    const auto d = sided_detachments(handle_of("exp"), 0.2, cfg);
    CHECK(d.sup_plus == +1);
    CHECK(d.inf_plus == +1);
    CHECK(d.sup_minus == -1);
    CHECK(d.inf_minus == -1);
}

TEST_CASE("partial detachments vectors") {
    CHECK(partial_detachments_vector(handle_of("sin"), 0.3, cfg).to_string() == "001100");
    CHECK(partial_detachments_vector(handle_of("parabola"), 0.0, cfg).to_string() == "100100");
    CHECK(partial_detachments_vector(handle_of("x2sin1x"), 0.0, cfg).to_string() == "111111");
}

TEST_CASE("disdetachment classification") {
    auto flags_of = [](const char* bits) {
        return classify_disdetachment(PartialDetachmentsVector::from_string(bits));
    };
    CHECK(flags_of("100100").to_string() == "1,2");
    CHECK(flags_of("111111").to_string() == "1,2,5,6");
    // The step fixture's vector at the jump.
    const auto step_vec = partial_detachments_vector(handle_of("step"), 1.0, cfg);
    CHECK(classify_disdetachment(step_vec).to_string() == "1,2,3,4");
    // Empty side block is invalid.
    PartialDetachmentsVector empty;
    CHECK_THROWS_AS(classify_disdetachment(empty), InvalidInput);
}

TEST_CASE("extrema indicator patterns") {
    CHECK(extrema_indicator(PartialDetachmentsVector::from_string("100100")) == 0);
    CHECK(extrema_indicator(PartialDetachmentsVector::from_string("001001")) == 0);
    CHECK(extrema_indicator(PartialDetachmentsVector::from_string("010010")) == 0);
    CHECK(extrema_indicator(PartialDetachmentsVector::from_string("100001")) == -1);
    CHECK(extrema_indicator(PartialDetachmentsVector::from_string("111111")) == -1);
    // Extremum patterns raise at most first/second type flags.
    for (const char* bits : {"100100", "001001", "010010"}) {
        const auto f = classify_disdetachment(PartialDetachmentsVector::from_string(bits));
        CHECK(f.detachable());
    }
}

TEST_CASE("tendency of the parabola and friends") {
    const auto parabola = handle_of("parabola");
    CHECK(*tendency(parabola, -0.5, cfg) == -1);
    CHECK(*tendency(parabola, 0.0, cfg) == 0);
    CHECK(*tendency(parabola, 0.5, cfg) == +1);
    CHECK(*tendency(handle_of("abs"), 0.0, cfg) == 0);
    CHECK(*tendency(handle_of("linear"), 0.1, cfg) == +1);
    CHECK_FALSE(tendency(handle_of("xsin1x"), 0.0, cfg));
}

TEST_CASE("tendency vanishes at extrema") {
    CHECK(*tendency(handle_of("sin"), M_PI / 2, cfg) == 0);
    CHECK(*tendency(handle_of("sin"), 3 * M_PI / 2, cfg) == 0);
    CHECK(*tendency(handle_of("cos"), 0.0, cfg) == 0);
    CHECK(*tendency(handle_of("gauss"), 0.0, cfg) == 0);
    CHECK(*tendency(handle_of("cubic_minus_x"), 1.0 / std::sqrt(3.0), cfg) == 0);
}

TEST_CASE("dini derivates") {
    const auto cubic = dini_derivates(handle_of("cubic"), 0.0, cfg);
    CHECK(std::fabs(cubic.upper_right) <= 1e-10);
    CHECK(std::fabs(cubic.upper_left) <= 1e-10);
    CHECK(std::fabs(cubic.lower_right) <= 1e-10);
    CHECK(std::fabs(cubic.lower_left) <= 1e-10);

    const auto av = dini_derivates(handle_of("abs"), 0.0, cfg);
    CHECK(av.upper_right == doctest::Approx(1.0));
    CHECK(av.lower_right == doctest::Approx(1.0));
    CHECK(av.upper_left == doctest::Approx(-1.0));
    CHECK(av.lower_left == doctest::Approx(-1.0));

    // x sin(1/x): the quotient tail oscillates between near +-1. The frozen
    // expectations below enumerate the same ladder directly.
    const auto osc = dini_derivates(handle_of("xsin1x"), 0.0, cfg);
    double qmax = -2, qmin = 2;
    for (int k = cfg.steps - cfg.tail_len; k < cfg.steps; ++k) {
        const double h = cfg.h(k);
        qmax = std::max(qmax, std::sin(1.0 / h));
        qmin = std::min(qmin, std::sin(1.0 / h));
    }
    CHECK(osc.upper_right == doctest::Approx(qmax));
    CHECK(osc.lower_right == doctest::Approx(qmin));
    CHECK(osc.upper_right > 0.5);  // the tail reaches well into both signs
    CHECK(osc.lower_right < 0.0);
}

TEST_CASE("dini bridge: derivate signs force detachments") {
    std::mt19937_64 rng(12);
    for (const std::string& name : differentiable_fixture_names()) {
        const Fixture fx = get_fixture(name);
        std::uniform_real_distribution<double> px(fx.lo + 0.05, fx.hi - 0.05);
        for (int rep = 0; rep < 20; ++rep) {
            const double x = px(rng);
            const auto d = dini_derivates(fx.handle, x, cfg);
            if (d.upper_right < 0)
                CHECK(*detachment(fx.handle, x, SideSpec::Right, cfg) == -1);
            if (d.lower_right > 0)
                CHECK(*detachment(fx.handle, x, SideSpec::Right, cfg) == +1);
            if (d.upper_left > 0)
                CHECK(*detachment(fx.handle, x, SideSpec::Left, cfg) == -1);
            if (d.lower_left < 0)
                CHECK(*detachment(fx.handle, x, SideSpec::Left, cfg) == +1);
        }
    }
}

TEST_CASE("joint point classification") {
    CHECK(classify_joint_point(handle_of("abs"), 0.0, cfg).type == JointType::First);
    CHECK(classify_joint_point(handle_of("joint_second"), 1.0, cfg).type == JointType::Second);
    CHECK(classify_joint_point(handle_of("joint_third"), 1.0, cfg).type == JointType::Third);
    // Differentiable, discontinuous and non-tendable points are not joints.
    CHECK(classify_joint_point(handle_of("parabola"), 0.0, cfg).type == JointType::NotJoint);
    CHECK(classify_joint_point(handle_of("parabola"), 0.0, cfg).reason == "differentiable");
    CHECK(classify_joint_point(handle_of("step"), 1.0, cfg).type == JointType::NotJoint);
    CHECK(classify_joint_point(handle_of("step"), 1.0, cfg).reason == "discontinuous");
    CHECK(classify_joint_point(handle_of("xsin1x"), 0.0, cfg).type == JointType::NotJoint);
}

TEST_CASE("generalized detachment") {
    const auto classic = QuantizationScheme::classic();
    // Reproduces the detachment on detachable fixtures (two-sided where the
    // detachment exists, one-sided everywhere else).
    for (const char* name : {"abs", "parabola", "const"}) {
        const auto h = handle_of(name);
        const auto plain = detachment(h, 0.0, SideSpec::Both, cfg);
        const auto gen = generalized_detachment(h, 0.0, SideSpec::Both, classic, cfg);
        REQUIRE(plain);
        REQUIRE(gen);
        CHECK(*gen == double(*plain));
    }
    for (const char* name : {"identity", "cubic", "exp"}) {
        const auto h = handle_of(name);
        for (auto side : {SideSpec::Left, SideSpec::Right}) {
            const auto plain = detachment(h, 0.1, side, cfg);
            const auto gen = generalized_detachment(h, 0.1, side, classic, cfg);
            REQUIRE(plain);
            REQUIRE(gen);
            CHECK(*gen == double(*plain));
        }
    }
    // Constant functions land in the cell containing zero.
    QuantizationScheme bands = QuantizationScheme::abs_bands({0.5}, {7.0, 9.0});
    CHECK(*generalized_detachment(handle_of("const"), 0.2, SideSpec::Both, bands, cfg) == 7.0);
    // The three-piece band fixture quantizes to zero everywhere.
    const auto piecey = handle_of("band_three_piece");
    const double eps = 0.3;
    QuantizationScheme eps_bands = QuantizationScheme::abs_bands({eps}, {0.0, 1.0});
    for (double x : {0.2, 0.3, 0.55, 0.7}) {
        const auto v = generalized_detachment(piecey, x, SideSpec::Both, eps_bands, cfg);
        REQUIRE(v);
        CHECK(*v == 0.0);
    }
}

TEST_CASE("quantized derivative") {
    const auto abs_scheme = QuantizationScheme::abs_bands({1.0}, {0.0, 1.0});
    CHECK(*quantized_derivative(handle_of("abs"), 0.0, SideSpec::Both, abs_scheme, cfg) == 0.0);

    const auto wide = QuantizationScheme::abs_bands({2.0}, {0.0, 1.0});
    CHECK(*quantized_derivative(handle_of("xsin1x"), 0.0, SideSpec::Both, wide, cfg) == 0.0);

    const auto five = handle_of("linear");  // slope 2
    const auto bands = QuantizationScheme::abs_bands({4.5, 5.5}, {0.0, 1.0, 2.0});
    FunctionHandle steep;
    steep.name = "5x";
    steep.eval = [](double x) { return 5.0 * x; };
    CHECK(*quantized_derivative(steep, 0.0, SideSpec::Both, bands, cfg) == 1.0);
    CHECK(*quantized_derivative(five, 0.0, SideSpec::Both, bands, cfg) == 0.0);
}

TEST_CASE("weather vane round trips and special cases") {
    const auto zero = PartialDetachmentsVector::from_string("010010");
    CHECK(weather_vane_vector(zero, cfg) == zero);
    const auto ones = PartialDetachmentsVector::from_string("111111");
    CHECK(weather_vane_vector(ones, cfg) == ones);
    const auto flags = classify_disdetachment(weather_vane_vector(ones, cfg));
    CHECK(flags.to_string() == "1,2,5,6");
    CHECK(flags.upper_detachable());
    CHECK(flags.lower_detachable());
    CHECK_FALSE(flags.detachable());
    CHECK_FALSE(flags.signposted_detachable());

    CHECK_THROWS_AS(weather_vane_vector(PartialDetachmentsVector::from_string("000100"), cfg),
                    InvalidInput);

    // The float evaluator alone (hashing onto channels) also recovers the
    // nonzero channels; the exact zero channel needs the oracle.
    const auto wv = make_weather_vane(PartialDetachmentsVector::from_string("101101"));
    FunctionHandle sampled = wv;
    sampled.exact_side_signs = nullptr;
    const auto vec = partial_detachments_vector(sampled, 0.0, cfg);
    CHECK(vec.bits[0]);
    CHECK(vec.bits[2]);
}

TEST_CASE("even/odd detachment symmetry on a probe lattice") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> px(0.05, 0.9);
    for (const char* name : {"parabola", "cos", "gauss", "abs"}) {  // even
        const auto h = handle_of(name);
        for (int rep = 0; rep < 25; ++rep) {
            const double x = px(rng);
            const auto a = detachment(h, -x, SideSpec::Right, cfg);
            const auto b = detachment(h, x, SideSpec::Left, cfg);
            REQUIRE(a);
            REQUIRE(b);
            CHECK(*a == *b);
        }
    }
    for (const char* name : {"cubic", "sin", "tanh", "identity"}) {  // odd
        const auto h = handle_of(name);
        for (int rep = 0; rep < 25; ++rep) {
            const double x = px(rng);
            const auto a = detachment(h, x, SideSpec::Right, cfg);
            const auto b = detachment(h, -x, SideSpec::Left, cfg);
            REQUIRE(a);
            REQUIRE(b);
            CHECK(*a == -*b);
        }
    }
}

TEST_CASE("scalar multiples scale the detachment by sgn(c)") {
    std::mt19937_64 rng(32);
    for (const char* name : {"parabola", "sin", "abs", "cubic_minus_x"}) {
        const Fixture fx = get_fixture(name);
        std::uniform_real_distribution<double> px(fx.lo + 0.1, fx.hi - 0.1);
        for (double c : {-2.0, -1.0, 0.5, 3.0}) {
            const auto scaled = scale_handle(fx.handle, c);
            for (int rep = 0; rep < 10; ++rep) {
                const double x = px(rng);
                for (Side side : {Side::Left, Side::Right}) {
                    const auto spec = side == Side::Left ? SideSpec::Left : SideSpec::Right;
                    const auto base = detachment(fx.handle, x, spec, cfg);
                    const auto got = detachment(scaled, x, spec, cfg);
                    REQUIRE(base);
                    REQUIRE(got);
                    CHECK(*got == sgn(c) * *base);
                }
            }
        }
    }
}

TEST_CASE("zero detachment on an interval means constant samples") {
    const auto h = handle_of("const");
    for (double x : {-0.8, -0.2, 0.1, 0.6}) {
        CHECK(*detachment(h, x, SideSpec::Both, cfg) == 0);
    }
    CHECK(h.eval(-0.8) == h.eval(0.6));
}

TEST_CASE("chain rule counterexample stays false") {
    // f(x)=|x|, g(x)=-|x|: (f o g) = |x| detaches to +1 at 0 while the
    // naive product rule would give -1.
    FunctionHandle fog;
    fog.name = "fog";
    fog.eval = [](double x) { return std::fabs(-std::fabs(x)); };
    const auto composed = detachment(fog, 0.0, SideSpec::Right, cfg);
    const auto f_at = detachment(handle_of("abs"), 0.0, SideSpec::Right, cfg);
    FunctionHandle g;
    g.eval = [](double x) { return -std::fabs(x); };
    const auto g_at = detachment(g, 0.0, SideSpec::Right, cfg);
    REQUIRE(composed);
    REQUIRE(f_at);
    REQUIRE(g_at);
    CHECK(*composed == +1);
    CHECK(*composed != *f_at * *g_at);
}

TEST_CASE("uniform tendency divisions") {
    const auto para = uniform_tendency_division(handle_of("parabola"), -1.0, 1.0, 2000, cfg);
    REQUIRE(para.size() == 3);
    CHECK(para[0] == -1.0);
    CHECK(std::fabs(para[1]) <= 1e-6);
    CHECK(para[2] == 1.0);

    const auto sine = uniform_tendency_division(handle_of("sin"), 0.0, 2 * M_PI, 2000, cfg);
    REQUIRE(sine.size() == 4);
    CHECK(std::fabs(sine[1] - M_PI / 2) <= 1e-6);
    CHECK(std::fabs(sine[2] - 3 * M_PI / 2) <= 1e-6);

    const auto mono = uniform_tendency_division(handle_of("exp"), -1.0, 1.0, 500, cfg);
    CHECK(mono == std::vector<double>{-1.0, 1.0});
}

TEST_CASE("semi-discrete fundamental checks") {
    const auto parab = semidiscrete_newton_leibniz(handle_of("parabola"), {-1.0, 0.0, 1.0}, cfg);
    CHECK(parab.lhs == doctest::Approx(0.0));
    CHECK(parab.rhs == doctest::Approx(0.0));

    // Monotone base case: integral of the tendency is the interval length.
    const auto mono = semidiscrete_newton_leibniz(handle_of("exp"), {-1.0, 1.0}, cfg);
    CHECK(mono.lhs == doctest::Approx(2.0));
    CHECK(mono.residual == doctest::Approx(0.0));

    const auto jump = semidiscrete_newton_leibniz(handle_of("ramp_jump"), {0.0, 1.0, 2.0}, cfg);
    CHECK(jump.lhs == 1.0);
    CHECK(jump.rhs == 0.0);
    CHECK(jump.residual == 1.0);

    CHECK_THROWS_AS(semidiscrete_newton_leibniz(handle_of("parabola"), {1.0, -1.0}, cfg),
                    InvalidInput);
}

TEST_CASE("tendency witnesses") {
    const double c1 = find_tendency_witness(handle_of("identity"), 0.0, 1.0, 0.5, cfg);
    CHECK(c1 == doctest::Approx(0.5));
    CHECK(*tendency(handle_of("identity"), c1, cfg) == +1);

    // x^3 - x from -2 to 2 through level 0: the witness must sit on a rising
    // crossing, verified independently by a dense scan.
    const auto cubicmx = handle_of("cubic_minus_x");
    const double c2 = find_tendency_witness(cubicmx, -2.0, 2.0, 0.0, cfg);
    CHECK(std::fabs(cubicmx.eval(c2)) <= 1e-6);
    CHECK(*tendency(cubicmx, c2, cfg) == +1);

    // Plateau fixture at the plateau level: the construction lands on the
    // plateau's right edge, where only the right detachment is +1.
    const auto plateau = handle_of("plateau_ramp");
    const double c3 = find_tendency_witness(plateau, 0.0, 3.0, 1.0, cfg);
    CHECK(std::fabs(plateau.eval(c3) - 1.0) <= 1e-6);
    CHECK(*detachment(plateau, c3, SideSpec::Right, cfg) == +1);
    CHECK(*detachment(plateau, c3, SideSpec::Left, cfg) != +1);
    CHECK(*tendency(plateau, c3, cfg) == +1);

    // Decreasing interval.
    const auto cosine = handle_of("cos");
    const double c4 = find_tendency_witness(cosine, 0.2, 3.0, 0.1, cfg);
    CHECK(std::fabs(cosine.eval(c4) - 0.1) <= 1e-6);
    CHECK(*tendency(cosine, c4, cfg) == -1);

    // Precondition failures.
    CHECK_THROWS_AS(find_tendency_witness(handle_of("step"), 0.0, 2.0, 1.5, cfg), NoWitness);
    CHECK_THROWS_AS(find_tendency_witness(handle_of("identity"), 0.0, 1.0, 2.0, cfg), NoWitness);
}

TEST_CASE("zero tendency witnesses") {
    const double c1 = find_zero_tendency_witness(handle_of("parabola"), -1.0, 1.0, cfg);
    CHECK(std::fabs(c1) <= 1e-9);
    CHECK(*tendency(handle_of("parabola"), c1, cfg) == 0);

    const double c2 = find_zero_tendency_witness(handle_of("sin"), 0.0, M_PI, cfg);
    CHECK(c2 == doctest::Approx(M_PI / 2).epsilon(1e-6));
    CHECK(*tendency(handle_of("sin"), c2, cfg) == 0);

    const double c3 = find_zero_tendency_witness(handle_of("const"), -1.0, 1.0, cfg);
    CHECK(*tendency(handle_of("const"), c3, cfg) == 0);

    CHECK_THROWS_AS(find_zero_tendency_witness(handle_of("identity"), 0.0, 1.0, cfg), NoWitness);
}
