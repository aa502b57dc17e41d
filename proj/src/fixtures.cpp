#include "sdc/fixtures.hpp"

#include <cmath>
#include <map>

namespace sdc {

namespace {

Fixture plain(const std::string& name, std::function<double(double)> f,
              std::function<double(double)> df, double lo, double hi) {
    Fixture fx;
    fx.handle.name = name;
    fx.handle.eval = std::move(f);
    fx.handle.derivative = std::move(df);
    fx.lo = lo;
    fx.hi = hi;
    return fx;
}

SignSet make_set(std::initializer_list<Sign> signs) {
    SignSet s;
    for (Sign v : signs) s.add(v);
    return s;
}

double x2sin1x(double x) { return x == 0.0 ? 0.0 : x * x * std::sin(1.0 / x); }
double xsin1x(double x) { return x == 0.0 ? 0.0 : x * std::sin(1.0 / x); }

Fixture build(const std::string& name) {
    // Differentiable suite.
    if (name == "identity") return plain(name, [](double x) { return x; },
                                         [](double) { return 1.0; }, -2, 2);
    if (name == "linear") return plain(name, [](double x) { return 2 * x + 1; },
                                       [](double) { return 2.0; }, -2, 2);
    if (name == "parabola") return plain(name, [](double x) { return x * x; },
                                         [](double x) { return 2 * x; }, -1, 1);
    if (name == "parabola_shifted")
        return plain(name, [](double x) { return x * x + x; },
                     [](double x) { return 2 * x + 1; }, -2, 1);
    if (name == "cubic") return plain(name, [](double x) { return x * x * x; },
                                      [](double x) { return 3 * x * x; }, -1.5, 1.5);
    if (name == "cubic_minus_x")
        return plain(name, [](double x) { return x * x * x - x; },
                     [](double x) { return 3 * x * x - 1; }, -2, 2);
    if (name == "poly5")
        return plain(name, [](double x) { return x * x * x * x * x - 3 * x * x * x + x; },
                     [](double x) { return 5 * x * x * x * x - 9 * x * x + 1; }, -2, 2);
    if (name == "sin") return plain(name, [](double x) { return std::sin(x); },
                                    [](double x) { return std::cos(x); }, 0, 6.8);
    if (name == "cos") return plain(name, [](double x) { return std::cos(x); },
                                    [](double x) { return -std::sin(x); }, -3.3, 3.3);
    if (name == "exp") return plain(name, [](double x) { return std::exp(x); },
                                    [](double x) { return std::exp(x); }, -2, 2);
    if (name == "log_shifted") return plain(name, [](double x) { return std::log(3.0 + x); },
                                            [](double x) { return 1.0 / (3.0 + x); }, -2, 2);
    if (name == "sqrt_shifted")
        return plain(name, [](double x) { return std::sqrt(3.0 + x); },
                     [](double x) { return 0.5 / std::sqrt(3.0 + x); }, -2, 2);
    if (name == "tanh") return plain(name, [](double x) { return std::tanh(x); },
                                     [](double x) { double c = std::cosh(x); return 1.0 / (c * c); },
                                     -2, 2);
    if (name == "gauss") return plain(name, [](double x) { return std::exp(-x * x); },
                                      [](double x) { return -2 * x * std::exp(-x * x); }, -2, 2);

    // Kinks and jumps.
    if (name == "abs") {
        Fixture fx = plain(name, [](double x) { return std::fabs(x); }, nullptr, -1, 1);
        return fx;
    }
    if (name == "const") {
        Fixture fx = plain(name, [](double) { return 3.5; }, [](double) { return 0.0; }, -1, 1);
        return fx;
    }
    if (name == "step") {  // 1 on [0,1), 2 on [1,2]
        Fixture fx = plain(name, [](double x) { return x < 1.0 ? 1.0 : 2.0; }, nullptr, 0, 2);
        fx.continuous = false;
        return fx;
    }
    if (name == "ramp_jump") {  // x on [0,1], 3 beyond
        Fixture fx = plain(name, [](double x) { return x <= 1.0 ? x : 3.0; }, nullptr, 0, 2);
        fx.continuous = false;
        return fx;
    }
    if (name == "joint_second") {  // x, then 2x-1; kink at 1
        Fixture fx = plain(name, [](double x) { return x < 1.0 ? x : 2 * x - 1; }, nullptr, 0, 2);
        return fx;
    }
    if (name == "joint_third") {  // 1, then x; plateau meets ramp at 1
        Fixture fx = plain(name, [](double x) { return x < 1.0 ? 1.0 : x; }, nullptr, 0, 2);
        return fx;
    }
    if (name == "half_parabola") {  // 0 for x <= 0, x^2 beyond
        Fixture fx = plain(name, [](double x) { return x <= 0.0 ? 0.0 : x * x; }, nullptr, -1, 1);
        return fx;
    }
    if (name == "plateau_ramp") {  // ramp, plateau, ramp: exercises plateau witnesses
        Fixture fx = plain(name,
                           [](double x) {
                               if (x < 1.0) return x;
                               if (x < 2.0) return 1.0;
                               return x - 1.0;
                           },
                           nullptr, 0, 3);
        return fx;
    }

    // Oscillators with exact side-sign oracles at the origin.
    if (name == "x2sin1x") {
        Fixture fx = plain(name, x2sin1x, nullptr, -0.5, 0.5);
        fx.handle.exact_side_signs = [](double x, Side) -> std::optional<SignSet> {
            if (x != 0.0) return std::nullopt;
            return make_set({-1, 0, +1});  // sin(1/h) changes sign and vanishes densely
        };
        return fx;
    }
    if (name == "xsin1x") {
        Fixture fx = plain(name, xsin1x, nullptr, -0.5, 0.5);
        fx.handle.exact_side_signs = [](double x, Side) -> std::optional<SignSet> {
            if (x != 0.0) return std::nullopt;
            return make_set({-1, 0, +1});
        };
        return fx;
    }

    // Dense-set functions; every double is rational, so the float branch of
    // these fixtures is the rational row. The *_irrational variants model
    // evaluation at a conceptual irrational point through the oracle alone.
    if (name == "dirichlet") {
        Fixture fx = plain(name, [](double) { return 1.0; }, nullptr, -1, 1);
        fx.continuous = false;
        fx.handle.exact_side_signs = [](double, Side) -> std::optional<SignSet> {
            return make_set({0, -1});  // rationals keep the value, irrationals drop it
        };
        return fx;
    }
    if (name == "dirichlet_irrational") {
        Fixture fx = plain(name, [](double) { return 0.0; }, nullptr, -1, 1);
        fx.continuous = false;
        fx.handle.exact_side_signs = [](double, Side) -> std::optional<SignSet> {
            return make_set({+1, 0});
        };
        return fx;
    }
    if (name == "riemann") {  // 1/q at p/q, 0 off the rationals
        Fixture fx = plain(name, [](double) { return 0.0; }, nullptr, -1, 1);
        fx.continuous = false;
        fx.handle.exact_side_signs = [](double, Side) -> std::optional<SignSet> {
            return make_set({-1});  // nearby values are all smaller
        };
        return fx;
    }
    if (name == "riemann_irrational") {
        Fixture fx = plain(name, [](double) { return 0.0; }, nullptr, -1, 1);
        fx.continuous = false;
        fx.handle.exact_side_signs = [](double, Side) -> std::optional<SignSet> {
            return make_set({+1, 0});
        };
        return fx;
    }
    if (name == "band_three_piece") {
        // Discontinuous everywhere in the dense-set reading; increments stay
        // inside (-eps, eps) so the three-band quantizer reads 0 everywhere.
        const double eps = 0.3;
        Fixture fx = plain(name,
                           [eps](double x) {
                               if (x == std::floor(x)) return -eps / 3.0;
                               return 0.0;
                           },
                           nullptr, 0.1, 0.9);
        fx.continuous = false;
        return fx;
    }

    if (name.rfind("weathervane:v=", 0) == 0) {
        const std::string bits = name.substr(14);
        Fixture fx;
        fx.handle = make_weather_vane(PartialDetachmentsVector::from_string(bits));
        fx.lo = -1;
        fx.hi = 1;
        fx.continuous = false;
        return fx;
    }
    throw InvalidInput("unknown fixture: " + name);
}

}  // namespace

Fixture get_fixture(const std::string& name) { return build(name); }

std::vector<std::string> fixture_names() {
    return {"identity",    "linear",        "parabola",   "parabola_shifted",
            "cubic",       "cubic_minus_x", "poly5",      "sin",
            "cos",         "exp",           "log_shifted", "sqrt_shifted",
            "tanh",        "gauss",         "abs",        "const",
            "step",        "ramp_jump",     "joint_second", "joint_third",
            "half_parabola", "plateau_ramp", "x2sin1x",   "xsin1x",
            "dirichlet",   "dirichlet_irrational", "riemann", "riemann_irrational",
            "band_three_piece"};
}

std::vector<std::string> differentiable_fixture_names() {
    return {"identity", "linear", "parabola", "parabola_shifted", "cubic", "cubic_minus_x",
            "poly5",    "sin",    "cos",      "exp",              "log_shifted",
            "sqrt_shifted", "tanh", "gauss"};
}

std::vector<std::string> scan_fixture_names() {
    return {"parabola", "cubic_minus_x", "poly5", "sin", "cos", "gauss", "abs", "tanh"};
}

FunctionHandle scale_handle(const FunctionHandle& f, double c) {
    FunctionHandle out;
    out.name = f.name + "*c";
    auto base = f.eval;
    out.eval = [base, c](double x) { return c * base(x); };
    if (f.derivative) {
        auto d = f.derivative;
        out.derivative = [d, c](double x) { return c * d(x); };
    }
    if (f.exact_side_signs) {
        auto oracle = f.exact_side_signs;
        const Sign sc = sgn(c);
        out.exact_side_signs = [oracle, sc](double x, Side s) -> std::optional<SignSet> {
            auto set = oracle(x, s);
            if (!set) return std::nullopt;
            if (sc == +1) return set;
            SignSet flipped;
            if (sc == 0) {
                flipped.add(0);
                return flipped;
            }
            if (set->pos) flipped.add(-1);
            if (set->zero) flipped.add(0);
            if (set->neg) flipped.add(+1);
            return flipped;
        };
    }
    return out;
}

}  // namespace sdc
