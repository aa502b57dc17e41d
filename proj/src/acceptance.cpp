#include "sdc/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <random>
#include <sstream>

#include "sdc/bench.hpp"
#include "sdc/cdf.hpp"
#include "sdc/curve.hpp"
#include "sdc/detach.hpp"
#include "sdc/fixtures.hpp"
#include "sdc/sat.hpp"
#include "sdc/slanted.hpp"

namespace sdc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(3);
    ss << v;
    return ss.str();
}

Curve2D make_circle(size_t n, double radius, Point2 center) {
    std::vector<double> t(n), x(n), y(n);
    for (size_t i = 0; i < n; ++i) {
        const double a = 2.0 * M_PI * double(i) / double(n);
        t[i] = double(i);
        x[i] = center.x + radius * std::cos(a);
        y[i] = center.y + radius * std::sin(a);
    }
    return make_curve(std::move(t), std::move(x), std::move(y), true);
}

GRD make_staircase(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> ncols(2, 7);
    const int k = ncols(rng);
    std::vector<double> h(k);
    std::uniform_int_distribution<int> hd(1, 12);
    for (int i = 0; i < k; ++i) {
        do {
            h[i] = hd(rng) * 0.5;
        } while (i > 0 && h[i] == h[i - 1]);
    }
    std::uniform_real_distribution<double> shift(-3.0, 3.0);
    const double ox = std::round(shift(rng) * 2.0) / 2.0;
    const double oy = std::round(shift(rng) * 2.0) / 2.0;
    GRD g;
    g.vertices.push_back({ox + 0, oy + 0});
    g.vertices.push_back({ox + k, oy + 0});
    g.vertices.push_back({ox + k, oy + h[k - 1]});
    for (int i = k - 1; i >= 1; --i) {
        g.vertices.push_back({ox + i, oy + h[i]});
        g.vertices.push_back({ox + i, oy + h[i - 1]});
    }
    g.vertices.push_back({ox + 0, oy + h[0]});
    g.validate();
    return g;
}

// The figure fixture: an L-shaped hexagon with a unit square pinned to it at
// one point, giving nine distinct vertices and one coefficient of -2.
GRD nine_vertex_grd() {
    GRD g;
    g.vertices = {{0, 0}, {2, 0},  {2, -1}, {3, -1}, {3, 0},
                  {2, 0}, {2, 1},  {1, 1},  {1, 2},  {0, 2}};
    return g;
}

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << what;
        }
    }
};

// ---- criterion 1: SAT exactness -------------------------------------------------

CriterionResult criterion_sat(std::mt19937_64& rng) {
    CriterionResult r{1, "SAT region sums match brute force exactly", false, ""};
    const auto t0 = Clock::now();
    Check c;
    std::uniform_int_distribution<int64_t> val(-1000, 1000);

    for (int rep = 0; rep < 300; ++rep) {
        std::uniform_int_distribution<int> dim(1, 64);
        const int w = dim(rng), h = dim(rng);
        sat::Grid2<int64_t> g{w, h, {}};
        g.values.resize(size_t(w) * h);
        for (auto& v : g.values) v = val(rng);
        const auto table = sat::build_sat_2d(g);
        std::uniform_int_distribution<int> px(0, w - 1), py(0, h - 1);
        int a = px(rng), b = px(rng), cc = py(rng), d = py(rng);
        if (a > b) std::swap(a, b);
        if (cc > d) std::swap(cc, d);
        int64_t brute = 0;
        for (int yy = cc; yy <= d; ++yy)
            for (int xx = a; xx <= b; ++xx) brute += g.at(xx, yy);
        c.expect(table.region_sum(a, b, cc, d) == brute, "2d mismatch");
    }
    for (int rep = 0; rep < 150; ++rep) {
        std::uniform_int_distribution<int> dim(1, 16);
        const int nx = dim(rng), ny = dim(rng), nz = dim(rng);
        sat::Grid3<int64_t> g{nx, ny, nz, {}};
        g.values.resize(size_t(nx) * ny * nz);
        for (auto& v : g.values) v = val(rng);
        const auto table = sat::build_sat_3d(g);
        auto pick = [&](int n) {
            std::uniform_int_distribution<int> p(0, n - 1);
            int lo = p(rng), hi = p(rng);
            if (lo > hi) std::swap(lo, hi);
            return std::pair<int, int>(lo, hi);
        };
        const auto [a, b] = pick(nx);
        const auto [cc, d] = pick(ny);
        const auto [e, f] = pick(nz);
        int64_t brute = 0;
        for (int zz = e; zz <= f; ++zz)
            for (int yy = cc; yy <= d; ++yy)
                for (int xx = a; xx <= b; ++xx) brute += g.at(xx, yy, zz);
        c.expect(table.region_sum(a, b, cc, d, e, f) == brute, "3d mismatch");
    }
    for (int rep = 0; rep < 50; ++rep) {
        sat::GridN<int64_t> g;
        g.dims = {3, 3, 3, 3};
        g.values.resize(81);
        for (auto& v : g.values) v = val(rng);
        const auto table = sat::build_sat_nd(g);
        sat::BoxN box;
        std::uniform_int_distribution<int> p(0, 2);
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
        c.expect(sat::region_sum_nd(table, box, &corners) == brute, "4d mismatch");
        c.expect(corners == 16, "4d corner count");
    }
    const double dt = seconds_since(t0);
    c.expect(dt < 5.0, "runtime " + fmt(dt) + "s >= 5s");
    r.pass = c.ok;
    r.detail = c.ok ? "500 boxes exact, " + fmt(dt) + "s" : c.detail.str();
    return r;
}

// ---- criterion 2: n-D corner formula ---------------------------------------------

CriterionResult criterion_corner_formula(std::mt19937_64& rng) {
    CriterionResult r{2, "n-D corner formula matches analytic box integrals", false, ""};
    Check c;
    std::uniform_real_distribution<double> coord(-2.0, 2.0);

    // Independent route: per-axis Gauss-Legendre integral of the polynomial,
    // multiplied across axes (the fields are separable).
    auto axis_integral = [](const std::vector<double>& coeffs, double lo, double hi) {
        static const double gx[6] = {-0.9324695142031521, -0.6612093864662645,
                                     -0.2386191860831969, 0.2386191860831969,
                                     0.6612093864662645,  0.9324695142031521};
        static const double gw[6] = {0.1713244923791704, 0.3607615730481386,
                                     0.4679139345726910, 0.4679139345726910,
                                     0.3607615730481386, 0.1713244923791704};
        const double hw = 0.5 * (hi - lo), cx = 0.5 * (hi + lo);
        double acc = 0.0;
        for (int i = 0; i < 6; ++i) {
            const double x = cx + hw * gx[i];
            double p = 0.0;
            for (size_t k = coeffs.size(); k-- > 0;) p = p * x + coeffs[k];
            acc += gw[i] * p;
        }
        return hw * acc;
    };

    struct Poly {
        const char* name;
        std::vector<double> coeffs;
    };
    const Poly polys[] = {
        {"poly:0.5,-1,2,0.25", {0.5, -1.0, 2.0, 0.25}},
        {"poly:1,3,0,-0.5", {1.0, 3.0, 0.0, -0.5}},
    };

    for (const Poly& poly : polys) {
        for (int k = 1; k <= 3; ++k) {
            const ScalarField f = get_field(poly.name, k);
            for (int rep = 0; rep < 100; ++rep) {
                RealBox box;
                for (int i = 0; i < k; ++i) {
                    double lo = coord(rng), hi = coord(rng);
                    if (lo > hi) std::swap(lo, hi);
                    box.lo.push_back(lo);
                    box.hi.push_back(hi);
                }
                double oracle = 1.0;
                for (int i = 0; i < k; ++i)
                    oracle *= axis_integral(poly.coeffs, box.lo[i], box.hi[i]);

                double prev = 0.0;
                for (int a = 0; a < 5; ++a) {
                    std::vector<double> anchor(k);
                    for (int i = 0; i < k; ++i) anchor[i] = coord(rng);
                    const LocalCDF F = LocalCDF::analytic(f, anchor);
                    const double got = box_integral_from_cdf(F, box);
                    const double scale = std::max(1.0, std::fabs(oracle));
                    c.expect(std::fabs(got - oracle) <= 1e-9 * scale, "k=" + std::to_string(k));
                    if (a > 0)
                        c.expect(std::fabs(got - prev) <= 1e-9 * scale, "anchor dependence");
                    prev = got;
                }
            }
        }
    }
    r.pass = c.ok;
    r.detail = c.ok ? "2 fields, k=1..3, 100 boxes each, 5 anchors, rel err <= 1e-9"
                    : c.detail.str();
    return r;
}

// ---- criterion 3: detachment-derivative corollary ----------------------------------

CriterionResult criterion_derivative_corollary(std::mt19937_64& rng) {
    CriterionResult r{3, "f' != 0 forces one-sided detachments to +-sgn(f')", false, ""};
    Check c;
    const LimitConfig cfg;
    int tested = 0;
    for (const std::string& name : differentiable_fixture_names()) {
        const Fixture fx = get_fixture(name);
        std::uniform_real_distribution<double> px(fx.lo + 0.05, fx.hi - 0.05);
        int done = 0;
        for (int tries = 0; tries < 4000 && done < 100; ++tries) {
            const double x = px(rng);
            const double d = fx.handle.derivative(x);
            if (std::fabs(d) <= 1e-3) continue;
            ++done;
            ++tested;
            const Sign want = sgn(d);
            const auto right = detachment(fx.handle, x, SideSpec::Right, cfg);
            const auto left = detachment(fx.handle, x, SideSpec::Left, cfg);
            const bool ok = right && left && *right == want && *left == -want;
            c.expect(ok, name + " at " + fmt(x));
            if (!ok) break;
        }
        c.expect(done == 100, name + ": too few valid sample points");
    }
    r.pass = c.ok;
    r.detail = c.ok ? std::to_string(tested) + " points across 14 fixtures, 100% agreement"
                    : c.detail.str();
    return r;
}

// ---- criterion 4: worked values ----------------------------------------------------

CriterionResult criterion_worked_values(std::mt19937_64&) {
    CriterionResult r{4, "worked detachment values reproduced exactly", false, ""};
    Check c;
    const LimitConfig cfg;

    const Fixture shifted = get_fixture("parabola_shifted");  // x^2 + x
    auto right_at = [&](double x) {
        const auto d = detachment(shifted.handle, x, SideSpec::Right, cfg);
        return d ? *d : Sign(99);
    };
    c.expect(right_at(-1.0) == -1, "x^2+x at -1");
    c.expect(right_at(0.0) == +1, "x^2+x at 0");
    c.expect(right_at(-0.5) == +1, "x^2+x at -1/2");
    c.expect(right_at(-0.5 - 1e-3) == -1, "x^2+x left of threshold");
    c.expect(right_at(-0.5 + 1e-3) == +1, "x^2+x right of threshold");

    const Fixture parabola = get_fixture("parabola");
    c.expect(partial_detachments_vector(parabola.handle, 0.0, cfg).to_string() == "100100",
             "parabola vector");

    const Fixture osc = get_fixture("x2sin1x");
    const auto vec = partial_detachments_vector(osc.handle, 0.0, cfg);
    c.expect(vec.to_string() == "111111", "x^2 sin(1/x) vector");
    c.expect(classify_disdetachment(vec).to_string() == "1,2,5,6", "x^2 sin(1/x) flags");

    const Fixture step = get_fixture("step");
    const auto step_vec = partial_detachments_vector(step.handle, 1.0, cfg);
    c.expect(classify_disdetachment(step_vec).to_string() == "1,2,3,4", "step flags");

    const Fixture sine = get_fixture("sin");
    auto vec_at = [&](double x) {
        return partial_detachments_vector(sine.handle, x, cfg).to_string();
    };
    c.expect(vec_at(0.3) == "001100", "sin interior rise");
    c.expect(vec_at(M_PI / 2) == "001001", "sin maximum");
    c.expect(vec_at(2.0) == "100001", "sin interior fall");
    c.expect(vec_at(3 * M_PI / 2) == "100100", "sin minimum");

    r.pass = c.ok;
    r.detail = c.ok ? "threshold, vectors and flags all exact" : c.detail.str();
    return r;
}

// ---- criterion 5: weather vane -----------------------------------------------------

CriterionResult criterion_weather_vane(std::mt19937_64&) {
    CriterionResult r{5, "weather vane round-trips all 49 admissible vectors", false, ""};
    Check c;
    const LimitConfig cfg;
    int admissible = 0;
    for (int mask = 0; mask < 64; ++mask) {
        PartialDetachmentsVector v;
        for (int i = 0; i < 6; ++i) v.bits[i] = (mask >> (5 - i)) & 1;
        if (!v.admissible()) continue;
        ++admissible;
        const auto back = weather_vane_vector(v, cfg);
        c.expect(back == v, "round trip " + v.to_string());
    }
    c.expect(admissible == 49, "admissible count " + std::to_string(admissible));

    auto flags_of = [&](const char* bits) {
        return classify_disdetachment(PartialDetachmentsVector::from_string(bits));
    };
    const auto zero = flags_of("010010");
    c.expect(!zero.any() && zero.detachable() && zero.signposted_detachable(), "zero function");
    const auto ones = flags_of("111111");
    c.expect(ones.to_string() == "1,2,5,6" && ones.upper_detachable() && ones.lower_detachable() &&
                 !ones.detachable() && !ones.signposted_detachable(),
             "all ones");
    c.expect(flags_of("100100").to_string() == "1,2" && flags_of("100100").detachable(),
             "detachable pair 100100");
    c.expect(flags_of("001001").to_string() == "1,2", "detachable pair 001001");
    const auto sp = flags_of("100001");
    c.expect(sp.to_string() == "3,4" && sp.signposted_detachable() && !sp.detachable() &&
                 !sp.upper_detachable() && !sp.lower_detachable(),
             "signposted pair 100001");
    c.expect(flags_of("001100").to_string() == "3,4", "signposted pair 001100");
    const auto mixed = flags_of("100110");
    c.expect(mixed.upper_detachable() && !mixed.lower_detachable() && !mixed.detachable() &&
                 !mixed.signposted_detachable(),
             "upper-only case 100110");
    const auto neither = flags_of("100011");
    c.expect(!neither.upper_detachable() && !neither.lower_detachable(), "neither case 100011");
    const auto cross = flags_of("101101");
    c.expect(cross.to_string() == "1,2,5,6", "crossed case 101101");

    r.pass = c.ok;
    r.detail = c.ok ? "49 round trips + case analysis" : c.detail.str();
    return r;
}

// ---- criterion 6: extrema indicator vs dense scan ----------------------------------

CriterionResult criterion_extrema_scan(std::mt19937_64&) {
    CriterionResult r{6, "extrema indicator agrees with dense-neighborhood oracle", false, ""};
    Check c;
    const LimitConfig cfg;
    const int lattice = 10000;
    long checked = 0, extrema_found = 0;

    for (const std::string& name : scan_fixture_names()) {
        const Fixture fx = get_fixture(name);
        const double step = (fx.hi - fx.lo) / lattice;
        for (int i = 1; i < lattice; ++i) {
            const double x = fx.lo + i * step;
            // Oracle: direct value comparisons on the ladder, no sign machinery.
            bool all_up = true, all_down = true, all_flat = true;
            const double fxv = fx.handle.eval(x);
            for (int k = 0; k < cfg.steps; ++k) {
                const double h = cfg.h(k);
                for (const double s : {+1.0, -1.0}) {
                    const double d = fx.handle.eval(x + s * h) - fxv;
                    if (d <= 0) all_up = false;
                    if (d >= 0) all_down = false;
                    if (d != 0) all_flat = false;
                }
            }
            const bool oracle_extremum = all_up || all_down || all_flat;
            const int ind = extrema_indicator(partial_detachments_vector(fx.handle, x, cfg));
            ++checked;
            if (oracle_extremum) ++extrema_found;
            if ((ind == 0) != oracle_extremum) {
                c.expect(false, name + " disagrees at x=" + fmt(x));
                break;
            }
        }
    }

    // Known extrema must be flagged (they sit on the probe lattice above only
    // occasionally, so probe them directly).
    struct Known {
        const char* fixture;
        double x;
    };
    const double s5 = std::sqrt((9.0 + std::sqrt(61.0)) / 10.0);
    const double s5b = std::sqrt((9.0 - std::sqrt(61.0)) / 10.0);
    const Known known[] = {
        {"parabola", 0.0},          {"abs", 0.0},
        {"gauss", 0.0},             {"cos", 0.0},
        {"cos", M_PI},              {"cos", -M_PI},
        {"sin", M_PI / 2},          {"sin", 3 * M_PI / 2},
        {"cubic_minus_x", 1.0 / std::sqrt(3.0)},
        {"cubic_minus_x", -1.0 / std::sqrt(3.0)},
        {"poly5", s5},              {"poly5", -s5},
        {"poly5", s5b},             {"poly5", -s5b},
    };
    for (const Known& k : known) {
        const Fixture fx = get_fixture(k.fixture);
        const int ind = extrema_indicator(partial_detachments_vector(fx.handle, k.x, cfg));
        c.expect(ind == 0, std::string(k.fixture) + " extremum missed at " + fmt(k.x));
        ++extrema_found;
    }

    r.pass = c.ok;
    r.detail = c.ok ? std::to_string(checked) + " lattice points, " +
                          std::to_string(extrema_found) + " extrema, zero disagreements"
                    : c.detail.str();
    return r;
}

// ---- criterion 7: semi-discrete Newton-Leibniz -------------------------------------

CriterionResult criterion_newton_leibniz(std::mt19937_64&) {
    CriterionResult r{7, "tendency integral matches the detachment boundary sum", false, ""};
    Check c;
    const LimitConfig cfg;

    const auto parab = semidiscrete_newton_leibniz(get_fixture("parabola").handle,
                                                   {-1.0, 0.0, 1.0}, cfg);
    c.expect(std::fabs(parab.residual) <= 1e-9, "x^2 residual " + fmt(parab.residual));

    const auto sine = semidiscrete_newton_leibniz(
        get_fixture("sin").handle, {0.0, M_PI / 2, 3 * M_PI / 2, 2 * M_PI}, cfg);
    c.expect(std::fabs(sine.residual) <= 1e-9, "sin residual " + fmt(sine.residual));

    const auto av = semidiscrete_newton_leibniz(get_fixture("abs").handle, {-1.0, 0.0, 1.0}, cfg);
    c.expect(std::fabs(av.residual) <= 1e-9, "abs residual " + fmt(av.residual));

    // The discontinuous example: the two sides genuinely disagree by 1.
    const auto jump = semidiscrete_newton_leibniz(get_fixture("ramp_jump").handle,
                                                  {0.0, 1.0, 2.0}, cfg);
    c.expect(jump.lhs == 1.0, "jump lhs " + fmt(jump.lhs));
    c.expect(jump.rhs == 0.0, "jump rhs " + fmt(jump.rhs));

    r.pass = c.ok;
    r.detail = c.ok ? "continuous residuals <= 1e-9; jump example lhs=1, rhs=0" : c.detail.str();
    return r;
}

// ---- criterion 8: Lagrange/Rolle witnesses -----------------------------------------

CriterionResult criterion_witnesses(std::mt19937_64& rng) {
    CriterionResult r{8, "mean-value and Rolle witnesses verified", false, ""};
    Check c;
    const LimitConfig cfg;

    struct Case {
        const char* fixture;
        double a, b;
    };
    const Case cases[] = {
        {"identity", 0.0, 1.0},       {"linear", -1.0, 1.0},   {"exp", -1.0, 1.0},
        {"tanh", -1.5, 1.5},          {"sin", 0.2, 1.3},       {"cubic_minus_x", -2.0, 2.0},
        {"sqrt_shifted", -2.0, 2.0},  {"log_shifted", -2.0, 2.0},
        {"plateau_ramp", 0.0, 3.0},   {"cos", 0.2, 3.0},
    };
    std::uniform_int_distribution<size_t> pick(0, std::size(cases) - 1);
    std::uniform_real_distribution<double> unit(0.05, 0.95);
    int done = 0;
    while (done < 50) {
        const Case& k = cases[pick(rng)];
        const Fixture fx = get_fixture(k.fixture);
        const double fa = fx.handle.eval(k.a), fb = fx.handle.eval(k.b);
        const double v = fa + (fb - fa) * unit(rng);
        double cv;
        try {
            cv = find_tendency_witness(fx.handle, k.a, k.b, v, cfg);
        } catch (const NoWitness& e) {
            c.expect(false, std::string(k.fixture) + ": " + e.what());
            break;
        }
        const double fcv = fx.handle.eval(cv);
        c.expect(std::fabs(fcv - v) <= 1e-6, std::string(k.fixture) + " value error");
        const auto tau = tendency(fx.handle, cv, cfg);
        c.expect(tau && *tau == sgn(fb - fa), std::string(k.fixture) + " tendency at witness");
        ++done;
        if (!c.ok) break;
    }

    const Case rolle_cases[] = {
        {"parabola", -1.0, 1.0}, {"sin", 0.0, M_PI},      {"cos", -1.2, 1.2},
        {"gauss", -1.0, 1.0},    {"abs", -1.0, 1.0},      {"const", -1.0, 1.0},
        {"parabola_shifted", -1.5, 0.5},
    };
    for (const Case& k : rolle_cases) {
        const Fixture fx = get_fixture(k.fixture);
        double cv;
        try {
            cv = find_zero_tendency_witness(fx.handle, k.a, k.b, cfg);
        } catch (const NoWitness& e) {
            c.expect(false, std::string(k.fixture) + " rolle: " + e.what());
            continue;
        }
        c.expect(cv > k.a && cv < k.b, std::string(k.fixture) + " rolle interior");
        const auto tau = tendency(fx.handle, cv, cfg);
        c.expect(tau && *tau == 0, std::string(k.fixture) + " rolle tendency");
    }

    r.pass = c.ok;
    r.detail = c.ok ? "50 mean-value witnesses + 7 Rolle witnesses" : c.detail.str();
    return r;
}

// ---- criterion 9: GRD corner formula ----------------------------------------------

CriterionResult criterion_grd(std::mt19937_64& rng) {
    CriterionResult r{9, "GRD corner coefficients and integrals", false, ""};
    Check c;

    {
        const GRD g = nine_vertex_grd();
        std::vector<int> coeffs;
        for (const auto& [v, a] : grd_alpha(g)) coeffs.push_back(a);
        std::sort(coeffs.begin(), coeffs.end());
        const std::vector<int> want = {-2, -1, -1, -1, 1, 1, 1, 1, 1};
        c.expect(coeffs == want, "nine-vertex coefficient multiset");
        c.expect(grd_alpha_by_decomposition(g) == grd_alpha(g), "nine-vertex routes agree");

        const ScalarField one = get_field("const", 2);
        const LocalCDF F = LocalCDF::analytic(one, {0.0, 0.0});
        c.expect(std::fabs(grd_integral(F, g) - g.signed_area()) <= 1e-9, "nine-vertex area");
    }

    const char* field_names_[3] = {"const", "plane", "xy"};
    std::uniform_real_distribution<double> pa(-4.0, 4.0);
    for (int rep = 0; rep < 200; ++rep) {
        const GRD g = make_staircase(rng);
        const auto quad = grd_alpha(g);
        const auto deco = grd_alpha_by_decomposition(g);
        c.expect(quad == deco, "alpha routes differ on staircase " + std::to_string(rep));
        const ScalarField f = get_field(field_names_[rep % 3], 2);
        const LocalCDF F = LocalCDF::analytic(f, {pa(rng), pa(rng)});
        const double via_alpha = grd_integral(F, g);
        double via_rects = 0.0;
        for (const RealBox& b : grd_rectangles(g)) via_rects += box_integral_from_cdf(F, b);
        const double scale = std::max(1.0, std::fabs(via_rects));
        c.expect(std::fabs(via_alpha - via_rects) <= 1e-9 * scale,
                 "integral mismatch on staircase " + std::to_string(rep));
        if (!c.ok) break;
    }

    r.pass = c.ok;
    r.detail = c.ok ? "figure multiset + 200 staircases, both routes, rel err <= 1e-9"
                    : c.detail.str();
    return r;
}

// ---- criterion 10: extended formula on the circle ----------------------------------

CriterionResult criterion_extended_formula(std::mt19937_64&) {
    CriterionResult r{10, "extended formula on the circle", false, ""};
    Check c;

    const ScalarField one = get_field("const", 2);
    const ScalarField xy = get_field("xy", 2);
    const Point2 center{0.7, 0.4};

    const Curve2D circle4k = make_circle(4096, 1.0, center);
    const Curve2D circle8k = make_circle(8192, 1.0, center);

    const LocalCDF Fone = LocalCDF::analytic(one, {-2.0, -2.0});
    const double area4k = slanted_integral(Fone, one, circle4k);
    const double area8k = slanted_integral(Fone, one, circle8k);
    c.expect(std::fabs(area4k - M_PI) <= 1e-3, "area at 4096: " + fmt(area4k));

    const LocalCDF Fxy = LocalCDF::analytic(xy, {0.0, 0.0});
    const ExtendedCheck chk = extended_formula_check(xy, Fxy, circle4k);
    c.expect(std::fabs(chk.residual) <= 1e-3, "xy residual " + fmt(chk.residual));
    // Against the analytic disk value as well: integral of xy over the disk.
    const double analytic_xy = center.x * center.y * M_PI;
    c.expect(std::fabs(chk.slanted_total - analytic_xy) <= 1e-3, "xy vs analytic");

    const double res4 = std::fabs(area4k - M_PI), res8 = std::fabs(area8k - M_PI);
    c.expect(res8 <= 0.6 * res4, "discretization decay: " + fmt(res8) + " vs " + fmt(res4));

    r.pass = c.ok;
    r.detail = c.ok ? "|area-pi|=" + fmt(res4) + " at 4096, decays to " + fmt(res8) + " at 8192"
                    : c.detail.str();
    return r;
}

// ---- criterion 11: division / anchor / rotation invariance --------------------------

CriterionResult criterion_invariance(std::mt19937_64& rng) {
    CriterionResult r{11, "division, anchor and rotation invariance", false, ""};
    Check c;

    const ScalarField xy = get_field("xy", 2);
    const Curve2D circle = make_circle(1024, 1.0, {0.7, 0.4});
    const LocalCDF F1 = LocalCDF::analytic(xy, {0.0, 0.0});
    const double base = slanted_integral(F1, xy, circle);

    std::uniform_int_distribution<size_t> pick(0, circle.size() - 1);
    for (int rep = 0; rep < 5; ++rep) {
        std::vector<size_t> splits;
        for (int i = 0; i < 7; ++i) splits.push_back(pick(rng));
        const double split_val = slanted_integral_with_splits(F1, xy, circle, splits);
        c.expect(std::fabs(split_val - base) <= 1e-9, "division changed the total");
    }

    std::uniform_real_distribution<double> pa(-5.0, 5.0);
    for (int rep = 0; rep < 5; ++rep) {
        const LocalCDF Fp = LocalCDF::analytic(xy, {pa(rng), pa(rng)});
        const double v = slanted_integral(Fp, xy, circle);
        c.expect(std::fabs(v - base) <= 1e-9, "anchor changed the total");
    }

    const ScalarField one = get_field("const", 2);
    const Curve2D circle4k = make_circle(4096, 1.0, {0.7, 0.4});
    const double rotated =
        rotated_slanted_integral(one, circle4k, M_PI / 7.0, {-2.0, -2.0}, 1e-7);
    c.expect(std::fabs(rotated - M_PI) <= 2e-3, "rotated circle area " + fmt(rotated));

    r.pass = c.ok;
    r.detail = c.ok ? "splits and anchors <= 1e-9 drift; rotation by pi/7 within 2e-3"
                    : c.detail.str();
    return r;
}

// ---- criterion 12: benchmark report -------------------------------------------------

CriterionResult criterion_bench(std::mt19937_64&) {
    CriterionResult r{12, "sign-vs-quotient benchmark report", false, ""};
    const BenchReport b = run_sign_vs_quotient_bench(1 << 21);
    r.pass = b.sign_ns_per_sample > 0.0 && b.quotient_ns_per_sample > 0.0;
    r.detail = "sign " + fmt(b.sign_ns_per_sample) + " ns, quotient " +
               fmt(b.quotient_ns_per_sample) + " ns, ratio " + fmt(b.ratio) + " (report only)";
    return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<CriterionResult> out;
    out.push_back(criterion_sat(rng));
    out.push_back(criterion_corner_formula(rng));
    out.push_back(criterion_derivative_corollary(rng));
    out.push_back(criterion_worked_values(rng));
    out.push_back(criterion_weather_vane(rng));
    out.push_back(criterion_extrema_scan(rng));
    out.push_back(criterion_newton_leibniz(rng));
    out.push_back(criterion_witnesses(rng));
    out.push_back(criterion_grd(rng));
    out.push_back(criterion_extended_formula(rng));
    out.push_back(criterion_invariance(rng));
    out.push_back(criterion_bench(rng));
    return out;
}

bool report_acceptance(const std::vector<CriterionResult>& results, std::ostream& out) {
    bool all = true;
    for (const CriterionResult& r : results) {
        out << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name << " ("
            << r.detail << ")\n";
        all = all && r.pass;
    }
    return all;
}

}  // namespace sdc
