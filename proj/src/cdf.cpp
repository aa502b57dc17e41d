#include "sdc/cdf.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sdc {

void RealBox::validate() const {
    if (lo.size() != hi.size() || lo.empty()) throw InvalidInput("RealBox: bad dimensions");
    for (size_t i = 0; i < lo.size(); ++i)
        if (!(lo[i] <= hi[i])) throw InvalidInput("RealBox: lo > hi");
}

// ---- adaptive Simpson --------------------------------------------------------

namespace {

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double simpson_rec(const std::function<double(double)>& f, double a, double m, double b,
                   double fa, double fm, double fb, double whole, double tol, int depth,
                   int max_depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(a, m, fa, flm, fm);
    const double right = simpson(m, b, fm, frm, fb);
    const double err = left + right - whole;
    if (std::fabs(err) <= 15.0 * tol || b - a < 1e-14 * (std::fabs(a) + std::fabs(b) + 1.0))
        return left + right + err / 15.0;
    if (depth >= max_depth)
        throw QuadratureError("adaptive_simpson: depth limit", std::fabs(err) / 15.0);
    return simpson_rec(f, a, lm, m, fa, flm, fm, left, tol * 0.5, depth + 1, max_depth) +
           simpson_rec(f, m, rm, b, fm, frm, fb, right, tol * 0.5, depth + 1, max_depth);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = simpson(a, b, fa, fm, fb);
    return simpson_rec(f, a, m, b, fa, fm, fb, whole, abs_tol, 0, max_depth);
}

double adaptive_simpson_2d(const std::function<double(double, double)>& f, double ax, double bx,
                           double ay, double by, double abs_tol, int max_depth) {
    if (ax == bx || ay == by) return 0.0;
    const double inner_tol = abs_tol / (2.0 * std::max(1.0, std::fabs(bx - ax)));
    auto outer = [&](double x) {
        return adaptive_simpson([&](double y) { return f(x, y); }, ay, by, inner_tol, max_depth);
    };
    return adaptive_simpson(outer, ax, bx, abs_tol * 0.5, max_depth);
}

// ---- LocalCDF -----------------------------------------------------------------

LocalCDF LocalCDF::analytic(ScalarField field, std::vector<double> anchor) {
    if (!field.antiderivative) throw InvalidInput("LocalCDF::analytic: field lacks antiderivative");
    if ((int)anchor.size() != field.arity) throw InvalidInput("LocalCDF: anchor arity mismatch");
    LocalCDF c;
    c.field_ = std::move(field);
    c.anchor_ = std::move(anchor);
    return c;
}

LocalCDF LocalCDF::numeric(ScalarField field, std::vector<double> anchor, double abs_tol,
                           int max_depth) {
    if (field.arity < 1 || field.arity > 2)
        throw InvalidInput("LocalCDF::numeric: nested quadrature limited to k <= 2");
    if ((int)anchor.size() != field.arity) throw InvalidInput("LocalCDF: anchor arity mismatch");
    if (!(abs_tol > 0.0)) throw InvalidInput("LocalCDF::numeric: abs_tol must be positive");
    LocalCDF c;
    c.field_ = std::move(field);
    c.anchor_ = std::move(anchor);
    c.numeric_ = true;
    c.abs_tol_ = abs_tol;
    c.max_depth_ = max_depth;
    return c;
}

double LocalCDF::operator()(std::span<const double> x) const {
    const size_t k = anchor_.size();
    if (x.size() != k) throw InvalidInput("LocalCDF: point arity mismatch");
    if (!numeric_) {
        // Signed corner sum of the antiderivative over the box spanned by the
        // anchor and x; equals the oriented iterated integral.
        double acc = 0.0;
        std::vector<double> corner(k);
        for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
            int parity = 0;
            for (size_t i = 0; i < k; ++i) {
                if (mask & (size_t(1) << i)) {
                    corner[i] = anchor_[i];
                    ++parity;
                } else {
                    corner[i] = x[i];
                }
            }
            const double v = field_.antiderivative(corner);
            acc += (parity & 1) ? -v : v;
        }
        return acc;
    }
    double orient = 1.0;
    for (size_t i = 0; i < k; ++i) {
        if (x[i] == anchor_[i]) return 0.0;
        if (x[i] < anchor_[i]) orient = -orient;
    }
    if (k == 1) {
        const double a = std::min(anchor_[0], x[0]), b = std::max(anchor_[0], x[0]);
        auto f1 = [&](double t) {
            return field_.eval(std::span<const double>(&t, 1));
        };
        return orient * adaptive_simpson(f1, a, b, abs_tol_, max_depth_);
    }
    const double ax = std::min(anchor_[0], x[0]), bx = std::max(anchor_[0], x[0]);
    const double ay = std::min(anchor_[1], x[1]), by = std::max(anchor_[1], x[1]);
    auto f2 = [&](double u, double v) { return field_.at(u, v); };
    return orient * adaptive_simpson_2d(f2, ax, bx, ay, by, abs_tol_, max_depth_);
}

double box_integral_from_cdf(const LocalCDF& F, const RealBox& box, size_t* corner_evals) {
    box.validate();
    const size_t k = box.dim();
    if ((int)k != F.arity()) throw InvalidInput("box_integral_from_cdf: dimension mismatch");
    double acc = 0.0;
    std::vector<double> corner(k);
    for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
        int parity = 0;
        for (size_t i = 0; i < k; ++i) {
            const double mid = 0.5 * (box.lo[i] + box.hi[i]);
            const double half = 0.5 * (box.hi[i] - box.lo[i]);
            if (mask & (size_t(1) << i)) {
                corner[i] = mid - half;  // lower face
                ++parity;
            } else {
                corner[i] = mid + half;
            }
        }
        acc += ((parity & 1) ? -1.0 : 1.0) * F(corner);
        if (corner_evals) ++*corner_evals;
    }
    return acc;
}

LocalCDF make_numeric_cdf(const ScalarField& f, std::vector<double> anchor, double abs_tol) {
    return LocalCDF::numeric(f, std::move(anchor), abs_tol);
}

// ---- field registry -----------------------------------------------------------

namespace {

ScalarField make_const(int k, double c) {
    ScalarField f;
    f.arity = k;
    f.name = "const";
    f.eval = [c](std::span<const double>) { return c; };
    f.antiderivative = [c](std::span<const double> x) {
        double prod = c;
        for (double v : x) prod *= v;
        return prod;
    };
    return f;
}

ScalarField make_plane(int k) {
    ScalarField f;
    f.arity = k;
    f.name = "plane";
    f.eval = [](std::span<const double> x) {
        double s = 0.0;
        for (double v : x) s += v;
        return s;
    };
    // Integral of sum x_i over the corner box: sum_i (x_i^2/2) prod_{j!=i} x_j.
    f.antiderivative = [](std::span<const double> x) {
        double total = 0.0;
        for (size_t i = 0; i < x.size(); ++i) {
            double term = 0.5 * x[i] * x[i];
            for (size_t j = 0; j < x.size(); ++j)
                if (j != i) term *= x[j];
            total += term;
        }
        return total;
    };
    return f;
}

ScalarField make_product(int k) {
    ScalarField f;
    f.arity = k;
    f.name = "xy";
    f.eval = [](std::span<const double> x) {
        double p = 1.0;
        for (double v : x) p *= v;
        return p;
    };
    f.antiderivative = [](std::span<const double> x) {
        double p = 1.0;
        for (double v : x) p *= 0.5 * v * v;
        return p;
    };
    return f;
}

ScalarField make_gauss(int k) {
    ScalarField f;
    f.arity = k;
    f.name = "gauss";
    f.eval = [](std::span<const double> x) {
        double s = 0.0;
        for (double v : x) s += v * v;
        return std::exp(-s);
    };
    const double half_sqrt_pi = 0.5 * std::sqrt(M_PI);
    f.antiderivative = [half_sqrt_pi](std::span<const double> x) {
        double p = 1.0;
        for (double v : x) p *= half_sqrt_pi * std::erf(v);
        return p;
    };
    return f;
}

ScalarField make_poly(int k, const std::vector<double>& coeffs) {
    if (coeffs.empty()) throw InvalidInput("poly field: need coefficients");
    ScalarField f;
    f.arity = k;
    f.name = "poly";
    auto p = [coeffs](double t) {
        double acc = 0.0;
        for (size_t i = coeffs.size(); i-- > 0;) acc = acc * t + coeffs[i];
        return acc;
    };
    auto P = [coeffs](double t) {  // antiderivative of p with P(0) = 0
        double acc = 0.0;
        for (size_t i = coeffs.size(); i-- > 0;) acc = (acc + coeffs[i] / double(i + 1)) * t;
        return acc;
    };
    f.eval = [p](std::span<const double> x) {
        double prod = 1.0;
        for (double v : x) prod *= p(v);
        return prod;
    };
    f.antiderivative = [P](std::span<const double> x) {
        double prod = 1.0;
        for (double v : x) prod *= P(v);
        return prod;
    };
    return f;
}

}  // namespace

ScalarField get_field(const std::string& name, int arity) {
    if (arity < 1) throw InvalidInput("get_field: arity must be >= 1");
    if (name == "const") return make_const(arity, 1.0);
    if (name == "plane") return make_plane(arity);
    if (name == "xy") return make_product(arity);
    if (name == "gauss") return make_gauss(arity);
    if (name.rfind("poly:", 0) == 0) {
        std::vector<double> coeffs;
        std::stringstream ss(name.substr(5));
        std::string tok;
        while (std::getline(ss, tok, ',')) coeffs.push_back(std::stod(tok));
        return make_poly(arity, coeffs);
    }
    throw InvalidInput("unknown field: " + name);
}

std::vector<std::string> field_names() { return {"const", "plane", "xy", "gauss", "poly:<c0,c1,...>"}; }

}  // namespace sdc
