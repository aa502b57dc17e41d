#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "sdc/core.hpp"

namespace sdc {

// k-variate scalar field. When an antiderivative A is known (mixed partial
// d^k A / dx_1..dx_k = f), local cumulative distribution functions evaluate
// through corner differences of A; otherwise they fall back to nested
// adaptive quadrature (k <= 2).
struct ScalarField {
    int arity = 0;
    std::string name;
    std::function<double(std::span<const double>)> eval;
    std::function<double(std::span<const double>)> antiderivative;  // may be null

    double operator()(std::span<const double> x) const { return eval(x); }
    double at(double x, double y) const {
        const double p[2] = {x, y};
        return eval(std::span<const double>(p, 2));
    }
};

struct RealBox {
    std::vector<double> lo, hi;

    void validate() const;
    size_t dim() const { return lo.size(); }
};

// Oriented box integral of a field anchored at p: the signed iterated
// integral over the box spanned by p and the query point. Reversing a query
// coordinate across the anchor flips the sign along that axis, exactly like
// reversed limits of a 1-D integral.
class LocalCDF {
public:
    static LocalCDF analytic(ScalarField field, std::vector<double> anchor);
    static LocalCDF numeric(ScalarField field, std::vector<double> anchor, double abs_tol,
                            int max_depth = 40);

    double operator()(std::span<const double> x) const;
    double at(double x, double y) const {
        const double p[2] = {x, y};
        return (*this)(std::span<const double>(p, 2));
    }

    int arity() const { return field_.arity; }
    const std::vector<double>& anchor() const { return anchor_; }
    const ScalarField& field() const { return field_; }

private:
    LocalCDF() = default;
    ScalarField field_;
    std::vector<double> anchor_;
    bool numeric_ = false;
    double abs_tol_ = 1e-7;
    int max_depth_ = 40;
};

// 2^k signed corner sum; equals the integral of the field over the box and
// is independent of the CDF anchor. corner_evals counts CDF evaluations.
double box_integral_from_cdf(const LocalCDF& F, const RealBox& box,
                             size_t* corner_evals = nullptr);

// Convenience for building numeric CDFs (k in {1,2}).
LocalCDF make_numeric_cdf(const ScalarField& f, std::vector<double> anchor, double abs_tol);

// ---- adaptive quadrature (also used by the planar integrals) ----------------

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth = 40);

double adaptive_simpson_2d(const std::function<double(double, double)>& f, double ax, double bx,
                           double ay, double by, double abs_tol, int max_depth = 40);

// ---- field registry ----------------------------------------------------------

// Named fields: "const", "plane" (sum of coordinates), "xy" (product),
// "gauss" (separable Gaussian), "poly:<c0,c1,...>" (separable product of a
// 1-D polynomial). All carry analytic antiderivatives.
ScalarField get_field(const std::string& name, int arity);

std::vector<std::string> field_names();

}  // namespace sdc
