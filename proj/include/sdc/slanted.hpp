#pragma once

#include <map>
#include <vector>

#include "sdc/cdf.hpp"
#include "sdc/curve.hpp"

namespace sdc {

// Axis-parallel two-leg path between two points. The positive flavor runs
// horizontally first (elbow shares x with the end point), the negative
// flavor vertically first.
struct StraightPath {
    Point2 start, elbow, end;
};

struct StraightPaths {
    StraightPath positive, negative;
};

StraightPaths straight_paths(Point2 a, Point2 b);

// One monotone run of a tendable curve, together with the tendencies the
// full curve assigns to its endpoints. Endpoint tendencies always come from
// the surrounding curve, never from the isolated run; that convention is
// what makes the piece sums additive.
struct TendedPiece {
    std::vector<Point2> pts;
    Sign beta = 0;        // run tendency
    int orientation = 1;  // local orientation (bookkeeping; the left path is set by beta)
    Sign beta0 = 0, beta1 = 0;
};

enum class PartialDomain { Plus, Minus };

// Integral of the field over the region enclosed by the piece (piecewise
// linear between samples) and one of its straight paths. Plus is the path on
// the left-hand side of the directed piece.
double partial_domain_integral(const ScalarField& f, const TendedPiece& piece,
                               PartialDomain which);

// Region term minus the elbow term plus half-weighted endpoint terms.
double slanted_piece(const LocalCDF& F, const ScalarField& f, const TendedPiece& piece);

// Sum of slanted_piece over a maximal-run division of the curve; the value
// is independent of the division (tested, not assumed).
double slanted_integral(const LocalCDF& F, const ScalarField& f, const Curve2D& curve);

// Same, but splitting additionally at the given sample indices.
double slanted_integral_with_splits(const LocalCDF& F, const ScalarField& f,
                                    const Curve2D& curve, const std::vector<size_t>& splits);

// Builds the tended pieces the two entry points above integrate over.
std::vector<TendedPiece> tended_pieces(const Curve2D& curve,
                                       const std::vector<size_t>& extra_splits = {});

// ---- generalized rectangular domains ------------------------------------------

// Positively oriented rectilinear polygon. Edges must be axis-parallel and
// alternate axes; the boundary may touch itself at a vertex (a pinch) but
// must not cross itself.
struct GRD {
    std::vector<Point2> vertices;

    void validate() const;
    double signed_area() const;
};

struct PointLess {
    bool operator()(const Point2& a, const Point2& b) const {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    }
};
using AlphaMap = std::map<Point2, int, PointLess>;

// Per-vertex corner coefficients via the quadrant rule: alpha(v) is the sum
// of quadrant products over the quadrants locally inside the domain.
AlphaMap grd_alpha(const GRD& grd);

// Independent route: decompose into axis-aligned rectangles by vertical
// slabs, sum the four signed corners of every rectangle, drop cancellations.
AlphaMap grd_alpha_by_decomposition(const GRD& grd);

std::vector<RealBox> grd_rectangles(const GRD& grd);

// Sum of alpha(v) * F(v) over the vertices; equals the integral of the field
// over the domain.
double grd_integral(const LocalCDF& F, const GRD& grd);

// ---- extended formula -----------------------------------------------------------

struct ExtendedCheck {
    double double_integral = 0.0;  // slab quadrature over the polygon interior
    double slanted_total = 0.0;    // slanted line integral over the boundary
    double residual = 0.0;
    bool reversed = false;  // input was negatively oriented and got flipped
};

ExtendedCheck extended_formula_check(const ScalarField& f, const LocalCDF& F,
                                     const Curve2D& curve);

// Direct polygon integral by vertical slabs with Gauss-Legendre nodes; the
// quadrature oracle the slanted route is checked against.
double polygon_field_integral(const ScalarField& f, const Curve2D& curve);

// Rotates samples and anchor by theta, rebuilds a numeric CDF in the rotated
// frame, and evaluates the slanted integral there. For closed curves the
// result matches the unrotated value.
double rotated_slanted_integral(const ScalarField& f, const Curve2D& curve, double theta,
                                Point2 anchor, double quad_tol = 1e-7);

}  // namespace sdc
