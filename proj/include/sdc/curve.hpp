#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sdc/core.hpp"

namespace sdc {

// Ordered planar samples. The curve is the data: one-sided behavior at a
// sample is read off the neighbor differences, with the deadband zero_tol
// shared with the 1-D operators. Closed curves are stored without repeating
// the first sample and are extended cyclically for endpoint analysis.
struct Curve2D {
    std::vector<double> t, x, y;
    bool closed = false;

    size_t size() const { return x.size(); }
    Point2 point(size_t j) const { return {x[j], y[j]}; }
    size_t wrap(long j) const {
        const long n = long(size());
        return size_t(((j % n) + n) % n);
    }
};

// Validates monotone parameter, non-duplicate consecutive samples, and (for
// closed curves) simplicity of the polyline.
Curve2D make_curve(std::vector<double> t, std::vector<double> x, std::vector<double> y,
                   bool closed);

// Direction signs to the two neighbors: (x_plus, x_minus, y_plus, y_minus).
struct TIV {
    Sign x_plus = 0, x_minus = 0, y_plus = 0, y_minus = 0;

    bool operator==(const TIV& o) const {
        return x_plus == o.x_plus && x_minus == o.x_minus && y_plus == o.y_plus &&
               y_minus == o.y_minus;
    }
    std::string to_string() const;
};

enum class PointClass {
    PerpendicularEdge,
    SlantedEdge,
    PerpendicularCorner,
    SlantedCorner,
    SwitchCorner,
    AcuteCorner,
    ObtuseCorner,
};

const char* point_class_name(PointClass c);

// Throws RangeError at open-curve endpoints.
TIV curve_tiv(const Curve2D& c, size_t j, double zero_tol = 1e-12);

bool is_corner(const Curve2D& c, size_t j, double zero_tol = 1e-12);

struct Classified {
    std::optional<PointClass> cls;
    std::string reason;  // set when unclassifiable
};
Classified classify_point(const Curve2D& c, size_t j, double zero_tol = 1e-12);

// Turn direction at a sample: +1 left (counterclockwise), -1 right; nullopt
// when the neighbors are collinear.
std::optional<int> local_orientation(const Curve2D& c, size_t j, double zero_tol = 1e-12);

// Sign of twice the polyline area: +1 counterclockwise.
int global_orientation(const Curve2D& c);
double polygon_signed_area(const Curve2D& c);

// Even-odd interior test for the closed polyline; classifies points within
// boundary_eps of an edge as boundary (not inside).
std::function<bool(Point2)> polygon_inside_fn(const Curve2D& c, double boundary_eps = 1e-9);

// Left-hand-side test for an open curve: closes it through a detour around
// an inflated bounding box, routed so the loop is simple and positively
// oriented, then tests the loop interior. Throws InvalidInput when no such
// detour exists (the curve weaves around its endpoints).
std::function<bool(Point2)> open_curve_inside_fn(const Curve2D& c, double boundary_eps = 1e-9);

// Quadrant vectors: all v in {-1,+1}^2 whose small partial quadrant at the
// sample lies in the region's interior. The inside test is injected: for a
// closed curve pass polygon_inside_fn(c); for open curves supply the closure.
std::vector<std::array<int, 2>> quadrant_vectors(const Curve2D& c, size_t j,
                                                 const std::function<bool(Point2)>& inside,
                                                 double probe_eps = 0.0);

int quadrant_product(const std::array<int, 2>& v);

// Tendency of the curve at a sample per the corner-class rule table.
struct CurveTendency {
    std::optional<Sign> value;
    std::string reason;  // set when unclassifiable
};
CurveTendency curve_tendency(const Curve2D& c, size_t j, double zero_tol = 1e-12);

// Maximal constant-direction runs; piece endpoints are exactly the corner
// samples (plus the curve endpoints for open curves).
struct CurvePiece {
    size_t first = 0, last = 0;  // sample indices; cyclic means last may wrap
    TIV tiv;                     // direction signature of the run
    Sign beta = 0;               // piece tendency
    int orientation = +1;
};
std::vector<CurvePiece> uniform_division_curve(const Curve2D& c, double zero_tol = 1e-12);

// Samples of one piece in order (handles cyclic wrap).
std::vector<Point2> piece_points(const Curve2D& c, const CurvePiece& p);

bool curve_is_simple(const Curve2D& c);

}  // namespace sdc
