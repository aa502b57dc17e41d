#include "sdc/slanted.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace sdc {

namespace {

// 12-point Gauss-Legendre on [-1,1].
constexpr int kGL = 12;
constexpr double kGLx[kGL] = {
    -0.9815606342467192, -0.9041172563704749, -0.7699026741943047, -0.5873179542866175,
    -0.3678314989981802, -0.1252334085114689, 0.1252334085114689,  0.3678314989981802,
    0.5873179542866175,  0.7699026741943047,  0.9041172563704749,  0.9815606342467192};
constexpr double kGLw[kGL] = {
    0.0471753363865118, 0.1069393259953184, 0.1600783285433462, 0.2031674267230659,
    0.2334925365383548, 0.2491470458134028, 0.2491470458134028, 0.2334925365383548,
    0.2031674267230659, 0.1600783285433462, 0.1069393259953184, 0.0471753363865118};

struct Kahan {
    double sum = 0.0, carry = 0.0;
    void add(double v) {
        const double y = v - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

// Integral of f over one trapezoid strip: x in [x0,x1], y between the fixed
// leg yleg and the line through (x0,ya)-(x1,yb).
double strip_integral(const ScalarField& f, double x0, double x1, double ya, double yb,
                      double yleg) {
    if (x0 == x1) return 0.0;
    const double hx = 0.5 * (x1 - x0), cx = 0.5 * (x0 + x1);
    Kahan acc;
    for (int i = 0; i < kGL; ++i) {
        const double x = cx + hx * kGLx[i];
        const double s = (x - x0) / (x1 - x0);
        const double ycurve = ya + s * (yb - ya);
        const double ylo = std::min(yleg, ycurve), yhi = std::max(yleg, ycurve);
        if (ylo == yhi) continue;
        const double hy = 0.5 * (yhi - ylo), cy = 0.5 * (ylo + yhi);
        Kahan inner;
        for (int jy = 0; jy < kGL; ++jy) inner.add(kGLw[jy] * f.at(x, cy + hy * kGLx[jy]));
        acc.add(kGLw[i] * hy * inner.sum);
    }
    return std::fabs(hx) * acc.sum;
}

ScalarField transpose_field(const ScalarField& f) {
    ScalarField t = f;
    auto base = f.eval;
    t.eval = [base](std::span<const double> p) {
        const double q[2] = {p[1], p[0]};
        return base(std::span<const double>(q, 2));
    };
    t.antiderivative = nullptr;
    return t;
}

// Region between the piece and its horizontal-first path (leg at start.y).
double region_against_horizontal_path(const ScalarField& f, const std::vector<Point2>& pts) {
    const double yleg = pts.front().y;
    Kahan acc;
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        acc.add(strip_integral(f, pts[i].x, pts[i + 1].x, pts[i].y, pts[i + 1].y, yleg));
    return acc.sum;
}

// Same against the vertical-first path: swap the roles of x and y.
double region_against_vertical_path(const ScalarField& f, const std::vector<Point2>& pts) {
    const ScalarField ft = transpose_field(f);
    std::vector<Point2> swapped(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) swapped[i] = {pts[i].y, pts[i].x};
    return region_against_horizontal_path(ft, swapped);
}

}  // namespace

StraightPaths straight_paths(Point2 a, Point2 b) {
    if (a == b) throw InvalidInput("straight_paths: points coincide");
    StraightPaths p;
    p.positive = {a, {b.x, a.y}, b};
    p.negative = {a, {a.x, b.y}, b};
    return p;
}

double partial_domain_integral(const ScalarField& f, const TendedPiece& piece,
                               PartialDomain which) {
    if (f.arity != 2) throw InvalidInput("partial_domain_integral: field must be planar");
    if (piece.pts.size() < 2) throw InvalidInput("partial_domain_integral: degenerate piece");
    if (piece.beta == 0) return 0.0;  // the run coincides with both its paths
    // The left-hand path of a monotone run is horizontal-first exactly when
    // the run's tendency is positive (direction signs of opposite sign).
    const bool left_is_horizontal = piece.beta > 0;
    const bool horizontal = (which == PartialDomain::Plus) == left_is_horizontal;
    return horizontal ? region_against_horizontal_path(f, piece.pts)
                      : region_against_vertical_path(f, piece.pts);
}

double slanted_piece(const LocalCDF& F, const ScalarField& f, const TendedPiece& piece) {
    const Point2 a = piece.pts.front(), b = piece.pts.back();
    double value = 0.0;
    if (piece.beta != 0) {
        value += partial_domain_integral(f, piece, PartialDomain::Plus);
        const Point2 elbow = piece.beta > 0 ? Point2{b.x, a.y} : Point2{a.x, b.y};
        value -= double(piece.beta) * F.at(elbow.x, elbow.y);
    }
    value += 0.5 * (double(piece.beta0) * F.at(a.x, a.y) + double(piece.beta1) * F.at(b.x, b.y));
    return value;
}

std::vector<TendedPiece> tended_pieces(const Curve2D& curve,
                                       const std::vector<size_t>& extra_splits) {
    std::vector<CurvePiece> runs = uniform_division_curve(curve);

    // Collect division sample indices, then optionally refine.
    std::set<size_t> cut_set;
    for (const CurvePiece& r : runs) cut_set.insert(r.first);
    if (!curve.closed) cut_set.insert(curve.size() - 1);
    for (size_t s : extra_splits) {
        if (s >= curve.size()) throw RangeError("tended_pieces: split index out of range");
        cut_set.insert(s);
    }

    std::vector<size_t> cuts(cut_set.begin(), cut_set.end());
    std::vector<std::pair<size_t, size_t>> spans;
    if (curve.closed) {
        for (size_t i = 0; i < cuts.size(); ++i)
            spans.emplace_back(cuts[i], cuts[(i + 1) % cuts.size()]);
    } else {
        for (size_t i = 0; i + 1 < cuts.size(); ++i) spans.emplace_back(cuts[i], cuts[i + 1]);
    }

    auto endpoint_tendency = [&](size_t j) -> Sign {
        if (!curve.closed && (j == 0 || j + 1 >= curve.size())) {
            // Open-curve endpoints have no two-sided tendency; weight zero.
            return 0;
        }
        const CurveTendency t = curve_tendency(curve, j);
        if (!t.value) throw InvalidInput("tended_pieces: tendency undefined at " + std::to_string(j));
        return *t.value;
    };

    std::vector<TendedPiece> out;
    for (const auto& [first, last] : spans) {
        TendedPiece p;
        CurvePiece span;
        span.first = first;
        span.last = last;
        p.pts = piece_points(curve, span);
        const Point2 a = p.pts.front(), b = p.pts.back();
        const Sign dx = sgn(b.x - a.x), dy = sgn(b.y - a.y);
        p.beta = (dx == 0 || dy == 0) ? Sign(0) : Sign(-dx * dy);
        p.orientation = curve.closed ? global_orientation(curve) : +1;
        p.beta0 = endpoint_tendency(first);
        p.beta1 = endpoint_tendency(last);
        out.push_back(std::move(p));
    }
    return out;
}

double slanted_integral_with_splits(const LocalCDF& F, const ScalarField& f,
                                    const Curve2D& curve, const std::vector<size_t>& splits) {
    Kahan acc;
    for (const TendedPiece& p : tended_pieces(curve, splits)) acc.add(slanted_piece(F, f, p));
    return acc.sum;
}

double slanted_integral(const LocalCDF& F, const ScalarField& f, const Curve2D& curve) {
    return slanted_integral_with_splits(F, f, curve, {});
}

// ---- GRD -------------------------------------------------------------------------

void GRD::validate() const {
    const size_t n = vertices.size();
    if (n < 4) throw InvalidInput("GRD: need at least 4 vertices");
    std::vector<bool> horiz(n);
    for (size_t i = 0; i < n; ++i) {
        const Point2& a = vertices[i];
        const Point2& b = vertices[(i + 1) % n];
        const bool horizontal = a.y == b.y && a.x != b.x;
        const bool vertical = a.x == b.x && a.y != b.y;
        if (!horizontal && !vertical)
            throw InvalidInput("GRD: edges must be axis-parallel and non-degenerate");
        horiz[i] = horizontal;
    }
    for (size_t i = 0; i < n; ++i)
        if (horiz[i] == horiz[(i + 1) % n])
            throw InvalidInput("GRD: consecutive edges must alternate axes");
    if (signed_area() <= 0.0) throw InvalidInput("GRD: must be positively oriented");
}

double GRD::signed_area() const {
    const size_t n = vertices.size();
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const Point2& a = vertices[i];
        const Point2& b = vertices[(i + 1) % n];
        acc += a.x * b.y - b.x * a.y;
    }
    return 0.5 * acc;
}

namespace {

bool grd_inside(const GRD& g, Point2 p) {
    const size_t n = g.vertices.size();
    bool inside = false;
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point2& a = g.vertices[j];
        const Point2& b = g.vertices[i];
        if ((b.y > p.y) != (a.y > p.y)) {
            const double xint = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (p.x < xint) inside = !inside;
        }
    }
    return inside;
}

double min_edge_length(const GRD& g) {
    double m = std::numeric_limits<double>::infinity();
    const size_t n = g.vertices.size();
    for (size_t i = 0; i < n; ++i) {
        const Point2& a = g.vertices[i];
        const Point2& b = g.vertices[(i + 1) % n];
        m = std::min(m, std::fabs(a.x - b.x) + std::fabs(a.y - b.y));
    }
    return m;
}

}  // namespace

AlphaMap grd_alpha(const GRD& grd) {
    grd.validate();
    const double eps = 0.25 * min_edge_length(grd);
    AlphaMap alpha;
    for (const Point2& v : grd.vertices) {
        if (alpha.count(v)) continue;  // pinch vertices appear once in the map
        int a = 0;
        for (int sx : {+1, -1})
            for (int sy : {+1, -1})
                if (grd_inside(grd, {v.x + sx * eps * 0.5, v.y + sy * eps * 0.5})) a += sx * sy;
        if (a != 0) alpha[v] = a;
    }
    return alpha;
}

std::vector<RealBox> grd_rectangles(const GRD& grd) {
    grd.validate();
    std::vector<double> xs;
    for (const Point2& v : grd.vertices) xs.push_back(v.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<RealBox> rects;
    const size_t n = grd.vertices.size();
    for (size_t s = 0; s + 1 < xs.size(); ++s) {
        const double x0 = xs[s], x1 = xs[s + 1];
        // Horizontal edges spanning this slab, paired by even-odd in y.
        std::vector<double> ys;
        for (size_t i = 0; i < n; ++i) {
            const Point2& a = grd.vertices[i];
            const Point2& b = grd.vertices[(i + 1) % n];
            if (a.y != b.y) continue;
            if (std::min(a.x, b.x) <= x0 && std::max(a.x, b.x) >= x1) ys.push_back(a.y);
        }
        std::sort(ys.begin(), ys.end());
        if (ys.size() % 2 != 0) throw InvalidInput("grd_rectangles: boundary parity broke");
        for (size_t i = 0; i + 1 < ys.size(); i += 2) {
            if (ys[i] == ys[i + 1]) continue;
            RealBox r;
            r.lo = {x0, ys[i]};
            r.hi = {x1, ys[i + 1]};
            rects.push_back(std::move(r));
        }
    }
    return rects;
}

AlphaMap grd_alpha_by_decomposition(const GRD& grd) {
    AlphaMap alpha;
    for (const RealBox& r : grd_rectangles(grd)) {
        alpha[{r.lo[0], r.lo[1]}] += 1;
        alpha[{r.hi[0], r.hi[1]}] += 1;
        alpha[{r.lo[0], r.hi[1]}] -= 1;
        alpha[{r.hi[0], r.lo[1]}] -= 1;
    }
    for (auto it = alpha.begin(); it != alpha.end();) {
        if (it->second == 0) it = alpha.erase(it);
        else ++it;
    }
    return alpha;
}

double grd_integral(const LocalCDF& F, const GRD& grd) {
    Kahan acc;
    for (const auto& [v, a] : grd_alpha(grd)) acc.add(double(a) * F.at(v.x, v.y));
    return acc.sum;
}

// ---- extended formula ---------------------------------------------------------------

double polygon_field_integral(const ScalarField& f, const Curve2D& curve) {
    if (!curve.closed) throw InvalidInput("polygon_field_integral: curve must be closed");
    const size_t n = curve.size();
    std::vector<double> xs(curve.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    // Bin edges by slab so each slab only scans its own edges.
    struct Edge {
        double x0, y0, x1, y1;
    };
    std::vector<std::vector<Edge>> bins(xs.size() > 0 ? xs.size() - 1 : 0);
    auto slab_of = [&](double x) {
        return size_t(std::upper_bound(xs.begin(), xs.end(), x) - xs.begin()) - 1;
    };
    for (size_t i = 0; i < n; ++i) {
        const size_t j = curve.wrap(long(i) + 1);
        Edge e{curve.x[i], curve.y[i], curve.x[j], curve.y[j]};
        if (e.x0 == e.x1) continue;  // vertical edges never cross slab interiors
        if (e.x0 > e.x1) std::swap(e.x0, e.x1), std::swap(e.y0, e.y1);
        const size_t s0 = slab_of(e.x0);
        const size_t s1 = std::min(bins.size() - 1, slab_of(std::nexttoward(e.x1, e.x0)));
        for (size_t s = s0; s <= s1 && s < bins.size(); ++s) bins[s].push_back(e);
    }

    Kahan total;
    std::vector<double> crossings;
    for (size_t s = 0; s + 1 < xs.size(); ++s) {
        const double x0 = xs[s], x1 = xs[s + 1];
        const double hx = 0.5 * (x1 - x0), cx = 0.5 * (x0 + x1);
        Kahan slab;
        for (int i = 0; i < kGL; ++i) {
            const double x = cx + hx * kGLx[i];
            crossings.clear();
            for (const Edge& e : bins[s])
                if (e.x0 <= x && x < e.x1)
                    crossings.push_back(e.y0 + (x - e.x0) / (e.x1 - e.x0) * (e.y1 - e.y0));
            std::sort(crossings.begin(), crossings.end());
            double column = 0.0;
            for (size_t k = 0; k + 1 < crossings.size(); k += 2) {
                const double ylo = crossings[k], yhi = crossings[k + 1];
                if (ylo == yhi) continue;
                const double hy = 0.5 * (yhi - ylo), cy = 0.5 * (ylo + yhi);
                double inner = 0.0;
                for (int jy = 0; jy < kGL; ++jy) inner += kGLw[jy] * f.at(x, cy + hy * kGLx[jy]);
                column += hy * inner;
            }
            slab.add(kGLw[i] * column);
        }
        total.add(hx * slab.sum);
    }
    return total.sum;
}

namespace {

Curve2D reversed_curve(const Curve2D& c) {
    std::vector<double> t(c.t.size()), x(c.x.rbegin(), c.x.rend()), y(c.y.rbegin(), c.y.rend());
    for (size_t i = 0; i < t.size(); ++i) t[i] = double(i);
    return make_curve(std::move(t), std::move(x), std::move(y), c.closed);
}

}  // namespace

ExtendedCheck extended_formula_check(const ScalarField& f, const LocalCDF& F,
                                     const Curve2D& curve) {
    if (!curve.closed) throw InvalidInput("extended_formula_check: curve must be closed");
    ExtendedCheck out;
    const Curve2D* use = &curve;
    Curve2D flipped;
    if (global_orientation(curve) < 0) {
        flipped = reversed_curve(curve);
        use = &flipped;
        out.reversed = true;
    }
    out.double_integral = polygon_field_integral(f, *use);
    out.slanted_total = slanted_integral(F, f, *use);
    out.residual = out.double_integral - out.slanted_total;
    return out;
}

double rotated_slanted_integral(const ScalarField& f, const Curve2D& curve, double theta,
                                Point2 anchor, double quad_tol) {
    const double ct = std::cos(theta), st = std::sin(theta);
    std::vector<double> xs(curve.size()), ys(curve.size()), ts(curve.size());
    for (size_t i = 0; i < curve.size(); ++i) {
        xs[i] = ct * curve.x[i] - st * curve.y[i];
        ys[i] = st * curve.x[i] + ct * curve.y[i];
        ts[i] = double(i);
    }
    Curve2D rotated = make_curve(std::move(ts), std::move(xs), std::move(ys), curve.closed);

    ScalarField frot;
    frot.arity = 2;
    frot.name = f.name + ":rot";
    auto base = f.eval;
    frot.eval = [base, ct, st](std::span<const double> p) {
        // Pull back through the inverse rotation.
        const double q[2] = {ct * p[0] + st * p[1], -st * p[0] + ct * p[1]};
        return base(std::span<const double>(q, 2));
    };

    const Point2 pa{ct * anchor.x - st * anchor.y, st * anchor.x + ct * anchor.y};
    const LocalCDF Frot = LocalCDF::numeric(frot, {pa.x, pa.y}, quad_tol);
    return slanted_integral(Frot, frot, rotated);
}

}  // namespace sdc
