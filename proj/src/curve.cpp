#include "sdc/curve.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace sdc {

namespace {

Sign dir_sign(double d, double zero_tol) { return sgn_band(d, zero_tol); }

struct Dirs {
    Sign fx, fy;  // toward the next sample
    Sign bx, by;  // toward the previous sample
};

Dirs neighbor_dirs(const Curve2D& c, size_t j, double zero_tol) {
    const size_t n = c.size();
    size_t jn, jp;
    if (c.closed) {
        jn = c.wrap(long(j) + 1);
        jp = c.wrap(long(j) - 1);
    } else {
        if (j == 0 || j + 1 >= n)
            throw RangeError("curve_tiv: endpoint of an open curve has one-sided data only");
        jn = j + 1;
        jp = j - 1;
    }
    Dirs d;
    d.fx = dir_sign(c.x[jn] - c.x[j], zero_tol);
    d.fy = dir_sign(c.y[jn] - c.y[j], zero_tol);
    d.bx = dir_sign(c.x[jp] - c.x[j], zero_tol);
    d.by = dir_sign(c.y[jp] - c.y[j], zero_tol);
    return d;
}

bool flank_perpendicular(Sign dx, Sign dy) { return dx == 0 || dy == 0; }

// Count coordinates on which the two flank directions genuinely oppose.
int conflicts(const Dirs& d) {
    int c = 0;
    if (d.fx * d.bx == -1) ++c;
    if (d.fy * d.by == -1) ++c;
    return c;
}

double dist_point_segment(Point2 p, Point2 a, Point2 b) {
    const double vx = b.x - a.x, vy = b.y - a.y;
    const double wx = p.x - a.x, wy = p.y - a.y;
    const double vv = vx * vx + vy * vy;
    double t = vv > 0.0 ? (wx * vx + wy * vy) / vv : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const double dx = wx - t * vx, dy = wy - t * vy;
    return std::sqrt(dx * dx + dy * dy);
}

bool proper_segment_intersection(Point2 a, Point2 b, Point2 c, Point2 d) {
    auto orient = [](Point2 p, Point2 q, Point2 r) {
        return sgn((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x));
    };
    const int o1 = orient(a, b, c), o2 = orient(a, b, d);
    const int o3 = orient(c, d, a), o4 = orient(c, d, b);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

}  // namespace

std::string TIV::to_string() const {
    auto s = [](Sign v) { return v > 0 ? std::string("+1") : v < 0 ? std::string("-1") : std::string("0"); };
    return "(" + s(x_plus) + "," + s(x_minus) + "," + s(y_plus) + "," + s(y_minus) + ")";
}

const char* point_class_name(PointClass c) {
    switch (c) {
        case PointClass::PerpendicularEdge: return "perpendicular_edge";
        case PointClass::SlantedEdge: return "slanted_edge";
        case PointClass::PerpendicularCorner: return "perpendicular_corner";
        case PointClass::SlantedCorner: return "slanted_corner";
        case PointClass::SwitchCorner: return "switch_corner";
        case PointClass::AcuteCorner: return "acute_corner";
        case PointClass::ObtuseCorner: return "obtuse_corner";
    }
    return "?";
}

Curve2D make_curve(std::vector<double> t, std::vector<double> x, std::vector<double> y,
                   bool closed) {
    if (x.size() != y.size() || (t.size() != x.size() && !t.empty()))
        throw InvalidInput("make_curve: column lengths differ");
    if (t.empty()) {
        t.resize(x.size());
        for (size_t i = 0; i < t.size(); ++i) t[i] = double(i);
    }
    // A closed curve given with a repeated first sample is normalized.
    if (closed && x.size() > 1 && x.front() == x.back() && y.front() == y.back()) {
        t.pop_back();
        x.pop_back();
        y.pop_back();
    }
    if (x.size() < (closed ? 3u : 2u)) throw InvalidInput("make_curve: too few samples");
    for (size_t i = 0; i + 1 < t.size(); ++i)
        if (!(t[i] < t[i + 1])) throw InvalidInput("make_curve: parameter must strictly increase");
    const size_t n = x.size();
    for (size_t i = 0; i + 1 < n; ++i)
        if (x[i] == x[i + 1] && y[i] == y[i + 1])
            throw InvalidInput("make_curve: identical consecutive samples");
    Curve2D c{std::move(t), std::move(x), std::move(y), closed};
    if (!curve_is_simple(c)) throw InvalidInput("make_curve: polyline self-intersects");
    return c;
}

bool curve_is_simple(const Curve2D& c) {
    // Sweep over segments sorted by min-x; only x-overlapping pairs are
    // tested, which keeps dense sample sets near linear.
    const size_t n = c.size();
    const size_t m = c.closed ? n : n - 1;
    struct Seg {
        double xmin, xmax;
        size_t i;
    };
    std::vector<Seg> segs(m);
    for (size_t i = 0; i < m; ++i) {
        const size_t j = c.closed ? c.wrap(long(i) + 1) : i + 1;
        segs[i] = {std::min(c.x[i], c.x[j]), std::max(c.x[i], c.x[j]), i};
    }
    std::sort(segs.begin(), segs.end(), [](const Seg& a, const Seg& b) { return a.xmin < b.xmin; });
    std::vector<const Seg*> active;
    for (const Seg& s : segs) {
        active.erase(std::remove_if(active.begin(), active.end(),
                                    [&](const Seg* a) { return a->xmax < s.xmin; }),
                     active.end());
        for (const Seg* a : active) {
            const size_t i1 = s.i, i2 = a->i;
            const size_t n1 = c.closed ? c.wrap(long(i1) + 1) : i1 + 1;
            const size_t n2 = c.closed ? c.wrap(long(i2) + 1) : i2 + 1;
            // Segments sharing a vertex are adjacent, not crossing.
            if (i1 == i2 || n1 == i2 || n2 == i1) continue;
            if (proper_segment_intersection(c.point(i1), c.point(n1), c.point(i2), c.point(n2)))
                return false;
        }
        active.push_back(&s);
    }
    return true;
}

TIV curve_tiv(const Curve2D& c, size_t j, double zero_tol) {
    const Dirs d = neighbor_dirs(c, j, zero_tol);
    return TIV{d.fx, d.bx, d.fy, d.by};
}

bool is_corner(const Curve2D& c, size_t j, double zero_tol) {
    const Dirs d = neighbor_dirs(c, j, zero_tol);
    return !(d.bx == -d.fx && d.by == -d.fy);
}

std::optional<int> local_orientation(const Curve2D& c, size_t j, double zero_tol) {
    const size_t n = c.size();
    size_t jn, jp;
    if (c.closed) {
        jn = c.wrap(long(j) + 1);
        jp = c.wrap(long(j) - 1);
    } else {
        if (j == 0 || j + 1 >= n) return std::nullopt;
        jn = j + 1;
        jp = j - 1;
    }
    const Point2 in{c.x[j] - c.x[jp], c.y[j] - c.y[jp]};
    const Point2 out{c.x[jn] - c.x[j], c.y[jn] - c.y[j]};
    const double cr = cross(in, out);
    const double scale = std::max(1.0, std::fabs(in.x) + std::fabs(in.y)) *
                         std::max(1.0, std::fabs(out.x) + std::fabs(out.y));
    if (std::fabs(cr) <= zero_tol * scale) return std::nullopt;
    return cr > 0 ? +1 : -1;
}

Classified classify_point(const Curve2D& c, size_t j, double zero_tol) {
    Classified out;
    Dirs d;
    try {
        d = neighbor_dirs(c, j, zero_tol);
    } catch (const RangeError& e) {
        out.reason = e.what();
        return out;
    }
    if (d.fx == 0 && d.fy == 0) {
        out.reason = "duplicate neighbor sample";
        return out;
    }
    const bool fwd_perp = flank_perpendicular(d.fx, d.fy);
    const bool bwd_perp = flank_perpendicular(d.bx, d.by);
    if (d.bx == -d.fx && d.by == -d.fy) {
        out.cls = fwd_perp ? PointClass::PerpendicularEdge : PointClass::SlantedEdge;
        return out;
    }
    const int conf = conflicts(d);
    if (fwd_perp && bwd_perp) {
        out.cls = PointClass::PerpendicularCorner;
    } else if (!fwd_perp && !bwd_perp) {
        out.cls = conf == 0 ? PointClass::SlantedCorner : PointClass::SwitchCorner;
    } else {
        out.cls = conf == 0 ? PointClass::AcuteCorner : PointClass::ObtuseCorner;
    }
    return out;
}

double polygon_signed_area(const Curve2D& c) {
    const size_t n = c.size();
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const size_t j = c.wrap(long(i) + 1);
        acc += c.x[i] * c.y[j] - c.x[j] * c.y[i];
    }
    return 0.5 * acc;
}

int global_orientation(const Curve2D& c) { return polygon_signed_area(c) >= 0.0 ? +1 : -1; }

std::function<bool(Point2)> polygon_inside_fn(const Curve2D& c, double boundary_eps) {
    if (!c.closed) throw InvalidInput("polygon_inside_fn: curve must be closed");
    // Copy the samples so the test outlives the curve.
    std::vector<double> xs = c.x, ys = c.y;
    return [xs, ys, boundary_eps](Point2 p) {
        const size_t n = xs.size();
        bool inside = false;
        for (size_t i = 0, j = n - 1; i < n; j = i++) {
            if (dist_point_segment(p, {xs[j], ys[j]}, {xs[i], ys[i]}) <= boundary_eps)
                return false;  // boundary does not count as interior
            const bool crosses = (ys[i] > p.y) != (ys[j] > p.y);
            if (crosses) {
                const double xint = xs[j] + (p.y - ys[j]) / (ys[i] - ys[j]) * (xs[i] - xs[j]);
                if (p.x < xint) inside = !inside;
            }
        }
        return inside;
    };
}

std::function<bool(Point2)> open_curve_inside_fn(const Curve2D& c, double boundary_eps) {
    if (c.closed) throw InvalidInput("open_curve_inside_fn: curve is closed");
    const size_t n = c.size();
    double xmin = c.x[0], xmax = c.x[0], ymin = c.y[0], ymax = c.y[0];
    for (size_t i = 1; i < n; ++i) {
        xmin = std::min(xmin, c.x[i]);
        xmax = std::max(xmax, c.x[i]);
        ymin = std::min(ymin, c.y[i]);
        ymax = std::max(ymax, c.y[i]);
    }
    const double margin = 0.25 * std::max({xmax - xmin, ymax - ymin, 1e-6});
    const double X0 = xmin - margin, X1 = xmax + margin;
    const double Y0 = ymin - margin, Y1 = ymax + margin;
    const Point2 ring[4] = {{X0, Y0}, {X1, Y0}, {X1, Y1}, {X0, Y1}};

    // Exit the endpoints along their final headings, projected to the ring,
    // then connect the two exit points along one of the two ring arcs. Pick
    // the routing that closes into a simple, positively oriented loop.
    auto exit_point = [&](Point2 from, Point2 heading) {
        const double len = std::hypot(heading.x, heading.y);
        Point2 d = len > 0 ? Point2{heading.x / len, heading.y / len} : Point2{1.0, 0.0};
        double t = std::numeric_limits<double>::infinity();
        if (d.x > 0) t = std::min(t, (X1 - from.x) / d.x);
        if (d.x < 0) t = std::min(t, (X0 - from.x) / d.x);
        if (d.y > 0) t = std::min(t, (Y1 - from.y) / d.y);
        if (d.y < 0) t = std::min(t, (Y0 - from.y) / d.y);
        return Point2{from.x + t * d.x, from.y + t * d.y};
    };
    auto ring_position = [&](Point2 p) {
        // Perimeter coordinate, counterclockwise from (X0,Y0).
        if (p.y == Y0) return p.x - X0;
        if (p.x == X1) return (X1 - X0) + (p.y - Y0);
        if (p.y == Y1) return (X1 - X0) + (Y1 - Y0) + (X1 - p.x);
        return 2 * (X1 - X0) + (Y1 - Y0) + (Y1 - p.y);
    };

    const Point2 end = c.point(n - 1), start = c.point(0);
    const Point2 exit_end = exit_point(end, {end.x - c.x[n - 2], end.y - c.y[n - 2]});
    const Point2 exit_start = exit_point(start, {start.x - c.x[1], start.y - c.y[1]});

    for (const bool ccw_ring : {true, false}) {
        std::vector<double> xs(c.x), ys(c.y);
        xs.push_back(exit_end.x);
        ys.push_back(exit_end.y);
        // Walk ring corners from the end-exit to the start-exit.
        double pos = ring_position(exit_end);
        const double target = ring_position(exit_start);
        const double perimeter = 2 * (X1 - X0) + 2 * (Y1 - Y0);
        for (int hop = 0; hop < 4; ++hop) {
            // Next corner in the walking direction.
            int best = -1;
            double best_d = perimeter;
            for (int k = 0; k < 4; ++k) {
                const double cp = ring_position(ring[k]);
                double d = ccw_ring ? cp - pos : pos - cp;
                if (d <= 1e-12) d += perimeter;
                double dt = ccw_ring ? target - pos : pos - target;
                if (dt <= 1e-12) dt += perimeter;
                if (d < best_d && d < dt) {
                    best_d = d;
                    best = k;
                }
            }
            if (best < 0) break;
            xs.push_back(ring[best].x);
            ys.push_back(ring[best].y);
            pos = ring_position(ring[best]);
        }
        xs.push_back(exit_start.x);
        ys.push_back(exit_start.y);
        try {
            const Curve2D loop = make_curve({}, std::move(xs), std::move(ys), true);
            if (global_orientation(loop) == +1) return polygon_inside_fn(loop, boundary_eps);
        } catch (const InvalidInput&) {
            // not simple with this routing; try the other arc
        }
    }
    throw InvalidInput("open_curve_inside_fn: no simple positively oriented closure found");
}

int quadrant_product(const std::array<int, 2>& v) { return v[0] * v[1]; }

std::vector<std::array<int, 2>> quadrant_vectors(const Curve2D& c, size_t j,
                                                 const std::function<bool(Point2)>& inside,
                                                 double probe_eps) {
    const Point2 z = c.point(j);
    if (probe_eps <= 0.0) {
        // Default: a quarter of the local sample spacing.
        const size_t jn = c.closed ? c.wrap(long(j) + 1) : std::min(j + 1, c.size() - 1);
        const size_t jp = c.closed ? c.wrap(long(j) - 1) : (j > 0 ? j - 1 : j);
        const double d1 = std::hypot(c.x[jn] - z.x, c.y[jn] - z.y);
        const double d2 = std::hypot(c.x[jp] - z.x, c.y[jp] - z.y);
        probe_eps = 0.25 * std::max(1e-12, 0.5 * (d1 + d2));
    }
    // A quadrant qualifies only when every probe lands inside. The eps-offset
    // probes hug the quadrant boundary so a flank crossing the quadrant with
    // slope in [2*eps, 1/(2*eps)] fails at least one of them; flatter or
    // steeper flanks are below probe resolution and read as axis-parallel.
    constexpr double eps = 1.0 / 256.0;
    static const double offsets[5][2] = {
        {eps, 0.5}, {0.5, eps}, {0.5, 0.5}, {0.25, 0.25}, {eps, eps}};
    std::vector<std::array<int, 2>> out;
    for (int vx : {+1, -1})
        for (int vy : {+1, -1}) {
            bool all_in = true;
            for (const auto& o : offsets) {
                const Point2 probe{z.x + vx * o[0] * probe_eps, z.y + vy * o[1] * probe_eps};
                if (!inside(probe)) {
                    all_in = false;
                    break;
                }
            }
            if (all_in) out.push_back({vx, vy});
        }
    return out;
}

CurveTendency curve_tendency(const Curve2D& c, size_t j, double zero_tol) {
    CurveTendency out;
    const Classified cl = classify_point(c, j, zero_tol);
    if (!cl.cls) {
        out.reason = cl.reason;
        return out;
    }
    const Dirs d = neighbor_dirs(c, j, zero_tol);
    auto orientation = [&]() -> std::optional<int> {
        if (auto s = local_orientation(c, j, zero_tol)) return s;
        if (c.closed) return global_orientation(c);
        return std::nullopt;
    };
    switch (*cl.cls) {
        case PointClass::PerpendicularEdge:
        case PointClass::SwitchCorner:
            out.value = 0;
            return out;
        case PointClass::SlantedEdge:
        case PointClass::SlantedCorner:
            out.value = Sign(-d.fx * d.fy);
            return out;
        case PointClass::PerpendicularCorner: {
            const auto s = orientation();
            if (!s) {
                out.reason = "degenerate perpendicular corner";
                return out;
            }
            const int p1 = d.fx * d.by, p2 = d.bx * d.fy;
            const int dominant = std::abs(p1) >= std::abs(p2) ? p1 : p2;
            out.value = Sign(*s * dominant);
            return out;
        }
        case PointClass::AcuteCorner:
        case PointClass::ObtuseCorner: {
            const auto s = orientation();
            if (!s) {
                out.reason = "degenerate corner";
                return out;
            }
            const bool zero_case = (*cl.cls == PointClass::AcuteCorner) == (*s == +1);
            if (zero_case) {
                out.value = 0;
                return out;
            }
            const int p1 = d.fx * d.fy, p2 = d.bx * d.by;
            const int dominant = std::abs(p1) >= std::abs(p2) ? p1 : p2;
            out.value = Sign(-dominant);
            return out;
        }
    }
    out.reason = "unreachable";
    return out;
}

std::vector<CurvePiece> uniform_division_curve(const Curve2D& c, double zero_tol) {
    const size_t n = c.size();
    std::vector<size_t> corners;
    if (c.closed) {
        for (size_t j = 0; j < n; ++j)
            if (is_corner(c, j, zero_tol)) corners.push_back(j);
        if (corners.empty())
            throw InvalidInput("uniform_division_curve: closed curve with no direction change");
    } else {
        corners.push_back(0);
        for (size_t j = 1; j + 1 < n; ++j)
            if (is_corner(c, j, zero_tol)) corners.push_back(j);
        corners.push_back(n - 1);
    }

    auto build_piece = [&](size_t first, size_t last) {
        CurvePiece p;
        p.first = first;
        p.last = last;
        const size_t second = c.wrap(long(first) + 1);
        const Sign dx = dir_sign(c.x[second] - c.x[first], zero_tol);
        const Sign dy = dir_sign(c.y[second] - c.y[first], zero_tol);
        p.tiv = TIV{dx, Sign(-dx), dy, Sign(-dy)};
        p.beta = (dx == 0 || dy == 0) ? Sign(0) : Sign(-dx * dy);
        p.orientation = c.closed ? global_orientation(c) : +1;
        // Prefer a genuine local turn direction when an interior sample has one.
        size_t steps = (last >= first ? last - first : last + n - first);
        for (size_t k = 1; k < steps; ++k) {
            if (auto s = local_orientation(c, c.wrap(long(first) + long(k)), zero_tol)) {
                p.orientation = *s;
                break;
            }
        }
        return p;
    };

    std::vector<CurvePiece> pieces;
    if (c.closed) {
        for (size_t i = 0; i < corners.size(); ++i) {
            const size_t first = corners[i];
            const size_t last = corners[(i + 1) % corners.size()];
            pieces.push_back(build_piece(first, last));
        }
        if (corners.size() == 1) {
            // Single corner on a closed curve: one cyclic piece.
            pieces.front().last = corners.front();
        }
    } else {
        for (size_t i = 0; i + 1 < corners.size(); ++i)
            pieces.push_back(build_piece(corners[i], corners[i + 1]));
    }
    return pieces;
}

std::vector<Point2> piece_points(const Curve2D& c, const CurvePiece& p) {
    std::vector<Point2> pts;
    size_t j = p.first;
    pts.push_back(c.point(j));
    while (j != p.last) {
        j = c.wrap(long(j) + 1);
        pts.push_back(c.point(j));
        if (pts.size() > c.size() + 1) throw InvalidInput("piece_points: runaway piece");
    }
    return pts;
}

}  // namespace sdc
