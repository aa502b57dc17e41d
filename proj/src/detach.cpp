#include "sdc/detach.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>

namespace sdc {

// ---- PartialDetachmentsVector ----------------------------------------------

std::string PartialDetachmentsVector::to_string() const {
    std::string s(6, '0');
    for (int i = 0; i < 6; ++i)
        if (bits[i]) s[i] = '1';
    return s;
}

PartialDetachmentsVector PartialDetachmentsVector::from_sides(const SignSet& left,
                                                              const SignSet& right) {
    PartialDetachmentsVector v;
    v.bits[0] = left.pos;
    v.bits[1] = left.zero;
    v.bits[2] = left.neg;
    v.bits[3] = right.pos;
    v.bits[4] = right.zero;
    v.bits[5] = right.neg;
    return v;
}

PartialDetachmentsVector PartialDetachmentsVector::from_string(const std::string& s) {
    if (s.size() != 6) throw InvalidInput("partial detachments vector needs 6 bits");
    PartialDetachmentsVector v;
    for (int i = 0; i < 6; ++i) {
        if (s[i] != '0' && s[i] != '1') throw InvalidInput("vector bits must be 0/1");
        v.bits[i] = s[i] == '1';
    }
    return v;
}

SignSet PartialDetachmentsVector::left_set() const {
    SignSet s;
    if (bits[0]) s.add(+1);
    if (bits[1]) s.add(0);
    if (bits[2]) s.add(-1);
    return s;
}

SignSet PartialDetachmentsVector::right_set() const {
    SignSet s;
    if (bits[3]) s.add(+1);
    if (bits[4]) s.add(0);
    if (bits[5]) s.add(-1);
    return s;
}

bool PartialDetachmentsVector::admissible() const {
    return !left_set().empty() && !right_set().empty();
}

// ---- DisdetachmentFlags ------------------------------------------------------

bool DisdetachmentFlags::any() const {
    for (bool b : type)
        if (b) return true;
    return false;
}

bool DisdetachmentFlags::detachable() const {
    return !type[2] && !type[3] && !type[4] && !type[5];
}

bool DisdetachmentFlags::signposted_detachable() const {
    return !type[0] && !type[1] && !type[4] && !type[5];
}

std::string DisdetachmentFlags::to_string() const {
    std::string s;
    for (int i = 0; i < 6; ++i)
        if (type[i]) {
            if (!s.empty()) s += ',';
            s += std::to_string(i + 1);
        }
    return s.empty() ? "none" : s;
}

// ---- QuantizationScheme ------------------------------------------------------

void QuantizationScheme::validate() const {
    const size_t n = cells.size();
    if (n == 0 || values.size() != n)
        throw InvalidInput("quantization scheme: need matching cells and values");
    for (size_t i = 0; i < n; ++i) {
        const Interval& c = cells[i];
        if (c.lo > c.hi || (c.lo == c.hi && !(c.lo_closed && c.hi_closed)))
            throw InvalidInput("quantization scheme: empty interval");
    }
    // Ordered, disjoint, covering: consecutive cells must abut exactly.
    if (!std::isinf(cells.front().lo) || cells.front().lo_closed ||
        !std::isinf(cells.back().hi) || cells.back().hi_closed)
        throw InvalidInput("quantization scheme: cells must cover the reals");
    for (size_t i = 0; i + 1 < n; ++i) {
        if (cells[i].hi != cells[i + 1].lo)
            throw InvalidInput("quantization scheme: gap or overlap between cells");
        if (cells[i].hi_closed == cells[i + 1].lo_closed)
            throw InvalidInput("quantization scheme: boundary must belong to exactly one cell");
    }
}

double QuantizationScheme::classify(double t) const {
    for (size_t i = 0; i < cells.size(); ++i) {
        const Interval& c = cells[i];
        const bool above_lo = c.lo_closed ? t >= c.lo : t > c.lo;
        const bool below_hi = c.hi_closed ? t <= c.hi : t < c.hi;
        if (above_lo && below_hi) return values[i];
    }
    throw InvalidInput("quantization scheme: value escaped all cells");
}

QuantizationScheme QuantizationScheme::classic() {
    const double inf = std::numeric_limits<double>::infinity();
    QuantizationScheme s;
    s.cells = {{-inf, 0.0, false, false}, {0.0, 0.0, true, true}, {0.0, inf, false, false}};
    s.values = {-1.0, 0.0, +1.0};
    return s;
}

QuantizationScheme QuantizationScheme::abs_bands(const std::vector<double>& bounds,
                                                 const std::vector<double>& vals) {
    if (bounds.size() + 1 != vals.size())
        throw InvalidInput("abs_bands: need one more value than bounds");
    const double inf = std::numeric_limits<double>::infinity();
    QuantizationScheme s;
    // Mirror the bands onto the negative axis so the union covers the reals.
    // Each magnitude boundary belongs to the inner band.
    const size_t n = vals.size();
    s.cells.push_back({-inf, -bounds.back(), false, false});
    s.values.push_back(vals[n - 1]);
    for (size_t i = bounds.size(); i-- > 1;) {
        s.cells.push_back({-bounds[i], -bounds[i - 1], true, false});
        s.values.push_back(vals[i]);
    }
    s.cells.push_back({-bounds[0], bounds[0], true, true});
    s.values.push_back(vals[0]);
    for (size_t i = 1; i < bounds.size(); ++i) {
        s.cells.push_back({bounds[i - 1], bounds[i], false, true});
        s.values.push_back(vals[i]);
    }
    s.cells.push_back({bounds.back(), inf, false, false});
    s.values.push_back(vals[n - 1]);
    s.validate();
    return s;
}

// ---- sign-set machinery ------------------------------------------------------

SignSet side_sign_set(const FunctionHandle& f, double x, Side side, const LimitConfig& cfg) {
    if (f.exact_side_signs) {
        if (auto s = f.exact_side_signs(x, side)) return *s;
    }
    return tail_sign_set(one_sided_sign_samples(f.eval, x, side, cfg), cfg);
}

static std::optional<Sign> one_sided_detachment(const FunctionHandle& f, double x, Side side,
                                                const LimitConfig& cfg) {
    const SignSet s = side_sign_set(f, x, side, cfg);
    if (s.singleton()) return s.only();
    return std::nullopt;
}

std::optional<Sign> detachment(const FunctionHandle& f, double x, SideSpec side,
                               const LimitConfig& cfg) {
    if (side == SideSpec::Left) return one_sided_detachment(f, x, Side::Left, cfg);
    if (side == SideSpec::Right) return one_sided_detachment(f, x, Side::Right, cfg);
    const auto l = one_sided_detachment(f, x, Side::Left, cfg);
    const auto r = one_sided_detachment(f, x, Side::Right, cfg);
    if (l && r && *l == *r) return *l;
    return std::nullopt;
}

std::optional<Sign> signposted_detachment(const FunctionHandle& f, double x,
                                          const LimitConfig& cfg) {
    const auto l = one_sided_detachment(f, x, Side::Left, cfg);
    const auto r = one_sided_detachment(f, x, Side::Right, cfg);
    if (l && r && *r == -*l) return *r;
    return std::nullopt;
}

SidedDetachments sided_detachments(const FunctionHandle& f, double x, const LimitConfig& cfg) {
    const SignSet l = side_sign_set(f, x, Side::Left, cfg);
    const SignSet r = side_sign_set(f, x, Side::Right, cfg);
    SidedDetachments d;
    d.sup_plus = r.max();
    d.inf_plus = r.min();
    d.sup_minus = l.max();
    d.inf_minus = l.min();
    return d;
}

PartialDetachmentsVector partial_detachments_vector(const FunctionHandle& f, double x,
                                                    const LimitConfig& cfg) {
    return PartialDetachmentsVector::from_sides(side_sign_set(f, x, Side::Left, cfg),
                                                side_sign_set(f, x, Side::Right, cfg));
}

DisdetachmentFlags classify_disdetachment(const PartialDetachmentsVector& v) {
    if (!v.admissible())
        throw InvalidInput("classify_disdetachment: empty side block in vector");
    const SignSet l = v.left_set(), r = v.right_set();
    const Sign sup_p = r.max(), inf_p = r.min();
    const Sign sup_m = l.max(), inf_m = l.min();
    DisdetachmentFlags flags;
    flags.type[0] = sup_p != -sup_m;
    flags.type[1] = inf_p != -inf_m;
    flags.type[2] = sup_p != sup_m;
    flags.type[3] = inf_p != inf_m;
    flags.type[4] = sup_p != inf_p;
    flags.type[5] = sup_m != inf_m;
    return flags;
}

int extrema_indicator(const PartialDetachmentsVector& v) {
    static const char* patterns[3] = {"100100", "001001", "010010"};
    const std::string s = v.to_string();
    for (const char* p : patterns)
        if (s == p) return 0;
    return -1;
}

std::optional<Sign> tendency(const FunctionHandle& f, double x, const LimitConfig& cfg) {
    const auto l = one_sided_detachment(f, x, Side::Left, cfg);
    const auto r = one_sided_detachment(f, x, Side::Right, cfg);
    if (!l || !r) return std::nullopt;
    return sgn(double(*r) - double(*l));
}

// ---- quotient-based operators ------------------------------------------------

static std::vector<double> quotient_samples(const FunctionHandle& f, double x, Side side,
                                            const LimitConfig& cfg) {
    const std::vector<double> inc = one_sided_increments(f.eval, x, side, cfg);
    std::vector<double> q(inc.size());
    for (size_t k = 0; k < inc.size(); ++k)
        q[k] = inc[k] / (side_sign(side) * cfg.h(int(k)));
    return q;
}

Derivates dini_derivates(const FunctionHandle& f, double x, const LimitConfig& cfg) {
    const std::vector<double> qr = quotient_samples(f, x, Side::Right, cfg);
    const std::vector<double> ql = quotient_samples(f, x, Side::Left, cfg);
    Derivates d;
    d.upper_right = -std::numeric_limits<double>::infinity();
    d.lower_right = std::numeric_limits<double>::infinity();
    d.upper_left = -std::numeric_limits<double>::infinity();
    d.lower_left = std::numeric_limits<double>::infinity();
    for (int k = cfg.steps - cfg.tail_len; k < cfg.steps; ++k) {
        d.upper_right = std::max(d.upper_right, qr[k]);
        d.lower_right = std::min(d.lower_right, qr[k]);
        d.upper_left = std::max(d.upper_left, ql[k]);
        d.lower_left = std::min(d.lower_left, ql[k]);
    }
    return d;
}

// Numeric side-continuity: the deepest increments must shrink below a
// relative threshold. A jump smaller than the threshold goes unseen; the
// check is a heuristic, like every finite-sample continuity test.
static bool side_continuous(const FunctionHandle& f, double x, Side side, const LimitConfig& cfg,
                            double rel_tol) {
    const std::vector<double> inc = one_sided_increments(f.eval, x, side, cfg);
    const double scale = std::max(1.0, std::fabs(f.eval(x)));
    return std::fabs(inc.back()) <= rel_tol * scale;
}

JointClassification classify_joint_point(const FunctionHandle& f, double x,
                                         const LimitConfig& cfg) {
    JointClassification out;
    const double cont_tol = 1e-3;
    if (!side_continuous(f, x, Side::Left, cfg, cont_tol) ||
        !side_continuous(f, x, Side::Right, cfg, cont_tol)) {
        out.reason = "discontinuous";
        return out;
    }
    const auto dl = one_sided_detachment(f, x, Side::Left, cfg);
    const auto dr = one_sided_detachment(f, x, Side::Right, cfg);
    if (!dl || !dr) {
        out.reason = "not tendable";
        return out;
    }
    // Differentiability test: both one-sided quotient limits stabilize (under
    // a loose tolerance; quotients converge only linearly) and agree.
    const double diff_tol = 1e-4;
    LimitConfig qcfg = cfg;
    qcfg.zero_tol = diff_tol;
    const auto lim_r = approx_limit(quotient_samples(f, x, Side::Right, cfg), qcfg);
    const auto lim_l = approx_limit(quotient_samples(f, x, Side::Left, cfg), qcfg);
    if (lim_r && lim_l && std::isfinite(*lim_r) && std::isfinite(*lim_l)) {
        const double scale = std::max({1.0, std::fabs(*lim_r), std::fabs(*lim_l)});
        if (std::fabs(*lim_r - *lim_l) <= diff_tol * scale) {
            out.reason = "differentiable";
            return out;
        }
    }
    if (*dr == *dl) {
        out.type = JointType::First;
    } else if (*dr * *dl != 0) {
        out.type = JointType::Second;
    } else {
        out.type = JointType::Third;
    }
    return out;
}

static std::optional<double> stabilized_tail_value(const std::vector<double>& vals,
                                                   const LimitConfig& cfg) {
    bool ok = true;
    const double last = vals.back();
    for (int k = cfg.steps - cfg.tail_len; k < cfg.steps; ++k)
        if (vals[k] != last) ok = false;
    if (ok) return last;
    return std::nullopt;
}

static std::optional<double> quantized_side(const FunctionHandle& f, double x, Side side,
                                            const QuantizationScheme& scheme,
                                            const LimitConfig& cfg, bool quotient) {
    std::vector<double> raw =
        quotient ? quotient_samples(f, x, side, cfg) : one_sided_increments(f.eval, x, side, cfg);
    for (double& t : raw) t = scheme.classify(t);
    return stabilized_tail_value(raw, cfg);
}

static std::optional<double> quantized_op(const FunctionHandle& f, double x, SideSpec side,
                                          const QuantizationScheme& scheme,
                                          const LimitConfig& cfg, bool quotient) {
    scheme.validate();
    if (side == SideSpec::Left) return quantized_side(f, x, Side::Left, scheme, cfg, quotient);
    if (side == SideSpec::Right) return quantized_side(f, x, Side::Right, scheme, cfg, quotient);
    const auto l = quantized_side(f, x, Side::Left, scheme, cfg, quotient);
    const auto r = quantized_side(f, x, Side::Right, scheme, cfg, quotient);
    if (l && r && *l == *r) return *l;
    return std::nullopt;
}

std::optional<double> generalized_detachment(const FunctionHandle& f, double x, SideSpec side,
                                             const QuantizationScheme& scheme,
                                             const LimitConfig& cfg) {
    return quantized_op(f, x, side, scheme, cfg, false);
}

std::optional<double> quantized_derivative(const FunctionHandle& f, double x, SideSpec side,
                                           const QuantizationScheme& scheme,
                                           const LimitConfig& cfg) {
    return quantized_op(f, x, side, scheme, cfg, true);
}

// ---- weather vane ------------------------------------------------------------

FunctionHandle make_weather_vane(const PartialDetachmentsVector& v) {
    if (!v.admissible())
        throw InvalidInput("weather vane: vector needs at least one bit per side");
    FunctionHandle f;
    f.name = "weathervane:v=" + v.to_string();
    // Channel i carries the linear piece whose sign at the origin realizes
    // bit i; the dense domains behind the channels are never materialized.
    // The float evaluator stands in for density by hashing the argument onto
    // one of the active channels of its side.
    f.eval = [v](double x) -> double {
        if (x == 0.0) return 0.0;
        const SignSet set = x < 0 ? v.left_set() : v.right_set();
        std::vector<Sign> active;
        if (set.pos) active.push_back(+1);
        if (set.zero) active.push_back(0);
        if (set.neg) active.push_back(-1);
        uint64_t bits;
        static_assert(sizeof(bits) == sizeof(x));
        std::memcpy(&bits, &x, sizeof(bits));
        bits ^= bits >> 33;
        bits *= 0xff51afd7ed558ccdULL;
        bits ^= bits >> 33;
        const Sign s = active[bits % active.size()];
        return s * std::fabs(x);
    };
    f.exact_side_signs = [v](double x, Side side) -> std::optional<SignSet> {
        if (x != 0.0) return std::nullopt;
        return side == Side::Left ? v.left_set() : v.right_set();
    };
    return f;
}

PartialDetachmentsVector weather_vane_vector(const PartialDetachmentsVector& v,
                                             const LimitConfig& cfg) {
    return partial_detachments_vector(make_weather_vane(v), 0.0, cfg);
}

// ---- divisions and the semi-discrete Newton-Leibniz check ---------------------

// Bisects a local-trend transition inside [lo, hi]. The probe is the sign of
// the symmetric difference f(x+H) - f(x-H) with H tied to the bracket width,
// so the locator keeps resolving below the fixed ladder's smallest step (the
// ladder cannot stabilize once the bracket straddles the transition).
static double locate_trend_transition(const std::function<double(double)>& f, double lo,
                                      double hi, double tol) {
    auto trend = [&](double x, double width) {
        const double H = std::max(width / 8.0, 1e-13);
        return sgn(f(x + H) - f(x - H));
    };
    const Sign s_lo = trend(lo, hi - lo);
    if (s_lo == 0) {
        // Left endpoint already flat: converge onto the flat/trending edge.
        for (int it = 0; it < 200 && hi - lo > tol; ++it) {
            const double mid = 0.5 * (lo + hi);
            (trend(mid, hi - lo) == 0 ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const Sign sm = trend(mid, hi - lo);
        if (sm == 0) return mid;  // flat at double resolution: the transition
        if (sm == s_lo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> uniform_tendency_division(const FunctionHandle& f, double a, double b,
                                              int probe_count, const LimitConfig& cfg) {
    if (!(a < b) || probe_count < 2) throw InvalidInput("uniform_tendency_division: bad interval");
    auto tau = [&](double x) -> Sign {
        const auto t = tendency(f, x, cfg);
        if (!t) throw NonStabilizingProbe("tendency did not stabilize", x);
        return *t;
    };
    const double step = (b - a) / probe_count;
    std::vector<double> breaks{a};
    double prev_x = a + step;
    Sign prev_t = tau(prev_x);
    const double tol = std::max(1e-12, (b - a) * 1e-13);
    // Transitions closer than half a probe step are one breakpoint seen from
    // both sides (a probe landing exactly on an extremum reports two).
    const double merge = 0.5 * step;
    for (int i = 2; i < probe_count; ++i) {
        const double x = a + i * step;
        const Sign t = tau(x);
        if (t != prev_t) {
            const double found = locate_trend_transition(f.eval, prev_x, x, tol);
            if (found - breaks.back() > merge) breaks.push_back(found);
        }
        prev_x = x;
        prev_t = t;
    }
    if (b - breaks.back() > merge) breaks.push_back(b);
    else breaks.back() = b;
    return breaks;
}

NewtonLeibnizCheck semidiscrete_newton_leibniz(const FunctionHandle& f,
                                               const std::vector<double>& division,
                                               const LimitConfig& cfg) {
    const size_t n = division.size();
    if (n < 2) throw InvalidInput("semidiscrete_newton_leibniz: division needs >= 2 points");
    for (size_t i = 0; i + 1 < n; ++i)
        if (!(division[i] < division[i + 1]))
            throw InvalidInput("semidiscrete_newton_leibniz: division not increasing");

    NewtonLeibnizCheck out{0.0, 0.0, 0.0};
    for (size_t i = 0; i + 1 < n; ++i) {
        const double mid = 0.5 * (division[i] + division[i + 1]);
        const auto t = tendency(f, mid, cfg);
        if (!t) throw InvalidInput("semidiscrete_newton_leibniz: tendency undefined inside piece");
        out.lhs += double(*t) * (division[i + 1] - division[i]);
    }
    double rhs = 0.0;
    for (size_t i = 0; i + 1 < n; ++i) {  // right detachments, endpoint a included
        const auto d = one_sided_detachment(f, division[i], Side::Right, cfg);
        if (!d) throw InvalidInput("semidiscrete_newton_leibniz: right detachment undefined");
        rhs += double(*d) * division[i];
    }
    for (size_t i = 1; i < n; ++i) {  // left detachments, endpoint b included
        const auto d = one_sided_detachment(f, division[i], Side::Left, cfg);
        if (!d) throw InvalidInput("semidiscrete_newton_leibniz: left detachment undefined");
        rhs += double(*d) * division[i];
    }
    out.rhs = -rhs;
    out.residual = out.lhs - out.rhs;
    return out;
}

// ---- analogous mean-value witnesses -------------------------------------------

static void check_probe_continuity(const FunctionHandle& f, double a, double b,
                                   const WitnessOptions& opt) {
    const double step = (b - a) / opt.probes;
    double prev = f.eval(a), max_jump = 0.0, scale = std::fabs(prev);
    std::vector<double> jumps;
    jumps.reserve(opt.probes);
    for (int i = 1; i <= opt.probes; ++i) {
        const double v = f.eval(a + i * step);
        jumps.push_back(std::fabs(v - prev));
        max_jump = std::max(max_jump, jumps.back());
        scale = std::max(scale, std::fabs(v));
        prev = v;
    }
    // Robust slope scale: a jump far beyond the bulk of the lattice slopes
    // marks a discontinuity at probe resolution.
    std::nth_element(jumps.begin(), jumps.begin() + size_t(jumps.size() * 0.95), jumps.end());
    const double bulk = jumps[size_t(jumps.size() * 0.95)];
    if (max_jump > std::max(10.0 * bulk, opt.continuity_tol * std::max(1.0, scale)))
        throw NoWitness("continuity precondition failed at probe resolution");
}

static double witness_increasing(const FunctionHandle& f, double a, double b, double w,
                                 const LimitConfig& cfg, const WitnessOptions& opt) {
    // Scan for up-crossings of the level w; refine each, keep the first whose
    // right detachment is +1 and left detachment differs from +1.
    const double step = (b - a) / opt.probes;
    double prev_x = a, prev_v = f.eval(a);
    for (int i = 1; i <= opt.probes; ++i) {
        const double x = a + i * step;
        const double v = f.eval(x);
        if (prev_v <= w && v > w) {
            double lo = prev_x, hi = x;
            for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::fabs(hi)); ++it) {
                const double mid = 0.5 * (lo + hi);
                (f.eval(mid) <= w ? lo : hi) = mid;
            }
            const double c = lo;
            if (std::fabs(f.eval(c) - w) <= std::max(opt.value_tol, 1e-7)) {
                const auto dr = one_sided_detachment(f, c, Side::Right, cfg);
                const auto dl = one_sided_detachment(f, c, Side::Left, cfg);
                if (dr && *dr == +1 && (!dl || *dl != +1)) return c;
            }
        }
        prev_x = x;
        prev_v = v;
    }
    throw NoWitness("no level crossing with matching right detachment found");
}

double find_tendency_witness(const FunctionHandle& f, double a, double b, double v,
                             const LimitConfig& cfg, const WitnessOptions& opt) {
    if (!(a < b)) throw InvalidInput("find_tendency_witness: bad interval");
    check_probe_continuity(f, a, b, opt);
    const double fa = f.eval(a), fb = f.eval(b);
    if (fa == fb) throw NoWitness("f(a) = f(b)");
    if (!(v > std::min(fa, fb) && v < std::max(fa, fb)))
        throw NoWitness("level not strictly between f(a) and f(b)");
    if (fb > fa) return witness_increasing(f, a, b, v, cfg, opt);
    // Decreasing case: mirror the values.
    FunctionHandle neg;
    neg.name = f.name + ":neg";
    auto base = f.eval;
    neg.eval = [base](double x) { return -base(x); };
    if (f.exact_side_signs) {
        auto oracle = f.exact_side_signs;
        neg.exact_side_signs = [oracle](double x, Side s) -> std::optional<SignSet> {
            auto set = oracle(x, s);
            if (!set) return std::nullopt;
            SignSet flipped;
            if (set->pos) flipped.add(-1);
            if (set->zero) flipped.add(0);
            if (set->neg) flipped.add(+1);
            return flipped;
        };
    }
    return witness_increasing(neg, a, b, -v, cfg, opt);
}

double find_zero_tendency_witness(const FunctionHandle& f, double a, double b,
                                  const LimitConfig& cfg, const WitnessOptions& opt) {
    if (!(a < b)) throw InvalidInput("find_zero_tendency_witness: bad interval");
    check_probe_continuity(f, a, b, opt);
    const double fa = f.eval(a), fb = f.eval(b);
    if (std::fabs(fa - fb) > opt.value_tol * std::max(1.0, std::fabs(fa)))
        throw NoWitness("f(a) != f(b)");
    const double step = (b - a) / opt.probes;
    double best_max = fa, best_min = fa, xmax = a, xmin = a;
    for (int i = 1; i < opt.probes; ++i) {
        const double x = a + i * step;
        const double val = f.eval(x);
        if (val > best_max) best_max = val, xmax = x;
        if (val < best_min) best_min = val, xmin = x;
    }
    if (best_max - best_min <= opt.value_tol * std::max(1.0, std::fabs(fa)))
        return 0.5 * (a + b);  // constant at probe resolution, any interior point works
    const bool use_max = best_max - fa >= fa - best_min;
    const double x0 = use_max ? xmax : xmin;
    // Refine by bisecting the sign of the symmetric difference: it flips
    // exactly at the extremum and resolves it to well below the ladder's
    // smallest step, which the tendency estimate at the witness needs.
    const double H = 0.25 * step;
    auto g = [&](double x) { return sgn(f.eval(x + H) - f.eval(x - H)); };
    double lo = std::max(a, x0 - step), hi = std::min(b, x0 + step);
    const Sign want = use_max ? +1 : -1;  // trend sign left of the extremum
    if (g(lo) != want || g(hi) != -want) return x0;  // kinked lattice hit, keep the probe
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
        const double mid = 0.5 * (lo + hi);
        const Sign sm = g(mid);
        if (sm == 0) return mid;  // flat span around the extremum
        if (sm == want) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double c = 0.5 * (lo + hi);
    (void)cfg;
    return c;
}

}  // namespace sdc
