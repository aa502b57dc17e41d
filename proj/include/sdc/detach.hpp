#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sdc/core.hpp"
#include "sdc/limits.hpp"

namespace sdc {

// A 1-D function under analysis. Pathological fixtures (functions defined by
// dense sets that no float lattice can see) carry an exact side-sign oracle:
// when present for a point, it supersedes sampling and returns the true set
// of one-sided sign partial-limits. An exact derivative, when known, enables
// the detachment-vs-derivative cross checks.
struct FunctionHandle {
    std::string name;
    std::function<double(double)> eval;
    std::function<std::optional<SignSet>(double x, Side side)> exact_side_signs;  // may be null
    std::function<double(double)> derivative;                                     // may be null

    bool has_oracle() const { return bool(exact_side_signs); }
    bool has_derivative() const { return bool(derivative); }
};

// Six bits: entries 0..2 record whether the sign partial-limits +1, 0, -1
// occur on the left side; entries 3..5 the same for the right side.
struct PartialDetachmentsVector {
    std::array<bool, 6> bits{};

    bool operator==(const PartialDetachmentsVector& o) const { return bits == o.bits; }
    std::string to_string() const;

    static PartialDetachmentsVector from_sides(const SignSet& left, const SignSet& right);
    static PartialDetachmentsVector from_string(const std::string& s);  // e.g. "110110"
    SignSet left_set() const;
    SignSet right_set() const;
    bool admissible() const;  // at least one bit per 3-block
};

struct SidedDetachments {
    Sign sup_plus = 0, inf_plus = 0, sup_minus = 0, inf_minus = 0;
};

// The six failure modes keeping a point from being (signposted) detachable.
struct DisdetachmentFlags {
    std::array<bool, 6> type{};  // type[0] == first type, ...

    bool any() const;
    bool detachable() const;             // only first/second type flags, if any
    bool signposted_detachable() const;  // only third/fourth type flags, if any
    bool upper_detachable() const { return !type[2]; }
    bool lower_detachable() const { return !type[3]; }
    std::string to_string() const;
};

// Ordered disjoint intervals covering the reals plus matching output scalars;
// the quantizer behind the generalized detachment and quantized derivative.
struct QuantizationScheme {
    struct Interval {
        double lo, hi;
        bool lo_closed, hi_closed;
    };
    std::vector<Interval> cells;
    std::vector<double> values;

    void validate() const;
    double classify(double t) const;

    // { {0}, (-inf,0), (0,inf) } -> {0, -1, +1}: reproduces the plain sign.
    static QuantizationScheme classic();
    // Symmetric bands split at the given thresholds: |t| in [0,b1), [b1,b2), ...
    static QuantizationScheme abs_bands(const std::vector<double>& bounds,
                                        const std::vector<double>& values);
};

// ---- operators -------------------------------------------------------------

// The set of one-sided sign partial-limits at x (oracle when available,
// sampled tail otherwise).
SignSet side_sign_set(const FunctionHandle& f, double x, Side side, const LimitConfig& cfg);

enum class SideSpec { Left, Right, Both };

// Stabilized limit of sgn[f(x+h) - f(x)]; nullopt when the tail does not
// stabilize (that is data, not an error).
std::optional<Sign> detachment(const FunctionHandle& f, double x, SideSpec side,
                               const LimitConfig& cfg);

// Stabilized limit of sgn[h * (f(x+h) - f(x))]; defined iff the one-sided
// detachments satisfy right = -left.
std::optional<Sign> signposted_detachment(const FunctionHandle& f, double x,
                                          const LimitConfig& cfg);

SidedDetachments sided_detachments(const FunctionHandle& f, double x, const LimitConfig& cfg);

PartialDetachmentsVector partial_detachments_vector(const FunctionHandle& f, double x,
                                                    const LimitConfig& cfg);

DisdetachmentFlags classify_disdetachment(const PartialDetachmentsVector& v);

// 0 exactly on the three extremum patterns, -1 otherwise.
int extrema_indicator(const PartialDetachmentsVector& v);

// sgn[right detachment - left detachment]; needs both sides stabilized.
std::optional<Sign> tendency(const FunctionHandle& f, double x, const LimitConfig& cfg);

// One-sided limsup/liminf difference quotients over the ladder tail.
struct Derivates {
    double upper_right, upper_left, lower_right, lower_left;  // D+, D-, D_+, D_-
};
Derivates dini_derivates(const FunctionHandle& f, double x, const LimitConfig& cfg);

enum class JointType { First, Second, Third, NotJoint };
struct JointClassification {
    JointType type = JointType::NotJoint;
    std::string reason;  // set when NotJoint
};
JointClassification classify_joint_point(const FunctionHandle& f, double x,
                                         const LimitConfig& cfg);

std::optional<double> generalized_detachment(const FunctionHandle& f, double x, SideSpec side,
                                             const QuantizationScheme& scheme,
                                             const LimitConfig& cfg);

std::optional<double> quantized_derivative(const FunctionHandle& f, double x, SideSpec side,
                                           const QuantizationScheme& scheme,
                                           const LimitConfig& cfg);

// The 49-case family of functions realizing every admissible partial
// detachments vector at the origin, built from dense-set channels evaluated
// symbolically. Returns the vector recovered through the operator pipeline.
PartialDetachmentsVector weather_vane_vector(const PartialDetachmentsVector& v,
                                             const LimitConfig& cfg);

// FunctionHandle for one weather-vane case (oracle-backed at x = 0).
FunctionHandle make_weather_vane(const PartialDetachmentsVector& v);

// Breakpoints a = x_0 < ... < x_n = b between which the estimated tendency is
// constant. Transitions between probes are refined by bisection.
std::vector<double> uniform_tendency_division(const FunctionHandle& f, double a, double b,
                                              int probe_count, const LimitConfig& cfg);

struct NewtonLeibnizCheck {
    double lhs;       // integral of the tendency over [a,b]
    double rhs;       // -[sum of right detachments*x + sum of left detachments*x]
    double residual;  // lhs - rhs
};
NewtonLeibnizCheck semidiscrete_newton_leibniz(const FunctionHandle& f,
                                               const std::vector<double>& division,
                                               const LimitConfig& cfg);

struct WitnessOptions {
    int probes = 10000;
    double value_tol = 1e-9;
    double continuity_tol = 1e-3;  // relative jump threshold, heuristic
};

// Point c with f(c) = v and estimated tendency sgn[f(b)-f(a)], located by the
// scan-then-bisect construction; throws NoWitness when preconditions fail.
double find_tendency_witness(const FunctionHandle& f, double a, double b, double v,
                             const LimitConfig& cfg, const WitnessOptions& opt = {});

// Interior point with estimated tendency 0 for continuous f with f(a) = f(b).
double find_zero_tendency_witness(const FunctionHandle& f, double a, double b,
                                  const LimitConfig& cfg, const WitnessOptions& opt = {});

}  // namespace sdc
