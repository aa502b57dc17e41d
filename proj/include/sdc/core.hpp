#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sdc {

// Three-valued sign, the codomain of all detachment-style operators.
using Sign = int;

inline Sign sgn(double r) {
    if (r > 0.0) return +1;
    if (r < 0.0) return -1;
    return 0;
}

// Sign with a symmetric deadband: |r| <= band collapses to 0.
inline Sign sgn_band(double r, double band) {
    if (r > band) return +1;
    if (r < -band) return -1;
    return 0;
}

// Subset of {-1, 0, +1}.
struct SignSet {
    bool neg = false, zero = false, pos = false;

    void add(Sign s) {
        if (s > 0) pos = true;
        else if (s < 0) neg = true;
        else zero = true;
    }
    bool contains(Sign s) const {
        return s > 0 ? pos : (s < 0 ? neg : zero);
    }
    bool empty() const { return !neg && !zero && !pos; }
    int size() const { return int(neg) + int(zero) + int(pos); }
    bool singleton() const { return size() == 1; }

    // Extrema under the order +1 > 0 > -1.
    Sign max() const {
        if (pos) return +1;
        if (zero) return 0;
        return -1;
    }
    Sign min() const {
        if (neg) return -1;
        if (zero) return 0;
        return +1;
    }
    // The unique element; only valid when singleton().
    Sign only() const { return max(); }

    bool operator==(const SignSet& o) const {
        return neg == o.neg && zero == o.zero && pos == o.pos;
    }
};

struct Point2 {
    double x = 0.0, y = 0.0;
    bool operator==(const Point2& o) const { return x == o.x && y == o.y; }
};

inline double cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }

// ---- error hierarchy -------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidInput : Error {
    using Error::Error;
};

struct RangeError : Error {
    using Error::Error;
};

struct InsufficientData : Error {
    using Error::Error;
};

struct EvalError : Error {
    double offending_h;
    EvalError(const std::string& msg, double h) : Error(msg), offending_h(h) {}
};

struct QuadratureError : Error {
    double achieved;  // error estimate at the point of giving up
    QuadratureError(const std::string& msg, double est) : Error(msg), achieved(est) {}
};

struct NoWitness : Error {
    using Error::Error;
};

struct ParseError : Error {
    long line;
    ParseError(const std::string& msg, long line_no) : Error(msg), line(line_no) {}
};

struct NonStabilizingProbe : Error {
    double location;
    NonStabilizingProbe(const std::string& msg, double loc) : Error(msg), location(loc) {}
};

}  // namespace sdc
