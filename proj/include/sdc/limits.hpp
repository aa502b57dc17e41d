#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "sdc/core.hpp"

namespace sdc {

enum class Side { Left, Right };

inline double side_sign(Side s) { return s == Side::Right ? +1.0 : -1.0; }

// Parameters of the geometric h-ladder used to estimate one-sided limits.
// h_k = h0 * ratio^k for k = 0 .. steps-1; only the final tail_len samples
// decide stabilization. zero_tol is a relative deadband: an increment counts
// as zero when its magnitude is below zero_tol times the largest increment
// magnitude seen in the tail window. steps is capped so the ladder stays
// above the double-precision noise floor for O(1) operands (h ~ sqrt(eps)).
struct LimitConfig {
    double h0 = 1e-2;
    double ratio = 0.5;
    int steps = 20;
    double zero_tol = 1e-12;
    int tail_len = 8;

    void validate() const;
    double h(int k) const;
};

// Set of sign values occurring within the final tail_len samples: the
// finite-sample stand-in for the set of one-sided partial limits.
SignSet tail_sign_set(const std::vector<Sign>& samples, const LimitConfig& cfg);

// Tail mean when the tail has stabilized (max-min within the tolerance),
// otherwise nothing.
std::optional<double> approx_limit(const std::vector<double>& samples, const LimitConfig& cfg);

// Signs of f(x + side*h_k) - f(x) along the ladder, with the relative
// deadband described at LimitConfig.
std::vector<Sign> one_sided_sign_samples(const std::function<double(double)>& f, double x,
                                         Side side, const LimitConfig& cfg);

// Raw increments f(x + side*h_k) - f(x), used by the quotient-based operators.
std::vector<double> one_sided_increments(const std::function<double(double)>& f, double x,
                                         Side side, const LimitConfig& cfg);

}  // namespace sdc
