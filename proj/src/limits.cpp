#include "sdc/limits.hpp"

#include <algorithm>
#include <cmath>

namespace sdc {

void LimitConfig::validate() const {
    if (!(ratio > 0.0 && ratio < 1.0)) throw InvalidInput("LimitConfig: ratio must be in (0,1)");
    if (!(h0 > 0.0)) throw InvalidInput("LimitConfig: h0 must be positive");
    if (zero_tol < 0.0) throw InvalidInput("LimitConfig: zero_tol must be >= 0");
    if (tail_len < 2) throw InvalidInput("LimitConfig: tail_len must be >= 2");
    if (steps < tail_len) throw InvalidInput("LimitConfig: steps must be >= tail_len");
}

double LimitConfig::h(int k) const { return h0 * std::pow(ratio, k); }

SignSet tail_sign_set(const std::vector<Sign>& samples, const LimitConfig& cfg) {
    cfg.validate();
    if ((int)samples.size() < cfg.tail_len)
        throw InsufficientData("tail_sign_set: fewer samples than tail_len");
    SignSet set;
    for (size_t i = samples.size() - cfg.tail_len; i < samples.size(); ++i) set.add(samples[i]);
    return set;
}

std::optional<double> approx_limit(const std::vector<double>& samples, const LimitConfig& cfg) {
    cfg.validate();
    if ((int)samples.size() < cfg.tail_len)
        throw InsufficientData("approx_limit: fewer samples than tail_len");
    double lo = samples.back(), hi = samples.back(), sum = 0.0;
    for (size_t i = samples.size() - cfg.tail_len; i < samples.size(); ++i) {
        lo = std::min(lo, samples[i]);
        hi = std::max(hi, samples[i]);
        sum += samples[i];
    }
    const double mean = sum / cfg.tail_len;
    if (!std::isfinite(mean)) return std::nullopt;
    if (hi - lo <= cfg.zero_tol * std::max(1.0, std::fabs(mean))) return mean;
    return std::nullopt;
}

std::vector<double> one_sided_increments(const std::function<double(double)>& f, double x,
                                         Side side, const LimitConfig& cfg) {
    cfg.validate();
    const double fx = f(x);
    if (!std::isfinite(fx)) throw EvalError("one_sided_increments: f(x) not finite", 0.0);
    std::vector<double> inc(cfg.steps);
    for (int k = 0; k < cfg.steps; ++k) {
        const double h = cfg.h(k);
        const double fv = f(x + side_sign(side) * h);
        if (std::isnan(fv)) throw EvalError("one_sided_increments: f(x+h) is NaN", h);
        inc[k] = fv - fx;
    }
    return inc;
}

std::vector<Sign> one_sided_sign_samples(const std::function<double(double)>& f, double x,
                                         Side side, const LimitConfig& cfg) {
    const std::vector<double> inc = one_sided_increments(f, x, side, cfg);
    double tail_scale = 0.0;
    for (int k = cfg.steps - cfg.tail_len; k < cfg.steps; ++k)
        tail_scale = std::max(tail_scale, std::fabs(inc[k]));
    const double band = cfg.zero_tol * tail_scale;
    std::vector<Sign> out(inc.size());
    for (size_t k = 0; k < inc.size(); ++k) out[k] = sgn_band(inc[k], band);
    return out;
}

}  // namespace sdc
