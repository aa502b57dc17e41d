#include "sdc/bench.hpp"

#include <chrono>
#include <random>
#include <vector>

#include "sdc/core.hpp"

namespace sdc {

namespace {

template <typename F>
double time_ns_per_sample(F&& body, int64_t samples) {
    using clock = std::chrono::steady_clock;
    // One warmup pass, then the timed pass.
    body();
    const auto t0 = clock::now();
    body();
    const auto t1 = clock::now();
    const double ns = std::chrono::duration<double, std::nano>(t1 - t0).count();
    return ns / double(samples);
}

}  // namespace

BenchReport run_sign_vs_quotient_bench(int64_t samples, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> val(-1.0, 1.0);
    std::uniform_real_distribution<double> step(1e-6, 1e-2);
    std::vector<double> fx(samples), fxh(samples), h(samples);
    for (int64_t i = 0; i < samples; ++i) {
        fx[i] = val(rng);
        fxh[i] = val(rng);
        h[i] = step(rng);
    }

    volatile int64_t sign_sink = 0;
    volatile double quot_sink = 0.0;

    BenchReport r;
    r.samples = samples;
    r.sign_ns_per_sample = time_ns_per_sample(
        [&] {
            int64_t acc = 0;
            for (int64_t i = 0; i < samples; ++i) acc += sgn(fxh[i] - fx[i]);
            sign_sink = sign_sink + acc;
        },
        samples);
    r.quotient_ns_per_sample = time_ns_per_sample(
        [&] {
            double acc = 0.0;
            for (int64_t i = 0; i < samples; ++i) acc += (fxh[i] - fx[i]) / h[i];
            quot_sink = quot_sink + acc;
        },
        samples);
    r.ratio = r.sign_ns_per_sample > 0.0 ? r.quotient_ns_per_sample / r.sign_ns_per_sample : 0.0;
    return r;
}

}  // namespace sdc
