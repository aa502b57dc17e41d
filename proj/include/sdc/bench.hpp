#pragma once

#include <cstdint>

namespace sdc {

// Wall-clock comparison of the two monotony kernels: quantizing the raw
// increment against dividing it by the step. Ratios are hardware-dependent;
// callers report them, they never assert on them.
struct BenchReport {
    double sign_ns_per_sample = 0.0;
    double quotient_ns_per_sample = 0.0;
    double ratio = 0.0;  // quotient / sign
    int64_t samples = 0;
};

BenchReport run_sign_vs_quotient_bench(int64_t samples = 1 << 22, uint64_t seed = 42);

}  // namespace sdc
