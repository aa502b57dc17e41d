#pragma once

#include <string>
#include <vector>

#include "sdc/detach.hpp"

namespace sdc {

// Named 1-D test functions addressable from the CLI and the test suites.
struct Fixture {
    FunctionHandle handle;
    double lo = -1.0, hi = 1.0;  // interval the fixture is meant to be probed on
    bool continuous = true;
};

// Throws InvalidInput for unknown names. Accepts "weathervane:v=110100".
Fixture get_fixture(const std::string& name);

std::vector<std::string> fixture_names();

// The differentiable suite (every member carries an exact derivative).
std::vector<std::string> differentiable_fixture_names();

// Continuous fixtures suitable for dense extremum scans.
std::vector<std::string> scan_fixture_names();

// Scales a handle by a constant: x -> c*f(x).
FunctionHandle scale_handle(const FunctionHandle& f, double c);

}  // namespace sdc
