// validation.hpp
// Self-checks run by `qloss validate`: closed forms against the integrator,
// the dI/dt = -dL_Q/dt duality, conservation and bounds, and analytic versus
// numeric verdicts on the reference configurations.

#pragma once

#include "qloss/witness.hpp"

#include <string>
#include <vector>

namespace qloss {

struct ReferenceConfig {
    std::string label;
    ChannelModel channel;
    double t_max;
    std::size_t steps;
};

/// The six reference runs: dephasing (constant, sin t), amplitude damping
/// (weak and strong coupling) and pauli (1,1,1) and (1,1,-1.5).
std::vector<ReferenceConfig> reference_configs();

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationOptions {
    double integrator_step = 1e-3;
};

std::vector<CheckResult> run_validation(const ValidationOptions& options = {});

}  // namespace qloss
