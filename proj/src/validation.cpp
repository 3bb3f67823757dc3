#include "qloss/validation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

namespace qloss {

namespace {

constexpr double integrator_tolerance = 1e-6;
constexpr double duality_tolerance = 1e-7;
constexpr double conservation_tolerance = 1e-9;

std::string sci(double v) {
    std::ostringstream s;
    s.precision(3);
    s << std::scientific << v;
    return s.str();
}

struct OracleCase {
    std::string label;
    ChannelModel channel;
    double t_end;
};

std::vector<OracleCase> oracle_cases() {
    return {
        {"dephasing sin:1,1", ChannelModel::dephasing(RateFunction::sinusoid(1.0, 1.0)), 4.0},
        {"amplitude-damping lambda=4 gamma0=1", ChannelModel::amplitude_damping({4.0, 1.0}), 2.0},
        {"pauli const:1,const:0.5,dcos:0.8,0.3,2",
         ChannelModel::pauli(RateFunction::constant(1.0), RateFunction::constant(0.5),
                             RateFunction::damped_cosine(0.8, 0.3, 2.0)),
         4.0},
    };
}

CheckResult integrator_check(const OracleCase& c, double step) {
    CheckResult r{"closed form vs integrator: " + c.label, false, {}};
    try {
        double worst = 0.0;
        for (int k = 1; k <= 20; ++k) {
            const double t = c.t_end * k / 20.0;
            const auto closed = evolve_bell(c.channel, t);
            const auto numeric = integrate_master_equation(c.channel, t, step);
            worst = std::max(worst, max_abs_diff(closed.matrix(), numeric.matrix()));
        }
        r.passed = worst <= integrator_tolerance;
        r.detail = "max deviation " + sci(worst) + " (tolerance " + sci(integrator_tolerance) + ")";
    } catch (const std::exception& e) {
        r.detail = e.what();
    }
    return r;
}

}  // namespace

std::vector<ReferenceConfig> reference_configs() {
    const double four_pi = 4.0 * std::numbers::pi;
    return {
        {"dephasing const:1", ChannelModel::dephasing(RateFunction::constant(1.0)), four_pi, 4001},
        {"dephasing sin:1,1", ChannelModel::dephasing(RateFunction::sinusoid(1.0, 1.0)), four_pi, 4001},
        {"amplitude-damping lambda=4 gamma0=1", ChannelModel::amplitude_damping({4.0, 1.0}), 30.0, 3001},
        {"amplitude-damping lambda=0.2 gamma0=2", ChannelModel::amplitude_damping({0.2, 2.0}), 30.0, 3001},
        {"pauli const:1,const:1,const:1",
         ChannelModel::pauli(RateFunction::constant(1.0), RateFunction::constant(1.0), RateFunction::constant(1.0)),
         5.0, 1001},
        {"pauli const:1,const:1,const:-1.5",
         ChannelModel::pauli(RateFunction::constant(1.0), RateFunction::constant(1.0), RateFunction::constant(-1.5)),
         5.0, 1001},
    };
}

std::vector<CheckResult> run_validation(const ValidationOptions& options) {
    std::vector<CheckResult> results;
    for (const auto& c : oracle_cases()) results.push_back(integrator_check(c, options.integrator_step));

    for (const auto& cfg : reference_configs()) {
        std::optional<Trajectory> traj;
        std::string failure;
        try {
            traj = sample_trajectory(cfg.channel, cfg.t_max, cfg.steps);
        } catch (const std::exception& e) {
            failure = e.what();
        }

        const Verdict analytic = analytic_verdict(cfg.channel, cfg.t_max);
        if (!traj) {
            results.push_back({"trajectory: " + cfg.label, false, failure});
            results.push_back({"verdict agreement: " + cfg.label, false,
                               "analytic " + to_string(analytic) + ", numeric unavailable"});
            continue;
        }

        double duality = 0.0;
        for (std::size_t i = 1; i + 1 < traj->times.size(); ++i) {
            const double dl = traj->loss_derivative[i];
            duality = std::max(duality, std::abs(traj->mutual_info_derivative[i] + dl) / std::max(1.0, std::abs(dl)));
        }
        results.push_back({"dI/dt = -dL_Q/dt: " + cfg.label, duality <= duality_tolerance,
                           "max scaled residual " + sci(duality)});

        double conservation = 0.0;
        double bound_violation = 0.0;
        for (const auto& s : traj->snapshots) {
            conservation = std::max(conservation, std::abs(s.mutual_info + s.quantum_loss - 2.0));
            bound_violation = std::max({bound_violation, -s.quantum_loss,
                                        s.quantum_loss - 2.0 * std::min(1.0, s.s_exchange), -s.mutual_info,
                                        s.mutual_info - 2.0 * std::min(s.s_system, s.s_ancilla)});
        }
        results.push_back({"I + L_Q = 2: " + cfg.label, conservation <= conservation_tolerance,
                           "max deviation " + sci(conservation)});
        results.push_back({"loss and mutual-information bounds: " + cfg.label, bound_violation <= conservation_tolerance,
                           "worst excess " + sci(std::max(bound_violation, 0.0))});

        const auto report = measure(*traj);
        const Verdict numeric = report.markovian ? Verdict::markovian : Verdict::non_markovian;
        results.push_back({"verdict agreement: " + cfg.label, numeric == analytic,
                           "analytic " + to_string(analytic) + ", numeric " + to_string(numeric)});
    }
    return results;
}

}  // namespace qloss
