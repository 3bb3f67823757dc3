// qloss: quantum-loss trajectories and non-Markovianity reports for qubit
// channels acting on one half of a Bell pair.

#include "qloss/cli_io.hpp"
#include "qloss/validation.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>

namespace {

void add_run_options(CLI::App& cmd, qloss::RunConfig& cfg, std::string& rate, std::string& rates) {
    cmd.add_option("--model", cfg.model, "dephasing | amplitude-damping | pauli")->required();
    cmd.add_option("--rate", rate, "rate for dephasing: const:a, sin:a,w, dcos:a,b,w or table:path");
    cmd.add_option("--rates", rates, "three comma-joined rates for pauli, e.g. const:1,const:1,sin:1,2");
    cmd.add_option("--lambda", cfg.lambda, "Lorentzian spectral width (amplitude-damping)");
    cmd.add_option("--gamma0", cfg.gamma0, "Lorentzian coupling constant (amplitude-damping)");
    cmd.add_option("--t-max", cfg.t_max, "time horizon (default 20 / max rate)");
    cmd.add_option("--steps", cfg.steps, "grid points")->capture_default_str();
    cmd.add_option("--threshold", cfg.deriv_threshold, "dL_Q/dt threshold for decrease")->capture_default_str();
}

void finish_config(qloss::RunConfig& cfg, const std::string& rate, const std::string& rates) {
    if (!rate.empty()) cfg.rates = {rate};
    if (!rates.empty()) cfg.rates = qloss::split_rate_list(rates);
}

struct Computed {
    qloss::ChannelModel channel;
    double t_max;
    qloss::Trajectory traj;
    qloss::NonMarkovReport report;
};

Computed compute(const qloss::RunConfig& cfg) {
    auto channel = qloss::build_channel(cfg);
    const double t_max = cfg.t_max.value_or(qloss::default_t_max(channel));
    auto traj = qloss::sample_trajectory(channel, t_max, cfg.steps);
    auto report = qloss::measure(traj, cfg.deriv_threshold);
    return {std::move(channel), t_max, std::move(traj), std::move(report)};
}

template <class Writer>
void write_to(const std::string& path, Writer writer) {
    if (path == "-") {
        writer(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    writer(out);
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

int cmd_run(const qloss::RunConfig& cfg) {
    const auto c = compute(cfg);
    write_to(cfg.out, [&](std::ostream& os) { qloss::write_trajectory_csv(os, c.traj); });
    write_to(cfg.report, [&](std::ostream& os) {
        os << qloss::report_json(c.channel, c.t_max, cfg.steps, c.report).dump(2) << '\n';
    });
    return 0;
}

int cmd_measure(const qloss::RunConfig& cfg) {
    const auto c = compute(cfg);
    std::cout << qloss::report_json(c.channel, c.t_max, cfg.steps, c.report).dump(2) << '\n';
    return 0;
}

int cmd_validate(const qloss::ValidationOptions& options) {
    const auto results = qloss::run_validation(options);
    std::size_t width = 0;
    for (const auto& r : results) width = std::max(width, r.name.size());
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width) + 2) << r.name
                  << r.detail << '\n';
        all = all && r.passed;
    }
    std::cout << (all ? "all checks passed" : "some checks FAILED") << '\n';
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum-loss non-Markovianity witness for qubit channels"};
    app.require_subcommand(1);

    qloss::RunConfig run_cfg;
    std::string run_rate, run_rates;
    auto* run = app.add_subcommand("run", "sample a trajectory, write CSV and a JSON report");
    add_run_options(*run, run_cfg, run_rate, run_rates);
    run->add_option("--out", run_cfg.out, "CSV output path ('-' for stdout)")->capture_default_str();
    run->add_option("--report", run_cfg.report, "JSON report path ('-' for stdout)")->capture_default_str();

    qloss::RunConfig measure_cfg;
    std::string measure_rate, measure_rates;
    auto* meas = app.add_subcommand("measure", "print the JSON non-Markovianity report");
    add_run_options(*meas, measure_cfg, measure_rate, measure_rates);

    qloss::ValidationOptions validation;
    auto* val = app.add_subcommand("validate", "run the built-in oracle cross-checks");
    val->add_option("--integrator-step", validation.integrator_step, "RK4 step for the integrator checks")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            finish_config(run_cfg, run_rate, run_rates);
            return cmd_run(run_cfg);
        }
        if (meas->parsed()) {
            finish_config(measure_cfg, measure_rate, measure_rates);
            return cmd_measure(measure_cfg);
        }
        return cmd_validate(validation);
    } catch (const std::exception& e) {
        std::cerr << "qloss: " << e.what() << '\n';
        return 2;
    }
}
