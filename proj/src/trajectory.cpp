// Trajectory sampling kernels. Every grid point is independent once its joint
// state is known, so the parallel kernel and the serial reference run the same
// per-point code and must agree bit for bit.

#include "qloss/witness.hpp"

#include <exception>
#include <sstream>

namespace qloss {

namespace {

constexpr double bell_system_entropy = 1.0;

Trajectory make_grid(const ChannelModel& channel, double t_max, std::size_t n_points) {
    if (!(t_max > 0.0)) throw std::invalid_argument("sample_trajectory: t_max must be positive");
    if (n_points < 3) throw std::invalid_argument("sample_trajectory: need at least 3 grid points");
    if (t_max > channel.horizon()) {
        std::ostringstream msg;
        msg << "sample_trajectory: t_max=" << t_max << " exceeds the channel horizon " << channel.horizon();
        throw std::invalid_argument(msg.str());
    }
    Trajectory traj{channel, 0.0, {}, {}, {}, {}, {}};
    traj.spacing = t_max / static_cast<double>(n_points - 1);
    traj.times.resize(n_points);
    for (std::size_t i = 0; i < n_points; ++i) traj.times[i] = static_cast<double>(i) * traj.spacing;
    traj.times.back() = t_max;
    traj.states.resize(n_points);
    traj.snapshots.resize(n_points);
    return traj;
}

// Generic channels have no closed form; march the integrator along the grid.
void integrate_generic_states(Trajectory& traj) {
    const auto& model = std::get<GenericModel>(traj.channel.model());
    const auto gen = generator_of(traj.channel);
    traj.states[0] = bell_state().projector().matrix();
    for (std::size_t i = 1; i < traj.times.size(); ++i) {
        traj.states[i] = propagate(gen, traj.states[i - 1], traj.times[i - 1], traj.times[i], model.step);
    }
}

void evaluate_point(Trajectory& traj, std::size_t i, bool generic) {
    const double t = traj.times[i];
    if (generic) {
        const DensityMatrix rho(hermitian_part(traj.states[i]));
        traj.snapshots[i] = take_snapshot(t, rho, bell_system_entropy);
    } else {
        const auto rho = evolve_bell(traj.channel, t);
        traj.snapshots[i] = take_snapshot(t, rho, bell_system_entropy);
        traj.states[i] = rho.matrix();
    }
}

void differentiate(Trajectory& traj) {
    const std::size_t n = traj.times.size();
    const double h = traj.spacing;
    traj.loss_derivative.resize(n);
    traj.mutual_info_derivative.resize(n);
    auto diff = [&](auto field, std::vector<double>& out) {
        out[0] = (field(traj.snapshots[1]) - field(traj.snapshots[0])) / h;
        for (std::size_t i = 1; i + 1 < n; ++i)
            out[i] = (field(traj.snapshots[i + 1]) - field(traj.snapshots[i - 1])) / (2.0 * h);
        out[n - 1] = (field(traj.snapshots[n - 1]) - field(traj.snapshots[n - 2])) / h;
    };
    diff([](const EntropySnapshot& s) { return s.quantum_loss; }, traj.loss_derivative);
    diff([](const EntropySnapshot& s) { return s.mutual_info; }, traj.mutual_info_derivative);
}

}  // namespace

Trajectory sample_trajectory_serial(const ChannelModel& channel, double t_max, std::size_t n_points) {
    auto traj = make_grid(channel, t_max, n_points);
    const bool generic = channel.family() == ChannelModel::Family::generic;
    if (generic) integrate_generic_states(traj);
    for (std::size_t i = 0; i < n_points; ++i) evaluate_point(traj, i, generic);
    differentiate(traj);
    return traj;
}

Trajectory sample_trajectory(const ChannelModel& channel, double t_max, std::size_t n_points) {
    auto traj = make_grid(channel, t_max, n_points);
    const bool generic = channel.family() == ChannelModel::Family::generic;
    if (generic) integrate_generic_states(traj);

    std::vector<std::exception_ptr> failures(n_points);
    const auto n = static_cast<std::ptrdiff_t>(n_points);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            evaluate_point(traj, static_cast<std::size_t>(i), generic);
        } catch (...) {
            failures[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& failure : failures)
        if (failure) std::rethrow_exception(failure);

    differentiate(traj);
    return traj;
}

EntropySnapshot evaluate_at(const Trajectory& traj, double t) {
    if (t < 0.0 || t > traj.t_max() * (1.0 + 1e-12)) {
        std::ostringstream msg;
        msg << "evaluate_at: t=" << t << " outside [0, " << traj.t_max() << "]";
        throw std::invalid_argument(msg.str());
    }
    if (traj.channel.family() != ChannelModel::Family::generic)
        return take_snapshot(t, evolve_bell(traj.channel, t), bell_system_entropy);

    const auto& model = std::get<GenericModel>(traj.channel.model());
    auto i = static_cast<std::size_t>(t / traj.spacing);
    i = std::min(i, traj.times.size() - 1);
    while (i > 0 && traj.times[i] > t) --i;
    auto rho = propagate(generator_of(traj.channel), traj.states[i], traj.times[i], t, model.step);
    return take_snapshot(t, DensityMatrix(hermitian_part(rho)), bell_system_entropy);
}

}  // namespace qloss
