#include "qloss/witness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace qloss {

namespace {

constexpr std::size_t analytic_grid_points = 10000;
constexpr double analytic_slack = 1e-12;
constexpr double rate_step_fraction = 1e-2;
constexpr double refine_fraction = 1e-3;

template <class Field>
double rate_at(const Trajectory& traj, double t, Field field) {
    const double h = traj.spacing * rate_step_fraction;
    const double lo = std::max(0.0, t - h);
    const double hi = std::min(traj.t_max(), t + h);
    return (field(evaluate_at(traj, hi)) - field(evaluate_at(traj, lo))) / (hi - lo);
}

// Bisection for the point where `inside` flips inside [outside_t, inside_t].
double refine_boundary(double outside_t, double inside_t, double tolerance, const std::function<bool(double)>& inside) {
    while (std::abs(inside_t - outside_t) > tolerance) {
        const double mid = 0.5 * (outside_t + inside_t);
        if (inside(mid))
            inside_t = mid;
        else
            outside_t = mid;
    }
    return 0.5 * (outside_t + inside_t);
}

// Runs of grid points where `signed_rate` exceeds the threshold, refined
// against the continuous rate.
std::vector<Interval> rising_intervals(const Trajectory& traj, const std::vector<double>& signed_rate,
                                       const std::function<double(double)>& continuous_rate, double threshold) {
    const auto& t = traj.times;
    const std::size_t n = t.size();
    const double tol = traj.spacing * refine_fraction;
    auto inside = [&](double time) { return continuous_rate(time) > threshold; };

    std::vector<Interval> out;
    std::size_t i = 0;
    while (i < n) {
        if (!(signed_rate[i] > threshold)) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < n && signed_rate[j + 1] > threshold) ++j;
        Interval iv;
        iv.start = i == 0 ? t[0] : refine_boundary(t[i - 1], t[i], tol, inside);
        iv.end = j + 1 == n ? t[n - 1] : refine_boundary(t[j + 1], t[j], tol, inside);
        out.push_back(iv);
        i = j + 1;
    }
    return out;
}

}  // namespace

double loss_rate_at(const Trajectory& traj, double t) {
    return rate_at(traj, t, [](const EntropySnapshot& s) { return s.quantum_loss; });
}

double mutual_info_rate_at(const Trajectory& traj, double t) {
    return rate_at(traj, t, [](const EntropySnapshot& s) { return s.mutual_info; });
}

std::vector<Interval> detect_intervals(const Trajectory& traj, double deriv_threshold) {
    std::vector<double> falling(traj.loss_derivative.size());
    std::transform(traj.loss_derivative.begin(), traj.loss_derivative.end(), falling.begin(),
                   [](double d) { return -d; });
    return rising_intervals(
        traj, falling, [&](double t) { return -loss_rate_at(traj, t); }, deriv_threshold);
}

std::vector<Interval> mutual_info_witness(const Trajectory& traj, double deriv_threshold) {
    return rising_intervals(
        traj, traj.mutual_info_derivative, [&](double t) { return mutual_info_rate_at(traj, t); }, deriv_threshold);
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::markovian:
        return "markovian";
    case Verdict::non_markovian:
        return "non-markovian";
    case Verdict::unavailable:
        return "unavailable";
    }
    return {};
}

Verdict analytic_verdict(const ChannelModel& channel, double t_max) {
    const double dt = t_max / static_cast<double>(analytic_grid_points - 1);
    auto grid = [&](std::size_t i) { return i + 1 == analytic_grid_points ? t_max : static_cast<double>(i) * dt; };

    switch (channel.family()) {
    case ChannelModel::Family::dephasing: {
        const auto& rate = std::get<DephasingModel>(channel.model()).rate;
        for (std::size_t i = 0; i < analytic_grid_points; ++i)
            if (rate(grid(i)) < -analytic_slack) return Verdict::non_markovian;
        return Verdict::markovian;
    }
    case ChannelModel::Family::amplitude_damping: {
        const auto& bath = std::get<AmplitudeDampingModel>(channel.model()).bath;
        double previous = std::abs(g_function(bath, 0.0));
        for (std::size_t i = 1; i < analytic_grid_points; ++i) {
            const double t0 = grid(i - 1);
            const double t1 = grid(i);
            const double current = std::abs(g_function(bath, t1));
            if ((current - previous) / (t1 - t0) > analytic_slack) return Verdict::non_markovian;
            previous = current;
        }
        return Verdict::markovian;
    }
    case ChannelModel::Family::pauli: {
        const auto& r = std::get<PauliModel>(channel.model()).rates;
        for (std::size_t i = 0; i < analytic_grid_points; ++i) {
            const double t = grid(i);
            const double g1 = r[0](t), g2 = r[1](t), g3 = r[2](t);
            if (g1 + g2 < -analytic_slack || g1 + g3 < -analytic_slack || g2 + g3 < -analytic_slack)
                return Verdict::non_markovian;
        }
        return Verdict::markovian;
    }
    case ChannelModel::Family::generic:
        return Verdict::unavailable;
    }
    return Verdict::unavailable;
}

NonMarkovReport measure(const Trajectory& traj, double deriv_threshold) {
    NonMarkovReport report;
    for (const auto& iv : detect_intervals(traj, deriv_threshold)) {
        const double drop = evaluate_at(traj, iv.end).quantum_loss - evaluate_at(traj, iv.start).quantum_loss;
        // A run that straddles only roundoff can refine to a non-negative drop.
        if (!(drop < 0.0)) continue;
        report.intervals.push_back({iv.start, iv.end, drop});
        report.measure += drop;
    }
    report.magnitude = std::abs(report.measure);
    report.markovian = report.intervals.empty();
    report.analytic = analytic_verdict(traj.channel, traj.t_max());
    return report;
}

}  // namespace qloss
