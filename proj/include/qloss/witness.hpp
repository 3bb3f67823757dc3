// witness.hpp
// Quantum-loss trajectories of a Bell pair under a channel, detection of the
// intervals where the loss decreases, and the resulting non-Markovianity
// measure (the integral of dL_Q/dt over those intervals, <= 0).

#pragma once

#include "qloss/channels.hpp"
#include "qloss/entropy.hpp"

#include <string>
#include <vector>

namespace qloss {

inline constexpr double default_deriv_threshold = 1e-9;

struct Trajectory {
    ChannelModel channel;
    double spacing = 0.0;
    std::vector<double> times;                 // uniform, times[0] = 0
    std::vector<ComplexMatrix> states;         // rho^SA(t) per grid point
    std::vector<EntropySnapshot> snapshots;
    std::vector<double> loss_derivative;       // dL_Q/dt, central inside, one-sided at the ends
    std::vector<double> mutual_info_derivative;

    double t_max() const { return times.back(); }
};

/// Samples n_points uniformly on [0, t_max]. Grid points are evaluated in
/// parallel with OpenMP; generic channels integrate the states serially first.
/// Throws std::invalid_argument for t_max <= 0 or n_points < 3; channel
/// evaluation errors propagate (the earliest failing grid point wins).
Trajectory sample_trajectory(const ChannelModel& channel, double t_max, std::size_t n_points);

/// Single-threaded reference for sample_trajectory. Results are identical.
Trajectory sample_trajectory_serial(const ChannelModel& channel, double t_max, std::size_t n_points);

/// Snapshot at an arbitrary time in [0, t_max], off the grid.
EntropySnapshot evaluate_at(const Trajectory& traj, double t);

/// Central-difference dL_Q/dt of the continuous evaluator with step
/// spacing / 100 (one-sided at the domain ends).
double loss_rate_at(const Trajectory& traj, double t);
double mutual_info_rate_at(const Trajectory& traj, double t);

struct Interval {
    double start = 0.0;
    double end = 0.0;
};

/// Maximal runs of grid points with dL_Q/dt < -threshold, endpoints refined by
/// bisection to spacing * 1e-3.
std::vector<Interval> detect_intervals(const Trajectory& traj, double deriv_threshold = default_deriv_threshold);

/// Same construction for dI/dt > threshold.
std::vector<Interval> mutual_info_witness(const Trajectory& traj, double deriv_threshold = default_deriv_threshold);

enum class Verdict { markovian, non_markovian, unavailable };

std::string to_string(Verdict v);

/// Closed-form Markovianity conditions checked pointwise on a 10^4-point grid
/// over [0, t_max]: gamma >= 0 (dephasing), d|G|/dt <= 0 (amplitude damping),
/// pairwise rate sums >= 0 (pauli). Generic channels are unavailable.
Verdict analytic_verdict(const ChannelModel& channel, double t_max);

struct LossDrop {
    double start = 0.0;
    double end = 0.0;
    double drop = 0.0;  // L_Q(end) - L_Q(start) < 0
};

struct NonMarkovReport {
    std::vector<LossDrop> intervals;
    double measure = 0.0;    // signed, <= 0
    double magnitude = 0.0;  // |measure|
    Verdict analytic = Verdict::unavailable;
    bool markovian = true;   // numeric verdict: no decreasing interval
};

/// The measure is the telescoping sum of L_Q drops over the detected
/// intervals; it is truncated at the trajectory horizon.
NonMarkovReport measure(const Trajectory& traj, double deriv_threshold = default_deriv_threshold);

}  // namespace qloss
