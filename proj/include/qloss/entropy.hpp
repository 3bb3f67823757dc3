// entropy.hpp
// Von Neumann entropies (in bits) and the information quantities built on
// them for a system qubit S and an ancilla qubit A whose joint state is
// evolved by a channel on S alone.
//
// For a 4x4 joint state the first tensor factor is the system and the second
// is the ancilla. Because the system-ancilla-environment state is pure, the
// entropy of the joint state equals the environment entropy (entropy
// exchange).

#pragma once

#include "qloss/states.hpp"

#include <span>

namespace qloss {

/// Slack allowed on the analytic bounds before a result is reported as a
/// numerical inconsistency.
inline constexpr double bound_tolerance = 1e-9;

/// -sum p log2 p with 0 log 0 = 0. Entries in [-1e-12, 0) count as 0;
/// anything more negative throws std::domain_error.
double spectrum_entropy(std::span<const double> probabilities);

/// Binary Shannon entropy h(p) in bits, p in [0, 1].
double binary_entropy(double p);

double von_neumann_entropy(const DensityMatrix& rho);

/// S(AB) - S(condition_on). May be negative for entangled states.
double conditional_entropy(const DensityMatrix& rho_ab, Subsystem condition_on);

/// S(A) + S(B) - S(AB).
double mutual_information(const DensityMatrix& rho_ab);

/// S_e: entropy of the evolved joint system-ancilla state.
double entropy_exchange(const DensityMatrix& rho_sa_t);

/// I_c = S(evolved system marginal) - S_e.
double coherent_information(const DensityMatrix& rho_sa_t);

/// L_Q = s_system_initial - I_c, where s_system_initial is the system entropy
/// before evolution (1 bit for the Bell initialization). Throws
/// std::runtime_error if the result leaves [0, 2 min(s_system_initial, S_e)]
/// by more than bound_tolerance.
double quantum_loss(const DensityMatrix& rho_sa_t, double s_system_initial);

/// N_Q = 2 S_e - L_Q.
double quantum_noise(const DensityMatrix& rho_sa_t, double quantum_loss);

/// I_Q = 2 S(marginal) of a pure bipartite state.
double mutual_entanglement_initial(const PureState& psi);

struct EntropySnapshot {
    double t = 0.0;
    double s_system = 0.0;       // S(rho^S'(t))
    double s_ancilla = 0.0;      // S(rho^A)
    double s_exchange = 0.0;     // S_e
    double coherent_info = 0.0;  // I_c
    double quantum_loss = 0.0;   // L_Q
    double mutual_info = 0.0;    // I(rho^SA(t))
    double quantum_noise = 0.0;  // N_Q
};

/// All quantities for one evolved joint state, sharing the three
/// eigen-decompositions.
EntropySnapshot take_snapshot(double t, const DensityMatrix& rho_sa_t, double s_system_initial);

}  // namespace qloss
