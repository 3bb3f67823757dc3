#include "qloss/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qloss {

namespace {

void require_joint(const DensityMatrix& rho, const char* who) {
    if (rho.dim() != 4) {
        std::ostringstream msg;
        msg << who << ": expected a 4x4 joint state, got dimension " << rho.dim();
        throw std::invalid_argument(msg.str());
    }
}

double checked_loss(double s_system_initial, double coherent, double s_exchange) {
    const double loss = s_system_initial - coherent;
    const double upper = 2.0 * std::min(s_system_initial, s_exchange);
    if (loss < -bound_tolerance || loss > upper + bound_tolerance) {
        std::ostringstream msg;
        msg << "quantum_loss: " << loss << " outside [0, " << upper << "]";
        throw std::runtime_error(msg.str());
    }
    return loss;
}

}  // namespace

double spectrum_entropy(std::span<const double> probabilities) {
    double s = 0.0;
    for (double p : probabilities) {
        if (p < -negativity_tolerance) {
            std::ostringstream msg;
            msg << "spectrum_entropy: negative eigenvalue " << p;
            throw std::domain_error(msg.str());
        }
        if (p > 0.0) s -= p * std::log2(p);
    }
    return s;
}

double binary_entropy(double p) {
    const double q[2] = {p, 1.0 - p};
    return spectrum_entropy(q);
}

double von_neumann_entropy(const DensityMatrix& rho) {
    return spectrum_entropy(rho.spectrum());
}

double conditional_entropy(const DensityMatrix& rho_ab, Subsystem condition_on) {
    require_joint(rho_ab, "conditional_entropy");
    return von_neumann_entropy(rho_ab) - von_neumann_entropy(rho_ab.marginal(condition_on));
}

double mutual_information(const DensityMatrix& rho_ab) {
    require_joint(rho_ab, "mutual_information");
    return von_neumann_entropy(rho_ab.marginal(Subsystem::first)) +
           von_neumann_entropy(rho_ab.marginal(Subsystem::second)) - von_neumann_entropy(rho_ab);
}

double entropy_exchange(const DensityMatrix& rho_sa_t) {
    require_joint(rho_sa_t, "entropy_exchange");
    return von_neumann_entropy(rho_sa_t);
}

double coherent_information(const DensityMatrix& rho_sa_t) {
    require_joint(rho_sa_t, "coherent_information");
    return von_neumann_entropy(rho_sa_t.marginal(Subsystem::first)) - entropy_exchange(rho_sa_t);
}

double quantum_loss(const DensityMatrix& rho_sa_t, double s_system_initial) {
    require_joint(rho_sa_t, "quantum_loss");
    const double s_exchange = entropy_exchange(rho_sa_t);
    const double coherent = von_neumann_entropy(rho_sa_t.marginal(Subsystem::first)) - s_exchange;
    return checked_loss(s_system_initial, coherent, s_exchange);
}

double quantum_noise(const DensityMatrix& rho_sa_t, double quantum_loss) {
    return 2.0 * entropy_exchange(rho_sa_t) - quantum_loss;
}

double mutual_entanglement_initial(const PureState& psi) {
    if (psi.dim() != 4) throw std::invalid_argument("mutual_entanglement_initial: expected a two-qubit pure state");
    return 2.0 * von_neumann_entropy(psi.projector().marginal(Subsystem::second));
}

EntropySnapshot take_snapshot(double t, const DensityMatrix& rho_sa_t, double s_system_initial) {
    require_joint(rho_sa_t, "take_snapshot");
    EntropySnapshot snap;
    snap.t = t;
    snap.s_system = von_neumann_entropy(rho_sa_t.marginal(Subsystem::first));
    snap.s_ancilla = von_neumann_entropy(rho_sa_t.marginal(Subsystem::second));
    snap.s_exchange = von_neumann_entropy(rho_sa_t);
    snap.coherent_info = snap.s_system - snap.s_exchange;
    snap.quantum_loss = checked_loss(s_system_initial, snap.coherent_info, snap.s_exchange);
    snap.mutual_info = snap.s_system + snap.s_ancilla - snap.s_exchange;
    snap.quantum_noise = 2.0 * snap.s_exchange - snap.quantum_loss;
    return snap;
}

}  // namespace qloss
