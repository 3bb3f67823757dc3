// channels.hpp
// Qubit dynamical maps acting on the system half of a Bell pair.
//
// Three families have closed-form evolution of the Bell pair: pure dephasing,
// amplitude damping into a Lorentzian bath, and the Pauli (random-unitary)
// channel. Every family also has a time-local generator, which the fixed-step
// RK4 integrator uses as an independent route to the same states.

#pragma once

#include "qloss/rates.hpp"
#include "qloss/states.hpp"

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace qloss {

/// Lorentzian spectral density with width lambda and coupling gamma0, both
/// strictly positive (inverse-time units).
struct LorentzianBath {
    double lambda = 1.0;
    double gamma0 = 1.0;

    /// Throws std::invalid_argument unless both parameters are positive and finite.
    void check() const;
};

/// Decoherence amplitude G(t) of the damped qubit (G(0) = 1). Real for this
/// bath, returned as complex to keep the generator formula general.
complex g_function(const LorentzianBath& bath, double t);

/// dG/dt.
complex g_derivative(const LorentzianBath& bath, double t);

/// gamma(t) = -2 Re(G'/G). Singular at zeros of G.
double amplitude_damping_rate(const LorentzianBath& bath, double t);

struct DephasingModel {
    RateFunction rate;
};

struct AmplitudeDampingModel {
    LorentzianBath bath;
};

/// Rates indexed 1, 2, 3 for sigma_x, sigma_y, sigma_z (stored 0-based).
struct PauliModel {
    std::array<RateFunction, 3> rates;
};

/// rate(t) * (J rho J^dagger - {J^dagger J, rho} / 2)
struct JumpTerm {
    RateFunction rate;
    ComplexMatrix jump;  // 2x2, acts on the system
};

struct GenericModel {
    std::vector<JumpTerm> terms;
    std::optional<ComplexMatrix> hamiltonian;  // adds -i[H, rho]
    double step = 1e-3;                        // integrator step used by evolve_bell
};

class ChannelModel {
public:
    enum class Family { dephasing, amplitude_damping, pauli, generic };

    static ChannelModel dephasing(RateFunction rate);
    static ChannelModel amplitude_damping(LorentzianBath bath);
    static ChannelModel pauli(RateFunction g1, RateFunction g2, RateFunction g3);
    static ChannelModel generic(GenericModel model);

    Family family() const;
    /// "dephasing", "amplitude-damping", "pauli" or "generic".
    std::string name() const;

    /// Characteristic rate: max |gamma| for the rate-driven families, gamma0
    /// for amplitude damping. Zero for rate-free channels.
    double max_rate() const;

    /// Latest time the model can be evaluated at (finite for tabulated rates).
    double horizon() const;

    const std::variant<DephasingModel, AmplitudeDampingModel, PauliModel, GenericModel>& model() const {
        return model_;
    }

private:
    explicit ChannelModel(std::variant<DephasingModel, AmplitudeDampingModel, PauliModel, GenericModel> m)
        : model_(std::move(m)) {}

    std::variant<DephasingModel, AmplitudeDampingModel, PauliModel, GenericModel> model_;
};

// Closed-form evolved Bell pairs, parameterized directly.

/// (1/2)[[1,0,0,c],[0,0,0,0],[0,0,0,0],[c,0,0,1]] with c = exp(-Gamma).
ComplexMatrix dephased_bell_matrix(double coherence);

/// (1/2)[[1,0,0,G*],[0,1-|G|^2,0,0],[0,0,0,0],[G,0,0,|G|^2]].
ComplexMatrix amplitude_damped_bell_matrix(complex g);

/// (1/4) X-shaped matrix with diagonal (1+F, 1-F, 1-F, 1+F), outer
/// anti-diagonal G+H and inner anti-diagonal G-H.
ComplexMatrix pauli_bell_matrix(double f, double g, double h);

/// Joint state at time t starting from the Bell projector. Generic channels
/// are integrated numerically. Throws std::invalid_argument for t < 0 and
/// std::domain_error when the channel does not map the Bell pair to a valid
/// state (e.g. rates that break complete positivity).
DensityMatrix evolve_bell(const ChannelModel& channel, double t);

/// Time-local generator on the system qubit, with plain callable rates.
struct TimeLocalTerm {
    std::function<double(double)> rate;
    ComplexMatrix jump;
};

struct TimeLocalGenerator {
    std::vector<TimeLocalTerm> terms;
    std::optional<ComplexMatrix> hamiltonian;
};

/// dephasing: gamma/2 with sigma_z; pauli: gamma_k/2 with sigma_k; amplitude
/// damping: -2 Re(G'/G) with sigma_minus (no Lamb shift).
TimeLocalGenerator generator_of(const ChannelModel& channel);

/// (L_t (x) id)(rho) for a 4x4 joint state.
ComplexMatrix apply_generator(const TimeLocalGenerator& generator, double t, const ComplexMatrix& rho);

class integration_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Classical RK4 from t0 to t1 with the largest uniform step not exceeding
/// `step`. No validation or renormalization.
ComplexMatrix propagate(const TimeLocalGenerator& generator, ComplexMatrix rho, double t0, double t1, double step);

/// Integrates d rho/dt = (L_t (x) id) rho from the Bell projector to t_end.
/// The result is Hermitized and, if the trace drifted by more than 1e-12,
/// renormalized. Throws integration_error if the drift exceeds 1e-8 or the
/// state blows up.
DensityMatrix integrate_master_equation(const ChannelModel& channel, double t_end, double step);

}  // namespace qloss
