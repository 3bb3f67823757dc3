#include "qloss/channels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace qloss {

namespace {

constexpr double trace_renormalize_threshold = 1e-12;
constexpr double trace_drift_limit = 1e-8;
constexpr double degenerate_d = 1e-12;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_time(double t, const char* who) {
    if (!(t >= 0.0)) {
        std::ostringstream msg;
        msg << who << ": time must be non-negative, got " << t;
        throw std::invalid_argument(msg.str());
    }
}

// e^{-lambda t/2} [C(t), S(t)] where G = e^{-lambda t/2}(C + (lambda/d) S) and
// G' = -(gamma0 lambda / d) e^{-lambda t/2} S, written so that the
// over-damped, under-damped and critical cases share one code path.
struct GParts {
    double envelope;
    double even;         // cosh(dt/2), cos(d't/2), or 1
    double odd_over_d;   // sinh(dt/2)/d, sin(d't/2)/d', or t/2
};

GParts g_parts(const LorentzianBath& bath, double t) {
    const double d2 = bath.lambda * bath.lambda - 2.0 * bath.gamma0 * bath.lambda;
    const double d = std::sqrt(std::abs(d2));
    GParts p{std::exp(-0.5 * bath.lambda * t), 1.0, 0.5 * t};
    if (d < degenerate_d) return p;
    if (d2 > 0.0) {
        p.even = std::cosh(0.5 * d * t);
        p.odd_over_d = std::sinh(0.5 * d * t) / d;
    } else {
        p.even = std::cos(0.5 * d * t);
        p.odd_over_d = std::sin(0.5 * d * t) / d;
    }
    return p;
}

DensityMatrix checked_state(ComplexMatrix rho, const ChannelModel& channel, double t) {
    try {
        return DensityMatrix(std::move(rho));
    } catch (const std::domain_error& e) {
        std::ostringstream msg;
        msg << channel.name() << " channel does not yield a valid state at t=" << t
            << " (map is not completely positive there): " << e.what();
        throw std::domain_error(msg.str());
    }
}

}  // namespace

void LorentzianBath::check() const {
    if (!(lambda > 0.0) || !(gamma0 > 0.0) || !std::isfinite(lambda) || !std::isfinite(gamma0)) {
        std::ostringstream msg;
        msg << "Lorentzian bath needs lambda > 0 and gamma0 > 0, got lambda=" << lambda << ", gamma0=" << gamma0;
        throw std::invalid_argument(msg.str());
    }
}

complex g_function(const LorentzianBath& bath, double t) {
    require_time(t, "g_function");
    const auto p = g_parts(bath, t);
    return p.envelope * (p.even + bath.lambda * p.odd_over_d);
}

complex g_derivative(const LorentzianBath& bath, double t) {
    require_time(t, "g_derivative");
    const auto p = g_parts(bath, t);
    return -bath.gamma0 * bath.lambda * p.envelope * p.odd_over_d;
}

double amplitude_damping_rate(const LorentzianBath& bath, double t) {
    return -2.0 * (g_derivative(bath, t) / g_function(bath, t)).real();
}

ChannelModel ChannelModel::dephasing(RateFunction rate) {
    return ChannelModel(DephasingModel{std::move(rate)});
}

ChannelModel ChannelModel::amplitude_damping(LorentzianBath bath) {
    bath.check();
    return ChannelModel(AmplitudeDampingModel{bath});
}

ChannelModel ChannelModel::pauli(RateFunction g1, RateFunction g2, RateFunction g3) {
    return ChannelModel(PauliModel{{std::move(g1), std::move(g2), std::move(g3)}});
}

ChannelModel ChannelModel::generic(GenericModel model) {
    for (const auto& term : model.terms)
        if (term.jump.rows() != 2 || term.jump.cols() != 2)
            throw std::invalid_argument("generic channel: jump operators must be 2x2");
    if (model.hamiltonian && (model.hamiltonian->rows() != 2 || model.hamiltonian->cols() != 2 ||
                              hermiticity_deviation(*model.hamiltonian) > hermiticity_tolerance))
        throw std::invalid_argument("generic channel: Hamiltonian must be a 2x2 Hermitian matrix");
    if (!(model.step > 0.0)) throw std::invalid_argument("generic channel: integrator step must be positive");
    return ChannelModel(std::move(model));
}

ChannelModel::Family ChannelModel::family() const {
    return static_cast<Family>(model_.index());
}

std::string ChannelModel::name() const {
    switch (family()) {
    case Family::dephasing:
        return "dephasing";
    case Family::amplitude_damping:
        return "amplitude-damping";
    case Family::pauli:
        return "pauli";
    case Family::generic:
        return "generic";
    }
    return {};
}

double ChannelModel::max_rate() const {
    return std::visit(overloaded{
                          [](const DephasingModel& m) { return m.rate.max_abs(); },
                          [](const AmplitudeDampingModel& m) { return m.bath.gamma0; },
                          [](const PauliModel& m) {
                              double r = 0.0;
                              for (const auto& g : m.rates) r = std::max(r, g.max_abs());
                              return r;
                          },
                          [](const GenericModel& m) {
                              double r = 0.0;
                              for (const auto& term : m.terms) r = std::max(r, term.rate.max_abs());
                              return r;
                          },
                      },
                      model_);
}

double ChannelModel::horizon() const {
    return std::visit(overloaded{
                          [](const DephasingModel& m) { return m.rate.horizon(); },
                          [](const AmplitudeDampingModel&) { return std::numeric_limits<double>::infinity(); },
                          [](const PauliModel& m) {
                              double h = std::numeric_limits<double>::infinity();
                              for (const auto& g : m.rates) h = std::min(h, g.horizon());
                              return h;
                          },
                          [](const GenericModel& m) {
                              double h = std::numeric_limits<double>::infinity();
                              for (const auto& term : m.terms) h = std::min(h, term.rate.horizon());
                              return h;
                          },
                      },
                      model_);
}

ComplexMatrix dephased_bell_matrix(double coherence) {
    const double c = 0.5 * coherence;
    return ComplexMatrix(4, 4, {0.5, 0.0, 0.0, c,    //
                                0.0, 0.0, 0.0, 0.0,  //
                                0.0, 0.0, 0.0, 0.0,  //
                                c, 0.0, 0.0, 0.5});
}

ComplexMatrix amplitude_damped_bell_matrix(complex g) {
    const double g2 = std::norm(g);
    return ComplexMatrix(4, 4, {0.5, 0.0, 0.0, 0.5 * std::conj(g),  //
                                0.0, 0.5 * (1.0 - g2), 0.0, 0.0,    //
                                0.0, 0.0, 0.0, 0.0,                 //
                                0.5 * g, 0.0, 0.0, 0.5 * g2});
}

ComplexMatrix pauli_bell_matrix(double f, double g, double h) {
    const double q = 0.25;
    return ComplexMatrix(4, 4, {q * (1 + f), 0.0, 0.0, q * (g + h),  //
                                0.0, q * (1 - f), q * (g - h), 0.0,  //
                                0.0, q * (g - h), q * (1 - f), 0.0,  //
                                q * (g + h), 0.0, 0.0, q * (1 + f)});
}

DensityMatrix evolve_bell(const ChannelModel& channel, double t) {
    require_time(t, "evolve_bell");
    return std::visit(
        overloaded{
            [&](const DephasingModel& m) {
                return checked_state(dephased_bell_matrix(std::exp(-gamma_integral(m.rate, t))), channel, t);
            },
            [&](const AmplitudeDampingModel& m) {
                return checked_state(amplitude_damped_bell_matrix(g_function(m.bath, t)), channel, t);
            },
            [&](const PauliModel& m) {
                const double g1 = gamma_integral(m.rates[0], t);
                const double g2 = gamma_integral(m.rates[1], t);
                const double g3 = gamma_integral(m.rates[2], t);
                return checked_state(
                    pauli_bell_matrix(std::exp(-(g1 + g2)), std::exp(-(g2 + g3)), std::exp(-(g1 + g3))), channel, t);
            },
            [&](const GenericModel& m) { return integrate_master_equation(channel, t, m.step); },
        },
        channel.model());
}

TimeLocalGenerator generator_of(const ChannelModel& channel) {
    TimeLocalGenerator gen;
    std::visit(overloaded{
                   [&](const DephasingModel& m) {
                       gen.terms.push_back({[rate = m.rate](double t) { return 0.5 * rate(t); }, pauli::sigma_z()});
                   },
                   [&](const AmplitudeDampingModel& m) {
                       gen.terms.push_back({[bath = m.bath](double t) { return amplitude_damping_rate(bath, t); },
                                            pauli::sigma_minus()});
                   },
                   [&](const PauliModel& m) {
                       const ComplexMatrix sigmas[3] = {pauli::sigma_x(), pauli::sigma_y(), pauli::sigma_z()};
                       for (std::size_t k = 0; k < 3; ++k)
                           gen.terms.push_back({[rate = m.rates[k]](double t) { return 0.5 * rate(t); }, sigmas[k]});
                   },
                   [&](const GenericModel& m) {
                       for (const auto& term : m.terms)
                           gen.terms.push_back({[rate = term.rate](double t) { return rate(t); }, term.jump});
                       gen.hamiltonian = m.hamiltonian;
                   },
               },
               channel.model());
    return gen;
}

ComplexMatrix apply_generator(const TimeLocalGenerator& generator, double t, const ComplexMatrix& rho) {
    const auto id2 = ComplexMatrix::identity(2);
    ComplexMatrix out(4, 4);
    if (generator.hamiltonian) {
        const auto h = kron(*generator.hamiltonian, id2);
        out += (h * rho - rho * h) * complex{0.0, -1.0};
    }
    for (const auto& term : generator.terms) {
        const double rate = term.rate(t);
        if (rate == 0.0) continue;
        const auto j = kron(term.jump, id2);
        const auto jd = j.adjoint();
        const auto jdj = jd * j;
        out += (j * rho * jd - (jdj * rho + rho * jdj) * complex{0.5}) * complex{rate};
    }
    return out;
}

ComplexMatrix propagate(const TimeLocalGenerator& generator, ComplexMatrix rho, double t0, double t1, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("propagate: step must be positive");
    if (t1 <= t0) return rho;
    const auto n = static_cast<std::size_t>(std::max(1.0, std::ceil((t1 - t0) / step - 1e-9)));
    const double h = (t1 - t0) / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = t0 + static_cast<double>(i) * h;
        const auto k1 = apply_generator(generator, t, rho);
        const auto k2 = apply_generator(generator, t + 0.5 * h, rho + k1 * complex{0.5 * h});
        const auto k3 = apply_generator(generator, t + 0.5 * h, rho + k2 * complex{0.5 * h});
        const auto k4 = apply_generator(generator, t + h, rho + k3 * complex{h});
        rho += (k1 + k2 * complex{2.0} + k3 * complex{2.0} + k4) * complex{h / 6.0};
    }
    return rho;
}

DensityMatrix integrate_master_equation(const ChannelModel& channel, double t_end, double step) {
    require_time(t_end, "integrate_master_equation");
    if (!(step > 0.0)) throw std::invalid_argument("integrate_master_equation: step must be positive");

    auto rho = propagate(generator_of(channel), bell_state().projector().matrix(), 0.0, t_end, step);
    for (auto z : rho.entries())
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw integration_error("integrate_master_equation: state diverged (step too large or singular rate)");

    rho = hermitian_part(rho);
    const double tr = rho.trace().real();
    const double drift = std::abs(tr - 1.0);
    if (drift > trace_drift_limit) {
        std::ostringstream msg;
        msg << "integrate_master_equation: trace drift " << drift << " exceeds " << trace_drift_limit
            << "; step too large";
        throw integration_error(msg.str());
    }
    if (drift > trace_renormalize_threshold) rho *= complex{1.0 / tr};
    return checked_state(std::move(rho), channel, t_end);
}

}  // namespace qloss
