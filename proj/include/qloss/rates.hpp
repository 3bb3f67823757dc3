// rates.hpp
// Time-dependent decay rates gamma(t) and their integrals
// Gamma(t) = int_0^t gamma(s) ds.

#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace qloss {

class RateFunction {
public:
    enum class Kind { constant, sinusoid, damped_cosine, tabulated };

    /// gamma(t) = a
    static RateFunction constant(double amplitude);
    /// gamma(t) = a sin(w t)
    static RateFunction sinusoid(double amplitude, double frequency);
    /// gamma(t) = a exp(-b t) cos(w t)
    static RateFunction damped_cosine(double amplitude, double damping, double frequency);
    /// Piecewise-linear interpolation of (t, gamma) samples. Sample times must
    /// start at 0 and increase strictly; throws std::invalid_argument otherwise.
    static RateFunction tabulated(std::vector<std::pair<double, double>> samples);

    Kind kind() const { return kind_; }
    double amplitude() const { return amplitude_; }
    double damping() const { return damping_; }
    double frequency() const { return frequency_; }

    /// gamma(t). Throws std::invalid_argument for t < 0 or t past the table.
    double operator()(double t) const;

    /// Largest |gamma(t)| over t >= 0 (over the table for the tabulated kind).
    double max_abs() const;

    /// Last sample time for the tabulated kind, +infinity otherwise.
    double horizon() const;

    /// Command-line form: const:a, sin:a,w, dcos:a,b,w or table:<source>.
    std::string describe() const;

    /// Label used by describe() for tabulated rates.
    void set_source(std::string source) { source_ = std::move(source); }

private:
    RateFunction() = default;

    Kind kind_ = Kind::constant;
    double amplitude_ = 0.0;
    double damping_ = 0.0;
    double frequency_ = 0.0;
    std::shared_ptr<const std::vector<std::pair<double, double>>> table_;
    std::string source_;

    friend double gamma_integral(const RateFunction& rate, double t);
};

/// Gamma(t) = int_0^t gamma(s) ds. Closed form for the analytic kinds;
/// composite Simpson over the table segments for the tabulated kind.
/// Throws std::invalid_argument for t < 0 or t past the table.
double gamma_integral(const RateFunction& rate, double t);

}  // namespace qloss
