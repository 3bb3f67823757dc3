#include "qloss/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qloss {

std::string ValidityReport::describe() const {
    std::ostringstream out;
    out << (passed ? "valid" : "invalid") << " (hermiticity deviation " << hermiticity_deviation
        << ", trace deviation " << trace_deviation << ", min eigenvalue " << min_eigenvalue << ")";
    return out.str();
}

ValidityReport validate(const ComplexMatrix& rho) {
    ValidityReport report;
    report.hermiticity_deviation = hermiticity_deviation(rho);
    report.trace_deviation = std::abs(rho.trace() - complex{1.0});
    const auto eig = hermitian_eigenvalues(hermitian_part(rho));
    report.min_eigenvalue = eig.eigenvalues.back();
    report.passed = report.hermiticity_deviation <= hermiticity_tolerance && report.trace_deviation <= trace_tolerance &&
                    report.min_eigenvalue >= -negativity_tolerance;
    return report;
}

DensityMatrix::DensityMatrix(ComplexMatrix rho) : rho_(std::move(rho)) {
    if (!rho_.square() || (rho_.rows() != 2 && rho_.rows() != 4)) {
        std::ostringstream msg;
        msg << "DensityMatrix: expected 2x2 or 4x4, got " << rho_.rows() << "x" << rho_.cols();
        throw std::domain_error(msg.str());
    }
    if (!std::all_of(rho_.entries().begin(), rho_.entries().end(),
                     [](complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); })) {
        throw std::domain_error("DensityMatrix: non-finite entry");
    }
    const auto report = validate(rho_);
    if (!report.passed) throw std::domain_error("DensityMatrix: " + report.describe());
}

DensityMatrix DensityMatrix::marginal(Subsystem keep) const {
    return DensityMatrix(partial_trace(rho_, keep));
}

std::vector<double> DensityMatrix::spectrum() const {
    auto values = hermitian_eigenvalues(rho_).eigenvalues;
    for (auto& v : values)
        if (v < 0.0) v = 0.0;  // construction already rejected anything below -1e-12
    return values;
}

PureState::PureState(std::vector<complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != 2 && amplitudes_.size() != 4)
        throw std::invalid_argument("PureState: dimension must be 2 or 4");
    double norm2 = 0.0;
    for (auto a : amplitudes_) norm2 += std::norm(a);
    if (std::abs(std::sqrt(norm2) - 1.0) > norm_tolerance) {
        std::ostringstream msg;
        msg << "PureState: norm " << std::sqrt(norm2) << " is not 1";
        throw std::invalid_argument(msg.str());
    }
}

DensityMatrix PureState::projector() const {
    return DensityMatrix(ComplexMatrix::outer(amplitudes_));
}

PureState bell_state() {
    const double a = 1.0 / std::sqrt(2.0);
    return PureState({a, 0.0, 0.0, a});
}

PureState purify(const DensityMatrix& rho) {
    if (rho.dim() != 2) throw std::invalid_argument("purify: expected a single-qubit state");
    const auto eig = hermitian_eigenvalues(rho.matrix(), true);
    const auto& vecs = *eig.eigenvectors;

    std::vector<complex> psi(4);
    for (std::size_t i = 0; i < 2; ++i) {
        const double weight = std::sqrt(std::max(eig.eigenvalues[i], 0.0));
        for (std::size_t s = 0; s < 2; ++s) psi[2 * s + i] = weight * vecs(s, i);
    }
    // Clipping and solver roundoff can leave the norm a few ulps from 1.
    double norm2 = 0.0;
    for (auto a : psi) norm2 += std::norm(a);
    for (auto& a : psi) a /= std::sqrt(norm2);
    return PureState(std::move(psi));
}

}  // namespace qloss
