// states.hpp
// Density matrices and pure states for a qubit system and its ancilla.

#pragma once

#include "qloss/qmath.hpp"

#include <string>
#include <vector>

namespace qloss {

inline constexpr double trace_tolerance = 1e-10;
inline constexpr double negativity_tolerance = 1e-12;
inline constexpr double norm_tolerance = 1e-12;

struct ValidityReport {
    double hermiticity_deviation = 0.0;
    double trace_deviation = 0.0;
    double min_eigenvalue = 0.0;
    bool passed = false;

    std::string describe() const;
};

/// Checks Hermiticity, unit trace and positivity. Never throws for square
/// input; the eigenvalue check runs on the Hermitian part.
ValidityReport validate(const ComplexMatrix& rho);

/// A validated density matrix of dimension 2 (one qubit) or 4 (qubit pair).
class DensityMatrix {
public:
    /// Throws std::domain_error carrying the validity report if `rho` is not a
    /// valid 2x2 or 4x4 state.
    explicit DensityMatrix(ComplexMatrix rho);

    std::size_t dim() const { return rho_.rows(); }
    const ComplexMatrix& matrix() const { return rho_; }

    /// Reduced state of one qubit of a 4x4 state.
    DensityMatrix marginal(Subsystem keep) const;

    /// Eigenvalues, descending, with roundoff negatives in [-1e-12, 0) set to 0.
    std::vector<double> spectrum() const;

private:
    ComplexMatrix rho_;
};

class PureState {
public:
    /// Throws std::invalid_argument unless dim is 2 or 4 and the norm is 1
    /// within norm_tolerance.
    explicit PureState(std::vector<complex> amplitudes);

    std::size_t dim() const { return amplitudes_.size(); }
    std::span<const complex> amplitudes() const { return amplitudes_; }
    DensityMatrix projector() const;

private:
    std::vector<complex> amplitudes_;
};

/// (|00> + |11>) / sqrt(2), system first, ancilla second.
PureState bell_state();

/// Schmidt-form purification sum_i sqrt(lambda_i) |v_i> (x) |i> of a qubit
/// state, with the ancilla basis |i> ordered by descending eigenvalue.
PureState purify(const DensityMatrix& rho);

}  // namespace qloss
