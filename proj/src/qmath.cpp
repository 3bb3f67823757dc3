#include "qloss/qmath.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qloss {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::initializer_list<complex> entries)
    : ComplexMatrix(rows, cols, std::vector<complex>(entries)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw std::invalid_argument("ComplexMatrix: entry count does not match shape");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const complex> ket) {
    const std::size_t n = ket.size();
    ComplexMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = ket[r] * std::conj(ket[c]);
    return m;
}

complex& ComplexMatrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("ComplexMatrix::at: index out of range");
    return (*this)(r, c);
}

const complex& ComplexMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("ComplexMatrix::at: index out of range");
    return (*this)(r, c);
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

complex ComplexMatrix::trace() const {
    complex sum = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) sum += (*this)(i, i);
    return sum;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("ComplexMatrix: shape mismatch in +");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("ComplexMatrix: shape mismatch in -");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(complex scale) {
    for (auto& z : data_) z *= scale;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("ComplexMatrix: shape mismatch in *");
    ComplexMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const complex lhs = a(r, k);
            if (lhs == complex{}) continue;
            for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += lhs * b(k, c);
        }
    return out;
}

std::vector<complex> operator*(const ComplexMatrix& m, std::span<const complex> v) {
    if (m.cols() != v.size()) throw std::invalid_argument("ComplexMatrix: shape mismatch in matrix-vector product");
    std::vector<complex> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("max_abs_diff: shape mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    return worst;
}

double hermiticity_deviation(const ComplexMatrix& m) {
    if (!m.square()) throw std::invalid_argument("hermiticity_deviation: matrix is not square");
    double worst = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = r; c < m.cols(); ++c) worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
    return worst;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
    return (m + m.adjoint()) * complex{0.5};
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar)
        for (std::size_t ac = 0; ac < a.cols(); ++ac)
            for (std::size_t br = 0; br < b.rows(); ++br)
                for (std::size_t bc = 0; bc < b.cols(); ++bc)
                    out(ar * b.rows() + br, ac * b.cols() + bc) = a(ar, ac) * b(br, bc);
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, Subsystem keep) {
    if (rho.rows() != 4 || rho.cols() != 4) {
        std::ostringstream msg;
        msg << "partial_trace: expected a 4x4 matrix, got " << rho.rows() << "x" << rho.cols();
        throw std::invalid_argument(msg.str());
    }
    ComplexMatrix out(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k) {
                if (keep == Subsystem::first)
                    out(i, j) += rho(2 * i + k, 2 * j + k);
                else
                    out(i, j) += rho(2 * k + i, 2 * k + j);
            }
    return out;
}

HermitianEigen hermitian_eigenvalues(const ComplexMatrix& m, bool with_vectors) {
    if (!m.square()) throw std::invalid_argument("hermitian_eigenvalues: matrix is not square");
    const double deviation = hermiticity_deviation(m);
    if (deviation > hermiticity_tolerance) {
        std::ostringstream msg;
        msg << "hermitian_eigenvalues: input is not Hermitian (max |m - m^dagger| = " << deviation << ")";
        throw std::invalid_argument(msg.str());
    }

    const auto n = static_cast<Eigen::Index>(m.rows());
    Eigen::MatrixXcd dense(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c) dense(r, c) = m(r, c);

    // Only the lower triangle is read; symmetrize so both halves contribute.
    const Eigen::MatrixXcd herm = 0.5 * (dense + dense.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        herm, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("hermitian_eigenvalues: solver did not converge");

    HermitianEigen result;
    result.eigenvalues.resize(m.rows());
    // Eigen returns ascending order.
    for (Eigen::Index i = 0; i < n; ++i) result.eigenvalues[i] = solver.eigenvalues()(n - 1 - i);
    if (with_vectors) {
        ComplexMatrix vecs(m.rows(), m.cols());
        for (Eigen::Index r = 0; r < n; ++r)
            for (Eigen::Index c = 0; c < n; ++c) vecs(r, c) = solver.eigenvectors()(r, n - 1 - c);
        result.eigenvectors = std::move(vecs);
    }
    return result;
}

namespace pauli {

ComplexMatrix sigma_x() { return ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}); }
ComplexMatrix sigma_y() { return ComplexMatrix(2, 2, {0.0, complex{0, -1}, complex{0, 1}, 0.0}); }
ComplexMatrix sigma_z() { return ComplexMatrix(2, 2, {1.0, 0.0, 0.0, -1.0}); }
ComplexMatrix sigma_plus() { return ComplexMatrix(2, 2, {0.0, 0.0, 1.0, 0.0}); }
ComplexMatrix sigma_minus() { return ComplexMatrix(2, 2, {0.0, 1.0, 0.0, 0.0}); }

}  // namespace pauli

}  // namespace qloss
