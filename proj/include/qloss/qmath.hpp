// qmath.hpp
// Small dense complex matrices: products, adjoints, Kronecker products,
// two-qubit partial traces and Hermitian eigenvalues.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace qloss {

using complex = std::complex<double>;

/// Maximum |m - m^dagger| entry accepted as Hermitian.
inline constexpr double hermiticity_tolerance = 1e-10;

/// Row-major dense complex matrix.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::initializer_list<complex> entries);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<complex> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);
    static ComplexMatrix outer(std::span<const complex> ket);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    // Bounds-checked access; throws std::out_of_range.
    complex& at(std::size_t r, std::size_t c);
    const complex& at(std::size_t r, std::size_t c) const;

    std::span<const complex> entries() const { return data_; }

    ComplexMatrix adjoint() const;
    complex trace() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(complex scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, complex s) { return a *= s; }
    friend ComplexMatrix operator*(complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<complex> data_;
};

std::vector<complex> operator*(const ComplexMatrix& m, std::span<const complex> v);

/// Largest absolute entry of a - b. Shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest absolute entry of m - m^dagger.
double hermiticity_deviation(const ComplexMatrix& m);

/// (m + m^dagger) / 2
ComplexMatrix hermitian_part(const ComplexMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Subsystem { first, second };

/// Reduced 2x2 matrix of a 4x4 two-qubit operator, keeping `keep` and
/// tracing out the other qubit. Basis ordering is |first, second>.
ComplexMatrix partial_trace(const ComplexMatrix& rho, Subsystem keep);

struct HermitianEigen {
    std::vector<double> eigenvalues;            // descending
    std::optional<ComplexMatrix> eigenvectors;  // columns, same order as eigenvalues
};

/// Eigen-decomposition of a Hermitian matrix. Throws std::invalid_argument when
/// the input is not square or deviates from Hermitian by more than
/// hermiticity_tolerance; the message carries the deviation.
HermitianEigen hermitian_eigenvalues(const ComplexMatrix& m, bool with_vectors = false);

// Qubit operators in the basis {|0>, |1>} with |1> the excited level.
namespace pauli {
ComplexMatrix sigma_x();
ComplexMatrix sigma_y();
ComplexMatrix sigma_z();
ComplexMatrix sigma_plus();   // |1><0|
ComplexMatrix sigma_minus();  // |0><1|
}  // namespace pauli

}  // namespace qloss
