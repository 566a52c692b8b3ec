#ifndef BELLORBIT_LINALG_HPP_INCLUDED
#define BELLORBIT_LINALG_HPP_INCLUDED

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace bellorbit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Thrown on violated preconditions (invalid sizes, indices, domains).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a computation would exceed a configured resource cap.
struct SizeError : std::length_error {
    using std::length_error::length_error;
};

/// Thrown when a numeric routine fails to converge.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr Eigen::Index kDefaultDimCap = 4096;

/// Kronecker product, (a ⊗ b)[i*rb+k, j*cb+l] = a(i,j) b(k,l).
/// The result dimensions must not exceed `cap`.
template <typename DerivedA, typename DerivedB>
Matrix kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
            Eigen::Index cap = kDefaultDimCap) {
    const Eigen::Index rows = a.rows() * b.rows();
    const Eigen::Index cols = a.cols() * b.cols();
    if (rows > cap || cols > cap) {
        throw SizeError("kron: result dimension " + std::to_string(std::max(rows, cols)) +
                        " exceeds cap " + std::to_string(cap));
    }
    Matrix out(rows, cols);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = Complex(a(i, j)) * b;
        }
    }
    return out;
}

/// Ascending eigenvalues of a Hermitian matrix with the eigenvectors as
/// orthonormal columns. Eigenvector phases are fixed so that the first
/// component with magnitude above 1e-8 is real positive.
struct EigResult {
    RealVector values;
    Matrix vectors;
};

EigResult hermitian_eig(const Matrix& h);

/// Gram matrix M(k,j) = <v_k|v_j>; Hermitian positive semidefinite.
Matrix gram(const std::vector<Vector>& vs);

}  // namespace bellorbit

#endif
