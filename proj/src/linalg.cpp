#include "bellorbit/linalg.hpp"

namespace bellorbit {

namespace {

void fix_phases(Matrix& vectors) {
    for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
        for (Eigen::Index r = 0; r < vectors.rows(); ++r) {
            const Complex z = vectors(r, c);
            if (std::abs(z) > 1e-8) {
                vectors.col(c) *= std::conj(z) / std::abs(z);
                break;
            }
        }
    }
}

}  // namespace

EigResult hermitian_eig(const Matrix& h) {
    if (h.rows() != h.cols()) {
        throw DomainError("hermitian_eig: matrix is not square");
    }
    const double asym = (h - h.adjoint()).cwiseAbs().maxCoeff();
    if (asym > 1e-10) {
        throw DomainError("hermitian_eig: input not Hermitian (max |A - A^H| = " +
                          std::to_string(asym) + ")");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw NumericError("hermitian_eig: eigensolver failed to converge");
    }
    EigResult result{solver.eigenvalues(), solver.eigenvectors()};
    fix_phases(result.vectors);
    return result;
}

Matrix gram(const std::vector<Vector>& vs) {
    const Eigen::Index m = static_cast<Eigen::Index>(vs.size());
    Matrix out(m, m);
    for (Eigen::Index k = 0; k < m; ++k) {
        if (vs[k].size() != vs[0].size()) {
            throw DomainError("gram: vectors have mismatched dimensions");
        }
        for (Eigen::Index j = k; j < m; ++j) {
            out(k, j) = vs[k].dot(vs[j]);  // conjugates the first argument
            out(j, k) = std::conj(out(k, j));
        }
    }
    return out;
}

}  // namespace bellorbit
