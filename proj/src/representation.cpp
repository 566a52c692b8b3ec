#include "bellorbit/representation.hpp"

#include <cmath>
#include <numbers>

namespace bellorbit {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

void require_scenario_sizes(int n, int d) {
    if (n < 2) throw DomainError("n must be >= 2, got " + std::to_string(n));
    if (d < 2) throw DomainError("d must be >= 2, got " + std::to_string(d));
}

}  // namespace

FourierBasis fourier_basis(int n) {
    if (n < 2) throw DomainError("fourier_basis: n must be >= 2");
    Matrix w(n, n);
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            // exp(i 2pi jk/n) with the phase reduced mod n before evaluation
            const int jk = (j * k) % n;
            w(k, j) = std::polar(norm, kTau * jk / n);
        }
    }
    return FourierBasis{n, std::move(w)};
}

Matrix translation_matrix(int n) {
    if (n < 2) throw DomainError("translation_matrix: n must be >= 2");
    Matrix t = Matrix::Zero(n, n);
    for (int j = 0; j < n; ++j) {
        t((j + 1) % n, j) = 1.0;
    }
    return t;
}

RootExponents root_exponents(int n, int d) {
    require_scenario_sizes(n, d);
    RootExponents rx{n, d, {}};
    rx.e.reserve(n);
    for (int j = 0; j < n; ++j) {
        rx.e.push_back(2 * j < n ? -j : n - j);
    }
    return rx;
}

Matrix root_unitary(const RootExponents& rx) {
    const FourierBasis basis = fourier_basis(rx.n);
    Vector phases(rx.n);
    for (int j = 0; j < rx.n; ++j) {
        phases(j) = std::polar(1.0, kTau * rx.e[j] / rx.group_order());
    }
    return basis.vectors * phases.asDiagonal() * basis.vectors.adjoint();
}

Matrix root_unitary(int n, int d) { return root_unitary(root_exponents(n, d)); }

int tuple_label(const RootExponents& rx, std::span<const int> js) {
    const int order = rx.group_order();
    int s = 0;
    for (int j : js) {
        if (j < 0 || j >= rx.n) {
            throw DomainError("tuple_label: index " + std::to_string(j) + " out of [0," +
                              std::to_string(rx.n) + ")");
        }
        s += rx.e[static_cast<std::size_t>(j)];
    }
    return ((s % order) + order) % order;
}

Eigen::Index tensor_dimension(int n, int parties, Eigen::Index cap) {
    Eigen::Index dim = 1;
    for (int p = 0; p < parties; ++p) {
        dim *= n;
        if (dim > cap) {
            throw SizeError("tensor dimension " + std::to_string(n) + "^" +
                            std::to_string(parties) + " exceeds cap " + std::to_string(cap));
        }
    }
    return dim;
}

std::vector<Vector> eigenspace_basis(const RootExponents& rx, int parties, int label) {
    if (label < 0 || label >= rx.group_order()) {
        throw DomainError("eigenspace_basis: label out of [0, nd)");
    }
    const FourierBasis basis = fourier_basis(rx.n);
    const Eigen::Index dim = tensor_dimension(rx.n, parties);

    std::vector<Vector> out;
    std::vector<int> tuple(static_cast<std::size_t>(parties), 0);
    for (Eigen::Index flat = 0; flat < dim; ++flat) {
        Eigen::Index rest = flat;
        for (int p = parties - 1; p >= 0; --p) {
            tuple[static_cast<std::size_t>(p)] = static_cast<int>(rest % rx.n);
            rest /= rx.n;
        }
        if (tuple_label(rx, tuple) != label) continue;
        Vector v = basis.vectors.col(tuple[0]);
        for (int p = 1; p < parties; ++p) {
            v = kron(v, basis.vectors.col(tuple[static_cast<std::size_t>(p)]));
        }
        out.push_back(std::move(v));
    }
    return out;
}

Matrix eigenspace_projector(const RootExponents& rx, int parties, int label) {
    const Eigen::Index dim = tensor_dimension(rx.n, parties);
    Matrix p = Matrix::Zero(dim, dim);
    for (const Vector& v : eigenspace_basis(rx, parties, label)) {
        p.noalias() += v * v.adjoint();
    }
    return p;
}

}  // namespace bellorbit
