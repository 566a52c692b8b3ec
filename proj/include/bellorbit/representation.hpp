#ifndef BELLORBIT_REPRESENTATION_HPP_INCLUDED
#define BELLORBIT_REPRESENTATION_HPP_INCLUDED

#include <span>
#include <vector>

#include "bellorbit/linalg.hpp"

namespace bellorbit {

/// Discrete Fourier basis of C^n; column j holds |w_j>, entry k = exp(i 2pi jk/n)/sqrt(n).
struct FourierBasis {
    int n = 0;
    Matrix vectors;  // n x n, unitary
};

FourierBasis fourier_basis(int n);

/// Cyclic shift T|j> = |j+1 mod n>; diagonal in the Fourier basis with
/// phases exp(-i 2pi j/n).
Matrix translation_matrix(int n);

/// Integer phase exponents of the d-th root U of T:
/// U = sum_j exp(i 2pi e_j/(nd)) |w_j><w_j| with e_j the centered residue
/// of -j mod n, the even-n tie at j = n/2 resolved to +n/2.
struct RootExponents {
    int n = 0;
    int d = 0;
    std::vector<int> e;

    int group_order() const { return n * d; }
};

RootExponents root_exponents(int n, int d);

Matrix root_unitary(const RootExponents& rx);
Matrix root_unitary(int n, int d);

/// Eigenvalue label s in [0, nd) of the N-fold tensor power of U on the
/// Fourier product vector |w_{js[0]} ... w_{js[N-1]}>: the eigenvalue is
/// exp(i 2pi s/(nd)) with s = (sum_p e_{js[p]}) mod nd.
int tuple_label(const RootExponents& rx, std::span<const int> js);

/// Orthonormal basis of the label-s eigenspace of the N-fold tensor power
/// of U: all Fourier product vectors whose tuple_label equals `label`.
std::vector<Vector> eigenspace_basis(const RootExponents& rx, int parties, int label);

/// Projector onto the label-s eigenspace.
Matrix eigenspace_projector(const RootExponents& rx, int parties, int label);

/// n^parties as an Eigen index, guarded against overflowing `cap`.
Eigen::Index tensor_dimension(int n, int parties, Eigen::Index cap = kDefaultDimCap);

}  // namespace bellorbit

#endif
