#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bellorbit/linalg.hpp"

using namespace bellorbit;

namespace {

Matrix random_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Complex(dist(rng), dist(rng));
    }
    return m;
}

Matrix random_hermitian(Eigen::Index n, std::mt19937_64& rng) {
    const Matrix m = random_matrix(n, n, rng);
    return (m + m.adjoint()).eval();
}

}  // namespace

TEST_CASE("kron of identities is the identity") {
    const Matrix i2 = Matrix::Identity(2, 2);
    CHECK((kron(i2, i2) - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
}

TEST_CASE("kron of diagonal matrices multiplies diagonals") {
    Matrix z(2, 2);
    z << 1, 0, 0, -1;
    const Matrix zz = kron(z, z);
    Vector expected(4);
    expected << 1, -1, -1, 1;
    CHECK((zz - Matrix(expected.asDiagonal())).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("kron entry formula on random matrices") {
    std::mt19937_64 rng(11);
    const Matrix a = random_matrix(3, 2, rng);
    const Matrix b = random_matrix(2, 4, rng);
    const Matrix k = kron(a, b);
    REQUIRE(k.rows() == 6);
    REQUIRE(k.cols() == 8);
    for (Eigen::Index i = 0; i < 3; ++i)
        for (Eigen::Index j = 0; j < 2; ++j)
            for (Eigen::Index p = 0; p < 2; ++p)
                for (Eigen::Index q = 0; q < 4; ++q)
                    CHECK(std::abs(k(i * 2 + p, j * 4 + q) - a(i, j) * b(p, q)) < 1e-15);
}

TEST_CASE("kron associativity") {
    std::mt19937_64 rng(12);
    const Matrix a = random_matrix(2, 2, rng);
    const Matrix b = random_matrix(3, 3, rng);
    const Matrix c = random_matrix(2, 2, rng);
    CHECK((kron(kron(a, b), c) - kron(a, kron(b, c))).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("kron respects the dimension cap") {
    const Matrix big = Matrix::Identity(100, 100);
    CHECK_THROWS_AS(kron(big, big, 4096), SizeError);
}

TEST_CASE("hermitian_eig on Pauli X") {
    Matrix x(2, 2);
    x << 0, 1, 1, 0;
    const EigResult eig = hermitian_eig(x);
    CHECK(eig.values(0) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(eig.values(1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hermitian_eig on identity") {
    const EigResult eig = hermitian_eig(Matrix::Identity(5, 5));
    for (Eigen::Index i = 0; i < 5; ++i) CHECK(eig.values(i) == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eig reproduces the bipartite 2x2 closed form") {
    // [[1/n, (1+X)/n^2], [(1+X)/n^2, 1/n]] has lambda_max = (1+n+X)/n^2.
    const double n = 5.0, d = 3.0;
    const double pi = std::numbers::pi;
    const double x = std::cos((d - 2) * pi / (2 * d)) / std::sin(pi / (d * n)) -
                     std::cos((d * n - 2) * pi / (2 * d * n)) / std::sin(pi / (d * n));
    Matrix m(2, 2);
    m << 1.0 / n, (1.0 + x) / (n * n), (1.0 + x) / (n * n), 1.0 / n;
    const EigResult eig = hermitian_eig(m);
    CHECK(eig.values(1) == doctest::Approx((1.0 + n + x) / (n * n)).epsilon(1e-12));
}

TEST_CASE("hermitian_eig residual, orthonormality and reconstruction") {
    std::mt19937_64 rng(13);
    const Matrix h = random_hermitian(24, rng);
    const EigResult eig = hermitian_eig(h);
    const double scale = h.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
        const Vector resid = h * eig.vectors.col(i) - eig.values(i) * eig.vectors.col(i);
        CHECK(resid.cwiseAbs().maxCoeff() <= 1e-9 * scale);
    }
    const Matrix overlap = eig.vectors.adjoint() * eig.vectors;
    CHECK((overlap - Matrix::Identity(h.rows(), h.cols())).cwiseAbs().maxCoeff() <= 1e-9);
    Matrix rebuilt = Matrix::Zero(h.rows(), h.cols());
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
        rebuilt += eig.values(i) * (eig.vectors.col(i) * eig.vectors.col(i).adjoint());
    }
    CHECK((rebuilt - h).cwiseAbs().maxCoeff() <= 1e-9);
    // ascending order
    for (Eigen::Index i = 1; i < h.rows(); ++i) CHECK(eig.values(i) >= eig.values(i - 1));
}

TEST_CASE("hermitian_eig phase convention is deterministic") {
    std::mt19937_64 rng(14);
    const Matrix h = random_hermitian(9, rng);
    const EigResult a = hermitian_eig(h);
    const EigResult b = hermitian_eig(h);
    CHECK((a.vectors - b.vectors).cwiseAbs().maxCoeff() == 0.0);
    for (Eigen::Index c = 0; c < h.cols(); ++c) {
        for (Eigen::Index r = 0; r < h.rows(); ++r) {
            if (std::abs(a.vectors(r, c)) > 1e-8) {
                CHECK(a.vectors(r, c).real() > 0.0);
                CHECK(std::abs(a.vectors(r, c).imag()) < 1e-12);
                break;
            }
        }
    }
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
    Matrix m(2, 2);
    m << 0, 1, 0, 0;
    CHECK_THROWS_AS(hermitian_eig(m), DomainError);
}

TEST_CASE("gram of an orthonormal pair is the identity") {
    Vector a(2), b(2);
    a << 1, 0;
    b << 0, 1;
    const Matrix m = gram({a, b});
    CHECK((m - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("gram of a repeated vector is rank one") {
    Vector v(3);
    v << Complex(1, 1), Complex(0, 2), Complex(-1, 0);
    const double c = v.squaredNorm();
    const Matrix m = gram({v, v});
    CHECK(std::abs(m(0, 0) - c) < 1e-12);
    CHECK(std::abs(m(0, 1) - c) < 1e-12);
    CHECK(std::abs(m(1, 0) - c) < 1e-12);
    CHECK(std::abs(m(1, 1) - c) < 1e-12);
}

TEST_CASE("gram is PSD with trace equal to the norm sum") {
    std::mt19937_64 rng(15);
    std::vector<Vector> vs;
    double norms = 0.0;
    for (int i = 0; i < 6; ++i) {
        vs.push_back(random_matrix(8, 1, rng).col(0));
        norms += vs.back().squaredNorm();
    }
    const Matrix m = gram(vs);
    const EigResult eig = hermitian_eig(m);
    CHECK(eig.values(0) >= -1e-10);
    CHECK(m.trace().real() == doctest::Approx(norms).epsilon(1e-10));
}

TEST_CASE("gram rejects mismatched dimensions") {
    CHECK_THROWS_AS(gram({Vector::Zero(2), Vector::Zero(3)}), DomainError);
}
