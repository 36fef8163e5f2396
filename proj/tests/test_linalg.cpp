#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fuzzysphere/linalg.hpp"
#include "support.hpp"

using namespace fsph;
using testsupport::paulis;

TEST_CASE("kron identity and diagonal cases") {
    const Matrix i2 = Matrix::Identity(2, 2);
    const Matrix i3 = Matrix::Identity(3, 3);
    CHECK(max_abs(kron(i2, i3) - Matrix::Identity(6, 6)) == 0.0);

    Matrix d(2, 2);
    d << 1, 0, 0, 2;
    Matrix expect = Matrix::Zero(4, 4);
    expect.diagonal() << 1, 1, 2, 2;
    CHECK(max_abs(kron(d, i2) - expect) == 0.0);

    const Matrix s1 = paulis()[0];
    const Matrix k = kron(s1, s1);
    CHECK(max_abs(k * k - Matrix::Identity(4, 4)) == 0.0);
}

TEST_CASE("kron mixed-product property and bilinearity") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix a = random_gaussian(3, 2, rng), b = random_gaussian(2, 4, rng);
        const Matrix c = random_gaussian(2, 3, rng), d = random_gaussian(4, 2, rng);
        const double scale = rel_scale(kron(a * c, b * d));
        CHECK(max_abs(kron(a, b) * kron(c, d) - kron(a * c, b * d)) <= 1e-13 * scale);

        const Matrix e = random_gaussian(3, 2, rng);
        CHECK(max_abs(kron(a + e, b) - kron(a, b) - kron(e, b)) <= 1e-13 * rel_scale(kron(a, b)));
    }
}

TEST_CASE("commutators on the Pauli algebra") {
    const auto& s = paulis();
    CHECK(max_abs(commutator(s[0], s[1]) - 2.0 * Complex(0, 1) * s[2]) == 0.0);
    CHECK(max_abs(anticommutator(s[0], s[1])) == 0.0);

    std::mt19937_64 rng(5);
    const Matrix m = random_gaussian(4, 4, rng);
    CHECK(max_abs(commutator(m, m)) == 0.0);

    CHECK_THROWS_AS(commutator(Matrix::Zero(2, 2), Matrix::Zero(3, 3)), std::invalid_argument);
    CHECK_THROWS_AS(anticommutator(Matrix::Zero(2, 3), Matrix::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("hermitian eigensystem small exact cases") {
    Matrix d = Matrix::Zero(3, 3);
    d.diagonal() << 3, 1, 2;
    const auto es = hermitian_eigensystem(d);
    CHECK(es.values(0) == doctest::Approx(1).epsilon(1e-14));
    CHECK(es.values(1) == doctest::Approx(2).epsilon(1e-14));
    CHECK(es.values(2) == doctest::Approx(3).epsilon(1e-14));

    const auto es1 = hermitian_eigensystem(paulis()[0]);
    CHECK(es1.values(0) == doctest::Approx(-1).epsilon(1e-14));
    CHECK(es1.values(1) == doctest::Approx(1).epsilon(1e-14));
}

TEST_CASE("hermitian eigensystem contract on random input") {
    std::mt19937_64 rng(17);
    for (Eigen::Index dim : {50, 578, 1152}) {
        const Matrix h = random_gaussian_hermitian(dim, rng);
        const auto es = hermitian_eigensystem(h);
        const double scale = rel_scale(h);

        CHECK(std::abs(es.values.sum() - h.trace().real()) <= 1e-10 * scale);
        CHECK(max_abs(h * es.vectors - es.vectors * es.values.asDiagonal().toDenseMatrix().cast<Complex>()) <=
              1e-10 * scale);
        CHECK(max_abs(es.vectors.adjoint() * es.vectors - Matrix::Identity(dim, dim)) <= 1e-10);
        for (Eigen::Index i = 1; i < dim; ++i) CHECK(es.values(i) >= es.values(i - 1));
    }
}

TEST_CASE("hermitian eigensystem rejects non-Hermitian input") {
    std::mt19937_64 rng(23);
    const Matrix g = random_gaussian(6, 6, rng);
    CHECK_THROWS_AS(hermitian_eigensystem(g), ContractViolation);
    CHECK_THROWS_AS(hermitian_eigenvalues(g), ContractViolation);
}

TEST_CASE("flatten follows the column-stacking convention") {
    Matrix m(2, 2);
    m << 1, 2, 3, 4;
    const Vector v = flatten(m);
    CHECK(v(0) == Complex(1));
    CHECK(v(1) == Complex(3));
    CHECK(v(2) == Complex(2));
    CHECK(v(3) == Complex(4));

    std::mt19937_64 rng(29);
    const Matrix r = random_gaussian(5, 7, rng);
    CHECK(max_abs(unflatten(flatten(r), 5, 7) - r) == 0.0);
    CHECK_THROWS_AS(unflatten(flatten(r), 6, 7), std::invalid_argument);
}

TEST_CASE("flatten interchanges left/right multiplication with kron") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix a = random_gaussian(3, 3, rng);
        const Matrix psi = random_gaussian(3, 3, rng);
        const Matrix b = random_gaussian(3, 3, rng);
        const Matrix i3 = Matrix::Identity(3, 3);

        CHECK((kron(i3, a) * flatten(psi) - flatten(a * psi)).cwiseAbs().maxCoeff() <= 1e-14);
        const double scale = std::max(1.0, flatten(a * psi * b).cwiseAbs().maxCoeff());
        CHECK((kron(b.transpose(), a) * flatten(psi) - flatten(a * psi * b)).cwiseAbs().maxCoeff() <=
              1e-13 * scale);
    }
}

TEST_CASE("eigenvalue clustering groups by gap") {
    RealVector v(6);
    v << 0.0, 1e-12, 1.0, 1.0 + 1e-12, 1.0 + 2e-12, 5.0;
    const auto clusters = cluster_eigenvalues(v, 1e-8);
    REQUIRE(clusters.size() == 3);
    CHECK(clusters[0].count == 2);
    CHECK(clusters[1].count == 3);
    CHECK(clusters[2].count == 1);
    CHECK(clusters[1].mean == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("spectral norm via power iteration") {
    std::mt19937_64 rng(37);
    const Matrix h = random_gaussian_hermitian(40, rng);
    const auto values = hermitian_eigenvalues(h);
    const double expect = std::max(std::abs(values(0)), std::abs(values(39)));
    CHECK(hermitian_spectral_norm(h) == doctest::Approx(expect).epsilon(1e-9));
}
