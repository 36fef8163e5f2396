#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fuzzysphere/algebra.hpp"
#include "support.hpp"

#include <cmath>

using namespace fsph;
using testsupport::epsilon;
using testsupport::paulis;

TEST_CASE("su(2) generators at small cutoffs") {
    const auto half = su2_generators(1);
    for (int i = 0; i < 3; ++i) CHECK(max_abs(half[i] - 0.5 * paulis()[i]) <= 1e-15);

    const auto one = su2_generators(2);
    Matrix l3 = Matrix::Zero(3, 3);
    l3.diagonal() << 1, 0, -1;
    CHECK(max_abs(one[2] - l3) == 0.0);

    const auto two = su2_generators(4);
    Matrix casimir = Matrix::Zero(5, 5);
    for (const auto& l : two) casimir += l * l;
    CHECK(max_abs(casimir - 6.0 * Matrix::Identity(5, 5)) <= 1e-13);

    CHECK_THROWS_AS(su2_generators(0), std::invalid_argument);
    CHECK_THROWS_AS(su2_generators(-3), std::invalid_argument);
}

TEST_CASE("su(2) commutation relations hold through N = 32") {
    for (int n = 1; n <= 32; ++n) {
        const auto l = su2_generators(n);
        double worst = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Matrix expect = Matrix::Zero(n + 1, n + 1);
                for (int k = 0; k < 3; ++k)
                    if (epsilon(i, j, k)) expect += double(epsilon(i, j, k)) * Complex(0, 1) * l[k];
                worst = std::max(worst, max_abs(commutator(l[i], l[j]) - expect));
            }
        CHECK(worst <= 1e-13);
    }
}

TEST_CASE("fuzzy sphere invariants across cutoffs and radii") {
    CHECK(fuzzy_sphere(2, 1.0).alpha == doctest::Approx(2.0 / std::sqrt(8.0)).epsilon(1e-15));

    const FuzzySphere tiny = fuzzy_sphere(1, 1.0);
    for (int i = 0; i < 3; ++i)
        CHECK(max_abs(tiny.x[i] - paulis()[i] / std::sqrt(3.0)) <= 1e-15);

    for (double ell : {1.0, 2.5}) {
        for (int n = 1; n <= 32; ++n) {
            const FuzzySphere s = fuzzy_sphere(n, ell);
            CHECK(s.alpha == 2.0 * ell / std::sqrt(double(n) * (n + 2)));

            double worst = 0.0;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    Matrix expect = Matrix::Zero(s.dim(), s.dim());
                    for (int k = 0; k < 3; ++k)
                        if (epsilon(i, j, k))
                            expect += double(epsilon(i, j, k)) * Complex(0, 1) * s.alpha * s.x[k];
                    worst = std::max(worst, max_abs(commutator(s.x[i], s.x[j]) - expect));
                }
            CHECK(worst <= 1e-12 * ell);

            Matrix sq = Matrix::Zero(s.dim(), s.dim());
            for (int i = 0; i < 3; ++i) sq += s.x[i] * s.x[i];
            CHECK(max_abs(sq - ell * ell * Matrix::Identity(s.dim(), s.dim())) <= 1e-12 * ell * ell);

            for (int i = 0; i < 3; ++i) {
                CHECK(is_hermitian(s.generators[i], 1e-14));
                CHECK(max_abs(s.x[i] - s.alpha * s.generators[i]) == 0.0);
            }
        }
    }

    CHECK_THROWS_AS(fuzzy_sphere(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(fuzzy_sphere(3, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(fuzzy_sphere(3, -1.0), std::invalid_argument);
}

namespace {

Matrix ad_casimir_apply(const FuzzySphere& s, const Matrix& y) {
    Matrix out = Matrix::Zero(y.rows(), y.cols());
    for (int i = 0; i < 3; ++i)
        out += commutator(s.x[i], commutator(s.x[i], y)) / (s.alpha * s.alpha);
    return out;
}

}  // namespace

TEST_CASE("adjoint eigenbasis diagonalizes the adjoint action") {
    for (int n : {1, 2, 3, 6, 10}) {
        const FuzzySphere s = fuzzy_sphere(n, 1.0);
        const AdjointEigenbasis basis = adjoint_eigenbasis(s);
        REQUIRE(int(basis.modes.size()) == s.bimodule_dim());

        for (const auto& mode : basis.modes) {
            CHECK(max_abs(ad_casimir_apply(s, mode.y) - double(mode.l * (mode.l + 1)) * mode.y) <= 1e-10);
            CHECK(max_abs(commutator(s.x[2], mode.y) / s.alpha - double(mode.m) * mode.y) <= 1e-10);
        }

        double gram = 0.0;
        for (const auto& a : basis.modes)
            for (const auto& b : basis.modes) {
                const Complex inner = (a.y.adjoint() * b.y).trace() / double(s.dim());
                gram = std::max(gram, std::abs(inner - (a.l == b.l && a.m == b.m ? 1.0 : 0.0)));
            }
        CHECK(gram <= 1e-10);
    }
}

TEST_CASE("adjoint eigenbasis small-N structure") {
    const FuzzySphere s1 = fuzzy_sphere(1, 1.0);
    const AdjointEigenbasis b1 = adjoint_eigenbasis(s1);

    // l = 0 mode is the (normalized) identity.
    const auto& unit = b1.mode(0, 0);
    CHECK(max_abs(unit.y - unit.y(0, 0) * Matrix::Identity(2, 2)) <= 1e-12);
    CHECK(std::abs(std::abs(unit.y(0, 0)) - 1.0) <= 1e-12);

    // ad-Casimir eigenvalues on the four-dimensional matrix space: {0, 2, 2, 2}.
    std::vector<double> eigenvalues;
    for (const auto& mode : b1.modes) eigenvalues.push_back(double(mode.l * (mode.l + 1)));
    std::sort(eigenvalues.begin(), eigenvalues.end());
    CHECK(eigenvalues == std::vector<double>{0, 2, 2, 2});

    // Multiplicities at N = 2: l = 0,1,2 -> 1,3,5.
    const AdjointEigenbasis b2 = adjoint_eigenbasis(fuzzy_sphere(2, 1.0));
    std::array<int, 3> counts{};
    for (const auto& mode : b2.modes) ++counts.at(mode.l);
    CHECK(counts == std::array<int, 3>{1, 3, 5});
}

TEST_CASE("adjoint eigenbasis lowering phases are positive") {
    const FuzzySphere s = fuzzy_sphere(4, 1.0);
    const AdjointEigenbasis basis = adjoint_eigenbasis(s);
    const Matrix lm = (s.generators[0] - Complex(0, 1) * s.generators[1]);
    for (const auto& mode : basis.modes) {
        if (mode.m == -mode.l) continue;
        const auto& lower = basis.mode(mode.l, mode.m - 1);
        const Complex elem = (lower.y.adjoint() * commutator(lm, mode.y)).trace() / double(s.dim());
        CHECK(elem.real() > 0.0);
        CHECK(std::abs(elem.imag()) <= 1e-10 * elem.real());
    }
}

TEST_CASE("adjoint eigenbasis reconstructs arbitrary matrices") {
    std::mt19937_64 rng(41);
    for (int n : {2, 5}) {
        const FuzzySphere s = fuzzy_sphere(n, 1.0);
        const AdjointEigenbasis basis = adjoint_eigenbasis(s);
        const Matrix probe = random_gaussian(s.dim(), s.dim(), rng);
        Matrix rebuilt = Matrix::Zero(s.dim(), s.dim());
        for (const auto& mode : basis.modes)
            rebuilt += (mode.y.adjoint() * probe).trace() / double(s.dim()) * mode.y;
        CHECK(max_abs(rebuilt - probe) <= 1e-10);
    }
}

TEST_CASE("clock and shift pair") {
    const ClockShiftPair two = clock_shift(1);
    Matrix s_expect(2, 2), t_expect(2, 2);
    s_expect << 1, 0, 0, -1;
    t_expect << 0, 1, 1, 0;
    CHECK(max_abs(two.clock - s_expect) <= 1e-13);
    CHECK(max_abs(two.shift - t_expect) == 0.0);
    CHECK(std::abs(two.q - Complex(-1, 0)) <= 1e-13);
    CHECK(max_abs(two.clock * two.shift + two.shift * two.clock) <= 1e-13);

    for (int n : {1, 2, 5, 12, 31}) {
        const ClockShiftPair cs = clock_shift(n);
        const int dim = n + 1;
        const Matrix id = Matrix::Identity(dim, dim);
        CHECK(max_abs(cs.clock * cs.shift - cs.q * (cs.shift * cs.clock)) <= 1e-13);
        CHECK(max_abs(cs.clock * cs.clock.adjoint() - id) <= 1e-13);
        CHECK(max_abs(cs.shift * cs.shift.adjoint() - id) <= 1e-13);

        Matrix sp = id, tp = id;
        for (int k = 0; k < dim; ++k) {
            sp = sp * cs.clock;
            tp = tp * cs.shift;
        }
        CHECK(max_abs(sp - id) <= 1e-12);
        CHECK(max_abs(tp - id) == 0.0);
    }

    CHECK_THROWS_AS(clock_shift(0), std::invalid_argument);
}
