#include "fuzzysphere/linalg.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <lapacke.h>

namespace fsph {

double max_abs(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

double rel_scale(const Matrix& m) { return std::max(1.0, max_abs(m)); }

bool is_hermitian(const Matrix& m, double tol_rel) {
    if (m.rows() != m.cols()) return false;
    return max_abs(m - m.adjoint()) <= tol_rel * rel_scale(m);
}

Matrix kron(const Matrix& a, const Matrix& b) {
    return Eigen::kroneckerProduct(a, b);
}

Matrix commutator(const Matrix& a, const Matrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw std::invalid_argument("commutator: arguments must be square and of equal dimension");
    return a * b - b * a;
}

Matrix anticommutator(const Matrix& a, const Matrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw std::invalid_argument("anticommutator: arguments must be square and of equal dimension");
    return a * b + b * a;
}

namespace {

Matrix symmetrized_checked(const Matrix& h, const char* who) {
    if (h.rows() != h.cols())
        throw std::invalid_argument(std::string(who) + ": matrix must be square");
    if (!is_hermitian(h, 1e-10))
        throw ContractViolation(std::string(who) + ": matrix is not Hermitian within 1e-10 relative tolerance");
    return (h + h.adjoint()) / 2.0;
}

}  // namespace

Eigensystem hermitian_eigensystem(const Matrix& h) {
    Matrix work = symmetrized_checked(h, "hermitian_eigensystem");
    const lapack_int n = static_cast<lapack_int>(work.rows());
    Eigensystem out;
    out.values.resize(n);
    if (n == 0) return out;
    lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n,
                                     reinterpret_cast<lapack_complex_double*>(work.data()), n,
                                     out.values.data());
    if (info != 0)
        throw std::runtime_error("hermitian_eigensystem: zheevd failed with info " + std::to_string(info));
    out.vectors = std::move(work);
    return out;
}

RealVector hermitian_eigenvalues(const Matrix& h) {
    Matrix work = symmetrized_checked(h, "hermitian_eigenvalues");
    const lapack_int n = static_cast<lapack_int>(work.rows());
    RealVector values(n);
    if (n == 0) return values;
    lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', n,
                                     reinterpret_cast<lapack_complex_double*>(work.data()), n,
                                     values.data());
    if (info != 0)
        throw std::runtime_error("hermitian_eigenvalues: zheevd failed with info " + std::to_string(info));
    return values;
}

Vector flatten(const Matrix& m) {
    // Eigen stores column-major, so this is the column-stacking convention.
    return Eigen::Map<const Vector>(m.data(), m.size());
}

Matrix unflatten(const Vector& v, Index rows, Index cols) {
    if (rows <= 0 || cols <= 0 || v.size() != rows * cols)
        throw std::invalid_argument("unflatten: vector length does not match rows*cols");
    return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

std::vector<EigenvalueCluster> cluster_eigenvalues(const RealVector& values, double gap_tol_rel) {
    std::vector<EigenvalueCluster> clusters;
    if (values.size() == 0) return clusters;
    const double gap = gap_tol_rel * std::max(1.0, values.cwiseAbs().maxCoeff());
    double sum = values(0);
    int count = 1;
    for (Index i = 1; i < values.size(); ++i) {
        if (values(i) - values(i - 1) <= gap) {
            sum += values(i);
            ++count;
        } else {
            clusters.push_back({sum / count, count});
            sum = values(i);
            count = 1;
        }
    }
    clusters.push_back({sum / count, count});
    return clusters;
}

double hermitian_spectral_norm(const Matrix& h, int max_iterations) {
    if (h.rows() != h.cols()) throw std::invalid_argument("hermitian_spectral_norm: matrix must be square");
    const Index n = h.rows();
    if (n == 0) return 0.0;
    Vector v = Vector::Constant(n, Complex(1.0, 0.0) / std::sqrt(double(n)));
    double lambda = 0.0;
    for (int it = 0; it < max_iterations; ++it) {
        Vector w = h * (h * v);
        const double norm = w.norm();
        if (norm == 0.0) return 0.0;
        w /= norm;
        if (std::abs(norm - lambda) <= 1e-13 * norm) return std::sqrt(norm);
        v = std::move(w);
        lambda = norm;
    }
    return std::sqrt(lambda);
}

Matrix random_gaussian(Index rows, Index cols, std::mt19937_64& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    Matrix m(rows, cols);
    for (Index j = 0; j < cols; ++j)
        for (Index i = 0; i < rows; ++i)
            m(i, j) = Complex(dist(rng), dist(rng));
    return m;
}

Matrix random_gaussian_hermitian(Index n, std::mt19937_64& rng) {
    Matrix g = random_gaussian(n, n, rng);
    return (g + g.adjoint()) / 2.0;
}

Matrix random_gaussian_field(Index n, std::mt19937_64& rng) {
    Matrix a = random_gaussian_hermitian(n, rng);
    Matrix b = random_gaussian_hermitian(n, rng);
    return a + Complex(0, 1) * b;
}

}  // namespace fsph
