#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace fsph {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Thrown when an input violates a documented operator contract
/// (e.g. a matrix handed to the Hermitian eigensolver is not Hermitian
/// within tolerance).
class ContractViolation : public std::runtime_error {
public:
    explicit ContractViolation(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when eigenvalue clustering cannot be resolved; carries the raw
/// eigenvalues so the caller can inspect the gap structure.
class DegenerateSpectrum : public std::runtime_error {
public:
    DegenerateSpectrum(const std::string& what, std::vector<double> raw)
        : std::runtime_error(what), eigenvalues(std::move(raw)) {}
    std::vector<double> eigenvalues;
};

/// Largest entry magnitude; zero for empty matrices.
double max_abs(const Matrix& m);

/// max(1, max_abs(m)) — the relative scale all tolerances are quoted against.
double rel_scale(const Matrix& m);

bool is_hermitian(const Matrix& m, double tol_rel = 1e-10);

/// Kronecker product, dimensions (a.rows*b.rows) x (a.cols*b.cols).
Matrix kron(const Matrix& a, const Matrix& b);

Matrix commutator(const Matrix& a, const Matrix& b);      // ab - ba
Matrix anticommutator(const Matrix& a, const Matrix& b);  // ab + ba

struct Eigensystem {
    RealVector values;  // ascending
    Matrix vectors;     // orthonormal columns, same order
};

/// Dense Hermitian eigensolve (LAPACK zheevd). The input is symmetrized as
/// (h + h†)/2 before solving; inputs farther than 1e-10 * rel_scale from
/// Hermitian are rejected with ContractViolation.
Eigensystem hermitian_eigensystem(const Matrix& h);

/// Eigenvalues only; same contract, cheaper.
RealVector hermitian_eigenvalues(const Matrix& h);

/// Column-stacking vectorization: flatten(a Psi b) = kron(b^T, a) flatten(Psi).
Vector flatten(const Matrix& m);
Matrix unflatten(const Vector& v, Index rows, Index cols);

struct EigenvalueCluster {
    double mean = 0.0;
    int count = 0;
};

/// Group ascending values whose consecutive gaps are below
/// gap_tol_rel * max(1, |values|_max).
std::vector<EigenvalueCluster> cluster_eigenvalues(const RealVector& values, double gap_tol_rel = 1e-8);

/// Spectral norm of a Hermitian matrix via power iteration on h^2 with a
/// deterministic start vector. Accurate to ~1e-12 relative, which is all the
/// boundedness probe needs.
double hermitian_spectral_norm(const Matrix& h, int max_iterations = 10000);

/// Gaussian complex matrix, entries re+im ~ N(0,1).
Matrix random_gaussian(Index rows, Index cols, std::mt19937_64& rng);

/// A + iB with A, B independent Gaussian Hermitian; the standard complex
/// test-field ensemble used across the suite.
Matrix random_gaussian_field(Index n, std::mt19937_64& rng);

/// Hermitian Gaussian matrix (G + G†)/2.
Matrix random_gaussian_hermitian(Index n, std::mt19937_64& rng);

}  // namespace fsph
