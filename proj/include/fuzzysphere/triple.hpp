#pragma once

#include "fuzzysphere/algebra.hpp"

namespace fsph {

/// Thrown when an internally computed object fails a structural expectation
/// (e.g. the maximal angular-momentum eigenspace has the wrong dimension).
class InternalConsistency : public std::runtime_error {
public:
    explicit InternalConsistency(const std::string& what) : std::runtime_error(what) {}
};

// --- bimodule lifts -------------------------------------------------------
//
// The (N+1)x(N+1) bimodule is flattened by column stacking, so
//   lift_left(a)  flatten(Psi) = flatten(a Psi)   with lift_left(a)  = kron(I, a),
//   lift_right(b) flatten(Psi) = flatten(Psi b)   with lift_right(b) = kron(b^T, I).
// lift_right represents the opposite algebra: lift_right(a) lift_right(b) = lift_right(b a).

Matrix lift_left(const Matrix& a);
Matrix lift_right(const Matrix& b);

/// Spinor-space embeddings. The spinor ordering is spin factor first:
/// operators are sums of kron(2x2 spin block, bimodule block).
Matrix spin_embed(const Matrix& spin_block, Index bimodule_dim);  // kron(s, I)
Matrix pauli(int i, Index bimodule_dim);                          // kron(sigma_i, I), i in {0,1,2}

/// pi(a): the left representation of an algebra element on the spinor space,
/// kron(I_2, lift_left(a)).
Matrix algebra_rep(const FuzzySphere& s, const Matrix& a);

// --- chirality and Dirac operators ----------------------------------------

/// gamma_chi° = (sum_i sigma_i ⊗ lift_right(x_i) - alpha/2) / Ncal with
/// Ncal = (alpha/2)(N+1). Hermitian involution; commutes with every
/// lift_left(a), which is what makes the original algebra part of the triple.
Matrix chirality_opposite(const FuzzySphere& s);

/// gamma_chi = (sum_i sigma_i ⊗ lift_left(x_i) + alpha/2) / Ncal.
Matrix chirality_left(const FuzzySphere& s);

/// The essential factor sum_ijk eps_ijk sigma_i ⊗ lift_right(x_j) lift_left(x_k);
/// anticommutes with both chirality operators.
Matrix dirac_essential_factor(const FuzzySphere& s);

/// D = (i / (ell alpha)) gamma_chi° * essential factor. Self-adjoint and
/// anticommuting with gamma_chi°.
Matrix dirac_operator(const FuzzySphere& s);

/// The same operator assembled from the adjoint angular momentum:
/// (i/ell) gamma_chi° sum_i chi_i J_i with chi_i = sum_jk eps_ijk sigma_j ⊗ lift_left(x_k)
/// and J_i = L_i + sigma_i/2. Equals dirac_operator entrywise.
Matrix dirac_operator_adjoint_form(const FuzzySphere& s);

/// (i/ell) gamma_chi sum_i chi_i J_i — the comparator with the left chirality
/// in front. Its square equals D^2, so the squared spectra coincide.
Matrix dirac_operator_cw96(const FuzzySphere& s);

/// Adjoint angular momentum on the spinor space,
/// L_i = kron(I_2, lift_left(L_i) - lift_right(L_i)).
std::array<Matrix, 3> adjoint_momentum(const FuzzySphere& s);

/// Total angular momentum J_i = L_i + sigma_i / 2.
std::array<Matrix, 3> total_momentum(const FuzzySphere& s);

/// J^2, assembled from bimodule-sized products (no spinor-sized multiplies).
/// Eigenvalues j(j+1) for half-integer 1/2 <= j <= N + 1/2.
Matrix total_momentum_squared(const FuzzySphere& s);

/// Tr_H(a b°) = 2 Tr(a) Tr(b); the factor 2 is the spin trace.
Complex hilbert_trace(const Matrix& a, const Matrix& b);

// --- spectrum --------------------------------------------------------------

struct SpectrumGroup {
    double j = 0.0;                 // half-integer total angular momentum
    double lambda_sq_measured = 0.0;
    double lambda_sq_formula = 0.0;
    int degeneracy = 0;
};

struct SpectrumReport {
    int cutoff = 0;
    double radius = 1.0;
    std::vector<SpectrumGroup> groups;  // j ascending
    double max_residual = 0.0;
};

/// Closed form lambda_j^2 = (j+1/2)^2 [1 + (1-(j+1/2)^2)/(N(N+2))] / ell^2.
double dirac_lambda_sq_formula(int cutoff, double j, double radius = 1.0);

/// Eigensolve D^2, grouped by total angular momentum. The J^2 eigenspaces are
/// exactly separated, so they split clusters that coincide accidentally in
/// lambda^2 (at N = 4, j = 5/2 and j = 7/2 share lambda^2 = 6 exactly).
/// The multiset of raw D^2 eigenvalues is cross-checked against the sector
/// values; disagreement raises DegenerateSpectrum with the raw eigenvalues.
SpectrumReport dirac_spectrum(const FuzzySphere& s);
SpectrumReport dirac_spectrum(const FuzzySphere& s, const Matrix& dirac);

/// Real trace of a chirality operator: +2(N+1) for gamma_chi, -2(N+1) for
/// gamma_chi°; |index| counts the zeromodes.
double chirality_index(const Matrix& chirality);

/// Orthogonal projector onto the j = N + 1/2 multiplet (the Dirac zeromodes),
/// built from the J^2 eigenvectors at eigenvalue (N+1/2)(N+3/2). Rank 2N+2.
Matrix zeromode_projector(const FuzzySphere& s);

}  // namespace fsph
