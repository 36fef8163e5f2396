#pragma once

#include "fuzzysphere/linalg.hpp"

#include <array>
#include <vector>

namespace fsph {

/// The fuzzy sphere at cutoff N: coordinates x_i = alpha L_i built from the
/// spin-N/2 su(2) generators, with [x_i, x_j] = i alpha eps_ijk x_k and
/// sum_i x_i^2 = ell^2.
struct FuzzySphere {
    int cutoff = 0;        // N >= 1
    double radius = 1.0;   // ell
    double alpha = 0.0;    // 2 ell / sqrt(N(N+2))
    std::array<Matrix, 3> x;
    std::array<Matrix, 3> generators;  // L_i, Hermitian, Casimir (N/2)(N/2+1)

    int dim() const { return cutoff + 1; }            // algebra matrices
    int bimodule_dim() const { return dim() * dim(); }
    int spinor_dim() const { return 2 * bimodule_dim(); }
};

/// Spin-j = N/2 generators in the J3-diagonal basis with Condon-Shortley
/// ladder phases. Throws std::invalid_argument for N < 1 (alpha is singular
/// at N = 0).
std::array<Matrix, 3> su2_generators(int cutoff);

FuzzySphere fuzzy_sphere(int cutoff, double radius = 1.0);

struct AdjointMode {
    int l = 0;
    int m = 0;
    Matrix y;  // (N+1)x(N+1), orthonormal under <A,B> = Tr(A†B)/(N+1)
};

/// Fuzzy spherical harmonics: the joint eigenbasis of the adjoint Casimir
/// (eigenvalue l(l+1)) and adjoint L3 (eigenvalue m), 0 <= l <= N.
struct AdjointEigenbasis {
    int cutoff = 0;
    std::vector<AdjointMode> modes;  // ordered l ascending, m descending

    const AdjointMode& mode(int l, int m) const;
    static double inner(const Matrix& a, const Matrix& b);  // Tr(a†b)/dim
};

/// Built by normalizing the highest-weight matrix (L_+)^l and lowering with
/// the adjoint ladder operator; lowering normalization is positive, which
/// fixes the Condon-Shortley-style phase between successive m.
AdjointEigenbasis adjoint_eigenbasis(const FuzzySphere& s);

struct ClockShiftPair {
    Matrix clock;  // S = diag(1, q, ..., q^N)
    Matrix shift;  // T |k> = |k+1 mod N+1>
    Complex q;     // exp(2 pi i / (N+1))
};

/// Fuzzy torus generators obeying S T = q T S.
ClockShiftPair clock_shift(int cutoff);

}  // namespace fsph
