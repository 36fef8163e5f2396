#pragma once

#include "fuzzysphere/triple.hpp"

namespace fsph {

struct ScalarField {
    int cutoff = 0;
    Matrix phi;  // (N+1)x(N+1), complex
};

ScalarField make_field(const FuzzySphere& s, Matrix phi);

struct ActionReport {
    double s_spectral = 0.0;   // (1/2(N+1)^2) Tr_H (dPhi)† dPhi
    double s_closed = 0.0;     // (-2/3 alpha^2 (N+1)) Tr [x_i, Phi†][x_i, Phi]
    double discrepancy = 0.0;  // |s_spectral - s_closed|
    double mode_sum = 0.0;     // (2/3) sum l(l+1) |c_lm|^2
};

/// Kinetic action of a complex scalar field, evaluated through the spectral
/// route (spinor-space trace of (dPhi)† dPhi), the closed commutator formula,
/// and the angular-momentum mode sum. All three agree to machine precision;
/// the discrepancy field records |spectral - closed|.
ActionReport scalar_action(const FuzzySphere& s, const ScalarField& f);
ActionReport scalar_action(const FuzzySphere& s, const ScalarField& f, const Matrix& dirac,
                           const AdjointEigenbasis& basis);

struct ModeCoefficient {
    int l = 0;
    int m = 0;
    Complex c;
};

/// Coefficients of Phi in the adjoint eigenbasis; Parseval:
/// sum |c_lm|^2 = Tr(Phi† Phi)/(N+1).
std::vector<ModeCoefficient> mode_decompose(const FuzzySphere& s, const ScalarField& f);
std::vector<ModeCoefficient> mode_decompose(const FuzzySphere& s, const ScalarField& f,
                                            const AdjointEigenbasis& basis);

struct LaplacianLevel {
    double eigenvalue = 0.0;  // l(l+1)
    int multiplicity = 0;     // 2l+1
};

/// Spectrum of the adjoint Casimir on the scalar (bimodule) space: exactly
/// {l(l+1) : 0 <= l <= N} with multiplicity 2l+1, truncated at l = N.
std::vector<LaplacianLevel> laplacian_spectrum(const FuzzySphere& s);

/// Tr(Phi)/(N+1); the fuzzy integral, normalized so the unit integrates to 1.
Complex integration_correspondence(const FuzzySphere& s, const ScalarField& f);

}  // namespace fsph
