#include "fuzzysphere/scalar_field.hpp"

#include <cmath>

namespace fsph {

namespace {

void check_dims(const FuzzySphere& s, const ScalarField& f, const char* who) {
    if (f.phi.rows() != s.dim() || f.phi.cols() != s.dim())
        throw std::invalid_argument(std::string(who) + ": field dimension does not match the sphere");
}

double real_checked(Complex value, const char* who) {
    if (std::abs(value.imag()) > 1e-12 * std::max(1.0, std::abs(value.real())))
        throw InternalConsistency(std::string(who) + ": imaginary residue " +
                                  std::to_string(value.imag()) + " exceeds tolerance");
    return value.real();
}

}  // namespace

ScalarField make_field(const FuzzySphere& s, Matrix phi) {
    ScalarField f{s.cutoff, std::move(phi)};
    check_dims(s, f, "make_field");
    return f;
}

ActionReport scalar_action(const FuzzySphere& s, const ScalarField& f, const Matrix& dirac,
                           const AdjointEigenbasis& basis) {
    check_dims(s, f, "scalar_action");
    const int n = s.dim();

    const Matrix d_phi = commutator(dirac, algebra_rep(s, f.phi));
    // Tr (dPhi)† dPhi is the squared Frobenius norm.
    const double spectral = d_phi.squaredNorm() / (2.0 * n * n);

    Complex closed = 0.0;
    const Matrix phi_dag = f.phi.adjoint();
    for (int i = 0; i < 3; ++i)
        closed += (commutator(s.x[i], phi_dag) * commutator(s.x[i], f.phi)).trace();
    closed *= -2.0 / (3.0 * s.alpha * s.alpha * n);

    ActionReport report;
    report.s_spectral = spectral;
    report.s_closed = real_checked(closed, "scalar_action");
    report.discrepancy = std::abs(report.s_spectral - report.s_closed);
    if (report.s_closed < -1e-12)
        throw InternalConsistency("scalar_action: kinetic action came out negative");

    report.mode_sum = 0.0;
    for (const auto& mode : mode_decompose(s, f, basis))
        report.mode_sum += 2.0 / 3.0 * mode.l * (mode.l + 1) * std::norm(mode.c);
    return report;
}

ActionReport scalar_action(const FuzzySphere& s, const ScalarField& f) {
    return scalar_action(s, f, dirac_operator(s), adjoint_eigenbasis(s));
}

std::vector<ModeCoefficient> mode_decompose(const FuzzySphere& s, const ScalarField& f,
                                            const AdjointEigenbasis& basis) {
    check_dims(s, f, "mode_decompose");
    std::vector<ModeCoefficient> coefficients;
    coefficients.reserve(basis.modes.size());
    for (const auto& mode : basis.modes)
        coefficients.push_back({mode.l, mode.m, (mode.y.adjoint() * f.phi).trace() / double(s.dim())});
    return coefficients;
}

std::vector<ModeCoefficient> mode_decompose(const FuzzySphere& s, const ScalarField& f) {
    return mode_decompose(s, f, adjoint_eigenbasis(s));
}

std::vector<LaplacianLevel> laplacian_spectrum(const FuzzySphere& s) {
    const Index nb = s.bimodule_dim();
    Matrix casimir = Matrix::Zero(nb, nb);
    for (int i = 0; i < 3; ++i) {
        const Matrix l = lift_left(s.generators[i]) - lift_right(s.generators[i]);
        casimir += l * l;
    }
    const auto clusters = cluster_eigenvalues(hermitian_eigenvalues(casimir), 1e-8);
    std::vector<LaplacianLevel> levels;
    levels.reserve(clusters.size());
    for (const auto& c : clusters) levels.push_back({c.mean, c.count});
    return levels;
}

Complex integration_correspondence(const FuzzySphere& s, const ScalarField& f) {
    check_dims(s, f, "integration_correspondence");
    return f.phi.trace() / double(s.dim());
}

}  // namespace fsph
