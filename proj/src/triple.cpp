#include "fuzzysphere/triple.hpp"

#include <algorithm>
#include <cmath>

namespace fsph {

namespace {

const Matrix& sigma(int i) {
    static const std::array<Matrix, 3> paulis = [] {
        std::array<Matrix, 3> s;
        s[0] = Matrix{{0, 1}, {1, 0}};
        s[1] = Matrix{{0, Complex(0, -1)}, {Complex(0, 1), 0}};
        s[2] = Matrix{{1, 0}, {0, -1}};
        return s;
    }();
    return paulis.at(i);
}

constexpr int kEpsilon[3][3][3] = {
    {{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
    {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
    {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}},
};

double normalization(const FuzzySphere& s) { return s.alpha / 2.0 * (s.cutoff + 1); }

/// sum_i chi_i J_i assembled on the bimodule level first; chi_i carries the
/// sign convention that makes the adjoint form reproduce dirac_operator.
Matrix chi_dot_j(const FuzzySphere& s) {
    const Index nb = s.bimodule_dim();
    std::array<Matrix, 3> chi;
    for (int i = 0; i < 3; ++i) {
        chi[i] = Matrix::Zero(2 * nb, 2 * nb);
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                if (kEpsilon[i][j][k])
                    chi[i] += double(kEpsilon[i][j][k]) * kron(sigma(j), lift_left(s.x[k]));
    }
    const auto jj = total_momentum(s);
    Matrix sum = Matrix::Zero(2 * nb, 2 * nb);
    for (int i = 0; i < 3; ++i) sum += chi[i] * jj[i];
    return sum;
}

}  // namespace

Matrix lift_left(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("lift_left: matrix must be square");
    return kron(Matrix::Identity(a.rows(), a.cols()), a);
}

Matrix lift_right(const Matrix& b) {
    if (b.rows() != b.cols()) throw std::invalid_argument("lift_right: matrix must be square");
    return kron(b.transpose(), Matrix::Identity(b.rows(), b.cols()));
}

Matrix spin_embed(const Matrix& spin_block, Index bimodule_dim) {
    if (spin_block.rows() != 2 || spin_block.cols() != 2)
        throw std::invalid_argument("spin_embed: spin block must be 2x2");
    return kron(spin_block, Matrix::Identity(bimodule_dim, bimodule_dim));
}

Matrix pauli(int i, Index bimodule_dim) { return spin_embed(sigma(i), bimodule_dim); }

Matrix algebra_rep(const FuzzySphere& s, const Matrix& a) {
    if (a.rows() != s.dim() || a.cols() != s.dim())
        throw std::invalid_argument("algebra_rep: element dimension does not match the sphere");
    return kron(Matrix::Identity(2, 2), lift_left(a));
}

Matrix chirality_opposite(const FuzzySphere& s) {
    const Index ns = s.spinor_dim();
    Matrix g = Matrix::Zero(ns, ns);
    for (int i = 0; i < 3; ++i) g += kron(sigma(i), lift_right(s.x[i]));
    g -= s.alpha / 2.0 * Matrix::Identity(ns, ns);
    return g / normalization(s);
}

Matrix chirality_left(const FuzzySphere& s) {
    const Index ns = s.spinor_dim();
    Matrix g = Matrix::Zero(ns, ns);
    for (int i = 0; i < 3; ++i) g += kron(sigma(i), lift_left(s.x[i]));
    g += s.alpha / 2.0 * Matrix::Identity(ns, ns);
    return g / normalization(s);
}

Matrix dirac_essential_factor(const FuzzySphere& s) {
    const Index ns = s.spinor_dim();
    Matrix k = Matrix::Zero(ns, ns);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l)
                if (kEpsilon[i][j][l])
                    // lift_right(x_j) lift_left(x_l) = kron(x_j^T, x_l)
                    k += double(kEpsilon[i][j][l]) * kron(sigma(i), kron(s.x[j].transpose(), s.x[l]));
    return k;
}

Matrix dirac_operator(const FuzzySphere& s) {
    return Complex(0, 1) / (s.radius * s.alpha) * (chirality_opposite(s) * dirac_essential_factor(s));
}

Matrix dirac_operator_adjoint_form(const FuzzySphere& s) {
    return Complex(0, 1) / s.radius * (chirality_opposite(s) * chi_dot_j(s));
}

Matrix dirac_operator_cw96(const FuzzySphere& s) {
    return Complex(0, 1) / s.radius * (chirality_left(s) * chi_dot_j(s));
}

std::array<Matrix, 3> adjoint_momentum(const FuzzySphere& s) {
    const Matrix id2 = Matrix::Identity(2, 2);
    std::array<Matrix, 3> l;
    for (int i = 0; i < 3; ++i)
        l[i] = kron(id2, lift_left(s.generators[i]) - lift_right(s.generators[i]));
    return l;
}

std::array<Matrix, 3> total_momentum(const FuzzySphere& s) {
    auto j = adjoint_momentum(s);
    for (int i = 0; i < 3; ++i) j[i] += 0.5 * pauli(i, s.bimodule_dim());
    return j;
}

Matrix total_momentum_squared(const FuzzySphere& s) {
    const Index nb = s.bimodule_dim();
    std::array<Matrix, 3> lb;
    Matrix casimir = Matrix::Zero(nb, nb);
    for (int i = 0; i < 3; ++i) {
        lb[i] = lift_left(s.generators[i]) - lift_right(s.generators[i]);
        casimir += lb[i] * lb[i];
    }
    // J^2 = L^2 + sigma.L + 3/4
    Matrix j2 = kron(Matrix::Identity(2, 2), casimir + 0.75 * Matrix::Identity(nb, nb));
    for (int i = 0; i < 3; ++i) j2 += kron(sigma(i), lb[i]);
    return j2;
}

Complex hilbert_trace(const Matrix& a, const Matrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw std::invalid_argument("hilbert_trace: arguments must be square and of equal dimension");
    return 2.0 * a.trace() * b.trace();
}

double dirac_lambda_sq_formula(int cutoff, double j, double radius) {
    const double u = (j + 0.5) * (j + 0.5);
    return u * (1.0 + (1.0 - u) / (double(cutoff) * (cutoff + 2))) / (radius * radius);
}

namespace {

std::vector<double> to_std(const RealVector& v) { return {v.data(), v.data() + v.size()}; }

/// Half-integer j from a measured J^2 eigenvalue j(j+1).
double j_from_casimir(double value, const RealVector& raw) {
    const double j = (-1.0 + std::sqrt(1.0 + 4.0 * value)) / 2.0;
    const double snapped = std::round(2.0 * j) / 2.0;
    if (std::abs(j - snapped) > 1e-6)
        throw DegenerateSpectrum("dirac_spectrum: J^2 cluster at " + std::to_string(value) +
                                     " is not a half-integer multiplet",
                                 to_std(raw));
    return snapped;
}

}  // namespace

SpectrumReport dirac_spectrum(const FuzzySphere& s) { return dirac_spectrum(s, dirac_operator(s)); }

SpectrumReport dirac_spectrum(const FuzzySphere& s, const Matrix& dirac) {
    SpectrumReport report;
    report.cutoff = s.cutoff;
    report.radius = s.radius;

    const Eigensystem j2 = hermitian_eigensystem(total_momentum_squared(s));
    const auto sectors = cluster_eigenvalues(j2.values, 1e-8);

    std::vector<double> sector_values;  // lambda^2 replicated per state, for the cross-check
    sector_values.reserve(s.spinor_dim());

    Index offset = 0;
    for (const auto& sector : sectors) {
        SpectrumGroup group;
        group.j = j_from_casimir(sector.mean, j2.values);
        group.degeneracy = sector.count;

        const auto basis = j2.vectors.middleCols(offset, sector.count);
        offset += sector.count;

        // V† D^2 V = (D V)† (D V); must be a scalar block since [D^2, J^2] = 0.
        const Matrix dv = dirac * basis;
        const Matrix block = dv.adjoint() * dv;
        const double mean = block.diagonal().real().mean();
        const double scale = std::max(1.0, max_abs(block));
        if (max_abs(block - mean * Matrix::Identity(sector.count, sector.count)) > 1e-8 * scale)
            throw DegenerateSpectrum("dirac_spectrum: D^2 is not scalar on the j = " +
                                         std::to_string(group.j) + " sector",
                                     to_std(j2.values));

        group.lambda_sq_measured = mean;
        group.lambda_sq_formula = dirac_lambda_sq_formula(s.cutoff, group.j, s.radius);
        report.max_residual = std::max(report.max_residual,
                                       std::abs(group.lambda_sq_measured - group.lambda_sq_formula));
        sector_values.insert(sector_values.end(), sector.count, mean);
        report.groups.push_back(group);
    }

    // Cross-check against the raw D eigenvalues squared.
    RealVector d_values = hermitian_eigenvalues(dirac);
    std::vector<double> raw_sq(d_values.size());
    for (Index i = 0; i < d_values.size(); ++i) raw_sq[i] = d_values(i) * d_values(i);
    std::sort(raw_sq.begin(), raw_sq.end());
    std::sort(sector_values.begin(), sector_values.end());
    const double tol = 1e-8 * std::max(1.0, std::abs(raw_sq.back()));
    for (std::size_t i = 0; i < raw_sq.size(); ++i)
        if (std::abs(raw_sq[i] - sector_values[i]) > tol)
            throw DegenerateSpectrum("dirac_spectrum: sector eigenvalues disagree with the raw D^2 multiset",
                                     to_std(d_values));

    std::sort(report.groups.begin(), report.groups.end(),
              [](const SpectrumGroup& a, const SpectrumGroup& b) { return a.j < b.j; });
    return report;
}

double chirality_index(const Matrix& chirality) { return chirality.trace().real(); }

Matrix zeromode_projector(const FuzzySphere& s) {
    const double jmax = s.cutoff + 0.5;
    const double target = jmax * (jmax + 1);
    const Eigensystem j2 = hermitian_eigensystem(total_momentum_squared(s));

    Index begin = -1, count = 0;
    for (Index i = 0; i < j2.values.size(); ++i) {
        if (std::abs(j2.values(i) - target) < 1e-6) {
            if (begin < 0) begin = i;
            ++count;
        }
    }
    if (count != 2 * s.cutoff + 2)
        throw InternalConsistency("zeromode_projector: j = N + 1/2 eigenspace has dimension " +
                                  std::to_string(count) + ", expected " + std::to_string(2 * s.cutoff + 2));
    const auto basis = j2.vectors.middleCols(begin, count);
    return basis * basis.adjoint();
}

}  // namespace fsph
