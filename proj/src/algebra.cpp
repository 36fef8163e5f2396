#include "fuzzysphere/algebra.hpp"

#include <cmath>
#include <numbers>

namespace fsph {

std::array<Matrix, 3> su2_generators(int cutoff) {
    if (cutoff < 1)
        throw std::invalid_argument("su2_generators: cutoff N must be >= 1 (alpha is singular at N = 0)");
    const int dim = cutoff + 1;
    const double j = cutoff / 2.0;

    Matrix lp = Matrix::Zero(dim, dim);
    Matrix l3 = Matrix::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) {
        const double m = j - k;
        l3(k, k) = m;
        if (k >= 1) lp(k - 1, k) = std::sqrt(j * (j + 1) - m * (m + 1));  // raises |j,m> to |j,m+1>
    }
    Matrix lm = lp.adjoint();
    return {(lp + lm) / 2.0, (lp - lm) / Complex(0, 2), l3};
}

FuzzySphere fuzzy_sphere(int cutoff, double radius) {
    if (radius <= 0.0) throw std::invalid_argument("fuzzy_sphere: radius must be positive");
    FuzzySphere s;
    s.cutoff = cutoff;
    s.radius = radius;
    s.generators = su2_generators(cutoff);
    s.alpha = 2.0 * radius / std::sqrt(double(cutoff) * (cutoff + 2));
    for (int i = 0; i < 3; ++i) s.x[i] = s.alpha * s.generators[i];
    return s;
}

double AdjointEigenbasis::inner(const Matrix& a, const Matrix& b) {
    return ((a.adjoint() * b).trace() / double(a.rows())).real();
}

const AdjointMode& AdjointEigenbasis::mode(int l, int m) const {
    for (const auto& mode : modes)
        if (mode.l == l && mode.m == m) return mode;
    throw std::invalid_argument("AdjointEigenbasis::mode: no mode with l=" + std::to_string(l) +
                                " m=" + std::to_string(m));
}

AdjointEigenbasis adjoint_eigenbasis(const FuzzySphere& s) {
    const int dim = s.dim();
    const Matrix lp = s.generators[0] + Complex(0, 1) * s.generators[1];
    const Matrix lm = lp.adjoint();

    // Simultaneous diagonalization on the flattened bimodule space: the
    // adjoint Casimir fixes l (gaps >= 2), adjoint L3 projected into each
    // l-sector fixes m (gaps 1). This stays accurate at large N where a pure
    // ladder recursion loses digits to cancellation.
    const Matrix id = Matrix::Identity(dim, dim);
    std::array<Matrix, 3> ad;
    Matrix casimir = Matrix::Zero(dim * dim, dim * dim);
    for (int i = 0; i < 3; ++i) {
        ad[i] = kron(id, s.generators[i]) - kron(s.generators[i].transpose(), id);
        casimir += ad[i] * ad[i];
    }
    const Eigensystem cas = hermitian_eigensystem(casimir);

    auto inner_flat = [dim](const Matrix& a, const Matrix& b) -> Complex {
        return (a.adjoint() * b).trace() / double(dim);
    };

    AdjointEigenbasis basis;
    basis.cutoff = s.cutoff;
    basis.modes.resize(dim * dim);

    Index offset = 0;
    Matrix highest = id;  // (L_+)^l, exact band matrix, sets the top phase
    for (int l = 0; l <= s.cutoff; ++l) {
        const int width = 2 * l + 1;
        for (Index i = offset; i < offset + width; ++i)
            if (std::abs(cas.values(i) - double(l * (l + 1))) > 1e-6)
                throw std::runtime_error("adjoint_eigenbasis: Casimir sector at l=" + std::to_string(l) +
                                         " has unexpected eigenvalues");
        const auto sector = cas.vectors.middleCols(offset, width);
        offset += width;

        const Matrix block = sector.adjoint() * ((ad[2] * sector).eval());
        const Eigensystem lz = hermitian_eigensystem(block);  // m ascending
        const Matrix states = sector * lz.vectors;

        for (int k = 0; k < width; ++k) {
            const int m = l - k;  // descending m
            const Index col = width - 1 - k;
            if (std::abs(lz.values(col) - m) > 1e-6)
                throw std::runtime_error("adjoint_eigenbasis: L3 eigenvalue mismatch at l=" +
                                         std::to_string(l));
            // sqrt(dim): unit flattened 2-norm -> unit Tr(Y†Y)/dim norm.
            basis.modes[std::size_t(l) * l + k] = {l, m,
                                                   std::sqrt(double(dim)) *
                                                       unflatten(states.col(col), dim, dim)};
        }

        // Condon-Shortley-style phases: the top state has positive overlap
        // with (L_+)^l, and each adjoint lowering matrix element is positive.
        AdjointMode* modes = &basis.modes[std::size_t(l) * l];
        Complex overlap = inner_flat(modes[0].y, highest);
        if (std::abs(overlap) < 1e-8)
            throw std::runtime_error("adjoint_eigenbasis: lost the highest-weight direction");
        modes[0].y *= overlap / std::abs(overlap);
        for (int k = 1; k < width; ++k) {
            const Matrix lowered = lm * modes[k - 1].y - modes[k - 1].y * lm;
            overlap = inner_flat(modes[k].y, lowered);
            if (std::abs(overlap) < 1e-8)
                throw std::runtime_error("adjoint_eigenbasis: lowering chain broke at l=" +
                                         std::to_string(l));
            modes[k].y *= overlap / std::abs(overlap);
        }
        if (l < s.cutoff) highest = lp * highest;
    }
    return basis;
}

ClockShiftPair clock_shift(int cutoff) {
    if (cutoff < 1) throw std::invalid_argument("clock_shift: cutoff N must be >= 1");
    const int dim = cutoff + 1;
    const double step = 2.0 * std::numbers::pi / dim;

    ClockShiftPair pair;
    pair.q = std::polar(1.0, step);
    pair.clock = Matrix::Zero(dim, dim);
    pair.shift = Matrix::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) {
        pair.clock(k, k) = std::polar(1.0, step * k);
        pair.shift((k + 1) % dim, k) = 1.0;
    }
    return pair;
}

}  // namespace fsph
