#include "fuzzysphere/forms.hpp"

#include <cmath>
#include <lapacke.h>

namespace fsph {

namespace {

void check_term(const FuzzySphere& s, const UniversalForm& w) {
    for (const auto& term : w.terms) {
        if (static_cast<int>(term.factors.size()) != w.degree + 1)
            throw std::invalid_argument("UniversalForm: a degree-p term needs p+1 factors");
        for (const auto& f : term.factors)
            if (f.rows() != s.dim() || f.cols() != s.dim())
                throw std::invalid_argument("UniversalForm: factor dimension does not match the sphere");
    }
}

}  // namespace

RepresentedForm exterior_derivative(const FuzzySphere& s, const Matrix& a, const Matrix& dirac) {
    return {1, commutator(dirac, algebra_rep(s, a))};
}

RepresentedForm exterior_derivative(const FuzzySphere& s, const Matrix& a) {
    return exterior_derivative(s, a, dirac_operator(s));
}

RepresentedForm represent(const FuzzySphere& s, const UniversalForm& w, const Matrix& dirac) {
    check_term(s, w);
    const Index ns = s.spinor_dim();
    Matrix sum = Matrix::Zero(ns, ns);
    for (const auto& term : w.terms) {
        Matrix prod = algebra_rep(s, term.factors[0]);
        for (std::size_t i = 1; i < term.factors.size(); ++i)
            prod = prod * commutator(dirac, algebra_rep(s, term.factors[i]));
        sum += term.weight * prod;
    }
    return {w.degree, std::move(sum)};
}

RepresentedForm represent(const FuzzySphere& s, const UniversalForm& w) {
    return represent(s, w, dirac_operator(s));
}

UniversalForm derive(const UniversalForm& w) {
    UniversalForm out;
    out.degree = w.degree + 1;
    out.terms = w.terms;
    for (auto& term : out.terms) {
        const Index n = term.factors.front().rows();
        term.factors.insert(term.factors.begin(), Matrix::Identity(n, n));
    }
    return out;
}

namespace {

/// Singular values via LAPACK zgesdd (values only); input consumed.
int numerical_rank(Matrix m, double rel_threshold) {
    if (m.size() == 0) return 0;
    const lapack_int rows = static_cast<lapack_int>(m.rows());
    const lapack_int cols = static_cast<lapack_int>(m.cols());
    RealVector sv(std::min(rows, cols));
    lapack_int info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'N', rows, cols,
                                     reinterpret_cast<lapack_complex_double*>(m.data()), rows,
                                     sv.data(), nullptr, rows, nullptr, cols);
    if (info != 0) throw std::runtime_error("numerical_rank: zgesdd failed with info " + std::to_string(info));
    if (sv.size() == 0 || sv(0) <= 0.0) return 0;
    int rank = 0;
    for (Index i = 0; i < sv.size(); ++i)
        if (sv(i) > rel_threshold * sv(0)) ++rank;
    return rank;
}

struct SampledSpans {
    Matrix pi;      // columns: flatten(pi(w_t)), jointly normalized with pi_d
    Matrix pi_d;    // columns: flatten(pi(dw_t))
};

/// Sample `count` tuples of `arity` basis indices and evaluate pi and pi∘d.
/// dx[b] caches [D, pi(e_b)] per basis element.
SampledSpans sample_spans(const FuzzySphere& s, const std::vector<Matrix>& rep,
                          const std::vector<Matrix>& dx, int arity, int count,
                          std::uint64_t seed) {
    const Index ns = s.spinor_dim();
    const int basis_count = static_cast<int>(rep.size());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, basis_count - 1);

    SampledSpans spans;
    spans.pi.resize(ns * ns, count);
    spans.pi_d.resize(ns * ns, count);
    std::vector<int> tuple(arity);
    for (int t = 0; t < count; ++t) {
        for (int& idx : tuple) idx = pick(rng);
        Matrix head = rep[tuple[0]];
        for (int i = 1; i < arity; ++i) head = head * dx[tuple[i]];
        Matrix d_form = dx[tuple[0]];
        for (int i = 1; i < arity; ++i) d_form = d_form * dx[tuple[i]];
        // Joint column normalization keeps the kernel relation between the
        // two spans intact while avoiding scale-dominated rank loss.
        const double norm = std::sqrt(head.squaredNorm() + d_form.squaredNorm());
        const double scale = norm > 0.0 ? 1.0 / norm : 0.0;
        spans.pi.col(t) = flatten(head) * scale;
        spans.pi_d.col(t) = flatten(d_form) * scale;
    }
    return spans;
}

JunkRanks probe_once(const FuzzySphere& s, int degree, int samples, std::uint64_t seed,
                     const std::vector<Matrix>& rep, const std::vector<Matrix>& dx) {
    constexpr double kThreshold = 1e-9;
    JunkRanks out;

    SampledSpans forms = sample_spans(s, rep, dx, degree + 1, samples, seed);
    out.dim_pi = numerical_rank(std::move(forms.pi), kThreshold);

    if (degree == 0) {
        out.dim_junk = 0;  // there are no (-1)-forms
    } else {
        // dim pi(d ker pi) = rank [pi; pi d] - rank [pi] on sampled (p-1)-forms.
        SampledSpans lower = sample_spans(s, rep, dx, degree, samples, seed + 0x9e3779b97f4a7c15ull);
        Matrix stacked(lower.pi.rows() + lower.pi_d.rows(), lower.pi.cols());
        stacked << lower.pi, lower.pi_d;
        const int rank_pi = numerical_rank(std::move(lower.pi), kThreshold);
        const int rank_stacked = numerical_rank(std::move(stacked), kThreshold);
        out.dim_junk = rank_stacked - rank_pi;
    }
    out.dim_omega = out.dim_pi - out.dim_junk;
    return out;
}

}  // namespace

JunkRanks junk_quotient_rank(const FuzzySphere& s, int degree, int samples, std::uint64_t seed) {
    if (s.cutoff > 3)
        throw std::invalid_argument("junk_quotient_rank: probe is limited to N <= 3");
    if (degree < 0 || degree > 2)
        throw std::invalid_argument("junk_quotient_rank: degree must be 0, 1 or 2");
    double tuple_space = std::pow(double(s.dim()), 2.0 * (degree + 1));
    if (samples < tuple_space)
        throw std::invalid_argument("junk_quotient_rank: samples must be >= dim A^(p+1) = " +
                                    std::to_string(static_cast<long>(tuple_space)));

    // Fixed basis: matrix units E_ij in row-major order.
    const int n = s.dim();
    std::vector<Matrix> rep, dx;
    rep.reserve(n * n);
    dx.reserve(n * n);
    const Matrix dirac = dirac_operator(s);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix e = Matrix::Zero(n, n);
            e(i, j) = 1.0;
            rep.push_back(algebra_rep(s, e));
            dx.push_back(commutator(dirac, rep.back()));
        }

    std::vector<std::array<int, 3>> per_seed;
    for (std::uint64_t k = 0; k < 3; ++k) {
        JunkRanks r = probe_once(s, degree, samples, seed + k, rep, dx);
        per_seed.push_back({r.dim_pi, r.dim_junk, r.dim_omega});
    }
    if (per_seed[0] != per_seed[1] || per_seed[0] != per_seed[2])
        throw UnstableRank("junk_quotient_rank: ranks are not stable across seeds", per_seed);
    return {per_seed[0][0], per_seed[0][1], per_seed[0][2]};
}

}  // namespace fsph
