// fuzzysph: batch CLI for the fuzzy-sphere spectral triple.
//
// Subcommands construct the triple at a cutoff N, verify operator identities,
// compute spectra and actions, probe the differential calculus, and sweep a
// cutoff range; reports are serialized as CSV or JSON with a stable schema.

#include <CLI11.hpp>

#include "fuzzysphere/algebra.hpp"
#include "fuzzysphere/forms.hpp"
#include "fuzzysphere/report.hpp"
#include "fuzzysphere/scalar_field.hpp"
#include "fuzzysphere/triple.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

namespace {

using namespace fsph;

struct Options {
    int n = 1;
    int n_min = 1;
    int n_max = 1;
    double ell = 1.0;
    std::uint64_t seed = 0;
    int samples = 0;  // 0 = auto
    std::string format = "json";
    std::string output = "-";
};

/// Collects tolerance checks; the first failure names the exit diagnostic.
struct Checks {
    std::string first_failure;
    bool ok = true;

    void require(const std::string& name, double residual, double tolerance) {
        if (!(residual <= tolerance)) {
            if (ok) first_failure = name + " (residual " + format_double(residual) +
                                    ", tolerance " + format_double(tolerance) + ")";
            ok = false;
        }
    }
};

void emit(const Report& report, const Options& opt) {
    const std::string text = opt.format == "csv" ? to_csv(report) : to_json(report);
    if (opt.output == "-") {
        std::cout << text;
    } else {
        std::ofstream out(opt.output, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file " + opt.output);
        out << text;
    }
}

Report make_report(const std::string& command, const Options& opt) {
    Report r;
    r.command = command;
    r.n_label = std::to_string(opt.n);
    r.ell = opt.ell;
    r.seed = opt.seed;
    return r;
}

double rel_residual(const Matrix& m, const Matrix& reference) {
    return max_abs(m) / rel_scale(reference);
}

// --- spectrum ---------------------------------------------------------------

void spectrum_rows(Report& report, Checks& checks, const FuzzySphere& s, const SpectrumReport& sr,
                   bool with_cutoff_column = false, double bound_norm = 0.0) {
    for (const auto& g : sr.groups) {
        Row row;
        if (with_cutoff_column) row.add("n", std::int64_t(s.cutoff));
        row.add("j", half_integer(g.j))
            .add("lambda_sq_measured", g.lambda_sq_measured)
            .add("lambda_sq_formula", g.lambda_sq_formula)
            .add("degeneracy", std::int64_t(g.degeneracy))
            .add("residual", std::abs(g.lambda_sq_measured - g.lambda_sq_formula));
        if (with_cutoff_column) row.add("commutator_norm", bound_norm);
        report.rows.push_back(std::move(row));

        const double tol = 1e-10 * std::max(1.0, std::abs(g.lambda_sq_formula));
        checks.require("spectrum_residual_j_" + format_double(g.j),
                       std::abs(g.lambda_sq_measured - g.lambda_sq_formula), tol);
        const int expected = g.j < s.cutoff + 0.499 ? int(2 * (2 * g.j + 1)) : 2 * s.cutoff + 2;
        checks.require("spectrum_degeneracy_j_" + format_double(g.j),
                       std::abs(g.degeneracy - expected), 0.0);
    }
    int total = 0;
    for (const auto& g : sr.groups) total += g.degeneracy;
    checks.require("spectrum_total_degeneracy", std::abs(total - s.spinor_dim()), 0.0);
}

int run_spectrum(const Options& opt) {
    Report report = make_report("spectrum", opt);
    Checks checks;
    const FuzzySphere s = fuzzy_sphere(opt.n, opt.ell);
    spectrum_rows(report, checks, s, dirac_spectrum(s));
    emit(report, opt);
    if (!checks.ok) std::cerr << "fuzzysph spectrum: failed check " << checks.first_failure << "\n";
    return checks.ok ? 0 : 1;
}

// --- index ------------------------------------------------------------------

int run_index(const Options& opt) {
    Report report = make_report("index", opt);
    Checks checks;
    const FuzzySphere s = fuzzy_sphere(opt.n, opt.ell);
    const Matrix g_left = chirality_left(s);
    const Matrix g_opp = chirality_opposite(s);
    const Matrix p = zeromode_projector(s);

    const double index_left = chirality_index(g_left);
    const double index_opp = chirality_index(g_opp);
    const double rank = std::round(p.trace().real());
    const double zero_chi = (g_opp * p).trace().real();

    report.rows.push_back(Row{}
                              .add("index_chirality_left", index_left)
                              .add("index_chirality_opposite", index_opp)
                              .add("zeromode_rank", std::int64_t(rank))
                              .add("zeromode_chirality_trace", zero_chi));

    const double expected = 2.0 * (s.cutoff + 1);
    checks.require("index_chirality_left", std::abs(index_left - expected), 1e-10);
    checks.require("index_chirality_opposite", std::abs(index_opp + expected), 1e-10);
    checks.require("zeromode_rank", std::abs(rank - expected), 0.0);
    checks.require("index_matches_zeromode_count", std::abs(std::abs(index_opp) - rank), 1e-10);
    emit(report, opt);
    if (!checks.ok) std::cerr << "fuzzysph index: failed check " << checks.first_failure << "\n";
    return checks.ok ? 0 : 1;
}

// --- action -----------------------------------------------------------------

void action_rows(Report& report, Checks& checks, const FuzzySphere& s, const std::string& label,
                 const ScalarField& field, const Matrix& dirac, const AdjointEigenbasis& basis) {
    const ActionReport a = scalar_action(s, field, dirac, basis);
    report.rows.push_back(Row{}
                              .add("field", label)
                              .add("s_spectral", a.s_spectral)
                              .add("s_closed", a.s_closed)
                              .add("discrepancy", a.discrepancy)
                              .add("mode_sum", a.mode_sum));
    checks.require("action_dual_route_" + label, a.discrepancy,
                   1e-12 * std::max(1.0, std::abs(a.s_closed)));
    checks.require("action_mode_sum_" + label, std::abs(a.s_closed - a.mode_sum),
                   1e-10 * std::max(1.0, std::abs(a.s_closed)));
}

int run_action(const Options& opt) {
    Report report = make_report("action", opt);
    Checks checks;
    const FuzzySphere s = fuzzy_sphere(opt.n, opt.ell);
    const Matrix dirac = dirac_operator(s);
    const AdjointEigenbasis basis = adjoint_eigenbasis(s);

    std::mt19937_64 rng(opt.seed);
    action_rows(report, checks, s, "random", make_field(s, random_gaussian_field(s.dim(), rng)),
                dirac, basis);
    action_rows(report, checks, s, "x3_reference", make_field(s, s.x[2]), dirac, basis);

    const double reference = 4.0 * opt.ell * opt.ell / 9.0;
    checks.require("action_x3_value",
                   std::abs(std::get<double>(report.rows.back().cells[2].second) - reference),
                   1e-12 * std::max(1.0, reference));
    emit(report, opt);
    if (!checks.ok) std::cerr << "fuzzysph action: failed check " << checks.first_failure << "\n";
    return checks.ok ? 0 : 1;
}

// --- laplacian ----------------------------------------------------------------

int run_laplacian(const Options& opt) {
    Report report = make_report("laplacian", opt);
    Checks checks;
    const FuzzySphere s = fuzzy_sphere(opt.n, opt.ell);
    const auto levels = laplacian_spectrum(s);
    checks.require("laplacian_level_count", std::abs(int(levels.size()) - (s.cutoff + 1)), 0.0);
    int total = 0;
    for (std::size_t k = 0; k < levels.size(); ++k) {
        const auto& level = levels[k];
        const auto l = std::int64_t(std::llround((-1.0 + std::sqrt(1.0 + 4.0 * level.eigenvalue)) / 2.0));
        report.rows.push_back(Row{}
                                  .add("l", l)
                                  .add("eigenvalue", level.eigenvalue)
                                  .add("multiplicity", std::int64_t(level.multiplicity)));
        checks.require("laplacian_integer_l_" + std::to_string(l),
                       std::abs(level.eigenvalue - double(l * (l + 1))), 1e-9);
        checks.require("laplacian_multiplicity_l_" + std::to_string(l),
                       std::abs(level.multiplicity - (2 * l + 1)), 0.0);
        total += level.multiplicity;
    }
    checks.require("laplacian_total_multiplicity", std::abs(total - s.bimodule_dim()), 0.0);
    emit(report, opt);
    if (!checks.ok) std::cerr << "fuzzysph laplacian: failed check " << checks.first_failure << "\n";
    return checks.ok ? 0 : 1;
}

// --- forms --------------------------------------------------------------------

int run_forms(const Options& opt) {
    Report report = make_report("forms", opt);
    Checks checks;
    const FuzzySphere s = fuzzy_sphere(opt.n, opt.ell);
    const int dim2 = s.dim() * s.dim();
    for (int p = 0; p <= 2; ++p) {
        const int needed = int(std::pow(double(s.dim()), 2.0 * (p + 1)));
        const int samples = opt.samples > 0 ? opt.samples : std::max(512, 2 * needed);
        const JunkRanks ranks = junk_quotient_rank(s, p, samples, opt.seed);
        report.rows.push_back(Row{}
                                  .add("degree", std::int64_t(p))
                                  .add("samples", std::int64_t(samples))
                                  .add("dim_pi", std::int64_t(ranks.dim_pi))
                                  .add("dim_junk", std::int64_t(ranks.dim_junk))
                                  .add("dim_omega", std::int64_t(ranks.dim_omega)));
        if (p == 0) {
            checks.require("forms_pi_faithful", std::abs(ranks.dim_pi - dim2), 0.0);
            checks.require("forms_no_junk_at_zero", std::abs(ranks.dim_junk), 0.0);
        }
    }
    emit(report, opt);
    if (!checks.ok) std::cerr << "fuzzysph forms: failed check " << checks.first_failure << "\n";
    return checks.ok ? 0 : 1;
}

// --- torus ----------------------------------------------------------------------

int run_torus(const Options& opt) {
    Report report = make_report("torus", opt);
    Checks checks;
    const ClockShiftPair cs = clock_shift(opt.n);
    const int dim = opt.n + 1;
    const Matrix id = Matrix::Identity(dim, dim);

    const double relation = max_abs(cs.clock * cs.shift - cs.q * (cs.shift * cs.clock));
    const double clock_unitary = max_abs(cs.clock * cs.clock.adjoint() - id);
    const double shift_unitary = max_abs(cs.shift * cs.shift.adjoint() - id);
    Matrix sp = id, tp = id;
    for (int k = 0; k < dim; ++k) {
        sp = sp * cs.clock;
        tp = tp * cs.shift;
    }
    const double clock_period = max_abs(sp - id);
    const double shift_period = max_abs(tp - id);

    report.rows.push_back(Row{}
                              .add("n", std::int64_t(opt.n))
                              .add("q_re", cs.q.real())
                              .add("q_im", cs.q.imag())
                              .add("relation_residual", relation)
                              .add("clock_unitarity", clock_unitary)
                              .add("shift_unitarity", shift_unitary)
                              .add("clock_periodicity", clock_period)
                              .add("shift_periodicity", shift_period));
    checks.require("torus_relation", relation, 1e-13);
    checks.require("torus_clock_unitarity", clock_unitary, 1e-13);
    checks.require("torus_shift_unitarity", shift_unitary, 1e-13);
    checks.require("torus_clock_periodicity", clock_period, 1e-12);
    checks.require("torus_shift_periodicity", shift_period, 1e-12);
    emit(report, opt);
    if (!checks.ok) std::cerr << "fuzzysph torus: failed check " << checks.first_failure << "\n";
    return checks.ok ? 0 : 1;
}

// --- sweep ----------------------------------------------------------------------

int run_sweep(const Options& opt) {
    Report report = make_report("sweep", opt);
    report.n_label = std::to_string(opt.n_min) + ".." + std::to_string(opt.n_max);
    report.n_is_integer = false;
    Checks checks;
    for (int n = opt.n_min; n <= opt.n_max; ++n) {
        const FuzzySphere s = fuzzy_sphere(n, opt.ell);
        const Matrix dirac = dirac_operator(s);
        const SpectrumReport sr = dirac_spectrum(s, dirac);
        const Matrix comm = commutator(dirac, algebra_rep(s, s.x[2]));
        const double bound = hermitian_spectral_norm(Complex(0, 1) * comm) / opt.ell;
        spectrum_rows(report, checks, s, sr, true, bound);
    }
    emit(report, opt);
    if (!checks.ok) std::cerr << "fuzzysph sweep: failed check " << checks.first_failure << "\n";
    return checks.ok ? 0 : 1;
}

// --- verify ---------------------------------------------------------------------

int run_verify(const Options& opt) {
    Report report = make_report("verify", opt);
    Checks checks;
    auto check = [&](const std::string& name, double residual, double tolerance) {
        report.rows.push_back(Row{}
                                  .add("check", name)
                                  .add("residual", residual)
                                  .add("tolerance", tolerance)
                                  .add("pass", residual <= tolerance));
        checks.require(name, residual, tolerance);
    };

    const FuzzySphere s = fuzzy_sphere(opt.n, opt.ell);
    const int n = s.dim();
    const double ell = s.radius;
    std::mt19937_64 rng(opt.seed);

    // Algebra axioms.
    {
        double worst = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Matrix expect = Matrix::Zero(n, n);
                for (int k = 0; k < 3; ++k) {
                    const int eps = (i == 0 && j == 1 && k == 2)   ? 1
                                    : (i == 1 && j == 2 && k == 0) ? 1
                                    : (i == 2 && j == 0 && k == 1) ? 1
                                    : (i == 1 && j == 0 && k == 2) ? -1
                                    : (i == 2 && j == 1 && k == 0) ? -1
                                    : (i == 0 && j == 2 && k == 1) ? -1
                                                                   : 0;
                    if (eps) expect += double(eps) * Complex(0, 1) * s.alpha * s.x[k];
                }
                worst = std::max(worst, max_abs(commutator(s.x[i], s.x[j]) - expect));
            }
        check("algebra_commutation", worst, 1e-12 * ell);

        Matrix sq = Matrix::Zero(n, n);
        for (int i = 0; i < 3; ++i) sq += s.x[i] * s.x[i];
        check("algebra_radius_constraint", max_abs(sq - ell * ell * Matrix::Identity(n, n)),
              1e-12 * ell * ell);

        Matrix casimir = Matrix::Zero(n, n);
        for (int i = 0; i < 3; ++i) casimir += s.generators[i] * s.generators[i];
        const double jj = s.cutoff / 2.0 * (s.cutoff / 2.0 + 1);
        check("generator_casimir", max_abs(casimir - jj * Matrix::Identity(n, n)),
              1e-12 * std::max(1.0, jj));
    }

    // Chirality operators.
    const Matrix g_opp = chirality_opposite(s);
    const Matrix g_left = chirality_left(s);
    const Matrix id_s = Matrix::Identity(s.spinor_dim(), s.spinor_dim());
    check("chirality_opposite_square", max_abs(g_opp * g_opp - id_s), 1e-12);
    check("chirality_left_square", max_abs(g_left * g_left - id_s), 1e-12);
    check("chirality_opposite_trace", std::abs(g_opp.trace().real() + 2.0 * (s.cutoff + 1)), 1e-10);
    check("chirality_left_trace", std::abs(g_left.trace().real() - 2.0 * (s.cutoff + 1)), 1e-10);
    {
        double worst = 0.0;
        for (int t = 0; t < 20; ++t) {
            Matrix a = random_gaussian(n, n, rng);
            a /= std::sqrt(a.squaredNorm());
            worst = std::max(worst, max_abs(commutator(g_opp, algebra_rep(s, a))));
        }
        check("chirality_commutes_with_algebra", worst, 1e-12);
    }

    // Dirac operator identities.
    const Matrix dirac = dirac_operator(s);
    const Matrix essential = dirac_essential_factor(s);
    check("dirac_selfadjoint", rel_residual(dirac - dirac.adjoint(), dirac), 1e-12);
    check("dirac_anticommutes_chirality_opposite",
          rel_residual(anticommutator(dirac, g_opp), dirac), 1e-12);
    check("dirac_form_equality", rel_residual(dirac - dirac_operator_adjoint_form(s), dirac), 1e-12);
    check("essential_factor_anticommutes_opposite",
          rel_residual(anticommutator(essential, g_opp), essential), 1e-12);
    check("essential_factor_anticommutes_left",
          rel_residual(anticommutator(essential, g_left), essential), 1e-12);

    const Matrix cw96 = dirac_operator_cw96(s);
    check("cw96_selfadjoint", rel_residual(cw96 - cw96.adjoint(), cw96), 1e-12);
    check("cw96_anticommutes_chirality_left", rel_residual(anticommutator(cw96, g_left), cw96), 1e-12);
    check("cw96_square_equals_dirac_square",
          rel_residual(cw96 * cw96 - dirac * dirac, dirac * dirac), 1e-12);

    // Spectrum.
    const SpectrumReport sr = dirac_spectrum(s, dirac);
    check("dirac_spectrum_residual", sr.max_residual, 1e-10);
    {
        int mismatches = 0;
        for (const auto& g : sr.groups) {
            const int expected = g.j < s.cutoff + 0.499 ? int(2 * (2 * g.j + 1)) : 2 * s.cutoff + 2;
            if (g.degeneracy != expected) ++mismatches;
        }
        check("dirac_spectrum_degeneracies", mismatches, 0.0);
    }

    // Zeromodes and index.
    const Matrix proj = zeromode_projector(s);
    check("zeromode_rank", std::abs(proj.trace().real() - (2.0 * s.cutoff + 2)), 1e-10);
    check("zeromode_projector_idempotent", max_abs(proj * proj - proj), 1e-12);
    check("zeromode_projector_hermitian", max_abs(proj - proj.adjoint()), 1e-12);
    check("zeromode_annihilation", max_abs(dirac * proj) / rel_scale(dirac), 1e-10);
    check("index_counts_zeromodes",
          std::abs(std::abs(chirality_index(g_opp)) - proj.trace().real()), 1e-10);

    // Hilbert-space trace formula.
    {
        double worst = 0.0;
        for (int t = 0; t < 50; ++t) {
            const Matrix a = random_gaussian(n, n, rng);
            const Matrix b = random_gaussian(n, n, rng);
            const Complex formula = hilbert_trace(a, b);
            const Complex direct = 2.0 * kron(b.transpose(), a).trace();
            worst = std::max(worst, std::abs(formula - direct) / std::max(1.0, std::abs(formula)));
        }
        check("hilbert_trace_formula", worst, 1e-12);
    }

    // Scalar action.
    const AdjointEigenbasis basis = adjoint_eigenbasis(s);
    {
        const ActionReport a =
            scalar_action(s, make_field(s, random_gaussian_field(n, rng)), dirac, basis);
        check("action_dual_route", a.discrepancy, 1e-12 * std::max(1.0, std::abs(a.s_closed)));
        check("action_mode_sum", std::abs(a.s_closed - a.mode_sum),
              1e-10 * std::max(1.0, std::abs(a.s_closed)));
        const ActionReport x3 = scalar_action(s, make_field(s, s.x[2]), dirac, basis);
        check("action_x3_reference", std::abs(x3.s_closed - 4.0 * ell * ell / 9.0),
              1e-12 * std::max(1.0, 4.0 * ell * ell / 9.0));
    }

    // Laplacian truncation.
    {
        const auto levels = laplacian_spectrum(s);
        double worst = 0.0;
        int mismatches = int(levels.size()) != s.cutoff + 1;
        for (std::size_t l = 0; l < levels.size(); ++l) {
            worst = std::max(worst, std::abs(levels[l].eigenvalue - double(l * (l + 1))));
            if (levels[l].multiplicity != int(2 * l + 1)) ++mismatches;
        }
        check("laplacian_integer_levels", worst, 1e-9);
        check("laplacian_multiplicities", mismatches, 0.0);
    }

    // Adjoint eigenbasis.
    {
        double gram = 0.0;
        const auto& modes = basis.modes;
        for (std::size_t a = 0; a < modes.size(); ++a)
            for (std::size_t b = 0; b < modes.size(); ++b) {
                const Complex inner = (modes[a].y.adjoint() * modes[b].y).trace() / double(n);
                gram = std::max(gram, std::abs(inner - (a == b ? 1.0 : 0.0)));
            }
        check("adjoint_basis_gram", gram, 1e-10);

        double casimir_dev = 0.0;
        for (const auto& mode : modes) {
            Matrix ad = Matrix::Zero(n, n);
            for (int i = 0; i < 3; ++i)
                ad += commutator(s.x[i], commutator(s.x[i], mode.y)) / (s.alpha * s.alpha);
            casimir_dev = std::max(casimir_dev, max_abs(ad - double(mode.l * (mode.l + 1)) * mode.y));
        }
        check("adjoint_basis_casimir", casimir_dev, 1e-10);

        const Matrix probe = random_gaussian(n, n, rng);
        Matrix rebuilt = Matrix::Zero(n, n);
        for (const auto& mode : modes)
            rebuilt += (mode.y.adjoint() * probe).trace() / double(n) * mode.y;
        check("adjoint_basis_completeness", max_abs(rebuilt - probe), 1e-10);
    }

    // Differential calculus identities.
    {
        const Matrix a = random_gaussian(n, n, rng);
        const Matrix b = random_gaussian(n, n, rng);
        const Matrix da = exterior_derivative(s, a, dirac).matrix;
        const Matrix db = exterior_derivative(s, b, dirac).matrix;
        const Matrix dab = exterior_derivative(s, a * b, dirac).matrix;
        const double scale = std::max(1.0, max_abs(da) * max_abs(db));
        check("calculus_leibniz",
              max_abs(dab - da * algebra_rep(s, b) - algebra_rep(s, a) * db) / scale, 1e-12);
        check("calculus_star_relation",
              max_abs(da.adjoint() + exterior_derivative(s, Matrix(a.adjoint()), dirac).matrix) /
                  std::max(1.0, max_abs(da)),
              1e-12);
        const Matrix w1 = algebra_rep(s, a) * db;
        const Matrix w2 = algebra_rep(s, a) * db * da;
        check("calculus_grading_degree_1", max_abs(g_opp * w1 * g_opp + w1) / rel_scale(w1), 1e-12);
        check("calculus_grading_degree_2", max_abs(g_opp * w2 * g_opp - w2) / rel_scale(w2), 1e-12);
        check("calculus_d_of_unit", max_abs(exterior_derivative(s, Matrix::Identity(n, n), dirac).matrix),
              1e-12);
    }

    // Fuzzy torus relation.
    {
        const ClockShiftPair cs = clock_shift(s.cutoff);
        check("torus_clock_shift_relation",
              max_abs(cs.clock * cs.shift - cs.q * (cs.shift * cs.clock)), 1e-13);
    }

    emit(report, opt);
    if (!checks.ok) std::cerr << "fuzzysph verify: failed check " << checks.first_failure << "\n";
    return checks.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fuzzy-sphere spectral triple: operators, spectra, calculus, reports"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd, bool with_n = true) {
        if (with_n) cmd->add_option("--n", opt.n, "cutoff N")->required()->check(CLI::Range(1, 64));
        cmd->add_option("--ell", opt.ell, "sphere radius")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", opt.seed, "random seed");
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--output", opt.output, "output path, - for stdout");
    };

    auto* c_verify = app.add_subcommand("verify", "run the identity suite at one cutoff");
    add_common(c_verify);
    auto* c_spectrum = app.add_subcommand("spectrum", "Dirac spectrum vs the closed form");
    add_common(c_spectrum);
    auto* c_index = app.add_subcommand("index", "chirality traces and zeromode rank");
    add_common(c_index);
    auto* c_action = app.add_subcommand("action", "scalar action via both routes");
    add_common(c_action);
    auto* c_laplacian = app.add_subcommand("laplacian", "truncated scalar Laplacian spectrum");
    add_common(c_laplacian);
    auto* c_forms = app.add_subcommand("forms", "junk-ideal rank probe (N <= 3)");
    add_common(c_forms);
    c_forms->add_option("--samples", opt.samples, "Monte-Carlo samples (0 = auto)");
    auto* c_sweep = app.add_subcommand("sweep", "spectrum + boundedness probe over a cutoff range");
    add_common(c_sweep, false);
    c_sweep->add_option("--n-min", opt.n_min, "range start")->required()->check(CLI::Range(1, 64));
    c_sweep->add_option("--n-max", opt.n_max, "range end")->required()->check(CLI::Range(1, 64));
    auto* c_torus = app.add_subcommand("torus", "fuzzy torus clock/shift relation");
    add_common(c_torus);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_sweep->parsed() && opt.n_min > opt.n_max)
            throw std::invalid_argument("sweep: --n-min must be <= --n-max");
        if (c_verify->parsed()) return run_verify(opt);
        if (c_spectrum->parsed()) return run_spectrum(opt);
        if (c_index->parsed()) return run_index(opt);
        if (c_action->parsed()) return run_action(opt);
        if (c_laplacian->parsed()) return run_laplacian(opt);
        if (c_forms->parsed()) return run_forms(opt);
        if (c_sweep->parsed()) return run_sweep(opt);
        if (c_torus->parsed()) return run_torus(opt);
    } catch (const std::exception& e) {
        std::cerr << "fuzzysph: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
