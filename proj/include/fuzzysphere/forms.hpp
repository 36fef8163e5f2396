#pragma once

#include "fuzzysphere/triple.hpp"

#include <array>
#include <cstdint>

namespace fsph {

/// Thrown by the junk probe when the sampled ranks do not agree across the
/// internally evaluated seeds; carries the per-seed (pi, junk, omega) triples.
class UnstableRank : public std::runtime_error {
public:
    UnstableRank(const std::string& what, std::vector<std::array<int, 3>> ranks)
        : std::runtime_error(what), per_seed(std::move(ranks)) {}
    std::vector<std::array<int, 3>> per_seed;
};

/// One term of a universal p-form: weight * a_0 da_1 ... da_p, kept as the
/// tuple of algebra elements (a_0, ..., a_p).
struct UniversalTerm {
    Complex weight = 1.0;
    std::vector<Matrix> factors;  // degree + 1 entries, each (N+1)x(N+1)
};

struct UniversalForm {
    int degree = 0;
    std::vector<UniversalTerm> terms;  // empty list = the zero form
};

struct RepresentedForm {
    int degree = 0;
    Matrix matrix;  // spinor operator pi(w)
};

/// pi(da) = [D, pi(a)] as a degree-1 represented form. Satisfies the Leibniz
/// rule and (da)† = -d(a†).
RepresentedForm exterior_derivative(const FuzzySphere& s, const Matrix& a);
RepresentedForm exterior_derivative(const FuzzySphere& s, const Matrix& a, const Matrix& dirac);

/// pi applied term-wise: weight * pi(a_0) [D, pi(a_1)] ... [D, pi(a_p)].
RepresentedForm represent(const FuzzySphere& s, const UniversalForm& w);
RepresentedForm represent(const FuzzySphere& s, const UniversalForm& w, const Matrix& dirac);

/// Universal exterior derivative: (a_0, ..., a_p) -> (1, a_0, ..., a_p),
/// representing to [D, pi(a_0)] ... [D, pi(a_p)].
UniversalForm derive(const UniversalForm& w);

struct JunkRanks {
    int dim_pi = 0;
    int dim_junk = 0;
    int dim_omega = 0;  // dim_pi - dim_junk
};

/// Monte-Carlo probe of the junk-ideal quotient at degree p <= 2.
///
/// Draws `samples` universal p-forms whose factors are uniform over the
/// matrix-unit basis of A_N, computes the numerical rank of span{pi(w)}
/// (singular-value threshold 1e-9 relative), and the rank of
/// span{pi(dw) : pi(w) = 0} via the identity
///     dim pi(d ker pi) = rank [pi; pi d] - rank [pi]
/// on the sampled coefficient space. The probe runs seeds seed, seed+1,
/// seed+2 and requires identical ranks (UnstableRank otherwise).
///
/// Requires N <= 3 and samples >= dim A_N^{(p+1)} = (N+1)^(2(p+1)).
JunkRanks junk_quotient_rank(const FuzzySphere& s, int degree, int samples, std::uint64_t seed);

}  // namespace fsph
