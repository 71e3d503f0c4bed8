#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "latticetri/charpoly.hpp"
#include "latticetri/diagonal.hpp"
#include "latticetri/matrix.hpp"
#include "latticetri/reducibility.hpp"
#include "latticetri/semigroup.hpp"
#include "latticetri/triangularize.hpp"

namespace latticetri {

// Two hand-checkable fixture families. Both are boundary cases for the
// semigroup pipeline: each matrix is individually triangularizable (or has
// zero diagonal), yet the family as a whole is not.

/// A_i = e_i e_{i+1}^T cyclically, n >= 3: rank-one nilpotents whose union
/// support is a single n-cycle.
inline std::vector<Matrix> cyclic_rank_one_generators(std::size_t n) {
    if (n < 3) throw DomainError("cyclic_rank_one_generators: need n >= 3");
    std::vector<Matrix> gens;
    gens.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix a(n, n);
        a(i, (i + 1) % n) = 1;
        gens.push_back(std::move(a));
    }
    return gens;
}

/// Signed square-zero pair: a*a = b*b = a*b = b*a = 0, every diagonal zero,
/// yet |a| + b is not nilpotent. Shows the pipeline's nonnegativity
/// hypothesis cannot be dropped.
inline Matrix signed_square_zero_a() {
    return Matrix{{0, 0, 1, -1}, {0, 0, -1, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}};
}

inline Matrix signed_square_zero_b() {
    return Matrix{{0, 0, 0, 0}, {0, 0, 0, 0}, {1, 1, 0, 0}, {1, 1, 0, 0}};
}

struct FixtureCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace detail {

inline void record(std::vector<FixtureCheck>& out, std::string name, bool pass,
                   std::string detail = "") {
    out.push_back({std::move(name), pass, std::move(detail)});
}

}  // namespace detail

/// Cyclic rank-one fixture at n = 4: each generator is triangularizable and
/// all pairwise products have zero diagonal, yet the sum is a 4-cycle
/// permutation matrix (fourth power = identity) and the family admits no
/// common triangularization; the truncated closure exhibits a concrete
/// diagonal-commutator violation.
inline std::vector<FixtureCheck> run_cyclic_fixture() {
    std::vector<FixtureCheck> out;
    constexpr std::size_t n = 4;
    const std::vector<Matrix> gens = cyclic_rank_one_generators(n);

    bool each = true;
    for (const Matrix& g : gens) each = each && criteria_equivalence(g).triangularizable();
    detail::record(out, "cyclic: each generator triangularizable", each);

    bool diag_zero = true;
    for (const Matrix& gi : gens)
        for (const Matrix& gj : gens)
            diag_zero = diag_zero && atomic_diagonal(gi * gj).is_zero();
    detail::record(out, "cyclic: all pairwise products have zero diagonal", diag_zero);

    Matrix sum(n, n);
    for (const Matrix& g : gens) sum = sum + g;
    detail::record(out, "cyclic: sum of generators is a 4-cycle (4th power = identity)",
                   pow(sum, n) == Matrix::identity(n));
    detail::record(out, "cyclic: sum fails every triangularizability criterion",
                   !criterion_structural(sum).triangularizable &&
                       !criterion_nilpotent_offdiag(sum) && !criterion_charpoly_diag(sum));

    detail::record(out, "cyclic: family is irreducible",
                   invariant_ideals(gens).irreducible);

    const SemigroupClosure depth1 = generate_closure(gens, 1);
    detail::record(out, "cyclic: depth-1 diagonal condition holds",
                   diag_commutator_condition(depth1).holds);

    const SemigroupVerdict verdict = semigroup_pipeline(gens, n);
    detail::record(out, "cyclic: pipeline verdict is not commonly triangularizable",
                   verdict.each_triangularizable && !verdict.diag_condition &&
                       !verdict.commonly_triangularizable &&
                       verdict.counterexample_pair.has_value());

    // The closure window contains the rank-one idempotent pattern
    // e_0 e_0^T = A_0 A_1 A_2 A_3.
    Matrix e00(n, n);
    e00(0, 0) = 1;
    const SemigroupClosure closure = generate_closure(gens, n);
    bool found = false;
    for (const ClosureElement& e : closure.elements) found = found || e.matrix == e00;
    detail::record(out, "cyclic: closure contains the length-4 idempotent product", found);

    return out;
}

/// Signed square-zero fixture: exact square-zero identities for the signed
/// pair, and the zero-diagonal / non-nilpotent contrast for |a| + b. The
/// companion run feeds the nonnegative family {0, |a|, b} to the pipeline.
inline std::vector<FixtureCheck> run_signed_fixture() {
    std::vector<FixtureCheck> out;
    const Matrix a = signed_square_zero_a();
    const Matrix b = signed_square_zero_b();
    const std::size_t n = a.dim();

    detail::record(out, "signed: a*a = b*b = a*b = b*a = 0",
                   (a * a).is_zero() && (b * b).is_zero() && (a * b).is_zero() &&
                       (b * a).is_zero());

    const Matrix mixed = a.entrywise_abs() + b;
    detail::record(out, "signed: |a| + b has zero diagonal",
                   atomic_diagonal(mixed).is_zero());

    const CharPoly expected(VecR{Rational(0), Rational(0), Rational(-4), Rational(0), Rational(1)});
    detail::record(out, "signed: char poly of |a| + b is x^4 - 4x^2",
                   char_poly(mixed) == expected);
    detail::record(out, "signed: |a| + b is not nilpotent", !is_nilpotent(mixed));
    detail::record(out, "signed: |a| + b fails every triangularizability criterion",
                   !criterion_structural(mixed).triangularizable &&
                       !criterion_nilpotent_offdiag(mixed) && !criterion_charpoly_diag(mixed));

    bool rejected = false;
    try {
        semigroup_pipeline({a, b}, 2);
    } catch (const DomainError&) {
        rejected = true;
    }
    detail::record(out, "signed: pipeline rejects the signed pair", rejected);

    // Companion nonnegative family: zero diagonals elementwise, but the
    // diagonal condition fails across the closure and so does common
    // triangularizability.
    const std::vector<Matrix> companion{Matrix::zero(n, n), a.entrywise_abs(), b};
    bool diag_zero = true;
    for (const Matrix& m : companion) diag_zero = diag_zero && atomic_diagonal(m).is_zero();
    const SemigroupVerdict verdict = semigroup_pipeline(companion, 4);
    detail::record(out, "signed: companion family has zero diagonals but no common frame",
                   diag_zero && !verdict.diag_condition && !verdict.commonly_triangularizable);

    return out;
}

inline std::vector<std::string> fixture_names() {
    return {"cyclic-rank-one", "signed-square-zero"};
}

inline std::vector<FixtureCheck> run_fixture(const std::string& name) {
    if (name == "cyclic-rank-one") return run_cyclic_fixture();
    if (name == "signed-square-zero") return run_signed_fixture();
    throw DomainError("unknown fixture: " + name);
}

}  // namespace latticetri
