#pragma once

#include <optional>
#include <vector>

#include "latticetri/charpoly.hpp"
#include "latticetri/diagonal.hpp"
#include "latticetri/digraph.hpp"
#include "latticetri/errors.hpp"
#include "latticetri/ideal.hpp"
#include "latticetri/matrix.hpp"
#include "latticetri/permutation.hpp"
#include "latticetri/reducibility.hpp"

namespace latticetri {

struct StructuralResult {
    bool triangularizable = false;
    std::optional<Permutation> permutation;
    std::optional<IdealChain> chain;
};

/// Criterion (structural): a nonnegative matrix is permutation-similar to an
/// upper triangular one iff every strongly connected component of its support
/// digraph is a singleton (self-loops allowed). On success the deterministic
/// condensation order yields the permutation and the full invariant flag,
/// both verified exactly before returning.
inline StructuralResult criterion_structural(const Matrix& m) {
    require_square(m, "criterion_structural");
    require_nonnegative(m, "criterion_structural");

    const SccCondensation scc = scc_condensation(SupportDigraph::of(m));
    if (!scc.all_singletons()) return {};

    StructuralResult result;
    result.triangularizable = true;
    const std::vector<std::size_t> order = scc.vertex_order();
    result.permutation = Permutation(order);
    if (!permute_similarity(m, *result.permutation).is_upper_triangular())
        throw InternalError("criterion_structural: permutation failed triangularity check");
    result.chain = IdealChain::full_flag(m.dim(), order);
    for (const CoordIdeal& member : result.chain->members())
        if (!is_invariant(member, m))
            throw InternalError("criterion_structural: chain member not invariant");
    return result;
}

/// Criterion (off-diagonal nilpotence): m minus its diagonal part is nilpotent.
inline bool criterion_nilpotent_offdiag(const Matrix& m) {
    require_square(m, "criterion_nilpotent_offdiag");
    require_nonnegative(m, "criterion_nilpotent_offdiag");
    return is_nilpotent(m - atomic_diagonal(m));
}

/// Criterion (spectral): the characteristic polynomial equals the product of
/// (x - diagonal entry) exactly. Both sides are monic of degree n, so this
/// single polynomial identity captures "diagonal = spectrum with algebraic
/// multiplicity" including the zero eigenvalue.
inline bool criterion_charpoly_diag(const Matrix& m) {
    require_square(m, "criterion_charpoly_diag");
    require_nonnegative(m, "criterion_charpoly_diag");
    VecR diag(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) diag[i] = m(i, i);
    return char_poly(m) == CharPoly::from_linear_factors(diag);
}

struct CriteriaReport {
    bool structural = false;
    bool nilpotent_offdiag = false;
    bool charpoly_diag = false;
    std::optional<Permutation> permutation;
    std::optional<IdealChain> chain;

    bool triangularizable() const { return structural; }
};

/// Runs the three independent criteria and enforces their equivalence; any
/// disagreement is an internal assertion failure, never a soft result.
inline CriteriaReport criteria_equivalence(const Matrix& m) {
    CriteriaReport report;
    StructuralResult structural = criterion_structural(m);
    report.structural = structural.triangularizable;
    report.nilpotent_offdiag = criterion_nilpotent_offdiag(m);
    report.charpoly_diag = criterion_charpoly_diag(m);
    report.permutation = std::move(structural.permutation);
    report.chain = std::move(structural.chain);
    if (report.structural != report.nilpotent_offdiag ||
        report.structural != report.charpoly_diag)
        throw InternalError("criteria_equivalence: criteria disagree");
    return report;
}

/// Multiplicity bookkeeping across a chain of invariant ideals: the
/// characteristic polynomial of m equals the product of the characteristic
/// polynomials of the compressions to consecutive chain gaps. Chains need
/// not be maximal; gap blocks of dimension >= 2 are fine. Every member is
/// re-verified invariant before any block is formed.
inline bool ringrose_check(const Matrix& m, const IdealChain& chain) {
    require_square(m, "ringrose_check");
    if (chain.ambient() != m.dim()) throw DomainError("ringrose_check: dimension mismatch");
    for (const CoordIdeal& member : chain.members())
        if (!is_invariant(member, m)) throw DomainError("ringrose_check: chain member not invariant");

    CharPoly product = CharPoly::one();
    for (std::size_t k = 1; k < chain.length(); ++k) {
        const CoordIdeal gap = chain.at(k).set_difference(chain.at(k - 1));
        const Matrix block = m.submatrix(gap.members(), gap.members());
        product = product * char_poly(block);
    }
    return product == char_poly(m);
}

}  // namespace latticetri
