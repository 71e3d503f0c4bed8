#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "latticetri/digraph.hpp"
#include "latticetri/errors.hpp"
#include "latticetri/ideal.hpp"
#include "latticetri/matrix.hpp"

namespace latticetri {

/// Exact invariance test: the span of the coordinates in `ideal` is invariant
/// under m iff m(i, j) = 0 whenever j is inside and i outside.
inline bool is_invariant(const CoordIdeal& ideal, const Matrix& m) {
    require_square(m, "is_invariant");
    if (ideal.ambient() != m.dim()) throw DomainError("is_invariant: dimension mismatch");
    for (std::size_t i = 0; i < m.dim(); ++i) {
        if (ideal.contains(i)) continue;
        for (std::size_t j : ideal.members())
            if (m(i, j) != 0) return false;
    }
    return true;
}

inline bool is_invariant_for_all(const CoordIdeal& ideal, std::span<const Matrix> mats) {
    for (const Matrix& m : mats)
        if (!is_invariant(ideal, m)) return false;
    return true;
}

struct InvariantIdealAnalysis {
    /// All inclusion-minimal nonzero coordinate ideals invariant under the
    /// whole family; these are exactly the sink components of the union
    /// support condensation, ordered by smallest contained coordinate.
    std::vector<CoordIdeal> minimal_ideals;
    /// True iff only the trivial ideals are invariant (single component).
    bool irreducible = false;
    SccCondensation condensation;
};

inline InvariantIdealAnalysis invariant_ideals(std::span<const Matrix> mats) {
    InvariantIdealAnalysis analysis;
    const SupportDigraph g = support_union(mats);
    analysis.condensation = scc_condensation(g);
    analysis.irreducible = analysis.condensation.parts.size() == 1;
    for (std::size_t c = 0; c < analysis.condensation.parts.size(); ++c) {
        if (!analysis.condensation.part_is_sink[c]) continue;
        analysis.minimal_ideals.emplace_back(g.size(), analysis.condensation.parts[c]);
    }
    return analysis;
}

/// Constructive reducibility certificate built from one nontrivial invariant
/// ideal J: a positive vector f supported on J with a positive functional phi
/// supported on the complement annihilating the whole family's orbit of f,
/// and diagonal projections a (onto the complement) and b (onto J) with
/// a * S * b = 0 for every S. Both identities are re-verified exactly before
/// the witness is returned.
struct ReducibilityWitness {
    CoordIdeal ideal;
    VecR f;
    VecR phi;
    Matrix a;
    Matrix b;
};

inline std::optional<ReducibilityWitness> reducibility_witnesses(std::span<const Matrix> mats) {
    const InvariantIdealAnalysis analysis = invariant_ideals(mats);
    if (analysis.irreducible) return std::nullopt;

    const CoordIdeal& ideal = analysis.minimal_ideals.front();
    const std::size_t n = ideal.ambient();
    const CoordIdeal co = ideal.complement();

    ReducibilityWitness w{ideal, VecR(n), VecR(n), Matrix::zero(n, n), Matrix::zero(n, n)};
    for (std::size_t j : ideal.members()) {
        w.f[j] = 1;
        w.b(j, j) = 1;
    }
    for (std::size_t i : co.members()) {
        w.phi[i] = 1;
        w.a(i, i) = 1;
    }

    for (const Matrix& s : mats) {
        if (dot(w.phi, mat_vec(s, w.f)) != 0)
            throw InternalError("reducibility_witnesses: functional witness failed verification");
        if (!(w.a * s * w.b).is_zero())
            throw InternalError("reducibility_witnesses: projection witness failed verification");
    }
    return w;
}

}  // namespace latticetri
