#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latticetri/diagonal.hpp"
#include "latticetri/digraph.hpp"
#include "latticetri/errors.hpp"
#include "latticetri/matrix.hpp"
#include "latticetri/permutation.hpp"
#include "latticetri/triangularize.hpp"

namespace latticetri {

/// Word over generator indices; the shortest, lexicographically least word
/// producing an element is kept as its witness.
using Word = std::vector<std::size_t>;

struct ClosureElement {
    Matrix matrix;
    Word word;
};

/// Finite window onto the multiplicative semigroup generated by a family:
/// all distinct products of words up to `depth`, enumerated by word length
/// and then lexicographic word, deduplicated by exact equality. `complete`
/// is set when an entire level produced nothing new, in which case the
/// enumerated set is the whole semigroup.
struct SemigroupClosure {
    std::vector<Matrix> generators;
    std::size_t depth = 0;
    std::vector<ClosureElement> elements;
    bool complete = false;
};

inline SemigroupClosure generate_closure(std::vector<Matrix> generators, std::size_t depth) {
    if (generators.empty()) throw DomainError("generate_closure: no generators");
    if (depth < 1) throw DomainError("generate_closure: depth must be >= 1");
    require_square(generators.front(), "generate_closure");
    const std::size_t n = generators.front().dim();
    for (const Matrix& g : generators) {
        require_square(g, "generate_closure");
        if (g.dim() != n) throw DomainError("generate_closure: dimension mismatch");
    }

    SemigroupClosure closure;
    closure.generators = std::move(generators);
    closure.depth = depth;

    std::map<Matrix, std::size_t, MatrixLess> seen;
    std::vector<std::size_t> frontier;
    for (std::size_t g = 0; g < closure.generators.size(); ++g) {
        const Matrix& candidate = closure.generators[g];
        if (seen.emplace(candidate, closure.elements.size()).second) {
            frontier.push_back(closure.elements.size());
            closure.elements.push_back({candidate, Word{g}});
        }
    }

    for (std::size_t length = 2; length <= depth; ++length) {
        std::vector<std::size_t> next;
        for (std::size_t idx : frontier) {
            for (std::size_t g = 0; g < closure.generators.size(); ++g) {
                Matrix product = closure.elements[idx].matrix * closure.generators[g];
                if (!seen.emplace(product, closure.elements.size()).second) continue;
                Word word = closure.elements[idx].word;
                word.push_back(g);
                next.push_back(closure.elements.size());
                closure.elements.push_back({std::move(product), std::move(word)});
            }
        }
        if (next.empty()) {
            // A fixed level: every longer word reduces to an enumerated element.
            closure.complete = true;
            break;
        }
        frontier = std::move(next);
    }
    return closure;
}

struct DiagCommutatorResult {
    bool holds = true;
    std::optional<std::pair<Word, Word>> violation;
    std::size_t checked_pairs = 0;
};

/// Checks diag(S*T) = diag(T*S) for every unordered pair of enumerated
/// elements (pairs with S = T hold identically and are only counted).
/// The first violation in enumeration order is reported with both words.
inline DiagCommutatorResult diag_commutator_condition(const SemigroupClosure& closure) {
    for (const ClosureElement& e : closure.elements)
        require_nonnegative(e.matrix, "diag_commutator_condition");

    DiagCommutatorResult result;
    const auto& elements = closure.elements;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (std::size_t j = i; j < elements.size(); ++j) {
            ++result.checked_pairs;
            if (i == j) continue;
            const Matrix st = elements[i].matrix * elements[j].matrix;
            const Matrix ts = elements[j].matrix * elements[i].matrix;
            if (atomic_diagonal(st) != atomic_diagonal(ts)) {
                result.holds = false;
                result.violation = {elements[i].word, elements[j].word};
                return result;
            }
        }
    }
    return result;
}

enum class HypothesisScope { complete_closure, depth_truncated };

inline const char* to_string(HypothesisScope scope) {
    return scope == HypothesisScope::complete_closure ? "complete-closure" : "depth-truncated";
}

struct SemigroupVerdict {
    bool each_triangularizable = false;
    bool diag_condition = false;
    std::size_t checked_pairs = 0;
    HypothesisScope hypothesis_scope = HypothesisScope::depth_truncated;
    bool commonly_triangularizable = false;
    std::optional<Permutation> permutation;
    std::optional<IdealChain> chain;
    std::optional<std::pair<Word, Word>> counterexample_pair;
    std::size_t closure_size = 0;
    bool closure_complete = false;
};

/// Full pipeline: per-element triangularizability, the commutator-diagonal
/// hypothesis over the enumerated closure, and an independent structural
/// verdict on common triangularizability (invariance under the generators is
/// equivalent to invariance under every product). When the closure is
/// complete and both hypotheses hold, the conclusion is asserted: a failure
/// there is an internal error, not a result.
inline SemigroupVerdict semigroup_pipeline(const std::vector<Matrix>& generators,
                                           std::size_t depth) {
    for (const Matrix& g : generators) require_nonnegative(g, "semigroup_pipeline");
    const SemigroupClosure closure = generate_closure(generators, depth);

    SemigroupVerdict verdict;
    verdict.closure_size = closure.elements.size();
    verdict.closure_complete = closure.complete;
    verdict.hypothesis_scope = closure.complete ? HypothesisScope::complete_closure
                                                : HypothesisScope::depth_truncated;

    verdict.each_triangularizable = true;
    for (const ClosureElement& e : closure.elements)
        if (!criteria_equivalence(e.matrix).triangularizable())
            verdict.each_triangularizable = false;

    const DiagCommutatorResult dc = diag_commutator_condition(closure);
    verdict.diag_condition = dc.holds;
    verdict.checked_pairs = dc.checked_pairs;
    verdict.counterexample_pair = dc.violation;

    const SccCondensation scc = scc_condensation(support_union(closure.generators));
    verdict.commonly_triangularizable = scc.all_singletons();
    if (verdict.commonly_triangularizable) {
        const std::vector<std::size_t> order = scc.vertex_order();
        verdict.permutation = Permutation(order);
        for (const Matrix& g : closure.generators)
            if (!permute_similarity(g, *verdict.permutation).is_upper_triangular())
                throw InternalError("semigroup_pipeline: common permutation failed verification");
        verdict.chain = IdealChain::full_flag(scc.part_of.size(), order);
    }

    if (closure.complete && verdict.each_triangularizable && verdict.diag_condition &&
        !verdict.commonly_triangularizable)
        throw InternalError("semigroup_pipeline: hypotheses hold on a complete closure "
                            "but no common triangularization exists");
    return verdict;
}

/// True iff every enumerated element is nilpotent. On a complete closure
/// this forces common triangularizability with a loop-free union support
/// (strictly triangular frame); that conclusion is asserted, since for a
/// complete closure the enumerated set is the entire semigroup.
inline bool quasinilpotent_semigroup_check(const SemigroupClosure& closure) {
    for (const ClosureElement& e : closure.elements)
        require_nonnegative(e.matrix, "quasinilpotent_semigroup_check");

    for (const ClosureElement& e : closure.elements)
        if (!is_nilpotent(e.matrix)) return false;

    if (closure.complete) {
        const SupportDigraph g = support_union(closure.generators);
        const SccCondensation scc = scc_condensation(g);
        if (!scc.all_singletons() || g.has_self_loop())
            throw InternalError("quasinilpotent_semigroup_check: nilpotent closure "
                                "without a strictly triangular frame");
    }
    return true;
}

}  // namespace latticetri
