#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "latticetri/charpoly.hpp"
#include "latticetri/digraph.hpp"
#include "latticetri/fixtures.hpp"
#include "latticetri/generator.hpp"
#include "latticetri/ideal.hpp"
#include "latticetri/reducibility.hpp"

#include "oracles.hpp"

using namespace latticetri;

TEST_CASE("coordinate ideal set algebra") {
    const CoordIdeal a(4, {0, 2});
    const CoordIdeal b(4, {2, 3});
    CHECK(a.set_union(b) == CoordIdeal(4, {0, 2, 3}));
    CHECK(a.set_intersection(b) == CoordIdeal(4, {2}));
    CHECK(a.set_difference(b) == CoordIdeal(4, {0}));
    CHECK(a.complement() == CoordIdeal(4, {1, 3}));
    CHECK(CoordIdeal(4, {0}).is_subset_of(a));
    CHECK_FALSE(a.is_subset_of(b));
    CHECK_THROWS_AS(CoordIdeal(2, {5}), DomainError);
}

TEST_CASE("ideal chains validate strict growth and endpoints") {
    const IdealChain flag = IdealChain::full_flag(3, {2, 0, 1});
    CHECK(flag.is_maximal());
    CHECK(flag.length() == 4);
    CHECK(flag.at(1) == CoordIdeal(3, {2}));
    CHECK(flag.at(2) == CoordIdeal(3, {0, 2}));

    CHECK_THROWS_AS(IdealChain(2, {CoordIdeal::empty(2)}), DomainError);
    CHECK_THROWS_AS(IdealChain(2, {CoordIdeal(2, {0}), CoordIdeal::full(2)}), DomainError);
    CHECK_THROWS_AS(
        IdealChain(2, {CoordIdeal::empty(2), CoordIdeal::empty(2), CoordIdeal::full(2)}),
        DomainError);
}

TEST_CASE("support_union examples") {
    const std::vector<Matrix> identity{Matrix::identity(3)};
    const SupportDigraph g1 = support_union(identity);
    CHECK(g1.edge_count() == 3);
    for (std::size_t v = 0; v < 3; ++v) CHECK(g1.has_edge(v, v));

    const std::vector<Matrix> cyclic = cyclic_rank_one_generators(4);
    const SupportDigraph g2 = support_union(cyclic);
    CHECK(g2.edge_count() == 4);
    // A_i = e_i e_{i+1}^T contributes the edge (i+1) -> i.
    for (std::size_t i = 0; i < 4; ++i) CHECK(g2.has_edge((i + 1) % 4, i));

    const std::vector<Matrix> zero{Matrix::zero(3, 3)};
    CHECK(support_union(zero).edge_count() == 0);

    CHECK_THROWS_AS(support_union(std::vector<Matrix>{Matrix{{-1}}}), DomainError);
    CHECK_THROWS_AS(support_union(std::vector<Matrix>{Matrix::identity(2), Matrix::identity(3)}),
                    DomainError);
}

TEST_CASE("scc condensation on a DAG yields singletons in prefix-invariant order") {
    // Edges 1 -> 0 and 2 -> 1 (a strictly lower chain feeding downward).
    SupportDigraph g(3);
    g.add_edge(1, 0);
    g.add_edge(2, 1);
    const SccCondensation scc = scc_condensation(g);
    REQUIRE(scc.parts.size() == 3);
    CHECK(scc.all_singletons());
    CHECK(scc.vertex_order() == std::vector<std::size_t>{0, 1, 2});
    // Every prefix is closed under out-edges.
    CHECK(scc.part_is_sink[0]);
    CHECK_FALSE(scc.part_is_sink[1]);
}

TEST_CASE("scc condensation merges the 4-cycle into one part") {
    const SccCondensation scc =
        scc_condensation(support_union(cyclic_rank_one_generators(4)));
    REQUIRE(scc.parts.size() == 1);
    CHECK(scc.parts[0] == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(scc.part_is_sink[0]);
}

TEST_CASE("scc condensation of the empty graph lists singletons in index order") {
    const SccCondensation scc = scc_condensation(SupportDigraph(4));
    REQUIRE(scc.parts.size() == 4);
    CHECK(scc.vertex_order() == std::vector<std::size_t>{0, 1, 2, 3});
    for (bool sink : scc.part_is_sink) CHECK(sink);
}

TEST_CASE("prefixes of the condensation order are invariant ideals") {
    SplitMix64 rng(31337);
    for (int rep = 0; rep < 40; ++rep) {
        GenSpec spec;
        spec.n = 2 + rng.below(5);
        spec.seed = rng.next();
        spec.density = Rational(1, 3);
        const Matrix m = gen_matrix(spec);
        const SccCondensation scc = scc_condensation(SupportDigraph::of(m));
        std::vector<std::size_t> prefix;
        for (const auto& part : scc.parts) {
            prefix.insert(prefix.end(), part.begin(), part.end());
            CHECK(is_invariant(CoordIdeal(spec.n, prefix), m));
        }
    }
}

TEST_CASE("invariant_ideals examples") {
    const std::vector<Matrix> upper{Matrix{{0, 1}, {0, 0}}};
    const InvariantIdealAnalysis a1 = invariant_ideals(upper);
    CHECK_FALSE(a1.irreducible);
    REQUIRE(a1.minimal_ideals.size() == 1);
    CHECK(a1.minimal_ideals[0] == CoordIdeal(2, {0}));

    const std::vector<Matrix> positive{Matrix{{1, 1}, {1, 1}}};
    CHECK(invariant_ideals(positive).irreducible);

    CHECK(invariant_ideals(cyclic_rank_one_generators(4)).irreducible);
}

TEST_CASE("invariant_ideals agrees with exhaustive subset enumeration") {
    SplitMix64 rng(404);
    for (int rep = 0; rep < 50; ++rep) {
        GenSpec spec;
        spec.n = 1 + rng.below(5);
        spec.density = Rational(1, 3);
        std::vector<Matrix> family;
        const std::size_t count = 1 + rng.below(3);
        for (std::size_t i = 0; i < count; ++i) {
            spec.seed = rng.next();
            family.push_back(gen_matrix(spec));
        }
        const auto subsets = oracles::invariant_subsets(family);
        const InvariantIdealAnalysis analysis = invariant_ideals(family);

        // Oracle minimal nonzero invariant subsets.
        std::vector<std::vector<std::size_t>> minimal;
        for (const auto& s : subsets) {
            if (s.empty()) continue;
            bool is_minimal = true;
            for (const auto& t : subsets) {
                if (t.empty() || t == s) continue;
                if (std::includes(s.begin(), s.end(), t.begin(), t.end())) is_minimal = false;
            }
            if (is_minimal) minimal.push_back(s);
        }
        std::sort(minimal.begin(), minimal.end());

        std::vector<std::vector<std::size_t>> got;
        for (const CoordIdeal& ideal : analysis.minimal_ideals) got.push_back(ideal.members());
        std::sort(got.begin(), got.end());
        CHECK(got == minimal);

        // Irreducible iff the only invariant subsets are trivial.
        CHECK(analysis.irreducible == (subsets.size() == 2));
        CHECK(analysis.irreducible == (analysis.condensation.parts.size() == 1));
    }
}

TEST_CASE("invariant subsets are closed under union and intersection") {
    SplitMix64 rng(8080);
    for (int rep = 0; rep < 20; ++rep) {
        GenSpec spec;
        spec.n = 2 + rng.below(4);
        spec.density = Rational(1, 3);
        spec.seed = rng.next();
        const std::vector<Matrix> family{gen_matrix(spec)};
        const auto subsets = oracles::invariant_subsets(family);
        for (const auto& s : subsets) {
            for (const auto& t : subsets) {
                const CoordIdeal is(spec.n, s), it(spec.n, t);
                CHECK(is_invariant(is.set_union(it), family[0]));
                CHECK(is_invariant(is.set_intersection(it), family[0]));
            }
        }
    }
}

TEST_CASE("nonnegative nilpotence matches loop-free acyclic support") {
    SplitMix64 rng(515);
    for (int rep = 0; rep < 60; ++rep) {
        GenSpec spec;
        spec.n = 1 + rng.below(6);
        spec.density = Rational(1, 4);
        spec.seed = rng.next();
        const Matrix m = gen_matrix(spec);
        const SupportDigraph g = SupportDigraph::of(m);
        const bool acyclic = scc_condensation(g).all_singletons() && !g.has_self_loop();
        CHECK(is_nilpotent(m) == acyclic);
    }
}

TEST_CASE("reducibility witnesses: strictly upper 2x2") {
    const std::vector<Matrix> family{Matrix{{0, 1}, {0, 0}}};
    const auto witness = reducibility_witnesses(family);
    REQUIRE(witness.has_value());
    CHECK(witness->ideal == CoordIdeal(2, {0}));
    CHECK(witness->f == VecR{Rational(1), Rational(0)});
    CHECK(witness->phi == VecR{Rational(0), Rational(1)});
    CHECK((witness->a * family[0] * witness->b).is_zero());
}

TEST_CASE("reducibility witnesses: irreducible family returns nothing") {
    const std::vector<Matrix> family{Matrix{{1, 1}, {1, 1}}};
    CHECK_FALSE(reducibility_witnesses(family).has_value());
}

TEST_CASE("reducibility witnesses: block upper-triangular 4x4 splits {0,1} | {2,3}") {
    SplitMix64 rng(999);
    for (int rep = 0; rep < 20; ++rep) {
        // Positive diagonal blocks keep {0,1} the unique minimal ideal.
        Matrix m(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                if (i >= 2 && j < 2) continue;  // invariant {0,1}
                const bool diagonal_block = (i < 2) == (j < 2);
                if (diagonal_block || rng.below(2) == 0)
                    m(i, j) = Rational(Int(1 + rng.below(5)), Int(1 + rng.below(3)));
            }
        const std::vector<Matrix> family{m};
        const auto witness = reducibility_witnesses(family);
        REQUIRE(witness.has_value());
        CHECK(witness->ideal == CoordIdeal(4, {0, 1}));
        CHECK(witness->f == VecR{Rational(1), Rational(1), Rational(0), Rational(0)});
        CHECK(witness->phi == VecR{Rational(0), Rational(0), Rational(1), Rational(1)});
        for (const Matrix& s : family) {
            CHECK(dot(witness->phi, mat_vec(s, witness->f)) == 0);
            CHECK((witness->a * s * witness->b).is_zero());
        }
    }
}

TEST_CASE("witness identities hold for every returned family") {
    SplitMix64 rng(2718);
    for (int rep = 0; rep < 40; ++rep) {
        GenSpec spec;
        spec.n = 2 + rng.below(5);
        spec.density = Rational(1, 4);
        std::vector<Matrix> family;
        const std::size_t count = 1 + rng.below(3);
        for (std::size_t i = 0; i < count; ++i) {
            spec.seed = rng.next();
            family.push_back(gen_matrix(spec));
        }
        const auto witness = reducibility_witnesses(family);
        if (!witness) continue;
        CHECK(!witness->ideal.is_trivial());
        for (const Matrix& s : family) {
            CHECK(dot(witness->phi, mat_vec(s, witness->f)) == 0);
            CHECK((witness->a * s * witness->b).is_zero());
            CHECK(is_invariant(witness->ideal, s));
        }
    }
}
