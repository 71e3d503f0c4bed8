#include <catch2/catch_amalgamated.hpp>

#include "latticetri/fixtures.hpp"
#include "latticetri/generator.hpp"
#include "latticetri/triangularize.hpp"

#include "oracles.hpp"

using namespace latticetri;

namespace {

Matrix random_upper(SplitMix64& rng, std::size_t n) {
    GenSpec spec;
    spec.n = n;
    spec.seed = rng.next();
    SplitMix64 local(spec.seed);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (local.below(2) == 0)
                m(i, j) = Rational(Int(1 + local.below(9)), Int(1 + local.below(4)));
    return m;
}

}  // namespace

TEST_CASE("criterion_structural on an upper-triangular matrix") {
    SplitMix64 rng(1);
    const Matrix m = random_upper(rng, 5);
    const StructuralResult r = criterion_structural(m);
    REQUIRE(r.triangularizable);
    REQUIRE(r.permutation.has_value());
    REQUIRE(r.chain.has_value());
    CHECK(permute_similarity(m, *r.permutation).is_upper_triangular());
    CHECK(r.chain->is_maximal());
    for (const CoordIdeal& member : r.chain->members()) CHECK(is_invariant(member, m));
}

TEST_CASE("criterion_structural rejects the 2-cycle") {
    const StructuralResult r = criterion_structural(Matrix{{0, 1}, {1, 0}});
    CHECK_FALSE(r.triangularizable);
    CHECK_FALSE(r.permutation.has_value());
    CHECK_FALSE(r.chain.has_value());
}

TEST_CASE("criterion_structural rejects the cyclic generator sum") {
    const std::vector<Matrix> gens = cyclic_rank_one_generators(4);
    Matrix sum(4, 4);
    for (const Matrix& g : gens) sum = sum + g;
    CHECK_FALSE(criterion_structural(sum).triangularizable);
}

TEST_CASE("criterion_nilpotent_offdiag examples") {
    Matrix d(3, 3);
    d(0, 0) = 1;
    d(1, 1) = 2;
    d(2, 2) = 3;
    CHECK(criterion_nilpotent_offdiag(d));
    CHECK_FALSE(criterion_nilpotent_offdiag(Matrix{{0, 1}, {1, 0}}));
    CHECK(criterion_nilpotent_offdiag(Matrix{{1, 1}, {0, 2}}));
}

TEST_CASE("criterion_charpoly_diag examples") {
    CHECK(criterion_charpoly_diag(Matrix{{1, 5, 7}, {0, 2, 9}, {0, 0, 3}}));
    CHECK_FALSE(criterion_charpoly_diag(Matrix{{0, 1}, {1, 0}}));
    CHECK_FALSE(criterion_charpoly_diag(
        signed_square_zero_a().entrywise_abs() + signed_square_zero_b()));
}

TEST_CASE("criteria require nonnegative input") {
    const Matrix bad{{0, -1}, {0, 0}};
    CHECK_THROWS_AS(criterion_structural(bad), DomainError);
    CHECK_THROWS_AS(criterion_nilpotent_offdiag(bad), DomainError);
    CHECK_THROWS_AS(criterion_charpoly_diag(bad), DomainError);
    CHECK_THROWS_AS(criteria_equivalence(bad), DomainError);
}

TEST_CASE("criteria agree on permuted-triangular instances") {
    SplitMix64 rng(6001);
    for (int rep = 0; rep < 60; ++rep) {
        GenSpec spec;
        spec.n = 2 + rng.below(5);
        spec.mode = GenMode::triangularizable;
        spec.seed = rng.next();
        const Matrix m = gen_matrix(spec);
        const CriteriaReport report = criteria_equivalence(m);
        CHECK(report.structural);
        CHECK(report.nilpotent_offdiag);
        CHECK(report.charpoly_diag);
        REQUIRE(report.permutation.has_value());
        CHECK(permute_similarity(m, *report.permutation).is_upper_triangular());
    }
}

TEST_CASE("criteria agree on raw random instances") {
    SplitMix64 rng(6002);
    for (int rep = 0; rep < 200; ++rep) {
        GenSpec spec;
        spec.n = 2 + rng.below(5);
        spec.density = Rational(1, 3);
        spec.seed = rng.next();
        const Matrix m = gen_matrix(spec);
        const CriteriaReport report = criteria_equivalence(m);  // throws on disagreement
        CHECK(report.structural == report.nilpotent_offdiag);
        CHECK(report.structural == report.charpoly_diag);
    }
}

TEST_CASE("criteria_equivalence on the 2-cycle is all false") {
    const CriteriaReport report = criteria_equivalence(Matrix{{0, 1}, {1, 0}});
    CHECK_FALSE(report.structural);
    CHECK_FALSE(report.nilpotent_offdiag);
    CHECK_FALSE(report.charpoly_diag);
    CHECK_FALSE(report.permutation.has_value());
}

TEST_CASE("returned permutation preserves the diagonal multiset") {
    SplitMix64 rng(6003);
    for (int rep = 0; rep < 30; ++rep) {
        GenSpec spec;
        spec.n = 2 + rng.below(5);
        spec.mode = GenMode::triangularizable;
        spec.seed = rng.next();
        const Matrix m = gen_matrix(spec);
        const CriteriaReport report = criteria_equivalence(m);
        REQUIRE(report.permutation.has_value());
        const Matrix t = permute_similarity(m, *report.permutation);
        VecR before(spec.n), after(spec.n);
        for (std::size_t i = 0; i < spec.n; ++i) {
            before[i] = m(i, i);
            after[i] = t(i, i);
        }
        std::sort(before.begin(), before.end());
        std::sort(after.begin(), after.end());
        CHECK(before == after);
    }
}

TEST_CASE("ringrose identity: full flag on an upper-triangular matrix") {
    SplitMix64 rng(7001);
    const Matrix m = random_upper(rng, 5);
    const StructuralResult r = criterion_structural(m);
    REQUIRE(r.chain.has_value());
    CHECK(ringrose_check(m, *r.chain));
}

TEST_CASE("ringrose identity: trivial chain and coarse chains") {
    const Matrix m{{1, 2}, {0, 3}};
    CHECK(ringrose_check(m, IdealChain(2, {CoordIdeal::empty(2), CoordIdeal::full(2)})));

    // Two-step chain with a 2x2 gap block on a block-triangular 4x4.
    Matrix b(4, 4);
    SplitMix64 rng(7002);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            if (i >= 2 && j < 2) continue;
            b(i, j) = Rational(Int(rng.below(5)), Int(1 + rng.below(3)));
        }
    const IdealChain chain(4, {CoordIdeal::empty(4), CoordIdeal(4, {0, 1}), CoordIdeal::full(4)});
    CHECK(ringrose_check(b, chain));
}

TEST_CASE("ringrose rejects non-invariant chains") {
    const Matrix m{{0, 0}, {1, 0}};  // {0} is not invariant: coordinate 0 feeds 1
    const IdealChain chain(2, {CoordIdeal::empty(2), CoordIdeal(2, {0}), CoordIdeal::full(2)});
    CHECK_THROWS_AS(ringrose_check(m, chain), DomainError);
}

TEST_CASE("ringrose identity on random block-triangular instances with random chains") {
    SplitMix64 rng(7003);
    for (int rep = 0; rep < 50; ++rep) {
        const std::size_t n = 2 + rng.below(6);
        // Random composition of n into blocks.
        std::vector<std::size_t> sizes;
        std::size_t left = n;
        while (left > 0) {
            const std::size_t s = 1 + rng.below(left);
            sizes.push_back(s);
            left -= s;
        }
        std::vector<std::size_t> block_of(n);
        {
            std::size_t v = 0;
            for (std::size_t b = 0; b < sizes.size(); ++b)
                for (std::size_t k = 0; k < sizes[b]; ++k) block_of[v++] = b;
        }
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (block_of[i] > block_of[j]) continue;  // keep prefix ideals invariant
                if (rng.below(2) == 0) m(i, j) = Rational(Int(1 + rng.below(7)), Int(1 + rng.below(3)));
            }
        std::vector<CoordIdeal> members{CoordIdeal::empty(n)};
        std::vector<std::size_t> prefix;
        for (std::size_t b = 0; b < sizes.size(); ++b) {
            for (std::size_t v = 0; v < n; ++v)
                if (block_of[v] == b) prefix.push_back(v);
            members.push_back(CoordIdeal(n, prefix));
        }
        const IdealChain chain(n, members);
        CHECK(ringrose_check(m, chain));

        // The identity also survives simultaneous permutation of matrix and chain.
        std::vector<std::size_t> image(n);
        for (std::size_t i = 0; i < n; ++i) image[i] = i;
        for (std::size_t i = n; i-- > 1;) std::swap(image[i], image[rng.below(i + 1)]);
        const Permutation sigma(image);
        const Permutation inv = sigma.inverse();
        const Matrix pm = permute_similarity(m, sigma);
        std::vector<CoordIdeal> pmembers;
        for (const CoordIdeal& member : chain.members()) {
            std::vector<std::size_t> mapped;
            for (std::size_t v : member.members()) mapped.push_back(inv(v));
            pmembers.push_back(CoordIdeal(n, mapped));
        }
        CHECK(ringrose_check(pm, IdealChain(n, pmembers)));
    }
}

TEST_CASE("ringrose product equals the cofactor oracle per gap block") {
    // Cross-check the product route against the independent polynomial
    // determinant on one fixed instance.
    const Matrix m{{1, 2, 3}, {0, 4, 5}, {0, 0, 6}};
    const IdealChain chain(3, {CoordIdeal::empty(3), CoordIdeal(3, {0}), CoordIdeal::full(3)});
    REQUIRE(ringrose_check(m, chain));
    CHECK(char_poly(m).coefficients() == oracles::char_poly_cofactor(m));
}
