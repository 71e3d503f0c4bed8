#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "latticetri/errors.hpp"
#include "latticetri/ideal.hpp"
#include "latticetri/matrix.hpp"
#include "latticetri/triangularize.hpp"

namespace latticetri {

/// m >= 0 and m * m = m, both exact.
inline bool verify_idempotent(const Matrix& m) {
    if (!m.is_square() || m.rows() == 0) return false;
    return m.is_nonnegative() && m * m == m;
}

/// Coordinates annihilated by m: for a nonnegative matrix these are exactly
/// the zero columns.
inline CoordIdeal absolute_kernel(const Matrix& m) {
    require_square(m, "absolute_kernel");
    require_nonnegative(m, "absolute_kernel");
    std::vector<std::size_t> members;
    for (std::size_t j = 0; j < m.dim(); ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < m.dim() && zero; ++i) zero = m(i, j) == 0;
        if (zero) members.push_back(j);
    }
    return CoordIdeal(m.dim(), std::move(members));
}

/// Ideal generated by the range of m: the coordinates with a nonzero row.
inline CoordIdeal range_ideal(const Matrix& m) {
    require_square(m, "range_ideal");
    require_nonnegative(m, "range_ideal");
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < m.dim() && zero; ++j) zero = m(i, j) == 0;
        if (!zero) members.push_back(i);
    }
    return CoordIdeal(m.dim(), std::move(members));
}

/// One irreducible rank-one factor of the core idempotent: on its support the
/// block equals column * functional with functional . column = 1 and every
/// entry of both factors strictly positive.
struct RankOnePart {
    CoordIdeal support;  // global coordinates
    VecR column;         // indexed along support.members()
    VecR functional;
};

/// Canonical block structure of a nonnegative idempotent P with respect to
/// the splitting kernel | core | cokernel:
///
///   kernel   = absolute kernel of P            (zero columns)
///   core     = nonzero rows minus the kernel
///   cokernel = the rest                        (zero rows, nonzero columns)
///
/// In that coordinate order P looks like
///
///   [ 0   X    X*Y ]
///   [ 0   Q     Y  ]
///   [ 0   0     0  ],
///
/// where Q (core_idempotent) is an idempotent with no zero row and no zero
/// column, X = X*Q, Y = Q*Y, and Q splits into entrywise-positive rank-one
/// idempotents on the connected components of its support.
struct IdempotentDecomposition {
    CoordIdeal kernel;
    CoordIdeal core;
    CoordIdeal cokernel;
    Matrix core_idempotent;   // core x core
    Matrix kernel_coupling;   // kernel x core     (the X block)
    Matrix cokernel_coupling; // core x cokernel   (the Y block)
    Matrix corner;            // kernel x cokernel (equals X*Y)
    std::vector<RankOnePart> parts;
};

namespace detail {

inline std::vector<std::vector<std::size_t>> connected_components_of_support(const Matrix& q) {
    const std::size_t k = q.dim();
    std::vector<std::size_t> label(k, static_cast<std::size_t>(-1));
    std::vector<std::vector<std::size_t>> components;
    for (std::size_t start = 0; start < k; ++start) {
        if (label[start] != static_cast<std::size_t>(-1)) continue;
        std::vector<std::size_t> stack{start}, members;
        label[start] = components.size();
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (std::size_t w = 0; w < k; ++w) {
                if (label[w] != static_cast<std::size_t>(-1)) continue;
                if (q(v, w) != 0 || q(w, v) != 0) {
                    label[w] = components.size();
                    stack.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        components.push_back(std::move(members));
    }
    return components;
}

}  // namespace detail

/// Extracts the canonical decomposition of a nonnegative idempotent and
/// verifies every structural identity it promises. Verification failures are
/// internal assertions: they cannot happen for a genuine idempotent.
inline IdempotentDecomposition decompose_idempotent(const Matrix& m) {
    if (!verify_idempotent(m)) throw DomainError("decompose_idempotent: input is not a nonnegative idempotent");
    const std::size_t n = m.dim();

    const CoordIdeal kernel = absolute_kernel(m);
    const CoordIdeal reach = kernel.set_union(range_ideal(m));
    const CoordIdeal core = reach.set_difference(kernel);
    const CoordIdeal cokernel = reach.complement();

    IdempotentDecomposition d{
        kernel,
        core,
        cokernel,
        m.submatrix(core.members(), core.members()),
        m.submatrix(kernel.members(), core.members()),
        m.submatrix(core.members(), cokernel.members()),
        m.submatrix(kernel.members(), cokernel.members()),
        {}};

    const Matrix& q = d.core_idempotent;
    const std::size_t k = q.dim();
    if (q * q != q) throw InternalError("decompose_idempotent: core block not idempotent");
    if (d.kernel_coupling * q != d.kernel_coupling)
        throw InternalError("decompose_idempotent: X = X*Q violated");
    if (q * d.cokernel_coupling != d.cokernel_coupling)
        throw InternalError("decompose_idempotent: Y = Q*Y violated");
    if (d.kernel_coupling * d.cokernel_coupling != d.corner)
        throw InternalError("decompose_idempotent: corner block is not X*Y");
    for (std::size_t i = 0; i < k; ++i) {
        bool zero_row = true, zero_col = true;
        for (std::size_t j = 0; j < k; ++j) {
            if (q(i, j) != 0) zero_row = false;
            if (q(j, i) != 0) zero_col = false;
        }
        if (zero_row || zero_col)
            throw InternalError("decompose_idempotent: core block has a vanishing row or column");
    }

    // Rank-one split: the connected components of the core support carry
    // pairwise disjoint, entrywise positive rank-one idempotents.
    for (const auto& component : detail::connected_components_of_support(q)) {
        const Matrix block = q.submatrix(component, component);
        const std::size_t s = component.size();
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j)
                if (block(i, j) <= 0)
                    throw InternalError("decompose_idempotent: rank-one part not entrywise positive");
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j)
                if (block(i, j) * block(0, 0) != block(i, 0) * block(0, j))
                    throw InternalError("decompose_idempotent: rank-one part has a nonzero 2x2 minor");

        RankOnePart part{CoordIdeal(n, {}), VecR(s), VecR(s)};
        std::vector<std::size_t> global;
        global.reserve(s);
        for (std::size_t local : component) global.push_back(core.members()[local]);
        part.support = CoordIdeal(n, std::move(global));
        for (std::size_t i = 0; i < s; ++i) part.column[i] = block(i, 0);
        for (std::size_t j = 0; j < s; ++j) part.functional[j] = block(0, j) / block(0, 0);
        if (dot(part.functional, part.column) != 1)
            throw InternalError("decompose_idempotent: rank-one normalization failed");
        if (outer_product(part.column, part.functional) != block)
            throw InternalError("decompose_idempotent: rank-one factorization failed");
        d.parts.push_back(std::move(part));
    }
    return d;
}

/// Finite-dimensional reading of the rank-one irreducibility criterion:
/// x must be a quasi-interior point (every coordinate > 0) and phi strictly
/// positive (every coordinate > 0), given the normalization phi . x = 1.
inline bool rank_one_irreducibility(std::span<const Rational> x, std::span<const Rational> phi) {
    for (const Rational& v : x)
        if (v < 0) throw DomainError("rank_one_irreducibility: negative entry in x");
    for (const Rational& v : phi)
        if (v < 0) throw DomainError("rank_one_irreducibility: negative entry in phi");
    if (dot(phi, x) != 1) throw DomainError("rank_one_irreducibility: phi . x != 1");
    for (const Rational& v : x)
        if (v == 0) return false;
    for (const Rational& v : phi)
        if (v == 0) return false;
    return true;
}

/// For triangularizable nonnegative idempotents the core block must be the
/// identity. Returns nullopt when the structural criterion fails (the
/// hypothesis is vacuous), otherwise the verified assertion result.
inline std::optional<bool> triangularizable_idempotent_check(const Matrix& m) {
    if (!verify_idempotent(m))
        throw DomainError("triangularizable_idempotent_check: input is not a nonnegative idempotent");
    if (!criterion_structural(m).triangularizable) return std::nullopt;
    const IdempotentDecomposition d = decompose_idempotent(m);
    return d.core_idempotent == Matrix::identity(d.core_idempotent.dim());
}

}  // namespace latticetri
