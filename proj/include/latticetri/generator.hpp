#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <vector>

#include "latticetri/errors.hpp"
#include "latticetri/idempotent.hpp"
#include "latticetri/matrix.hpp"
#include "latticetri/permutation.hpp"

namespace latticetri {

/// splitmix64: the fixed 64-bit generator behind every random instance.
/// The exact constants and draw orders are part of the reproducibility
/// contract (same seed => bit-identical instance, on any platform).
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound) via the 128-bit multiply-shift reduction.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) return 0;
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }
};

enum class GenMode { raw, triangularizable, idempotent, semigroup_framed };

/// Deterministic instance recipe. `density` is an exact probability p/q;
/// nonzero entries are drawn as num/den with num in [1, max_numerator] and
/// den in [1, max_denominator].
struct GenSpec {
    std::size_t n = 4;
    Rational density = Rational(1, 2);
    std::uint64_t max_numerator = 9;
    std::uint64_t max_denominator = 4;
    GenMode mode = GenMode::raw;
    std::uint64_t seed = 0;
    /// kernel | core | cokernel sizes, used by the idempotent mode only;
    /// they must sum to n and the core must be nonempty.
    std::array<std::size_t, 3> idempotent_sizes{0, 0, 0};

    void validate() const {
        if (n < 1) throw DomainError("GenSpec: n must be >= 1");
        if (density < 0 || density > 1) throw DomainError("GenSpec: density must lie in [0, 1]");
        if (denominator(density) > Int(UINT64_MAX))
            throw DomainError("GenSpec: density denominator too large");
        if (max_numerator < 1 || max_denominator < 1)
            throw DomainError("GenSpec: value bounds must be >= 1");
        if (mode == GenMode::idempotent) {
            const auto [k, c, d] = idempotent_sizes;
            if (k + c + d != n || c < 1)
                throw DomainError("GenSpec: idempotent sizes must sum to n with a nonempty core");
        }
    }
};

namespace detail {

inline bool draw_bernoulli(SplitMix64& rng, const Rational& density) {
    // One draw per decision: uniform below q, success iff < p.
    const std::uint64_t q = static_cast<std::uint64_t>(denominator(density));
    const std::uint64_t p = static_cast<std::uint64_t>(numerator(density));
    return rng.below(q) < p;
}

inline Rational draw_positive_value(SplitMix64& rng, const GenSpec& spec) {
    const Int num(1 + rng.below(spec.max_numerator));
    const Int den(1 + rng.below(spec.max_denominator));
    return Rational(num, den);
}

inline Permutation draw_permutation(SplitMix64& rng, std::size_t n) {
    std::vector<std::size_t> image(n);
    for (std::size_t i = 0; i < n; ++i) image[i] = i;
    for (std::size_t i = n; i-- > 1;) {
        const std::size_t j = rng.below(i + 1);
        std::swap(image[i], image[j]);
    }
    return Permutation(std::move(image));
}

/// Row-major sweep; in triangular mode only positions on or above the
/// diagonal are eligible.
inline Matrix draw_entries(SplitMix64& rng, const GenSpec& spec, bool upper_only) {
    Matrix m(spec.n, spec.n);
    for (std::size_t i = 0; i < spec.n; ++i)
        for (std::size_t j = 0; j < spec.n; ++j) {
            if (upper_only && j < i) continue;
            if (draw_bernoulli(rng, spec.density)) m(i, j) = draw_positive_value(rng, spec);
        }
    return m;
}

}  // namespace detail

/// raw: independent nonnegative entries at the requested density.
/// triangularizable: a random upper-triangular draw conjugated by a random
/// permutation, so the structural criterion holds by construction.
inline Matrix gen_matrix(const GenSpec& spec) {
    spec.validate();
    if (spec.mode != GenMode::raw && spec.mode != GenMode::triangularizable)
        throw DomainError("gen_matrix: spec mode must be raw or triangularizable");
    SplitMix64 rng(spec.seed);
    if (spec.mode == GenMode::raw) return detail::draw_entries(rng, spec, false);
    const Matrix upper = detail::draw_entries(rng, spec, true);
    return permute_similarity(upper, detail::draw_permutation(rng, spec.n));
}

/// Random nonnegative idempotent assembled from its canonical block form:
/// a core direct sum of positive rank-one idempotents plus couplings X, Y
/// with X = X*Q and Y = Q*Y. Blocks are laid out kernel | core | cokernel.
/// Every kernel row of X and every cokernel column of Y receives at least
/// one positive entry so the decomposition recovers the chosen splitting
/// exactly. The assembled matrix is verified idempotent before returning.
inline Matrix gen_idempotent(const GenSpec& spec) {
    spec.validate();
    if (spec.mode != GenMode::idempotent)
        throw DomainError("gen_idempotent: spec mode must be idempotent");
    SplitMix64 rng(spec.seed);
    const auto [nk, nc, nd] = spec.idempotent_sizes;

    // Core split: labels below a drawn bound, parts by first appearance.
    const std::size_t label_bound = 1 + rng.below(nc);
    std::vector<std::size_t> label(nc);
    for (std::size_t i = 0; i < nc; ++i) label[i] = rng.below(label_bound);
    std::vector<std::vector<std::size_t>> parts;
    {
        std::vector<std::size_t> remap(label_bound, static_cast<std::size_t>(-1));
        for (std::size_t i = 0; i < nc; ++i) {
            if (remap[label[i]] == static_cast<std::size_t>(-1)) {
                remap[label[i]] = parts.size();
                parts.emplace_back();
            }
            parts[remap[label[i]]].push_back(i);
        }
    }

    Matrix core(nc, nc);
    for (const auto& part : parts) {
        VecR x(part.size()), phi(part.size());
        for (Rational& v : x) v = detail::draw_positive_value(rng, spec);
        for (Rational& v : phi) v = detail::draw_positive_value(rng, spec);
        const Rational scale = dot(phi, x);
        for (Rational& v : phi) v /= scale;
        for (std::size_t a = 0; a < part.size(); ++a)
            for (std::size_t b = 0; b < part.size(); ++b)
                core(part[a], part[b]) = x[a] * phi[b];
    }

    // X0 rows and Y0 columns are forced nonzero via a designated entry.
    Matrix x0(nk, nc);
    for (std::size_t i = 0; i < nk; ++i) {
        const std::size_t designated = rng.below(nc);
        x0(i, designated) = detail::draw_positive_value(rng, spec);
        for (std::size_t j = 0; j < nc; ++j) {
            if (j == designated) continue;
            if (detail::draw_bernoulli(rng, spec.density))
                x0(i, j) = detail::draw_positive_value(rng, spec);
        }
    }
    Matrix y0(nc, nd);
    for (std::size_t j = 0; j < nd; ++j) {
        const std::size_t designated = rng.below(nc);
        y0(designated, j) = detail::draw_positive_value(rng, spec);
        for (std::size_t i = 0; i < nc; ++i) {
            if (i == designated) continue;
            if (detail::draw_bernoulli(rng, spec.density))
                y0(i, j) = detail::draw_positive_value(rng, spec);
        }
    }

    const Matrix x = x0 * core;
    const Matrix y = core * y0;
    const Matrix corner = x * y;

    Matrix p(spec.n, spec.n);
    for (std::size_t i = 0; i < nk; ++i) {
        for (std::size_t j = 0; j < nc; ++j) p(i, nk + j) = x(i, j);
        for (std::size_t j = 0; j < nd; ++j) p(i, nk + nc + j) = corner(i, j);
    }
    for (std::size_t i = 0; i < nc; ++i) {
        for (std::size_t j = 0; j < nc; ++j) p(nk + i, nk + j) = core(i, j);
        for (std::size_t j = 0; j < nd; ++j) p(nk + i, nk + nc + j) = y(i, j);
    }

    if (!verify_idempotent(p)) throw InternalError("gen_idempotent: assembled matrix is not idempotent");
    return p;
}

/// k upper-triangular draws conjugated by one shared random permutation;
/// the shared frame makes the family commonly triangularizable by
/// construction. The frame is drawn first, then each matrix in order.
inline std::vector<Matrix> gen_semigroup_framed(const GenSpec& spec, std::size_t k) {
    spec.validate();
    if (spec.mode != GenMode::semigroup_framed)
        throw DomainError("gen_semigroup_framed: spec mode must be semigroup_framed");
    if (k < 1) throw DomainError("gen_semigroup_framed: k must be >= 1");
    SplitMix64 rng(spec.seed);
    const Permutation frame = detail::draw_permutation(rng, spec.n);
    std::vector<Matrix> family;
    family.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        family.push_back(permute_similarity(detail::draw_entries(rng, spec, true), frame));
    return family;
}

}  // namespace latticetri
