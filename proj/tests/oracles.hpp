#pragma once

// Independent brute-force oracles for the test and acceptance suites.
// Nothing here shares code with the library paths it checks: the
// characteristic polynomial comes from cofactor expansion over polynomial
// entries, and invariant ideals from exhaustive subset enumeration.

#include <cstddef>
#include <span>
#include <vector>

#include "latticetri/matrix.hpp"

namespace oracles {

using latticetri::Matrix;
using latticetri::Rational;
using latticetri::VecR;

// Polynomials as ascending coefficient vectors, not necessarily monic.
using Poly = VecR;

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

inline Poly poly_negate(Poly a) {
    for (Rational& c : a) c = -c;
    return a;
}

inline Poly poly_det(const std::vector<std::vector<Poly>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Poly det;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Poly>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Poly> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Poly term = poly_mul(m[0][j], poly_det(minor));
        if (j % 2 == 1) term = poly_negate(std::move(term));
        det = poly_add(det, term);
    }
    return det;
}

/// det(xI - m) by cofactor expansion with polynomial entries; exponential,
/// fine for the n <= 7 oracle range. Returns ascending coefficients of
/// length n + 1 with leading coefficient 1.
inline Poly char_poly_cofactor(const Matrix& m) {
    const std::size_t n = m.dim();
    std::vector<std::vector<Poly>> entries(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) entries[i][j] = Poly{-m(i, j), Rational(1)};
            else entries[i][j] = Poly{-m(i, j)};
        }
    Poly det = poly_det(entries);
    det.resize(n + 1);
    return det;
}

/// All invariant coordinate subsets (as sorted index lists, including the
/// trivial ones) of a family, by exhaustive enumeration over 2^n subsets.
inline std::vector<std::vector<std::size_t>> invariant_subsets(std::span<const Matrix> mats) {
    const std::size_t n = mats.front().dim();
    std::vector<std::vector<std::size_t>> result;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        bool invariant = true;
        for (const Matrix& m : mats) {
            for (std::size_t i = 0; i < n && invariant; ++i) {
                if (mask & (std::size_t{1} << i)) continue;
                for (std::size_t j = 0; j < n && invariant; ++j)
                    if ((mask & (std::size_t{1} << j)) && m(i, j) != 0) invariant = false;
            }
        }
        if (!invariant) continue;
        std::vector<std::size_t> subset;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) subset.push_back(i);
        result.push_back(std::move(subset));
    }
    return result;
}

}  // namespace oracles
