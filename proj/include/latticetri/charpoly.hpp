#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "latticetri/errors.hpp"
#include "latticetri/matrix.hpp"

namespace latticetri {

/// Monic polynomial with exact rational coefficients, stored ascending
/// (coefficient of x^k at index k). Houses spectra and algebraic
/// multiplicities without ever isolating roots numerically.
class CharPoly {
public:
    explicit CharPoly(VecR ascending_coefficients) : coeffs_(std::move(ascending_coefficients)) {
        if (coeffs_.empty() || coeffs_.back() != 1)
            throw DomainError("CharPoly: coefficients must be monic");
    }

    static CharPoly one() { return CharPoly(VecR{Rational(1)}); }

    /// prod_k (x - roots[k])
    static CharPoly from_linear_factors(std::span<const Rational> roots) {
        VecR c{Rational(1)};
        for (const Rational& r : roots) {
            VecR next(c.size() + 1);
            for (std::size_t k = 0; k < c.size(); ++k) {
                next[k + 1] += c[k];
                next[k] -= r * c[k];
            }
            c = std::move(next);
        }
        return CharPoly(std::move(c));
    }

    std::size_t degree() const { return coeffs_.size() - 1; }
    const Rational& coeff(std::size_t k) const { return coeffs_[k]; }
    const VecR& coefficients() const { return coeffs_; }

    /// True iff the polynomial is x^n.
    bool is_power_of_x() const {
        for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k)
            if (coeffs_[k] != 0) return false;
        return true;
    }

    CharPoly operator*(const CharPoly& other) const {
        VecR prod(coeffs_.size() + other.coeffs_.size() - 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
                prod[i + j] += coeffs_[i] * other.coeffs_[j];
        }
        return CharPoly(std::move(prod));
    }

    bool operator==(const CharPoly& other) const { return coeffs_ == other.coeffs_; }
    bool operator!=(const CharPoly& other) const { return !(*this == other); }

private:
    VecR coeffs_;
};

/// det(xI - m) by the exact Faddeev-LeVerrier recursion; divisions are by
/// integers 1..n and stay exact over the rationals.
inline CharPoly char_poly(const Matrix& m) {
    require_square(m, "char_poly");
    const std::size_t n = m.dim();
    VecR c(n + 1);
    c[n] = 1;
    Matrix acc = m;
    for (std::size_t k = 1; k <= n; ++k) {
        c[n - k] = -acc.trace() / Rational(static_cast<unsigned>(k));
        if (k < n) {
            for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[n - k];
            acc = m * acc;
        }
    }
    return CharPoly(std::move(c));
}

/// Largest k with (x - lam)^k dividing p, by repeated exact synthetic division.
inline std::size_t root_multiplicity(const CharPoly& p, const Rational& lam) {
    VecR c = p.coefficients();
    std::size_t multiplicity = 0;
    while (c.size() > 1) {
        // Divide by (x - lam): quotient computed top-down, remainder last.
        VecR q(c.size() - 1);
        Rational carry = c.back();
        for (std::size_t k = c.size() - 1; k-- > 0;) {
            q[k] = carry;
            carry = c[k] + lam * carry;
        }
        if (carry != 0) break;
        ++multiplicity;
        c = std::move(q);
    }
    return multiplicity;
}

/// True iff m^n = 0 exactly (n = dimension), via repeated squaring.
inline bool is_nilpotent(const Matrix& m) {
    require_square(m, "is_nilpotent");
    Matrix power = m;
    std::size_t covered = 1;
    while (covered < m.dim()) {
        if (power.is_zero()) return true;
        power = power * power;
        covered *= 2;
    }
    return power.is_zero();
}

struct SpectralRadiusEstimate {
    double value = 0.0;
    bool converged = false;
    std::size_t iterations = 0;
};

/// Floating-point power iteration on |m| + I, for reporting only; exact
/// decisions never consult this. The +I shift removes period oscillation
/// for nonnegative matrices, and r(|m| + I) = r(|m|) + 1.
inline SpectralRadiusEstimate spectral_radius_estimate(const Matrix& m) {
    require_square(m, "spectral_radius_estimate");
    const std::size_t n = m.dim();
    std::vector<std::vector<double>> b(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            b[i][j] = std::abs(to_double(m(i, j))) + (i == j ? 1.0 : 0.0);

    constexpr double kRelTol = 1e-12;
    constexpr std::size_t kMaxIterations = 100000;

    std::vector<double> v(n, 1.0), w(n);
    double lambda_prev = 0.0;
    SpectralRadiusEstimate est;
    for (std::size_t it = 1; it <= kMaxIterations; ++it) {
        double lambda = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < n; ++j) s += b[i][j] * v[j];
            w[i] = s;
            if (s > lambda) lambda = s;
        }
        est.iterations = it;
        est.value = lambda - 1.0;
        if (it > 1 && std::abs(lambda - lambda_prev) <= kRelTol * std::max(1.0, lambda)) {
            est.converged = true;
            return est;
        }
        lambda_prev = lambda;
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / lambda;
    }
    return est;  // flagged (converged = false), never an error
}

}  // namespace latticetri
