#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#include "latticetri/errors.hpp"
#include "latticetri/matrix.hpp"

namespace latticetri {

/// Bijection sigma on {0,...,n-1}. Conjugation convention throughout the
/// library: (P m P^{-1})(i, j) = m(sigma(i), sigma(j)), i.e. position i of
/// the conjugated matrix holds original coordinate sigma(i).
class Permutation {
public:
    explicit Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
        std::vector<bool> seen(image_.size(), false);
        for (std::size_t v : image_) {
            if (v >= image_.size() || seen[v]) throw DomainError("permutation is not bijective");
            seen[v] = true;
        }
    }

    static Permutation identity(std::size_t n) {
        std::vector<std::size_t> image(n);
        std::iota(image.begin(), image.end(), 0);
        return Permutation(std::move(image));
    }

    std::size_t size() const { return image_.size(); }
    std::size_t operator()(std::size_t i) const { return image_[i]; }
    const std::vector<std::size_t>& image() const { return image_; }

    bool is_identity() const {
        for (std::size_t i = 0; i < image_.size(); ++i)
            if (image_[i] != i) return false;
        return true;
    }

    Permutation inverse() const {
        std::vector<std::size_t> inv(image_.size());
        for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
        return Permutation(std::move(inv));
    }

    /// The matrix P with P(i, sigma(i)) = 1, so that P m P^T realizes the
    /// convention above. Used by tests to cross-check permute_similarity.
    Matrix to_matrix() const {
        Matrix p(image_.size(), image_.size());
        for (std::size_t i = 0; i < image_.size(); ++i) p(i, image_[i]) = 1;
        return p;
    }

    bool operator==(const Permutation& other) const { return image_ == other.image_; }

private:
    std::vector<std::size_t> image_;
};

/// Simultaneous row/column reindexing: result(i, j) = m(sigma(i), sigma(j)).
inline Matrix permute_similarity(const Matrix& m, const Permutation& sigma) {
    require_square(m, "permute_similarity");
    if (sigma.size() != m.dim()) throw DomainError("permute_similarity: dimension mismatch");
    Matrix out(m.dim(), m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = m(sigma(i), sigma(j));
    return out;
}

}  // namespace latticetri
