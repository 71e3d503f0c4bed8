#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "latticetri/errors.hpp"
#include "latticetri/matrix.hpp"

namespace latticetri {

/// Partition of {0,...,n-1} into disjoint nonempty blocks; each block stands
/// for a diagonal 0/1 projection, and the blocks sum to the identity.
struct Partition {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> blocks;

    /// Restricted-growth string -> blocks in order of first appearance.
    static Partition from_rgs(const std::vector<std::size_t>& rgs) {
        Partition p;
        p.n = rgs.size();
        for (std::size_t i = 0; i < rgs.size(); ++i) {
            if (rgs[i] >= p.blocks.size()) p.blocks.resize(rgs[i] + 1);
            p.blocks[rgs[i]].push_back(i);
        }
        return p;
    }

    /// sum_i P_i m P_i: keeps entry (i, j) iff i and j share a block.
    Matrix block_restriction(const Matrix& m) const {
        std::vector<std::size_t> block_of(n);
        for (std::size_t b = 0; b < blocks.size(); ++b)
            for (std::size_t v : blocks[b]) block_of[v] = b;
        Matrix out(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (block_of[i] == block_of[j]) out(i, j) = m(i, j);
        return out;
    }
};

namespace detail {

template <typename Fn>
void rgs_recurse(std::vector<std::size_t>& rgs, std::size_t pos, std::size_t max_label, Fn&& fn) {
    if (pos == rgs.size()) {
        fn(const_cast<const std::vector<std::size_t>&>(rgs));
        return;
    }
    for (std::size_t label = 0; label <= max_label + 1; ++label) {
        rgs[pos] = label;
        rgs_recurse(rgs, pos + 1, std::max(max_label, label), fn);
    }
}

}  // namespace detail

/// Enumerates all set partitions of {0,...,n-1} in canonical restricted-
/// growth-string order (Bell(n) many), invoking fn with each RGS.
template <typename Fn>
void for_each_set_partition(std::size_t n, Fn&& fn) {
    if (n == 0) return;
    std::vector<std::size_t> rgs(n, 0);
    // First position is always label 0; recurse over the rest.
    detail::rgs_recurse(rgs, 1, 0, fn);
}

inline std::size_t count_set_partitions(std::size_t n) {
    std::size_t count = 0;
    for_each_set_partition(n, [&](const std::vector<std::size_t>&) { ++count; });
    return count;
}

}  // namespace latticetri
