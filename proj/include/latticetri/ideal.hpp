#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "latticetri/errors.hpp"

namespace latticetri {

/// A coordinate subset of {0,...,n-1}, standing for the order-closed ideal
/// spanned by the selected standard basis atoms. In finite dimension every
/// closed ideal is of this form, so all ideal computations are exact
/// combinatorics.
class CoordIdeal {
public:
    CoordIdeal(std::size_t ambient, std::vector<std::size_t> members)
        : n_(ambient), members_(std::move(members)) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
        if (!members_.empty() && members_.back() >= n_)
            throw DomainError("CoordIdeal: member out of range");
    }

    static CoordIdeal empty(std::size_t ambient) { return CoordIdeal(ambient, {}); }

    static CoordIdeal full(std::size_t ambient) {
        std::vector<std::size_t> all(ambient);
        std::iota(all.begin(), all.end(), 0);
        return CoordIdeal(ambient, std::move(all));
    }

    std::size_t ambient() const { return n_; }
    std::size_t size() const { return members_.size(); }
    const std::vector<std::size_t>& members() const { return members_; }

    bool contains(std::size_t i) const {
        return std::binary_search(members_.begin(), members_.end(), i);
    }

    bool is_empty() const { return members_.empty(); }
    bool is_full() const { return members_.size() == n_; }
    bool is_trivial() const { return is_empty() || is_full(); }

    /// The disjoint complement (the ideal's band complement).
    CoordIdeal complement() const {
        std::vector<std::size_t> rest;
        rest.reserve(n_ - members_.size());
        for (std::size_t i = 0; i < n_; ++i)
            if (!contains(i)) rest.push_back(i);
        return CoordIdeal(n_, std::move(rest));
    }

    CoordIdeal set_union(const CoordIdeal& other) const {
        require_same_ambient(other);
        std::vector<std::size_t> out;
        std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                       other.members_.end(), std::back_inserter(out));
        return CoordIdeal(n_, std::move(out));
    }

    CoordIdeal set_intersection(const CoordIdeal& other) const {
        require_same_ambient(other);
        std::vector<std::size_t> out;
        std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                              other.members_.end(), std::back_inserter(out));
        return CoordIdeal(n_, std::move(out));
    }

    CoordIdeal set_difference(const CoordIdeal& other) const {
        require_same_ambient(other);
        std::vector<std::size_t> out;
        std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                            other.members_.end(), std::back_inserter(out));
        return CoordIdeal(n_, std::move(out));
    }

    bool is_subset_of(const CoordIdeal& other) const {
        require_same_ambient(other);
        return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                             members_.end());
    }

    bool operator==(const CoordIdeal& other) const {
        return n_ == other.n_ && members_ == other.members_;
    }
    bool operator!=(const CoordIdeal& other) const { return !(*this == other); }

private:
    void require_same_ambient(const CoordIdeal& other) const {
        if (n_ != other.n_) throw DomainError("CoordIdeal: ambient dimensions differ");
    }

    std::size_t n_;
    std::vector<std::size_t> members_;
};

/// Strictly increasing chain of coordinate ideals from the zero ideal to the
/// whole space. A maximal chain adds one coordinate per step (length n + 1).
class IdealChain {
public:
    IdealChain(std::size_t ambient, std::vector<CoordIdeal> members)
        : n_(ambient), members_(std::move(members)) {
        if (members_.size() < 2 || !members_.front().is_empty() || !members_.back().is_full())
            throw DomainError("IdealChain: must run from the zero ideal to the full space");
        for (const CoordIdeal& j : members_)
            if (j.ambient() != n_) throw DomainError("IdealChain: ambient dimension mismatch");
        for (std::size_t k = 1; k < members_.size(); ++k) {
            if (!(members_[k - 1].is_subset_of(members_[k])) ||
                members_[k - 1].size() == members_[k].size())
                throw DomainError("IdealChain: members must strictly increase");
        }
    }

    /// The maximal chain whose step k adds coordinate order[k].
    static IdealChain full_flag(std::size_t ambient, const std::vector<std::size_t>& order) {
        std::vector<CoordIdeal> members;
        members.reserve(ambient + 1);
        std::vector<std::size_t> prefix;
        members.push_back(CoordIdeal::empty(ambient));
        for (std::size_t v : order) {
            prefix.push_back(v);
            members.push_back(CoordIdeal(ambient, prefix));
        }
        return IdealChain(ambient, std::move(members));
    }

    std::size_t ambient() const { return n_; }
    std::size_t length() const { return members_.size(); }
    const CoordIdeal& at(std::size_t k) const { return members_[k]; }
    const std::vector<CoordIdeal>& members() const { return members_; }
    bool is_maximal() const { return members_.size() == n_ + 1; }

    bool operator==(const IdealChain& other) const {
        return n_ == other.n_ && members_ == other.members_;
    }

private:
    std::size_t n_;
    std::vector<CoordIdeal> members_;
};

}  // namespace latticetri
