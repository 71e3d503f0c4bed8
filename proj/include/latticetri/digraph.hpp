#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <span>
#include <vector>

#include "latticetri/errors.hpp"
#include "latticetri/matrix.hpp"

namespace latticetri {

/// Combinatorial shadow of a matrix family: vertex j has an edge to vertex i
/// exactly when some matrix has entry (i, j) != 0, i.e. coordinate j feeds
/// coordinate i under the operator. Self-loops record nonzero diagonals.
class SupportDigraph {
public:
    explicit SupportDigraph(std::size_t n) : n_(n), adjacency_(n, std::vector<bool>(n, false)) {}

    static SupportDigraph of(const Matrix& m) {
        require_square(m, "SupportDigraph");
        SupportDigraph g(m.dim());
        for (std::size_t i = 0; i < m.dim(); ++i)
            for (std::size_t j = 0; j < m.dim(); ++j)
                if (m(i, j) != 0) g.add_edge(j, i);
        return g;
    }

    std::size_t size() const { return n_; }

    void add_edge(std::size_t from, std::size_t to) {
        if (from >= n_ || to >= n_) throw DomainError("SupportDigraph: vertex out of range");
        adjacency_[from][to] = true;
    }

    bool has_edge(std::size_t from, std::size_t to) const { return adjacency_[from][to]; }

    std::vector<std::size_t> out_neighbors(std::size_t v) const {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < n_; ++w)
            if (adjacency_[v][w]) out.push_back(w);
        return out;
    }

    std::size_t edge_count() const {
        std::size_t count = 0;
        for (const auto& row : adjacency_)
            count += static_cast<std::size_t>(std::count(row.begin(), row.end(), true));
        return count;
    }

    bool has_self_loop() const {
        for (std::size_t v = 0; v < n_; ++v)
            if (adjacency_[v][v]) return true;
        return false;
    }

private:
    std::size_t n_;
    std::vector<std::vector<bool>> adjacency_;
};

/// Union of the nonzero patterns of a nonnegative family on one space.
inline SupportDigraph support_union(std::span<const Matrix> mats) {
    if (mats.empty()) throw DomainError("support_union: empty family");
    require_square(mats.front(), "support_union");
    const std::size_t n = mats.front().dim();
    SupportDigraph g(n);
    for (const Matrix& m : mats) {
        require_square(m, "support_union");
        if (m.dim() != n) throw DomainError("support_union: dimension mismatch");
        require_nonnegative(m, "support_union");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (m(i, j) != 0) g.add_edge(j, i);
    }
    return g;
}

/// Strongly connected components with a canonical part order: parts are
/// listed so that every prefix union is closed under out-edges (hence is an
/// invariant coordinate set), choosing at each step the eligible part with
/// the smallest contained vertex. Members of each part are sorted ascending.
struct SccCondensation {
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> part_of;    // vertex -> index into parts
    std::vector<bool> part_is_sink;      // no out-edge to another part
    bool all_singletons() const {
        for (const auto& p : parts)
            if (p.size() != 1) return false;
        return true;
    }
    /// Concatenation of the parts; for all-singleton condensations this is
    /// the triangularizing coordinate order.
    std::vector<std::size_t> vertex_order() const {
        std::vector<std::size_t> order;
        order.reserve(part_of.size());
        for (const auto& p : parts) order.insert(order.end(), p.begin(), p.end());
        return order;
    }
};

namespace detail {

struct TarjanContext {
    const SupportDigraph& graph;
    std::vector<std::size_t> index, lowlink;
    std::vector<bool> on_stack;
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> components;
    std::size_t counter = 0;
    static constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);

    explicit TarjanContext(const SupportDigraph& g)
        : graph(g),
          index(g.size(), kUnvisited),
          lowlink(g.size(), 0),
          on_stack(g.size(), false) {}

    void strongconnect(std::size_t v) {
        index[v] = lowlink[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (std::size_t w = 0; w < graph.size(); ++w) {
            if (!graph.has_edge(v, w)) continue;
            if (index[w] == kUnvisited) {
                strongconnect(w);
                lowlink[v] = std::min(lowlink[v], lowlink[w]);
            } else if (on_stack[w]) {
                lowlink[v] = std::min(lowlink[v], index[w]);
            }
        }
        if (lowlink[v] == index[v]) {
            std::vector<std::size_t> component;
            std::size_t w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                component.push_back(w);
            } while (w != v);
            std::sort(component.begin(), component.end());
            components.push_back(std::move(component));
        }
    }
};

}  // namespace detail

inline SccCondensation scc_condensation(const SupportDigraph& g) {
    const std::size_t n = g.size();
    detail::TarjanContext ctx(g);
    for (std::size_t v = 0; v < n; ++v)
        if (ctx.index[v] == detail::TarjanContext::kUnvisited) ctx.strongconnect(v);

    const std::size_t k = ctx.components.size();
    std::vector<std::size_t> raw_part_of(n);
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t v : ctx.components[c]) raw_part_of[v] = c;

    // Condensation adjacency between distinct components.
    std::vector<std::set<std::size_t>> successors(k), predecessors(k);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t w = 0; w < n; ++w) {
            if (!g.has_edge(v, w) || raw_part_of[v] == raw_part_of[w]) continue;
            successors[raw_part_of[v]].insert(raw_part_of[w]);
            predecessors[raw_part_of[w]].insert(raw_part_of[v]);
        }
    }

    // Kahn on the reversed condensation: a part becomes eligible once all of
    // its successors are placed, so prefixes are successor-closed. The
    // min-vertex key makes the order canonical.
    std::vector<std::size_t> remaining(k);
    std::set<std::pair<std::size_t, std::size_t>> eligible;  // (min vertex, raw part)
    for (std::size_t c = 0; c < k; ++c) {
        remaining[c] = successors[c].size();
        if (remaining[c] == 0) eligible.insert({ctx.components[c].front(), c});
    }

    SccCondensation result;
    result.part_of.assign(n, 0);
    std::vector<bool> raw_is_sink(k);
    for (std::size_t c = 0; c < k; ++c) raw_is_sink[c] = successors[c].empty();

    while (!eligible.empty()) {
        const auto [min_vertex, c] = *eligible.begin();
        eligible.erase(eligible.begin());
        result.part_is_sink.push_back(raw_is_sink[c]);
        for (std::size_t v : ctx.components[c]) result.part_of[v] = result.parts.size();
        result.parts.push_back(ctx.components[c]);
        for (std::size_t p : predecessors[c]) {
            if (--remaining[p] == 0) eligible.insert({ctx.components[p].front(), p});
        }
    }
    if (result.parts.size() != k) throw InternalError("scc_condensation: ordering incomplete");
    return result;
}

}  // namespace latticetri
