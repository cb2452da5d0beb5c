#ifndef PPT_GRAPH_HPP
#define PPT_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <deque>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pivot.hpp"
#include "set_systems.hpp"

namespace ppt {

/// Undirected graph with possible loops, stored as its symmetric GF(2)
/// adjacency matrix: a diagonal 1 is a loop.
class Graph {
public:
    Graph() = default;

    explicit Graph(BitMatrix adjacency) : adj_(std::move(adjacency)) {
        if (!adj_.is_symmetric()) throw domain_error("graph adjacency matrix must be symmetric");
    }

    /// Edges as label pairs; {u,u} is a loop.
    static Graph from_edges(const Domain& d,
                            const std::vector<std::pair<std::string, std::string>>& edges) {
        std::vector<mask_t> rows(d.size(), 0);
        for (const auto& [u, v] : edges) {
            const auto i = d.index_of(u), j = d.index_of(v);
            rows[i] |= bit(j);
            rows[j] |= bit(i);
        }
        return Graph(BitMatrix::from_words(d, std::move(rows)));
    }

    static Graph discrete(const Domain& d) { return Graph(BitMatrix(d)); }

    const Domain& domain() const noexcept { return adj_.domain(); }
    std::size_t size() const noexcept { return adj_.size(); }
    const BitMatrix& adjacency() const noexcept { return adj_; }
    std::span<const mask_t> rows() const { return adj_.words(); }

    bool has_loop(std::size_t u) const { return (adj_.row_word(u) >> u) & 1U; }
    bool adjacent(std::size_t u, std::size_t v) const { return (adj_.row_word(u) >> v) & 1U; }
    /// N(u): neighbours other than u itself.
    mask_t neighbours(std::size_t u) const { return adj_.row_word(u) & ~bit(u); }
    mask_t loops() const {
        mask_t m = 0;
        for (std::size_t u = 0; u < size(); ++u)
            if (has_loop(u)) m |= bit(u);
        return m;
    }
    bool is_discrete() const {
        return std::all_of(rows().begin(), rows().end(), [](mask_t r) { return r == 0; });
    }

    /// Edge list in domain order, loops as (u,u).
    std::vector<std::pair<std::size_t, std::size_t>> edges() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t u = 0; u < size(); ++u)
            for_each_bit(adj_.row_word(u) & ~full_mask(u), [&](std::size_t v) { out.emplace_back(u, v); });
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    BitMatrix adj_;
};

/// G \ Y = G[V \ Y].
inline Graph delete_vertices(const Graph& g, const SubsetMask& y) {
    return Graph(principal_submatrix(g.adjacency(), y.complement()));
}

namespace detail {

// Word-level elementary pivots. `rows` is a symmetric adjacency matrix.

inline void local_complement_rows(std::vector<mask_t>& rows, std::size_t u) {
    const mask_t n = rows[u] & ~bit(u);
    for_each_bit(n, [&](std::size_t v) { rows[v] ^= n; });
}

inline void edge_complement_rows(std::vector<mask_t>& rows, std::size_t u, std::size_t v) {
    const mask_t nu = rows[u] | bit(u);
    const mask_t nv = rows[v] | bit(v);
    const mask_t v1 = nu & ~nv, v2 = nv & ~nu, v3 = nu & nv;
    for_each_bit(v1, [&](std::size_t x) { rows[x] ^= v2 | v3; });
    for_each_bit(v2, [&](std::size_t x) { rows[x] ^= v1 | v3; });
    for_each_bit(v3, [&](std::size_t x) { rows[x] ^= v1 | v2; });
}

inline std::vector<mask_t> rows_of(const Graph& g) { return {g.rows().begin(), g.rows().end()}; }

} // namespace detail

/// G*{u}: complements every edge and loop inside N(u). Requires a loop at u.
inline Graph local_complement(const Graph& g, std::size_t u) {
    if (!g.has_loop(u))
        throw elementary_pivot_error("elementary pivot undefined: no loop at " + g.domain().label(u));
    auto rows = detail::rows_of(g);
    detail::local_complement_rows(rows, u);
    return Graph(BitMatrix::from_words(g.domain(), std::move(rows)));
}

inline Graph local_complement(const Graph& g, std::string_view u) {
    return local_complement(g, g.domain().index_of(u));
}

/// G*{u,v} for an edge between two loopless vertices: toggles every pair drawn
/// from different classes of N'(u)\N'(v), N'(v)\N'(u), N'(u)&N'(v).
inline Graph edge_complement(const Graph& g, std::size_t u, std::size_t v) {
    const auto& d = g.domain();
    if (u == v || !g.adjacent(u, v) || g.has_loop(u) || g.has_loop(v))
        throw elementary_pivot_error("elementary pivot undefined: {" + d.label(u) + "," + d.label(v) +
                                     "} is not an edge between loopless vertices");
    auto rows = detail::rows_of(g);
    detail::edge_complement_rows(rows, u, v);
    return Graph(BitMatrix::from_words(d, std::move(rows)));
}

inline Graph edge_complement(const Graph& g, std::string_view u, std::string_view v) {
    return edge_complement(g, g.domain().index_of(u), g.domain().index_of(v));
}

/// Applies an elementary pivot given as a one- or two-element mask.
inline Graph elementary_pivot(const Graph& g, mask_t part) {
    const auto u = static_cast<std::size_t>(std::countr_zero(part));
    switch (std::popcount(part)) {
    case 1: return local_complement(g, u);
    case 2: return edge_complement(g, u, static_cast<std::size_t>(63 - std::countl_zero(part)));
    default: throw elementary_pivot_error("elementary pivot must have one or two vertices");
    }
}

/// G*Y for graphs, through the block formula.
inline Graph pivot(const Graph& g, const SubsetMask& y) { return Graph(pivot(g.adjacency(), y)); }

/// Splits Y (with G[Y] nonsingular) into loops and loopless edges whose
/// elementary pivots, applied left to right, give G*Y.
///
/// Each step takes the smallest looped vertex still in Y, else the
/// lexicographically smallest edge inside Y; a candidate is only taken if the
/// remainder stays nonsingular in the pivoted graph.
inline std::vector<SubsetMask> elementary_decomposition(const Graph& g, const SubsetMask& y) {
    require_same_domain(g.domain(), y.domain(), "elementary_decomposition");
    if (principal_nullity(g.adjacency(), y.bits()) != 0)
        throw pivot_undefined_error(y.bits(), to_string(y));

    std::vector<SubsetMask> parts;
    auto rows = detail::rows_of(g);
    mask_t remaining = y.bits();

    auto try_part = [&](mask_t part) {
        auto next = rows;
        if (std::popcount(part) == 1)
            detail::local_complement_rows(next, static_cast<std::size_t>(std::countr_zero(part)));
        else
            detail::edge_complement_rows(next, static_cast<std::size_t>(std::countr_zero(part)),
                                         static_cast<std::size_t>(63 - std::countl_zero(part)));
        if (gf2_principal_nullity(next, remaining & ~part) != 0) return false;
        rows = std::move(next);
        remaining &= ~part;
        parts.emplace_back(g.domain(), part);
        return true;
    };

    while (remaining != 0) {
        bool progressed = false;
        for (std::size_t u = 0; u < g.size() && !progressed; ++u)
            if ((remaining & bit(u)) && ((rows[u] >> u) & 1U)) progressed = try_part(bit(u));
        for (std::size_t u = 0; u < g.size() && !progressed; ++u) {
            if (!(remaining & bit(u)) || ((rows[u] >> u) & 1U)) continue;
            for_each_bit(rows[u] & remaining & ~full_mask(u + 1), [&](std::size_t v) {
                if (!progressed && !((rows[v] >> v) & 1U)) progressed = try_part(bit(u) | bit(v));
            });
        }
        // Unreachable while G[remaining] stays nonsingular: a nonsingular
        // nonempty graph always has a loop or an edge.
        if (!progressed) throw pivot_undefined_error(remaining, format_label_set(g.domain(), remaining));
    }
    return parts;
}

/// Rebuilds G from M_G: {u} is a loop iff {u} is in M, and {u,v} is an edge
/// iff ({u,v} in M) xor ({u} in M and {v} in M). Input that is not M_G for any
/// graph yields an unspecified graph.
inline Graph graph_from_set_system(const SetSystem& m) {
    const std::size_t n = m.domain.size();
    std::vector<mask_t> rows(n, 0);
    for (std::size_t u = 0; u < n; ++u) {
        const bool loop_u = m.contains(bit(u));
        if (loop_u) rows[u] |= bit(u);
        for (std::size_t v = u + 1; v < n; ++v) {
            if (m.contains(bit(u) | bit(v)) != (loop_u && m.contains(bit(v)))) {
                rows[u] |= bit(v);
                rows[v] |= bit(u);
            }
        }
    }
    return Graph(BitMatrix::from_words(m.domain, std::move(rows)));
}

struct OrbitMove {
    std::size_t from = 0;
    std::size_t to = 0;
    mask_t on = 0;  // the elementary pivot, one vertex or two
};

struct PivotOrbit {
    std::vector<Graph> graphs;   // ordered by adjacency words
    std::vector<OrbitMove> moves;  // every applicable elementary pivot, sorted

    std::size_t index_of(const Graph& g) const {
        auto it = std::find(graphs.begin(), graphs.end(), g);
        if (it == graphs.end()) throw domain_error("graph not in orbit");
        return static_cast<std::size_t>(it - graphs.begin());
    }
};

inline constexpr std::size_t default_orbit_cap = 1'000'000;

/// Breadth-first closure of G under local and edge complementation. Graphs are
/// labelled, not taken up to isomorphism.
inline PivotOrbit pivot_orbit(const Graph& g, std::size_t cap = default_orbit_cap) {
    const std::size_t n = g.size();
    std::map<std::vector<mask_t>, std::size_t> seen;
    std::vector<std::vector<mask_t>> found;
    std::vector<OrbitMove> moves;
    std::deque<std::size_t> frontier;

    auto visit = [&](std::vector<mask_t> rows) {
        auto [it, inserted] = seen.emplace(std::move(rows), found.size());
        if (inserted) {
            if (found.size() >= cap)
                throw capacity_error("pivot orbit exceeds " + std::to_string(cap) + " graphs");
            found.push_back(it->first);
            frontier.push_back(it->second);
        }
        return it->second;
    };

    visit(detail::rows_of(g));
    while (!frontier.empty()) {
        const std::size_t cur = frontier.front();
        frontier.pop_front();
        const auto rows = found[cur];
        for (std::size_t u = 0; u < n; ++u) {
            const bool loop_u = (rows[u] >> u) & 1U;
            if (loop_u) {
                auto next = rows;
                detail::local_complement_rows(next, u);
                moves.push_back({cur, visit(std::move(next)), bit(u)});
                continue;
            }
            for_each_bit(rows[u] & ~full_mask(u + 1), [&](std::size_t v) {
                if ((rows[v] >> v) & 1U) return;
                auto next = rows;
                detail::edge_complement_rows(next, u, v);
                moves.push_back({cur, visit(std::move(next)), bit(u) | bit(v)});
            });
        }
    }

    // Canonical order: by adjacency words. `seen` already iterates that way.
    std::vector<std::size_t> rank_of(found.size());
    PivotOrbit orbit;
    for (const auto& [rows, idx] : seen) {
        rank_of[idx] = orbit.graphs.size();
        orbit.graphs.emplace_back(BitMatrix::from_words(g.domain(), rows));
    }
    for (auto& m : moves) {
        m.from = rank_of[m.from];
        m.to = rank_of[m.to];
    }
    std::sort(moves.begin(), moves.end(), [](const OrbitMove& a, const OrbitMove& b) {
        return std::tie(a.from, a.to, a.on) < std::tie(b.from, b.to, b.on);
    });
    orbit.moves = std::move(moves);
    return orbit;
}

} // namespace ppt

#endif // PPT_GRAPH_HPP
