#ifndef PPT_CIRCUITS_HPP
#define PPT_CIRCUITS_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "set_systems.hpp"

namespace ppt {

/// Cyclic word in which every letter occurs exactly twice; read as an Euler
/// circuit of a 2-in, 2-out digraph.
class DoubleOccurrenceString {
public:
    DoubleOccurrenceString() = default;

    explicit DoubleOccurrenceString(std::vector<std::string> letters) : letters_(std::move(letters)) {
        if (letters_.empty()) throw parse_error("double occurrence string is empty");
        std::map<std::string, std::size_t> counts;
        for (const auto& l : letters_) ++counts[l];
        std::vector<std::string> alphabet;
        for (const auto& [l, c] : counts) {
            if (c != 2)
                throw parse_error("letter '" + l + "' occurs " + std::to_string(c) +
                                  " times; a double occurrence string needs exactly 2");
            alphabet.push_back(l);
        }
        alphabet_ = Domain(std::move(alphabet));
        occurrences_.assign(alphabet_.size(), {letters_.size(), letters_.size()});
        positions_.resize(letters_.size());
        for (std::size_t p = 0; p < letters_.size(); ++p) {
            const auto v = alphabet_.index_of(letters_[p]);
            positions_[p] = v;
            auto& occ = occurrences_[v];
            (occ[0] == letters_.size() ? occ[0] : occ[1]) = p;
        }
    }

    /// Single-character letters when the text has no whitespace, otherwise
    /// whitespace-separated tokens.
    static DoubleOccurrenceString parse(std::string_view text) {
        std::vector<std::string> letters;
        const bool tokenised = std::any_of(text.begin(), text.end(),
                                           [](unsigned char c) { return std::isspace(c); });
        if (tokenised) {
            std::istringstream in{std::string(text)};
            for (std::string tok; in >> tok;) letters.push_back(tok);
        } else {
            for (char c : text) letters.emplace_back(1, c);
        }
        return DoubleOccurrenceString(std::move(letters));
    }

    const std::vector<std::string>& letters() const noexcept { return letters_; }
    const Domain& alphabet() const noexcept { return alphabet_; }
    std::size_t length() const noexcept { return letters_.size(); }
    /// Alphabet index of the letter at position p.
    std::size_t vertex_at(std::size_t p) const { return positions_[p]; }
    /// The two positions of letter v, ascending.
    const std::array<std::size_t, 2>& occurrences(std::size_t v) const { return occurrences_[v]; }

    std::string str() const {
        const bool single = std::all_of(letters_.begin(), letters_.end(),
                                        [](const std::string& l) { return l.size() == 1; });
        std::string out;
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            if (!single && i > 0) out += ' ';
            out += letters_[i];
        }
        return out;
    }

private:
    std::vector<std::string> letters_;
    Domain alphabet_;
    std::vector<std::size_t> positions_;
    std::vector<std::array<std::size_t, 2>> occurrences_;
};

/// O_s: u ~ v iff their occurrences interleave (u v u v or v u v u).
inline Graph overlap_graph(const DoubleOccurrenceString& s) {
    const auto& d = s.alphabet();
    std::vector<mask_t> rows(d.size(), 0);
    for (std::size_t u = 0; u < d.size(); ++u)
        for (std::size_t v = u + 1; v < d.size(); ++v) {
            const auto [u1, u2] = s.occurrences(u);
            const auto [v1, v2] = s.occurrences(v);
            const bool interleaved = (u1 < v1 && v1 < u2 && u2 < v2) || (v1 < u1 && u1 < v2 && v2 < u2);
            if (interleaved) {
                rows[u] |= bit(v);
                rows[v] |= bit(u);
            }
        }
    return Graph(BitMatrix::from_words(d, std::move(rows)));
}

struct Arc {
    std::size_t from = 0;
    std::size_t to = 0;
    friend bool operator==(const Arc&, const Arc&) = default;
};

/// Directed multigraph in which every vertex has in- and out-degree 2. Arc i
/// is the step from position i of the defining string to position i+1.
struct TwoInTwoOutDigraph {
    Domain vertices;
    std::vector<Arc> arcs;

    bool is_two_in_two_out() const {
        std::vector<int> in(vertices.size(), 0), out(vertices.size(), 0);
        for (const auto& a : arcs) {
            ++out[a.from];
            ++in[a.to];
        }
        return std::all_of(in.begin(), in.end(), [](int d) { return d == 2; }) &&
               std::all_of(out.begin(), out.end(), [](int d) { return d == 2; });
    }
};

inline TwoInTwoOutDigraph digraph_of(const DoubleOccurrenceString& s) {
    TwoInTwoOutDigraph g{s.alphabet(), {}};
    const std::size_t len = s.length();
    for (std::size_t p = 0; p < len; ++p) g.arcs.push_back({s.vertex_at(p), s.vertex_at((p + 1) % len)});
    return g;
}

/// Edge partition into closed walks. Each walk lists arc indices starting at
/// its smallest arc; walks are ordered by that first arc.
struct WalkPartition {
    std::vector<std::vector<std::size_t>> walks;
    SubsetMask inducing_set;

    std::size_t size() const noexcept { return walks.size(); }
};

/// The partition induced by X in s: at a vertex outside X the walk continues
/// as s does (arc into visit k leaves by the arc out of visit k); at a vertex in
/// X the two visits are crossed.
inline WalkPartition trace_partition(const DoubleOccurrenceString& s, const SubsetMask& x) {
    require_same_domain(s.alphabet(), x.domain(), "trace_partition");
    const std::size_t len = s.length();

    // Arc p enters position p+1. Successor arc of p under the chosen routes.
    std::vector<std::size_t> next(len);
    for (std::size_t p = 0; p < len; ++p) {
        const std::size_t at = (p + 1) % len;
        const std::size_t v = s.vertex_at(at);
        if (!x.contains(v)) {
            next[p] = at;
        } else {
            const auto& occ = s.occurrences(v);
            next[p] = occ[0] == at ? occ[1] : occ[0];
        }
    }

    WalkPartition part{{}, x};
    std::vector<bool> used(len, false);
    for (std::size_t start = 0; start < len; ++start) {
        if (used[start]) continue;
        auto& walk = part.walks.emplace_back();
        for (std::size_t a = start; !used[a]; a = next[a]) {
            used[a] = true;
            walk.push_back(a);
        }
    }
    return part;
}

/// Letters visited by a walk, one per arc (the arc's tail).
inline std::vector<std::string> walk_letters(const DoubleOccurrenceString& s,
                                             const std::vector<std::size_t>& walk) {
    std::vector<std::string> out;
    out.reserve(walk.size());
    for (auto a : walk) out.push_back(s.letters()[a]);
    return out;
}

/// Lexicographically least rotation. Reversal is not identified.
inline std::vector<std::string> canonical_rotation(const std::vector<std::string>& word) {
    std::vector<std::string> best = word;
    std::vector<std::string> cur = word;
    for (std::size_t r = 1; r < word.size(); ++r) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

inline bool cyclically_equal(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    return a.size() == b.size() && canonical_rotation(a) == canonical_rotation(b);
}

struct CohnLempelPair {
    std::size_t walks = 0;
    std::size_t nullity_plus_one = 0;

    bool equal() const noexcept { return walks == nullity_plus_one; }
};

/// (number of walks induced by X in s, n(O_s[X]) + 1).
inline CohnLempelPair cohn_lempel_check(const DoubleOccurrenceString& s, const SubsetMask& x) {
    const auto part = trace_partition(s, x);
    const auto overlap = overlap_graph(s);
    return {part.size(), gf2_principal_nullity(overlap.rows(), x.bits()) + 1};
}

/// Entry i counts the subsets X whose induced partition has i + 1 walks.
inline NormVector walk_distribution(const DoubleOccurrenceString& s) {
    const auto& d = s.alphabet();
    require_enumerable(d.size(), "walk_distribution");
    NormVector dist{std::vector<std::uint64_t>(d.size() + 1, 0)};
    const std::size_t count = std::size_t{1} << d.size();
    for (std::size_t m = 0; m < count; ++m) {
        const auto walks = trace_partition(s, SubsetMask(d, m)).size();
        ++dist.counts.at(walks - 1);
    }
    return dist;
}

/// Number of Euler circuits (cyclic arc sequences, arcs distinguishable) by
/// backtracking from arc 0.
inline std::uint64_t count_euler_circuits(const TwoInTwoOutDigraph& g) {
    if (g.arcs.empty()) return 0;
    std::vector<std::vector<std::size_t>> out(g.vertices.size());
    for (std::size_t a = 0; a < g.arcs.size(); ++a) out[g.arcs[a].from].push_back(a);

    std::vector<bool> used(g.arcs.size(), false);
    const std::size_t origin = g.arcs[0].from;
    std::uint64_t circuits = 0;

    auto extend = [&](auto&& self, std::size_t vertex, std::size_t placed) -> void {
        if (placed == g.arcs.size()) {
            if (vertex == origin) ++circuits;
            return;
        }
        for (auto a : out[vertex]) {
            if (used[a]) continue;
            used[a] = true;
            self(self, g.arcs[a].to, placed + 1);
            used[a] = false;
        }
    };
    used[0] = true;
    extend(extend, g.arcs[0].to, 1);
    return circuits;
}

} // namespace ppt

#endif // PPT_CIRCUITS_HPP
