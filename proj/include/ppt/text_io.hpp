#ifndef PPT_TEXT_IO_HPP
#define PPT_TEXT_IO_HPP

#include <istream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "graph.hpp"
#include "set_systems.hpp"

namespace ppt {

using AnyMatrix = std::variant<BitMatrix, RationalMatrix>;

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

/// Next line that is neither blank nor a `#` comment, split on whitespace.
inline bool next_tokens(std::istream& in, std::vector<std::string>& tokens) {
    for (std::string line; std::getline(in, line);) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        tokens = split_ws(line);
        if (!tokens.empty()) return true;
    }
    return false;
}

template <class T>
Matrix<T> read_entries(std::istream& in, const std::vector<std::string>& file_labels, const Domain& d) {
    const std::size_t n = file_labels.size();
    std::vector<std::size_t> index(n);
    for (std::size_t i = 0; i < n; ++i) index[i] = d.index_of(file_labels[i]);
    Matrix<T> m(d);
    std::vector<std::string> tokens;
    for (std::size_t r = 0; r < n; ++r) {
        if (!next_tokens(in, tokens))
            throw parse_error("matrix file ends after " + std::to_string(r) + " of " + std::to_string(n) +
                              " rows");
        if (tokens.size() != n)
            throw parse_error("row " + std::to_string(r + 1) + " has " + std::to_string(tokens.size()) +
                              " entries, expected " + std::to_string(n));
        for (std::size_t c = 0; c < n; ++c) m.set(index[r], index[c], field_traits<T>::parse(tokens[c]));
    }
    if (next_tokens(in, tokens)) throw parse_error("trailing content after matrix rows");
    return m;
}

} // namespace detail

/// Matrix text format:
///   field f2|q
///   <labels>            rows and columns of the file follow this order
///   <n rows of n entries: 0/1 over f2, integers or p/q over q>
/// The returned matrix is laid out in sorted label order.
inline AnyMatrix parse_matrix(std::istream& in) {
    std::vector<std::string> tokens;
    if (!detail::next_tokens(in, tokens) || tokens.size() != 2 || tokens[0] != "field")
        throw parse_error("matrix file must start with 'field f2' or 'field q'");
    const std::string field = tokens[1];
    if (field != "f2" && field != "q") throw parse_error("unknown field '" + field + "'");
    std::vector<std::string> labels;
    if (!detail::next_tokens(in, labels)) throw parse_error("matrix file is missing its label line");
    const Domain d(labels);
    if (field == "f2") return detail::read_entries<Bit>(in, labels, d);
    return detail::read_entries<Rational>(in, labels, d);
}

inline AnyMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

template <class T>
std::string format_matrix(const Matrix<T>& m) {
    std::string out = "field " + std::string(field_traits<T>::tag) + "\n";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i > 0) out += ' ';
        out += m.domain().label(i);
    }
    out += '\n';
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (j > 0) out += ' ';
            out += field_traits<T>::format(m.at(i, j));
        }
        out += '\n';
    }
    return out;
}

inline std::string format_matrix(const AnyMatrix& m) {
    return std::visit([](const auto& a) { return format_matrix(a); }, m);
}

/// Graph text format:
///   graph
///   <labels>
///   u v      one line per edge; `u u` is a loop
inline Graph parse_graph(std::istream& in) {
    std::vector<std::string> tokens;
    if (!detail::next_tokens(in, tokens) || tokens.size() != 1 || tokens[0] != "graph")
        throw parse_error("graph file must start with 'graph'");
    std::vector<std::string> labels;
    if (!detail::next_tokens(in, labels)) throw parse_error("graph file is missing its label line");
    const Domain d(labels);
    std::vector<std::pair<std::string, std::string>> edges;
    while (detail::next_tokens(in, tokens)) {
        if (tokens.size() != 2) throw parse_error("edge line must have two labels");
        for (const auto& t : tokens)
            if (!d.find(t)) throw parse_error("edge mentions unknown label '" + t + "'");
        edges.emplace_back(tokens[0], tokens[1]);
    }
    return Graph::from_edges(d, edges);
}

inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

inline std::string format_graph(const Graph& g) {
    std::string out = "graph\n";
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i > 0) out += ' ';
        out += g.domain().label(i);
    }
    out += '\n';
    for (const auto& [u, v] : g.edges()) out += g.domain().label(u) + ' ' + g.domain().label(v) + '\n';
    return out;
}

/// Comma-separated labels, e.g. `b,c`; the empty string is the empty set.
inline SubsetMask parse_label_list(const Domain& d, const std::string& text) {
    std::vector<std::string> labels;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) {
        if (cur.empty()) throw parse_error("empty label in list '" + text + "'");
        if (!d.find(cur)) throw parse_error("unknown label '" + cur + "'");
        labels.push_back(cur);
    }
    return SubsetMask::of(d, labels);
}

inline std::string format_norm(const NormVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.counts.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(v.counts[i]);
    }
    return out + ")";
}

/// One line `i: {S,S,...}` per nonempty class (members by mask value), then
/// `norm: (c0,...,cn)`.
inline std::string format_partition_sequence(const PartitionSequence& p, bool norm_only = false) {
    std::string out;
    if (!norm_only) {
        for (std::size_t i = 0; i < p.classes.size(); ++i) {
            if (p.classes[i].empty()) continue;
            out += std::to_string(i) + ": {";
            for (std::size_t k = 0; k < p.classes[i].size(); ++k) {
                if (k > 0) out += ',';
                out += format_label_set(p.domain, p.classes[i][k]);
            }
            out += "}\n";
        }
    }
    return out + "norm: " + format_norm(norm(p)) + "\n";
}

} // namespace ppt

#endif // PPT_TEXT_IO_HPP
