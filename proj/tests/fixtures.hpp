// Worked examples used across the test suites, transcribed by hand.
#ifndef PPT_TESTS_FIXTURES_HPP
#define PPT_TESTS_FIXTURES_HPP

#include <string>
#include <utility>
#include <vector>

#include <ppt/ppt.hpp>

namespace ppt::fixtures {

inline Rational q(long long num, long long den = 1) { return Rational(num, den); }

/// 3x3 rational matrix over {a,b,c}.
inline RationalMatrix example_matrix() {
    return RationalMatrix::from_rows(Domain({"a", "b", "c"}), {{q(1), q(2), q(5)},  //
                                                              {q(1), q(4), q(2)},
                                                              {q(3), q(2), q(1)}});
}

/// example_matrix() pivoted on {a,b}.
inline RationalMatrix example_matrix_pivot_ab() {
    return RationalMatrix::from_rows(Domain({"a", "b", "c"}), {{q(2), q(-1), q(-8)},  //
                                                              {q(-1, 2), q(1, 2), q(3, 2)},
                                                              {q(5), q(-2), q(-20)}});
}

inline Domain four() { return Domain({"1", "2", "3", "4"}); }

/// Graph on 1..4: edges 1-3, 2-3, 2-4, 3-4; loops at 2 and 3.
inline Graph four_vertex_graph() {
    return Graph::from_edges(four(), {{"1", "3"}, {"2", "3"}, {"2", "4"}, {"3", "4"}, {"2", "2"}, {"3", "3"}});
}

/// four_vertex_graph() pivoted on {1,2,3}: edges 1-2, 1-3, 2-4; loops at 2 and 4.
inline Graph four_vertex_graph_pivoted() {
    return Graph::from_edges(four(), {{"1", "2"}, {"1", "3"}, {"2", "4"}, {"2", "2"}, {"4", "4"}});
}

using SetList = std::vector<std::vector<std::string>>;

/// Partition sequence of four_vertex_graph(), classes 0..4.
inline std::vector<SetList> four_vertex_partition() {
    return {
        {{}, {"2"}, {"3"}, {"1", "3"}, {"2", "4"}, {"3", "4"}, {"1", "2", "3"}, {"1", "2", "3", "4"}},
        {{"1"}, {"4"}, {"1", "2"}, {"2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"}},
        {{"1", "4"}},
        {},
        {},
    };
}

/// Partition sequence of four_vertex_graph_pivoted().
inline std::vector<SetList> four_vertex_pivoted_partition() {
    return {
        {{}, {"2"}, {"4"}, {"1", "2"}, {"1", "3"}, {"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}},
        {{"1"}, {"3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}, {"3", "4"}, {"1", "2", "3", "4"}},
        {{"2", "3", "4"}},
        {},
        {},
    };
}

/// Builds a PartitionSequence from label-set listings.
inline PartitionSequence partition_from_lists(const Domain& d, const std::vector<SetList>& lists) {
    PartitionSequence p{d, {}};
    for (const auto& cls : lists) {
        auto& masks = p.classes.emplace_back();
        for (const auto& set : cls) masks.push_back(SubsetMask::of(d, set).bits());
        std::sort(masks.begin(), masks.end());
    }
    return p;
}

inline Domain pqr() { return Domain({"p", "q", "r"}); }

// The five graphs of a pivot orbit on {p,q,r}.
inline Graph orbit_I() { return Graph::from_edges(pqr(), {{"p", "q"}, {"p", "r"}, {"q", "q"}}); }
inline Graph orbit_II() {
    return Graph::from_edges(pqr(), {{"p", "q"}, {"p", "r"}, {"p", "p"}, {"q", "q"}});
}
inline Graph orbit_III() {
    return Graph::from_edges(pqr(), {{"p", "q"}, {"p", "r"}, {"q", "r"}, {"p", "p"}, {"r", "r"}});
}
inline Graph orbit_IV() {
    return Graph::from_edges(pqr(), {{"p", "r"}, {"q", "r"}, {"q", "q"}, {"r", "r"}});
}
inline Graph orbit_V() { return Graph::from_edges(pqr(), {{"p", "r"}, {"q", "r"}, {"q", "q"}}); }

inline const char* circuit_string = "146543625123";
inline const char* rerouted_string = "123625146543";

/// Overlap graph of circuit_string.
inline Graph circuit_overlap_graph() {
    return Graph::from_edges(Domain({"1", "2", "3", "4", "5", "6"}), {{"1", "2"},
                                                                     {"1", "3"},
                                                                     {"2", "5"},
                                                                     {"3", "5"},
                                                                     {"4", "5"},
                                                                     {"5", "6"},
                                                                     {"3", "6"},
                                                                     {"4", "6"}});
}

/// Arcs of the 2-in, 2-out digraph traced by circuit_string, as label pairs.
inline std::vector<std::pair<std::string, std::string>> circuit_digraph_arcs() {
    return {{"1", "2"}, {"3", "1"}, {"2", "3"}, {"5", "4"}, {"4", "6"}, {"6", "5"},
            {"1", "4"}, {"5", "1"}, {"2", "5"}, {"6", "2"}, {"3", "6"}, {"4", "3"}};
}

} // namespace ppt::fixtures

#endif // PPT_TESTS_FIXTURES_HPP
