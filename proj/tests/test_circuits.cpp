#include <gtest/gtest.h>

#include <map>

#include "fixtures.hpp"
#include "oracles.hpp"

namespace ppt {
namespace {

using Word = std::vector<std::string>;

std::vector<Word> walk_words(const DoubleOccurrenceString& s, const WalkPartition& part) {
    std::vector<Word> out;
    for (const auto& w : part.walks) out.push_back(canonical_rotation(walk_letters(s, w)));
    std::sort(out.begin(), out.end());
    return out;
}

Word letters_of(const std::string& text) { return DoubleOccurrenceString::parse(text).letters(); }

TEST(DoubleOccurrenceString, Parsing) {
    const auto s = DoubleOccurrenceString::parse(fixtures::circuit_string);
    EXPECT_EQ(s.length(), 12u);
    EXPECT_EQ(s.alphabet().size(), 6u);
    EXPECT_EQ(s.str(), fixtures::circuit_string);
    const auto t = DoubleOccurrenceString::parse("ab cd ab cd");
    EXPECT_EQ(t.alphabet().labels(), (std::vector<std::string>{"ab", "cd"}));
    EXPECT_EQ(t.str(), "ab cd ab cd");
    EXPECT_THROW(DoubleOccurrenceString::parse("112"), parse_error);
    EXPECT_THROW(DoubleOccurrenceString::parse("111122"), parse_error);
    EXPECT_THROW(DoubleOccurrenceString::parse(""), parse_error);
}

TEST(OverlapGraph, WorkedValues) {
    EXPECT_EQ(overlap_graph(DoubleOccurrenceString::parse(fixtures::circuit_string)), fixtures::circuit_overlap_graph());
    EXPECT_TRUE(overlap_graph(DoubleOccurrenceString::parse("1122")).is_discrete());
    EXPECT_TRUE(overlap_graph(DoubleOccurrenceString::parse("1221")).is_discrete());
    const Domain d({"1", "2"});
    EXPECT_EQ(overlap_graph(DoubleOccurrenceString::parse("1212")), Graph::from_edges(d, {{"1", "2"}}));
}

TEST(Digraph, CircuitStringArcs) {
    const auto s = DoubleOccurrenceString::parse(fixtures::circuit_string);
    const auto g = digraph_of(s);
    EXPECT_TRUE(g.is_two_in_two_out());
    std::multiset<std::pair<std::string, std::string>> got, expected;
    for (const auto& a : g.arcs) got.emplace(g.vertices.label(a.from), g.vertices.label(a.to));
    for (const auto& a : fixtures::circuit_digraph_arcs()) expected.insert(a);
    EXPECT_EQ(got, expected);
}

TEST(Digraph, RandomStringsAreTwoInTwoOut) {
    Generator gen(501);
    for (int trial = 0; trial < 200; ++trial) {
        const auto s = gen.dos(gen.size_up_to(12));
        const auto g = digraph_of(s);
        ASSERT_EQ(g.arcs.size(), 2 * s.alphabet().size());
        ASSERT_TRUE(g.is_two_in_two_out());
    }
}

TEST(TracePartition, CircuitString) {
    const auto s = DoubleOccurrenceString::parse(fixtures::circuit_string);
    const auto& d = s.alphabet();
    EXPECT_EQ(trace_partition(s, SubsetMask::empty(d)).size(), 1u);
    EXPECT_EQ(trace_partition(s, SubsetMask::of(d, {"3", "4", "5", "6"})).size(), 3u);

    const auto rerouted = trace_partition(s, SubsetMask::of(d, {"1", "3"}));
    ASSERT_EQ(rerouted.size(), 1u);
    EXPECT_TRUE(cyclically_equal(walk_letters(s, rerouted.walks[0]), letters_of(fixtures::rerouted_string)));
}

TEST(TracePartition, WalksCoverEveryArcOnce) {
    Generator gen(502);
    for (int trial = 0; trial < 200; ++trial) {
        const auto s = gen.dos(gen.size_up_to(10));
        const auto part = trace_partition(s, gen.subset(s.alphabet()));
        std::vector<int> hits(s.length(), 0);
        for (const auto& w : part.walks)
            for (auto a : w) ++hits[a];
        ASSERT_TRUE(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
        ASSERT_GE(part.size(), 1u);
        ASSERT_LE(part.size(), s.alphabet().size() + 1);
    }
}

TEST(Rerouting, OverlapGraphIsPivoted) {
    const auto s = DoubleOccurrenceString::parse(fixtures::circuit_string);
    const auto t = DoubleOccurrenceString::parse(fixtures::rerouted_string);
    const auto x = SubsetMask::of(s.alphabet(), {"1", "3"});
    EXPECT_EQ(overlap_graph(t), pivot(overlap_graph(s), x));
}

TEST(Rerouting, PartitionsCorrespond) {
    const auto s = DoubleOccurrenceString::parse(fixtures::circuit_string);
    const auto t = DoubleOccurrenceString::parse(fixtures::rerouted_string);
    const auto& d = s.alphabet();
    EXPECT_EQ(walk_words(t, trace_partition(t, SubsetMask::of(d, {"1", "4", "5", "6"}))),
              walk_words(s, trace_partition(s, SubsetMask::of(d, {"3", "4", "5", "6"}))));
    // Every X in t matches X xor {1,3} in s.
    const auto flip = SubsetMask::of(d, {"1", "3"});
    for (mask_t m = 0; m < bit(d.size()); ++m) {
        const SubsetMask x(d, m);
        ASSERT_EQ(walk_words(t, trace_partition(t, x)),
                  walk_words(s, trace_partition(s, symmetric_difference(x, flip))));
    }
}

TEST(CohnLempel, CircuitStringExhaustive) {
    const auto s = DoubleOccurrenceString::parse(fixtures::circuit_string);
    for (mask_t m = 0; m < bit(s.alphabet().size()); ++m) {
        const auto c = cohn_lempel_check(s, SubsetMask(s.alphabet(), m));
        ASSERT_TRUE(c.equal()) << m;
    }
    const auto c = cohn_lempel_check(s, SubsetMask::of(s.alphabet(), {"3", "4", "5", "6"}));
    EXPECT_EQ(c.walks, 3u);
    EXPECT_EQ(c.nullity_plus_one, 3u);
}

TEST(CohnLempel, RandomStrings) {
    Generator gen(503);
    for (int trial = 0; trial < 300; ++trial) {
        const auto s = gen.dos(gen.size_up_to(12));
        const auto overlap = overlap_graph(s);
        for (int k = 0; k < 8; ++k) {
            const auto x = gen.subset(s.alphabet());
            const auto c = cohn_lempel_check(s, x);
            ASSERT_TRUE(c.equal()) << s.str() << " " << to_string(x);
            ASSERT_EQ(c.nullity_plus_one, oracle::gf2_principal_nullity(overlap.adjacency(), x.bits()) + 1);
        }
    }
}

TEST(WalkDistribution, SmallStrings) {
    EXPECT_EQ(walk_distribution(DoubleOccurrenceString::parse("1212")), (NormVector{{2, 2, 0}}));
    EXPECT_EQ(walk_distribution(DoubleOccurrenceString::parse("1122")), (NormVector{{1, 2, 1}}));
    EXPECT_EQ(walk_distribution(DoubleOccurrenceString::parse("11")), (NormVector{{1, 1}}));
}

TEST(WalkDistribution, EqualsOverlapNormAndCountsEulerCircuits) {
    const auto s = DoubleOccurrenceString::parse(fixtures::circuit_string);
    const auto dist = walk_distribution(s);
    EXPECT_EQ(dist, norm(partition_sequence_of(overlap_graph(s).adjacency())));
    EXPECT_EQ(dist.counts[0], count_euler_circuits(digraph_of(s)));

    Generator gen(504);
    for (int trial = 0; trial < 150; ++trial) {
        const auto r = gen.dos(gen.size_up_to(8));
        const auto rd = walk_distribution(r);
        ASSERT_EQ(rd, norm(partition_sequence_of(overlap_graph(r).adjacency())));
        ASSERT_EQ(rd.counts[0], count_euler_circuits(digraph_of(r)));
        ASSERT_EQ(rd.total(), std::uint64_t{1} << r.alphabet().size());
    }
}

} // namespace
} // namespace ppt
