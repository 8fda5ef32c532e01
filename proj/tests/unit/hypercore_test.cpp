#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sunflower/errors.hpp"
#include "sunflower/hg_format.hpp"
#include "sunflower/hypergraph.hpp"

using namespace sunflower;

TEST(VertexSet, SortsAndRejectsDuplicates) {
    VertexSet s{3, 1, 2};
    EXPECT_EQ(s.vector(), (std::vector<Vertex>{1, 2, 3}));
    EXPECT_THROW((VertexSet{1, 1}), InvalidArgument);
    EXPECT_EQ(s.to_string(), "{1,2,3}");
    EXPECT_TRUE(VertexSet({1, 2}) < VertexSet({1, 3}));
    EXPECT_TRUE(VertexSet({1, 2}).is_subset_of(s));
    EXPECT_TRUE(VertexSet({4}).disjoint_from(s));
}

TEST(VertexSet, SubsetsInLexOrder) {
    auto subs = subsets_of_size(VertexSet::range(1, 4), 2);
    ASSERT_EQ(subs.size(), 6U);
    EXPECT_EQ(subs.front(), VertexSet({1, 2}));
    EXPECT_EQ(subs.back(), VertexSet({3, 4}));
    EXPECT_TRUE(std::is_sorted(subs.begin(), subs.end()));
    EXPECT_EQ(subsets_of_size(VertexSet::range(1, 3), 0).size(), 1U);
}

TEST(Hypergraph, ValidatesEdges) {
    EXPECT_THROW(Hypergraph(4, 3, {VertexSet{1, 2}}), InvalidArgument);
    EXPECT_THROW(Hypergraph(4, 2, {VertexSet{1, 5}}), InvalidArgument);
    EXPECT_THROW(Hypergraph(4, 2, {VertexSet{1, 2}, VertexSet{1, 2}}), InvalidArgument);
    Hypergraph h(4, 2, {VertexSet{3, 4}, VertexSet{1, 2}});
    EXPECT_EQ(h.edge(0), VertexSet({1, 2}));
    EXPECT_TRUE(h.contains(VertexSet{3, 4}));
    EXPECT_FALSE(h.contains(VertexSet{2, 3}));
}

TEST(Hypergraph, CompleteCounts) {
    EXPECT_EQ(complete_hypergraph(3, 2).edge_count(), 3U);
    EXPECT_EQ(complete_hypergraph(4, 3).edge_count(), 4U);
    const auto h = complete_hypergraph(5, 0);
    ASSERT_EQ(h.edge_count(), 1U);
    EXPECT_TRUE(h.edge(0).empty());
    EXPECT_THROW(complete_hypergraph(2, 3), InvalidArgument);
}

TEST(LinkGraph, Examples) {
    const auto k4 = complete_hypergraph(4, 3);
    const auto l = link_graph(k4, VertexSet{1, 2});
    EXPECT_EQ(l.r(), 1);
    EXPECT_EQ(l.edge_count(), 2U);
    EXPECT_EQ(l.edge(0), VertexSet({3}));
    EXPECT_EQ(l.edge(1), VertexSet({4}));

    EXPECT_EQ(link_graph(k4, VertexSet{}), k4);

    Hypergraph h(5, 3, {VertexSet{1, 2, 3}, VertexSet{1, 4, 5}});
    const auto l1 = link_graph(h, VertexSet{1});
    EXPECT_EQ(l1, Hypergraph(5, 2, {VertexSet{2, 3}, VertexSet{4, 5}}));

    EXPECT_THROW(link_graph(h, VertexSet{1, 2, 3, 4}), InvalidArgument);
    EXPECT_THROW(link_graph(h, VertexSet{6}), InvalidArgument);
}

TEST(LinkGraph, FullEdgeLinkIsEmptySet) {
    Hypergraph h(4, 2, {VertexSet{1, 2}});
    const auto l = link_graph(h, VertexSet{1, 2});
    EXPECT_EQ(l.r(), 0);
    ASSERT_EQ(l.edge_count(), 1U);
    EXPECT_TRUE(l.edge(0).empty());
}

TEST(LinkGraph, CountAndCompositionOnRandomGraphs) {
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 5 + trial % 3;
        const int r = 2 + trial % 3;
        const auto h = oracle::random_hypergraph(gen, n, r, 0.4);
        for (const auto& s : subsets_of_size(VertexSet::range(1, n), 1)) {
            std::size_t direct = 0;
            for (const auto& e : h.edges()) direct += s.is_subset_of(e) ? 1 : 0;
            const auto l = link_graph(h, s);
            EXPECT_EQ(l.edge_count(), direct);
            EXPECT_EQ(degree(h, s), direct);
            for (Vertex v = 1; v <= n; ++v) {
                if (s.contains(v)) continue;
                const VertexSet s2{v};
                EXPECT_EQ(link_graph(l, s2), link_graph(h, s.unite(s2)));
            }
        }
    }
}

TEST(HgFormat, ParsesExamples) {
    const auto h = parse_hypergraph("4 3 1\n1 2 3\n");
    EXPECT_EQ(h, Hypergraph(4, 3, {VertexSet{1, 2, 3}}));
    const auto e = parse_hypergraph("3 2 0\n");
    EXPECT_EQ(e.n(), 3);
    EXPECT_EQ(e.r(), 2);
    EXPECT_TRUE(e.empty());
    const auto c = parse_hypergraph("# comment\n\n4 2 2\n# mid\n3 4\n\n1 2\n");
    EXPECT_EQ(c.edge_count(), 2U);
}

TEST(HgFormat, EmptyUniformity) {
    const auto h = parse_hypergraph("5 0 1\n");
    EXPECT_EQ(h, complete_hypergraph(5, 0));
    EXPECT_EQ(serialize_hypergraph(h), "5 0 1\n");
    EXPECT_TRUE(parse_hypergraph("5 0 0\n").empty());
}

namespace {

ParseErrorKind kind_of(std::string_view text) {
    try {
        parse_hypergraph(text);
    } catch (const ParseError& e) {
        return e.kind();
    }
    ADD_FAILURE() << "accepted: " << text;
    return ParseErrorKind::malformed_header;
}

}  // namespace

TEST(HgFormat, DistinctDiagnostics) {
    EXPECT_EQ(kind_of("4 3\n"), ParseErrorKind::malformed_header);
    EXPECT_EQ(kind_of("x 3 1\n1 2 3\n"), ParseErrorKind::malformed_header);
    EXPECT_EQ(kind_of("4 3 1\n1 2 a\n"), ParseErrorKind::malformed_edge);
    EXPECT_EQ(kind_of("4 3 1\n1 2\n"), ParseErrorKind::wrong_arity);
    EXPECT_EQ(kind_of("4 3 1\n1 3 2\n"), ParseErrorKind::not_increasing);
    EXPECT_EQ(kind_of("4 3 1\n1 2 5\n"), ParseErrorKind::id_out_of_range);
    EXPECT_EQ(kind_of("4 3 2\n1 2 3\n1 2 3\n"), ParseErrorKind::duplicate_edge);
    EXPECT_EQ(kind_of("4 3 2\n1 2 3\n"), ParseErrorKind::edge_count_mismatch);
}

TEST(HgFormat, ReportsLineNumbers) {
    try {
        parse_hypergraph("4 3 2\n1 2 3\n1 2 9\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3);
    }
}

TEST(HgFormat, RoundTrip) {
    const std::string canonical = "5 2 3\n1 2\n1 5\n3 4\n";
    EXPECT_EQ(serialize_hypergraph(parse_hypergraph(canonical)), canonical);
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 50; ++trial) {
        const auto h = oracle::random_hypergraph(gen, 4 + trial % 4, trial % 4, 0.5);
        EXPECT_EQ(parse_hypergraph(serialize_hypergraph(h)), h);
    }
}
