#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "lapmult/errors.hpp"
#include "lapmult/graph.hpp"

using namespace lapmult;

namespace {

std::set<std::pair<int, int>> edge_set(const Graph& g) {
    std::set<std::pair<int, int>> out;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.has_edge(u, v)) out.insert({u, v});
    return out;
}

std::vector<int> sorted_degrees(const Graph& g) {
    std::vector<int> d = g.degrees();
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

TEST_CASE("edge bookkeeping") {
    Graph g(5);
    CHECK(g.order() == 5);
    CHECK(g.edge_count() == 0);
    g.add_edge(0, 3);
    g.add_edge(3, 4);
    CHECK(g.has_edge(3, 0));
    CHECK(g.has_edge(4, 3));
    CHECK_FALSE(g.has_edge(0, 4));
    CHECK(g.degree(3) == 2);
    CHECK(g.edge_count() == 2);
    g.add_edge(0, 3);  // idempotent
    CHECK(g.edge_count() == 2);
    g.remove_edge(0, 3);
    CHECK_FALSE(g.has_edge(0, 3));
    CHECK(g.edge_count() == 1);
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 5), std::invalid_argument);
}

TEST_CASE("graph6 decodes known strings") {
    // '@' is K_1, 'C~' is K_4, 'Ch' is the path 0-1-2-3.
    Graph k1 = from_graph6("@");
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);

    Graph k4 = from_graph6("C~");
    CHECK(k4 == complete(4));

    Graph p4 = from_graph6("Ch");
    CHECK(p4 == path(4));
}

TEST_CASE("graph6 round trips") {
    std::vector<Graph> cases = {
        complete(1), complete(2), path(7),      cycle(5),          star(9),
        complete(8), gnr(4, 2),   empty_graph(3), complete_bipartite(3, 4),
    };
    for (const Graph& g : cases) {
        std::string text = to_graph6(g);
        CHECK(from_graph6(text) == g);
    }
    CHECK(to_graph6(complete(4)) == "C~");
    CHECK(to_graph6(path(4)) == "Ch");
    CHECK(to_graph6(complete(2)) == "A_");
}

TEST_CASE("graph6 round trips at the order cap") {
    Graph g(62);
    for (int v = 1; v < 62; ++v) g.add_edge(v - 1, v);
    std::string text = to_graph6(g);
    CHECK(from_graph6(text) == g);
}

TEST_CASE("graph6 decode errors carry byte offsets") {
    auto offset_of = [](const std::string& text) {
        try {
            from_graph6(text);
        } catch (const ParseError& e) {
            return e.offset;
        }
        return std::size_t(-1);
    };
    CHECK(offset_of("") == 0);             // empty input
    CHECK(offset_of("\x3f") == 0);         // header would mean order 0
    CHECK(offset_of("~??") == 0);          // long-form header unsupported
    CHECK(offset_of("C") == 1);            // truncated: order 4 needs one more byte
    CHECK(offset_of("C~~") == 2);          // trailing byte
    CHECK(offset_of("C ") == 1);           // character below the graph6 range
    CHECK(offset_of("AO") == 1);           // nonzero padding bits
}

TEST_CASE("complement and unions") {
    CHECK(complement(complete(5)) == empty_graph(5));
    CHECK(complement(complement(path(6))) == path(6));

    Graph u = disjoint_union(complete(3), complete(2));
    CHECK(u.order() == 5);
    CHECK(u.edge_count() == 4);
    CHECK(u.has_edge(0, 1));
    CHECK(u.has_edge(3, 4));
    CHECK_FALSE(u.has_edge(2, 3));

    Graph j = join(complete(3), complete(2));
    CHECK(j == complete(5));
    CHECK(join(empty_graph(2), empty_graph(3)) == complete_bipartite(2, 3));
}

TEST_CASE("permuted relabels") {
    Graph p = path(4);
    Graph q = permuted(p, {3, 1, 2, 0});  // 0->3, 1->1, 2->2, 3->0
    CHECK(q.has_edge(3, 1));
    CHECK(q.has_edge(1, 2));
    CHECK(q.has_edge(2, 0));
    CHECK(q.edge_count() == 3);
    CHECK_THROWS_AS(permuted(p, {0, 0, 1, 2}), std::invalid_argument);
}

TEST_CASE("induced subgraph keeps the listed order") {
    Graph c5 = cycle(5);
    Graph sub = c5.induced_subgraph({0, 1, 2, 3});
    CHECK(sub == path(4));
    CHECK(c5.induced_subgraph({4, 0, 1}).edge_count() == 2);
    CHECK_THROWS_AS(c5.induced_subgraph({0, 0}), std::invalid_argument);
}

TEST_CASE("basic families") {
    CHECK(complete(4).edge_count() == 6);
    CHECK(path(1).order() == 1);
    CHECK(cycle(3) == complete(3));
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
    CHECK(star(5) == complete_bipartite(1, 4));
    CHECK(complete_bipartite(2, 3).edge_count() == 6);
    CHECK(complete_multipartite({2, 3}) == complete_bipartite(2, 3));
    CHECK(complete_multipartite({1, 1, 1, 1}) == complete(4));
    CHECK(complete_multipartite({3, 1, 1, 1}) == join(empty_graph(3), complete(3)));
    CHECK_THROWS_AS(complete_multipartite({0, 2}), std::invalid_argument);
    CHECK(complete_minus_edge(5).edge_count() == 9);
    CHECK_FALSE(complete_minus_edge(5).has_edge(0, 1));
}

TEST_CASE("order cap raises the limit error") {
    CHECK_THROWS_AS(complete(63), LimitError);
    CHECK_THROWS_AS(Graph(63), LimitError);
}

TEST_CASE("pendant, star-plus-edge, bipartite-plus-edge") {
    Graph pend = complete_plus_pendant(5);
    CHECK(pend.edge_count() == 7);  // K_4 and one pendant edge
    CHECK(pend.degree(4) == 1);

    Graph spe = star_plus_edge(5);
    CHECK(spe.edge_count() == 5);
    CHECK(spe.has_edge(1, 2));
    CHECK(spe.degree(0) == 4);

    Graph bpe = balanced_bipartite_plus_edge(6);
    CHECK(bpe.edge_count() == 10);
    CHECK(bpe.has_edge(0, 1));
    CHECK_THROWS_AS(balanced_bipartite_plus_edge(5), std::invalid_argument);
}

TEST_CASE("join-built families") {
    // Order 4 instance of the clique-join-tail family is the triangle with a
    // pendant vertex.
    Graph eq = eq1_graph(4);
    CHECK(sorted_degrees(eq) == std::vector<int>{1, 2, 2, 3});
    CHECK(eq1_graph(6).order() == 6);

    Graph cone = cone_two_cliques(5);
    CHECK(cone.order() == 5);
    CHECK(cone.degree(4) == 4);  // apex is the last vertex
    CHECK(sorted_degrees(cone) == std::vector<int>{2, 2, 2, 2, 4});
    CHECK_THROWS_AS(cone_two_cliques(6), std::invalid_argument);

    Graph sj = split_join(6);
    CHECK(sj.order() == 6);
    CHECK(sorted_degrees(sj) == std::vector<int>{3, 3, 3, 3, 4, 4});
    CHECK_THROWS_AS(split_join(7), std::invalid_argument);
}

TEST_CASE("two-clique bipartite-cross family") {
    Graph g = gnr(2, 1);
    CHECK(g.order() == 4);
    CHECK(edge_set(g) == std::set<std::pair<int, int>>{{0, 1}, {1, 3}, {2, 3}});

    Graph h = gnr(3, 1);
    CHECK(h.order() == 6);
    // Clique vertices 0 and 3, independent pairs {1,2} and {4,5} joined across.
    CHECK(h.edge_count() == 4 + 4);
    CHECK(h.has_edge(0, 1));
    CHECK(h.has_edge(1, 4));
    CHECK_FALSE(h.has_edge(1, 2));
    CHECK_FALSE(h.has_edge(0, 3));

    CHECK(gnr(5, 2).order() == 10);
    CHECK_THROWS_AS(gnr(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(gnr(1, 0), std::invalid_argument);
}

TEST_CASE("forbidden pattern fixtures") {
    CHECK(j1() == cycle(5));

    Graph b = j2();
    CHECK(b.order() == 5);
    CHECK(b.edge_count() == 6);
    CHECK(sorted_degrees(b) == std::vector<int>{2, 2, 2, 3, 3});

    Graph c = j3();
    CHECK(c.order() == 5);
    CHECK(c.edge_count() == 7);
    CHECK(c.degree(4) == 4);
    CHECK(sorted_degrees(c) == std::vector<int>{2, 2, 3, 3, 4});
}

TEST_CASE("family registry") {
    const auto& table = family_table();
    CHECK(table.size() >= 18);
    for (const FamilyInfo& info : table) {
        CHECK_FALSE(info.name.empty());
    }
    CHECK(family("path", {4}) == path(4));
    CHECK(family("complete_bipartite", {2, 3}) == complete_bipartite(2, 3));
    CHECK(family("K_bipartite", {2, 3}) == complete_bipartite(2, 3));
    CHECK(family("complete_multipartite", {2, 2, 1}) == complete_multipartite({2, 2, 1}));
    CHECK(family("gnr", {3, 1}) == gnr(3, 1));
    CHECK_THROWS_AS(family("no_such_family", {3}), std::invalid_argument);
    CHECK_THROWS_AS(family("path", {}), std::invalid_argument);
    CHECK_THROWS_AS(family("path", {2, 3}), std::invalid_argument);
}
