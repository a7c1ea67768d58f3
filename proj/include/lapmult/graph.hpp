#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lapmult {

// Largest order representable in short-form graph6; also the cap for the
// one-word-per-vertex adjacency rows used throughout.
inline constexpr int kMaxOrder = 62;

// Simple undirected graph on vertices 0..n-1. Row v of adj_ is the neighbor
// bitset of v; the matrix of rows is kept symmetric with a zero diagonal.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
    }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    std::uint64_t neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const;
    int edge_count() const;
    std::vector<int> degrees() const;

    // Vertex i of the result is vertex keep[i] of this graph.
    Graph induced_subgraph(const std::vector<int>& keep) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

// graph6 codec, short form only (1 <= order <= 62). Decoding failures carry
// the byte offset of the offending character.
Graph from_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

// Relabels: vertex i of g becomes vertex perm[i] of the result.
Graph permuted(const Graph& g, const std::vector<int>& perm);

// ---------------------------------------------------------------------------
// Named constructions. Parameter checks throw std::invalid_argument; orders
// above kMaxOrder throw LimitError.

Graph complete(int n);
Graph empty_graph(int n);
Graph path(int n);
Graph cycle(int n);
Graph star(int n);
Graph complete_bipartite(int a, int b);
Graph complete_multipartite(const std::vector<int>& parts);
Graph complete_minus_edge(int n);

// K_{n-1} plus one pendant vertex attached to a single clique vertex.
Graph complete_plus_pendant(int n);

// Star K_{1,n-1} plus one edge between two leaves.
Graph star_plus_edge(int n);

// K_{n/2,n/2} plus one edge inside a part; n even, n >= 4.
Graph balanced_bipartite_plus_edge(int n);

// Join of K_{n-3} with (K_2 together with one isolated vertex); n >= 4.
Graph eq1_graph(int n);

// Apex vertex joined to two disjoint cliques of order (n-1)/2; n odd, n >= 3.
Graph cone_two_cliques(int n);

// Independent set of n/3 vertices joined to two disjoint cliques of order
// n/3; n divisible by 3, n >= 3.
Graph split_join(int n);

// Two copies of K_r joined to independent sets of n-r vertices, with the two
// independent sets fully joined to each other; order 2n, 1 <= r <= n-1.
// Vertices: clique A, independent A, clique B, independent B.
Graph gnr(int n, int r);

Graph j1();  // C_5
Graph j2();  // C_5 plus one chord
Graph j3();  // P_4 plus one dominating vertex

// ---------------------------------------------------------------------------
// Registry used by the CLI and the bindings.

struct FamilyInfo {
    std::string name;
    int arity;  // -1: variadic (at least one parameter)
    std::string params;
    std::string constraints;
};

const std::vector<FamilyInfo>& family_table();

// Builds a family member by registry name. Accepts the alias K_bipartite for
// complete_bipartite. Unknown names and bad parameters throw
// std::invalid_argument.
Graph family(const std::string& name, const std::vector<int>& params);

}  // namespace lapmult
