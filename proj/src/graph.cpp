#include "lapmult/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "lapmult/errors.hpp"

namespace lapmult {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
    if (n > kMaxOrder)
        throw LimitError("graph order " + std::to_string(n) + " exceeds supported maximum " +
                         std::to_string(kMaxOrder));
    adj_.assign(static_cast<std::size_t>(n), 0);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for order " +
                                    std::to_string(n_));
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not representable");
    adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
    adj_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

int Graph::edge_count() const {
    int twice = 0;
    for (std::uint64_t row : adj_) twice += std::popcount(row);
    return twice / 2;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = degree(v);
    return d;
}

Graph Graph::induced_subgraph(const std::vector<int>& keep) const {
    Graph h(static_cast<int>(keep.size()));
    std::uint64_t seen = 0;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        check_vertex(keep[i]);
        if ((seen >> keep[i]) & 1u)
            throw std::invalid_argument("induced_subgraph: repeated vertex");
        seen |= std::uint64_t(1) << keep[i];
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (has_edge(keep[i], keep[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
    return h;
}

// ---------------------------------------------------------------------------
// graph6. Edge bits run over the upper triangle column by column:
// (0,1), (0,2), (1,2), (0,3), ... so the bit index of (i,j), i<j, is
// j(j-1)/2 + i. Bits are packed six per byte, most significant first, each
// byte offset by 63.

Graph from_graph6(const std::string& text) {
    if (text.empty()) throw ParseError("graph6: empty input", 0);
    const unsigned char c0 = static_cast<unsigned char>(text[0]);
    if (c0 < 63 || c0 > 126) throw ParseError("graph6: invalid header character", 0);
    const int n = static_cast<int>(c0) - 63;
    if (n < 1 || n > kMaxOrder)
        throw ParseError("graph6: order outside short-form range 1..62", 0);

    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t expected = 1 + (nbits + 5) / 6;
    if (text.size() < expected)
        throw ParseError("graph6: input truncated, expected " + std::to_string(expected) +
                             " bytes",
                         text.size());
    if (text.size() > expected)
        throw ParseError("graph6: trailing data, expected " + std::to_string(expected) + " bytes",
                         expected);

    Graph g(n);
    std::size_t t = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++t) {
            const std::size_t byte = 1 + t / 6;
            const unsigned char c = static_cast<unsigned char>(text[byte]);
            if (c < 63 || c > 126) throw ParseError("graph6: invalid character", byte);
            const int bit = (c - 63) >> (5 - static_cast<int>(t % 6)) & 1;
            if (bit) g.add_edge(i, j);
        }
    }
    // Padding bits after the triangle must be zero.
    for (; t < (expected - 1) * 6; ++t) {
        const std::size_t byte = 1 + t / 6;
        const unsigned char c = static_cast<unsigned char>(text[byte]);
        if (c < 63 || c > 126) throw ParseError("graph6: invalid character", byte);
        if ((c - 63) >> (5 - static_cast<int>(t % 6)) & 1)
            throw ParseError("graph6: nonzero padding bit", byte);
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n < 1) throw std::invalid_argument("graph6: order must be at least 1");
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::string out(1 + (nbits + 5) / 6, char(63));
    out[0] = static_cast<char>(63 + n);
    std::size_t t = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++t)
            if (g.has_edge(i, j)) out[1 + t / 6] += char(1 << (5 - t % 6));
    return out;
}

// ---------------------------------------------------------------------------

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) h.add_edge(u, v);
    return h;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int n = g.order(), m = h.order();
    Graph r(n + m);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v)) r.add_edge(u, v);
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v)
            if (h.has_edge(u, v)) r.add_edge(n + u, n + v);
    return r;
}

Graph join(const Graph& g, const Graph& h) {
    Graph r = disjoint_union(g, h);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) r.add_edge(u, g.order() + v);
    return r;
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permutation length does not match graph order");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("not a permutation of the vertex set");
        seen[static_cast<std::size_t>(v)] = true;
    }
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v))
                h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return h;
}

// ---------------------------------------------------------------------------

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

Graph complete(int n) {
    require(n >= 1, "complete: order must be at least 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph empty_graph(int n) {
    require(n >= 1, "empty: order must be at least 1");
    return Graph(n);
}

Graph path(int n) {
    require(n >= 1, "path: order must be at least 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n) {
    require(n >= 3, "cycle: order must be at least 3");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph star(int n) {
    require(n >= 2, "star: order must be at least 2");
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    require(a >= 1 && b >= 1, "complete_bipartite: part sizes must be at least 1");
    return complete_multipartite({a, b});
}

Graph complete_multipartite(const std::vector<int>& parts) {
    require(!parts.empty(), "complete_multipartite: at least one part required");
    int n = 0;
    for (int p : parts) {
        require(p >= 1, "complete_multipartite: part sizes must be at least 1");
        n += p;
    }
    Graph g(n);
    int start = 0;
    std::vector<int> starts;
    for (int p : parts) {
        starts.push_back(start);
        start += p;
    }
    for (std::size_t s = 0; s < parts.size(); ++s)
        for (std::size_t t = s + 1; t < parts.size(); ++t)
            for (int u = starts[s]; u < starts[s] + parts[s]; ++u)
                for (int v = starts[t]; v < starts[t] + parts[t]; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_minus_edge(int n) {
    require(n >= 2, "complete_minus_edge: order must be at least 2");
    Graph g = complete(n);
    g.remove_edge(0, 1);
    return g;
}

Graph complete_plus_pendant(int n) {
    require(n >= 2, "complete_plus_pendant: order must be at least 2");
    Graph g(n);
    for (int u = 0; u + 1 < n; ++u)
        for (int v = u + 1; v + 1 < n; ++v) g.add_edge(u, v);
    g.add_edge(0, n - 1);
    return g;
}

Graph star_plus_edge(int n) {
    require(n >= 3, "star_plus_edge: order must be at least 3");
    Graph g = star(n);
    g.add_edge(1, 2);
    return g;
}

Graph balanced_bipartite_plus_edge(int n) {
    require(n >= 4 && n % 2 == 0, "balanced_bipartite_plus_edge: order must be even, at least 4");
    Graph g = complete_bipartite(n / 2, n / 2);
    g.add_edge(0, 1);
    return g;
}

Graph eq1_graph(int n) {
    require(n >= 4, "eq1_graph: order must be at least 4");
    // Clique on 0..n-4, edge (n-3,n-2), vertex n-1 isolated before the join.
    Graph tail(3);
    tail.add_edge(0, 1);
    return join(complete(n - 3), tail);
}

Graph cone_two_cliques(int n) {
    require(n >= 3 && n % 2 == 1, "cone_two_cliques: order must be odd, at least 3");
    const int h = (n - 1) / 2;
    Graph cliques = disjoint_union(complete(h), complete(h));
    return join(cliques, complete(1));  // apex is the last vertex
}

Graph split_join(int n) {
    require(n >= 3 && n % 3 == 0, "split_join: order must be divisible by 3, at least 3");
    const int m = n / 3;
    Graph cliques = disjoint_union(complete(m), complete(m));
    return join(cliques, empty_graph(m));
}

Graph gnr(int n, int r) {
    require(n >= 2, "gnr: n must be at least 2");
    require(r >= 1 && r <= n - 1, "gnr: r must satisfy 1 <= r <= n-1");
    if (2 * n > kMaxOrder)
        throw LimitError("gnr: order " + std::to_string(2 * n) + " exceeds supported maximum " +
                         std::to_string(kMaxOrder));
    // Half A: clique 0..r-1, independent r..n-1. Half B shifted by n.
    Graph g(2 * n);
    for (int base : {0, n}) {
        for (int u = 0; u < r; ++u)
            for (int v = u + 1; v < r; ++v) g.add_edge(base + u, base + v);
        for (int u = 0; u < r; ++u)
            for (int v = r; v < n; ++v) g.add_edge(base + u, base + v);
    }
    for (int u = r; u < n; ++u)
        for (int v = r; v < n; ++v) g.add_edge(u, n + v);
    return g;
}

Graph j1() { return cycle(5); }

Graph j2() {
    Graph g = cycle(5);  // v1..v4,u = 0..4
    g.add_edge(1, 4);
    return g;
}

Graph j3() {
    Graph g = path(5);
    g.remove_edge(3, 4);
    for (int v = 0; v < 4; ++v) g.add_edge(v, 4);
    return g;
}

// ---------------------------------------------------------------------------

const std::vector<FamilyInfo>& family_table() {
    static const std::vector<FamilyInfo> table = {
        {"complete", 1, "n", "n >= 1"},
        {"empty", 1, "n", "n >= 1"},
        {"path", 1, "n", "n >= 1"},
        {"cycle", 1, "n", "n >= 3"},
        {"star", 1, "n", "n >= 2"},
        {"complete_bipartite", 2, "a b", "a, b >= 1 (alias: K_bipartite)"},
        {"complete_multipartite", -1, "p1 p2 ...", "each part >= 1"},
        {"complete_minus_edge", 1, "n", "n >= 2"},
        {"complete_plus_pendant", 1, "n", "n >= 2"},
        {"star_plus_edge", 1, "n", "n >= 3"},
        {"balanced_bipartite_plus_edge", 1, "n", "n even, n >= 4"},
        {"eq1_graph", 1, "n", "n >= 4"},
        {"cone_two_cliques", 1, "n", "n odd, n >= 3"},
        {"split_join", 1, "n", "n divisible by 3, n >= 3"},
        {"gnr", 2, "n r", "n >= 2, 1 <= r <= n-1, order 2n <= 62"},
        {"j1", 0, "", ""},
        {"j2", 0, "", ""},
        {"j3", 0, "", ""},
    };
    return table;
}

Graph family(const std::string& name, const std::vector<int>& params) {
    const std::string canonical_name = name == "K_bipartite" ? "complete_bipartite" : name;
    const FamilyInfo* info = nullptr;
    for (const FamilyInfo& fi : family_table())
        if (fi.name == canonical_name) {
            info = &fi;
            break;
        }
    if (!info) throw std::invalid_argument("unknown family: " + name);
    if (info->arity >= 0 && static_cast<int>(params.size()) != info->arity)
        throw std::invalid_argument("family " + name + " expects " + std::to_string(info->arity) +
                                    " parameter(s), got " + std::to_string(params.size()));

    if (canonical_name == "complete") return complete(params[0]);
    if (canonical_name == "empty") return empty_graph(params[0]);
    if (canonical_name == "path") return path(params[0]);
    if (canonical_name == "cycle") return cycle(params[0]);
    if (canonical_name == "star") return star(params[0]);
    if (canonical_name == "complete_bipartite") return complete_bipartite(params[0], params[1]);
    if (canonical_name == "complete_multipartite") return complete_multipartite(params);
    if (canonical_name == "complete_minus_edge") return complete_minus_edge(params[0]);
    if (canonical_name == "complete_plus_pendant") return complete_plus_pendant(params[0]);
    if (canonical_name == "star_plus_edge") return star_plus_edge(params[0]);
    if (canonical_name == "balanced_bipartite_plus_edge")
        return balanced_bipartite_plus_edge(params[0]);
    if (canonical_name == "eq1_graph") return eq1_graph(params[0]);
    if (canonical_name == "cone_two_cliques") return cone_two_cliques(params[0]);
    if (canonical_name == "split_join") return split_join(params[0]);
    if (canonical_name == "gnr") return gnr(params[0], params[1]);
    if (canonical_name == "j1") return j1();
    if (canonical_name == "j2") return j2();
    if (canonical_name == "j3") return j3();
    throw std::logic_error("family table out of sync");
}

}  // namespace lapmult
