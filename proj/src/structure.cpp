#include "lapmult/structure.hpp"

#include <algorithm>
#include <bit>

#include "lapmult/canonical.hpp"

namespace lapmult {

std::vector<std::vector<int>> components(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> blocks;
    std::uint64_t unseen = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    while (unseen) {
        const int start = std::countr_zero(unseen);
        std::uint64_t comp = std::uint64_t{1} << start;
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f;) {
                const int v = std::countr_zero(f);
                f &= f - 1;
                next |= g.neighbors(v);
            }
            frontier = next & ~comp;
            comp |= frontier;
        }
        std::vector<int> block;
        for (std::uint64_t c = comp; c;) {
            block.push_back(std::countr_zero(c));
            c &= c - 1;
        }
        blocks.push_back(std::move(block));
        unseen &= ~comp;
    }
    return blocks;
}

bool is_connected(const Graph& g) {
    return g.order() <= 1 || components(g).size() == 1;
}

int diameter(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return 0;
    int best = 0;
    for (int src = 0; src < n; ++src) {
        std::uint64_t reached = std::uint64_t{1} << src;
        std::uint64_t frontier = reached;
        int dist = 0;
        while (true) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f;) {
                const int v = std::countr_zero(f);
                f &= f - 1;
                next |= g.neighbors(v);
            }
            next &= ~reached;
            if (!next) break;
            reached |= next;
            frontier = next;
            ++dist;
        }
        if (std::popcount(reached) != n) return kInfiniteDiameter;
        best = std::max(best, dist);
    }
    return best;
}

namespace {

// Subset search in vertex order; candidates are checked by edge count first,
// then by canonical code (patterns stay small, so that is cheap).
struct InducedSearch {
    const Graph* g;
    int p;
    int pattern_edges;
    CanonicalForm pattern_form;
    std::vector<int> chosen;
    std::optional<std::vector<int>> found;

    void descend(int next_vertex) {
        if (found) return;
        if (static_cast<int>(chosen.size()) == p) {
            Graph sub = g->induced_subgraph(chosen);
            if (sub.edge_count() == pattern_edges && canonical_form(sub) == pattern_form)
                found = chosen;
            return;
        }
        const int need = p - static_cast<int>(chosen.size());
        for (int v = next_vertex; v <= g->order() - need; ++v) {
            chosen.push_back(v);
            descend(v + 1);
            chosen.pop_back();
            if (found) return;
        }
    }
};

}  // namespace

std::optional<std::vector<int>> find_induced(const Graph& g, const Graph& pattern) {
    if (pattern.order() < 1 || pattern.order() > g.order()) return std::nullopt;
    InducedSearch search;
    search.g = &g;
    search.p = pattern.order();
    search.pattern_edges = pattern.edge_count();
    search.pattern_form = canonical_form(pattern);
    search.descend(0);
    return search.found;
}

bool contains_induced(const Graph& g, const Graph& pattern) {
    return find_induced(g, pattern).has_value();
}

bool is_cograph(const Graph& g) {
    if (g.order() <= 1) return true;
    const std::vector<std::vector<int>> blocks = components(g);
    if (blocks.size() > 1) {
        for (const std::vector<int>& block : blocks)
            if (!is_cograph(g.induced_subgraph(block))) return false;
        return true;
    }
    const Graph co = complement(g);
    if (is_connected(co)) return false;  // order >= 2, connected, co-connected
    return is_cograph(co);
}

}  // namespace lapmult
