#include "lapmult/canonical.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "lapmult/errors.hpp"

namespace lapmult {

namespace {

// Backtracking search for the minimal triangle code. Vertex positions are
// constrained to invariant classes (degree, then sorted neighbor degrees),
// which every isomorphism preserves, so restricting the search keeps the
// minimum well-defined across isomorphic graphs. Candidates that are twins
// (swapping them is an automorphism) are explored only once per node.
struct Canonizer {
    int n = 0;
    int nbits = 0;
    std::array<std::uint64_t, kMaxCanonicalOrder> adj{};
    std::array<int, kMaxCanonicalOrder> class_of{};
    std::array<int, kMaxCanonicalOrder> pos_class{};
    std::array<int, kMaxCanonicalOrder> placed{};
    std::uint64_t best = 0;

    explicit Canonizer(const Graph& g) : n(g.order()) {
        nbits = n * (n - 1) / 2;
        for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v);

        std::vector<std::vector<int>> key(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int>& k = key[static_cast<std::size_t>(v)];
            k.push_back(g.degree(v));
            for (int u = 0; u < n; ++u)
                if (g.has_edge(u, v)) k.push_back(g.degree(u));
            std::sort(k.begin() + 1, k.end(), std::greater<int>());
        }
        std::vector<int> order(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return key[static_cast<std::size_t>(a)] > key[static_cast<std::size_t>(b)];
        });
        int cls = 0;
        for (int d = 0; d < n; ++d) {
            if (d > 0 && key[static_cast<std::size_t>(order[static_cast<std::size_t>(d)])] !=
                             key[static_cast<std::size_t>(order[static_cast<std::size_t>(d - 1)])])
                ++cls;
            pos_class[static_cast<std::size_t>(d)] = cls;
            class_of[static_cast<std::size_t>(order[static_cast<std::size_t>(d)])] = cls;
        }

        best = nbits == 0 ? 0 : (~std::uint64_t{0} >> (64 - nbits));
        descend(0, 0, 0);
    }

    bool twins(int u, int v) const {
        const std::uint64_t bu = std::uint64_t{1} << u, bv = std::uint64_t{1} << v;
        return (adj[static_cast<std::size_t>(u)] & ~bv) == (adj[static_cast<std::size_t>(v)] & ~bu);
    }

    void descend(int depth, std::uint64_t used, std::uint64_t partial) {
        if (depth == n) {
            if (partial < best) best = partial;
            return;
        }
        std::array<int, kMaxCanonicalOrder> cand{};
        int ncand = 0;
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1) continue;
            if (class_of[static_cast<std::size_t>(v)] != pos_class[static_cast<std::size_t>(depth)])
                continue;
            bool dup = false;
            for (int k = 0; k < ncand && !dup; ++k) dup = twins(cand[static_cast<std::size_t>(k)], v);
            if (!dup) cand[static_cast<std::size_t>(ncand++)] = v;
        }
        const int done_bits = (depth + 1) * depth / 2;
        for (int k = 0; k < ncand; ++k) {
            const int v = cand[static_cast<std::size_t>(k)];
            std::uint64_t col = 0;
            for (int i = 0; i < depth; ++i)
                col = col << 1 | ((adj[static_cast<std::size_t>(v)] >>
                                   placed[static_cast<std::size_t>(i)]) &
                                  1);
            const std::uint64_t next = partial << depth | col;
            if (next > (best >> (nbits - done_bits))) continue;
            placed[static_cast<std::size_t>(depth)] = v;
            descend(depth + 1, used | std::uint64_t{1} << v, next);
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    const int n = g.order();
    if (n > kMaxCanonicalOrder)
        throw LimitError("canonical_form: order " + std::to_string(n) +
                         " exceeds supported maximum " + std::to_string(kMaxCanonicalOrder));
    if (n <= 1) return {n, 0};
    Canonizer c(g);
    return {n, c.best};
}

Graph from_canonical(const CanonicalForm& form) {
    const int n = form.order;
    if (n < 0 || n > kMaxCanonicalOrder)
        throw std::invalid_argument("from_canonical: order out of range");
    Graph g(n);
    const int nbits = n * (n - 1) / 2;
    int t = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++t)
            if ((form.code >> (nbits - 1 - t)) & 1) g.add_edge(i, j);
    return g;
}

Graph canonical_representative(const Graph& g) { return from_canonical(canonical_form(g)); }

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    std::vector<int> dg = g.degrees(), dh = h.degrees();
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    return canonical_form(g) == canonical_form(h);
}

}  // namespace lapmult
