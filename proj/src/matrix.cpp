#include "lapmult/matrix.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace lapmult {

bool IntMatrix::symmetric() const {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

IntMatrix laplacian(const Graph& g) {
    const int n = g.order();
    IntMatrix m(n);
    for (int v = 0; v < n; ++v) m.at(v, v) = g.degree(v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v)) {
                m.at(u, v) = -1;
                m.at(v, u) = -1;
            }
    return m;
}

IntMatrix principal_submatrix(const IntMatrix& m, const std::vector<int>& keep) {
    std::vector<bool> seen(static_cast<std::size_t>(m.n), false);
    for (int r : keep) {
        if (r < 0 || r >= m.n) throw std::invalid_argument("submatrix index out of range");
        if (seen[static_cast<std::size_t>(r)])
            throw std::invalid_argument("submatrix indices must be distinct");
        seen[static_cast<std::size_t>(r)] = true;
    }
    IntMatrix s(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j)
            s.at(static_cast<int>(i), static_cast<int>(j)) =
                m.at(keep[i], keep[j]);
    return s;
}

namespace {

// Berkowitz iteration over leading principal submatrices. Entries are copied
// into I, which must hold n*log2(n*maxabs) + n + O(log n) bits; the dispatch
// below picks the narrowest sufficient fixed width.
template <class I>
IntPoly berkowitz(const IntMatrix& m) {
    const int n = m.n;
    std::vector<I> a(static_cast<std::size_t>(n) * n);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<I>(m.a[i]);
    const auto at = [&](int i, int j) -> const I& { return a[static_cast<std::size_t>(i) * n + j]; };

    // c holds det(xI - M_r) descending, c[0] = 1.
    std::vector<I> c{I(1), -at(0, 0)};
    std::vector<I> q(static_cast<std::size_t>(n) + 1), w(static_cast<std::size_t>(n)),
        wn(static_cast<std::size_t>(n)), nc(static_cast<std::size_t>(n) + 1);
    for (int r = 2; r <= n; ++r) {
        const int s = r - 1;
        for (int i = 0; i < s; ++i) w[static_cast<std::size_t>(i)] = at(i, s);
        q[0] = I(1);
        q[1] = -at(s, s);
        for (int k = 2; k <= r; ++k) {
            I dot = I(0);
            for (int j = 0; j < s; ++j) dot += at(s, j) * w[static_cast<std::size_t>(j)];
            q[static_cast<std::size_t>(k)] = -dot;
            if (k == r) break;
            for (int i = 0; i < s; ++i) {
                I acc = I(0);
                for (int j = 0; j < s; ++j) acc += at(i, j) * w[static_cast<std::size_t>(j)];
                wn[static_cast<std::size_t>(i)] = acc;
            }
            std::swap(w, wn);
        }
        for (int i = 0; i <= r; ++i) {
            I acc = I(0);
            const int jlo = std::max(0, i - r), jhi = std::min(i, r - 1);
            for (int j = jlo; j <= jhi; ++j)
                acc += q[static_cast<std::size_t>(i - j)] * c[static_cast<std::size_t>(j)];
            nc[static_cast<std::size_t>(i)] = acc;
        }
        c.assign(nc.begin(), nc.begin() + r + 1);
    }

    std::vector<BigInt> ascending(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        ascending[static_cast<std::size_t>(n - k)] = static_cast<BigInt>(c[static_cast<std::size_t>(k)]);
    return IntPoly(std::move(ascending));
}

}  // namespace

IntPoly charpoly(const IntMatrix& m) {
    const int n = m.n;
    if (n == 0) return IntPoly{1};

    BigInt maxabs = 0;
    for (const BigInt& v : m.a) maxabs = std::max(maxabs, BigInt(boost::multiprecision::abs(v)));
    const BigInt scale = BigInt(n) * maxabs + 2;
    const long bits_per_level = static_cast<long>(boost::multiprecision::msb(scale)) + 1;
    const long need = n * bits_per_level + n + 16;

    if (need <= 120) return berkowitz<boost::multiprecision::int128_t>(m);
    if (need <= 248) return berkowitz<boost::multiprecision::int256_t>(m);
    if (need <= 504) return berkowitz<boost::multiprecision::int512_t>(m);
    if (need <= 1016) return berkowitz<boost::multiprecision::int1024_t>(m);
    return berkowitz<BigInt>(m);
}

IntPoly laplacian_charpoly(const Graph& g) { return charpoly(laplacian(g)); }

}  // namespace lapmult
