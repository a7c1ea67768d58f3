#include "lapmult/spectrum.hpp"

#include <algorithm>
#include <stdexcept>

#include "lapmult/errors.hpp"

namespace lapmult {

namespace {

constexpr long long kRootScanCap = 1'000'000;

}  // namespace

int ExactSpectrum::multiplicity_of(long long value) const {
    for (const auto& [v, m] : integer_part)
        if (v == value) return m;
    return 0;
}

ExactSpectrum extract_spectrum(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("extract_spectrum: zero polynomial");
    if (p.c.back() != 1) throw std::invalid_argument("extract_spectrum: polynomial must be monic");

    ExactSpectrum s;
    s.order = p.degree();
    IntPoly rest = p;

    int zeros = 0;
    while (rest.degree() >= 1 && rest.c.front() == 0) {
        rest.c.erase(rest.c.begin());
        ++zeros;
    }

    std::vector<std::pair<long long, int>> found;
    if (rest.degree() >= 1) {
        BigInt bound = root_magnitude_bound(rest);
        if (bound > kRootScanCap)
            throw LimitError("integer root scan bound " + bound.str() + " exceeds cap " +
                             std::to_string(kRootScanCap));
        const long long limit = static_cast<long long>(bound);
        for (long long d = 1; d <= limit && rest.degree() >= 1; ++d) {
            if (rest.c.front() % d != 0) continue;
            for (long long cand : {d, -d}) {
                int mult = 0;
                while (rest.degree() >= 1) {
                    std::optional<IntPoly> quo = divide_linear(rest, BigInt(cand));
                    if (!quo) break;
                    rest = std::move(*quo);
                    ++mult;
                }
                if (mult > 0) found.emplace_back(cand, mult);
                if (rest.degree() < 1) break;
            }
        }
    }
    if (zeros > 0) found.emplace_back(0, zeros);
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    s.integer_part = std::move(found);
    if (rest.degree() >= 1) s.residual = std::move(rest);
    return s;
}

IntPoly expand_spectrum(const ExactSpectrum& s) {
    IntPoly p{1};
    for (const auto& [v, m] : s.integer_part)
        for (int i = 0; i < m; ++i) p = mul(p, IntPoly{-v, 1});
    if (s.residual) p = mul(p, *s.residual);
    return p;
}

bool spectra_equal(const ExactSpectrum& a, const ExactSpectrum& b) {
    return a.order == b.order && expand_spectrum(a) == expand_spectrum(b);
}

ExactSpectrum graph_spectrum(const Graph& g) { return extract_spectrum(laplacian_charpoly(g)); }

int distinct_eigenvalue_count(const ExactSpectrum& s) {
    int count = static_cast<int>(s.integer_part.size());
    if (s.residual)
        for (const auto& [roots, mult] : residual_multiplicities(*s.residual)) count += roots;
    return count;
}

int max_nonzero_multiplicity(const ExactSpectrum& s) {
    int best = 0;
    for (const auto& [v, m] : s.integer_part)
        if (v != 0) best = std::max(best, m);
    if (s.residual)
        for (const auto& [roots, mult] : residual_multiplicities(*s.residual))
            best = std::max(best, mult);
    return best;
}

std::vector<std::pair<int, int>> residual_multiplicities(const IntPoly& residual) {
    std::vector<std::pair<int, int>> out;
    const std::vector<IntPoly> parts = squarefree_decomposition(residual);
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i].degree() >= 1)
            out.emplace_back(parts[i].degree(), static_cast<int>(i) + 1);
    return out;
}

namespace {

// Eigenvalue multiset of an integral graph spectrum, one zero removed.
std::vector<std::pair<long long, int>> nonzero_part(const ExactSpectrum& s, const char* op) {
    if (!s.integral())
        throw std::invalid_argument(std::string(op) + ": spectrum has a non-integral part");
    if (s.multiplicity_of(0) < 1)
        throw std::invalid_argument(std::string(op) + ": not a graph spectrum (no zero eigenvalue)");
    std::vector<std::pair<long long, int>> out;
    for (const auto& [v, m] : s.integer_part) {
        const int keep = v == 0 ? m - 1 : m;
        if (keep > 0) out.emplace_back(v, keep);
    }
    return out;
}

ExactSpectrum collect(int order, std::vector<std::pair<long long, int>> values) {
    std::sort(values.begin(), values.end());
    ExactSpectrum s;
    s.order = order;
    for (const auto& [v, m] : values) {
        if (!s.integer_part.empty() && s.integer_part.back().first == v)
            s.integer_part.back().second += m;
        else
            s.integer_part.emplace_back(v, m);
    }
    std::reverse(s.integer_part.begin(), s.integer_part.end());
    return s;
}

}  // namespace

ExactSpectrum complement_spectrum(const ExactSpectrum& s) {
    const long long n = s.order;
    std::vector<std::pair<long long, int>> vals = nonzero_part(s, "complement_spectrum");
    for (auto& [v, m] : vals) v = n - v;
    vals.emplace_back(0, 1);
    return collect(s.order, std::move(vals));
}

ExactSpectrum join_spectrum(const ExactSpectrum& g, const ExactSpectrum& h) {
    const long long n = g.order, m = h.order;
    std::vector<std::pair<long long, int>> vals;
    for (auto [v, mu] : nonzero_part(g, "join_spectrum")) vals.emplace_back(v + m, mu);
    for (auto [v, mu] : nonzero_part(h, "join_spectrum")) vals.emplace_back(v + n, mu);
    vals.emplace_back(n + m, 1);
    vals.emplace_back(0, 1);
    return collect(static_cast<int>(n + m), std::move(vals));
}

bool divides_square(const IntPoly& p, long long alpha) {
    std::optional<IntPoly> once = divide_linear(p, BigInt(alpha));
    if (!once) return false;
    return divide_linear(*once, BigInt(alpha)).has_value();
}

bool submatrix_divisibility_check(const Graph& g, long long alpha, int m) {
    const int n = g.order();
    if (n < 6) throw std::invalid_argument("submatrix_divisibility_check: order must be at least 6");
    if (m < 1 || m > n - 2)
        throw std::invalid_argument("submatrix_divisibility_check: m must satisfy 1 <= m <= n-2");
    const ExactSpectrum s = graph_spectrum(g);
    if (s.multiplicity_of(alpha) != n - m)
        throw std::invalid_argument(
            "submatrix_divisibility_check: alpha must have multiplicity n - m");

    const IntMatrix lap = laplacian(g);
    const int size = m + 2;
    std::vector<int> pick(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (!divides_square(charpoly(principal_submatrix(lap, pick)), alpha)) return false;
        int i = size - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - size + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return true;
}

}  // namespace lapmult
