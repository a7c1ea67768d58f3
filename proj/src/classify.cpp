#include "lapmult/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "lapmult/canonical.hpp"
#include "lapmult/errors.hpp"
#include "lapmult/structure.hpp"

namespace lapmult {

int k_max(const ExactSpectrum& s) { return max_nonzero_multiplicity(s); }

bool is_member(const ExactSpectrum& s, int k, MultiplicityPredicate pred) {
    if (pred == MultiplicityPredicate::MaxMultiplicity) return k_max(s) == k;
    for (const auto& [v, m] : s.integer_part)
        if (v != 0 && m == k) return true;
    if (s.residual)
        for (const auto& [roots, mult] : residual_multiplicities(*s.residual))
            if (mult == k) return true;
    return false;
}

namespace {

std::vector<int> ones(int count, int prefix1, int prefix2 = 0) {
    std::vector<int> parts;
    parts.push_back(prefix1);
    if (prefix2 > 0) parts.push_back(prefix2);
    parts.insert(parts.end(), static_cast<std::size_t>(count), 1);
    return parts;
}

ExactSpectrum predict(int order, std::vector<std::pair<long long, int>> integer_part,
                      std::optional<IntPoly> residual = std::nullopt) {
    ExactSpectrum s;
    s.order = order;
    s.integer_part = std::move(integer_part);
    s.residual = std::move(residual);
    return s;
}

CatalogEntry entry(std::string family, std::vector<int> params, std::string source,
                   ExactSpectrum predicted) {
    CatalogEntry e;
    e.family = std::move(family);
    e.params = std::move(params);
    e.graph = lapmult::family(e.family, e.params);
    e.predicted_spectrum = std::move(predicted);
    e.source = std::move(source);
    return e;
}

std::vector<CatalogEntry> catalog_unchecked(int n, int k) {
    const long long N = n;
    std::vector<CatalogEntry> out;

    if (k == n - 1) {
        out.push_back(entry("complete", {n}, "M1.1", predict(n, {{N, n - 1}, {0, 1}})));
        return out;
    }

    if (k == n - 2) {
        if (n % 2 == 0)
            out.push_back(entry("complete_bipartite", {n / 2, n / 2}, "M2.1",
                                predict(n, {{N, 1}, {N / 2, n - 2}, {0, 1}})));
        out.push_back(entry("star", {n}, "M2.2", predict(n, {{N, 1}, {1, n - 2}, {0, 1}})));
        out.push_back(entry("complete_minus_edge", {n}, "M2.3",
                            predict(n, {{N, n - 2}, {N - 2, 1}, {0, 1}})));
        return out;
    }

    // k = n - 3.
    if (n == 4) {
        out.push_back(entry("path", {4}, "S4.1",
                            predict(4, {{2, 1}, {0, 1}}, IntPoly{2, -4, 1})));
        out.push_back(
            entry("star_plus_edge", {4}, "S4.2", predict(4, {{4, 1}, {3, 1}, {1, 1}, {0, 1}})));
        return out;
    }
    if (n == 5) {
        IntPoly c5_residual = mul(IntPoly{5, -5, 1}, IntPoly{5, -5, 1});
        out.push_back(entry("cycle", {5}, "S5.1", predict(5, {{0, 1}}, std::move(c5_residual))));
        out.push_back(entry("complete_multipartite", {1, 2, 2}, "S5.2",
                            predict(5, {{5, 2}, {3, 2}, {0, 1}})));
        out.push_back(entry("complete_multipartite", {1, 1, 3}, "S5.3",
                            predict(5, {{5, 2}, {2, 2}, {0, 1}})));
        return out;
    }

    out.push_back(entry("eq1_graph", {n}, "G3.1",
                        predict(n, {{N, n - 3}, {N - 1, 1}, {N - 3, 1}, {0, 1}})));
    if (n % 2 == 1)
        out.push_back(entry("cone_two_cliques", {n}, "G4.1",
                            predict(n, {{N, 1}, {(N + 1) / 2, n - 3}, {1, 1}, {0, 1}})));
    if (n % 3 == 0)
        out.push_back(entry("split_join", {n}, "G4.2",
                            predict(n, {{N, 1}, {2 * N / 3, n - 3}, {N / 3, 1}, {0, 1}})));
    out.push_back(entry("complete_plus_pendant", {n}, "G4.3",
                        predict(n, {{N, 1}, {N - 1, n - 3}, {1, 1}, {0, 1}})));
    if (n % 2 == 0) {
        const long long m = N / 2;
        for (int r = 1; r <= n / 2 - 1; ++r)
            out.push_back(entry("gnr", {n / 2, r}, "G4.4",
                                predict(n, {{m, n - 3}, {0, 1}},
                                        IntPoly{2 * (m - r) * (m - r), -(3 * m - 2 * r), 1})));
    }
    out.push_back(entry("complete_bipartite", {2, n - 2}, "G5.1",
                        predict(n, {{N, 1}, {N - 2, 1}, {2, n - 3}, {0, 1}})));
    if (n % 2 == 0)
        out.push_back(entry("balanced_bipartite_plus_edge", {n}, "G5.2",
                            predict(n, {{N, 1}, {N / 2 + 2, 1}, {N / 2, n - 3}, {0, 1}})));
    out.push_back(entry("star_plus_edge", {n}, "G5.3",
                        predict(n, {{N, 1}, {3, 1}, {1, n - 3}, {0, 1}})));
    out.push_back(entry("complete_multipartite", ones(n - 3, 3), "G1.1",
                        predict(n, {{N, n - 3}, {N - 3, 2}, {0, 1}})));
    out.push_back(entry("complete_multipartite", ones(n - 4, 2, 2), "G1.2",
                        predict(n, {{N, n - 3}, {N - 2, 2}, {0, 1}})));
    out.push_back(entry("complete_multipartite", {1, 1, n - 2}, "G2.1",
                        predict(n, {{N, 2}, {2, n - 3}, {0, 1}})));
    if (n % 2 == 1)
        out.push_back(entry("complete_multipartite", {1, (n - 1) / 2, (n - 1) / 2}, "G2.2",
                            predict(n, {{N, 2}, {(N + 1) / 2, n - 3}, {0, 1}})));
    if (n % 3 == 0)
        out.push_back(entry("complete_multipartite", {n / 3, n / 3, n / 3}, "G2.3",
                            predict(n, {{N, 2}, {2 * N / 3, n - 3}, {0, 1}})));
    return out;
}

// Pairwise non-isomorphic filter, first occurrence wins. Identical expanded
// spectra are the only candidates for a collision; within reach of the
// canonical form that is confirmed exactly, beyond it equality of predicted
// spectra is taken as identification (the catalog is spectrally determined).
std::vector<CatalogEntry> dedup(std::vector<CatalogEntry> entries, int n) {
    std::vector<CatalogEntry> out;
    std::vector<IntPoly> polys;
    std::vector<CanonicalForm> forms;
    const bool exact = n <= kMaxCanonicalOrder;
    for (CatalogEntry& e : entries) {
        const IntPoly poly = expand_spectrum(e.predicted_spectrum);
        const CanonicalForm form = exact ? canonical_form(e.graph) : CanonicalForm{};
        bool dup = false;
        for (std::size_t i = 0; i < out.size() && !dup; ++i) {
            if (polys[i] != poly) continue;
            dup = !exact || forms[i] == form;
        }
        if (dup) continue;
        polys.push_back(poly);
        forms.push_back(form);
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

std::vector<CatalogEntry> catalog(int n, int k) {
    if (n < 4) throw std::invalid_argument("catalog: order must be at least 4");
    if (k != n - 1 && k != n - 2 && k != n - 3)
        throw std::invalid_argument("catalog: k must be one of n-1, n-2, n-3");
    return dedup(catalog_unchecked(n, k), n);
}

std::vector<SpectrumMismatch> verify_catalog_spectra(int n) {
    if (n < 4 || n > 40)
        throw std::invalid_argument("verify_catalog_spectra: order must be in 4..40");
    std::vector<SpectrumMismatch> out;
    for (int k : {n - 1, n - 2, n - 3}) {
        for (const CatalogEntry& e : catalog(n, k)) {
            ExactSpectrum computed = graph_spectrum(e.graph);
            if (!spectra_equal(computed, e.predicted_spectrum))
                out.push_back({e, std::move(computed)});
        }
    }
    return out;
}

namespace {

// Distinct nonzero eigenvalues strictly greater than v: exact integers plus
// residual roots located through the squarefree parts.
int count_greater(const ExactSpectrum& s, long long v) {
    int count = 0;
    for (const auto& [u, m] : s.integer_part)
        if (u != 0 && u > v) ++count;
    if (s.residual)
        for (const RealRoot& root : real_roots(*s.residual))
            if (root.value > static_cast<double>(v)) ++count;
    return count;
}

}  // namespace

ClassificationReport classify(const Graph& g, MultiplicityPredicate pred) {
    const int n = g.order();
    if (n < 4) throw std::invalid_argument("classify: order must be at least 4");
    if (!is_connected(g)) throw std::invalid_argument("classify: graph must be connected");

    ClassificationReport rep;
    rep.order = n;
    rep.predicate = pred;
    rep.spectrum = graph_spectrum(g);
    rep.distinct_count = distinct_eigenvalue_count(rep.spectrum);
    rep.k_max = k_max(rep.spectrum);

    const bool member = is_member(rep.spectrum, n - 3, pred);
    if (!member) {
        rep.family_class = "not-in-G(n,n-3)";
    } else if (n < 6) {
        rep.family_class = "small-n-special";
    } else {
        long long v = 0;
        bool have = false;
        for (const auto& [u, m] : rep.spectrum.integer_part)
            if (u != 0 && m == n - 3) {
                v = u;
                have = true;
            }
        if (!have)
            throw std::logic_error("classify: multiplicity n-3 eigenvalue not integral");
        const int nonzero_distinct =
            rep.distinct_count - (rep.spectrum.multiplicity_of(0) > 0 ? 1 : 0);
        const int above = count_greater(rep.spectrum, v);
        if (nonzero_distinct == 2)
            rep.family_class = above == 0 ? "G1" : "G2";
        else if (nonzero_distinct == 3)
            rep.family_class = above == 0 ? "G3" : (above == 1 ? "G4" : "G5");
        else
            throw std::logic_error("classify: unexpected distinct eigenvalue count for a member");
    }

    // Match against the catalog that fits the observed multiplicity.
    const int k = member ? n - 3 : rep.k_max;
    if (k == n - 1 || k == n - 2 || k == n - 3) {
        const std::vector<CatalogEntry> cat = catalog(n, k);
        if (n <= kMaxCanonicalOrder) {
            const CanonicalForm mine = canonical_form(g);
            for (const CatalogEntry& e : cat)
                if (canonical_form(e.graph) == mine) {
                    rep.matched_family = MatchedFamily{e.family, e.params, e.source};
                    break;
                }
        } else {
            const IntPoly mine = expand_spectrum(rep.spectrum);
            for (const CatalogEntry& e : cat)
                if (laplacian_charpoly(e.graph) == mine) {
                    rep.matched_family = MatchedFamily{e.family, e.params, e.source};
                    break;
                }
        }
    }
    return rep;
}

}  // namespace lapmult
