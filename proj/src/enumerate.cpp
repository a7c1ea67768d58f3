#include "lapmult/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <optional>
#include <thread>
#include <unordered_set>

#include "lapmult/canonical.hpp"
#include "lapmult/errors.hpp"
#include "lapmult/numeric.hpp"
#include "lapmult/spectrum.hpp"
#include "lapmult/structure.hpp"

namespace lapmult {

namespace {

constexpr char kCacheMagic[4] = {'L', 'M', 'G', 'C'};
constexpr std::uint16_t kCacheVersion = 1;

std::string cache_path(const std::string& dir, int n) {
    return dir + "/graphs-n" + std::to_string(n) + "-v" + std::to_string(kCacheVersion) + ".bin";
}

std::optional<std::vector<std::uint64_t>> load_cache(const std::string& dir, int n) {
    std::ifstream in(cache_path(dir, n), std::ios::binary);
    if (!in) return std::nullopt;
    char magic[4];
    std::uint16_t version = 0, order = 0;
    std::uint64_t count = 0;
    in.read(magic, 4);
    in.read(reinterpret_cast<char*>(&version), sizeof version);
    in.read(reinterpret_cast<char*>(&order), sizeof order);
    in.read(reinterpret_cast<char*>(&count), sizeof count);
    if (!in || std::memcmp(magic, kCacheMagic, 4) != 0 || version != kCacheVersion ||
        order != static_cast<std::uint16_t>(n))
        return std::nullopt;
    std::vector<std::uint64_t> codes(count);
    in.read(reinterpret_cast<char*>(codes.data()),
            static_cast<std::streamsize>(count * sizeof(std::uint64_t)));
    if (!in) return std::nullopt;
    return codes;
}

void save_cache(const std::string& dir, int n, const std::vector<std::uint64_t>& codes) {
    std::error_code ignored;
    std::filesystem::create_directories(dir, ignored);
    const std::string path = cache_path(dir, n);
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) return;  // cache is best-effort
        const std::uint16_t order = static_cast<std::uint16_t>(n);
        const std::uint64_t count = codes.size();
        out.write(kCacheMagic, 4);
        out.write(reinterpret_cast<const char*>(&kCacheVersion), sizeof kCacheVersion);
        out.write(reinterpret_cast<const char*>(&order), sizeof order);
        out.write(reinterpret_cast<const char*>(&count), sizeof count);
        out.write(reinterpret_cast<const char*>(codes.data()),
                  static_cast<std::streamsize>(codes.size() * sizeof(std::uint64_t)));
        if (!out) {
            out.close();
            std::remove(tmp.c_str());
            return;
        }
    }
    std::rename(tmp.c_str(), path.c_str());
}

// All canonical codes of order n obtained by attaching one vertex to each
// parent in every possible way.
std::vector<std::uint64_t> augment(const std::vector<Graph>& parents, int n, int jobs) {
    const std::uint32_t masks = std::uint32_t{1} << (n - 1);
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(parents.size())));

    std::vector<std::unordered_set<std::uint64_t>> found(static_cast<std::size_t>(workers));
    const auto run = [&](int w) {
        std::unordered_set<std::uint64_t>& codes = found[static_cast<std::size_t>(w)];
        for (std::size_t p = static_cast<std::size_t>(w); p < parents.size();
             p += static_cast<std::size_t>(workers)) {
            const Graph& parent = parents[p];
            for (std::uint32_t mask = 0; mask < masks; ++mask) {
                Graph child(n);
                for (int u = 0; u < n - 1; ++u)
                    for (int v = u + 1; v < n - 1; ++v)
                        if (parent.has_edge(u, v)) child.add_edge(u, v);
                for (int u = 0; u < n - 1; ++u)
                    if ((mask >> u) & 1) child.add_edge(u, n - 1);
                codes.insert(canonical_form(child).code);
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (std::thread& t : pool) t.join();
    }

    std::unordered_set<std::uint64_t> merged;
    for (const auto& codes : found) merged.insert(codes.begin(), codes.end());
    std::vector<std::uint64_t> out(merged.begin(), merged.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Graph> all_graphs(int n, const EnumerateOptions& opts) {
    if (n < 1) throw std::invalid_argument("all_graphs: order must be at least 1");
    if (n > kMaxEnumerationOrder)
        throw LimitError("all_graphs: order " + std::to_string(n) + " exceeds supported maximum " +
                         std::to_string(kMaxEnumerationOrder));

    std::vector<std::uint64_t> codes;
    bool from_cache = false;
    if (!opts.cache_dir.empty()) {
        if (auto cached = load_cache(opts.cache_dir, n)) {
            codes = std::move(*cached);
            from_cache = true;
        }
    }
    if (!from_cache) {
        if (n == 1) {
            codes = {0};
        } else {
            codes = augment(all_graphs(n - 1, opts), n, opts.jobs);
        }
        if (!opts.cache_dir.empty()) save_cache(opts.cache_dir, n, codes);
    }

    std::vector<Graph> out;
    out.reserve(codes.size());
    for (std::uint64_t code : codes) out.push_back(from_canonical({n, code}));
    return out;
}

std::vector<Graph> connected_graphs(int n, const EnumerateOptions& opts) {
    std::vector<Graph> out;
    for (Graph& g : all_graphs(n, opts))
        if (is_connected(g)) out.push_back(std::move(g));
    return out;
}

std::map<IntPoly, std::vector<std::string>> spectrum_buckets(int n, const EnumerateOptions& opts) {
    if (n > 8) throw LimitError("spectrum_buckets: order must be at most 8");
    std::map<IntPoly, std::vector<std::string>> buckets;
    for (const Graph& g : connected_graphs(n, opts))
        buckets[laplacian_charpoly(g)].push_back(to_graph6(g));
    return buckets;
}

namespace {

// Components all complete and the nontrivial ones of one common order: the
// shape with exactly two distinct Laplacian eigenvalues.
bool equal_cliques_plus_isolates(const Graph& g) {
    int clique_order = 0;
    for (const std::vector<int>& block : components(g)) {
        const int b = static_cast<int>(block.size());
        if (b == 1) continue;
        const Graph sub = g.induced_subgraph(block);
        if (sub.edge_count() != b * (b - 1) / 2) return false;
        if (clique_order == 0)
            clique_order = b;
        else if (clique_order != b)
            return false;
    }
    return clique_order > 0;
}

std::string plural(std::uint64_t n, const char* unit) {
    return std::to_string(n) + " " + unit + (n == 1 ? "" : "s");
}

}  // namespace

EnumerationSummary verify_theorem(int n, const VerifyOptions& opts) {
    if (n < 4) throw std::invalid_argument("verify_theorem: order must be at least 4");
    if (n > kMaxEnumerationOrder)
        throw LimitError("verify_theorem: order must be at most " +
                         std::to_string(kMaxEnumerationOrder));
    if (n == 9 && !opts.allow_order9)
        throw LimitError("verify_theorem: order 9 is a stretch run; enable it explicitly");

    const EnumerateOptions eopts{opts.jobs, opts.cache_dir};
    EnumerationSummary summary;
    summary.order = n;
    summary.predicate = opts.predicate;

    const std::vector<Graph> all = all_graphs(n, eopts);
    summary.total_graphs = all.size();

    // Catalog side: canonical graph6 plus charpolys for the spectrum buckets.
    std::vector<IntPoly> protected_polys;
    for (int k : {n - 1, n - 2, n - 3})
        for (const CatalogEntry& e : catalog(n, k))
            protected_polys.push_back(laplacian_charpoly(e.graph));
    std::sort(protected_polys.begin(), protected_polys.end());
    for (const CatalogEntry& e : catalog(n, n - 3))
        summary.catalog_members.push_back(to_graph6(canonical_representative(e.graph)));
    std::sort(summary.catalog_members.begin(), summary.catalog_members.end());

    const bool dls = !opts.skip_dls && n <= 8;
    summary.dls_checked = dls;
    std::map<IntPoly, std::vector<std::string>> buckets;

    std::vector<LemmaViolation>& viols = summary.lemma_violations;
    const Graph patterns[3] = {j1(), j2(), j3()};
    std::vector<CanonicalForm> gnr_forms;
    if (n % 2 == 0)
        for (int r = 1; r <= n / 2 - 1; ++r) gnr_forms.push_back(canonical_form(gnr(n / 2, r)));

    for (const Graph& g : all) {
        const std::string g6 = to_graph6(g);
        const bool connected = is_connected(g);
        if (connected) ++summary.connected_graphs;

        const IntPoly poly = laplacian_charpoly(g);
        const ExactSpectrum spec = extract_spectrum(poly);
        const int distinct = distinct_eigenvalue_count(spec);

        if (n <= 7) {
            const int comps = static_cast<int>(components(g).size());
            if (spec.multiplicity_of(0) != comps)
                viols.push_back({"zero-multiplicity-components", g6,
                                 "m(0) = " + std::to_string(spec.multiplicity_of(0)) + ", " +
                                     plural(comps, "component")});
            const bool two = distinct == 2;
            if (two != equal_cliques_plus_isolates(g))
                viols.push_back({"two-distinct-eigenvalues", g6,
                                 two ? "two eigenvalues but not equal cliques plus isolates"
                                     : "equal cliques plus isolates but " +
                                           plural(static_cast<std::uint64_t>(distinct),
                                                  "distinct eigenvalue")});
            const bool cograph = is_cograph(g);
            const bool p4_free = !contains_induced(g, path(4));
            bool small_diameters = true;
            const std::uint32_t subsets = std::uint32_t{1} << n;
            for (std::uint32_t set = 0; set < subsets && small_diameters; ++set) {
                if (std::popcount(set) < 2) continue;
                std::vector<int> keep;
                for (int v = 0; v < n; ++v)
                    if ((set >> v) & 1) keep.push_back(v);
                const Graph sub = g.induced_subgraph(keep);
                const int d = diameter(sub);
                if (d != kInfiniteDiameter && d > 2) small_diameters = false;
            }
            if (cograph != p4_free || cograph != small_diameters)
                viols.push_back({"cograph-equivalence", g6,
                                 std::string("cograph=") + (cograph ? "yes" : "no") +
                                     " P4-free=" + (p4_free ? "yes" : "no") +
                                     " induced-diameters<=2=" + (small_diameters ? "yes" : "no")});
        }

        if (connected && n <= 8) {
            const int d = diameter(g);
            if (d > distinct - 1)
                viols.push_back({"diameter-bound", g6,
                                 "diameter " + std::to_string(d) + " with " +
                                     plural(static_cast<std::uint64_t>(distinct),
                                            "distinct eigenvalue")});
            if (spec.residual)
                for (const auto& [roots, mult] : residual_multiplicities(*spec.residual))
                    if (mult >= (n + 1) / 2)
                        viols.push_back({"high-multiplicity-integrality", g6,
                                         "non-integer eigenvalue of multiplicity " +
                                             std::to_string(mult)});
        }

        if (!connected) continue;
        if (dls) buckets[poly].push_back(g6);

        if (!is_member(spec, n - 3, opts.predicate)) continue;
        summary.found_members.push_back(g6);

        if (n >= 6) {
            const char* names[3] = {"J1", "J2", "J3"};
            for (int i = 0; i < 3; ++i)
                if (contains_induced(g, patterns[i]))
                    viols.push_back({"forbidden-induced", g6,
                                     std::string("contains induced ") + names[i]});
            const CanonicalForm form = canonical_form(g);
            const bool is_gnr =
                std::find(gnr_forms.begin(), gnr_forms.end(), form) != gnr_forms.end();
            const bool co_connected = is_connected(complement(g));
            if (is_gnr && !co_connected)
                viols.push_back({"complement-structure", g6, "gnr member with disconnected complement"});
            if (!is_gnr) {
                if (co_connected)
                    viols.push_back({"complement-structure", g6, "complement is connected"});
                if (!is_cograph(g))
                    viols.push_back({"complement-structure", g6, "member is not a cograph"});
            }
        }
    }

    std::sort(summary.found_members.begin(), summary.found_members.end());
    summary.set_equal = summary.found_members == summary.catalog_members;

    if (dls)
        for (const auto& [poly, graphs] : buckets) {
            if (graphs.size() < 2) continue;
            if (!std::binary_search(protected_polys.begin(), protected_polys.end(), poly)) continue;
            summary.dls_violations.push_back({poly, graphs});
        }

    std::sort(viols.begin(), viols.end(), [](const LemmaViolation& a, const LemmaViolation& b) {
        if (a.lemma != b.lemma) return a.lemma < b.lemma;
        if (a.graph6 != b.graph6) return a.graph6 < b.graph6;
        return a.detail < b.detail;
    });
    return summary;
}

}  // namespace lapmult
