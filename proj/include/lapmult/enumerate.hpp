#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lapmult/classify.hpp"
#include "lapmult/graph.hpp"
#include "lapmult/polynomial.hpp"

namespace lapmult {

inline constexpr int kMaxEnumerationOrder = 9;

struct EnumerateOptions {
    int jobs = 1;
    std::string cache_dir;  // empty: no caching
};

// Every unlabeled simple graph of order n exactly once, as canonical
// representatives sorted by canonical form. Built by vertex augmentation
// from the order n-1 set. 1 <= n <= 9.
std::vector<Graph> all_graphs(int n, const EnumerateOptions& opts = {});

std::vector<Graph> connected_graphs(int n, const EnumerateOptions& opts = {});

// Connected graphs of order n grouped by exact Laplacian characteristic
// polynomial; values are graph6 strings of canonical representatives. n <= 8.
std::map<IntPoly, std::vector<std::string>> spectrum_buckets(int n,
                                                             const EnumerateOptions& opts = {});

struct LemmaViolation {
    std::string lemma;
    std::string graph6;
    std::string detail;
};

struct DlsViolation {
    IntPoly charpoly;
    std::vector<std::string> graphs;
};

struct VerifyOptions {
    int jobs = 1;
    bool skip_dls = false;
    bool allow_order9 = false;  // order 9 is a stretch run and must be opted into
    std::string cache_dir;
    MultiplicityPredicate predicate = MultiplicityPredicate::MaxMultiplicity;
};

struct EnumerationSummary {
    int order = 0;
    std::uint64_t total_graphs = 0;
    std::uint64_t connected_graphs = 0;
    std::vector<std::string> found_members;    // k_max = n-3, sorted canonical graph6
    std::vector<std::string> catalog_members;  // catalog(n, n-3), same encoding
    bool set_equal = false;
    bool dls_checked = false;
    std::vector<DlsViolation> dls_violations;
    std::vector<LemmaViolation> lemma_violations;
    MultiplicityPredicate predicate = MultiplicityPredicate::MaxMultiplicity;
};

// Enumerates order n, compares the found member set against the catalog,
// buckets spectra for the determined-by-spectrum check (n <= 8), and runs
// the property suites within their order bounds. Violations are data, not
// errors. 4 <= n <= 9; n = 9 requires allow_order9.
EnumerationSummary verify_theorem(int n, const VerifyOptions& opts = {});

}  // namespace lapmult
