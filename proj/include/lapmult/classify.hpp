#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lapmult/graph.hpp"
#include "lapmult/spectrum.hpp"

namespace lapmult {

// Membership in G(n,k) is judged on the nonzero eigenvalues. MaxMultiplicity
// (the default) asks for the maximum multiplicity to equal k; Literal asks
// for some nonzero eigenvalue of multiplicity exactly k. The two agree on
// k = n-3 for n >= 6 but differ on small orders; see the README.
enum class MultiplicityPredicate { MaxMultiplicity, Literal };

int k_max(const ExactSpectrum& s);

bool is_member(const ExactSpectrum& s, int k, MultiplicityPredicate pred);

struct MatchedFamily {
    std::string family;
    std::vector<int> params;
    std::string source;
};

struct ClassificationReport {
    int order = 0;
    ExactSpectrum spectrum;
    int distinct_count = 0;
    int k_max = 0;
    // "G1".."G5" for members of order >= 6, "small-n-special" for members of
    // order 4 or 5, "not-in-G(n,n-3)" otherwise.
    std::string family_class;
    std::optional<MatchedFamily> matched_family;
    MultiplicityPredicate predicate = MultiplicityPredicate::MaxMultiplicity;
};

// Requires g connected with 4 <= order. Class assignment for members of
// order >= 6: the multiplicity-(n-3) eigenvalue is integral; its position
// among the distinct nonzero eigenvalues in descending order gives
// G1/G2 (two distinct nonzero) or G3/G4/G5 (three distinct nonzero).
ClassificationReport classify(const Graph& g,
                              MultiplicityPredicate pred = MultiplicityPredicate::MaxMultiplicity);

struct CatalogEntry {
    std::string family;
    std::vector<int> params;
    Graph graph;
    ExactSpectrum predicted_spectrum;
    std::string source;  // stable anchor tag, e.g. "G4.2"; see README for the map
};

// The known membership lists: k = n-1 (complete), k = n-2, and k = n-3 for
// n >= 6 (classes G1..G5) or n in {4,5} (the small-order lists). Entries are
// deduplicated by isomorphism. Unsupported (n,k) throws std::invalid_argument.
std::vector<CatalogEntry> catalog(int n, int k);

struct SpectrumMismatch {
    CatalogEntry entry;
    ExactSpectrum computed;
};

// Recomputes every catalog entry's spectrum exactly and compares with the
// prediction; 4 <= n <= 40. Returns the discrepancies (expected none).
std::vector<SpectrumMismatch> verify_catalog_spectra(int n);

}  // namespace lapmult
