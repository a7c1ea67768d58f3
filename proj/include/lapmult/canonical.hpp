#pragma once

#include <cstdint>
#include <tuple>

#include "lapmult/graph.hpp"

namespace lapmult {

// Minimal upper-triangle encoding over all vertex orderings compatible with a
// degree-based invariant refinement. Two graphs of the same order are
// isomorphic exactly when their codes agree. Supported for order <= 10 (the
// code is the triangle bit string, first pair in the highest bit, so integer
// comparison is lexicographic comparison).
struct CanonicalForm {
    int order = 0;
    std::uint64_t code = 0;

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        return a.order == b.order && a.code == b.code;
    }
    friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
        return std::tie(a.order, a.code) < std::tie(b.order, b.code);
    }
};

inline constexpr int kMaxCanonicalOrder = 10;

CanonicalForm canonical_form(const Graph& g);
Graph from_canonical(const CanonicalForm& form);
Graph canonical_representative(const Graph& g);
bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace lapmult
