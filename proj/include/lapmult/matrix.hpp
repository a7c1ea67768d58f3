#pragma once

#include <vector>

#include "lapmult/graph.hpp"
#include "lapmult/polynomial.hpp"

namespace lapmult {

// Dense integer matrix, row major.
struct IntMatrix {
    int n = 0;
    std::vector<BigInt> a;

    IntMatrix() = default;
    explicit IntMatrix(int order) : n(order), a(static_cast<std::size_t>(order) * order, 0) {}

    BigInt& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const BigInt& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
    bool symmetric() const;
};

IntMatrix laplacian(const Graph& g);

// Rows/columns listed in `keep`, in that order.
IntMatrix principal_submatrix(const IntMatrix& m, const std::vector<int>& keep);

// det(xI - M), monic, exact integer coefficients (division-free algorithm,
// so it is valid over any commutative ring and in particular never divides).
IntPoly charpoly(const IntMatrix& m);

IntPoly laplacian_charpoly(const Graph& g);

}  // namespace lapmult
