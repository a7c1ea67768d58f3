#pragma once

#include <vector>

#include "lapmult/graph.hpp"
#include "lapmult/matrix.hpp"

namespace lapmult {

inline constexpr double kEigenvalueTolerance = 1e-8;
inline constexpr double kInterlacingTolerance = 1e-6;

// Eigenvalues of a symmetric integer matrix by cyclic Jacobi rotations,
// sorted descending. Throws std::invalid_argument on a non-symmetric input.
std::vector<double> numeric_eigenvalues(const IntMatrix& m);

std::vector<double> numeric_laplacian_eigenvalues(const Graph& g);

// Cauchy interlacing for the principal submatrix on `keep`: with full
// eigenvalues l_1 >= ... >= l_n and submatrix eigenvalues t_1 >= ... >= t_m,
// checks l_i >= t_i >= l_{i+n-m} up to kInterlacingTolerance.
bool interlacing_check(const IntMatrix& m, const std::vector<int>& keep);

}  // namespace lapmult
