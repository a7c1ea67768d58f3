#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lapmult/graph.hpp"
#include "lapmult/matrix.hpp"
#include "lapmult/polynomial.hpp"

namespace lapmult {

// Factored Laplacian spectrum: the integer eigenvalues with multiplicities
// (value descending), plus whatever polynomial factor has no integer roots.
// order is the degree of the original polynomial, so order = sum of integer
// multiplicities + degree of the residual.
struct ExactSpectrum {
    int order = 0;
    std::vector<std::pair<long long, int>> integer_part;
    std::optional<IntPoly> residual;  // degree >= 2 when present, no integer roots

    int multiplicity_of(long long value) const;
    bool integral() const { return !residual.has_value(); }
};

// Peels integer roots off a monic integer polynomial to full multiplicity.
// Candidate roots are divisors of the lowest nonzero coefficient up to the
// root magnitude bound; a bound beyond the scan cap raises LimitError.
ExactSpectrum extract_spectrum(const IntPoly& p);

// Rebuilds the polynomial: product of (x - v)^m times the residual.
IntPoly expand_spectrum(const ExactSpectrum& s);

bool spectra_equal(const ExactSpectrum& a, const ExactSpectrum& b);

ExactSpectrum graph_spectrum(const Graph& g);

// Number of distinct eigenvalues (integer values plus distinct residual
// roots, counted exactly through the squarefree structure).
int distinct_eigenvalue_count(const ExactSpectrum& s);

// Largest multiplicity over the nonzero eigenvalues (integer and residual).
int max_nonzero_multiplicity(const ExactSpectrum& s);

// Multiplicities of the residual's roots via its squarefree decomposition:
// (root count, multiplicity) per level, multiplicity ascending.
std::vector<std::pair<int, int>> residual_multiplicities(const IntPoly& residual);

// Spectrum of the complement graph: eigenvalue mu != 0 maps to n - mu, one
// zero stays. Requires an integral spectrum of a graph (a zero eigenvalue).
ExactSpectrum complement_spectrum(const ExactSpectrum& s);

// Spectrum of the join from the parts' spectra: n + m, then m + mu over the
// nonzero part of g, n + mu over the nonzero part of h, then 0. Requires
// integral spectra of graphs.
ExactSpectrum join_spectrum(const ExactSpectrum& g, const ExactSpectrum& h);

// Checks (x - alpha)^2 divides the characteristic polynomial of every
// principal submatrix of order m+2 of L(g). alpha must be a Laplacian
// eigenvalue of multiplicity exactly n - m with 1 <= m <= n-2 and n >= 6.
bool submatrix_divisibility_check(const Graph& g, long long alpha, int m);

// The polynomial-level core of the check above: (x - alpha)^2 divides p.
bool divides_square(const IntPoly& p, long long alpha);

}  // namespace lapmult
