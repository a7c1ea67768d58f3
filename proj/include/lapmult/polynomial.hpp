#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace lapmult {

using BigInt = boost::multiprecision::cpp_int;

// Integer polynomial, coefficients ascending by degree. Normal form keeps no
// leading zeros; the zero polynomial has an empty coefficient list.
struct IntPoly {
    std::vector<BigInt> c;

    IntPoly() = default;
    IntPoly(std::initializer_list<long long> ascending);
    explicit IntPoly(std::vector<BigInt> ascending);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const BigInt& coeff(int k) const;  // 0 beyond the stored range
    BigInt evaluate(const BigInt& x) const;
    void normalize();

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c == b.c; }
    // Total order for use as a map key: degree first, then coefficients from
    // the highest degree down.
    friend bool operator<(const IntPoly& a, const IntPoly& b);
};

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly mul(const IntPoly& a, const BigInt& k);

// Quotient when the division is exact over the integers, nothing otherwise.
std::optional<IntPoly> divide_exact(const IntPoly& num, const IntPoly& den);

// Quotient by (x - r) via synthetic division; nothing if r is not a root.
std::optional<IntPoly> divide_linear(const IntPoly& p, const BigInt& r);

IntPoly derivative(const IntPoly& p);

BigInt content(const IntPoly& p);                // gcd of coefficients, 0 for the zero poly
IntPoly primitive_part(const IntPoly& p);        // positive leading coefficient
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);  // primitive, positive leading

// Yun's algorithm. result[i] is the primitive product of the distinct factors
// of multiplicity i+1 (constant 1 when there are none), so that
// prod result[i]^(i+1) equals p up to a constant.
std::vector<IntPoly> squarefree_decomposition(const IntPoly& p);

IntPoly taylor_shift(const IntPoly& p, const BigInt& a);  // p(x + a)
IntPoly reflect(const IntPoly& p);                        // p(-x)

// Upper bound on the magnitude of every root, from coefficient bit lengths
// (Fujiwara-style). Intended as a scan limit for integer root extraction.
BigInt root_magnitude_bound(const IntPoly& p);

// All complex roots by Durand-Kerner iteration. Best on squarefree input of
// moderate degree; coefficients must fit in double after making the input
// monic.
std::vector<std::complex<double>> durand_kerner(const IntPoly& p);

// Real roots with exact multiplicities: Yun for the multiplicity structure,
// Durand-Kerner on each squarefree part for the values. Sorted descending.
// Expects a polynomial whose roots are all real.
struct RealRoot {
    double value;
    int multiplicity;
};
std::vector<RealRoot> real_roots(const IntPoly& p);

std::string to_string(const IntPoly& p);                 // "x^2 - 5*x + 5" style
std::vector<std::string> coeff_strings(const IntPoly& p);  // ascending, exact decimal

}  // namespace lapmult
