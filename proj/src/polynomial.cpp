#include "lapmult/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lapmult/errors.hpp"

namespace lapmult {

IntPoly::IntPoly(std::initializer_list<long long> ascending) {
    for (long long v : ascending) c.emplace_back(v);
    normalize();
}

IntPoly::IntPoly(std::vector<BigInt> ascending) : c(std::move(ascending)) { normalize(); }

const BigInt& IntPoly::coeff(int k) const {
    static const BigInt zero = 0;
    if (k < 0 || k >= static_cast<int>(c.size())) return zero;
    return c[static_cast<std::size_t>(k)];
}

BigInt IntPoly::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

void IntPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

bool operator<(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int k = a.degree(); k >= 0; --k)
        if (a.coeff(k) != b.coeff(k)) return a.coeff(k) < b.coeff(k);
    return false;
}

IntPoly add(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> out(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return IntPoly(std::move(out));
}

IntPoly sub(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> out(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return IntPoly(std::move(out));
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<BigInt> out(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) out[i + j] += a.c[i] * b.c[j];
    return IntPoly(std::move(out));
}

IntPoly mul(const IntPoly& a, const BigInt& k) {
    std::vector<BigInt> out = a.c;
    for (BigInt& v : out) v *= k;
    return IntPoly(std::move(out));
}

std::optional<IntPoly> divide_exact(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
    if (num.is_zero()) return IntPoly();
    if (num.degree() < den.degree()) return std::nullopt;
    std::vector<BigInt> rem = num.c;
    std::vector<BigInt> quo(static_cast<std::size_t>(num.degree() - den.degree()) + 1, 0);
    const BigInt& lead = den.c.back();
    for (int k = num.degree() - den.degree(); k >= 0; --k) {
        const BigInt& top = rem[static_cast<std::size_t>(k + den.degree())];
        if (top == 0) continue;
        if (top % lead != 0) return std::nullopt;
        BigInt q = top / lead;
        quo[static_cast<std::size_t>(k)] = q;
        for (int i = 0; i <= den.degree(); ++i)
            rem[static_cast<std::size_t>(k + i)] -= q * den.c[static_cast<std::size_t>(i)];
    }
    for (const BigInt& v : rem)
        if (v != 0) return std::nullopt;
    return IntPoly(std::move(quo));
}

std::optional<IntPoly> divide_linear(const IntPoly& p, const BigInt& r) {
    if (p.degree() < 1) return std::nullopt;
    std::vector<BigInt> quo(static_cast<std::size_t>(p.degree()), 0);
    BigInt carry = 0;
    for (int k = p.degree(); k >= 1; --k) {
        carry = carry * r + p.c[static_cast<std::size_t>(k)];
        quo[static_cast<std::size_t>(k - 1)] = carry;
    }
    if (carry * r + p.c[0] != 0) return std::nullopt;
    return IntPoly(std::move(quo));
}

IntPoly derivative(const IntPoly& p) {
    if (p.degree() < 1) return IntPoly();
    std::vector<BigInt> out(static_cast<std::size_t>(p.degree()), 0);
    for (int k = 1; k <= p.degree(); ++k)
        out[static_cast<std::size_t>(k - 1)] = p.c[static_cast<std::size_t>(k)] * k;
    return IntPoly(std::move(out));
}

BigInt content(const IntPoly& p) {
    BigInt g = 0;
    for (const BigInt& v : p.c) g = boost::multiprecision::gcd(g, v);
    return g;
}

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return IntPoly();
    BigInt g = content(p);
    if (p.c.back() < 0) g = -g;
    std::vector<BigInt> out = p.c;
    for (BigInt& v : out) v /= g;
    return IntPoly(std::move(out));
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    IntPoly u = primitive_part(a), v = primitive_part(b);
    if (u.is_zero()) return v;
    if (v.is_zero()) return u;
    if (u.degree() < v.degree()) std::swap(u, v);
    // Primitive remainder sequence.
    while (!v.is_zero()) {
        int shift = u.degree() - v.degree();
        BigInt scale = 1;
        for (int i = 0; i <= shift; ++i) scale *= v.c.back();
        IntPoly r = mul(u, scale);
        // Ordinary remainder of scale*u by v; exact over the integers.
        const BigInt& lead = v.c.back();
        for (int k = r.degree(); k >= v.degree(); --k) {
            const BigInt& top = r.coeff(k);
            if (top == 0) continue;
            BigInt q = top / lead;
            for (int i = 0; i <= v.degree(); ++i)
                r.c[static_cast<std::size_t>(k - v.degree() + i)] -=
                    q * v.c[static_cast<std::size_t>(i)];
        }
        r.normalize();
        u = v;
        v = primitive_part(r);
    }
    BigInt cg = boost::multiprecision::gcd(content(a), content(b));
    return cg <= 1 ? u : mul(u, cg);
}

namespace {

IntPoly must_divide(const IntPoly& num, const IntPoly& den) {
    std::optional<IntPoly> q = divide_exact(num, den);
    if (!q) throw std::logic_error("inexact division in squarefree decomposition");
    return std::move(*q);
}

}  // namespace

std::vector<IntPoly> squarefree_decomposition(const IntPoly& p) {
    if (p.degree() < 1) return {};
    const IntPoly one{1};
    IntPoly pp = primitive_part(p);
    IntPoly g = poly_gcd(pp, derivative(pp));
    std::vector<IntPoly> parts;
    if (g.degree() == 0) {
        parts.push_back(pp);
        return parts;
    }
    IntPoly b = must_divide(pp, g);
    IntPoly c = must_divide(derivative(pp), g);
    IntPoly d = sub(c, derivative(b));
    while (b.degree() > 0) {
        IntPoly a = poly_gcd(b, d);
        parts.push_back(a);
        b = must_divide(b, a);
        c = must_divide(d, a);
        d = sub(c, derivative(b));
    }
    while (!parts.empty() && parts.back().degree() == 0) parts.pop_back();
    for (IntPoly& part : parts)
        if (part.degree() == 0) part = one;
    return parts;
}

IntPoly taylor_shift(const IntPoly& p, const BigInt& a) {
    IntPoly out = p;
    for (int i = 0; i <= out.degree(); ++i)
        for (int j = out.degree() - 1; j >= i; --j)
            out.c[static_cast<std::size_t>(j)] += a * out.c[static_cast<std::size_t>(j + 1)];
    out.normalize();
    return out;
}

IntPoly reflect(const IntPoly& p) {
    IntPoly out = p;
    for (int k = 1; k <= out.degree(); k += 2) out.c[static_cast<std::size_t>(k)] = -out.c[static_cast<std::size_t>(k)];
    return out;
}

BigInt root_magnitude_bound(const IntPoly& p) {
    if (p.degree() < 1) return 0;
    const int n = p.degree();
    const auto bits = [](const BigInt& v) {
        return v == 0 ? 0 : static_cast<long>(boost::multiprecision::msb(boost::multiprecision::abs(v))) + 1;
    };
    const long lead_bits = bits(p.c.back());
    double best = 0.0;
    for (int k = 1; k <= n; ++k) {
        const BigInt& ck = p.coeff(n - k);
        if (ck == 0) continue;
        // |c_{n-k}/c_n|^(1/k) <= 2^((bits(c_{n-k}) - bits(c_n) + 1) / k)
        double est = std::pow(2.0, static_cast<double>(bits(ck) - lead_bits + 1) / k);
        best = std::max(best, est);
    }
    double bound = 2.0 * best + 1.0;
    if (bound > 1e18) throw LimitError("root magnitude bound overflows the scan range");
    return BigInt(static_cast<long long>(std::ceil(bound)));
}

std::vector<std::complex<double>> durand_kerner(const IntPoly& p) {
    const int n = p.degree();
    if (n < 1) return {};
    std::vector<std::complex<double>> a(static_cast<std::size_t>(n));  // monic, a[k] = coeff of x^k
    const double lead = static_cast<double>(p.c.back());
    double radius = 0.0;
    for (int k = 0; k < n; ++k) {
        a[static_cast<std::size_t>(k)] = static_cast<double>(p.c[static_cast<std::size_t>(k)]) / lead;
        radius = std::max(radius, std::abs(a[static_cast<std::size_t>(k)]));
    }
    radius = 1.0 + radius;
    if (!std::isfinite(radius)) throw LimitError("coefficients too large for numeric root finding");

    std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
    const std::complex<double> seed(0.4, 0.9);
    std::complex<double> w(1.0, 0.0);
    for (int k = 0; k < n; ++k) {
        w *= seed;
        z[static_cast<std::size_t>(k)] = radius * w;
    }
    const auto eval = [&](std::complex<double> x) {
        std::complex<double> acc(1.0, 0.0);
        for (int k = n - 1; k >= 0; --k) acc = acc * x + a[static_cast<std::size_t>(k)];
        return acc;
    };
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0.0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> den(1.0, 0.0);
            for (int j = 0; j < n; ++j)
                if (j != i) den *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
            if (den == std::complex<double>(0.0, 0.0)) den = 1e-30;
            std::complex<double> delta = eval(z[static_cast<std::size_t>(i)]) / den;
            z[static_cast<std::size_t>(i)] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-13 * radius) break;
    }
    return z;
}

std::vector<RealRoot> real_roots(const IntPoly& p) {
    std::vector<RealRoot> out;
    const std::vector<IntPoly> parts = squarefree_decomposition(p);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].degree() < 1) continue;
        for (const std::complex<double>& z : durand_kerner(parts[i]))
            out.push_back({z.real(), static_cast<int>(i) + 1});
    }
    std::sort(out.begin(), out.end(),
              [](const RealRoot& a, const RealRoot& b) { return a.value > b.value; });
    return out;
}

std::string to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const BigInt& v = p.coeff(k);
        if (v == 0) continue;
        BigInt mag = boost::multiprecision::abs(v);
        if (out.empty())
            out += v < 0 ? "-" : "";
        else
            out += v < 0 ? " - " : " + ";
        const bool unit = mag == 1 && k > 0;
        if (!unit) out += mag.str();
        if (k > 0) {
            if (!unit) out += "*";
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

std::vector<std::string> coeff_strings(const IntPoly& p) {
    std::vector<std::string> out;
    out.reserve(p.c.size());
    for (const BigInt& v : p.c) out.push_back(v.str());
    return out;
}

}  // namespace lapmult
