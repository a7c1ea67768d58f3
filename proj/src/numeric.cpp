#include "lapmult/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lapmult {

std::vector<double> numeric_eigenvalues(const IntMatrix& m) {
    if (!m.symmetric()) throw std::invalid_argument("numeric_eigenvalues: matrix not symmetric");
    const int n = m.n;
    if (n == 0) return {};

    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<double>(m.a[i]);
    const auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

    double scale = 0.0;
    for (double v : a) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) scale = 1.0;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
        if (off <= 1e-28 * scale * scale) break;

        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) <= 1e-18 * scale) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
    }

    std::vector<double> eig(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = at(i, i);
    std::sort(eig.begin(), eig.end(), std::greater<double>());
    return eig;
}

std::vector<double> numeric_laplacian_eigenvalues(const Graph& g) {
    return numeric_eigenvalues(laplacian(g));
}

bool interlacing_check(const IntMatrix& m, const std::vector<int>& keep) {
    if (keep.empty()) throw std::invalid_argument("interlacing_check: empty index set");
    const std::vector<double> full = numeric_eigenvalues(m);
    const std::vector<double> part = numeric_eigenvalues(principal_submatrix(m, keep));
    const int n = static_cast<int>(full.size()), k = static_cast<int>(part.size());
    for (int i = 0; i < k; ++i) {
        if (full[static_cast<std::size_t>(i)] < part[static_cast<std::size_t>(i)] - kInterlacingTolerance)
            return false;
        if (part[static_cast<std::size_t>(i)] <
            full[static_cast<std::size_t>(i + n - k)] - kInterlacingTolerance)
            return false;
    }
    return true;
}

}  // namespace lapmult
