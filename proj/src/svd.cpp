#include "nonconv/svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nonconv/errors.hpp"

namespace nonconv {

namespace {

constexpr double kJacobiTol = 1e-14;
constexpr int kMaxSweeps = 60;

// Column 2-norm scaled against under/overflow of the squares.
double column_norm(const SquareMatrix& a, int col) {
    const int d = a.dim();
    double m = 0.0;
    for (int i = 0; i < d; ++i) m = std::max(m, std::abs(a(i, col)));
    if (m == 0.0) return 0.0;
    double s = 0.0;
    for (int i = 0; i < d; ++i) {
        const double r = a(i, col) / m;
        s += r * r;
    }
    return m * std::sqrt(s);
}

// One-sided Jacobi: rotate column pairs until all are mutually orthogonal to
// relative 1e-14, then read the singular values off as column norms.
std::vector<double> jacobi_column_norms(const SquareMatrix& m) {
    const int d = m.dim();
    SquareMatrix a(m);
    for (int sweep = 0; sweep < kMaxSweeps && d > 1; ++sweep) {
        bool converged = true;
        for (int p = 0; p < d - 1; ++p) {
            for (int q = p + 1; q < d; ++q) {
                double app = 0.0, aqq = 0.0, apq = 0.0;
                for (int i = 0; i < d; ++i) {
                    app += a(i, p) * a(i, p);
                    aqq += a(i, q) * a(i, q);
                    apq += a(i, p) * a(i, q);
                }
                if (std::abs(apq) <= kJacobiTol * std::sqrt(app) * std::sqrt(aqq)) continue;
                converged = false;
                const double tau = (aqq - app) / (2.0 * apq);
                const double t =
                    (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int i = 0; i < d; ++i) {
                    const double vp = a(i, p), vq = a(i, q);
                    a(i, p) = c * vp - s * vq;
                    a(i, q) = s * vp + c * vq;
                }
            }
        }
        if (converged) break;
    }
    std::vector<double> norms(d);
    for (int j = 0; j < d; ++j) norms[j] = column_norm(a, j);
    return norms;
}

}  // namespace

double SingularSpectrum::product() const {
    double p = 1.0;
    for (double v : values) p *= v;
    return p;
}

SingularSpectrum singular_values(const SquareMatrix& m) {
    SingularSpectrum spec;
    spec.values = jacobi_column_norms(m);
    // Stable descending sort: exact ties keep the Jacobi output order.
    std::stable_sort(spec.values.begin(), spec.values.end(), std::greater<double>());
    for (double v : spec.values)
        if (!std::isfinite(v)) throw SingularInput("singular_values: non-finite value");
    if (spec.values.back() == 0.0)
        throw SingularInput("singular_values: rank-deficient input");
    return spec;
}

double operator_norm(const SquareMatrix& m) {
    const auto norms = jacobi_column_norms(m);
    return *std::max_element(norms.begin(), norms.end());
}

double inverse_norm(const SquareMatrix& m) {
    return 1.0 / singular_values(m).smallest();
}

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<std::vector<int>> index_subsets(int d, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k);
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == d - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

namespace {

// Determinant of the k x k submatrix of m with the given rows/columns.
double minor_det(const SquareMatrix& m, const std::vector<int>& rows,
                 const std::vector<int>& cols) {
    const int k = static_cast<int>(rows.size());
    if (k == 1) return m(rows[0], cols[0]);
    if (k == 2)
        return m(rows[0], cols[0]) * m(rows[1], cols[1]) -
               m(rows[0], cols[1]) * m(rows[1], cols[0]);
    SquareMatrix sub(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
    return sub.determinant();
}

}  // namespace

SquareMatrix exterior_power(const SquareMatrix& m, int k) {
    const int d = m.dim();
    if (k < 1 || k > d) throw BadOrder("exterior_power: order out of [1, d]");
    if (k == 1) return m;
    const auto subsets = index_subsets(d, k);
    const int n = static_cast<int>(subsets.size());
    SquareMatrix w(n);
    // Entry sign comes out of the minor determinant itself; no separate
    // parity bookkeeping.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w(i, j) = minor_det(m, subsets[i], subsets[j]);
    return w;
}

double gap(const SquareMatrix& m) {
    if (m.dim() < 2) throw BadOrder("gap: requires dimension >= 2");
    const auto spec = singular_values(m);
    return spec.values[0] / spec.values[1];
}

double gap_via_wedge(const SquareMatrix& m) {
    if (m.dim() < 2) throw BadOrder("gap: requires dimension >= 2");
    const double top = operator_norm(m);
    const double wedge = operator_norm(exterior_power(m, 2));
    if (wedge == 0.0) throw SingularInput("gap_via_wedge: rank < 2");
    return top * top / wedge;
}

}  // namespace nonconv
