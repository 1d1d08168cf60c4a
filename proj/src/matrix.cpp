#include "nonconv/matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "nonconv/errors.hpp"

namespace nonconv {

SquareMatrix SquareMatrix::identity(int dim) {
    SquareMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

SquareMatrix SquareMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const int d = static_cast<int>(rows.size());
    SquareMatrix m(d);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != d)
            throw std::invalid_argument("from_rows: ragged rows");
        int j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    if (!m.all_finite()) throw std::invalid_argument("from_rows: non-finite entry");
    return m;
}

SquareMatrix SquareMatrix::from_data(int dim, const std::vector<double>& row_major) {
    if (static_cast<std::size_t>(dim) * dim != row_major.size())
        throw std::invalid_argument("from_data: size mismatch");
    SquareMatrix m(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m(i, j) = row_major[static_cast<std::size_t>(i) * dim + j];
    if (!m.all_finite()) throw std::invalid_argument("from_data: non-finite entry");
    return m;
}

SquareMatrix SquareMatrix::transpose() const {
    SquareMatrix t(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

void multiply_into(const SquareMatrix& a, const SquareMatrix& b, SquareMatrix& out) {
    const int d = a.dim();
    if (out.dim() != d) out = SquareMatrix(d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            double s = 0.0;
            for (int k = 0; k < d; ++k) s += a(i, k) * b(k, j);
            out(i, j) = s;
        }
    }
}

SquareMatrix SquareMatrix::operator*(const SquareMatrix& rhs) const {
    SquareMatrix out(dim_);
    multiply_into(*this, rhs, out);
    return out;
}

void SquareMatrix::scale(double factor) {
    for (double& v : a_) v *= factor;
}

double SquareMatrix::max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
}

double SquareMatrix::frobenius_norm() const {
    // Scaled to survive entries near the under/overflow boundary.
    const double m = max_abs();
    if (m == 0.0) return 0.0;
    double s = 0.0;
    for (double v : a_) {
        const double r = v / m;
        s += r * r;
    }
    return m * std::sqrt(s);
}

bool SquareMatrix::all_finite() const {
    for (double v : a_)
        if (!std::isfinite(v)) return false;
    return true;
}

double SquareMatrix::determinant() const {
    SquareMatrix lu(*this);
    const int d = dim_;
    double det = 1.0;
    for (int k = 0; k < d; ++k) {
        int piv = k;
        for (int i = k + 1; i < d; ++i)
            if (std::abs(lu(i, k)) > std::abs(lu(piv, k))) piv = i;
        if (lu(piv, k) == 0.0) return 0.0;
        if (piv != k) {
            for (int j = 0; j < d; ++j) std::swap(lu(piv, j), lu(k, j));
            det = -det;
        }
        det *= lu(k, k);
        for (int i = k + 1; i < d; ++i) {
            const double f = lu(i, k) / lu(k, k);
            for (int j = k + 1; j < d; ++j) lu(i, j) -= f * lu(k, j);
        }
    }
    return det;
}

SquareMatrix SquareMatrix::inverse() const {
    const int d = dim_;
    SquareMatrix work(*this);
    SquareMatrix inv = identity(d);
    for (int k = 0; k < d; ++k) {
        int piv = k;
        for (int i = k + 1; i < d; ++i)
            if (std::abs(work(i, k)) > std::abs(work(piv, k))) piv = i;
        if (work(piv, k) == 0.0) throw SingularInput("inverse: zero pivot");
        if (piv != k)
            for (int j = 0; j < d; ++j) {
                std::swap(work(piv, j), work(k, j));
                std::swap(inv(piv, j), inv(k, j));
            }
        const double p = work(k, k);
        for (int j = 0; j < d; ++j) {
            work(k, j) /= p;
            inv(k, j) /= p;
        }
        for (int i = 0; i < d; ++i) {
            if (i == k) continue;
            const double f = work(i, k);
            if (f == 0.0) continue;
            for (int j = 0; j < d; ++j) {
                work(i, j) -= f * work(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

bool is_unimodular(const SquareMatrix& m, double tol) {
    return std::abs(m.determinant() - 1.0) <= tol;
}

SquareMatrix renormalize_unimodular(const SquareMatrix& m) {
    const double det = m.determinant();
    if (det == 0.0 || !std::isfinite(det))
        throw SingularInput("renormalize_unimodular: determinant is zero or non-finite");
    const int d = m.dim();
    double c;
    if (det > 0.0) {
        c = std::pow(det, 1.0 / d);
    } else if (d % 2 == 1) {
        c = -std::pow(-det, 1.0 / d);
    } else {
        throw NotUnimodular("renormalize_unimodular: negative determinant in even dimension");
    }
    SquareMatrix out(m);
    out.scale(1.0 / c);
    return out;
}

}  // namespace nonconv
