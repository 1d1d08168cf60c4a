#pragma once

#include <initializer_list>
#include <vector>

namespace nonconv {

// Dense real square matrix, row-major. Small by construction: base dimensions
// are 2..8 and exterior powers push it to at most C(8,4) = 70.
class SquareMatrix {
public:
    SquareMatrix() : dim_(0) {}
    explicit SquareMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim, 0.0) {}

    static SquareMatrix identity(int dim);
    // Validates that every entry is finite.
    static SquareMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
    static SquareMatrix from_data(int dim, const std::vector<double>& row_major);

    int dim() const { return dim_; }

    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * dim_ + j]; }

    const std::vector<double>& data() const { return a_; }

    SquareMatrix transpose() const;
    SquareMatrix operator*(const SquareMatrix& rhs) const;
    void scale(double factor);

    double max_abs() const;
    double frobenius_norm() const;
    bool all_finite() const;

    // LU with partial pivoting; exact up to rounding for these sizes.
    double determinant() const;

    // Explicit inverse by Gauss-Jordan. Throws SingularInput on zero pivot.
    SquareMatrix inverse() const;

    bool operator==(const SquareMatrix& rhs) const = default;

private:
    int dim_;
    std::vector<double> a_;
};

// out = a * b without allocating (out may not alias a or b).
void multiply_into(const SquareMatrix& a, const SquareMatrix& b, SquareMatrix& out);

inline constexpr double kDetTolerance = 1e-9;

// |det M - 1| <= tol.
bool is_unimodular(const SquareMatrix& m, double tol = kDetTolerance);

// Rescales an invertible matrix to determinant exactly 1 (up to rounding),
// dividing by det^(1/d). Negative determinants are fixable only in odd
// dimension (a real scalar c has c^d > 0 for even d); otherwise throws
// NotUnimodular. Throws SingularInput when det vanishes.
SquareMatrix renormalize_unimodular(const SquareMatrix& m);

}  // namespace nonconv
