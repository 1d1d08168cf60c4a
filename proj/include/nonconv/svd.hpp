#pragma once

#include <vector>

#include "nonconv/matrix.hpp"

namespace nonconv {

// Ordered singular values s_1 >= s_2 >= ... >= s_d > 0.
struct SingularSpectrum {
    std::vector<double> values;

    double largest() const { return values.front(); }
    double smallest() const { return values.back(); }
    // Product of all singular values; 1 (up to rounding) for unimodular input.
    double product() const;
};

// Full spectrum by one-sided Jacobi on the columns. High relative accuracy on
// these tiny dense matrices; converged when every normalized off-diagonal
// Gram entry is below 1e-14 (at most 60 sweeps). Throws SingularInput when a
// singular value vanishes outright.
SingularSpectrum singular_values(const SquareMatrix& m);

// s_1(M) = max |Mx|/|x|. Defined for any finite matrix.
double operator_norm(const SquareMatrix& m);

// |M^-1| = 1/s_d(M). Throws SingularInput.
double inverse_norm(const SquareMatrix& m);

// The k-th exterior power: the C(d,k) x C(d,k) matrix of k x k minors in the
// lexicographically ordered wedge basis. Multiplicative in its argument.
// Throws BadOrder unless 1 <= k <= d.
SquareMatrix exterior_power(const SquareMatrix& m, int k);

// gr(M) = s_1/s_2 >= 1, the hyperbolicity gap. Throws SingularInput when s_2
// vanishes. Requires d >= 2.
double gap(const SquareMatrix& m);

// The same quantity by the independent route |M|^2 / |wedge^2 M|; the two
// agree because the top singular value of wedge^2 M is s_1 s_2.
double gap_via_wedge(const SquareMatrix& m);

// Lexicographically ordered k-subsets of {0,...,d-1}; the wedge basis order.
std::vector<std::vector<int>> index_subsets(int d, int k);

long binomial(int n, int k);

}  // namespace nonconv
