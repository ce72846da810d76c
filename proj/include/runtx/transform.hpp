// SPDX-License-Identifier: Apache-2.0
#ifndef RUNTX_TRANSFORM_HPP
#define RUNTX_TRANSFORM_HPP

#include <string>
#include <vector>

#include "runtx/series.hpp"

namespace runtx {

// Lower-triangular big-integer array; row n holds the coefficients of
// x^n y^0 .. x^n y^n of a bivariate series.
struct Triangle {
    std::vector<std::vector<BigInt>> rows;

    int row_count() const { return static_cast<int>(rows.size()); }
    std::vector<BigInt> row_sums() const;
    std::vector<BigInt> column(int k) const;
    bool is_nonnegative() const;

    std::string to_csv() const;
    // OEIS-style "index value" lines, triangle read by rows, 0-indexed.
    std::string to_bfile() const;
    // Explicit (n, k) entries; values as decimal strings.
    std::string to_json() const;

    friend bool operator==(const Triangle&, const Triangle&) = default;
};

// Upper-triangular Catalan convolution matrix, or its inverse.
// standard:  entry (i,j) = binom(2j-i, j-i) - binom(2j-i, j-i-1)  for j >= i
// inverse:   entry (i,j) = (-1)^(j-i) * binom(i+1, j-i)           for j >= i
class CatalanMatrix {
public:
    static CatalanMatrix standard(int n);
    static CatalanMatrix inverse(int n);

    int dim() const { return n_; }
    const BigInt& at(int i, int j) const;
    CatalanMatrix multiply(const CatalanMatrix& other) const;
    bool is_identity() const;

private:
    explicit CatalanMatrix(int n);
    int n_;
    std::vector<BigInt> entries_;
};

// C_0..C_n by the convolution recurrence.
std::vector<BigInt> catalan_numbers(int n);

// (1-x)/(1-xy) as a truncated series.
TruncatedSeries transform_prefactor(int order);

// x(1-x)/(1-xy), the inner substitution of the transform.
TruncatedSeries transform_inner(int order);

// The run transform F(x,y) = (1-x)/(1-xy) * f(x(1-x)/(1-xy)).
// f must be free of the variable y and given at order >= `order`.
TruncatedSeries run_transform(const TruncatedSeries& f, int order);

// Reads a series whose coefficients are polynomials in y alone into a
// Triangle; the coefficient of x^n must have y-degree <= n.
Triangle to_triangle(const TruncatedSeries& f);

// Series with the given x-coefficients (constants), truncated at `order`.
// Requires values.size() >= order + 1.
TruncatedSeries series_from_sequence(const std::vector<BigInt>& values, int order);

// a = b * C^{-1}; entry k of the result depends only on b_0..b_k.
std::vector<BigInt> decompose(const std::vector<BigInt>& b);

struct NonnegVerdict {
    std::vector<BigInt> a;
    bool nonnegative = false;
};

// Nonnegativity criterion for the transform of a nonnegative sequence:
// verdict is true iff all of a = b*C^{-1} is nonnegative up to index
// `order`. The verdict is cross-checked against direct inspection of the
// transform's coefficients; disagreement throws std::logic_error.
NonnegVerdict nonneg_criterion(const std::vector<BigInt>& b, int order);

// C(x,y) = run_transform(C(x)), computed as the fixed point of
// F -> (1-x)/(1-xy) + x F^2.
TruncatedSeries catalan_bivariate(int order);

// Verifies that the coefficient array u of C(x,y) satisfies the
// coefficient-extracted form of x C(x,y)^2 = C(x,y) - (1-x)/(1-xy).
bool triangle_recurrence_check(int order);

}  // namespace runtx

#endif
