// SPDX-License-Identifier: Apache-2.0
#ifndef RUNTX_SERIES_HPP
#define RUNTX_SERIES_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "runtx/poly.hpp"

namespace runtx {

// Power series in x modulo x^(order+1) with MultiPoly coefficients.
// Values are immutable once built; all operations return fresh series.
// Two series compare equal only at equal order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);  // the zero series
    TruncatedSeries(int order, std::vector<MultiPoly> coeffs);

    static TruncatedSeries constant(MultiPoly c, int order);
    static TruncatedSeries constant(long c, int order);
    // c * x^power
    static TruncatedSeries monomial(MultiPoly c, int power, int order);

    int order() const { return order_; }
    const MultiPoly& at(int n) const;
    void set(int n, MultiPoly c);   // builder use only
    MultiPoly& mutable_at(int n);   // builder use only

    TruncatedSeries truncated(int new_order) const;  // new_order <= order
    TruncatedSeries shifted_x(int k) const;          // multiply by x^k
    TruncatedSeries scaled(const MultiPoly& c) const;
    TruncatedSeries substitute(const std::map<VarId, BigInt>& assignment) const;
    TruncatedSeries shift_z(int delta) const;
    bool uses_kind(VarId::Kind kind) const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    // Multiplicative inverse; requires constant coefficient 1 or -1.
    TruncatedSeries inverted() const;
    // f(inner(x)); requires inner to have zero constant coefficient.
    TruncatedSeries compose(const TruncatedSeries& inner) const;
    TruncatedSeries pow(unsigned e) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    std::string to_string() const;

private:
    int order_;
    std::vector<MultiPoly> coeffs_;
};

// Iterates `step` from `seed` until two successive iterates are equal.
// The step must fix coefficients 0..k of its argument and determine
// coefficient k+1; throws std::runtime_error if there is no convergence
// within order+2 applications.
TruncatedSeries series_fixed_point(
    const TruncatedSeries& seed,
    const std::function<TruncatedSeries(const TruncatedSeries&)>& step);

}  // namespace runtx

#endif
