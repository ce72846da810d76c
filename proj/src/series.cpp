// SPDX-License-Identifier: Apache-2.0
#include "runtx/series.hpp"

#include <sstream>
#include <stdexcept>

namespace runtx {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series order mismatch: " + std::to_string(a.order()) +
                                    " vs " + std::to_string(b.order()));
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("negative series order");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries::TruncatedSeries(int order, std::vector<MultiPoly> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (order < 0) throw std::invalid_argument("negative series order");
    if (coeffs_.size() != static_cast<std::size_t>(order) + 1)
        throw std::invalid_argument("coefficient count does not match order");
}

TruncatedSeries TruncatedSeries::constant(MultiPoly c, int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = std::move(c);
    return s;
}

TruncatedSeries TruncatedSeries::constant(long c, int order) {
    return constant(MultiPoly(c), order);
}

TruncatedSeries TruncatedSeries::monomial(MultiPoly c, int power, int order) {
    TruncatedSeries s(order);
    if (power < 0) throw std::invalid_argument("negative x power");
    if (power <= order) s.coeffs_[static_cast<std::size_t>(power)] = std::move(c);
    return s;
}

const MultiPoly& TruncatedSeries::at(int n) const {
    if (n < 0 || n > order_) throw std::out_of_range("coefficient index out of range");
    return coeffs_[static_cast<std::size_t>(n)];
}

void TruncatedSeries::set(int n, MultiPoly c) {
    if (n < 0 || n > order_) throw std::out_of_range("coefficient index out of range");
    coeffs_[static_cast<std::size_t>(n)] = std::move(c);
}

MultiPoly& TruncatedSeries::mutable_at(int n) {
    if (n < 0 || n > order_) throw std::out_of_range("coefficient index out of range");
    return coeffs_[static_cast<std::size_t>(n)];
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    if (new_order > order_) throw std::invalid_argument("cannot extend a truncated series");
    TruncatedSeries s(new_order);
    for (int n = 0; n <= new_order; ++n) s.coeffs_[static_cast<std::size_t>(n)] = coeffs_[static_cast<std::size_t>(n)];
    return s;
}

TruncatedSeries TruncatedSeries::shifted_x(int k) const {
    if (k < 0) throw std::invalid_argument("negative x shift");
    TruncatedSeries s(order_);
    for (int n = k; n <= order_; ++n)
        s.coeffs_[static_cast<std::size_t>(n)] = coeffs_[static_cast<std::size_t>(n - k)];
    return s;
}

TruncatedSeries TruncatedSeries::scaled(const MultiPoly& c) const {
    TruncatedSeries s(order_);
    for (int n = 0; n <= order_; ++n)
        s.coeffs_[static_cast<std::size_t>(n)] = coeffs_[static_cast<std::size_t>(n)] * c;
    return s;
}

TruncatedSeries TruncatedSeries::substitute(const std::map<VarId, BigInt>& assignment) const {
    TruncatedSeries s(order_);
    for (int n = 0; n <= order_; ++n)
        s.coeffs_[static_cast<std::size_t>(n)] = coeffs_[static_cast<std::size_t>(n)].substitute(assignment);
    return s;
}

TruncatedSeries TruncatedSeries::shift_z(int delta) const {
    TruncatedSeries s(order_);
    for (int n = 0; n <= order_; ++n)
        s.coeffs_[static_cast<std::size_t>(n)] = coeffs_[static_cast<std::size_t>(n)].shift_z(delta);
    return s;
}

bool TruncatedSeries::uses_kind(VarId::Kind kind) const {
    for (const auto& c : coeffs_)
        if (c.uses_kind(kind)) return true;
    return false;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries s(a.order_);
    for (std::size_t n = 0; n < s.coeffs_.size(); ++n) s.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
    return s;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries s(a.order_);
    for (std::size_t n = 0; n < s.coeffs_.size(); ++n) s.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
    return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries s(a.order_);
    // One sort-and-combine per output coefficient.
    std::vector<std::pair<Monomial, BigInt>> products;
    for (int n = 0; n <= a.order_; ++n) {
        products.clear();
        for (int i = 0; i <= n; ++i) {
            const MultiPoly& ca = a.coeffs_[static_cast<std::size_t>(i)];
            const MultiPoly& cb = b.coeffs_[static_cast<std::size_t>(n - i)];
            if (ca.is_zero() || cb.is_zero()) continue;
            for (const auto& [ma, va] : ca.terms())
                for (const auto& [mb, vb] : cb.terms()) products.emplace_back(ma.times(mb), va * vb);
        }
        s.coeffs_[static_cast<std::size_t>(n)] = MultiPoly::from_term_products(std::move(products));
        products = {};
    }
    return s;
}

TruncatedSeries TruncatedSeries::inverted() const {
    const MultiPoly& c0 = coeffs_[0];
    if (!c0.is_constant() || (c0.constant_term() != 1 && c0.constant_term() != -1))
        throw std::invalid_argument("series inversion requires constant term 1 or -1");
    const BigInt u = c0.constant_term();  // its own inverse
    TruncatedSeries inv(order_);
    inv.coeffs_[0] = MultiPoly(u);
    for (int n = 1; n <= order_; ++n) {
        MultiPoly acc;
        for (int k = 1; k <= n; ++k)
            acc += coeffs_[static_cast<std::size_t>(k)] * inv.coeffs_[static_cast<std::size_t>(n - k)];
        inv.coeffs_[static_cast<std::size_t>(n)] = (MultiPoly(-u)) * acc;
    }
    return inv;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& inner) const {
    require_same_order(*this, inner);
    if (!inner.coeffs_[0].is_zero())
        throw std::invalid_argument("composition requires zero constant term in the inner series");
    // Horner over the series ring.
    TruncatedSeries acc = TruncatedSeries::constant(coeffs_[static_cast<std::size_t>(order_)], order_);
    for (int n = order_ - 1; n >= 0; --n)
        acc = acc * inner + TruncatedSeries::constant(coeffs_[static_cast<std::size_t>(n)], order_);
    return acc;
}

TruncatedSeries TruncatedSeries::pow(unsigned e) const {
    TruncatedSeries acc = TruncatedSeries::constant(1, order_);
    for (unsigned i = 0; i < e; ++i) acc = acc * (*this);
    return acc;
}

std::string TruncatedSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n <= order_; ++n) {
        const MultiPoly& c = coeffs_[static_cast<std::size_t>(n)];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << '(' << c.to_string() << ')';
        if (n > 0) os << "*x^" << n;
    }
    if (first) os << '0';
    os << " + O(x^" << order_ + 1 << ')';
    return os.str();
}

TruncatedSeries series_fixed_point(
    const TruncatedSeries& seed,
    const std::function<TruncatedSeries(const TruncatedSeries&)>& step) {
    TruncatedSeries prev = seed;
    const int limit = seed.order() + 2;
    for (int iter = 0; iter < limit; ++iter) {
        TruncatedSeries next = step(prev);
        if (next == prev) return next;
        prev = std::move(next);
    }
    throw std::runtime_error("fixed-point iteration did not converge; step is not a contraction");
}

}  // namespace runtx
