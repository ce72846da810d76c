// SPDX-License-Identifier: Apache-2.0
#include "runtx/transform.hpp"

#include <sstream>
#include <stdexcept>

namespace runtx {

std::vector<BigInt> Triangle::row_sums() const {
    std::vector<BigInt> sums;
    sums.reserve(rows.size());
    for (const auto& row : rows) {
        BigInt s(0);
        for (const auto& v : row) s += v;
        sums.push_back(std::move(s));
    }
    return sums;
}

std::vector<BigInt> Triangle::column(int k) const {
    std::vector<BigInt> col;
    for (std::size_t n = 0; n < rows.size(); ++n)
        col.push_back(k < static_cast<int>(rows[n].size()) ? rows[n][static_cast<std::size_t>(k)]
                                                           : BigInt(0));
    return col;
}

bool Triangle::is_nonnegative() const {
    for (const auto& row : rows)
        for (const auto& v : row)
            if (v < 0) return false;
    return true;
}

std::string Triangle::to_csv() const {
    std::ostringstream os;
    for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k) os << ',';
            os << row[k].get_str();
        }
        os << '\n';
    }
    return os.str();
}

std::string Triangle::to_bfile() const {
    std::ostringstream os;
    long idx = 0;
    for (const auto& row : rows)
        for (const auto& v : row) os << idx++ << ' ' << v.get_str() << '\n';
    return os.str();
}

std::string Triangle::to_json() const {
    std::ostringstream os;
    os << "{\"rows\": " << rows.size() << ", \"entries\": [";
    bool first = true;
    for (std::size_t n = 0; n < rows.size(); ++n)
        for (std::size_t k = 0; k < rows[n].size(); ++k) {
            if (!first) os << ", ";
            first = false;
            os << "{\"n\": " << n << ", \"k\": " << k << ", \"value\": \""
               << rows[n][k].get_str() << "\"}";
        }
    os << "]}";
    return os.str();
}

CatalanMatrix::CatalanMatrix(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("matrix dimension must be positive");
    entries_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), BigInt(0));
}

CatalanMatrix CatalanMatrix::standard(int n) {
    CatalanMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            m.entries_[static_cast<std::size_t>(i) * n + j] =
                binomial(2L * j - i, j - i) - binomial(2L * j - i, j - i - 1);
    return m;
}

CatalanMatrix CatalanMatrix::inverse(int n) {
    CatalanMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            BigInt v = binomial(i + 1, j - i);
            m.entries_[static_cast<std::size_t>(i) * n + j] = ((j - i) % 2 == 0) ? v : -v;
        }
    return m;
}

const BigInt& CatalanMatrix::at(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("matrix index");
    return entries_[static_cast<std::size_t>(i) * n_ + j];
}

CatalanMatrix CatalanMatrix::multiply(const CatalanMatrix& other) const {
    if (n_ != other.n_) throw std::invalid_argument("matrix dimension mismatch");
    CatalanMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const BigInt& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < n_; ++j)
                out.entries_[static_cast<std::size_t>(i) * n_ + j] += a * other.at(k, j);
        }
    return out;
}

bool CatalanMatrix::is_identity() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

std::vector<BigInt> catalan_numbers(int n) {
    std::vector<BigInt> c{BigInt(1)};
    for (int k = 1; k <= n; ++k) {
        BigInt next(0);
        for (int i = 0; i < k; ++i) next += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(k - 1 - i)];
        c.push_back(std::move(next));
    }
    return c;
}

TruncatedSeries transform_prefactor(int order) {
    // (1-x) * (1-xy)^{-1}
    if (order == 0) return TruncatedSeries::constant(1, 0);
    TruncatedSeries one_minus_x = TruncatedSeries::constant(1, order);
    one_minus_x.set(1, MultiPoly(-1L));
    TruncatedSeries one_minus_xy = TruncatedSeries::constant(1, order);
    one_minus_xy.set(1, -poly_y());
    return one_minus_x * one_minus_xy.inverted();
}

TruncatedSeries transform_inner(int order) {
    if (order == 0) return TruncatedSeries(0);
    return transform_prefactor(order).shifted_x(1);
}

TruncatedSeries run_transform(const TruncatedSeries& f, int order) {
    if (f.order() < order)
        throw std::invalid_argument("input series order too small for the requested transform order");
    if (f.uses_kind(VarId::Kind::Y))
        throw std::invalid_argument("run transform input must not involve the variable y");

    // The input is y-free and the transform multipliers are y-only, so the
    // level-marked parts pass through untouched: split f by monomial,
    // transform the integer series, and reassemble. This is linear in the
    // number of stored terms, which matters for heavily z-marked inputs.
    TruncatedSeries pre = transform_prefactor(order);
    TruncatedSeries inner = transform_inner(order);
    std::vector<TruncatedSeries> basis;  // basis[k] = pre * inner^k
    basis.reserve(static_cast<std::size_t>(order) + 1);
    basis.push_back(pre);
    for (int k = 1; k <= order; ++k) basis.push_back(basis.back() * inner);

    std::map<Monomial, std::vector<BigInt>, MonomialOrder> groups;
    for (int n = 0; n <= order; ++n)
        for (const auto& [mono, c] : f.at(n).terms()) {
            auto [it, fresh] = groups.try_emplace(mono);
            if (fresh) it->second.assign(static_cast<std::size_t>(order) + 1, BigInt(0));
            it->second[static_cast<std::size_t>(n)] = c;
        }

    std::vector<std::vector<std::pair<Monomial, BigInt>>> parts(static_cast<std::size_t>(order) + 1);
    std::vector<BigInt> by_y_degree(static_cast<std::size_t>(order) + 1);
    for (const auto& [zmono, coeffs] : groups) {
        for (int n = 0; n <= order; ++n) {
            for (int e = 0; e <= n; ++e) by_y_degree[static_cast<std::size_t>(e)] = 0;
            for (int k = 0; k <= n; ++k) {
                const BigInt& c = coeffs[static_cast<std::size_t>(k)];
                if (c == 0) continue;
                for (const auto& [ymono, v] : basis[static_cast<std::size_t>(k)].at(n).terms())
                    by_y_degree[ymono.exponent(VarId::y())] += c * v;
            }
            for (int e = 0; e <= n; ++e) {
                BigInt& val = by_y_degree[static_cast<std::size_t>(e)];
                if (val == 0) continue;
                parts[static_cast<std::size_t>(n)].emplace_back(
                    zmono.times(Monomial::var(VarId::y(), static_cast<unsigned>(e))),
                    std::move(val));
            }
        }
    }
    TruncatedSeries out(order);
    for (int n = 0; n <= order; ++n)
        out.set(n, MultiPoly::from_term_products(std::move(parts[static_cast<std::size_t>(n)])));
    return out;
}

Triangle to_triangle(const TruncatedSeries& f) {
    Triangle t;
    for (int n = 0; n <= f.order(); ++n) {
        const MultiPoly& c = f.at(n);
        if (c.uses_kind(VarId::Kind::Z))
            throw std::invalid_argument("triangle coefficients must be polynomials in y alone");
        if (static_cast<int>(c.degree_in(VarId::y())) > n)
            throw std::invalid_argument("y-degree exceeds the x-power; not a triangle");
        std::vector<BigInt> row;
        row.reserve(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k)
            row.push_back(c.coefficient(Monomial::var(VarId::y(), static_cast<unsigned>(k))));
        t.rows.push_back(std::move(row));
    }
    return t;
}

TruncatedSeries series_from_sequence(const std::vector<BigInt>& values, int order) {
    if (static_cast<int>(values.size()) < order + 1)
        throw std::invalid_argument("sequence shorter than order + 1");
    TruncatedSeries s(order);
    for (int n = 0; n <= order; ++n) s.set(n, MultiPoly(values[static_cast<std::size_t>(n)]));
    return s;
}

std::vector<BigInt> decompose(const std::vector<BigInt>& b) {
    const int len = static_cast<int>(b.size());
    if (len == 0) return {};
    CatalanMatrix inv = CatalanMatrix::inverse(len);
    std::vector<BigInt> a(static_cast<std::size_t>(len), BigInt(0));
    for (int k = 0; k < len; ++k)
        for (int i = 0; i <= k; ++i) a[static_cast<std::size_t>(k)] += b[static_cast<std::size_t>(i)] * inv.at(i, k);
    return a;
}

NonnegVerdict nonneg_criterion(const std::vector<BigInt>& b, int order) {
    if (static_cast<int>(b.size()) < order + 1)
        throw std::invalid_argument("sequence shorter than order + 1");
    std::vector<BigInt> head(b.begin(), b.begin() + order + 1);
    NonnegVerdict v;
    v.a = decompose(head);
    v.nonnegative = true;
    for (const auto& x : v.a)
        if (x < 0) {
            v.nonnegative = false;
            break;
        }
    // Independent route: inspect the transform itself.
    TruncatedSeries transformed = run_transform(series_from_sequence(head, order), order);
    bool direct = true;
    for (int n = 0; n <= order; ++n)
        if (!transformed.at(n).is_nonnegative()) {
            direct = false;
            break;
        }
    if (direct != v.nonnegative)
        throw std::logic_error("nonnegativity criterion disagrees with direct inspection");
    return v;
}

TruncatedSeries catalan_bivariate(int order) {
    TruncatedSeries pre = transform_prefactor(order);
    TruncatedSeries x = TruncatedSeries::monomial(MultiPoly(1L), 1, order);
    return series_fixed_point(TruncatedSeries(order), [&](const TruncatedSeries& f) {
        return pre + x * f * f;
    });
}

bool triangle_recurrence_check(int order) {
    Triangle t = to_triangle(catalan_bivariate(order));
    auto u = [&](int i, int j) -> BigInt {
        if (j < 0 || j > i) return BigInt(0);
        return t.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    };
    if (u(0, 0) != 1) return false;
    for (int n = 1; n <= order; ++n)
        for (int k = 0; k <= n; ++k) {
            BigInt conv(0);
            for (int i = 0; i <= n - 1; ++i)
                for (int j = 0; j <= k; ++j) conv += u(i, j) * u(n - 1 - i, k - j);
            BigInt q(0);  // coefficient of x^n y^k in (1-x)/(1-xy)
            if (n == k) q += 1;
            if (k == n - 1) q -= 1;
            if (u(n, k) != conv + q) return false;
        }
    return true;
}

}  // namespace runtx
