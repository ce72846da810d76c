// SPDX-License-Identifier: Apache-2.0
#ifndef RUNTX_POLY_HPP
#define RUNTX_POLY_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "runtx/bigint.hpp"

namespace runtx {

// A polynomial variable: the ascent/run marker y, or a level marker z{level}.
// Levels are meaningful for Z only and may be negative.
struct VarId {
    enum class Kind : std::uint8_t { Y = 0, Z = 1 };

    Kind kind = Kind::Y;
    int level = 0;  // always 0 for Y

    static VarId y() { return VarId{Kind::Y, 0}; }
    static VarId z(int level) { return VarId{Kind::Z, level}; }

    friend constexpr auto operator<=>(const VarId&, const VarId&) = default;
};

// A monomial: variables with positive exponents, kept sorted by VarId.
class Monomial {
public:
    Monomial() = default;

    static Monomial unit() { return Monomial(); }
    static Monomial var(VarId v, unsigned exp = 1);
    // Entries must be sorted by VarId with positive exponents.
    static Monomial from_sorted(std::vector<std::pair<VarId, unsigned>> entries);

    bool is_unit() const { return exps_.empty(); }
    unsigned total_degree() const;
    unsigned exponent(VarId v) const;
    Monomial times(const Monomial& other) const;
    Monomial shift_z(int delta) const;
    bool uses_kind(VarId::Kind kind) const;

    const std::vector<std::pair<VarId, unsigned>>& entries() const { return exps_; }

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::pair<VarId, unsigned>> exps_;
};

// Canonical term order: higher total degree first, then lexicographic with
// y before the z's (z's by increasing level). This is the print order.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial over BigInt in y and the z levels.
// Zero coefficients are never stored; equality is term-set equality.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(BigInt constant);
    explicit MultiPoly(long constant) : MultiPoly(BigInt(constant)) {}

    static MultiPoly variable(VarId v);
    static MultiPoly term(Monomial m, BigInt coeff);
    // Combines arbitrary (monomial, coefficient) pairs into canonical form.
    static MultiPoly from_term_products(std::vector<std::pair<Monomial, BigInt>> products);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Coefficient of the unit monomial (the constant term).
    BigInt constant_term() const;
    BigInt coefficient(const Monomial& m) const;
    unsigned degree_in(VarId v) const;
    bool uses_kind(VarId::Kind kind) const;
    std::size_t term_count() const { return terms_.size(); }

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

    // Replaces assigned variables by integers; unassigned variables survive.
    MultiPoly substitute(const std::map<VarId, BigInt>& assignment) const;
    // Renames z{i} to z{i+delta} throughout.
    MultiPoly shift_z(int delta) const;
    // True iff every stored coefficient is >= 0 (the zero polynomial passes).
    bool is_nonnegative() const;

    // In-place accumulation of a single term, pruning a resulting zero.
    void add_term(const Monomial& m, const BigInt& delta);

    const std::map<Monomial, BigInt, MonomialOrder>& terms() const { return terms_; }

    // Text form: terms in canonical order, e.g. "y^3 + 2*y^2 + 2*y" or
    // "3*y*z0^2 - z-1". parse() accepts exactly what to_string() emits,
    // plus redundant whitespace.
    std::string to_string() const;
    static MultiPoly parse(std::string_view text);

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

private:
    std::map<Monomial, BigInt, MonomialOrder> terms_;
};

inline MultiPoly poly_y() { return MultiPoly::variable(VarId::y()); }
inline MultiPoly poly_z(int level) { return MultiPoly::variable(VarId::z(level)); }

}  // namespace runtx

#endif
