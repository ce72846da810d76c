// SPDX-License-Identifier: Apache-2.0
#include "runtx/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace runtx {

BigInt parse_bigint(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = 0;
    if (text[0] == '+' || text[0] == '-') i = 1;
    if (i == text.size()) throw std::invalid_argument("sign without digits");
    for (std::size_t k = i; k < text.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(text[k])))
            throw std::invalid_argument("bad integer literal: " + std::string(text));
    return BigInt(std::string(text), 10);
}

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return BigInt(0);
    // Pascal rows, cached; n stays small throughout this library.
    static std::vector<std::vector<BigInt>> rows{{BigInt(1)}};
    while (static_cast<long>(rows.size()) <= n) {
        const auto& prev = rows.back();
        std::vector<BigInt> row(prev.size() + 1, BigInt(1));
        for (std::size_t j = 1; j + 1 < row.size(); ++j) row[j] = prev[j - 1] + prev[j];
        rows.push_back(std::move(row));
    }
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::vector<BigInt> bell_numbers(int n) {
    std::vector<BigInt> bell{BigInt(1)};
    std::vector<BigInt> row{BigInt(1)};
    for (int i = 1; i <= n; ++i) {
        std::vector<BigInt> next;
        next.reserve(row.size() + 1);
        next.push_back(row.back());
        for (const auto& v : row) next.push_back(next.back() + v);
        row = std::move(next);
        bell.push_back(row.front());
    }
    return bell;
}

Monomial Monomial::var(VarId v, unsigned exp) {
    Monomial m;
    if (exp > 0) m.exps_.emplace_back(v, exp);
    return m;
}

Monomial Monomial::from_sorted(std::vector<std::pair<VarId, unsigned>> entries) {
    Monomial m;
    m.exps_ = std::move(entries);
    return m;
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [v, e] : exps_) d += e;
    return d;
}

unsigned Monomial::exponent(VarId v) const {
    for (const auto& [w, e] : exps_)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial out;
    out.exps_.reserve(exps_.size() + other.exps_.size());
    std::size_t i = 0, j = 0;
    while (i < exps_.size() && j < other.exps_.size()) {
        if (exps_[i].first == other.exps_[j].first) {
            out.exps_.emplace_back(exps_[i].first, exps_[i].second + other.exps_[j].second);
            ++i, ++j;
        } else if (exps_[i].first < other.exps_[j].first) {
            out.exps_.push_back(exps_[i++]);
        } else {
            out.exps_.push_back(other.exps_[j++]);
        }
    }
    while (i < exps_.size()) out.exps_.push_back(exps_[i++]);
    while (j < other.exps_.size()) out.exps_.push_back(other.exps_[j++]);
    return out;
}

Monomial Monomial::shift_z(int delta) const {
    Monomial out;
    out.exps_.reserve(exps_.size());
    for (const auto& [v, e] : exps_) {
        VarId w = (v.kind == VarId::Kind::Z) ? VarId::z(v.level + delta) : v;
        out.exps_.emplace_back(w, e);
    }
    std::sort(out.exps_.begin(), out.exps_.end());
    return out;
}

bool Monomial::uses_kind(VarId::Kind kind) const {
    for (const auto& [v, e] : exps_)
        if (v.kind == kind) return true;
    return false;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    // Same degree: lexicographic over the variable sequence, larger exponent
    // on the earlier variable first.
    std::size_t i = 0, j = 0;
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    while (i < ea.size() && j < eb.size()) {
        if (ea[i].first == eb[j].first) {
            if (ea[i].second != eb[j].second) return ea[i].second > eb[j].second;
            ++i, ++j;
        } else {
            // The monomial owning the earlier variable has positive exponent
            // there while the other has zero, so it sorts first.
            return ea[i].first < eb[j].first;
        }
    }
    if (i < ea.size()) return true;
    return false;
}

MultiPoly::MultiPoly(BigInt constant) {
    if (constant != 0) terms_.emplace(Monomial::unit(), std::move(constant));
}

MultiPoly MultiPoly::variable(VarId v) { return term(Monomial::var(v), BigInt(1)); }

MultiPoly MultiPoly::term(Monomial m, BigInt coeff) {
    MultiPoly p;
    if (coeff != 0) p.terms_.emplace(std::move(m), std::move(coeff));
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

BigInt MultiPoly::constant_term() const { return coefficient(Monomial::unit()); }

BigInt MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

unsigned MultiPoly::degree_in(VarId v) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
    return d;
}

bool MultiPoly::uses_kind(VarId::Kind kind) const {
    for (const auto& [m, c] : terms_)
        if (m.uses_kind(kind)) return true;
    return false;
}

void MultiPoly::add_term(const Monomial& m, const BigInt& delta) {
    if (delta == 0) return;
    auto [it, inserted] = terms_.emplace(m, delta);
    if (!inserted) {
        it->second += delta;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

MultiPoly MultiPoly::from_term_products(std::vector<std::pair<Monomial, BigInt>> products) {
    MonomialOrder before;
    std::sort(products.begin(), products.end(),
              [&](const auto& x, const auto& y) { return before(x.first, y.first); });
    MultiPoly out;
    std::size_t i = 0;
    while (i < products.size()) {
        BigInt sum = std::move(products[i].second);
        std::size_t k = i + 1;
        while (k < products.size() && products[k].first == products[i].first) {
            sum += products[k].second;
            ++k;
        }
        if (sum != 0) out.terms_.emplace_hint(out.terms_.end(), std::move(products[i].first),
                                              std::move(sum));
        i = k;
    }
    return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.empty() || b.terms_.empty()) return MultiPoly();
    std::vector<std::pair<Monomial, BigInt>> products;
    products.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) products.emplace_back(ma.times(mb), ca * cb);
    return MultiPoly::from_term_products(std::move(products));
}

MultiPoly MultiPoly::substitute(const std::map<VarId, BigInt>& assignment) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        BigInt coeff = c;
        Monomial survivor;
        for (const auto& [v, e] : m.entries()) {
            auto it = assignment.find(v);
            if (it == assignment.end()) {
                survivor = survivor.times(Monomial::var(v, e));
            } else {
                BigInt p;
                mpz_pow_ui(p.get_mpz_t(), it->second.get_mpz_t(), e);
                coeff *= p;
            }
        }
        out.add_term(survivor, coeff);
    }
    return out;
}

MultiPoly MultiPoly::shift_z(int delta) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) out.add_term(m.shift_z(delta), c);
    return out;
}

bool MultiPoly::is_nonnegative() const {
    for (const auto& [m, c] : terms_)
        if (c < 0) return false;
    return true;
}

namespace {

void append_monomial(std::ostringstream& os, const Monomial& m, bool leading_factor) {
    bool first = !leading_factor;
    for (const auto& [v, e] : m.entries()) {
        if (!first) os << '*';
        first = false;
        if (v.kind == VarId::Kind::Y)
            os << 'y';
        else
            os << 'z' << v.level;
        if (e != 1) os << '^' << e;
    }
}

}  // namespace

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        BigInt mag = c;
        if (first) {
            if (c < 0) {
                os << '-';
                mag = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) mag = -c;
        }
        first = false;
        if (m.is_unit()) {
            os << mag.get_str();
        } else {
            const bool show_coeff = (mag != 1);
            if (show_coeff) os << mag.get_str();
            append_monomial(os, m, show_coeff);
        }
    }
    return os.str();
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() { return s[i]; }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(i) +
                                    ": " + what);
    }
};

unsigned long parse_uint(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == start) c.fail("expected digits");
    return std::stoul(std::string(c.s.substr(start, c.i - start)));
}

BigInt parse_natural_big(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == start) c.fail("expected digits");
    return BigInt(std::string(c.s.substr(start, c.i - start)), 10);
}

// term := [natural] ( '*'? varfactor )*   with varfactor := ('y' | 'z' int) ['^' natural]
void parse_term(Cursor& c, bool negative, MultiPoly& acc) {
    c.skip_ws();
    BigInt coeff(1);
    bool saw_anything = false;
    if (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        coeff = parse_natural_big(c);
        saw_anything = true;
    }
    Monomial mono;
    for (;;) {
        c.skip_ws();
        if (c.i < c.s.size() && c.peek() == '*') {
            ++c.i;
            c.skip_ws();
        }
        if (c.i >= c.s.size()) break;
        char ch = c.peek();
        if (ch != 'y' && ch != 'z') break;
        ++c.i;
        VarId v = VarId::y();
        if (ch == 'z') {
            bool neg = false;
            c.skip_ws();
            if (c.i < c.s.size() && c.peek() == '-') {
                neg = true;
                ++c.i;
            }
            long level = static_cast<long>(parse_uint(c));
            v = VarId::z(static_cast<int>(neg ? -level : level));
        }
        unsigned exp = 1;
        c.skip_ws();
        if (c.i < c.s.size() && c.peek() == '^') {
            ++c.i;
            exp = static_cast<unsigned>(parse_uint(c));
        }
        mono = mono.times(Monomial::var(v, exp));
        saw_anything = true;
    }
    if (!saw_anything) c.fail("expected a term");
    acc.add_term(mono, negative ? BigInt(-coeff) : coeff);
}

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) {
    Cursor c{text};
    MultiPoly acc;
    c.skip_ws();
    if (c.done()) throw std::invalid_argument("empty polynomial text");
    if (text == "0") return acc;
    bool negative = false;
    if (c.peek() == '-') {
        negative = true;
        ++c.i;
    } else if (c.peek() == '+') {
        ++c.i;
    }
    parse_term(c, negative, acc);
    while (!c.done()) {
        char op = c.peek();
        if (op != '+' && op != '-') c.fail("expected '+' or '-'");
        ++c.i;
        parse_term(c, op == '-', acc);
    }
    return acc;
}

}  // namespace runtx
