#pragma once

/*
 * The coefficient field: fractions of Laurent polynomials in q, x, y, kept in
 * a canonical form so that equality is structural.
 *
 * Canonical form: den is a true polynomial (no monomial factor, so every
 * negative exponent lives in num), gcd(num, den) is a unit, and den is monic
 * with respect to the (x, y, q) lex order. The zero scalar is 0/1.
 */

#include "laurent.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>

namespace qaffine {

class Scalar {
public:
    Scalar() : num_(), den_(1) {}
    Scalar(int c) : num_(c), den_(1) {}
    Scalar(const mpq_class& c) : num_(c), den_(1) {}
    Scalar(const LaurentPoly& p) : num_(p), den_(1) {}
    Scalar(const LaurentPoly& n, const LaurentPoly& d) { assign_canonical(n, d, false); }

    static Scalar q(std::int64_t e = 1) { return Scalar(LaurentPoly::q(e)); }
    static Scalar x(std::int64_t e = 1) { return Scalar(LaurentPoly::x(e)); }
    static Scalar y(std::int64_t e = 1) { return Scalar(LaurentPoly::y(e)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    /// True when num and den are free of x and y.
    bool is_q_only() const {
        return !num_.depends_on(Var::x) && !num_.depends_on(Var::y) &&
               !den_.depends_on(Var::x) && !den_.depends_on(Var::y);
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) { return add_impl(a, b, false); }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return add_impl(a, b, true); }
    Scalar operator-() const {
        Scalar r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.num_.is_zero() || b.num_.is_zero()) return Scalar();
        if (a.den_.is_one() && b.den_.is_one()) return Scalar(a.num_ * b.num_);
        // Cross-reduce so the final fraction is coprime without another gcd.
        LaurentPoly g1 = gcd(a.num_, b.den_);
        LaurentPoly g2 = gcd(b.num_, a.den_);
        Scalar r;
        r.assign_canonical((a.num_.exact_div(g1)) * (b.num_.exact_div(g2)),
                           (a.den_.exact_div(g2)) * (b.den_.exact_div(g1)), true);
        return r;
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const {
        if (num_.is_zero()) throw std::domain_error("division by the zero scalar");
        Scalar r;
        r.assign_canonical(den_, num_, true);
        return r;
    }

    /// Exact value at q = q0, x = x0, y = y0. q0 must avoid {0, 1, -1} (any
    /// other rational is not a root of unity) and x0, y0 must be nonzero.
    mpq_class specialize(const mpq_class& q0, const mpq_class& x0, const mpq_class& y0) const {
        if (q0 == 0 || q0 == 1 || q0 == -1)
            throw std::domain_error("specialize: q must avoid {0, 1, -1}");
        if (x0 == 0 || y0 == 0) throw std::domain_error("specialize: x and y must be nonzero");
        mpq_class d = den_.evaluate(q0, x0, y0);
        if (d == 0) throw std::domain_error("specialize: denominator vanishes at the point");
        return num_.evaluate(q0, x0, y0) / d;
    }

    /// Value at q = x = y = 1; defined only when the reduced denominator does
    /// not vanish there.
    mpq_class classical_limit() const {
        mpq_class d = den_.evaluate(1, 1, 1);
        if (d == 0) throw std::domain_error("classical_limit: pole at q = x = y = 1");
        return num_.evaluate(1, 1, 1) / d;
    }

private:
    // Reduced-fraction addition: with both inputs in lowest terms, only
    // gcd(den, den) and gcd(t, common part) are needed; the result is already
    // in lowest terms. This avoids one large gcd per addition.
    static Scalar add_impl(const Scalar& a, const Scalar& b, bool subtract) {
        auto bnum = [&]() { return subtract ? -b.num_ : b.num_; };
        if (a.den_.is_one() && b.den_.is_one()) return Scalar(a.num_ + bnum());
        LaurentPoly g = a.den_ == b.den_ ? a.den_ : gcd(a.den_, b.den_);
        Scalar r;
        if (g.is_one()) {
            r.assign_canonical(a.num_ * b.den_ + bnum() * a.den_, a.den_ * b.den_, true);
            return r;
        }
        LaurentPoly ap = a.den_.exact_div(g);
        LaurentPoly bp = b.den_.exact_div(g);
        LaurentPoly t = a.num_ * bp + bnum() * ap;
        if (t.is_zero()) return Scalar();
        LaurentPoly h = gcd(t, g);
        if (h.is_one()) {
            r.assign_canonical(t, ap * b.den_, true);
        } else {
            r.assign_canonical(t.exact_div(h), ap * b.den_.exact_div(h), true);
        }
        return r;
    }

    void assign_canonical(const LaurentPoly& n, const LaurentPoly& d, bool coprime) {
        if (d.is_zero()) throw std::domain_error("scalar with zero denominator");
        if (n.is_zero()) {
            num_ = LaurentPoly();
            den_ = LaurentPoly(1);
            return;
        }
        auto [dm, D] = d.monomial_split();
        auto [nm, N] = n.monomial_split();
        if (!coprime) {
            LaurentPoly g = gcd(N, D);
            if (!g.is_one()) {
                N = N.exact_div(g);
                D = D.exact_div(g);
            }
        }
        mpq_class lead = D.leading().second;  // monic denominator fixes the scale
        num_ = N.scaled(1 / lead).shifted(nm / dm);
        den_ = D.scaled(1 / lead);
    }

    LaurentPoly num_;
    LaurentPoly den_;
};

// ---------------------------------------------------------------------------
// q-combinatorics
// ---------------------------------------------------------------------------

/// [r]_q = (q^r - q^-r)/(q - q^-1) = q^{r-1} + q^{r-3} + ... + q^{-r+1},
/// extended to negative r by [-r]_q = -[r]_q.
inline LaurentPoly q_int_poly(std::int64_t r) {
    if (r == 0) return {};
    bool neg = r < 0;
    std::int64_t n = neg ? -r : r;
    LaurentPoly p;
    for (std::int64_t k = 0; k < n; ++k) p.add_term({n - 1 - 2 * k, 0, 0}, neg ? -1 : 1);
    return p;
}

inline Scalar q_int(std::int64_t r) { return Scalar(q_int_poly(r)); }

/// [r]_q! = [1]_q [2]_q ... [r]_q, with [0]_q! = 1.
inline LaurentPoly q_factorial_poly(std::int64_t r) {
    if (r < 0) throw std::invalid_argument("q_factorial: negative argument");
    LaurentPoly p(1);
    for (std::int64_t s = 1; s <= r; ++s) p *= q_int_poly(s);
    return p;
}

inline Scalar q_factorial(std::int64_t r) { return Scalar(q_factorial_poly(r)); }

/// Gaussian binomial [r s]_q = [r]_q!/([s]_q! [r-s]_q!). Computed by the
/// product recursion prod_{i=1..s} [r-s+i]/[i] with exact polynomial division
/// at every step, so the result stays a Laurent polynomial throughout.
inline LaurentPoly q_binomial_poly(std::int64_t r, std::int64_t s) {
    if (s < 0 || s > r) throw std::invalid_argument("q_binomial: requires 0 <= s <= r");
    if (s > r - s) s = r - s;
    LaurentPoly b(1);
    for (std::int64_t i = 1; i <= s; ++i)
        b = (b * q_int_poly(r - s + i)).exact_div(q_int_poly(i));
    return b;
}

inline Scalar q_binomial(std::int64_t r, std::int64_t s) { return Scalar(q_binomial_poly(r, s)); }

// ---------------------------------------------------------------------------
// Canonical text form
//
// Grammar (bit-exact): term := coeff "*" factors | factors | coeff;
// factors := ("q"|"x"|"y") "^" int joined by "*"; terms joined by " + " or
// " - "; coefficients are reduced integer fractions. Monomials are emitted in
// descending (x, y, q) exponent order; factors inside a term in x, y, q order.
// Scalars with a non-trivial denominator print as "(num) / (den)".
// ---------------------------------------------------------------------------

inline std::string to_canonical_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        mpq_class coeff = c;
        if (first) {
            first = false;
        } else {
            out += coeff > 0 ? " + " : " - ";
            if (coeff < 0) coeff = -coeff;
        }
        std::string factors;
        auto emit = [&factors](const char* name, std::int64_t e) {
            if (e == 0) return;
            if (!factors.empty()) factors += "*";
            factors += name;
            factors += "^";
            factors += std::to_string(e);
        };
        emit("x", m.x);
        emit("y", m.y);
        emit("q", m.q);
        if (factors.empty()) {
            out += coeff.get_str();
        } else if (coeff == 1) {
            out += factors;
        } else {
            out += coeff.get_str() + "*" + factors;
        }
    }
    return out;
}

inline std::string to_canonical_string(const Scalar& s) {
    if (s.is_polynomial()) return to_canonical_string(s.num());
    return "(" + to_canonical_string(s.num()) + ") / (" + to_canonical_string(s.den()) + ")";
}

namespace detail {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    LaurentPoly parse_polynomial() {
        LaurentPoly p;
        bool negative = false;
        p += parse_term(true);
        while (pos_ < text_.size()) {
            if (consume(" + ")) negative = false;
            else if (consume(" - ")) negative = true;
            else fail("expected ' + ' or ' - '");
            LaurentPoly t = parse_term(false);
            p += negative ? -t : t;
        }
        return p;
    }

    bool at_end() const { return pos_ == text_.size(); }
    std::size_t position() const { return pos_; }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    bool consume(std::string_view token) {
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    mpz_class parse_integer(bool sign_allowed) {
        std::size_t start = pos_;
        if (sign_allowed && peek() == '-') ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    LaurentPoly parse_term(bool first) {
        mpq_class coeff = 1;
        bool have_coeff = false;
        if (peek() == '-' || std::isdigit(static_cast<unsigned char>(peek()))) {
            mpz_class p = parse_integer(first);
            if (peek() == '/') {
                ++pos_;
                mpz_class r = parse_integer(false);
                if (r == 0) fail("zero denominator in coefficient");
                coeff = mpq_class(p) / mpq_class(r);
            } else {
                coeff = mpq_class(p);
            }
            have_coeff = true;
            if (!consume("*")) return LaurentPoly(coeff);  // bare constant term
        }
        Monomial m;
        bool have_factor = false;
        while (true) {
            char v = peek();
            if (v != 'q' && v != 'x' && v != 'y') {
                if (!have_factor) fail("expected factor");
                break;
            }
            ++pos_;
            if (!consume("^")) fail("expected '^'");
            std::int64_t e = mpz_class(parse_integer(true)).get_si();
            if (v == 'q') m.q = checked_add(m.q, e);
            else if (v == 'x') m.x = checked_add(m.x, e);
            else m.y = checked_add(m.y, e);
            have_factor = true;
            if (!consume("*")) break;
            // a '*' may also introduce nothing valid; next loop iteration checks
        }
        (void)have_coeff;
        return LaurentPoly::term(coeff, m);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline LaurentPoly parse_polynomial(std::string_view text) {
    if (text == "0") return {};
    detail::PolyParser parser(text);
    return parser.parse_polynomial();
}

/// Inverse of to_canonical_string(Scalar): accepts a bare polynomial or the
/// "(num) / (den)" fraction form.
inline Scalar parse_scalar(std::string_view text) {
    if (!text.empty() && text.front() == '(') {
        std::size_t close = text.rfind(") / (");
        if (close == std::string_view::npos || text.back() != ')')
            throw std::invalid_argument("malformed fraction: expected '(num) / (den)'");
        LaurentPoly num = parse_polynomial(text.substr(1, close - 1));
        LaurentPoly den = parse_polynomial(text.substr(close + 5, text.size() - close - 6));
        return Scalar(num, den);
    }
    return Scalar(parse_polynomial(text));
}

}  // namespace qaffine
