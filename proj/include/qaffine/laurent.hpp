#pragma once

/*
 * Sparse Laurent polynomials in q, x, y over arbitrary-precision rationals.
 *
 * Monomials are exponent triples (may be negative); the term order is
 * lexicographic by (x, y, q) exponent, greatest first. Exponent arithmetic is
 * overflow-checked: overflow throws instead of wrapping.
 */

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qaffine {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("exponent overflow in monomial product");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("exponent overflow in monomial power");
    return r;
}

/// Exponent triple of q^a x^b y^c.
struct Monomial {
    std::int64_t q = 0;
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;

    Monomial operator*(const Monomial& o) const {
        return {checked_add(q, o.q), checked_add(x, o.x), checked_add(y, o.y)};
    }
    Monomial operator/(const Monomial& o) const {
        return {checked_add(q, -o.q), checked_add(x, -o.x), checked_add(y, -o.y)};
    }
    Monomial inverse() const { return {-q, -x, -y}; }
    bool is_one() const { return q == 0 && x == 0 && y == 0; }
};

/// Descending lex order by (x, y, q); map iteration starts at the leading term.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.x != b.x) return a.x > b.x;
        if (a.y != b.y) return a.y > b.y;
        return a.q > b.q;
    }
};

enum class Var { q = 0, x = 1, y = 2 };

inline std::int64_t exponent_of(const Monomial& m, Var v) {
    switch (v) {
    case Var::q: return m.q;
    case Var::x: return m.x;
    default: return m.y;
    }
}

inline void set_exponent(Monomial& m, Var v, std::int64_t e) {
    switch (v) {
    case Var::q: m.q = e; break;
    case Var::x: m.x = e; break;
    default: m.y = e; break;
    }
}

class LaurentPoly {
public:
    using TermMap = std::map<Monomial, mpq_class, MonomialOrder>;

    LaurentPoly() = default;
    LaurentPoly(int c) { *this = LaurentPoly(mpq_class(c)); }
    explicit LaurentPoly(const mpq_class& c) { add_term(Monomial{}, c); }

    static LaurentPoly term(const mpq_class& c, Monomial m) {
        LaurentPoly p;
        p.add_term(m, c);
        return p;
    }
    static LaurentPoly variable(Var v, std::int64_t e = 1) {
        Monomial m;
        set_exponent(m, v, e);
        return term(1, m);
    }
    static LaurentPoly q(std::int64_t e = 1) { return variable(Var::q, e); }
    static LaurentPoly x(std::int64_t e = 1) { return variable(Var::x, e); }
    static LaurentPoly y(std::int64_t e = 1) { return variable(Var::y, e); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.is_one() &&
               terms_.begin()->second == 1;
    }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    std::size_t size() const { return terms_.size(); }

    /// Leading (lex-greatest) term; polynomial must be nonzero.
    const std::pair<const Monomial, mpq_class>& leading() const {
        if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
        return *terms_.begin();
    }

    /// Adds c * m. Accepts non-canonical fractions (mpq_class(6, 4)); stored
    /// coefficients are always canonical so that operator== is structural.
    void add_term(const Monomial& m, const mpq_class& c) {
        if (c == 0) return;
        mpq_class cc = c;
        cc.canonicalize();
        auto [it, inserted] = terms_.emplace(m, cc);
        if (!inserted) {
            it->second += cc;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const mpq_class& c) const {
        LaurentPoly r;
        if (c == 0) return r;
        mpq_class cc = c;
        cc.canonicalize();
        for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * cc);
        return r;
    }
    LaurentPoly shifted(const Monomial& by) const {
        LaurentPoly r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m * by, c);
        return r;
    }

    LaurentPoly pow(std::int64_t e) const {
        LaurentPoly base = *this;
        if (e < 0) {
            // Only units (single terms) are invertible in the Laurent ring.
            if (terms_.size() != 1)
                throw std::invalid_argument("LaurentPoly::pow: negative power of a non-unit");
            const auto& [m, c] = *terms_.begin();
            base = term(1 / c, m.inverse());
            if (e == std::numeric_limits<std::int64_t>::min())
                return base.pow(-(e + 1)) * base;
            e = -e;
        }
        LaurentPoly r(1);
        while (e > 0) {
            if (e & 1) r *= base;
            base = (e >>= 1) ? base * base : base;
        }
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }

    /// Smallest exponent of v over all terms (0 for the zero polynomial).
    std::int64_t min_exponent(Var v) const {
        if (terms_.empty()) return 0;
        bool first = true;
        std::int64_t lo = 0;
        for (const auto& [m, c] : terms_) {
            std::int64_t e = exponent_of(m, v);
            if (first || e < lo) lo = e, first = false;
        }
        return lo;
    }
    std::int64_t max_exponent(Var v) const {
        if (terms_.empty()) return 0;
        bool first = true;
        std::int64_t hi = 0;
        for (const auto& [m, c] : terms_) {
            std::int64_t e = exponent_of(m, v);
            if (first || e > hi) hi = e, first = false;
        }
        return hi;
    }
    bool depends_on(Var v) const {
        for (const auto& [m, c] : terms_)
            if (exponent_of(m, v) != 0) return true;
        return false;
    }

    /// Splits off the monomial content: *this == mono * poly where poly has
    /// min exponent 0 in every variable.
    std::pair<Monomial, LaurentPoly> monomial_split() const {
        if (terms_.empty()) return {Monomial{}, LaurentPoly{}};
        Monomial lo{min_exponent(Var::q), min_exponent(Var::x), min_exponent(Var::y)};
        return {lo, shifted(lo.inverse())};
    }

    /// Exact evaluation at a rational point; exponents may be negative, so the
    /// coordinates must be nonzero whenever the corresponding variable occurs.
    mpq_class evaluate(const mpq_class& q0, const mpq_class& x0, const mpq_class& y0) const {
        mpq_class qc = q0, xc = x0, yc = y0;
        qc.canonicalize();
        xc.canonicalize();
        yc.canonicalize();
        mpq_class total = 0;
        for (const auto& [m, c] : terms_)
            total += c * pow_rational(qc, m.q) * pow_rational(xc, m.x) * pow_rational(yc, m.y);
        return total;
    }

    static mpq_class pow_rational(const mpq_class& base, std::int64_t e) {
        if (e == 0) return 1;
        if (base == 0) throw std::domain_error("zero raised to a nonzero power at specialization point");
        mpq_class b = base;
        std::int64_t k = e;
        if (k < 0) {
            b = 1 / b;
            k = -k;
        }
        mpq_class r = 1;
        while (k > 0) {
            if (k & 1) r *= b;
            b *= b;
            k >>= 1;
        }
        return r;
    }

    /// Exact quotient *this / d. Throws std::domain_error when d is zero or
    /// does not divide exactly.
    LaurentPoly exact_div(const LaurentPoly& d) const {
        if (d.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
        if (is_zero()) return {};
        // Shift both operands to true polynomials so the term order is a
        // well-order and leading-term reduction terminates.
        auto [ma, A] = monomial_split();
        auto [mb, B] = d.monomial_split();
        LaurentPoly quot;
        LaurentPoly rem = A;
        const auto& [lead_m, lead_c] = B.leading();
        while (!rem.is_zero()) {
            const auto& [rm, rc] = rem.leading();
            if (rm.x < lead_m.x || rm.y < lead_m.y || rm.q < lead_m.q)
                throw std::domain_error("exact_div: not exactly divisible");
            Monomial qm = rm / lead_m;
            mpq_class qc = rc / lead_c;
            quot.add_term(qm, qc);
            rem -= B.shifted(qm).scaled(qc);
        }
        return quot.shifted(ma / mb);
    }

    std::optional<LaurentPoly> try_exact_div(const LaurentPoly& d) const {
        try {
            return exact_div(d);
        } catch (const std::domain_error&) {
            return std::nullopt;
        }
    }

private:
    TermMap terms_;
};

// ---------------------------------------------------------------------------
// Multivariate gcd (primitive subresultant PRS, recursing x -> y -> q).
// ---------------------------------------------------------------------------

namespace detail {

/// Univariate view: coefficients of powers of v, each a poly in the remaining
/// variables.
inline std::map<std::int64_t, LaurentPoly> coefficients_in(const LaurentPoly& p, Var v) {
    std::map<std::int64_t, LaurentPoly> out;
    for (const auto& [m, c] : p.terms()) {
        Monomial rest = m;
        std::int64_t e = exponent_of(m, v);
        set_exponent(rest, v, 0);
        out[e].add_term(rest, c);
    }
    return out;
}

inline LaurentPoly from_coefficients(const std::map<std::int64_t, LaurentPoly>& coeffs, Var v) {
    LaurentPoly out;
    for (const auto& [e, p] : coeffs)
        for (const auto& [m, c] : p.terms()) {
            Monomial full = m;
            set_exponent(full, v, e);
            out.add_term(full, c);
        }
    return out;
}

inline std::int64_t degree_in(const LaurentPoly& p, Var v) {
    return p.max_exponent(v);  // gcd code operates on shifted (true) polynomials
}

inline LaurentPoly leading_coefficient_in(const LaurentPoly& p, Var v) {
    std::int64_t d = degree_in(p, v);
    LaurentPoly out;
    for (const auto& [m, c] : p.terms())
        if (exponent_of(m, v) == d) {
            Monomial rest = m;
            set_exponent(rest, v, 0);
            out.add_term(rest, c);
        }
    return out;
}

/// Pseudo-remainder of A by B with respect to v: lc(B)^(deg A - deg B + 1) * A mod B.
inline LaurentPoly pseudo_remainder(const LaurentPoly& A, const LaurentPoly& B, Var v) {
    const std::int64_t db = degree_in(B, v);
    const LaurentPoly lb = leading_coefficient_in(B, v);
    LaurentPoly R = A;
    std::int64_t e = degree_in(A, v) - db + 1;
    while (!R.is_zero() && degree_in(R, v) >= db) {
        const std::int64_t dr = degree_in(R, v);
        LaurentPoly lr = leading_coefficient_in(R, v);
        LaurentPoly shift = LaurentPoly::variable(v, dr - db);
        R = R * lb - B * (lr * shift);
        --e;
    }
    for (; e > 0; --e) R = R * lb;
    return R;
}

inline LaurentPoly gcd_poly_impl(LaurentPoly A, LaurentPoly B);

/// gcd of the v-coefficients of p (a poly in the variables below v).
inline LaurentPoly content_in(const LaurentPoly& p, Var v) {
    LaurentPoly g;
    for (const auto& [e, c] : coefficients_in(p, v)) {
        g = gcd_poly_impl(g, c);
        if (g.is_one()) break;
    }
    return g;
}

inline mpz_class integer_content(const LaurentPoly& p) {
    mpz_class g = 0;
    for (const auto& [m, c] : p.terms()) {
        if (c.get_den() != 1)
            throw std::logic_error("integer_content: non-integer coefficient");
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

/// Normalized form used for gcd results: integer-primitive with positive
/// leading coefficient.
inline LaurentPoly make_primitive(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    mpz_class g = integer_content(p);
    if (p.leading().second < 0) g = -g;
    return p.scaled(mpq_class(1) / mpq_class(g));
}

/// Evaluates every variable except `keep` at the given integer points,
/// leaving a univariate polynomial in `keep`. Exponents must be nonnegative.
inline LaurentPoly substitute_others(const LaurentPoly& p, Var keep, std::int64_t s_q,
                                     std::int64_t s_x, std::int64_t s_y) {
    LaurentPoly out;
    for (const auto& [m, c] : p.terms()) {
        mpz_class factor = 1, pw;
        if (keep != Var::q && m.q > 0) {
            mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(s_q),
                          static_cast<unsigned long>(m.q));
            factor *= pw;
        }
        if (keep != Var::x && m.x > 0) {
            mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(s_x),
                          static_cast<unsigned long>(m.x));
            factor *= pw;
        }
        if (keep != Var::y && m.y > 0) {
            mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(s_y),
                          static_cast<unsigned long>(m.y));
            factor *= pw;
        }
        Monomial mm;
        set_exponent(mm, keep, exponent_of(m, keep));
        out.add_term(mm, c * mpq_class(factor));
    }
    return out;
}

/// Projection gate: true means A and B (primitive in v) are provably coprime
/// in v. Substituting the other variables at a point that preserves deg_v(A)
/// cannot lower the degree of the image of gcd(A, B), so a degree-0 image gcd
/// certifies degree 0 in v. False is merely inconclusive.
inline bool images_coprime_in(const LaurentPoly& A, const LaurentPoly& B, Var v) {
    bool others = false;
    for (Var o : {Var::q, Var::x, Var::y})
        if (o != v && (A.depends_on(o) || B.depends_on(o))) others = true;
    if (!others) return false;  // univariate already; run the PRS directly

    static constexpr std::int64_t pts[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
    const std::int64_t dA = degree_in(A, v);
    for (int t = 0; t + 2 < 10; t += 2) {
        std::int64_t p1 = pts[t], p2 = pts[t + 1];
        std::int64_t sq = 0, sx = 0, sy = 0;
        std::int64_t* slots[2];
        int k = 0;
        if (v != Var::q) slots[k++] = &sq;
        if (v != Var::x) slots[k++] = &sx;
        if (v != Var::y) slots[k++] = &sy;
        *slots[0] = p1;
        if (k > 1) *slots[1] = p2;
        LaurentPoly a = substitute_others(A, v, sq, sx, sy);
        if (a.is_zero() || degree_in(a, v) != dA) continue;  // lc killed; retry
        LaurentPoly b = substitute_others(B, v, sq, sx, sy);
        if (b.is_zero()) continue;
        if (degree_in(gcd_poly_impl(a, b), v) == 0) return true;
    }
    return false;
}

/// gcd over Z[q,x,y]; inputs must be true polynomials with integer coefficients.
inline LaurentPoly gcd_poly_impl(LaurentPoly A, LaurentPoly B) {
    if (A.is_zero()) return make_primitive(B);
    if (B.is_zero()) return make_primitive(A);

    Var v;
    if (A.depends_on(Var::x) || B.depends_on(Var::x)) v = Var::x;
    else if (A.depends_on(Var::y) || B.depends_on(Var::y)) v = Var::y;
    else if (A.depends_on(Var::q) || B.depends_on(Var::q)) v = Var::q;
    else {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), integer_content(A).get_mpz_t(), integer_content(B).get_mpz_t());
        return LaurentPoly(mpq_class(g));
    }

    if (degree_in(A, v) < degree_in(B, v)) std::swap(A, B);

    LaurentPoly ca = content_in(A, v);
    LaurentPoly cb = content_in(B, v);
    LaurentPoly cont_gcd = gcd_poly_impl(ca, cb);
    A = A.exact_div(ca);
    B = B.exact_div(cb);

    if (images_coprime_in(A, B, v)) return make_primitive(cont_gcd);

    // Subresultant PRS on the primitive parts.
    LaurentPoly g(1), h(1);
    while (true) {
        if (degree_in(B, v) == 0) return make_primitive(cont_gcd);  // coprime in v
        std::int64_t delta = degree_in(A, v) - degree_in(B, v);
        LaurentPoly R = pseudo_remainder(A, B, v);
        if (R.is_zero()) break;
        A = B;
        B = R.exact_div(g * h.pow(delta));
        g = leading_coefficient_in(A, v);
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = g.pow(delta).exact_div(h.pow(delta - 1));
        }
    }
    LaurentPoly pp = B.exact_div(content_in(B, v));
    return make_primitive(cont_gcd * pp);
}

/// Clears rational coefficients to integers (result differs by a rational unit,
/// which is irrelevant for gcd purposes).
inline LaurentPoly integer_scaled(const LaurentPoly& p) {
    mpz_class l = 1;
    for (const auto& [m, c] : p.terms())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    return p.scaled(mpq_class(l));
}

}  // namespace detail

/// gcd of two Laurent polynomials, up to units: the result is a true polynomial
/// (min exponent 0 per variable), integer-primitive, positive leading
/// coefficient. gcd(0, 0) = 0.
inline LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    // A nonzero constant (or bare monomial) is a unit of the Laurent ring.
    if ((!a.is_zero() && a.size() == 1) || (!b.is_zero() && b.size() == 1)) return LaurentPoly(1);
    auto A = detail::integer_scaled(a.monomial_split().second);
    auto B = detail::integer_scaled(b.monomial_split().second);
    return detail::gcd_poly_impl(A, B);
}

}  // namespace qaffine
