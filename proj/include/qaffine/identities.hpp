#pragma once

/*
 * q-combinatorial identities underpinning the determinant evaluation: the
 * alternating factorial-quotient sum, its classical limit, the vanishing
 * alternating binomial sums, and their two-variable product form.
 * All checks are exact polynomial comparisons; no specialization.
 */

#include <gmpxx.h>

#include "scalar.hpp"

namespace qaffine {

/// Multinomial quotient [m-i]! / ([i]! [l-i]! [m-l-i]!) as a true quotient of
/// Laurent polynomials. Each stage divides exactly, so no gcd is needed.
inline LaurentPoly q_multinomial_poly(std::int64_t m, std::int64_t l, std::int64_t i) {
    LaurentPoly t = q_factorial_poly(m - i);
    t = t.exact_div(q_factorial_poly(i));
    t = t.exact_div(q_factorial_poly(l - i));
    return t.exact_div(q_factorial_poly(m - l - i));
}

/// sum_{i=0}^{min(l,m-l)} (-1)^i q^-i [m-i]!/([i]![l-i]![m-l-i]!) = q^{l(m-l)}
/// as an identity of Laurent polynomials in q.
inline bool alternating_factorial_sum_check(std::int64_t m, std::int64_t l) {
    LaurentPoly total;
    for (std::int64_t i = 0; i <= std::min(l, m - l); ++i) {
        LaurentPoly t = q_multinomial_poly(m, l, i) * LaurentPoly::q(-i);
        total = i % 2 == 0 ? total + t : total - t;
    }
    return total == LaurentPoly::q(l * (m - l));
}

/// The same sum written with q-binomials:
/// sum (-1)^i q^-i [l i] [m-i l] = q^{l(m-l)}. A second route to the
/// identity, exercised because the binomials are built by product recursion
/// rather than factorial division.
inline bool alternating_binomial_sum_check(std::int64_t m, std::int64_t l) {
    LaurentPoly total;
    for (std::int64_t i = 0; i <= std::min(l, m - l); ++i) {
        LaurentPoly t =
            q_binomial_poly(l, i) * q_binomial_poly(m - i, l) * LaurentPoly::q(-i);
        total = i % 2 == 0 ? total + t : total - t;
    }
    return total == LaurentPoly::q(l * (m - l));
}

/// Classical binomial coefficient as an exact integer.
inline mpz_class binomial_z(std::int64_t r, std::int64_t s) {
    if (s < 0 || s > r) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(r),
                 static_cast<unsigned long>(s));
    return out;
}

/// sum_{i=0}^{min(l,m-l)} (-1)^i C(l,i) C(m-i,l) = 1 over the integers.
inline bool classical_corollary_check(std::int64_t m, std::int64_t l) {
    mpz_class total = 0;
    for (std::int64_t i = 0; i <= std::min(l, m - l); ++i) {
        mpz_class t = binomial_z(l, i) * binomial_z(m - i, l);
        total += i % 2 == 0 ? t : -t;
    }
    return total == 1;
}

/// Sends each q-term of the binomial sum to q = 1, matches it against the
/// corresponding integer term, and checks the summed limits give 1.
inline bool classical_limit_agreement_check(std::int64_t m, std::int64_t l) {
    mpq_class total = 0;
    for (std::int64_t i = 0; i <= std::min(l, m - l); ++i) {
        Scalar t(q_binomial_poly(l, i) * q_binomial_poly(m - i, l) *
                 LaurentPoly::q(-i));
        mpq_class lim = t.classical_limit();
        if (lim != mpq_class(binomial_z(l, i) * binomial_z(m - i, l))) return false;
        total += i % 2 == 0 ? lim : -lim;
    }
    return total == 1;
}

/// sum_{i=0}^{l} (-1)^i [l i] q^{ik} = 0 for one admissible exponent k.
inline LaurentPoly alternating_binomial_power_sum(std::int64_t l, std::int64_t k) {
    LaurentPoly total;
    for (std::int64_t i = 0; i <= l; ++i) {
        LaurentPoly t = q_binomial_poly(l, i) * LaurentPoly::q(i * k);
        total = i % 2 == 0 ? total + t : total - t;
    }
    return total;
}

/// The sum above vanishes for every k in {l-1, l-3, ..., -(l-1)}.
inline bool vanishing_sum_check(std::int64_t l, std::int64_t k) {
    return alternating_binomial_power_sum(l, k).is_zero();
}

inline bool vanishing_sum_check_all(std::int64_t l) {
    for (std::int64_t k = l - 1; k >= -(l - 1); k -= 2)
        if (!vanishing_sum_check(l, k)) return false;
    return true;
}

/// Two-variable product form, with s standing for the combined weight m+n:
/// sum_{i=0}^{l} (-1)^i [l i] x^i y^{l-i} q^{i(l-1)-is}
///   = prod_{j=0}^{l-1} (y - x q^{-s+2j}).
inline bool alternating_product_form_check(std::int64_t l, std::int64_t s) {
    LaurentPoly lhs;
    for (std::int64_t i = 0; i <= l; ++i) {
        LaurentPoly t = q_binomial_poly(l, i) * LaurentPoly::x(i) *
                        LaurentPoly::y(l - i) * LaurentPoly::q(i * (l - 1) - i * s);
        lhs = i % 2 == 0 ? lhs + t : lhs - t;
    }
    LaurentPoly rhs(1);
    for (std::int64_t j = 0; j < l; ++j)
        rhs = rhs * (LaurentPoly::y() - LaurentPoly::x() * LaurentPoly::q(-s + 2 * j));
    return lhs == rhs;
}

}  // namespace qaffine
