#pragma once

/*
 * The ladder family phi_{l,j} = e_0^{l-j} f^j Omega_0, its coefficient
 * matrices and exact determinants, and the assembly of the candidate bases
 * of V_m(x) (x) V_n(y) together with the genericity criterion and an
 * independent rank certification.
 */

#include <vector>

#include "extremal.hpp"
#include "identities.hpp"
#include "linalg.hpp"

namespace qaffine {

/// Scale of the seed vectors. Product carries the closed-form leading
/// coefficient (Omega_0 = ([n]/[m+1]) v_0 (x) w_0, Phi_0 = ([m]/[n+1])
/// v_m (x) w_n); Unit seeds with coefficient 1.
enum class Normalization { Product, Unit };

inline const char* to_string(Normalization norm) {
    return norm == Normalization::Product ? "product" : "unit";
}

namespace detail {

inline void require_factor_order(const TensorModule& M) {
    if (M.right().highest_weight() > M.left().highest_weight())
        throw std::invalid_argument(
            "basis construction requires n <= m; swap the factors explicitly");
}

}  // namespace detail

/// Omega_0 in the chosen normalization.
inline TensorElem delta_seed(const TensorModule& M, Normalization norm) {
    detail::require_factor_order(M);
    TensorElem v = M.basis(0, 0);
    if (norm == Normalization::Product)
        v = v.scaled(q_int(M.right().highest_weight()) /
                     q_int(M.left().highest_weight() + 1));
    return v;
}

/// Phi_0 in the chosen normalization.
inline TensorElem lambda_seed(const TensorModule& M, Normalization norm) {
    detail::require_factor_order(M);
    TensorElem v = M.basis(M.left().highest_weight(), M.right().highest_weight());
    if (norm == Normalization::Product)
        v = v.scaled(q_int(M.left().highest_weight()) /
                     q_int(M.right().highest_weight() + 1));
    return v;
}

/// phi_{l,j} = e_0^{l-j} f^j Omega_0, for 0 <= j <= l <= n.
inline TensorElem phi_lj(const TensorModule& M, std::int64_t l, std::int64_t j,
                         Normalization norm = Normalization::Unit) {
    if (j < 0 || j > l || l > M.right().highest_weight())
        throw std::invalid_argument("phi_lj: need 0 <= j <= l <= n");
    TensorElem v = M.apply_power(SlGen::f, j, delta_seed(M, norm));
    return M.apply_power(Gen::e0, l - j, v);
}

/// Dual ladder phi'_{l,j} = f_0^{l-j} e^j Phi_0, taken in the opposite
/// coproduct action. Under the standard action the same words degenerate on
/// the lowering ladder's locus y = xq^{-m-n+2j}; the swapped legs move the
/// degeneracy to the mirror locus y = xq^{m+n-2j}, which is the condition the
/// dual criterion tests.
inline TensorElem phi_dual_lj(const TensorModule& M, std::int64_t l, std::int64_t j,
                              Normalization norm = Normalization::Unit) {
    if (j < 0 || j > l || l > M.right().highest_weight())
        throw std::invalid_argument("phi_dual_lj: need 0 <= j <= l <= n");
    TensorElem v = M.apply_op_power(SlGen::e, j, lambda_seed(M, norm));
    return M.apply_op_power(Gen::f0, l - j, v);
}

/// Coefficient matrix of {phi_{l,0}, ..., phi_{l,l}} in the weight-l basis:
/// entries[j][i] is the coefficient of v_i (x) w_{l-i} in phi_{l,j}.
struct CoeffMatrix {
    std::int64_t l = 0;
    Matrix<Scalar> entries;
};

inline CoeffMatrix delta_matrix(const TensorModule& M, std::int64_t l,
                                Normalization norm = Normalization::Unit) {
    CoeffMatrix cm;
    cm.l = l;
    cm.entries.assign(static_cast<std::size_t>(l + 1),
                      std::vector<Scalar>(static_cast<std::size_t>(l + 1), Scalar(0)));
    for (std::int64_t j = 0; j <= l; ++j) {
        TensorElem v = phi_lj(M, l, j, norm);
        for (std::int64_t i = 0; i <= l; ++i)
            cm.entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                v.coeff({i, l - i});
    }
    return cm;
}

/// Both displayed entry recursions between successive coefficient matrices:
///   row 0:   g_{l+1,0}[i] = y q^-1 [l-i+1] g_{l,0}[i]
///                           + x q^{-n+2l-2i+1} [i] g_{l,0}[i-1]
///   row j>0: g_{l+1,j}[i] = q^{-m+2i} [l-i+1] g_{l,j-1}[i] + [i] g_{l,j-1}[i-1]
/// Out-of-range columns read as zero.
inline bool gamma_recursion_check(const TensorModule& M, std::int64_t l,
                                  Normalization norm = Normalization::Unit) {
    const std::int64_t m = M.left().highest_weight(), n = M.right().highest_weight();
    CoeffMatrix lo = delta_matrix(M, l, norm);
    CoeffMatrix hi = delta_matrix(M, l + 1, norm);
    auto low = [&](std::int64_t j, std::int64_t i) -> Scalar {
        if (i < 0 || i > l) return Scalar(0);
        return lo.entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    };
    for (std::int64_t i = 0; i <= l + 1; ++i) {
        Scalar top = M.right().parameter() * Scalar::q(-1) * q_int(l - i + 1) * low(0, i) +
                     M.left().parameter() * Scalar::q(-n + 2 * l - 2 * i + 1) * q_int(i) *
                         low(0, i - 1);
        if (hi.entries[0][static_cast<std::size_t>(i)] != top) return false;
        for (std::int64_t j = 1; j <= l + 1; ++j) {
            Scalar want = Scalar::q(-m + 2 * i) * q_int(l - i + 1) * low(j - 1, i) +
                          q_int(i) * low(j - 1, i - 1);
            if (hi.entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] != want)
                return false;
        }
    }
    return true;
}

/// Closed form of the top row under unit normalization:
/// g_{l,0}[i] = x^i y^{l-i} [l]! q^{-l} q^{i(l-i-n)}.
inline bool gamma_row0_closed_check(const TensorModule& M, std::int64_t l) {
    const std::int64_t n = M.right().highest_weight();
    CoeffMatrix cm = delta_matrix(M, l, Normalization::Unit);
    for (std::int64_t i = 0; i <= l; ++i) {
        Scalar want = Scalar::x(i) * Scalar::y(l - i) * q_factorial(l) *
                      Scalar::q(-l + i * (l - i - n));
        if (cm.entries[0][static_cast<std::size_t>(i)] != want) return false;
    }
    return true;
}

inline Scalar det_exact(const CoeffMatrix& cm) { return det_scalar(cm.entries); }

/// Coefficient matrix with row j divided by [j]!. The raw rows satisfy the
/// displayed entry recursions; dividing row j by [j]! (the divided power
/// f^j / [j]!) is the scaling under which the determinant chain takes its
/// closed single-factorial form. Row 0 is untouched.
inline CoeffMatrix normalized_delta_matrix(const TensorModule& M, std::int64_t l,
                                           Normalization norm = Normalization::Unit) {
    CoeffMatrix cm = delta_matrix(M, l, norm);
    for (std::int64_t j = 1; j <= l; ++j) {
        Scalar inv = q_factorial(j).inverse();
        for (auto& e : cm.entries[static_cast<std::size_t>(j)]) e = e * inv;
    }
    return cm;
}

/// prod_{j=0}^{L-1} (y - x q^{-m-n+2j})^{L-j}, the parameter-dependent part
/// of the determinant of the L-th coefficient matrix.
inline Scalar xy_factor_product(std::int64_t m, std::int64_t n, std::int64_t L) {
    LaurentPoly p(1);
    for (std::int64_t j = 0; j < L; ++j) {
        LaurentPoly f = LaurentPoly::y() - LaurentPoly::x() * LaurentPoly::q(-m - n + 2 * j);
        for (std::int64_t e = 0; e < L - j; ++e) p = p * f;
    }
    return Scalar(p);
}

/// q^{-(l+1)(l+2)/2} prod_{j=1}^{l+1} [j]! prod_{j=0}^{l} (y-xq^{-m-n+2j})^{l+1-j}:
/// the closed determinant form stripped of its constant [n]/[m+1] prefactor.
inline Scalar prop31_base(std::int64_t m, std::int64_t n, std::int64_t l) {
    Scalar r = Scalar::q(-(l + 1) * (l + 2) / 2);
    for (std::int64_t j = 1; j <= l + 1; ++j) r *= q_factorial(j);
    return r * xy_factor_product(m, n, l + 1);
}

/// The closed determinant form as displayed, for the (l+1)-st matrix.
inline Scalar prop31_closed(std::int64_t m, std::int64_t n, std::int64_t l) {
    return (q_int(n) / q_int(m + 1)) * prop31_base(m, n, l);
}

/// Exact determinant of the L-th coefficient matrix next to its closed form.
/// prefactor = det / prop31_base: the invariant det = prefactor * base holds
/// by construction, and the measured prefactor must be free of x and y.
struct DeterminantReport {
    std::int64_t l = 0;  // matrix subscript L
    Scalar det;
    Scalar closed_form;
    Scalar prefactor;
};

inline DeterminantReport determinant_report(const TensorModule& M, std::int64_t L,
                                            Normalization norm = Normalization::Unit) {
    if (L < 1) throw std::invalid_argument("determinant_report: need L >= 1");
    const std::int64_t m = M.left().highest_weight(), n = M.right().highest_weight();
    DeterminantReport r;
    r.l = L;
    r.det = det_exact(normalized_delta_matrix(M, L, norm));
    r.closed_form = prop31_closed(m, n, L - 1);
    r.prefactor = r.det / prop31_base(m, n, L - 1);
    return r;
}

/// |D_{l+1}| = c [l+1]! |D_l| on the divided-power rows, with
/// c = (y - xq^{-m-n+2l}) q^{-(l+1)} sum_i (-1)^i [l i] x^i y^{l-i}
///     q^{i(l-1)} q^{-i(m+n)},
/// checked exactly under unit normalization, plus the product form of the
/// sum: c = q^{-(l+1)} prod_{j=0}^{l} (y - xq^{-m-n+2j}). On the raw rows
/// the same step carries an extra [l+1]! from the new bottom row.
inline bool inductive_step_check(const TensorModule& M, std::int64_t l) {
    const std::int64_t m = M.left().highest_weight(), n = M.right().highest_weight();
    LaurentPoly sum;
    for (std::int64_t i = 0; i <= l; ++i) {
        LaurentPoly t = q_binomial_poly(l, i) * LaurentPoly::x(i) * LaurentPoly::y(l - i) *
                        LaurentPoly::q(i * (l - 1) - i * (m + n));
        sum = i % 2 == 0 ? sum + t : sum - t;
    }
    Scalar c = Scalar((LaurentPoly::y() - LaurentPoly::x() * LaurentPoly::q(-m - n + 2 * l)) *
                      LaurentPoly::q(-(l + 1)) * sum);
    Scalar product_c = Scalar::q(-(l + 1));
    for (std::int64_t j = 0; j <= l; ++j)
        product_c *= Scalar::y() - Scalar::x() * Scalar::q(-m - n + 2 * j);
    if (c != product_c) return false;

    Scalar det_lo = det_exact(normalized_delta_matrix(M, l, Normalization::Unit));
    Scalar det_hi = det_exact(normalized_delta_matrix(M, l + 1, Normalization::Unit));
    return det_hi == c * q_factorial(l + 1) * det_lo;
}

/// Candidate basis: the ladders for l < n, their images under f^{m+n-2l},
/// and the string f^i phi_{n,j} for i = 0..m-n. Order is deterministic.
inline std::vector<TensorElem> build_delta_basis(const TensorModule& M,
                                                 Normalization norm = Normalization::Unit) {
    detail::require_factor_order(M);
    const std::int64_t m = M.left().highest_weight(), n = M.right().highest_weight();
    std::vector<TensorElem> out;
    out.reserve(static_cast<std::size_t>((m + 1) * (n + 1)));
    for (std::int64_t l = 0; l < n; ++l)
        for (std::int64_t j = 0; j <= l; ++j) out.push_back(phi_lj(M, l, j, norm));
    for (std::int64_t l = 0; l < n; ++l)
        for (std::int64_t j = 0; j <= l; ++j)
            out.push_back(M.apply_power(SlGen::f, m + n - 2 * l, phi_lj(M, l, j, norm)));
    for (std::int64_t i = 0; i <= m - n; ++i)
        for (std::int64_t j = 0; j <= n; ++j)
            out.push_back(M.apply_power(SlGen::f, i, phi_lj(M, n, j, norm)));
    return out;
}

/// Dual candidate basis built from the lowest weight vector with e and f_0,
/// entirely inside the opposite coproduct action.
inline std::vector<TensorElem> build_lambda_basis(const TensorModule& M,
                                                  Normalization norm = Normalization::Unit) {
    detail::require_factor_order(M);
    const std::int64_t m = M.left().highest_weight(), n = M.right().highest_weight();
    std::vector<TensorElem> out;
    out.reserve(static_cast<std::size_t>((m + 1) * (n + 1)));
    for (std::int64_t l = 0; l < n; ++l)
        for (std::int64_t j = 0; j <= l; ++j) out.push_back(phi_dual_lj(M, l, j, norm));
    for (std::int64_t l = 0; l < n; ++l)
        for (std::int64_t j = 0; j <= l; ++j)
            out.push_back(M.apply_op_power(SlGen::e, m + n - 2 * l, phi_dual_lj(M, l, j, norm)));
    for (std::int64_t i = 0; i <= m - n; ++i)
        for (std::int64_t j = 0; j <= n; ++j)
            out.push_back(M.apply_op_power(SlGen::e, i, phi_dual_lj(M, n, j, norm)));
    return out;
}

/// b^k over the rationals, with negative k inverting a nonzero base.
inline mpq_class mpq_pow(const mpq_class& b, std::int64_t k) {
    if (k < 0) {
        if (b == 0) throw std::domain_error("mpq_pow: zero base, negative exponent");
        return mpq_pow(1 / b, -k);
    }
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), b.get_num().get_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(r.get_den_mpz_t(), b.get_den().get_mpz_t(), static_cast<unsigned long>(k));
    r.canonicalize();
    return r;
}

/// Indices j < n at which the genericity criterion fails:
/// y0 = x0 q0^{-(m+n)+2j} for the primal family, y0 = x0 q0^{(m+n)-2j} for
/// the dual one.
inline std::vector<std::int64_t> criterion_failing_j(std::int64_t m, std::int64_t n,
                                                     const mpq_class& q0,
                                                     const mpq_class& x0,
                                                     const mpq_class& y0, bool dual) {
    std::vector<std::int64_t> out;
    for (std::int64_t j = 0; j < n; ++j) {
        std::int64_t k = dual ? m + n - 2 * j : -(m + n) + 2 * j;
        if (y0 == x0 * mpq_pow(q0, k)) out.push_back(j);
    }
    return out;
}

/// Exact rank over the rationals of the candidate vectors specialized at
/// (q0, x0, y0); columns run over the full standard basis of the tensor
/// product in index order.
inline std::int64_t rank_at_point(const std::vector<TensorElem>& vecs,
                                  const TensorModule& M, const mpq_class& q0,
                                  const mpq_class& x0, const mpq_class& y0) {
    const std::int64_t m = M.left().highest_weight(), n = M.right().highest_weight();
    std::map<TensorIdx, std::size_t> col;
    for (std::int64_t i = 0; i <= m; ++i)
        for (std::int64_t j = 0; j <= n; ++j)
            col[{i, j}] = col.size();
    Matrix<mpq_class> a(vecs.size(), std::vector<mpq_class>(col.size(), 0));
    for (std::size_t r = 0; r < vecs.size(); ++r)
        for (const auto& [ij, s] : vecs[r].terms()) a[r][col.at(ij)] = s.specialize(q0, x0, y0);
    return static_cast<std::int64_t>(rank(a));
}

/// Rank over the rational-function field itself; exact but much slower.
inline std::int64_t rank_symbolic(const std::vector<TensorElem>& vecs,
                                  const TensorModule& M) {
    const std::int64_t m = M.left().highest_weight(), n = M.right().highest_weight();
    std::map<TensorIdx, std::size_t> col;
    for (std::int64_t i = 0; i <= m; ++i)
        for (std::int64_t j = 0; j <= n; ++j)
            col[{i, j}] = col.size();
    Matrix<Scalar> a(vecs.size(), std::vector<Scalar>(col.size(), Scalar(0)));
    for (std::size_t r = 0; r < vecs.size(); ++r)
        for (const auto& [ij, s] : vecs[r].terms()) a[r][col.at(ij)] = s;
    return static_cast<std::int64_t>(rank(a));
}

struct BasisReport {
    std::int64_t m = 0, n = 0;
    bool symbolic = false;
    mpq_class q0, x0, y0;
    bool dual = false;
    Normalization norm = Normalization::Unit;
    bool criterion_pass = false;
    std::vector<std::int64_t> failing_j;
    std::int64_t rank = 0;
    std::int64_t expected_rank = 0;
};

/// Criterion evaluation plus independent rank certification at a point.
inline BasisReport certify_basis(const TensorModule& M, const mpq_class& q0,
                                 const mpq_class& x0, const mpq_class& y0, bool dual,
                                 Normalization norm = Normalization::Unit) {
    const std::int64_t m = M.left().highest_weight(), n = M.right().highest_weight();
    BasisReport r;
    r.m = m;
    r.n = n;
    r.q0 = q0;
    r.x0 = x0;
    r.y0 = y0;
    r.dual = dual;
    r.norm = norm;
    r.failing_j = criterion_failing_j(m, n, q0, x0, y0, dual);
    r.criterion_pass = r.failing_j.empty();
    std::vector<TensorElem> vecs = dual ? build_lambda_basis(M, norm) : build_delta_basis(M, norm);
    r.rank = rank_at_point(vecs, M, q0, x0, y0);
    r.expected_rank = (m + 1) * (n + 1);
    return r;
}

/// Rank over the function field; the criterion holds identically there.
inline BasisReport certify_basis_symbolic(const TensorModule& M, bool dual,
                                          Normalization norm = Normalization::Unit) {
    const std::int64_t m = M.left().highest_weight(), n = M.right().highest_weight();
    BasisReport r;
    r.m = m;
    r.n = n;
    r.symbolic = true;
    r.dual = dual;
    r.norm = norm;
    r.criterion_pass = true;
    std::vector<TensorElem> vecs = dual ? build_lambda_basis(M, norm) : build_delta_basis(M, norm);
    r.rank = rank_symbolic(vecs, M);
    r.expected_rank = (m + 1) * (n + 1);
    return r;
}

}  // namespace qaffine
