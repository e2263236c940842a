#pragma once

/*
 * Extremal weight vectors of V_m(x) (x) V_n(y) and the scalar alpha_l linking
 * them: Omega_l is killed by e, Phi_l by f, and f^{m+n-2l} Omega_l is a
 * multiple alpha_l Phi_l. alpha_l is computed by three independent routes
 * (operator application, explicit sum, closed product) which must agree.
 */

#include "linalg.hpp"
#include "module.hpp"

namespace qaffine {

/// Lower bound of the product in the extremal coefficients. The source
/// convention starts at j = 0, which makes Omega_n (and Phi_m) identically
/// zero; starting at j = 1 gives the unit-leading-coefficient variant.
enum class ProductBound { FromZero, FromOne };

/// Omega_l = sum_i c_i v_i (x) w_{l-i} with
/// c_i = (-1)^i q^{i(2l-n-i-1)} prod_{j=j0}^{i} [n-l+j]/[m-j+1].
inline TensorElem omega(const TensorModule& M, std::int64_t l,
                        ProductBound pb = ProductBound::FromZero) {
    const std::int64_t m = M.left().highest_weight(), n = M.right().highest_weight();
    if (l < 0 || l > std::min(m, n))
        throw std::invalid_argument("omega: l must lie in 0..min(m,n)");
    const std::int64_t j0 = pb == ProductBound::FromZero ? 0 : 1;
    TensorElem out;
    Scalar prod(1);
    for (std::int64_t i = 0; i <= l; ++i) {
        if (i == 0) {
            if (j0 == 0) prod *= q_int(n - l) / q_int(m + 1);
        } else {
            prod *= q_int(n - l + i) / q_int(m - i + 1);
        }
        Scalar c = Scalar(LaurentPoly::q(i * (2 * l - n - i - 1))) * prod;
        if (i % 2 == 1) c = -c;
        out.add({i, l - i}, c);
    }
    return out;
}

/// Phi_l = sum_i d_i v_{m-l+i} (x) w_{n-i} with
/// d_i = (-1)^i q^{i(-m+2l-i-1)} prod_{j=j0}^{i} [m-l+j]/[n-j+1].
inline TensorElem phi_low(const TensorModule& M, std::int64_t l,
                          ProductBound pb = ProductBound::FromZero) {
    const std::int64_t m = M.left().highest_weight(), n = M.right().highest_weight();
    if (l < 0 || l > std::min(m, n))
        throw std::invalid_argument("phi_low: l must lie in 0..min(m,n)");
    const std::int64_t j0 = pb == ProductBound::FromZero ? 0 : 1;
    TensorElem out;
    Scalar prod(1);
    for (std::int64_t i = 0; i <= l; ++i) {
        if (i == 0) {
            if (j0 == 0) prod *= q_int(m - l) / q_int(n + 1);
        } else {
            prod *= q_int(m - l + i) / q_int(n - i + 1);
        }
        Scalar d = Scalar(LaurentPoly::q(i * (-m + 2 * l - i - 1))) * prod;
        if (i % 2 == 1) d = -d;
        out.add({m - l + i, n - i}, d);
    }
    return out;
}

/// Indices (i, L-i) spanning the weight space of total index L.
inline std::vector<TensorIdx> weight_space(const TensorModule& M, std::int64_t L) {
    const std::int64_t m = M.left().highest_weight(), n = M.right().highest_weight();
    std::vector<TensorIdx> idx;
    for (std::int64_t i = std::max<std::int64_t>(0, L - n); i <= std::min(m, L); ++i)
        idx.push_back({i, L - i});
    return idx;
}

/// Kernel of the diagonal e on the weight-L subspace, as module elements.
/// Independent of the closed-form coefficients; used as an oracle.
inline std::vector<TensorElem> highest_weight_kernel(const TensorModule& M, std::int64_t L) {
    const std::vector<TensorIdx> cols = weight_space(M, L);
    const std::vector<TensorIdx> rows = weight_space(M, L - 1);
    if (rows.empty()) {  // e annihilates the whole top space
        std::vector<TensorElem> out;
        for (const auto& ij : cols) out.push_back(M.basis(ij.first, ij.second));
        return out;
    }
    std::map<TensorIdx, std::size_t> row_of;
    for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;

    Matrix<Scalar> a(rows.size(), std::vector<Scalar>(cols.size(), Scalar(0)));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        TensorElem img = M.apply(SlGen::e, M.basis(cols[c].first, cols[c].second));
        for (const auto& [ij, s] : img.terms()) a[row_of.at(ij)][c] = s;
    }
    std::vector<TensorElem> out;
    for (const auto& v : kernel_basis(a)) {
        TensorElem e;
        for (std::size_t c = 0; c < cols.size(); ++c) e.add(cols[c], v[c]);
        out.push_back(std::move(e));
    }
    return out;
}

/// Right side of the coproduct expansion of the k-th power of f:
/// sum_{j=0}^{k} q^{-j(k-j)} [k j] (K^{-j} f^{k-j} (x) f^j) applied to v.
inline TensorElem coproduct_f_power(const TensorModule& M, std::int64_t k, const TensorElem& v) {
    TensorElem out;
    for (std::int64_t j = 0; j <= k; ++j) {
        TensorElem t = v;
        for (std::int64_t s = 0; s < k - j; ++s) t = M.apply_left(SlGen::f, t);
        for (std::int64_t s = 0; s < j; ++s) t = M.apply_left(SlGen::Kinv, t);
        for (std::int64_t s = 0; s < j; ++s) t = M.apply_right(SlGen::f, t);
        out += t.scaled(Scalar(LaurentPoly::q(-j * (k - j))) * q_binomial(k, j));
    }
    return out;
}

/// alpha_l from the module action: applies f^{m+n-2l} to Omega_l, requires the
/// result be proportional to Phi_l, and reads off the factor.
inline Scalar alpha_direct(const TensorModule& M, std::int64_t l) {
    const std::int64_t m = M.left().highest_weight(), n = M.right().highest_weight();
    TensorElem w = M.apply_power(SlGen::f, m + n - 2 * l, omega(M, l));
    TensorElem ph = phi_low(M, l);
    if (ph.is_zero() || !TensorElem::proportional(w, ph))
        throw std::logic_error("alpha_direct: image is not proportional to Phi_l");
    const TensorIdx corner{m - l, n};
    return w.coeff(corner) / ph.coeff(corner);
}

/// alpha_l as the explicit alternating sum.
inline Scalar alpha_sum(std::int64_t m, std::int64_t n, std::int64_t l) {
    Scalar total(0);
    Scalar prod(1);
    for (std::int64_t i = 0; i <= std::min(l, m - l); ++i) {
        prod *= q_int(n - l + i) / q_int(m - i + 1);
        Scalar term = Scalar(LaurentPoly::q(-i)) * q_factorial(m + n - 2 * l) *
                      q_factorial(m - l) * q_factorial(n) /
                      (q_factorial(m - l - i) * q_factorial(n - l + i) * q_factorial(i) *
                       q_factorial(l - i));
        term *= prod;
        if (i % 2 == 1) term = -term;
        total += term;
    }
    return Scalar(LaurentPoly::q(-l * (n - l))) * (q_int(n + 1) / q_int(m - l)) * total;
}

/// alpha_l as the closed product.
inline Scalar alpha_closed(std::int64_t m, std::int64_t n, std::int64_t l) {
    Scalar r = Scalar(LaurentPoly::q((m - n) * l)) * q_int(n) * q_int(n + 1) *
               q_factorial(m + n) / (q_int(m) * q_int(m + 1));
    for (std::int64_t i = 1; i <= l; ++i) r *= q_int(n - i) / q_int(m - i);
    for (std::int64_t i = 1; i <= 2 * l; ++i) r /= q_int(m + n - 2 * l + i);
    return r;
}

/// Consecutive ratio identity:
/// alpha_l / alpha_{l-1} = ([n-l]/[m-l]) q^{m-n} / ([m+n-2l+1][m+n-2l+2]).
inline bool alpha_ratio_check(std::int64_t m, std::int64_t n, std::int64_t l) {
    Scalar lhs = alpha_closed(m, n, l) / alpha_closed(m, n, l - 1);
    Scalar rhs = (q_int(n - l) / q_int(m - l)) * Scalar(LaurentPoly::q(m - n)) /
                 (q_int(m + n - 2 * l + 1) * q_int(m + n - 2 * l + 2));
    return lhs == rhs;
}

/// e^2 e_0 Omega_l = [2][n-l] q^-1 (x q^m - y q^{-n+2l-2}) Omega_{l-1}.
inline bool lowering_square_check(const TensorModule& M, std::int64_t l) {
    const std::int64_t m = M.left().highest_weight(), n = M.right().highest_weight();
    TensorElem lhs = M.apply(SlGen::e, M.apply(SlGen::e, M.apply(Gen::e0, omega(M, l))));
    Scalar factor = q_int(2) * q_int(n - l) * Scalar::q(-1) *
                    (M.left().parameter() * Scalar::q(m) -
                     M.right().parameter() * Scalar::q(-n + 2 * l - 2));
    return lhs == omega(M, l - 1).scaled(factor);
}

/// e_0 Phi_l = [m-l] q^-1 (x q^n - y q^{-m+2l-2}) Phi_{l-1}.
inline bool lowering_phi_check(const TensorModule& M, std::int64_t l) {
    const std::int64_t m = M.left().highest_weight(), n = M.right().highest_weight();
    TensorElem lhs = M.apply(Gen::e0, phi_low(M, l));
    Scalar factor = q_int(m - l) * Scalar::q(-1) *
                    (M.left().parameter() * Scalar::q(n) -
                     M.right().parameter() * Scalar::q(-m + 2 * l - 2));
    return lhs == phi_low(M, l - 1).scaled(factor);
}

struct ThreeTermDecomposition {
    Scalar c_prev;  // coefficient of f^2 Omega_{l-1}
    Scalar c_same;  // coefficient of f Omega_l
    Scalar c_next;  // coefficient of Omega_{l+1}
    bool exact;     // the decomposition solves exactly
    bool c_prev_matches;  // c_prev agrees with its closed form
};

/// Decomposes e_0 Omega_l = c_prev f^2 Omega_{l-1} + c_same f Omega_l
/// + c_next Omega_{l+1} and verifies
/// c_prev = [n-l] q^-1 (x q^m - y q^{-n+2l-2}) / ([m+n-2l+1][m+n-2l+2]).
inline ThreeTermDecomposition decompose_e0_omega(const TensorModule& M, std::int64_t l) {
    const std::int64_t m = M.left().highest_weight(), n = M.right().highest_weight();
    if (l < 1 || l + 1 > std::min(m, n))
        throw std::invalid_argument("decompose_e0_omega: need 1 <= l <= min(m,n)-1");

    // The third direction must be a nonzero extremal vector; its scale is
    // absorbed into c_next, and the default bound degenerates at l+1 = n.
    TensorElem rhs0 = M.apply_power(SlGen::f, 2, omega(M, l - 1));
    TensorElem rhs1 = M.apply(SlGen::f, omega(M, l));
    TensorElem rhs2 = omega(M, l + 1, ProductBound::FromOne);
    TensorElem target = M.apply(Gen::e0, omega(M, l));

    const std::vector<TensorIdx> space = weight_space(M, l + 1);
    std::vector<const TensorElem*> gens{&rhs0, &rhs1, &rhs2};
    Matrix<Scalar> a(space.size(), std::vector<Scalar>(3, Scalar(0)));
    std::vector<Scalar> b(space.size(), Scalar(0));
    for (std::size_t r = 0; r < space.size(); ++r) {
        for (std::size_t c = 0; c < 3; ++c) a[r][c] = gens[c]->coeff(space[r]);
        b[r] = target.coeff(space[r]);
    }
    auto sol = solve_linear(a, b);

    ThreeTermDecomposition d{Scalar(), Scalar(), Scalar(), false, false};
    if (!sol) return d;
    d.c_prev = (*sol)[0];
    d.c_same = (*sol)[1];
    d.c_next = (*sol)[2];
    d.exact = true;

    Scalar want = q_int(n - l) * Scalar::q(-1) *
                  (M.left().parameter() * Scalar::q(m) -
                   M.right().parameter() * Scalar::q(-n + 2 * l - 2)) /
                  (q_int(m + n - 2 * l + 1) * q_int(m + n - 2 * l + 2));
    d.c_prev_matches = d.c_prev == want;
    return d;
}

}  // namespace qaffine
