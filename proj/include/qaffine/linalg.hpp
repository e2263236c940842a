#pragma once

/*
 * Exact dense linear algebra over the scalar field and over the rationals:
 * Gaussian elimination for rank and kernels, and two independent determinant
 * routes (fraction-free Bareiss elimination and cofactor expansion).
 */

#include "scalar.hpp"

#include <vector>

namespace qaffine {

template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Scalar> {
    static bool is_zero(const Scalar& s) { return s.is_zero(); }
    static Scalar one() { return Scalar(1); }
};

template <>
struct FieldTraits<mpq_class> {
    static bool is_zero(const mpq_class& s) { return s == 0; }
    static mpq_class one() { return 1; }
};

template <class F>
using Matrix = std::vector<std::vector<F>>;

/// Reduces rows in place to echelon form; returns the rank. Column order is
/// left to right, so the result is deterministic.
template <class F>
std::size_t row_reduce(Matrix<F>& a) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && FieldTraits<F>::is_zero(a[pivot][col])) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        const F inv = FieldTraits<F>::one() / a[rank][col];
        for (std::size_t c = col; c < cols; ++c) a[rank][c] = a[rank][c] * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || FieldTraits<F>::is_zero(a[r][col])) continue;
            const F factor = a[r][col];
            for (std::size_t c = col; c < cols; ++c)
                a[r][c] = a[r][c] - factor * a[rank][c];
        }
        ++rank;
    }
    return rank;
}

template <class F>
std::size_t rank(Matrix<F> a) {
    return row_reduce(a);
}

/// Basis of the right kernel {v : a v = 0}, from the reduced echelon form.
template <class F>
std::vector<std::vector<F>> kernel_basis(Matrix<F> a) {
    if (a.empty()) return {};
    const std::size_t cols = a[0].size();
    std::size_t r = row_reduce(a);
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t row = 0; row < r; ++row) {
        std::size_t c = 0;
        while (c < cols && FieldTraits<F>::is_zero(a[row][c])) ++c;
        pivot_col.push_back(c);
        is_pivot[c] = true;
    }
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(cols, F(0));
        v[free] = FieldTraits<F>::one();
        for (std::size_t row = 0; row < r; ++row)
            v[pivot_col[row]] = F(0) - a[row][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solves a v = b exactly. Returns the unique solution with free variables
/// set to zero, or nothing when the system is inconsistent.
template <class F>
std::optional<std::vector<F>> solve_linear(const Matrix<F>& a, const std::vector<F>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("solve_linear: shape mismatch");
    if (a.empty()) return std::vector<F>{};
    const std::size_t rows = a.size(), cols = a[0].size();
    Matrix<F> aug = a;
    for (std::size_t r = 0; r < rows; ++r) aug[r].push_back(b[r]);
    std::size_t rk = row_reduce(aug);
    std::vector<F> v(cols, F(0));
    for (std::size_t row = 0; row < rk; ++row) {
        std::size_t c = 0;
        while (c < cols && FieldTraits<F>::is_zero(aug[row][c])) ++c;
        if (c == cols) return std::nullopt;  // pivot in the constant column
        v[c] = aug[row][cols];
    }
    return v;
}

/// Determinant by cofactor expansion along the first row. Exponential; used
/// as an independent oracle for small matrices.
template <class R>
R det_cofactor(const Matrix<R>& a) {
    const std::size_t n = a.size();
    if (n == 0) return R(1);
    if (n == 1) return a[0][0];
    R total(0);
    for (std::size_t j = 0; j < n; ++j) {
        Matrix<R> minor(n - 1, std::vector<R>(n - 1, R(0)));
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = a[r][c];
            }
        }
        R term = a[0][j] * det_cofactor(minor);
        if (j % 2 == 1) term = R(0) - term;
        total = total + term;
    }
    return total;
}

/// Fraction-free determinant of a polynomial matrix: Bareiss elimination,
/// every division exact by construction.
inline LaurentPoly det_bareiss(Matrix<LaurentPoly> a) {
    const std::size_t n = a.size();
    if (n == 0) return LaurentPoly(1);
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
    LaurentPoly prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t s = k + 1;
            while (s < n && a[s][k].is_zero()) ++s;
            if (s == n) return {};
            std::swap(a[k], a[s]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev);
        prev = a[k][k];
    }
    LaurentPoly d = a[n - 1][n - 1];
    return negate ? -d : d;
}

/// Determinant of a Scalar matrix: rows are cleared to polynomials first and
/// the accumulated denominator divided back out at the end.
inline Scalar det_scalar(const Matrix<Scalar>& a) {
    const std::size_t n = a.size();
    if (n == 0) return Scalar(1);
    Matrix<LaurentPoly> cleared(n, std::vector<LaurentPoly>(n));
    Scalar denominator(1);
    for (std::size_t r = 0; r < n; ++r) {
        LaurentPoly common(1);
        for (const auto& entry : a[r]) {
            if (entry.is_zero()) continue;
            const LaurentPoly& d = entry.den();
            common = common * d.exact_div(gcd(common, d));
        }
        for (std::size_t c = 0; c < n; ++c) {
            const Scalar& s = a[r][c];
            cleared[r][c] = s.is_zero() ? LaurentPoly()
                                        : s.num() * common.exact_div(s.den());
        }
        denominator *= Scalar(common);
    }
    return Scalar(det_bareiss(std::move(cleared))) / denominator;
}

}  // namespace qaffine
