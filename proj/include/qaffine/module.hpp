#pragma once

/*
 * Finite-dimensional representations used throughout: the (m+1)-dimensional
 * module V_m pulled back along the evaluation map at a parameter z, and the
 * tensor product V_m(x) (x) V_n(y) with the affine action through the
 * coproduct. All coefficients are exact Scalars; the deformation parameter q
 * stays symbolic.
 */

#include "scalar.hpp"

#include <array>
#include <functional>
#include <map>
#include <vector>

namespace qaffine {

/// Generators of the quantum affine algebra.
enum class Gen { e0, e1, f0, f1, K0, K0inv, K1, K1inv };

/// Generators of the finite quantum algebra.
enum class SlGen { e, f, K, Kinv };

inline const char* to_string(Gen g) {
    switch (g) {
        case Gen::e0: return "e0";
        case Gen::e1: return "e1";
        case Gen::f0: return "f0";
        case Gen::f1: return "f1";
        case Gen::K0: return "K0";
        case Gen::K0inv: return "K0^-1";
        case Gen::K1: return "K1";
        case Gen::K1inv: return "K1^-1";
    }
    return "?";
}

/// Sparse vector with exact coefficients; zero coefficients are never stored.
template <class Key>
class Vec {
public:
    using Terms = std::map<Key, Scalar>;

    Vec() = default;

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add(const Key& k, const Scalar& s) {
        if (s.is_zero()) return;
        auto [it, inserted] = terms_.emplace(k, s);
        if (!inserted) {
            it->second += s;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const Scalar& coeff(const Key& k) const {
        static const Scalar zero;
        auto it = terms_.find(k);
        return it == terms_.end() ? zero : it->second;
    }

    Vec& operator+=(const Vec& o) {
        for (const auto& [k, s] : o.terms_) add(k, s);
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (const auto& [k, s] : o.terms_) add(k, -s);
        return *this;
    }
    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    Vec operator-() const {
        Vec r;
        for (const auto& [k, s] : terms_) r.terms_.emplace(k, -s);
        return r;
    }

    Vec scaled(const Scalar& c) const {
        Vec r;
        if (c.is_zero()) return r;
        for (const auto& [k, s] : terms_) {
            Scalar cs = s * c;
            if (!cs.is_zero()) r.terms_.emplace(k, cs);
        }
        return r;
    }

    friend bool operator==(const Vec& a, const Vec& b) { return a.terms_ == b.terms_; }

    /// True when a == c * b for some scalar c; a zero a is proportional to
    /// anything, a zero b only to zero.
    static bool proportional(const Vec& a, const Vec& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero();
        if (a.terms_.size() != b.terms_.size()) return false;
        const auto& [k0, c0] = *a.terms_.begin();
        const Scalar& b0 = b.coeff(k0);
        if (b0.is_zero()) return false;
        return a == b.scaled(c0 / b0);
    }

private:
    Terms terms_;
};

using SingleElem = Vec<std::int64_t>;
using TensorIdx = std::pair<std::int64_t, std::int64_t>;
using TensorElem = Vec<TensorIdx>;

/// V_m(z): the irreducible (m+1)-dimensional module with basis v_0..v_m,
/// pulled back along the evaluation map at z.
class EvaluationModule {
public:
    EvaluationModule(std::int64_t m, Scalar z) : m_(m), z_(std::move(z)) {
        if (m < 0) throw std::invalid_argument("module dimension must be nonnegative");
        if (z_.is_zero()) throw std::invalid_argument("evaluation parameter must be nonzero");
    }

    std::int64_t highest_weight() const { return m_; }
    std::int64_t dim() const { return m_ + 1; }
    const Scalar& parameter() const { return z_; }

    SingleElem basis(std::int64_t i) const {
        require_index(i);
        SingleElem v;
        v.add(i, Scalar(1));
        return v;
    }

    /// K v_i = q^{m-2i} v_i, f v_i = [i+1] v_{i+1}, e v_i = [m+1-i] v_{i-1},
    /// with v_{-1} = v_{m+1} = 0.
    SingleElem apply(SlGen g, const SingleElem& v) const {
        SingleElem out;
        for (const auto& [i, c] : v.terms()) {
            require_index(i);
            switch (g) {
                case SlGen::e:
                    if (i >= 1) out.add(i - 1, c * q_int(m_ + 1 - i));
                    break;
                case SlGen::f:
                    if (i + 1 <= m_) out.add(i + 1, c * q_int(i + 1));
                    break;
                case SlGen::K:
                    out.add(i, c * Scalar(LaurentPoly::q(m_ - 2 * i)));
                    break;
                case SlGen::Kinv:
                    out.add(i, c * Scalar(LaurentPoly::q(2 * i - m_)));
                    break;
            }
        }
        return out;
    }

    /// Affine action through the evaluation map:
    /// e0 -> q^-1 z f, e1 -> e, f0 -> q z^-1 e, f1 -> f, K0 -> K^-1, K1 -> K.
    SingleElem apply(Gen g, const SingleElem& v) const {
        auto [slg, mult] = evaluate_generator(g);
        SingleElem out = apply(slg, v);
        return mult ? out.scaled(*mult) : out;
    }

private:
    void require_index(std::int64_t i) const {
        if (i < 0 || i > m_) throw std::out_of_range("basis index outside 0..m");
    }

    std::pair<SlGen, std::optional<Scalar>> evaluate_generator(Gen g) const {
        switch (g) {
            case Gen::e0: return {SlGen::f, Scalar::q(-1) * z_};
            case Gen::e1: return {SlGen::e, std::nullopt};
            case Gen::f0: return {SlGen::e, Scalar::q(1) * z_.inverse()};
            case Gen::f1: return {SlGen::f, std::nullopt};
            case Gen::K0: return {SlGen::Kinv, std::nullopt};
            case Gen::K0inv: return {SlGen::K, std::nullopt};
            case Gen::K1: return {SlGen::K, std::nullopt};
            case Gen::K1inv: return {SlGen::Kinv, std::nullopt};
        }
        throw std::logic_error("unknown generator");
    }

    std::int64_t m_;
    Scalar z_;
};

/// V_m(x) (x) V_n(y) with the affine action g(v (x) w) = (ev_x (x) ev_y)(D g).
/// The diagonal finite-algebra action (e = e1, f = f1, K = K1) is also
/// exposed, together with one-leg actions used to test coproduct expansions.
class TensorModule {
public:
    TensorModule(std::int64_t m, std::int64_t n, Scalar xparam, Scalar yparam)
        : left_(m, std::move(xparam)), right_(n, std::move(yparam)) {}

    /// Symbolic module V_m(x) (x) V_n(y).
    static TensorModule symbolic(std::int64_t m, std::int64_t n) {
        return TensorModule(m, n, Scalar::x(), Scalar::y());
    }

    const EvaluationModule& left() const { return left_; }
    const EvaluationModule& right() const { return right_; }
    std::int64_t dim() const { return left_.dim() * right_.dim(); }

    TensorElem basis(std::int64_t i, std::int64_t j) const {
        TensorElem v;
        v.add({i, j}, Scalar(1));
        (void)left_.basis(i);
        (void)right_.basis(j);
        return v;
    }

    std::vector<TensorElem> all_basis() const {
        std::vector<TensorElem> out;
        for (std::int64_t i = 0; i <= left_.highest_weight(); ++i)
            for (std::int64_t j = 0; j <= right_.highest_weight(); ++j)
                out.push_back(basis(i, j));
        return out;
    }

    TensorElem apply_left(SlGen g, const TensorElem& v) const {
        TensorElem out;
        for (const auto& [ij, c] : v.terms()) {
            SingleElem lv = left_.apply(g, left_.basis(ij.first));
            for (const auto& [i2, lc] : lv.terms()) out.add({i2, ij.second}, c * lc);
        }
        return out;
    }

    TensorElem apply_right(SlGen g, const TensorElem& v) const {
        TensorElem out;
        for (const auto& [ij, c] : v.terms()) {
            SingleElem rv = right_.apply(g, right_.basis(ij.second));
            for (const auto& [j2, rc] : rv.terms()) out.add({ij.first, j2}, c * rc);
        }
        return out;
    }

    /// Affine generators through the coproduct:
    /// e_i: ev(e_i) (x) ev(K_i) + 1 (x) ev(e_i)
    /// f_i: ev(f_i) (x) 1 + ev(K_i^-1) (x) ev(f_i)
    /// K_i^{+-1}: ev(K_i^{+-1}) (x) ev(K_i^{+-1})
    TensorElem apply(Gen g, const TensorElem& v) const {
        TensorElem out;
        switch (g) {
            case Gen::e0:
            case Gen::e1: {
                Gen K = (g == Gen::e0) ? Gen::K0 : Gen::K1;
                out += leg_product(g, K, v);
                out += right_only(g, v);
                break;
            }
            case Gen::f0:
            case Gen::f1: {
                Gen Kinv = (g == Gen::f0) ? Gen::K0inv : Gen::K1inv;
                out += left_only(g, v);
                out += leg_product(Kinv, g, v);
                break;
            }
            default:
                out = leg_product(g, g, v);
        }
        return out;
    }

    /// Diagonal finite-algebra action; coincides with e1 / f1 / K1.
    TensorElem apply(SlGen g, const TensorElem& v) const {
        switch (g) {
            case SlGen::e: return apply(Gen::e1, v);
            case SlGen::f: return apply(Gen::f1, v);
            case SlGen::K: return apply(Gen::K1, v);
            case SlGen::Kinv: return apply(Gen::K1inv, v);
        }
        throw std::logic_error("unknown generator");
    }

    /// Action through the opposite coproduct (tensor legs swapped):
    /// e_i: ev(e_i) (x) 1 + ev(K_i) (x) ev(e_i)
    /// f_i: 1 (x) ev(f_i) + ev(f_i) (x) ev(K_i^-1)
    /// The raising ladders grown from the lowest weight vector live in this
    /// action; their degeneracy locus mirrors the lowering ladders' under
    /// q -> q^-1.
    TensorElem apply_op(Gen g, const TensorElem& v) const {
        TensorElem out;
        switch (g) {
            case Gen::e0:
            case Gen::e1: {
                Gen K = (g == Gen::e0) ? Gen::K0 : Gen::K1;
                out += left_only(g, v);
                out += leg_product(K, g, v);
                break;
            }
            case Gen::f0:
            case Gen::f1: {
                Gen Kinv = (g == Gen::f0) ? Gen::K0inv : Gen::K1inv;
                out += right_only(g, v);
                out += leg_product(g, Kinv, v);
                break;
            }
            default:
                out = leg_product(g, g, v);
        }
        return out;
    }

    TensorElem apply_op(SlGen g, const TensorElem& v) const {
        switch (g) {
            case SlGen::e: return apply_op(Gen::e1, v);
            case SlGen::f: return apply_op(Gen::f1, v);
            case SlGen::K: return apply_op(Gen::K1, v);
            case SlGen::Kinv: return apply_op(Gen::K1inv, v);
        }
        throw std::logic_error("unknown generator");
    }

    template <class G>
    TensorElem apply_op_power(G g, std::int64_t k, TensorElem v) const {
        for (std::int64_t s = 0; s < k && !v.is_zero(); ++s) v = apply_op(g, v);
        return v;
    }

    template <class G>
    TensorElem apply_word(const std::vector<G>& word, TensorElem v) const {
        for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply(*it, v);
        return v;
    }

    template <class G>
    TensorElem apply_power(G g, std::int64_t k, TensorElem v) const {
        for (std::int64_t s = 0; s < k && !v.is_zero(); ++s) v = apply(g, v);
        return v;
    }

private:
    TensorElem leg_product(Gen gl, Gen gr, const TensorElem& v) const {
        TensorElem out;
        for (const auto& [ij, c] : v.terms()) {
            SingleElem lv = left_.apply(gl, left_.basis(ij.first));
            SingleElem rv = right_.apply(gr, right_.basis(ij.second));
            for (const auto& [i2, lc] : lv.terms())
                for (const auto& [j2, rc] : rv.terms()) out.add({i2, j2}, c * lc * rc);
        }
        return out;
    }

    TensorElem left_only(Gen g, const TensorElem& v) const {
        TensorElem out;
        for (const auto& [ij, c] : v.terms()) {
            SingleElem lv = left_.apply(g, left_.basis(ij.first));
            for (const auto& [i2, lc] : lv.terms()) out.add({i2, ij.second}, c * lc);
        }
        return out;
    }

    TensorElem right_only(Gen g, const TensorElem& v) const {
        TensorElem out;
        for (const auto& [ij, c] : v.terms()) {
            SingleElem rv = right_.apply(g, right_.basis(ij.second));
            for (const auto& [j2, rc] : rv.terms()) out.add({ij.first, j2}, c * rc);
        }
        return out;
    }

    EvaluationModule left_;
    EvaluationModule right_;
};

// ---------------------------------------------------------------------------
// Defining relations, checked as operator identities on explicit elements.
// ---------------------------------------------------------------------------

struct RelationFailure {
    std::string relation;
    std::string element;
};

namespace detail {

template <class Module, class Elem>
Elem word(const Module& mod, std::initializer_list<Gen> gens, Elem v) {
    std::vector<Gen> w(gens);
    for (auto it = w.rbegin(); it != w.rend(); ++it) v = mod.apply(*it, v);
    return v;
}

}  // namespace detail

/// Checks every defining relation of the algebra on each supplied element.
/// Returns the list of violated (relation, element) pairs; empty means all
/// relations hold.
template <class Module, class Elem>
std::vector<RelationFailure> check_relations(const Module& mod, const std::vector<Elem>& elems,
                                             const std::function<std::string(const Elem&)>& describe) {
    using detail::word;
    std::vector<RelationFailure> failures;
    const Scalar q2(LaurentPoly::q(2)), qm2(LaurentPoly::q(-2));
    const Scalar denom = Scalar(LaurentPoly::q() - LaurentPoly::q(-1));
    const Scalar three = q_int(3);

    auto expect = [&](const std::string& name, const Elem& got, const Elem& want,
                      const Elem& at) {
        if (!(got == want)) failures.push_back({name, describe(at)});
    };

    const std::array<Gen, 2> K{Gen::K0, Gen::K1};
    const std::array<Gen, 2> Kinv{Gen::K0inv, Gen::K1inv};
    const std::array<Gen, 2> E{Gen::e0, Gen::e1};
    const std::array<Gen, 2> F{Gen::f0, Gen::f1};

    for (const Elem& v : elems) {
        for (int i = 0; i < 2; ++i) {
            expect("K K^-1 = 1", word(mod, {K[i], Kinv[i]}, v), v, v);
            expect("K^-1 K = 1", word(mod, {Kinv[i], K[i]}, v), v, v);
        }
        expect("K0 K1 = K1 K0", word(mod, {K[0], K[1]}, v), word(mod, {K[1], K[0]}, v), v);

        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                Scalar ce = (i == j) ? q2 : qm2;
                Scalar cf = (i == j) ? qm2 : q2;
                expect("K e K^-1 = q^{+-2} e", word(mod, {K[i], E[j], Kinv[i]}, v),
                       mod.apply(E[j], v).scaled(ce), v);
                expect("K f K^-1 = q^{-+2} f", word(mod, {K[i], F[j], Kinv[i]}, v),
                       mod.apply(F[j], v).scaled(cf), v);
            }

        for (int i = 0; i < 2; ++i) {
            Elem lhs = word(mod, {E[i], F[i]}, v) - word(mod, {F[i], E[i]}, v);
            Elem rhs = (mod.apply(K[i], v) - mod.apply(Kinv[i], v)).scaled(denom.inverse());
            expect("[e_i, f_i] = (K_i - K_i^-1)/(q - q^-1)", lhs, rhs, v);
        }
        expect("[e0, f1] = 0", word(mod, {E[0], F[1]}, v), word(mod, {F[1], E[0]}, v), v);
        expect("[e1, f0] = 0", word(mod, {E[1], F[0]}, v), word(mod, {F[0], E[1]}, v), v);

        for (int i = 0; i < 2; ++i) {
            int j = 1 - i;
            Elem s = word(mod, {E[i], E[i], E[i], E[j]}, v) -
                     word(mod, {E[i], E[i], E[j], E[i]}, v).scaled(three) +
                     word(mod, {E[i], E[j], E[i], E[i]}, v).scaled(three) -
                     word(mod, {E[j], E[i], E[i], E[i]}, v);
            if (!s.is_zero()) failures.push_back({"e Serre relation", describe(v)});
            Elem t = word(mod, {F[i], F[i], F[i], F[j]}, v) -
                     word(mod, {F[i], F[i], F[j], F[i]}, v).scaled(three) +
                     word(mod, {F[i], F[j], F[i], F[i]}, v).scaled(three) -
                     word(mod, {F[j], F[i], F[i], F[i]}, v);
            if (!t.is_zero()) failures.push_back({"f Serre relation", describe(v)});
        }
    }
    return failures;
}

/// Convenience wrapper checking the relations on every basis vector of a
/// tensor module.
inline std::vector<RelationFailure> check_relations(const TensorModule& mod) {
    auto describe = [](const TensorElem& v) {
        if (v.size() != 1) return std::string("element");
        auto [i, j] = v.terms().begin()->first;
        return "v" + std::to_string(i) + "*w" + std::to_string(j);
    };
    return check_relations<TensorModule, TensorElem>(mod, mod.all_basis(), describe);
}

inline std::vector<RelationFailure> check_relations(const EvaluationModule& mod) {
    std::vector<SingleElem> elems;
    for (std::int64_t i = 0; i <= mod.highest_weight(); ++i) elems.push_back(mod.basis(i));
    auto describe = [](const SingleElem& v) {
        if (v.size() != 1) return std::string("element");
        return "v" + std::to_string(v.terms().begin()->first);
    };
    return check_relations<EvaluationModule, SingleElem>(mod, elems, describe);
}

/// Canonical text form of a tensor element, deterministic term order.
inline std::string to_canonical_string(const TensorElem& v) {
    if (v.is_zero()) return "0";
    std::string out;
    for (const auto& [ij, c] : v.terms()) {
        if (!out.empty()) out += " + ";
        out += "(" + to_canonical_string(c) + ")*v" + std::to_string(ij.first) + "*w" +
               std::to_string(ij.second);
    }
    return out;
}

}  // namespace qaffine
