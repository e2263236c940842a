#include <catch2/catch_amalgamated.hpp>

#include <qaffine/module.hpp>

using namespace qaffine;

namespace {

Scalar Q(std::int64_t e) { return Scalar(LaurentPoly::q(e)); }
Scalar X(std::int64_t e = 1) { return Scalar(LaurentPoly::x(e)); }
Scalar Y(std::int64_t e = 1) { return Scalar(LaurentPoly::y(e)); }

}  // namespace

TEST_CASE("finite algebra action on V_2") {
    EvaluationModule V(2, Scalar::x());

    CHECK(V.apply(SlGen::e, V.basis(0)).is_zero());
    CHECK(V.apply(SlGen::e, V.basis(1)) == V.basis(0).scaled(q_int(2)));
    CHECK(V.apply(SlGen::e, V.basis(2)) == V.basis(1));

    CHECK(V.apply(SlGen::f, V.basis(0)) == V.basis(1));
    CHECK(V.apply(SlGen::f, V.basis(1)) == V.basis(2).scaled(q_int(2)));
    CHECK(V.apply(SlGen::f, V.basis(2)).is_zero());

    CHECK(V.apply(SlGen::K, V.basis(0)) == V.basis(0).scaled(Q(2)));
    CHECK(V.apply(SlGen::K, V.basis(1)) == V.basis(1));
    CHECK(V.apply(SlGen::K, V.basis(2)) == V.basis(2).scaled(Q(-2)));
    CHECK(V.apply(SlGen::Kinv, V.basis(2)) == V.basis(2).scaled(Q(2)));
}

TEST_CASE("evaluation action on V_1(x)") {
    EvaluationModule V(1, Scalar::x());

    // e0 -> q^-1 x f, f0 -> q x^-1 e, K0 -> K^-1
    CHECK(V.apply(Gen::e0, V.basis(0)) == V.basis(1).scaled(Q(-1) * X()));
    CHECK(V.apply(Gen::e0, V.basis(1)).is_zero());
    CHECK(V.apply(Gen::f0, V.basis(1)) == V.basis(0).scaled(Q(1) * X(-1)));
    CHECK(V.apply(Gen::K0, V.basis(0)) == V.basis(0).scaled(Q(-1)));
    CHECK(V.apply(Gen::K0inv, V.basis(0)) == V.basis(0).scaled(Q(1)));
    CHECK(V.apply(Gen::e1, V.basis(1)) == V.basis(0));
    CHECK(V.apply(Gen::f1, V.basis(0)) == V.basis(1));
    CHECK(V.apply(Gen::K1, V.basis(1)) == V.basis(1).scaled(Q(-1)));
}

TEST_CASE("affine action on the tensor square of V_1") {
    TensorModule M = TensorModule::symbolic(1, 1);

    SECTION("e1 annihilates the highest vector and lowers the rest") {
        CHECK(M.apply(Gen::e1, M.basis(0, 0)).is_zero());
        CHECK(M.apply(Gen::e1, M.basis(1, 0)) == M.basis(0, 0).scaled(Q(1)));
        CHECK(M.apply(Gen::e1, M.basis(0, 1)) == M.basis(0, 0));
    }

    SECTION("e0 mixes the legs with the evaluation parameters") {
        TensorElem want;
        want.add({1, 0}, X() * Q(-2));
        want.add({0, 1}, Y() * Q(-1));
        CHECK(M.apply(Gen::e0, M.basis(0, 0)) == want);
    }

    SECTION("f1 through the coproduct") {
        TensorElem want;
        want.add({1, 0}, Scalar(1));
        want.add({0, 1}, Q(-1));
        CHECK(M.apply(Gen::f1, M.basis(0, 0)) == want);
        CHECK(M.apply(SlGen::f, M.basis(0, 0)) == want);
    }

    SECTION("K0 is a weight operator") {
        CHECK(M.apply(Gen::K0, M.basis(0, 0)) == M.basis(0, 0).scaled(Q(-2)));
        CHECK(M.apply(Gen::K0, M.basis(1, 1)) == M.basis(1, 1).scaled(Q(2)));
        CHECK(M.apply(Gen::K0, M.basis(1, 0)) == M.basis(1, 0));
        CHECK(M.apply(Gen::K1, M.basis(0, 0)) == M.basis(0, 0).scaled(Q(2)));
    }

    SECTION("one-leg actions") {
        CHECK(M.apply_left(SlGen::f, M.basis(0, 1)) == M.basis(1, 1));
        CHECK(M.apply_right(SlGen::Kinv, M.basis(0, 1)) == M.basis(0, 1).scaled(Q(1)));
    }
}

TEST_CASE("defining relations hold on evaluation modules") {
    for (std::int64_t m = 0; m <= 3; ++m) {
        EvaluationModule V(m, Scalar::x());
        CHECK(check_relations(V).empty());
    }
}

TEST_CASE("defining relations hold on symbolic tensor modules") {
    auto failures = check_relations(TensorModule::symbolic(1, 2));
    for (const auto& f : failures)
        INFO(f.relation << " fails at " << f.element);
    CHECK(failures.empty());
    CHECK(check_relations(TensorModule::symbolic(2, 1)).empty());
}

TEST_CASE("relations hold for specialized and coincident parameters") {
    TensorModule M(1, 1, Scalar::x(), Scalar::x() * Q(4));
    CHECK(check_relations(M).empty());
    TensorModule N(2, 2, Scalar(mpq_class(2)), Scalar(mpq_class(7, 3)));
    CHECK(check_relations(N).empty());
}

TEST_CASE("proportionality predicate") {
    TensorModule M = TensorModule::symbolic(1, 1);
    TensorElem a = M.apply(Gen::e0, M.basis(0, 0));
    CHECK(TensorElem::proportional(a, a.scaled(Q(5) * X(-2))));
    CHECK(TensorElem::proportional(TensorElem(), a));
    CHECK_FALSE(TensorElem::proportional(a, TensorElem()));
    CHECK_FALSE(TensorElem::proportional(a, M.basis(0, 0)));
    TensorElem b = a;
    b.add({0, 0}, Scalar(1));
    CHECK_FALSE(TensorElem::proportional(a, b));
}

TEST_CASE("word application composes right to left") {
    TensorModule M = TensorModule::symbolic(2, 1);
    TensorElem v = M.basis(2, 1);
    TensorElem ef = M.apply(Gen::e1, M.apply(Gen::f1, v));
    CHECK(M.apply_word<Gen>({Gen::e1, Gen::f1}, v) == ef);
    CHECK(M.apply_power(SlGen::f, 2, M.basis(0, 0)) ==
          M.apply(SlGen::f, M.apply(SlGen::f, M.basis(0, 0))));
}

TEST_CASE("element rendering") {
    TensorModule M = TensorModule::symbolic(1, 1);
    CHECK(to_canonical_string(TensorElem()) == "0");
    CHECK(to_canonical_string(M.basis(1, 0)) == "(1)*v1*w0");
    CHECK(to_canonical_string(M.apply(Gen::e0, M.basis(0, 0))) ==
          "(y^1*q^-1)*v0*w1 + (x^1*q^-2)*v1*w0");
}
