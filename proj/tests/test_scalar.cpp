#include <catch2/catch_amalgamated.hpp>

#include <qaffine/scalar.hpp>

#include <random>

using namespace qaffine;

namespace {

LaurentPoly random_poly(std::mt19937& rng, int max_terms, int max_exp) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expd(-max_exp, max_exp);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    LaurentPoly p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i)
        p.add_term({expd(rng), expd(rng), expd(rng)}, mpq_class(num(rng), den(rng)));
    return p;
}

Scalar random_scalar(std::mt19937& rng) {
    LaurentPoly n = random_poly(rng, 4, 3);
    LaurentPoly d;
    while (d.is_zero()) d = random_poly(rng, 2, 2);
    return Scalar(n, d);
}

}  // namespace

TEST_CASE("canonical form invariants") {
    LaurentPoly q = LaurentPoly::q(), x = LaurentPoly::x(), y = LaurentPoly::y();

    SECTION("denominator is a monic true polynomial") {
        Scalar s(x, (q + q.pow(-1)).scaled(3));
        // den 3q + 3q^-1 -> shift q, scale: q^2 + 1; the shift and scale move into num.
        CHECK(s.den() == q.pow(2) + LaurentPoly(1));
        CHECK(s.num() == x * q.scaled(mpq_class(1, 3)));
        CHECK(s.den().leading().second == 1);
        CHECK(s.den().min_exponent(Var::q) == 0);
    }

    SECTION("common factors cancel") {
        Scalar s((q.pow(2) - q.pow(-2)) * x, (q + q.pow(-1)) * y);
        CHECK(s == Scalar((q - q.pow(-1)) * x, y));
        CHECK(s.is_polynomial());  // y is a unit, so it folds into num
        CHECK(s.num() == (q - q.pow(-1)) * x * y.pow(-1));
    }

    SECTION("zero is 0/1") {
        Scalar s(LaurentPoly(), q + LaurentPoly(1));
        CHECK(s.is_zero());
        CHECK(s.den().is_one());
        CHECK(s == Scalar());
    }

    SECTION("zero denominator throws") {
        CHECK_THROWS_AS(Scalar(x, LaurentPoly()), std::domain_error);
    }
}

TEST_CASE("q-integers") {
    LaurentPoly q = LaurentPoly::q();
    CHECK(q_int(0).is_zero());
    CHECK(q_int(1) == Scalar(1));
    CHECK(q_int(2) == Scalar(q + q.pow(-1)));
    CHECK(q_int(3) == Scalar(q.pow(2) + LaurentPoly(1) + q.pow(-2)));
    CHECK(q_int(-3) == -q_int(3));
    // [a+b] = q^b [a] + q^-a [b]
    for (std::int64_t a = -4; a <= 4; ++a)
        for (std::int64_t b = -4; b <= 4; ++b)
            CHECK(q_int(a + b) ==
                  Scalar(q.pow(b)) * q_int(a) + Scalar(q.pow(-a)) * q_int(b));
}

TEST_CASE("q-factorial oracle values") {
    LaurentPoly q = LaurentPoly::q();
    CHECK(q_factorial(0) == Scalar(1));
    CHECK(q_factorial(1) == Scalar(1));
    CHECK(q_factorial(2) == q_int(2));
    // [3]! = q^3 + 2q + 2q^-1 + q^-3
    CHECK(q_factorial(3) ==
          Scalar(q.pow(3) + q.scaled(2) + q.pow(-1).scaled(2) + q.pow(-3)));
    CHECK_THROWS_AS(q_factorial(-1), std::invalid_argument);
}

TEST_CASE("q-binomial oracle values and dual route") {
    LaurentPoly q = LaurentPoly::q();
    // [4 2] = q^4 + q^2 + 2 + q^-2 + q^-4
    CHECK(q_binomial(4, 2) ==
          Scalar(q.pow(4) + q.pow(2) + LaurentPoly(2) + q.pow(-2) + q.pow(-4)));
    CHECK(q_binomial(5, 0) == Scalar(1));
    CHECK(q_binomial(5, 5) == Scalar(1));

    // Dual route: the factorial quotient gives the same polynomial.
    for (std::int64_t r = 0; r <= 9; ++r)
        for (std::int64_t s = 0; s <= r; ++s)
            CHECK(q_binomial(r, s) == q_factorial(r) / (q_factorial(s) * q_factorial(r - s)));

    // Pascal recurrence with q-weights.
    for (std::int64_t r = 1; r <= 8; ++r)
        for (std::int64_t s = 1; s < r; ++s)
            CHECK(q_binomial(r, s) ==
                  Scalar(q.pow(s)) * q_binomial(r - 1, s) +
                      Scalar(q.pow(s - r)) * q_binomial(r - 1, s - 1));

    CHECK_THROWS_AS(q_binomial(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(q_binomial(3, -1), std::invalid_argument);
}

TEST_CASE("specialize and classical limit") {
    LaurentPoly q = LaurentPoly::q(), x = LaurentPoly::x(), y = LaurentPoly::y();

    Scalar s(x - y, q - q.pow(-1));
    CHECK(s.specialize(2, 5, 3) == mpq_class(2) / mpq_class(3, 2));
    CHECK_THROWS_AS(s.specialize(1, 5, 3), std::domain_error);
    CHECK_THROWS_AS(s.specialize(0, 5, 3), std::domain_error);
    CHECK_THROWS_AS(s.specialize(-1, 5, 3), std::domain_error);
    CHECK_THROWS_AS(s.specialize(2, 0, 3), std::domain_error);

    // [r] at q=1 degenerates to r.
    for (std::int64_t r = -6; r <= 6; ++r) CHECK(q_int(r).classical_limit() == r);
    // [r s] at q=1 degenerates to the ordinary binomial coefficient.
    CHECK(q_binomial(6, 3).classical_limit() == 20);

    Scalar pole(LaurentPoly(1), q - LaurentPoly(1));
    CHECK_THROWS_AS(pole.classical_limit(), std::domain_error);
}

TEST_CASE("canonical strings") {
    LaurentPoly q = LaurentPoly::q(), x = LaurentPoly::x(), y = LaurentPoly::y();

    CHECK(to_canonical_string(LaurentPoly()) == "0");
    CHECK(to_canonical_string(LaurentPoly(5)) == "5");
    CHECK(to_canonical_string(LaurentPoly(-5)) == "-5");
    CHECK(to_canonical_string(LaurentPoly(mpq_class(-3, 4))) == "-3/4");
    CHECK(to_canonical_string(q + q.pow(-1)) == "q^1 + q^-1");
    CHECK(to_canonical_string(-(x * q.pow(-2)) + y) == "-1*x^1*q^-2 + y^1");
    CHECK(to_canonical_string(x * y.pow(2).scaled(3) - LaurentPoly(7)) == "3*x^1*y^2 - 7");
    CHECK(to_canonical_string(q.pow(2) - q.scaled(mpq_class(1, 2))) == "q^2 - 1/2*q^1");
    CHECK(to_canonical_string(Scalar(x - y, q.pow(2) + LaurentPoly(1))) ==
          "(x^1 - y^1) / (q^2 + 1)");
    CHECK(to_canonical_string(q_int(2)) == "q^1 + q^-1");
}

TEST_CASE("parsing canonical strings") {
    LaurentPoly q = LaurentPoly::q(), x = LaurentPoly::x(), y = LaurentPoly::y();

    CHECK(parse_polynomial("0").is_zero());
    CHECK(parse_polynomial("q^1 + q^-1") == q + q.pow(-1));
    CHECK(parse_polynomial("-1*x^1*q^-2 + y^1") == y - x * q.pow(-2));
    CHECK(parse_polynomial("5/2") == LaurentPoly(mpq_class(5, 2)));
    CHECK(parse_scalar("(x^1 - y^1) / (q^2 + 1)") == Scalar(x - y, q.pow(2) + LaurentPoly(1)));

    CHECK_THROWS_AS(parse_polynomial("q^"), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("q^1 +"), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("z^1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("1/0"), std::invalid_argument);
}

TEST_CASE("property: canonical string round-trip", "[property]") {
    std::mt19937 rng(424242);
    for (int i = 0; i < 1000; ++i) {
        Scalar s = random_scalar(rng);
        std::string text = to_canonical_string(s);
        Scalar back = parse_scalar(text);
        REQUIRE(back == s);
        REQUIRE(to_canonical_string(back) == text);
    }
}

TEST_CASE("property: field axioms", "[property]") {
    std::mt19937 rng(31337);
    for (int i = 0; i < 1000; ++i) {
        Scalar a = random_scalar(rng);
        Scalar b = random_scalar(rng);
        Scalar c = random_scalar(rng);

        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Scalar() == a);
        CHECK(a * Scalar(1) == a);
        CHECK(a - a == Scalar());
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == Scalar(1));
            CHECK(a / a == Scalar(1));
        }
    }
    CHECK_THROWS_AS(Scalar(1) / Scalar(), std::domain_error);
}

TEST_CASE("property: specialization is a ring homomorphism", "[property]") {
    std::mt19937 rng(777);
    const mpq_class q0(2), x0(3), y0(5);
    for (int i = 0; i < 200; ++i) {
        Scalar a = random_scalar(rng);
        Scalar b = random_scalar(rng);
        mpq_class av, bv;
        try {
            av = a.specialize(q0, x0, y0);
            bv = b.specialize(q0, x0, y0);
        } catch (const std::domain_error&) {
            continue;  // pole at the sample point
        }
        CHECK((a + b).specialize(q0, x0, y0) == av + bv);
        CHECK((a * b).specialize(q0, x0, y0) == av * bv);
    }
}
