#include <catch2/catch_amalgamated.hpp>

#include <qaffine/identities.hpp>

using namespace qaffine;

TEST_CASE("multinomial quotient divides exactly") {
    CHECK(q_multinomial_poly(3, 1, 0) == q_int_poly(3));
    CHECK(q_multinomial_poly(2, 1, 1) == LaurentPoly(1));
    // i = 1 takes the numerator down to [3]! = [2][3]
    CHECK(q_multinomial_poly(4, 2, 1) == q_int_poly(2) * q_int_poly(3));
}

TEST_CASE("alternating factorial sum collapses to a power of q") {
    SECTION("hand expansion at m = 2, l = 1") {
        // [2] - q^-1 = q + q^-1 - q^-1 = q
        LaurentPoly total = q_multinomial_poly(2, 1, 0) -
                            q_multinomial_poly(2, 1, 1) * LaurentPoly::q(-1);
        CHECK(total == LaurentPoly::q(1));
        CHECK(alternating_factorial_sum_check(2, 1));
    }

    SECTION("factorial and binomial routes, 1 <= l <= m <= 12") {
        for (std::int64_t m = 1; m <= 12; ++m)
            for (std::int64_t l = 1; l <= m; ++l) {
                CAPTURE(m, l);
                CHECK(alternating_factorial_sum_check(m, l));
                CHECK(alternating_binomial_sum_check(m, l));
            }
    }
}

TEST_CASE("classical corollary over the integers") {
    SECTION("full sweep m <= 30") {
        for (std::int64_t m = 1; m <= 30; ++m)
            for (std::int64_t l = 1; l <= m; ++l) {
                CAPTURE(m, l);
                CHECK(classical_corollary_check(m, l));
            }
    }

    SECTION("limit of each q-term matches its integer term, m <= 10") {
        for (std::int64_t m = 1; m <= 10; ++m)
            for (std::int64_t l = 1; l <= m; ++l) {
                CAPTURE(m, l);
                CHECK(classical_limit_agreement_check(m, l));
            }
    }
}

TEST_CASE("alternating binomial power sums vanish on the admissible grid") {
    SECTION("sweep l <= 12") {
        for (std::int64_t l = 1; l <= 12; ++l) {
            CAPTURE(l);
            CHECK(vanishing_sum_check_all(l));
        }
    }

    SECTION("exponents outside the grid do not vanish") {
        CHECK_FALSE(vanishing_sum_check(2, 2));
        CHECK_FALSE(vanishing_sum_check(3, 4));
        CHECK_FALSE(vanishing_sum_check(4, 0));  // admissible k are odd for even l
    }
}

TEST_CASE("two-variable sum factors into a product of linear terms") {
    SECTION("hand expansion at l = 2, s = 0") {
        LaurentPoly lhs = LaurentPoly::y(2) -
                          q_int_poly(2) * LaurentPoly::x() * LaurentPoly::y() *
                              LaurentPoly::q(1) +
                          LaurentPoly::x(2) * LaurentPoly::q(2);
        LaurentPoly rhs = (LaurentPoly::y() - LaurentPoly::x()) *
                          (LaurentPoly::y() - LaurentPoly::x() * LaurentPoly::q(2));
        CHECK(lhs == rhs);
        CHECK(alternating_product_form_check(2, 0));
    }

    SECTION("sweep l <= 8, |s| <= 10") {
        for (std::int64_t l = 1; l <= 8; ++l)
            for (std::int64_t s = -10; s <= 10; ++s) {
                CAPTURE(l, s);
                CHECK(alternating_product_form_check(l, s));
            }
    }
}
