#include <kacmod/radical.hpp>

#include <doctest.h>

#include <cmath>

using namespace kacmod;

TEST_CASE("rational canonical form") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-2, -4) == Rat(1, 2));
    CHECK(Rat(2, -4) == Rat(-1, 2));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(5, 1).is_integer());
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
    CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
    CHECK(Rat(2, 3) / Rat(4, 3) == Rat(1, 2));
    CHECK(-Rat(1, 2) == Rat(-1, 2));
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
    CHECK(Rat(1, 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
}

TEST_CASE("rational overflow detection") {
    const Rat big(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(big * Rat(8), std::overflow_error);
    CHECK_NOTHROW(big + big); // still fits after reduction? (2*(2^62-1) < 2^63) yes
}

TEST_CASE("rational from double") {
    CHECK(Rat::from_double(0.5) == Rat(1, 2));
    CHECK(Rat::from_double(0.37) == Rat(37, 100));
    CHECK(Rat::from_double(-2.5) == Rat(-5, 2));
    CHECK(Rat::from_double(3.0) == Rat(3));
    CHECK(Rat::from_double(0.0) == Rat(0));
    CHECK(Rat::from_double(-1.0 / 3.0) == Rat(-1, 3));
    // no fraction with a modest denominator reproduces an irrational double:
    // the first exactly-reproducing convergent of sqrt(2) needs den ~ 6e7
    CHECK_THROWS_AS(Rat::from_double(std::sqrt(2.0)), std::domain_error);
    CHECK_THROWS_AS(Rat::from_double(std::sqrt(2.0), 1000), std::domain_error);
    // with an enormous cap a reproducing convergent does exist
    CHECK_NOTHROW(Rat::from_double(std::sqrt(2.0), 1000000000000LL));
}

TEST_CASE("radical canonicalization") {
    CHECK(Radical::sqrt_of_int(8) == Radical(Rat(2)) * Radical::sqrt_of_int(2));
    CHECK(Radical::sqrt_of_int(36) == Radical(Rat(6)));
    CHECK(Radical::sqrt_of_int(1) == Radical(Rat(1)));
    CHECK(Radical::sqrt_of_int(0).is_zero());
    CHECK(Radical::sqrt_of_int(12) == Radical(Rat(2)) * Radical::sqrt_of_int(3));
    CHECK_THROWS_AS(Radical::sqrt_of_int(-1), std::domain_error);
}

TEST_CASE("radical ratio roots") {
    // sqrt(1/2) = sqrt(2)/2
    CHECK(Radical::sqrt_of_ratio(1, 2) ==
          Radical(Rat(1, 2)) * Radical::sqrt_of_int(2));
    // sqrt(4/9) = 2/3
    CHECK(Radical::sqrt_of_ratio(4, 9) == Radical(Rat(2, 3)));
    // sqrt(2/4) reduces to sqrt(1/2) first
    CHECK(Radical::sqrt_of_ratio(2, 4) == Radical::sqrt_of_ratio(1, 2));
    CHECK(Radical::sqrt_of_ratio(0, 5).is_zero());
}

TEST_CASE("radical arithmetic") {
    const Radical r2 = Radical::sqrt_of_int(2);
    const Radical r3 = Radical::sqrt_of_int(3);
    CHECK(r2 * r2 == Radical(Rat(2)));
    CHECK(r2 * r3 == Radical::sqrt_of_int(6));
    CHECK((r2 + r3) * (r2 - r3) == Radical(Rat(-1)));
    CHECK((r2 + r3) - r3 == r2);
    CHECK((r2 - r2).is_zero());
    const Radical one_plus = Radical(Rat(1)) + r2;
    CHECK(one_plus * (-Radical(Rat(1)) + r2) == Radical(Rat(1)));
}

TEST_CASE("radical inverse") {
    const Radical r2 = Radical::sqrt_of_int(2);
    CHECK(r2.inverse() == Radical(Rat(1, 2)) * r2);
    CHECK(r2 * r2.inverse() == Radical(Rat(1)));
    const Radical two_terms = Radical(Rat(1)) + r2;
    CHECK(two_terms * two_terms.inverse() == Radical(Rat(1)));
    const Radical three_terms = Radical(Rat(1)) + r2 + Radical::sqrt_of_int(3);
    CHECK_THROWS_AS(three_terms.inverse(), std::domain_error);
    CHECK_THROWS_AS(Radical().inverse(), std::domain_error);
}

TEST_CASE("radical double conversion") {
    const Radical v = Radical(Rat(1, 2)) + Radical(Rat(3)) * Radical::sqrt_of_int(2);
    CHECK(v.to_double() == doctest::Approx(0.5 + 3.0 * std::sqrt(2.0)).epsilon(1e-15));
}
