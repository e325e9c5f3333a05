#include <kacmod/evenaction.hpp>

#include <doctest.h>

#include <cmath>

using namespace kacmod;

namespace {

double single_coeff(const std::vector<Term>& terms) {
    REQUIRE(terms.size() == 1);
    return terms[0].coeff;
}

} // namespace

TEST_CASE("cartan eigenvalues") {
    const HighestWeight hw{2, 0, 1};
    const GZVector v = make_gzvector(hw, 0, 1.0); // m11=1, m12=2, m22=0, m31=1
    CHECK(cartan_eigenvalue(Gen::E11, v) == doctest::Approx(1.0));
    CHECK(cartan_eigenvalue(Gen::E22, v) == doctest::Approx(1.0)); // 2+0-1
    CHECK(cartan_eigenvalue(Gen::E33, v) == doctest::Approx(1.0));
    CHECK(cartan_eigenvalue(Gen::H1, v) == doctest::Approx(0.0));  // 2*1-2-0
    CHECK(cartan_eigenvalue(Gen::H2, v) == doctest::Approx(2.0));  // 2+0-1+1
    CHECK_THROWS_AS(cartan_eigenvalue(Gen::E12, v), RangeError);

    // floor-1 pattern picks up the shifted middle/bottom rows
    const GZVector w = make_gzvector(hw, 1, 2.0); // m12=2, m22=-1, m31=2
    CHECK(cartan_eigenvalue(Gen::E22, w) == doctest::Approx(-1.0)); // 2-1-2
    CHECK(cartan_eigenvalue(Gen::E33, w) == doctest::Approx(2.0));
}

TEST_CASE("raising and lowering on the even floor") {
    const QContext ctx(2.0);
    const HighestWeight hw{2, 0, 0}; // d = 3, l12 = 1, l22 = -2
    const GZVector mid = make_gzvector(hw, 0, 1.0);   // l11 = 0
    const GZVector top = make_gzvector(hw, 0, 2.0);   // l11 = 1
    const GZVector bot = make_gzvector(hw, 0, 0.0);   // l11 = -1

    // E12 |m11=1> = sqrt([l12-l11][l11-l22]) |m11=2> = sqrt([1][2]) = sqrt(2.5)
    const auto up = act_even(ctx, Gen::E12, mid);
    CHECK(single_coeff(up) == doctest::Approx(std::sqrt(2.5)).epsilon(1e-14));
    CHECK(up[0].vec.m11 == doctest::Approx(2.0));

    // E21 |m11=1> = sqrt([l12-l11+1][l11-l22-1]) |m11=0> = sqrt([2][1]) = sqrt(2.5)
    const auto down = act_even(ctx, Gen::E21, mid);
    CHECK(single_coeff(down) == doctest::Approx(std::sqrt(2.5)).epsilon(1e-14));
    CHECK(down[0].vec.m11 == doctest::Approx(0.0));

    // boundary vanishing
    CHECK(act_even(ctx, Gen::E12, top).empty());
    CHECK(act_even(ctx, Gen::E21, bot).empty());
}

TEST_CASE("sl2 commutator closes on a single pattern") {
    const QContext ctx(1.7);
    const HighestWeight hw{3, 0, 0.37};
    for (double m11 : {3.0, 2.0, 1.0, 0.0}) {
        const GZVector v = make_gzvector(hw, 0, m11);
        double ef = 0.0;
        double fe = 0.0;
        for (const auto& t : act_even(ctx, Gen::E21, v)) {
            for (const auto& u : act_even(ctx, Gen::E12, t.vec)) {
                REQUIRE(u.vec.m11 == doctest::Approx(m11));
                ef += t.coeff * u.coeff;
            }
        }
        for (const auto& t : act_even(ctx, Gen::E12, v)) {
            for (const auto& u : act_even(ctx, Gen::E21, t.vec)) {
                REQUIRE(u.vec.m11 == doctest::Approx(m11));
                fe += t.coeff * u.coeff;
            }
        }
        const double h1 = cartan_eigenvalue(Gen::H1, v);
        CHECK(ef - fe == doctest::Approx(qbracket(ctx, h1)).epsilon(1e-12));
    }
}

TEST_CASE("cartan action drops exact zeros") {
    const QContext ctx(2.0);
    const HighestWeight hw{1, 0, 0};
    const GZVector v = make_gzvector(hw, 0, 0.0); // E11 eigenvalue 0
    CHECK(act_even(ctx, Gen::E11, v).empty());
    CHECK(act_even(ctx, Gen::E22, v).size() == 1);
}

TEST_CASE("act_cartan_h matches weight arithmetic") {
    const QContext ctx(1.3);
    const HighestWeight hw{2, 1, -0.5};
    for (int k = 0; k < 4; ++k) {
        for (const auto& v : enumerate_basis(hw, k)) {
            const double h1 = cartan_eigenvalue(Gen::H1, v);
            const double h2 = cartan_eigenvalue(Gen::H2, v);
            const double e11 = cartan_eigenvalue(Gen::E11, v);
            const double e22 = cartan_eigenvalue(Gen::E22, v);
            const double e33 = cartan_eigenvalue(Gen::E33, v);
            CHECK(h1 == doctest::Approx(e11 - e22));
            CHECK(h2 == doctest::Approx(e22 + e33));
            const auto t1 = act_cartan_h(ctx, Gen::H1, v);
            const double got1 = t1.empty() ? 0.0 : single_coeff(t1);
            CHECK(got1 == doctest::Approx(h1));
            const auto t2 = act_cartan_h(ctx, Gen::H2, v);
            const double got2 = t2.empty() ? 0.0 : single_coeff(t2);
            CHECK(got2 == doctest::Approx(h2));
        }
    }
}
