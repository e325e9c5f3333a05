#include <kacmod/typicality.hpp>

#include <doctest.h>

#include <cmath>

using namespace kacmod;

TEST_CASE("classification frozen values") {
    const Classification t = classify({1, 0, 1});
    CHECK(t.kind == Classification::Kind::typical);
    CHECK(t.c1 == doctest::Approx(3.0));
    CHECK(t.c2 == doctest::Approx(1.0));

    const Classification c1 = classify({1, 0, -2});
    CHECK(c1.kind == Classification::Kind::class1);
    CHECK(c1.c1 == doctest::Approx(0.0));
    CHECK(c1.c2 == doctest::Approx(-2.0));

    const Classification c2 = classify({1, 0, 0});
    CHECK(c2.kind == Classification::Kind::class2);
    CHECK(c2.c1 == doctest::Approx(2.0));
    CHECK(c2.c2 == doctest::Approx(0.0));

    CHECK(std::string(kind_name(t.kind)) == "typical");
    CHECK(std::string(kind_name(c1.kind)) == "class1");
    CHECK(std::string(kind_name(c2.kind)) == "class2");

    // near-zero indicators snap to the degenerate class
    CHECK(classify({1, 0, 1e-13}).kind == Classification::Kind::class2);
    CHECK(classify({1, 0, 1e-6}).kind == Classification::Kind::typical);
}

TEST_CASE("invariant floors") {
    // class 1 keeps floors 2 and 3 invariant: widths (d-1) + d = 2*2 - 1 = 3
    CHECK(invariant_indices({1, 0, -2}).size() == 3);
    // class 2 keeps floors 1 and 3: widths (d+1) + d = 2*2 + 1 = 5
    CHECK(invariant_indices({1, 0, 0}).size() == 5);
    CHECK_THROWS_AS(invariant_indices({1, 0, 1}), NotNontypicalError);

    // positions are floor offsets in module order
    const auto idx2 = invariant_indices({1, 0, 0});
    // floor 1 occupies positions 2..4, floor 3 positions 6..7
    CHECK(idx2 == std::vector<std::size_t>{2, 3, 4, 6, 7});
}

TEST_CASE("invariant subspace is verified against the built module") {
    const QContext ctx(1.7);
    const ModuleRep rep = build_module(ctx, {1, 0, 0});
    const auto sub = invariant_subspace(ctx, rep);
    CHECK(sub.size() == 5);
    for (const auto& v : sub) CHECK((v.k == 1 || v.k == 3));

    const ModuleRep rep1 = build_module(ctx, {1, 0, -2});
    const auto sub1 = invariant_subspace(ctx, rep1);
    CHECK(sub1.size() == 3);
    for (const auto& v : sub1) CHECK((v.k == 2 || v.k == 3));
}

TEST_CASE("factor module dimensions") {
    const QContext ctx(1.7);
    CHECK(factor_module(ctx, {1, 0, 0}).dim() == 3);   // 2d - 1, d = 2
    CHECK(factor_module(ctx, {1, 0, -2}).dim() == 5);  // 2d + 1, d = 2
    CHECK(factor_module(ctx, {0, 0, 0}).dim() == 1);   // 2d - 1, d = 1
    CHECK_THROWS_AS(factor_module(ctx, {1, 0, 1}), NotNontypicalError);
}

TEST_CASE("three-dimensional factor matches the defining action") {
    // hw = (1,0,0) at q = 2: the factor is spanned by the floor-0 pair and the
    // floor-2 singleton; frozen matrix entries computed by hand.
    const QContext ctx(2.0);
    const ModuleRep f = factor_module(ctx, {1, 0, 0});
    REQUIRE(f.dim() == 3);
    // basis order: (k=0, m11=1), (k=0, m11=0), (k=2, m11=0)
    CHECK(f.basis[0].k == 0);
    CHECK(f.basis[1].k == 0);
    CHECK(f.basis[2].k == 2);
    CHECK(f.parity == std::vector<int>{0, 0, 1});

    const auto& e12 = f.at(Gen::E12);
    CHECK(e12(0, 1) == doctest::Approx(1.0));
    const auto& e21 = f.at(Gen::E21);
    CHECK(e21(1, 0) == doctest::Approx(1.0));
    const auto& e23 = f.at(Gen::E23);
    CHECK(e23(1, 2) == doctest::Approx(2.5));
    const auto& e32 = f.at(Gen::E32);
    CHECK(e32(2, 1) == doctest::Approx(0.4));
    // diagonals
    const auto& e11 = f.at(Gen::E11);
    CHECK(e11(0, 0) == doctest::Approx(1.0));
    CHECK(e11(1, 1) == doctest::Approx(0.0));
    CHECK(e11(2, 2) == doctest::Approx(0.0));
    const auto& e33 = f.at(Gen::E33);
    CHECK(e33(2, 2) == doctest::Approx(1.0));
}

TEST_CASE("irreducibility oracle") {
    const QContext ctx(1.7);

    // typical modules act irreducibly
    CHECK(irreducibility_oracle(ctx, build_module(ctx, {1, 0, 1})));
    CHECK(irreducibility_oracle(ctx, build_module(ctx, {0, 0, 0.37})));

    // nontypical full modules do not
    CHECK_FALSE(irreducibility_oracle(ctx, build_module(ctx, {1, 0, 0})));
    CHECK_FALSE(irreducibility_oracle(ctx, build_module(ctx, {1, 0, -2})));

    // their factors do
    CHECK(irreducibility_oracle(ctx, factor_module(ctx, {1, 0, 0})));
    CHECK(irreducibility_oracle(ctx, factor_module(ctx, {1, 0, -2})));
}

TEST_CASE("closed forms with the vanishing indicator eliminated") {
    const QContext ctx(1.7);
    CHECK(closed_form_deviation(ctx, {1, 0, 0}) < 1e-12);
    CHECK(closed_form_deviation(ctx, {1, 0, -2}) < 1e-12);
    CHECK(closed_form_deviation(ctx, {3, 0, -4}) < 1e-12);
    CHECK(closed_form_deviation(ctx, {3, 1, -1}) < 1e-12);
    CHECK(closed_form_deviation(ctx, {0, 0, 0}) < 1e-12);
    // nonunit normalization constants flow through both routes identically
    CHECK(closed_form_deviation(ctx, {2, 0, -3}, {2.0, -1.0, 0.5}) < 1e-12);
    CHECK_THROWS_AS(closed_form_deviation(ctx, {1, 0, 1}), NotNontypicalError);
}
