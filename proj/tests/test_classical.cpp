#include <kacmod/classical.hpp>
#include <kacmod/relations.hpp>
#include <kacmod/typicality.hpp>

#include <doctest.h>

#include <cmath>

using namespace kacmod;

TEST_CASE("classical module basic structure") {
    const ModuleRep rep = classical_module({1, 0, 0.37});
    CHECK(rep.dim() == 8);
    CHECK(rep.q == doctest::Approx(1.0));
    // classical sl(2) pair closes on plain H1
    const auto lhs = rep.at(Gen::E12) * rep.at(Gen::E21) -
                     rep.at(Gen::E21) * rep.at(Gen::E12);
    CHECK(max_abs(lhs - rep.at(Gen::H1)) < 1e-12);
    // classical odd pair closes on plain H2
    const auto odd = rep.at(Gen::E23) * rep.at(Gen::E32) +
                     rep.at(Gen::E32) * rep.at(Gen::E23);
    CHECK(max_abs(odd - rep.at(Gen::H2)) < 1e-12);
}

TEST_CASE("deformed module converges to the classical one") {
    for (const HighestWeight hw : {HighestWeight{1, 0, 0}, HighestWeight{2, 0, 0.37},
                                   HighestWeight{3, 1, -2.5}}) {
        CHECK(limit_compare(hw, 1.0 + 1e-8) < 1e-4);
        // closer q gives a smaller gap
        CHECK(limit_compare(hw, 1.0 + 1e-10) < limit_compare(hw, 1.0 + 1e-4));
    }
}

TEST_CASE("exact module equals the floating-point one") {
    const HighestWeight hw{2, 0, -3};
    const ClassicalModule ex = classical_module_exact(hw);
    const ModuleRep fl = classical_module(hw);
    REQUIRE(ex.dim() == fl.dim());
    for (Gen g : all_generators) {
        const auto& me = ex.at(g);
        const auto& mf = fl.at(g);
        for (std::size_t r = 0; r < ex.dim(); ++r)
            for (std::size_t c = 0; c < ex.dim(); ++c)
                CHECK(me(r, c).to_double() == doctest::Approx(mf(r, c)).epsilon(1e-12));
    }
}

TEST_CASE("exact construction rejects irrational labels") {
    CHECK_THROWS_AS(classical_module_exact({1, 0, std::sqrt(2.0)}),
                    std::domain_error);
    CHECK_NOTHROW(classical_module_exact({1, 0, 0.37}));
    CHECK_NOTHROW(classical_module_exact({1, 0, -2.5}));
}

TEST_CASE("supercommutator and graded jacobi") {
    const HighestWeight hw{1, 0, 0.5};
    const ClassicalModule m = classical_module_exact(hw);
    const auto& e23 = m.at(Gen::E23);
    const auto& e32 = m.at(Gen::E32);
    const auto& e12 = m.at(Gen::E12);

    // odd-odd supercommutator is the anticommutator
    const auto anti = supercommutator(e23, true, e32, true);
    CHECK(anti == e23 * e32 + e32 * e23);
    // even-odd is the plain commutator
    const auto comm = supercommutator(e12, false, e23, true);
    CHECK(comm == e12 * e23 - e23 * e12);

    // Koszul-signed Jacobi vanishes on mixed-parity triples
    const std::size_t n = m.dim();
    Matrix<Radical> zero(n, n);
    CHECK(graded_jacobi(e12, false, e23, true, e32, true) == zero);
    CHECK(graded_jacobi(e23, true, e32, true, e23, true) == zero);
    CHECK(graded_jacobi(e12, false, m.at(Gen::E21), false, e23, true) == zero);
}

TEST_CASE("all matrix-unit relations hold exactly") {
    for (const HighestWeight hw : {HighestWeight{0, 0, 0}, HighestWeight{1, 0, 0},
                                   HighestWeight{2, 0, -3}, HighestWeight{2, 1, 0.5},
                                   HighestWeight{3, 0, 1}}) {
        CHECK(classical_relations_exact(classical_module_exact(hw)));
    }
}

TEST_CASE("exact factor of the smallest nontypical weight") {
    const ClassicalModule f = classical_factor_exact({1, 0, 0});
    REQUIRE(f.dim() == 3);
    CHECK(classical_relations_exact(f));
    // frozen matrix elements: E23 w = 2 v2 and E32 v2 = (1/2) w
    CHECK(f.at(Gen::E23)(1, 2) == Radical(Rat(2)));
    CHECK(f.at(Gen::E32)(2, 1) == Radical(Rat(1, 2)));
    CHECK(f.at(Gen::E12)(0, 1) == Radical(Rat(1)));
}

TEST_CASE("weyl matrices") {
    const auto e12 = weyl_matrix(Gen::E12);
    CHECK(e12.rows() == 3);
    CHECK(e12(0, 1) == Radical(Rat(1)));
    CHECK(e12(1, 0) == Radical());
    CHECK_THROWS_AS(weyl_matrix(Gen::H1), RangeError);
}

TEST_CASE("equivalence with the defining representation") {
    const ClassicalModule f = classical_factor_exact({1, 0, 0});
    const auto s = defining_rep_equivalence(f);
    REQUIRE(s.has_value());
    // verify the conjugation property independently: rho(E_ij) S = S W_ij
    for (Gen g : all_generators) {
        if (g == Gen::H1 || g == Gen::H2) continue;
        CHECK(f.at(g) * (*s) == (*s) * weyl_matrix(g));
    }

    // a non-equivalent 3-dimensional module returns nullopt: its weights
    // never contain the defining highest weight (1,0,0)
    const ClassicalModule other = classical_factor_exact({2, 1, -1});
    REQUIRE(other.dim() == 3);
    CHECK_FALSE(defining_rep_equivalence(other).has_value());

    // wrong dimensions are rejected outright
    const ClassicalModule g3 = classical_factor_exact({2, 0, -3}); // dim 2d+1 = 7
    CHECK(g3.dim() == 7);
    CHECK_THROWS_AS(defining_rep_equivalence(g3), DimensionError);

    const ClassicalModule one = classical_factor_exact({0, 0, 0}); // dim 1
    CHECK_THROWS_AS(defining_rep_equivalence(one), DimensionError);
}
