#include <kacmod/relations.hpp>
#include <kacmod/typicality.hpp>

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

using namespace kacmod;

namespace {

bool all_passed(const std::vector<RelationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const RelationReport& r) { return r.passed; });
}

const RelationReport& find_report(const std::vector<RelationReport>& reports,
                                  const std::string& id) {
    for (const auto& r : reports)
        if (r.relation_id == id) return r;
    throw std::runtime_error("missing report: " + id);
}

} // namespace

TEST_CASE("relation suite passes on representative modules") {
    for (double q : {1.1, 2.0}) {
        const QContext ctx(q);
        for (const HighestWeight hw :
             {HighestWeight{0, 0, 0}, HighestWeight{1, 0, 0},
              HighestWeight{2, 0, 0.37}, HighestWeight{3, 1, -2.5},
              HighestWeight{4, 0, -5}}) {
            const ModuleRep rep = build_module(ctx, hw);
            const auto reports = check_all(ctx, rep);
            CHECK(all_passed(reports));
        }
    }
}

TEST_CASE("relation suite covers the expected families") {
    const QContext ctx(1.7);
    const auto reports = check_all(ctx, build_module(ctx, {2, 0, 0.37}));
    const std::set<std::string> expected{
        "cartan_cartan",   "cartan_raising", "cartan_lowering",
        "weight_additivity", "mixed_zero",   "sl2_pair",
        "odd_pair",        "odd_squares",    "composite_squares",
        "serre_raising",   "serre_lowering", "parity_blocks"};
    std::set<std::string> seen;
    for (const auto& r : reports) seen.insert(r.relation_id);
    CHECK(seen == expected);
}

TEST_CASE("suite passes with nonunit normalization constants") {
    const QContext ctx(1.7);
    for (const std::array<double, 3> a :
         {std::array<double, 3>{2.0, 1.0, 0.5}, std::array<double, 3>{1.0, -1.0, 3.0}}) {
        const auto reports = check_all(ctx, build_module(ctx, {2, 0, 0.37}, a));
        CHECK(all_passed(reports));
    }
}

TEST_CASE("suite detects a corrupted module") {
    const QContext ctx(1.7);
    ModuleRep rep = build_module(ctx, {1, 0, 0.37});
    rep.mats.at(Gen::E23)(0, 3) += 0.01;
    const auto reports = check_all(ctx, rep);
    CHECK_FALSE(all_passed(reports));
    // scale stays finite and nonzero on the failing family
    bool found_failure = false;
    for (const auto& r : reports) {
        if (!r.passed) {
            found_failure = true;
            CHECK(r.max_residual > 0.0);
            CHECK(r.scale > 0.0);
        }
    }
    CHECK(found_failure);
}

TEST_CASE("odd pair closes on the bracket of the odd Cartan combination") {
    const QContext ctx(2.0);
    const ModuleRep rep = build_module(ctx, {2, 0, 1});
    const auto r = find_report(check_all(ctx, rep), "odd_pair");
    CHECK(r.passed);
    // the anticommutator entries reach bracket magnitudes of the weights,
    // so the scale must be at least 1
    CHECK(r.scale >= 1.0);
}

TEST_CASE("factor modules pass the suite") {
    const QContext ctx(1.7);
    for (const HighestWeight hw : {HighestWeight{1, 0, 0}, HighestWeight{2, 0, -3},
                                   HighestWeight{3, 0, -4}}) {
        const auto reports = check_all(ctx, factor_module(ctx, hw));
        CHECK(all_passed(reports));
    }
}

TEST_CASE("graded tensor product of two defining-size factors") {
    const QContext ctx(1.7);
    const ModuleRep fund = factor_module(ctx, {1, 0, 0});
    REQUIRE(fund.dim() == 3);
    const ModuleRep prod = tensor_representation(ctx, fund, fund);
    CHECK(prod.dim() == 9);
    // parity of u (x) v is the sum mod 2
    int odd = 0;
    for (int p : prod.parity) odd += p;
    CHECK(odd == 4); // 2 * (2 even * 1 odd) = 4 mixed pairs

    const auto reports = check_all(ctx, prod);
    CHECK(all_passed(reports));

    // Cartan eigenvalues add exactly
    for (Gen g : {Gen::E11, Gen::E22, Gen::E33}) {
        const auto& m = prod.at(g);
        const auto& f = fund.at(g);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                CHECK(m(3 * i + j, 3 * i + j) ==
                      doctest::Approx(f(i, i) + f(j, j)).epsilon(1e-14));
    }
}

TEST_CASE("tensor product of full modules passes the suite") {
    const QContext ctx(1.3);
    const ModuleRep a = build_module(ctx, {0, 0, 0.37});
    const ModuleRep b = build_module(ctx, {1, 0, 1});
    const ModuleRep prod = tensor_representation(ctx, a, b);
    CHECK(prod.dim() == 32);
    CHECK(all_passed(check_all(ctx, prod)));
}

TEST_CASE("tensor factors must provide cartan matrices") {
    const QContext ctx(1.7);
    const ModuleRep fund = factor_module(ctx, {1, 0, 0});
    ModuleRep broken = fund;
    broken.mats.erase(Gen::E33);
    CHECK_THROWS_AS(tensor_representation(ctx, fund, broken), MissingCartanError);
}

TEST_CASE("default sweep grid") {
    const SweepConfig cfg = default_sweep_config();
    CHECK(cfg.weights.size() == 25);
    CHECK(cfg.qs.size() == 3);
    CHECK(cfg.avecs.size() == 3);
    CHECK(cfg.tol == doctest::Approx(1e-10));
    // both degenerate lines appear for every m13
    int class1 = 0;
    int class2 = 0;
    for (const auto& hw : cfg.weights) {
        const auto cls = classify(hw);
        if (cls.kind == Classification::Kind::class1) ++class1;
        if (cls.kind == Classification::Kind::class2) ++class2;
    }
    CHECK(class1 == 5);
    CHECK(class2 == 5);
}

TEST_CASE("sweep is deterministic and passes on a reduced grid") {
    SweepConfig cfg;
    cfg.weights = {{0, 0, 0}, {1, 0, 0}, {2, 0, 0.37}, {2, 0, -3}};
    cfg.qs = {1.7, 2.3};
    cfg.avecs = {{1.0, 1.0, 1.0}, {2.0, 1.0, 0.5}};
    cfg.tol = 1e-9;

    cfg.threads = 1;
    const auto serial = sweep(cfg);
    cfg.threads = 4;
    const auto parallel = sweep(cfg);

    REQUIRE(serial.size() == parallel.size());
    CHECK(all_passed(serial));
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].relation_id == parallel[i].relation_id);
        CHECK(serial[i].context == parallel[i].context);
        CHECK(serial[i].max_residual == parallel[i].max_residual);
    }
    // classification consistency reports appear for the small widths
    bool has_oracle = false;
    for (const auto& r : serial)
        if (r.relation_id == "classify_oracle") has_oracle = true;
    CHECK(has_oracle);
}
