#include <kacmod/classical.hpp>

#include <kacmod/typicality.hpp>

#include <cmath>

namespace kacmod {

namespace {

long long as_ll(double x) { return std::llround(x); }

// Integer bracket arguments shared by both classical builders.  Every
// radicand is a ratio or product of these nonnegative integers; the module
// label enters the remaining scalar factors linearly.
struct IntArgs {
    long long alpha; ///< l11 - l23 = m11 - m23 + 1
    long long beta;  ///< l13 - l11 = m13 - m11
    long long d;     ///< 2l + 1 = m13 - m23 + 1
    long long d0;    ///< 2l = m13 - m23
};

IntArgs int_args(const GZVector& v) {
    IntArgs a;
    a.alpha = as_ll(v.m11 - v.top.m23 + 1);
    a.beta = as_ll(v.top.m13 - v.m11);
    a.d = as_ll(v.top.m13 - v.top.m23 + 1);
    a.d0 = a.d - 1;
    return a;
}

ModuleRep classical_module_double(const HighestWeight& hw) {
    ModuleRep rep;
    rep.q = 1.0;
    rep.a = {1.0, 1.0, 1.0};
    rep.basis = full_module_basis(hw);
    const std::size_t n = rep.basis.size();
    for (const GZVector& v : rep.basis) rep.parity.push_back(floor_parity(v.k));

    for (Gen g : {Gen::E11, Gen::E22, Gen::E33, Gen::H1, Gen::H2}) {
        Matrix<double> m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = cartan_eigenvalue(g, rep.basis[i]);
        rep.mats.emplace(g, std::move(m));
    }

    Matrix<double> e12(n, n), e21(n, n), e23(n, n), e32(n, n);
    const auto idx = [&](int k, double m11) { return basis_index(hw, k, m11); };
    for (std::size_t c = 0; c < n; ++c) {
        const GZVector& v = rep.basis[c];
        const IntArgs ia = int_args(v);
        const double u = v.m12 - v.m11;      // l12 - l11
        const double w = v.m11 - v.m22 + 1;  // l11 - l22
        const double c1 = hw.m13 + hw.m33 + 1.0;
        const double c2 = hw.m23 + hw.m33;
        if (u > 0) e12(idx(v.k, v.m11 + 1), c) = std::sqrt(u * w);
        if (w > 1) e21(idx(v.k, v.m11 - 1), c) = std::sqrt((u + 1) * (w - 1));
        switch (v.k) {
            case 0: {
                const double t1 = std::sqrt(double(ia.alpha) / double(ia.d));
                const double t2 = std::sqrt(double(ia.beta * ia.d0)) / double(ia.d);
                if (t1 != 0.0) e32(idx(1, v.m11), c) = t1;
                if (t2 != 0.0) e32(idx(2, v.m11), c) = t2;
                break;
            }
            case 1: {
                const double t = std::sqrt(double(ia.alpha) / double(ia.d)) * c2;
                if (t != 0.0) e23(idx(0, v.m11), c) = t;
                const double s = std::sqrt(double(ia.beta) / double(ia.d));
                if (s != 0.0) e32(idx(3, v.m11), c) = s;
                break;
            }
            case 2: {
                const double t = std::sqrt(double(ia.beta) / double(ia.d0)) * c1;
                if (t != 0.0) e23(idx(0, v.m11), c) = t;
                e32(idx(3, v.m11), c) = -std::sqrt(double(ia.alpha) / double(ia.d0));
                break;
            }
            case 3: {
                const double t1 = std::sqrt(double(ia.beta) / double(ia.d)) * c1;
                const double t2 =
                    -std::sqrt(double(ia.alpha * ia.d0)) * c2 / double(ia.d);
                if (t1 != 0.0) e23(idx(1, v.m11), c) = t1;
                if (t2 != 0.0) e23(idx(2, v.m11), c) = t2;
                break;
            }
            default:
                break;
        }
    }
    rep.mats.emplace(Gen::E12, std::move(e12));
    rep.mats.emplace(Gen::E21, std::move(e21));
    rep.mats.emplace(Gen::E23, std::move(e23));
    rep.mats.emplace(Gen::E32, std::move(e32));

    const Matrix<double>& me12 = rep.mats.at(Gen::E12);
    const Matrix<double>& me21 = rep.mats.at(Gen::E21);
    const Matrix<double>& me23 = rep.mats.at(Gen::E23);
    const Matrix<double>& me32 = rep.mats.at(Gen::E32);
    rep.mats.emplace(Gen::E13, me12 * me23 - me23 * me12);
    rep.mats.emplace(Gen::E31, -(me21 * me32 - me32 * me21));
    return rep;
}

struct RatWeight {
    Rat m13, m23, m33;
};

RatWeight rational_weight(const HighestWeight& hw) {
    return {Rat::from_double(hw.m13), Rat::from_double(hw.m23),
            Rat::from_double(hw.m33)};
}

// Exact pattern entries: integer offsets from the rational module label.
struct RatPattern {
    Rat m11, m12, m22, m31;
};

RatPattern rat_pattern(const RatWeight& rw, const GZVector& v) {
    RatPattern p;
    p.m11 = rw.m13 - Rat(as_ll(v.top.m13 - v.m11));
    p.m12 = rw.m13 - Rat(as_ll(v.top.m13 - v.m12));
    p.m22 = rw.m23 - Rat(as_ll(v.top.m23 - v.m22));
    p.m31 = rw.m33 + Rat(as_ll(v.m31 - v.top.m33));
    return p;
}

Rat exact_eigenvalue(Gen g, const RatPattern& p) {
    switch (g) {
        case Gen::E11: return p.m11;
        case Gen::E22: return p.m12 + p.m22 - p.m11;
        case Gen::E33: return p.m31;
        case Gen::H1:  return Rat(2) * p.m11 - p.m12 - p.m22;
        case Gen::H2:  return p.m12 + p.m22 - p.m11 + p.m31;
        default:
            throw RangeError("exact_eigenvalue: generator is not diagonal");
    }
}

} // namespace

ModuleRep classical_module(const HighestWeight& hw) {
    return classical_module_double(hw);
}

ClassicalModule classical_module_exact(const HighestWeight& hw) {
    const RatWeight rw = rational_weight(hw);
    ClassicalModule rep;
    rep.basis = full_module_basis(hw);
    const std::size_t n = rep.basis.size();
    for (const GZVector& v : rep.basis) rep.parity.push_back(floor_parity(v.k));

    for (Gen g : {Gen::E11, Gen::E22, Gen::E33, Gen::H1, Gen::H2}) {
        Matrix<Radical> m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = Radical(exact_eigenvalue(g, rat_pattern(rw, rep.basis[i])));
        rep.mats.emplace(g, std::move(m));
    }

    const Rat c1 = rw.m13 + rw.m33 + Rat(1);
    const Rat c2 = rw.m23 + rw.m33;
    Matrix<Radical> e12(n, n), e21(n, n), e23(n, n), e32(n, n);
    const auto idx = [&](int k, double m11) { return basis_index(hw, k, m11); };
    for (std::size_t c = 0; c < n; ++c) {
        const GZVector& v = rep.basis[c];
        const IntArgs ia = int_args(v);
        const long long u = as_ll(v.m12 - v.m11);     // l12 - l11
        const long long w = as_ll(v.m11 - v.m22) + 1; // l11 - l22
        if (u > 0) e12(idx(v.k, v.m11 + 1), c) = Radical::sqrt_of_int(u * w);
        if (w > 1) e21(idx(v.k, v.m11 - 1), c) = Radical::sqrt_of_int((u + 1) * (w - 1));
        switch (v.k) {
            case 0: {
                if (ia.alpha > 0)
                    e32(idx(1, v.m11), c) = Radical::sqrt_of_ratio(ia.alpha, ia.d);
                if (ia.beta * ia.d0 > 0)
                    e32(idx(2, v.m11), c) =
                        Radical::sqrt_of_int(ia.beta * ia.d0) * Radical(Rat(1, ia.d));
                break;
            }
            case 1: {
                const Radical t = Radical::sqrt_of_ratio(ia.alpha, ia.d) * Radical(c2);
                if (!t.is_zero()) e23(idx(0, v.m11), c) = t;
                if (ia.beta > 0)
                    e32(idx(3, v.m11), c) = Radical::sqrt_of_ratio(ia.beta, ia.d);
                break;
            }
            case 2: {
                const Radical t = Radical::sqrt_of_ratio(ia.beta, ia.d0) * Radical(c1);
                if (!t.is_zero()) e23(idx(0, v.m11), c) = t;
                e32(idx(3, v.m11), c) = -Radical::sqrt_of_ratio(ia.alpha, ia.d0);
                break;
            }
            case 3: {
                const Radical t1 =
                    Radical::sqrt_of_ratio(ia.beta, ia.d) * Radical(c1);
                const Radical t2 = -(Radical::sqrt_of_int(ia.alpha * ia.d0) *
                                     Radical(c2 / Rat(ia.d)));
                if (!t1.is_zero()) e23(idx(1, v.m11), c) = t1;
                if (!t2.is_zero()) e23(idx(2, v.m11), c) = t2;
                break;
            }
            default:
                break;
        }
    }
    rep.mats.emplace(Gen::E12, std::move(e12));
    rep.mats.emplace(Gen::E21, std::move(e21));
    rep.mats.emplace(Gen::E23, std::move(e23));
    rep.mats.emplace(Gen::E32, std::move(e32));

    const Matrix<Radical>& me12 = rep.mats.at(Gen::E12);
    const Matrix<Radical>& me21 = rep.mats.at(Gen::E21);
    const Matrix<Radical>& me23 = rep.mats.at(Gen::E23);
    const Matrix<Radical>& me32 = rep.mats.at(Gen::E32);
    rep.mats.emplace(Gen::E13, me12 * me23 - me23 * me12);
    rep.mats.emplace(Gen::E31, -(me21 * me32 - me32 * me21));
    return rep;
}

ClassicalModule classical_factor_exact(const HighestWeight& hw) {
    const auto removed = invariant_indices(hw);
    ClassicalModule full = classical_module_exact(hw);

    std::vector<bool> keep(full.dim(), true);
    for (std::size_t i : removed) keep[i] = false;
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < full.dim(); ++i)
        if (keep[i]) kept.push_back(i);

    ClassicalModule out;
    for (std::size_t i : kept) {
        out.basis.push_back(full.basis[i]);
        out.parity.push_back(full.parity[i]);
    }
    const std::size_t n = kept.size();
    for (const auto& [g, m] : full.mats) {
        Matrix<Radical> sub(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                sub(r, c) = m(kept[r], kept[c]);
        out.mats.emplace(g, std::move(sub));
    }
    return out;
}

double limit_compare(const HighestWeight& hw, double q_near_one) {
    const QContext ctx(q_near_one);
    const ModuleRep deformed = build_module(ctx, hw);
    const ModuleRep classical = classical_module_double(hw);
    double worst = 0.0;
    for (Gen g : all_generators)
        worst = std::max(worst, max_abs(deformed.at(g) - classical.at(g)));
    return worst;
}

Matrix<Radical> supercommutator(const Matrix<Radical>& a, bool odd_a,
                                const Matrix<Radical>& b, bool odd_b) {
    if (odd_a && odd_b) return a * b + b * a;
    return a * b - b * a;
}

Matrix<Radical> graded_jacobi(const Matrix<Radical>& x, bool px,
                              const Matrix<Radical>& y, bool py,
                              const Matrix<Radical>& z, bool pz) {
    const auto sign = [](bool p, bool r) { return Radical(p && r ? -1 : 1); };
    const bool pyz = py != pz, pzx = pz != px, pxy = px != py;
    return sign(px, pz) * supercommutator(x, px, supercommutator(y, py, z, pz), pyz) +
           sign(py, px) * supercommutator(y, py, supercommutator(z, pz, x, px), pzx) +
           sign(pz, py) * supercommutator(z, pz, supercommutator(x, px, y, py), pxy);
}

bool classical_relations_exact(const ClassicalModule& m) {
    constexpr std::array<Gen, 9> units = {Gen::E11, Gen::E22, Gen::E33,
                                          Gen::E12, Gen::E21, Gen::E23,
                                          Gen::E32, Gen::E13, Gen::E31};
    const auto unit = [&](int i, int j) -> const Matrix<Radical>& {
        for (Gen g : units) {
            const auto [gi, gj] = generator_indices(g);
            if (gi == i && gj == j) return m.at(g);
        }
        throw RangeError("classical_relations_exact: missing matrix unit");
    };
    const std::size_t n = m.dim();
    for (Gen g1 : units) {
        for (Gen g2 : units) {
            const auto [a, b] = generator_indices(g1);
            const auto [c, d] = generator_indices(g2);
            const bool odd1 = is_odd_generator(g1), odd2 = is_odd_generator(g2);
            Matrix<Radical> rhs(n, n);
            if (b == c) rhs = rhs + unit(a, d);
            if (d == a) {
                const Radical s(odd1 && odd2 ? -1 : 1);
                rhs = rhs - s * unit(c, b);
            }
            if (supercommutator(m.at(g1), odd1, m.at(g2), odd2) != rhs) return false;
        }
    }
    return true;
}

Matrix<Radical> weyl_matrix(Gen g) {
    const auto [i, j] = generator_indices(g);
    Matrix<Radical> m(3, 3);
    m(i - 1, j - 1) = Radical(Rat(1));
    return m;
}

std::optional<Matrix<Radical>> defining_rep_equivalence(const ClassicalModule& m) {
    if (m.dim() != 3)
        throw DimensionError("defining_rep_equivalence: module dimension must be 3");
    constexpr std::array<Gen, 9> units = {Gen::E11, Gen::E22, Gen::E33,
                                          Gen::E12, Gen::E21, Gen::E23,
                                          Gen::E32, Gen::E13, Gen::E31};

    // Seed: the basis vector carrying the defining highest weight (1,0,0).
    std::size_t seed = 3;
    for (std::size_t i = 0; i < 3; ++i) {
        if (m.at(Gen::E11)(i, i) == Radical(Rat(1)) &&
            m.at(Gen::E22)(i, i).is_zero() && m.at(Gen::E33)(i, i).is_zero()) {
            seed = i;
            break;
        }
    }
    if (seed == 3) return std::nullopt;

    // Columns of S: the seed vector and its images under the two lowerings.
    Matrix<Radical> s(3, 3);
    s(seed, 0) = Radical(Rat(1));
    for (std::size_t r = 0; r < 3; ++r) {
        s(r, 1) = m.at(Gen::E21)(r, seed);
        s(r, 2) = m.at(Gen::E31)(r, seed);
    }

    const auto det3 = [](const Matrix<Radical>& a) {
        return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
               a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
               a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
    };
    const Radical det = det3(s);
    if (det.is_zero()) return std::nullopt;

    Matrix<Radical> sinv(3, 3);
    try {
        const Radical dinv = det.inverse();
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c) {
                // Adjugate entry: signed 2x2 minor with row/column swapped.
                const std::size_t r1 = (c + 1) % 3, r2 = (c + 2) % 3;
                const std::size_t c1 = (r + 1) % 3, c2 = (r + 2) % 3;
                sinv(r, c) = (s(r1, c1) * s(r2, c2) - s(r1, c2) * s(r2, c1)) * dinv;
            }
    } catch (const std::domain_error&) {
        return std::nullopt; // determinant outside the invertible scalar range
    }

    for (Gen g : units)
        if (sinv * m.at(g) * s != weyl_matrix(g)) return std::nullopt;
    return s;
}

} // namespace kacmod
