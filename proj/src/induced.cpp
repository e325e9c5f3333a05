#include <kacmod/induced.hpp>

#include <cmath>
#include <string>

namespace kacmod {

namespace {

// [2l] as a guarded denominator: the value is zero only for width-1 modules,
// whose floor-2 patterns cannot be constructed in the first place, so a zero
// here means a hand-built degenerate input.
double bracket_2l_checked(const QContext& ctx, const LValues& l) {
    const double v = qbracket(ctx, 2.0 * l.l);
    if (v == 0.0)
        throw DegenerateError("width-1 module: bracket of 2l vanishes in a denominator");
    return v;
}

void check_a(const std::array<double, 3>& a) {
    for (double ai : a)
        if (ai == 0.0)
            throw std::invalid_argument("normalization constants a1, a2, a3 must be nonzero");
}

std::size_t induced_index(const HighestWeight& hw, const InducedVector& iv) {
    const int d = gl2_width(hw);
    const int block = iv.theta1 * 2 + iv.theta2;
    const int pos = static_cast<int>(std::round(hw.m13 - iv.pattern.m11));
    return static_cast<std::size_t>(block * d + pos);
}

void push(std::vector<Term>& out, const HighestWeight& top, int k, double m11,
          double coeff) {
    if (coeff != 0.0) out.push_back({make_gzvector(top, k, m11), coeff});
}

void push_induced(std::vector<ITerm>& out, const HighestWeight& top, int t1, int t2,
                  double m11, double coeff) {
    if (coeff != 0.0)
        out.push_back({make_induced(t1, t2, make_gzvector(top, 0, m11)), coeff});
}

} // namespace

InducedVector make_induced(int theta1, int theta2, const GZVector& pattern) {
    if ((theta1 != 0 && theta1 != 1) || (theta2 != 0 && theta2 != 1))
        throw RangeError("make_induced: theta flags must be 0 or 1");
    if (pattern.k != 0)
        throw RangeError("make_induced: pattern must live on floor 0");
    return InducedVector{theta1, theta2, pattern};
}

std::vector<InducedVector> induced_basis(const HighestWeight& hw) {
    const auto floor0 = enumerate_basis(hw, 0);
    std::vector<InducedVector> out;
    out.reserve(4 * floor0.size());
    for (int t1 = 0; t1 <= 1; ++t1)
        for (int t2 = 0; t2 <= 1; ++t2)
            for (const GZVector& p : floor0)
                out.push_back(make_induced(t1, t2, p));
    return out;
}

std::vector<ITerm> reduced_to_induced(const QContext& ctx,
                                      const std::array<double, 3>& a,
                                      const GZVector& v) {
    check_a(a);
    const LValues l = lvalues(v);
    const HighestWeight& top = v.top;
    std::vector<ITerm> out;
    switch (v.k) {
        case 0:
            push_induced(out, top, 0, 0, v.m11, 1.0);
            return out;
        case 1: {
            const double root1 = qbracket_sqrt(ctx, l.l13 - l.l11) /
                                 qbracket_sqrt(ctx, 2.0 * l.l + 1);
            const double root2 = qbracket_sqrt(ctx, l.l11 - l.l23) /
                                 qbracket_sqrt(ctx, 2.0 * l.l + 1);
            push_induced(out, top, 1, 0, v.m11 + 1, -a[0] * root1);
            push_induced(out, top, 0, 1, v.m11,
                         a[0] * qpow(ctx, l.l11 - l.l13) * root2);
            return out;
        }
        case 2: {
            const double b2l = bracket_2l_checked(ctx, l);
            const double root1 = std::sqrt(qbracket(ctx, l.l11 - l.l23) / b2l);
            const double root2 = std::sqrt(qbracket(ctx, l.l13 - l.l11) / b2l);
            push_induced(out, top, 1, 0, v.m11 + 1, a[1] * root1);
            push_induced(out, top, 0, 1, v.m11,
                         a[1] * qpow(ctx, l.l11 - l.l23) * root2);
            return out;
        }
        case 3:
            push_induced(out, top, 1, 1, v.m11 + 1, a[2]);
            return out;
        default:
            throw RangeError("reduced_to_induced: floor index must be 0..3");
    }
}

std::vector<Term> induced_to_reduced(const QContext& ctx,
                                     const std::array<double, 3>& a,
                                     const InducedVector& v) {
    check_a(a);
    const LValues l = lvalues(v.pattern);
    const HighestWeight& top = v.pattern.top;
    const double m11 = v.pattern.m11;
    const double b2l1 = qbracket(ctx, 2.0 * l.l + 1);
    std::vector<Term> out;
    if (v.theta1 == 0 && v.theta2 == 0) {
        push(out, top, 0, m11, 1.0);
    } else if (v.theta1 == 1 && v.theta2 == 0) {
        const double c1 = -(1.0 / a[0]) * qpow(ctx, l.l11 - l.l23 - 1) *
                          qbracket_sqrt(ctx, l.l13 - l.l11 + 1) / std::sqrt(b2l1);
        const double c2 = (1.0 / a[1]) * qpow(ctx, l.l11 - l.l13 - 1) *
                          qbracket_sqrt(ctx, l.l11 - l.l23 - 1) *
                          qbracket_sqrt(ctx, 2.0 * l.l) / b2l1;
        push(out, top, 1, m11 - 1, c1);
        push(out, top, 2, m11 - 1, c2);
    } else if (v.theta1 == 0 && v.theta2 == 1) {
        const double c1 =
            (1.0 / a[0]) * qbracket_sqrt(ctx, l.l11 - l.l23) / std::sqrt(b2l1);
        const double c2 = (1.0 / a[1]) * qbracket_sqrt(ctx, l.l13 - l.l11) *
                          qbracket_sqrt(ctx, 2.0 * l.l) / b2l1;
        push(out, top, 1, m11, c1);
        push(out, top, 2, m11, c2);
    } else {
        push(out, top, 3, m11 - 1, 1.0 / a[2]);
    }
    return out;
}

std::vector<Term> act_odd(const QContext& ctx, const std::array<double, 3>& a,
                          Gen g, const GZVector& v) {
    check_a(a);
    const LValues l = lvalues(v);
    const HighestWeight& top = v.top;
    std::vector<Term> out;
    if (g == Gen::E23) {
        switch (v.k) {
            case 0:
                return out;
            case 1: {
                const double c = a[0] * qbracket_sqrt(ctx, l.l11 - l.l23) /
                                 qbracket_sqrt(ctx, 2.0 * l.l + 1) *
                                 qbracket(ctx, l.l23 + l.l33 + 3);
                push(out, top, 0, v.m11, c);
                return out;
            }
            case 2: {
                const double b2l = bracket_2l_checked(ctx, l);
                const double c = a[1] * std::sqrt(qbracket(ctx, l.l13 - l.l11) / b2l) *
                                 qbracket(ctx, l.l13 + l.l33 + 3);
                push(out, top, 0, v.m11, c);
                return out;
            }
            case 3: {
                const double b2l1 = qbracket(ctx, 2.0 * l.l + 1);
                const double c1 = (a[2] / (a[0] * ctx.q)) *
                                  qbracket_sqrt(ctx, l.l13 - l.l11) / std::sqrt(b2l1) *
                                  qbracket(ctx, l.l13 + l.l33 + 3);
                const double c2 = -(a[2] / (a[1] * ctx.q)) *
                                  qbracket_sqrt(ctx, l.l11 - l.l23) *
                                  qbracket_sqrt(ctx, 2.0 * l.l) *
                                  qbracket(ctx, l.l23 + l.l33 + 3) / b2l1;
                push(out, top, 1, v.m11, c1);
                push(out, top, 2, v.m11, c2);
                return out;
            }
            default:
                throw RangeError("act_odd: floor index must be 0..3");
        }
    }
    if (g == Gen::E32) {
        switch (v.k) {
            case 0: {
                const double b2l1 = qbracket(ctx, 2.0 * l.l + 1);
                const double c1 =
                    (1.0 / a[0]) * qbracket_sqrt(ctx, l.l11 - l.l23) / std::sqrt(b2l1);
                const double c2 = (1.0 / a[1]) * qbracket_sqrt(ctx, l.l13 - l.l11) *
                                  qbracket_sqrt(ctx, 2.0 * l.l) / b2l1;
                push(out, top, 1, v.m11, c1);
                push(out, top, 2, v.m11, c2);
                return out;
            }
            case 1: {
                const double c = (a[0] / a[2]) * ctx.q *
                                 qbracket_sqrt(ctx, l.l13 - l.l11) /
                                 qbracket_sqrt(ctx, 2.0 * l.l + 1);
                push(out, top, 3, v.m11, c);
                return out;
            }
            case 2: {
                const double b2l = bracket_2l_checked(ctx, l);
                const double c = -(a[1] / a[2]) * ctx.q *
                                 std::sqrt(qbracket(ctx, l.l11 - l.l23) / b2l);
                push(out, top, 3, v.m11, c);
                return out;
            }
            case 3:
                return out;
            default:
                throw RangeError("act_odd: floor index must be 0..3");
        }
    }
    throw RangeError("act_odd: expected E23 or E32");
}

Matrix<double> reduced_to_induced_matrix(const QContext& ctx,
                                         const std::array<double, 3>& a,
                                         const HighestWeight& hw) {
    const auto reduced = full_module_basis(hw);
    const std::size_t n = reduced.size();
    Matrix<double> out(n, n);
    for (std::size_t c = 0; c < n; ++c)
        for (const ITerm& t : reduced_to_induced(ctx, a, reduced[c]))
            out(induced_index(hw, t.vec), c) += t.coeff;
    return out;
}

Matrix<double> induced_to_reduced_matrix(const QContext& ctx,
                                         const std::array<double, 3>& a,
                                         const HighestWeight& hw) {
    const auto induced = induced_basis(hw);
    const std::size_t n = induced.size();
    Matrix<double> out(n, n);
    for (std::size_t c = 0; c < n; ++c)
        for (const Term& t : induced_to_reduced(ctx, a, induced[c]))
            out(basis_index(hw, t.vec.k, t.vec.m11), c) += t.coeff;
    return out;
}

Matrix<double> composite_odd(const QContext& ctx, Gen g,
                             const std::map<Gen, Matrix<double>>& mats) {
    const auto need = [&](Gen h) -> const Matrix<double>& {
        auto it = mats.find(h);
        if (it == mats.end())
            throw BasisMismatchError(std::string("composite_odd: missing generator ") +
                                     generator_name(h));
        return it->second;
    };
    const double qinv = 1.0 / ctx.q;
    if (g == Gen::E13) {
        const Matrix<double>& e12 = need(Gen::E12);
        const Matrix<double>& e23 = need(Gen::E23);
        return e12 * e23 - qinv * (e23 * e12);
    }
    if (g == Gen::E31) {
        const Matrix<double>& e21 = need(Gen::E21);
        const Matrix<double>& e32 = need(Gen::E32);
        return -(e21 * e32 - qinv * (e32 * e21));
    }
    throw RangeError("composite_odd: expected E13 or E31");
}

ModuleRep build_module(const QContext& ctx, const HighestWeight& hw,
                       const std::array<double, 3>& a) {
    check_a(a);
    ModuleRep rep;
    rep.q = ctx.q;
    rep.a = a;
    rep.tol = ctx.tol;
    rep.basis = full_module_basis(hw);
    const std::size_t n = rep.basis.size();
    rep.parity.reserve(n);
    for (const GZVector& v : rep.basis) rep.parity.push_back(floor_parity(v.k));

    for (Gen g : {Gen::E11, Gen::E22, Gen::E33, Gen::H1, Gen::H2}) {
        Matrix<double> m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = cartan_eigenvalue(g, rep.basis[i]);
        rep.mats.emplace(g, std::move(m));
    }
    for (Gen g : {Gen::E12, Gen::E21}) {
        Matrix<double> m(n, n);
        for (std::size_t c = 0; c < n; ++c)
            for (const Term& t : act_even(ctx, g, rep.basis[c]))
                m(basis_index(hw, t.vec.k, t.vec.m11), c) += t.coeff;
        rep.mats.emplace(g, std::move(m));
    }
    for (Gen g : {Gen::E23, Gen::E32}) {
        Matrix<double> m(n, n);
        for (std::size_t c = 0; c < n; ++c)
            for (const Term& t : act_odd(ctx, a, g, rep.basis[c]))
                m(basis_index(hw, t.vec.k, t.vec.m11), c) += t.coeff;
        rep.mats.emplace(g, std::move(m));
    }
    rep.mats.emplace(Gen::E13, composite_odd(ctx, Gen::E13, rep.mats));
    rep.mats.emplace(Gen::E31, composite_odd(ctx, Gen::E31, rep.mats));
    return rep;
}

} // namespace kacmod
