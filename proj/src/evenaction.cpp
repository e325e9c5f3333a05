#include <kacmod/evenaction.hpp>

#include <cmath>

namespace kacmod {

double cartan_eigenvalue(Gen g, const GZVector& v) {
    switch (g) {
        case Gen::E11: return v.m11;
        case Gen::E22: return v.m12 + v.m22 - v.m11;
        case Gen::E33: return v.m31;
        case Gen::H1:  return 2.0 * v.m11 - v.m12 - v.m22;
        case Gen::H2:  return v.m12 + v.m22 - v.m11 + v.m31;
        default:
            throw RangeError("cartan_eigenvalue: generator is not diagonal");
    }
}

std::vector<Term> act_even(const QContext& ctx, Gen g, const GZVector& v) {
    std::vector<Term> out;
    const LValues l = lvalues(v);
    switch (g) {
        case Gen::E11:
        case Gen::E22:
        case Gen::E33: {
            const double eig = cartan_eigenvalue(g, v);
            if (eig != 0.0) out.push_back({v, eig});
            return out;
        }
        case Gen::E12: {
            // Raising step; the coefficient vanishes at m11 = m12.
            const double coeff =
                qbracket_sqrt(ctx, l.l12 - l.l11) * qbracket_sqrt(ctx, l.l11 - l.l22);
            if (coeff != 0.0)
                out.push_back({make_gzvector(v.top, v.k, v.m11 + 1), coeff});
            return out;
        }
        case Gen::E21: {
            // Lowering step; the coefficient vanishes at m11 = m22.
            const double coeff = qbracket_sqrt(ctx, l.l12 - l.l11 + 1) *
                                 qbracket_sqrt(ctx, l.l11 - l.l22 - 1);
            if (coeff != 0.0)
                out.push_back({make_gzvector(v.top, v.k, v.m11 - 1), coeff});
            return out;
        }
        default:
            throw RangeError("act_even: generator outside the even subalgebra");
    }
}

std::vector<Term> act_cartan_h(const QContext& ctx, Gen g, const GZVector& v) {
    (void)ctx;
    if (g != Gen::H1 && g != Gen::H2)
        throw RangeError("act_cartan_h: expected H1 or H2");
    std::vector<Term> out;
    const double eig = cartan_eigenvalue(g, v);
    if (eig != 0.0) out.push_back({v, eig});
    return out;
}

} // namespace kacmod
