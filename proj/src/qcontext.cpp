#include <kacmod/qcontext.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>

namespace kacmod {

namespace {

using hp_float = boost::multiprecision::cpp_bin_float_50;

double qbracket_hp(double q, double x) {
    const hp_float L = log(hp_float(q));
    const hp_float val = sinh(hp_float(x) * L) / sinh(L);
    return val.convert_to<double>();
}

} // namespace

double qbracket(const QContext& ctx, double x) {
    if (x == 0.0) return 0.0;
    if (ctx.precision > 17) return qbracket_hp(ctx.q, x);
    // log1p keeps L accurate when q is within a few ulps of 1.
    const double L = std::log1p(ctx.q - 1.0);
    return std::sinh(x * L) / std::sinh(L);
}

double qbracket_sqrt(const QContext& ctx, double x) {
    const double v = qbracket(ctx, x);
    if (v < 0.0)
        throw DomainError("qbracket_sqrt: bracket value is negative");
    return std::sqrt(v);
}

double qpow(const QContext& ctx, double x) {
    if (ctx.precision > 17) {
        const hp_float L = log(hp_float(ctx.q));
        return exp(hp_float(x) * L).convert_to<double>();
    }
    return std::exp(x * std::log1p(ctx.q - 1.0));
}

bool approx_eq(const QContext& ctx, double a, double b) {
    const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) <= ctx.tol * scale;
}

} // namespace kacmod
