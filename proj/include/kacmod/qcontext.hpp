/**
 * @file qcontext.hpp
 * @brief Deformation parameter context and q-number arithmetic.
 *
 * The q-bracket is [x] = (q^x - q^{-x}) / (q - q^{-1}), evaluated as
 * sinh(x*L)/sinh(L) with L = log1p(q-1) so that values stay accurate as
 * q -> 1.  [x] is odd in x, invariant under q <-> 1/q, and [x] -> x as
 * q -> 1.
 */
#pragma once

#include <kacmod/errors.hpp>

namespace kacmod {

/// Evaluation context: deformation parameter, comparison tolerance, and the
/// working precision in decimal digits (<= 17 uses hardware doubles, larger
/// values route through extended-precision floats and round the result back).
struct QContext {
    double q;
    double tol = 1e-10;
    int precision = 17;

    explicit QContext(double q_, double tol_ = 1e-10, int precision_ = 17)
        : q(q_), tol(tol_), precision(precision_) {
        if (!(q > 0.0) || q == 1.0)
            throw std::invalid_argument("QContext: q must be positive and distinct from 1");
        if (!(tol > 0.0))
            throw std::invalid_argument("QContext: tol must be positive");
        if (precision < 1)
            throw std::invalid_argument("QContext: precision must be at least 1");
    }
};

/// [x] = sinh(x*L)/sinh(L), L = log(q).
double qbracket(const QContext& ctx, double x);

/// sqrt([x]); throws DomainError when [x] < 0.
double qbracket_sqrt(const QContext& ctx, double x);

/// q^x = exp(x*L).
double qpow(const QContext& ctx, double x);

/// Mixed absolute/relative comparison: |a-b| <= tol * max(1, |a|, |b|).
bool approx_eq(const QContext& ctx, double a, double b);

} // namespace kacmod
