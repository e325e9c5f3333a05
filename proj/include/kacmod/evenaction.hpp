/**
 * @file evenaction.hpp
 * @brief Action of the even subalgebra on a single floor.
 *
 * Each floor is a gl(2) (+) gl(1) module in its Gel'fand-Zetlin basis: the
 * Cartan generators are diagonal with eigenvalues m11, m12+m22-m11, m31, and
 * E12/E21 move m11 by one step with square-root coefficients built from
 * bracket differences of the shifted labels.  Coefficients vanish exactly at
 * the floor boundaries, so out-of-range targets are dropped rather than
 * reported.
 */
#pragma once

#include <kacmod/generators.hpp>
#include <kacmod/gzpattern.hpp>
#include <kacmod/qcontext.hpp>

#include <vector>

namespace kacmod {

/// One summand of an operator image: a basis vector and its coefficient.
struct Term {
    GZVector vec;
    double coeff;
};

/// Eigenvalue of a diagonal generator (E11, E22, E33, H1 = E11-E22,
/// H2 = E22+E33) on the given pattern; RangeError for non-diagonal input.
double cartan_eigenvalue(Gen g, const GZVector& v);

/// Image of v under g in {E11, E22, E33, E12, E21}; zero terms are omitted,
/// so the result may be empty.  RangeError for other generators.
std::vector<Term> act_even(const QContext& ctx, Gen g, const GZVector& v);

/// Image of v under H1 or H2 (always a single diagonal term or empty).
std::vector<Term> act_cartan_h(const QContext& ctx, Gen g, const GZVector& v);

} // namespace kacmod
