/**
 * @file typicality.hpp
 * @brief Typicality classification, invariant subspaces, factor modules.
 *
 * The two indicator values are c1 = m13 + m33 + 1 and c2 = m23 + m33; a
 * module is typical (irreducible) when both are nonzero.  They cannot vanish
 * together: c1 - c2 = m13 - m23 + 1 >= 1.  When c1 = 0 the floors 2 and 3
 * span the maximal invariant subspace and the factor has dimension 2d + 1;
 * when c2 = 0 the floors 1 and 3 do, with factor dimension 2d - 1.
 */
#pragma once

#include <kacmod/induced.hpp>

namespace kacmod {

struct Classification {
    enum class Kind { typical, class1, class2 };
    Kind kind;
    double c1;
    double c2;
};

const char* kind_name(Classification::Kind k);

/// Indicator test with absolute threshold 1e-12 on c1 and c2.
Classification classify(const HighestWeight& hw);

/// Positions (in full_module_basis order) of the invariant floors;
/// NotNontypicalError for typical weights.
std::vector<std::size_t> invariant_indices(const HighestWeight& hw);

/// Invariant-subspace basis vectors of a built module, in module order.
/// Verifies numerically (at ctx.tol, relative to the largest entry) that
/// every generator maps the subspace into itself; throws std::logic_error
/// if that fails.  The module must carry pattern labels.
std::vector<GZVector> invariant_subspace(const QContext& ctx, const ModuleRep& rep);

/// Factor module: the full action restricted to the complement of the
/// invariant floors.  NotNontypicalError for typical weights.
ModuleRep factor_module(const QContext& ctx, const HighestWeight& hw,
                        const std::array<double, 3>& a = {1.0, 1.0, 1.0});

/// True when the generator matrices act irreducibly: the associative algebra
/// they generate (with identity) has full rank dim^2 over the vectorized
/// matrix space, measured by Gram-Schmidt with threshold sqrt(ctx.tol).
bool irreducibility_oracle(const QContext& ctx, const ModuleRep& rep);

/// Largest entrywise deviation between the factor-module odd matrices and
/// the closed-form factor action written with the vanishing indicator
/// eliminated from the bracket arguments.  NotNontypicalError for typical
/// weights.
double closed_form_deviation(const QContext& ctx, const HighestWeight& hw,
                             const std::array<double, 3>& a = {1.0, 1.0, 1.0});

} // namespace kacmod
