/**
 * @file classical.hpp
 * @brief Undeformed (q -> 1) module construction and exact verification.
 *
 * The classical matrix elements replace every bracket [x] by x and every
 * q-power by 1.  Two independent builds exist: a floating-point one for
 * limit comparisons against the deformed module, and an exact one over
 * Q(sqrt(n), ...) scalars for weights with small rational entries, on which
 * the supercommutator relations of the matrix units are checked with exact
 * arithmetic.
 */
#pragma once

#include <kacmod/induced.hpp>
#include <kacmod/radical.hpp>

#include <optional>

namespace kacmod {

/// Exact module: generator matrices over the radical-extension field.
struct ClassicalModule {
    std::vector<GZVector> basis;
    std::vector<int> parity;
    std::map<Gen, Matrix<Radical>> mats;

    std::size_t dim() const { return parity.size(); }

    const Matrix<Radical>& at(Gen g) const {
        auto it = mats.find(g);
        if (it == mats.end())
            throw BasisMismatchError(std::string("ClassicalModule: missing generator ") +
                                     generator_name(g));
        return it->second;
    }
};

/// Floating-point classical module (normalizations fixed at a = 1).  The
/// returned ModuleRep has q = 1 as a marker; it is not meant for the
/// deformed relation suite.
ModuleRep classical_module(const HighestWeight& hw);

/// Exact classical module; requires every weight entry to be a small exact
/// rational (std::domain_error otherwise).
ClassicalModule classical_module_exact(const HighestWeight& hw);

/// Exact factor module of a nontypical weight (invariant floors removed).
ClassicalModule classical_factor_exact(const HighestWeight& hw);

/// Largest entrywise deviation between the deformed module at q_near_one and
/// the classical module, over all eleven generators (a = 1 on both sides).
double limit_compare(const HighestWeight& hw, double q_near_one);

/// [A, B} = AB - (-1)^{p(A)p(B)} BA over exact scalars.
Matrix<Radical> supercommutator(const Matrix<Radical>& a, bool odd_a,
                                const Matrix<Radical>& b, bool odd_b);

/// Koszul-signed cyclic Jacobi combination; identically zero for any
/// representation.
Matrix<Radical> graded_jacobi(const Matrix<Radical>& x, bool px,
                              const Matrix<Radical>& y, bool py,
                              const Matrix<Radical>& z, bool pz);

/// Checks [E_ab, E_cd} = delta_bc E_ad - sign * delta_da E_cb exactly for
/// all 81 ordered pairs of matrix-unit generators, with
/// sign = (-1)^{(p(a)+p(b))(p(c)+p(d))} and p(1) = p(2) = 0, p(3) = 1.
bool classical_relations_exact(const ClassicalModule& m);

/// 3x3 matrix unit for a matrix-unit generator label.
Matrix<Radical> weyl_matrix(Gen g);

/// For a 3-dimensional exact module: a change of basis S with
/// S^{-1} rho(E_ij) S equal to the 3x3 matrix units exactly, or nullopt when
/// the module is not equivalent to the defining representation.
/// DimensionError when dim != 3.
std::optional<Matrix<Radical>> defining_rep_equivalence(const ClassicalModule& m);

} // namespace kacmod
