/**
 * @file induced.hpp
 * @brief Induced realization, odd generator action, and module assembly.
 *
 * The induced basis tags a floor-0 pattern with odd exponents
 * (theta1, theta2) in {0,1}^2: the vector is the corresponding product of
 * odd lowering operators applied to the floor-0 vector.  The reduced basis
 * (the four floors) is a triangular recombination of the induced one; both
 * directions are closed-form with coefficients scaled by the three free
 * normalization constants a1, a2, a3.  Every out-of-range target in the
 * closed forms carries an exactly vanishing bracket factor, so such terms
 * are dropped.
 *
 * Matrix convention: entry (r, c) is the coefficient of basis vector r in
 * the image of basis vector c (operators act on column vectors).
 */
#pragma once

#include <kacmod/evenaction.hpp>
#include <kacmod/matrix.hpp>

#include <array>
#include <map>

namespace kacmod {

/// Induced-basis label: odd exponents over a floor-0 pattern.
struct InducedVector {
    int theta1 = 0;
    int theta2 = 0;
    GZVector pattern; ///< floor-0 pattern (pattern.k == 0)

    friend bool operator==(const InducedVector& a, const InducedVector& b) {
        return a.theta1 == b.theta1 && a.theta2 == b.theta2 && a.pattern == b.pattern;
    }
};

/// One summand of an image expressed in the induced basis.
struct ITerm {
    InducedVector vec;
    double coeff;
};

/// Validates theta flags and the floor-0 pattern.
InducedVector make_induced(int theta1, int theta2, const GZVector& pattern);

/// Induced basis in theta-major order (0,0), (0,1), (1,0), (1,1), each block
/// ordered by descending m11; 4d vectors in total.
std::vector<InducedVector> induced_basis(const HighestWeight& hw);

/// Expansion of a reduced (floor) basis vector over the induced basis.
std::vector<ITerm> reduced_to_induced(const QContext& ctx,
                                      const std::array<double, 3>& a,
                                      const GZVector& v);

/// Expansion of an induced basis vector over the reduced basis.
std::vector<Term> induced_to_reduced(const QContext& ctx,
                                     const std::array<double, 3>& a,
                                     const InducedVector& v);

/// Image of a reduced basis vector under E23 or E32; RangeError otherwise.
std::vector<Term> act_odd(const QContext& ctx, const std::array<double, 3>& a,
                          Gen g, const GZVector& v);

/// Column-expansion matrices of the two basis changes over the full module;
/// they are mutually inverse.
Matrix<double> reduced_to_induced_matrix(const QContext& ctx,
                                         const std::array<double, 3>& a,
                                         const HighestWeight& hw);
Matrix<double> induced_to_reduced_matrix(const QContext& ctx,
                                         const std::array<double, 3>& a,
                                         const HighestWeight& hw);

/// A module presented as matrices over an ordered basis.  `basis` is empty
/// for synthetic modules (e.g. tensor products) that no longer carry pattern
/// labels; `parity` always has one entry per basis vector.
struct ModuleRep {
    double q = 1.0;
    std::array<double, 3> a = {1.0, 1.0, 1.0};
    double tol = 1e-10;
    std::vector<GZVector> basis;
    std::vector<int> parity;
    std::map<Gen, Matrix<double>> mats;

    std::size_t dim() const { return parity.size(); }

    const Matrix<double>& at(Gen g) const {
        auto it = mats.find(g);
        if (it == mats.end())
            throw BasisMismatchError(std::string("ModuleRep: missing generator ") +
                                     generator_name(g));
        return it->second;
    }
};

/// E13 or E31 from the simple generator matrices already in `mats`:
/// E13 = E12 E23 - q^{-1} E23 E12 and E31 = -(E21 E32 - q^{-1} E32 E21).
Matrix<double> composite_odd(const QContext& ctx, Gen g,
                             const std::map<Gen, Matrix<double>>& mats);

/// Assembles all eleven generator matrices over the reduced basis.
/// Requires nonzero a1, a2, a3.
ModuleRep build_module(const QContext& ctx, const HighestWeight& hw,
                       const std::array<double, 3>& a = {1.0, 1.0, 1.0});

} // namespace kacmod
