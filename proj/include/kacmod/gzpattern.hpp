/**
 * @file gzpattern.hpp
 * @brief Gel'fand-Zetlin pattern bookkeeping for the four-floor Kac module.
 *
 * A module label is the top signature [m13, m23, m33] with m13 - m23 a
 * nonnegative integer; m33 may be any real number.  The module decomposes
 * over the even subalgebra into floors k = 0..3 whose signatures are integer
 * shifts of the top row; floor widths are (d, d+1, d-1, d) with
 * d = m13 - m23 + 1, so the full dimension is 4d.  A basis vector is a floor
 * index k plus a bottom entry m11 running from m12 down to m22 in integer
 * steps.  Floors 0 and 3 are even, floors 1 and 2 odd.
 */
#pragma once

#include <kacmod/errors.hpp>

#include <array>
#include <vector>

namespace kacmod {

struct HighestWeight {
    double m13 = 0.0;
    double m23 = 0.0;
    double m33 = 0.0;

    friend bool operator==(const HighestWeight& a, const HighestWeight& b) {
        return a.m13 == b.m13 && a.m23 == b.m23 && a.m33 == b.m33;
    }
    friend bool operator!=(const HighestWeight& a, const HighestWeight& b) { return !(a == b); }
};

/// True when x is within 1e-9 of an integer.
bool near_integer(double x);

/// Throws std::invalid_argument unless m13 - m23 is a nonnegative integer.
void validate_highest_weight(const HighestWeight& hw);

/// d = m13 - m23 + 1, the width of floor 0.
int gl2_width(const HighestWeight& hw);

/// Signature of floor k: shifts (0,0,0), (0,-1,+1), (-1,0,+1), (-1,-1,+2)
/// of the top row for k = 0,1,2,3.  Throws RangeError for other k.
std::array<double, 3> signature_shift(const HighestWeight& hw, int k);

/// Width of floor k: d, d+1, d-1, d (floor 2 collapses to zero when d = 1).
int submodule_width(const HighestWeight& hw, int k);

/// One basis vector: floor index, bottom entry, and the derived middle row.
struct GZVector {
    HighestWeight top;
    int k = 0;
    double m11 = 0.0;
    double m12 = 0.0; ///< middle row, first entry (from the floor signature)
    double m22 = 0.0; ///< middle row, second entry
    double m31 = 0.0; ///< middle row, third entry (the gl(1) charge)

    friend bool operator==(const GZVector& a, const GZVector& b) {
        return a.top == b.top && a.k == b.k && a.m11 == b.m11;
    }
    friend bool operator!=(const GZVector& a, const GZVector& b) { return !(a == b); }
};

/// Builds the pattern for floor k with bottom entry m11, validating that
/// m12 >= m11 >= m22 with integer offsets.  Throws std::invalid_argument on
/// violation and RangeError for k outside 0..3.
GZVector make_gzvector(const HighestWeight& top, int k, double m11);

/// Shifted pattern labels entering the matrix-element formulas:
/// l11 = m11-1, l12 = m12-1, l22 = m22-2, l31 = m31-1 from the pattern rows,
/// l13 = m13-1, l23 = m23-2, l33 = m33-1 from the module label, and
/// l = (m13-m23)/2.
struct LValues {
    double l11, l12, l22, l31, l13, l23, l33, l;
};

LValues lvalues(const GZVector& v);

/// Basis of floor k, ordered by descending m11; empty when the floor
/// collapses.
std::vector<GZVector> enumerate_basis(const HighestWeight& hw, int k);

/// Concatenated floors k = 0,1,2,3, each ordered by descending m11.
std::vector<GZVector> full_module_basis(const HighestWeight& hw);

/// Top vector (maximal m11) of floor k; EmptyModuleError when collapsed.
GZVector highest_weight_vector(const HighestWeight& hw, int k);

/// 0 for floors 0 and 3, 1 for floors 1 and 2.
int floor_parity(int k);

/// Position of (k, m11) in full_module_basis order; RangeError when the
/// pattern lies outside the module.
std::size_t basis_index(const HighestWeight& hw, int k, double m11);

} // namespace kacmod
