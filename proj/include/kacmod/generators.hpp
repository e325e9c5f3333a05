/**
 * @file generators.hpp
 * @brief Generator labels for gl(2/1) and its q-deformation.
 *
 * E11, E22, E33 are the Cartan generators; E12/E21 the even raising/lowering
 * pair, E23/E32 the odd simple pair, E13/E31 the odd composites, and H1/H2
 * the combinations E11-E22 and E22+E33 whose brackets close the simple-pair
 * relations.  Parity: rows/columns 1,2 are even, 3 is odd, so Eij is odd
 * exactly when one index equals 3.
 */
#pragma once

#include <kacmod/errors.hpp>

#include <array>
#include <string>

namespace kacmod {

enum class Gen : int {
    E11 = 0, E22, E33,
    E12, E21,
    E23, E32,
    E13, E31,
    H1, H2,
};

inline constexpr std::array<Gen, 11> all_generators = {
    Gen::E11, Gen::E22, Gen::E33,
    Gen::E12, Gen::E21,
    Gen::E23, Gen::E32,
    Gen::E13, Gen::E31,
    Gen::H1, Gen::H2,
};

constexpr bool is_odd_generator(Gen g) {
    return g == Gen::E23 || g == Gen::E32 || g == Gen::E13 || g == Gen::E31;
}

constexpr const char* generator_name(Gen g) {
    switch (g) {
        case Gen::E11: return "E11";
        case Gen::E22: return "E22";
        case Gen::E33: return "E33";
        case Gen::E12: return "E12";
        case Gen::E21: return "E21";
        case Gen::E23: return "E23";
        case Gen::E32: return "E32";
        case Gen::E13: return "E13";
        case Gen::E31: return "E31";
        case Gen::H1:  return "H1";
        case Gen::H2:  return "H2";
    }
    return "?";
}

inline Gen generator_from_name(const std::string& name) {
    for (Gen g : all_generators)
        if (name == generator_name(g)) return g;
    throw RangeError("unknown generator name: " + name);
}

/// Row/column index pair (1-based) for the matrix-unit generators;
/// throws RangeError for H1/H2.
constexpr std::pair<int, int> generator_indices(Gen g) {
    switch (g) {
        case Gen::E11: return {1, 1};
        case Gen::E22: return {2, 2};
        case Gen::E33: return {3, 3};
        case Gen::E12: return {1, 2};
        case Gen::E21: return {2, 1};
        case Gen::E23: return {2, 3};
        case Gen::E32: return {3, 2};
        case Gen::E13: return {1, 3};
        case Gen::E31: return {3, 1};
        default:
            throw RangeError("generator_indices: not a matrix-unit generator");
    }
}

} // namespace kacmod
