/**
 * @file errors.hpp
 * @brief Error taxonomy for the kacmod library.
 *
 * Every documented failure condition maps to one concrete exception type so
 * callers can discriminate without matching message strings.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace kacmod {

// Square root of a negative bracket value.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Submodule index outside {0,1,2,3} and similar index violations.
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Request for the highest-weight vector of a collapsed (width <= 0) submodule.
struct EmptyModuleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A width-zero bracket appeared in a denominator (valid enumerated bases
// never trigger this; it guards hand-built degenerate patterns).
struct DegenerateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrices combined over different bases or dimensions.
struct BasisMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Tensor construction without the diagonal Cartan matrices it needs.
struct MissingCartanError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invariant subspace or factor module requested for a typical module.
struct NotNontypicalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation restricted to a fixed dimension (e.g. the 3-dim equivalence check).
struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace kacmod
