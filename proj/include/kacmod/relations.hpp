/**
 * @file relations.hpp
 * @brief Defining-relation verification, graded tensor products, and sweeps.
 *
 * Every check compares a left-hand matrix expression against its closed
 * right-hand side.  Reports carry the raw residual plus the scale (largest
 * entry magnitude among the operand matrices); a check passes when
 * max_residual <= tol * scale.
 */
#pragma once

#include <kacmod/induced.hpp>
#include <kacmod/qcontext.hpp>

#include <string>
#include <vector>

namespace kacmod {

struct RelationReport {
    std::string relation_id;
    double max_residual = 0.0;
    double scale = 0.0;
    bool passed = true;
    std::string context;
};

/// Runs the full defining-relation suite on one module:
/// Cartan commutativity and weight shifts, the mixed vanishing commutators,
/// the even sl(2) pair, the odd pair closing on the bracket of H2, odd and
/// composite squares, the two q-Serre identities, weight additivity of the
/// composites, and the parity block structure.
std::vector<RelationReport> check_all(const QContext& ctx, const ModuleRep& rep,
                                      const std::string& context = "");

/// Graded tensor product of two modules under the standard coproduct: Cartan
/// generators act additively and the simple raising/lowering generators as
/// g (x) q^{h/2} + q^{-h/2} (x) g with their own Cartan combination h.  Odd
/// operators passing an odd left-factor vector pick up a sign.  Requires the
/// diagonal Cartan matrices of both factors (MissingCartanError) and the four
/// simple generators (BasisMismatchError).  The result carries no pattern
/// labels.
ModuleRep tensor_representation(const QContext& ctx, const ModuleRep& left,
                                const ModuleRep& right);

struct SweepConfig {
    std::vector<HighestWeight> weights;
    std::vector<double> qs;
    std::vector<std::array<double, 3>> avecs;
    double tol = 1e-10;
    bool classify_consistency = true; ///< compare classify against the oracle
    int oracle_max_width = 4;         ///< oracle only for d <= this
    unsigned threads = 0;             ///< 0 = hardware concurrency
};

/// Grid used by the command-line verifier and the acceptance run:
/// m13 in 0..4 with m23 = 0; m33 covering both nontypical lines and three
/// typical values; q in {1.1, 1.7, 2.3}; three a-vectors including a
/// negative and a fractional entry.
SweepConfig default_sweep_config();

/// Relation suite over the whole grid, one report list entry per relation
/// per cell, in deterministic cell order regardless of thread count.
std::vector<RelationReport> sweep(const SweepConfig& config);

} // namespace kacmod
