/**
 * @file bundle.hpp
 * @brief Deterministic JSON export of built modules and verification runs.
 *
 * Serialization is byte-deterministic: fixed key order, fixed generator
 * order, no timestamps, and doubles printed with 17 significant digits so a
 * read back parses to bit-identical values.
 */
#pragma once

#include <kacmod/relations.hpp>
#include <kacmod/typicality.hpp>

#include <string>
#include <vector>

namespace kacmod {

inline constexpr const char* kBundleFormat = "kacmod/1";
inline constexpr const char* kToolVersion = "1.0.0";

struct ExportBundle {
    std::string format = kBundleFormat;
    std::string version = kToolVersion;
    HighestWeight hw;
    double q = 1.7;
    std::array<double, 3> a = {1.0, 1.0, 1.0};
    double tol = 1e-10;
    bool factor = false;
    Classification cls{Classification::Kind::typical, 0.0, 0.0};
    std::vector<GZVector> basis;
    std::vector<int> parity;
    /// Flat row-major entries, in fixed generator order (enum order).
    std::vector<std::pair<std::string, std::vector<double>>> matrices;
};

/// Builds the module (full or factor) and packages it.
ExportBundle make_bundle(const QContext& ctx, const HighestWeight& hw,
                         const std::array<double, 3>& a, bool factor);

/// Deterministic JSON text (trailing newline included).
std::string serialize(const ExportBundle& bundle);

/// Parses text produced by serialize(); std::runtime_error on malformed
/// input or format mismatch.
ExportBundle parse_bundle(const std::string& text);

/// Deterministic JSON for a verification run.
std::string serialize_reports(const std::vector<RelationReport>& reports,
                              double tol);

} // namespace kacmod
