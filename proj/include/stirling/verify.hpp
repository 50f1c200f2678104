#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace stirling {

struct VerifyOptions {
    std::uint64_t seed = 1;
    int trials = 10000;   ///< randomized identity trials
    int grid_steps = 50;  ///< per-axis resolution of the cycle lattices
    bool inject_fault = false;  ///< test hook: flips a sign inside the
                                ///< Carnot-deficit identity residual
};

struct PropertyResult {
    std::string name;
    long checks = 0;
    long failures = 0;
    double tolerance = 0.0;       ///< 0 for predicate-style properties
    double worst_residual = 0.0;  ///< largest |residual| seen (residual properties)
    std::string worst_case;       ///< parameter tuple of the worst residual or first failure
};

/// Runs every numerical identity and bound the library promises, over
/// randomized spectra and the figure-style cycle lattices. Deterministic for
/// a fixed seed.
std::vector<PropertyResult> run_property_suite(const VerifyOptions& options);

/// One line per property plus a closing summary; returns the number of
/// failing properties.
int print_summary(std::ostream& out, std::span<const PropertyResult> results);

}  // namespace stirling
