#pragma once

#include <functional>
#include <string_view>
#include <vector>

namespace stirling {

/// Control parameters of a working medium. Dimensionless units, hbar = k_B = 1.
struct MediumParams {
    double lambda = 0.0;  ///< field strength (level-splitting knob)
    double j = 0.0;       ///< exchange coupling; ignored by the single-spin medium
};

/// Energy eigenvalues at fixed control parameters, ascending; degenerate levels
/// appear as repeated entries.
using Spectrum = std::vector<double>;

enum class MediumKind { SingleSpin, CoupledSpins, Custom };

using SpectrumFn = std::function<Spectrum(const MediumParams&)>;

/// A working medium maps control parameters to an energy spectrum.
///
/// SingleSpin:   H = (lambda/2) sigma_z, levels {-lambda/2, +lambda/2}.
/// CoupledSpins: H = (lambda/2)(sigma_z^1 + sigma_z^2)
///                   + j (sigma_+^1 sigma_-^2 + sigma_-^1 sigma_+^2).
///               The Hamiltonian is block diagonal: the aligned states carry
///               +/-lambda and the 2x2 flip-flop block has eigenvalues +/-j,
///               so the levels are {-lambda, -j, +j, +lambda} as a multiset.
///
/// Negative couplings are accepted (the multiset is even in j); the cycle
/// report flags them since only j >= 0 is the physically studied regime.
class WorkingMedium {
public:
    static WorkingMedium single_spin();
    static WorkingMedium coupled_spins();
    static WorkingMedium custom(SpectrumFn fn);

    MediumKind kind() const noexcept { return kind_; }

    /// Energy spectrum at the given parameters, sorted ascending.
    /// Throws std::invalid_argument on non-finite parameters or an invalid
    /// custom spectrum.
    Spectrum spectrum(const MediumParams& params) const;

private:
    explicit WorkingMedium(MediumKind kind, SpectrumFn fn = nullptr)
        : kind_(kind), custom_(std::move(fn)) {}

    MediumKind kind_;
    SpectrumFn custom_;
};

std::string_view to_string(MediumKind kind);

}  // namespace stirling
