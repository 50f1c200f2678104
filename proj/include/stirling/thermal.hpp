#pragma once

#include "stirling/media.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace stirling {

/// Thrown by relative_entropy_direct when the support condition fails
/// (p_k > 0 on a level where q_k = 0).
class DivergenceError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Equilibrium statistical mechanics over a fixed spectrum, k_B = 1. Every
// exponential sum is taken relative to the ground-state energy, so large
// beta * |E| cannot overflow the intermediate sums; quantities that stay
// representable (populations, U, S, F, ln Z, relative entropies) come out
// finite even when Z itself exceeds the double range.

/// ln Z = ln sum_k exp(-beta E_k).
double log_partition_function(std::span<const double> energies, double beta);

/// Z = sum_k exp(-beta E_k). May round to +inf when the true value exceeds
/// the double range (deeply negative E_min at large beta); use
/// log_partition_function in that regime.
double partition_function(std::span<const double> energies, double beta);

/// Gibbs populations p_k = exp(-beta E_k) / Z, in spectrum order.
std::vector<double> populations(std::span<const double> energies, double beta);

/// U = sum_k p_k E_k.
double internal_energy(std::span<const double> energies, double beta);

/// S = beta U + ln Z, the von Neumann entropy of the Gibbs state.
double entropy(std::span<const double> energies, double beta);

/// F = -ln(Z)/beta = U - S/beta.
double free_energy(std::span<const double> energies, double beta);

/// S(rho_i || rho_f) for two Gibbs states of one spectrum:
/// U_i (beta_f - beta_i) + ln(Z_f / Z_i). Nonnegative; exactly zero when
/// beta_initial == beta_final.
double relative_entropy_gibbs(std::span<const double> energies, double beta_initial,
                              double beta_final);

/// S(p || q) = sum_k p_k (ln p_k - ln q_k) over levels with p_k > 0
/// (0 ln 0 = 0). Both inputs must be distributions of equal length; a level
/// with p_k > 0 and q_k = 0 raises DivergenceError.
double relative_entropy_direct(std::span<const double> p, std::span<const double> q);

/// Gibbs state of a spectrum at inverse temperature beta, with the scalar
/// summaries cached at construction. Immutable; safe to share across threads.
class ThermalState {
public:
    /// Throws std::invalid_argument unless the spectrum is non-empty, finite
    /// and ascending, and beta is positive and finite.
    ThermalState(Spectrum spectrum, double beta);

    const Spectrum& spectrum() const noexcept { return spectrum_; }
    double beta() const noexcept { return beta_; }
    double temperature() const noexcept { return 1.0 / beta_; }
    double log_z() const noexcept { return log_z_; }
    double z() const noexcept { return z_; }
    double u() const noexcept { return u_; }
    double s() const noexcept { return s_; }
    double f() const noexcept { return f_; }
    std::vector<double> populations() const;

private:
    Spectrum spectrum_;
    double beta_;
    double log_z_ = 0.0;
    double z_ = 0.0;
    double u_ = 0.0;
    double s_ = 0.0;
    double f_ = 0.0;
};

}  // namespace stirling
