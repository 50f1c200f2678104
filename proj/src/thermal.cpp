#include "stirling/thermal.hpp"

#include <algorithm>
#include <cmath>

namespace stirling {

namespace {

void check_beta(double beta) {
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw std::invalid_argument("beta must be positive and finite");
}

void check_energies(std::span<const double> energies) {
    if (energies.empty())
        throw std::invalid_argument("spectrum must be non-empty");
    for (double e : energies)
        if (!std::isfinite(e))
            throw std::invalid_argument("spectrum must be finite");
}

// Boltzmann sums with the ground-state energy factored out. weight_sum lies in
// [1, n] and energy_sum in [0, n * max_gap * exp(-beta gap)], so neither can
// overflow regardless of beta * |E|.
struct ShiftedSums {
    double e_min = 0.0;
    double weight_sum = 0.0;  // sum_k exp(-beta (E_k - e_min))
    double energy_sum = 0.0;  // sum_k (E_k - e_min) exp(-beta (E_k - e_min))
};

ShiftedSums shifted_sums(std::span<const double> energies, double beta) {
    ShiftedSums s;
    s.e_min = *std::min_element(energies.begin(), energies.end());
    for (double e : energies) {
        const double w = std::exp(-beta * (e - s.e_min));
        s.weight_sum += w;
        s.energy_sum += (e - s.e_min) * w;
    }
    return s;
}

}  // namespace

double log_partition_function(std::span<const double> energies, double beta) {
    check_energies(energies);
    check_beta(beta);
    const ShiftedSums s = shifted_sums(energies, beta);
    return -beta * s.e_min + std::log(s.weight_sum);
}

double partition_function(std::span<const double> energies, double beta) {
    return std::exp(log_partition_function(energies, beta));
}

std::vector<double> populations(std::span<const double> energies, double beta) {
    check_energies(energies);
    check_beta(beta);
    const ShiftedSums s = shifted_sums(energies, beta);
    std::vector<double> p(energies.size());
    for (std::size_t k = 0; k < p.size(); ++k)
        p[k] = std::exp(-beta * (energies[k] - s.e_min)) / s.weight_sum;
    return p;
}

double internal_energy(std::span<const double> energies, double beta) {
    check_energies(energies);
    check_beta(beta);
    const ShiftedSums s = shifted_sums(energies, beta);
    return s.e_min + s.energy_sum / s.weight_sum;
}

double entropy(std::span<const double> energies, double beta) {
    check_energies(energies);
    check_beta(beta);
    const ShiftedSums s = shifted_sums(energies, beta);
    // beta U + ln Z with the e_min terms cancelled; both summands are O(1).
    return beta * (s.energy_sum / s.weight_sum) + std::log(s.weight_sum);
}

double free_energy(std::span<const double> energies, double beta) {
    check_energies(energies);
    check_beta(beta);
    const ShiftedSums s = shifted_sums(energies, beta);
    return s.e_min - std::log(s.weight_sum) / beta;
}

double relative_entropy_gibbs(std::span<const double> energies, double beta_initial,
                              double beta_final) {
    check_energies(energies);
    check_beta(beta_initial);
    check_beta(beta_final);
    const ShiftedSums si = shifted_sums(energies, beta_initial);
    const ShiftedSums sf = shifted_sums(energies, beta_final);
    // U_i (beta_f - beta_i) + ln(Z_f/Z_i); the -E_min (beta_f - beta_i) pieces
    // of both terms are combined so nothing large is ever formed.
    const double u_above_ground = si.energy_sum / si.weight_sum;
    return u_above_ground * (beta_final - beta_initial) +
           std::log(sf.weight_sum / si.weight_sum);
}

double relative_entropy_direct(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size())
        throw std::invalid_argument("distributions must have equal length");
    constexpr double kSumTolerance = 1e-9;
    double p_sum = 0.0, q_sum = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (!(p[k] >= 0.0) || !(q[k] >= 0.0))
            throw std::invalid_argument("probabilities must be nonnegative");
        p_sum += p[k];
        q_sum += q[k];
    }
    if (std::abs(p_sum - 1.0) > kSumTolerance || std::abs(q_sum - 1.0) > kSumTolerance)
        throw std::invalid_argument("distributions must sum to one");
    double sum = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0.0) continue;  // 0 ln 0 = 0
        if (q[k] == 0.0)
            throw DivergenceError("support violation: p_k > 0 where q_k = 0");
        sum += p[k] * (std::log(p[k]) - std::log(q[k]));
    }
    return sum;
}

ThermalState::ThermalState(Spectrum spectrum, double beta)
    : spectrum_(std::move(spectrum)), beta_(beta) {
    check_energies(spectrum_);
    check_beta(beta_);
    if (!std::is_sorted(spectrum_.begin(), spectrum_.end()))
        throw std::invalid_argument("spectrum must be sorted ascending");
    const ShiftedSums s = shifted_sums(spectrum_, beta_);
    log_z_ = -beta_ * s.e_min + std::log(s.weight_sum);
    z_ = std::exp(log_z_);
    u_ = s.e_min + s.energy_sum / s.weight_sum;
    s_ = beta_ * (s.energy_sum / s.weight_sum) + std::log(s.weight_sum);
    f_ = s.e_min - std::log(s.weight_sum) / beta_;
}

std::vector<double> ThermalState::populations() const {
    return stirling::populations(spectrum_, beta_);
}

}  // namespace stirling
