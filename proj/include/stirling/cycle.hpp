#pragma once

#include "stirling/media.hpp"
#include "stirling/thermal.hpp"

#include <optional>
#include <string_view>

namespace stirling {

enum class CostModelKind { None, MinCarnot, Fixed };

/// How the regeneration work input is charged when forming the modified
/// efficiency. MinCarnot charges the reversible heat-pump minimum
/// |Q2| (T_h - T_c) / T_c; Fixed charges a caller-supplied value (flagged in
/// the report when it undercuts that minimum); None charges nothing.
struct CostModel {
    CostModelKind kind = CostModelKind::MinCarnot;
    double fixed_value = 0.0;

    static CostModel none() noexcept { return {CostModelKind::None, 0.0}; }
    static CostModel min_carnot() noexcept { return {CostModelKind::MinCarnot, 0.0}; }
    static CostModel fixed(double value) noexcept { return {CostModelKind::Fixed, value}; }
};

struct CycleParams {
    WorkingMedium medium = WorkingMedium::single_spin();
    double lambda1 = 0.0;  ///< field during the D->A isochore / start of the hot isotherm
    double lambda2 = 0.0;  ///< field during the B->C isochore / end of the hot isotherm
    double j = 0.0;        ///< coupling (coupled medium only)
    double t_hot = 0.0;
    double t_cold = 0.0;
    CostModel cost_model = CostModel::min_carnot();
};

/// Throws std::invalid_argument unless all parameters are finite,
/// t_hot > t_cold > 0 and any fixed cost is nonnegative.
void validate(const CycleParams& params);

/// The four endpoint Gibbs states of one cycle:
/// A = (lambda1, T_h), B = (lambda2, T_h), C = (lambda2, T_c), D = (lambda1, T_c).
/// A/D and B/C share spectra (isochore pairs); A/B and C/D share temperatures
/// (isotherm pairs).
struct CyclePoints {
    ThermalState a, b, c, d;
};

/// Heat absorbed by the working substance per stroke (positive into the medium):
/// isotherms carry T dS, isochores carry the internal-energy change.
struct Heats {
    double q1;  ///< A->B at T_h: T_h (S_B - S_A)
    double q2;  ///< B->C at lambda2: U_C - U_B
    double q3;  ///< C->D at T_c: T_c (S_D - S_C)
    double q4;  ///< D->A at lambda1: U_A - U_D
};

/// Regenerator bookkeeping. delta_q = q2 + q4 is the net heat the working
/// substance draws from the regenerator over the two isochores; a surplus
/// (delta_q > 0) must come from the hot bath, a shortfall is dumped to the
/// cold bath. q_h + q_c always equals the total heat intake.
struct RegenSplit {
    double delta_q;
    double q_h;  ///< q1 + max(0, delta_q)
    double q_c;  ///< q3 + min(0, delta_q)
};

enum class CycleMode { Engine, NotEngine, Degenerate };

std::string_view to_string(CycleMode mode);

/// |work| at or below this floor classifies the cycle as degenerate, so sweep
/// curves do not flicker between modes at the W = 0 boundary.
inline constexpr double kDegenerateWorkFloor = 1e-14;

/// Efficiencies are absent (not NaN, not zero) whenever the cycle is not in
/// engine mode or the respective denominator is nonpositive.
struct Efficiencies {
    std::optional<double> regen_free;    ///< W / q_h
    std::optional<double> regen_cost;    ///< W / (q_h + w_cost_applied)
    std::optional<double> conventional;  ///< W / (q1 + q4)
    double carnot = 0.0;                 ///< 1 - T_c / T_h
};

/// Lower bounds on the regeneration work input. `sufficient` is the weakest
/// charge that forces the modified efficiency back under the Carnot bound;
/// `required` additionally enforces the heat-pump minimum.
struct CostBounds {
    double sufficient;  ///< (q1 + q4 - q_h) - sigma T_c / eta_carnot
    double required;    ///< max(|q2| (T_h - T_c)/T_c, sufficient)
};

/// Everything known about one evaluated cycle.
struct CycleReport {
    MediumKind medium = MediumKind::SingleSpin;
    double lambda1 = 0.0, lambda2 = 0.0, j = 0.0;
    double t_hot = 0.0, t_cold = 0.0;

    double q1 = 0.0, q2 = 0.0, q3 = 0.0, q4 = 0.0;
    double delta_q = 0.0, q_h = 0.0, q_c = 0.0;
    double work = 0.0;  ///< q1 + q2 + q3 + q4

    double w_cost_min = 0.0;      ///< Carnot heat-pump minimum |q2|(T_h - T_c)/T_c
    double w_cost_applied = 0.0;  ///< per the cost model
    double w_cost_sufficient = 0.0;
    double w_cost_required = 0.0;

    std::optional<double> eta_regen_free;
    std::optional<double> eta_regen_cost;
    std::optional<double> eta_conventional;
    double eta_carnot = 0.0;

    double sigma = 0.0;  ///< cycle entropy production S(B||C) + S(D||A), dimensionless

    CycleMode mode = CycleMode::Degenerate;
    bool flag_cost_below_min = false;     ///< fixed cost undercuts the heat-pump minimum
    bool flag_negative_coupling = false;  ///< coupled medium evaluated at j < 0
};

CyclePoints build_points(const CycleParams& params);

Heats heats(const CyclePoints& points);

RegenSplit regen_bookkeeping(const Heats& q);

/// The reversible heat-pump minimum for upgrading |q2| from T_c to T_h.
double min_carnot_cost(double q2, double t_hot, double t_cold);

/// Cost charged by the given model. Throws std::invalid_argument for a fixed
/// cost that is negative or non-finite.
double regeneration_cost(double q2, double t_hot, double t_cold, const CostModel& model);

Efficiencies efficiencies(const Heats& q, const RegenSplit& split, double w_cost_applied,
                          double t_hot, double t_cold);

/// Sigma = S(rho_B || rho_C) + S(rho_D || rho_A) >= 0; zero only for equal
/// bath temperatures.
double entropy_production(const CyclePoints& points);

/// Sigma / (beta_c (q1 + q4)), the gap between the Carnot efficiency and the
/// conventional-cycle efficiency. Absent when q1 + q4 <= 0.
std::optional<double> carnot_deficit_conventional(const CyclePoints& points, const Heats& q);

CostBounds cost_bounds(const Heats& q, double q_h, double sigma, double t_hot, double t_cold);

/// Builds the endpoint states and composes all of the above into a report.
CycleReport analyze(const CycleParams& params);

}  // namespace stirling
