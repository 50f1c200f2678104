#pragma once

#include "stirling/cycle.hpp"
#include "stirling/report_io.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace stirling {

enum class SweepKnob { Kappa, J, Lambda1, Lambda2, THot, TCold };

std::string_view to_string(SweepKnob knob);
std::optional<SweepKnob> knob_from_string(std::string_view name);

/// A linear grid over one control knob; all other parameters come from
/// `base`. Kappa sets lambda1 = kappa * lambda2 and needs a nonzero fixed
/// lambda2.
struct SweepSpec {
    SweepKnob knob = SweepKnob::Kappa;
    double start = 0.0;
    double stop = 0.0;
    int steps = 181;
    CycleParams base;
};

/// Throws std::invalid_argument unless steps >= 2, start != stop, the grid is
/// finite, and the cycle parameters are valid at both grid endpoints.
void validate(const SweepSpec& spec);

/// The closed, linearly spaced grid; first value is exactly `start`, last is
/// exactly `stop`.
std::vector<double> knob_values(const SweepSpec& spec);

CycleParams params_at(const SweepSpec& spec, double knob_value);

/// Evaluates every grid point. Rows are indexed by grid position, so the
/// result (and any file written from it) is identical whichever evaluator or
/// thread count produced it.
std::vector<CycleReport> evaluate(const SweepSpec& spec);         // OpenMP when available
std::vector<CycleReport> evaluate_serial(const SweepSpec& spec);  // reference path

void write_csv(std::ostream& out, const SweepSpec& spec, std::span<const CycleReport> rows);
void write_json(std::ostream& out, const SweepSpec& spec, std::span<const CycleReport> rows);

/// gnuplot script plotting the three efficiency curves plus the Carnot bound
/// against the swept knob, reading from `csv_path`.
std::string plot_script(const SweepSpec& spec, const std::string& csv_path);

}  // namespace stirling
