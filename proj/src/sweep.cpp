#include "stirling/sweep.hpp"

#include <cmath>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace stirling {

std::string_view to_string(SweepKnob knob) {
    switch (knob) {
        case SweepKnob::Kappa: return "kappa";
        case SweepKnob::J: return "j";
        case SweepKnob::Lambda1: return "lambda1";
        case SweepKnob::Lambda2: return "lambda2";
        case SweepKnob::THot: return "th";
        case SweepKnob::TCold: return "tc";
    }
    return "unknown";
}

std::optional<SweepKnob> knob_from_string(std::string_view name) {
    if (name == "kappa") return SweepKnob::Kappa;
    if (name == "j") return SweepKnob::J;
    if (name == "lambda1") return SweepKnob::Lambda1;
    if (name == "lambda2") return SweepKnob::Lambda2;
    if (name == "th") return SweepKnob::THot;
    if (name == "tc") return SweepKnob::TCold;
    return std::nullopt;
}

void validate(const SweepSpec& spec) {
    if (spec.steps < 2)
        throw std::invalid_argument("sweep needs at least 2 steps");
    if (!std::isfinite(spec.start) || !std::isfinite(spec.stop))
        throw std::invalid_argument("sweep range must be finite");
    if (spec.start == spec.stop)
        throw std::invalid_argument("sweep start and stop must differ");
    if (spec.knob == SweepKnob::Kappa &&
        (spec.base.lambda2 == 0.0 || !std::isfinite(spec.base.lambda2)))
        throw std::invalid_argument("kappa sweep requires a nonzero fixed lambda2");
    // Endpoint validity implies validity across the linear grid: only the
    // swept value changes, and every constraint is an interval condition.
    validate(params_at(spec, spec.start));
    validate(params_at(spec, spec.stop));
}

std::vector<double> knob_values(const SweepSpec& spec) {
    std::vector<double> grid(static_cast<std::size_t>(spec.steps));
    const double span = spec.stop - spec.start;
    for (int i = 0; i < spec.steps; ++i)
        grid[static_cast<std::size_t>(i)] =
            i == spec.steps - 1
                ? spec.stop
                : spec.start + span * (static_cast<double>(i) / (spec.steps - 1));
    return grid;
}

CycleParams params_at(const SweepSpec& spec, double knob_value) {
    CycleParams p = spec.base;
    switch (spec.knob) {
        case SweepKnob::Kappa: p.lambda1 = knob_value * p.lambda2; break;
        case SweepKnob::J: p.j = knob_value; break;
        case SweepKnob::Lambda1: p.lambda1 = knob_value; break;
        case SweepKnob::Lambda2: p.lambda2 = knob_value; break;
        case SweepKnob::THot: p.t_hot = knob_value; break;
        case SweepKnob::TCold: p.t_cold = knob_value; break;
    }
    return p;
}

std::vector<CycleReport> evaluate(const SweepSpec& spec) {
    validate(spec);
    const std::vector<double> grid = knob_values(spec);
    std::vector<CycleReport> rows(grid.size());
    const std::int64_t n = static_cast<std::int64_t>(grid.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i)
        rows[static_cast<std::size_t>(i)] =
            analyze(params_at(spec, grid[static_cast<std::size_t>(i)]));
    return rows;
}

std::vector<CycleReport> evaluate_serial(const SweepSpec& spec) {
    validate(spec);
    const std::vector<double> grid = knob_values(spec);
    std::vector<CycleReport> rows;
    rows.reserve(grid.size());
    for (double v : grid) rows.push_back(analyze(params_at(spec, v)));
    return rows;
}

void write_csv(std::ostream& out, const SweepSpec& spec, std::span<const CycleReport> rows) {
    const std::vector<double> grid = knob_values(spec);
    out << "knob,knob_value";
    if (!rows.empty())
        for (const auto& [name, value] : report_fields(rows[0])) out << ',' << name;
    out << '\n';
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out << to_string(spec.knob) << ',' << format_number(grid[i]);
        for (const auto& [name, value] : report_fields(rows[i])) {
            out << ',';
            if (const auto* d = std::get_if<double>(&value)) {
                out << format_number(*d);
            } else if (const auto* opt = std::get_if<std::optional<double>>(&value)) {
                if (opt->has_value()) out << format_number(**opt);
            } else if (const auto* s = std::get_if<std::string>(&value)) {
                out << *s;
            } else if (const auto* b = std::get_if<bool>(&value)) {
                out << (*b ? 1 : 0);
            }
        }
        out << '\n';
    }
}

void write_json(std::ostream& out, const SweepSpec& spec, std::span<const CycleReport> rows) {
    const std::vector<double> grid = knob_values(spec);
    nlohmann::ordered_json doc;
    doc["knob"] = to_string(spec.knob);
    doc["rows"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        nlohmann::ordered_json row;
        row["knob_value"] = grid[i];
        for (const auto& [name, value] : report_fields(rows[i])) {
            if (const auto* d = std::get_if<double>(&value)) {
                row[name] = *d;
            } else if (const auto* opt = std::get_if<std::optional<double>>(&value)) {
                if (opt->has_value())
                    row[name] = **opt;
                else
                    row[name] = nullptr;
            } else if (const auto* s = std::get_if<std::string>(&value)) {
                row[name] = *s;
            } else if (const auto* b = std::get_if<bool>(&value)) {
                row[name] = *b;
            }
        }
        doc["rows"].push_back(std::move(row));
    }
    out << doc.dump(2) << '\n';
}

std::string plot_script(const SweepSpec& spec, const std::string& csv_path) {
    std::ostringstream out;
    out << "# Efficiency curves from a cycle sweep. Run: gnuplot -persist <this file>\n"
        << "csv = \"" << csv_path << "\"\n"
        << "set datafile separator \",\"\n"
        << "set datafile missing \"\"\n"
        << "set key autotitle columnhead\n"
        << "set xlabel \"" << to_string(spec.knob) << "\"\n"
        << "set ylabel \"efficiency\"\n"
        << "set grid\n"
        << "plot csv using (column(\"knob_value\")):(column(\"eta_regen_free\")) "
           "with lines lw 2 title \"regenerative, cost-free\", \\\n"
        << "     csv using (column(\"knob_value\")):(column(\"eta_regen_cost\")) "
           "with lines lw 2 title \"regenerative, with cost\", \\\n"
        << "     csv using (column(\"knob_value\")):(column(\"eta_conventional\")) "
           "with lines lw 2 title \"conventional\", \\\n"
        << "     csv using (column(\"knob_value\")):(column(\"eta_carnot\")) "
           "with lines dashtype 3 title \"Carnot bound\"\n";
    return out.str();
}

}  // namespace stirling
