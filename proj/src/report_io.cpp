#include "stirling/report_io.hpp"

#include <cstdio>
#include <ostream>

#include "json.hpp"

namespace stirling {

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

std::vector<std::pair<std::string, ReportValue>> report_fields(const CycleReport& r) {
    return {
        {"medium", std::string(to_string(r.medium))},
        {"lambda1", r.lambda1},
        {"lambda2", r.lambda2},
        {"j", r.j},
        {"t_hot", r.t_hot},
        {"t_cold", r.t_cold},
        {"q1", r.q1},
        {"q2", r.q2},
        {"q3", r.q3},
        {"q4", r.q4},
        {"delta_q", r.delta_q},
        {"q_h", r.q_h},
        {"q_c", r.q_c},
        {"work", r.work},
        {"w_cost_min", r.w_cost_min},
        {"w_cost_applied", r.w_cost_applied},
        {"w_cost_sufficient", r.w_cost_sufficient},
        {"w_cost_required", r.w_cost_required},
        {"eta_regen_free", r.eta_regen_free},
        {"eta_regen_cost", r.eta_regen_cost},
        {"eta_conventional", r.eta_conventional},
        {"eta_carnot", r.eta_carnot},
        {"sigma", r.sigma},
        {"mode", std::string(to_string(r.mode))},
        {"flag_cost_below_min", r.flag_cost_below_min},
        {"flag_negative_coupling", r.flag_negative_coupling},
    };
}

void write_report_kv(std::ostream& out, const CycleReport& report) {
    for (const auto& [name, value] : report_fields(report)) {
        if (const auto* d = std::get_if<double>(&value)) {
            out << name << " = " << format_number(*d) << '\n';
        } else if (const auto* opt = std::get_if<std::optional<double>>(&value)) {
            if (opt->has_value()) out << name << " = " << format_number(**opt) << '\n';
        } else if (const auto* s = std::get_if<std::string>(&value)) {
            out << name << " = " << *s << '\n';
        } else if (const auto* b = std::get_if<bool>(&value)) {
            out << name << " = " << (*b ? 1 : 0) << '\n';
        }
    }
}

void write_report_json(std::ostream& out, const CycleReport& report) {
    nlohmann::ordered_json doc;
    for (const auto& [name, value] : report_fields(report)) {
        if (const auto* d = std::get_if<double>(&value)) {
            doc[name] = *d;
        } else if (const auto* opt = std::get_if<std::optional<double>>(&value)) {
            if (opt->has_value())
                doc[name] = **opt;
            else
                doc[name] = nullptr;
        } else if (const auto* s = std::get_if<std::string>(&value)) {
            doc[name] = *s;
        } else if (const auto* b = std::get_if<bool>(&value)) {
            doc[name] = *b;
        }
    }
    out << doc.dump(2) << '\n';
}

void write_report_csv(std::ostream& out, const CycleReport& report) {
    const auto fields = report_fields(report);
    for (std::size_t i = 0; i < fields.size(); ++i)
        out << (i ? "," : "") << fields[i].first;
    out << '\n';
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out << ',';
        const ReportValue& value = fields[i].second;
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

}  // namespace stirling
