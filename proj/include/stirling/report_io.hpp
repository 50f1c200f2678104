#pragma once

#include "stirling/cycle.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace stirling {

/// One serialized report field. An empty optional marks a quantity that is
/// undefined for the cycle (rendered as an omitted key, an empty CSV cell or
/// a JSON null, never as NaN or a sentinel number).
using ReportValue = std::variant<double, std::optional<double>, std::string, bool>;

/// The report flattened into (name, value) pairs in the stable order shared
/// by every writer. Field names are part of the output contract.
std::vector<std::pair<std::string, ReportValue>> report_fields(const CycleReport& report);

/// 12 significant digits, C locale, no trailing padding.
std::string format_number(double value);

void write_report_kv(std::ostream& out, const CycleReport& report);
void write_report_json(std::ostream& out, const CycleReport& report);
void write_report_csv(std::ostream& out, const CycleReport& report);

}  // namespace stirling
