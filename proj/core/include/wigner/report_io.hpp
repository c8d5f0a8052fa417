#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "wigner/admissibility.hpp"
#include "wigner/evolution.hpp"
#include "wigner/residual.hpp"

namespace wigner {

/// JSON text for a report (stable key order, round-trip safe).
std::string to_json_string(const AdmissibilityReport& report, int indent = 2);
std::string to_json_string(const ResidualReport& report, int indent = 2);

/// Inverse parsers; throw ValidationError on malformed input.
AdmissibilityReport admissibility_report_from_json(const std::string& text);
ResidualReport residual_report_from_json(const std::string& text);

/// Writes a CSV table: header row, comma separators, LF line endings,
/// 17 significant digits so values round-trip exactly.
void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

/// Full-precision decimal rendering used across all text output.
std::string format_full(double v);

/// Snapshot of a gridded field as CSV columns (q, p, F).
void write_field_csv(std::ostream& os, const Field2D& field);

/// Snapshot as a one-line JSON header (authoritative metadata: dimensions,
/// box, dt, t_final and free-form parameters) followed by raw little-endian
/// doubles in row-major order.
void write_field_binary(std::ostream& os, const Field2D& field, double dt, double t_final,
                        const std::string& parameters_json);

}  // namespace wigner
