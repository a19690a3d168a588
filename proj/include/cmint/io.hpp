#pragma once

// Field files and tabular output.

#include <optional>
#include <string>
#include <vector>

#include "cmint/applications.hpp"
#include "cmint/bm.hpp"

namespace cmint {

/// {"D": 5, "delta": {"x": -13, "y": 1, "den": 2}, "mode": "strict"}.
/// `mode_override` wins over the file's mode. Throws FieldRejected.
CMFieldData parse_field(const Json& j, std::optional<Mode> mode_override = std::nullopt);
CMFieldData load_field(const std::string& path, std::optional<Mode> mode_override = std::nullopt);

Json field_to_json(const CMFieldData& field);

/// Quotes a CSV cell when it contains a comma, quote or newline.
std::string csv_cell(const std::string& text);

/// One row per per-n term; a report without entries still yields one row.
std::string bm_reports_csv(const std::vector<BmReport>& reports);

/// Columns m,p,coefficient.
std::string log_combos_csv(const std::vector<std::pair<long, LogCombo>>& rows);

std::string certificate_csv(const BadReductionCertificate& cert);
std::string igusa_csv(const IgusaBounds& bounds);

}  // namespace cmint
