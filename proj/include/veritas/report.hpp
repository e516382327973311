#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "veritas/fusion.hpp"

namespace veritas {

struct ReportRow {
  std::string name;
  std::optional<double> overall;        // fractions in [0, 1]
  std::optional<double> truthful_acc;
  std::optional<double> deceptive_acc;
  bool computed = false;                // false -> published reference value
};

// The published baselines and results this pipeline is compared against,
// flagged as references (not reproduced here).
const std::vector<ReportRow>& reference_rows();

std::vector<ReportRow> assemble_report(std::span<const RowResult> computed);

// Aligned human-readable table (percentages).
std::string render_report_text(std::span<const ReportRow> rows);

// CSV with header row_name,overall,truthful_acc,deceptive_acc,source.
std::string render_report_csv(std::span<const ReportRow> rows);

std::vector<ReportRow> parse_report_csv(const std::string& csv_text);

}  // namespace veritas
