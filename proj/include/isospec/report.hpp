#pragma once

// Tabular report rows and their CSV / JSON encodings.
//
// Numbers are written with 12 significant digits; infinities as "inf" and
// "-inf" (strings in JSON), NaN as "nan". Key order is insertion order.

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace isospec {

struct ReportRow {
  std::string scenario;
  std::vector<std::pair<std::string, double>> parameters;
  std::vector<std::pair<std::string, double>> quantities;
  std::vector<std::pair<std::string, std::string>> verdicts;

  ReportRow& param(std::string name, double value);
  ReportRow& quantity(std::string name, double value);
  ReportRow& verdict(std::string name, std::string value);
};

using Report = std::vector<ReportRow>;

/// 12 significant digits, "inf" / "-inf" / "nan" for non-finite values, and
/// negative zero printed as "0".
std::string format_number(double value);

/// Header row (scenario, parameters, quantities, verdicts; union of all rows in
/// first-seen order) followed by one line per row. Empty report -> empty output.
void write_csv(std::ostream& out, const Report& report);
/// JSON array with one object per row.
void write_json(std::ostream& out, const Report& report);

std::string to_csv(const Report& report);
std::string to_json(const Report& report);

}  // namespace isospec
