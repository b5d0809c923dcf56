#include "isospec/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace isospec {

ReportRow& ReportRow::param(std::string name, double value) {
  parameters.emplace_back(std::move(name), value);
  return *this;
}

ReportRow& ReportRow::quantity(std::string name, double value) {
  quantities.emplace_back(std::move(name), value);
  return *this;
}

ReportRow& ReportRow::verdict(std::string name, std::string value) {
  verdicts.emplace_back(std::move(name), std::move(value));
  return *this;
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json number_json(double value) {
  if (!std::isfinite(value)) return format_number(value);
  // Round-trip through the 12-digit text so the serializer's shortest form
  // never shows more digits than the CSV.
  return std::stod(format_number(value));
}

template <typename Pairs>
void collect(std::vector<std::string>& names, const Pairs& pairs) {
  for (const auto& [name, value] : pairs) {
    if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
  }
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <typename Pairs, typename Format>
std::string lookup(const Pairs& pairs, const std::string& name, Format format) {
  for (const auto& [key, value] : pairs) {
    if (key == name) return format(value);
  }
  return "";
}

}  // namespace

void write_csv(std::ostream& out, const Report& report) {
  if (report.empty()) return;
  std::vector<std::string> params, quantities, verdicts;
  for (const auto& row : report) {
    collect(params, row.parameters);
    collect(quantities, row.quantities);
    collect(verdicts, row.verdicts);
  }

  out << "scenario";
  for (const auto* names : {&params, &quantities, &verdicts}) {
    for (const auto& name : *names) out << ',' << csv_escape(name);
  }
  out << '\n';

  const auto num = [](double v) { return format_number(v); };
  const auto text = [](const std::string& v) { return csv_escape(v); };
  for (const auto& row : report) {
    out << csv_escape(row.scenario);
    for (const auto& name : params) out << ',' << lookup(row.parameters, name, num);
    for (const auto& name : quantities) out << ',' << lookup(row.quantities, name, num);
    for (const auto& name : verdicts) out << ',' << lookup(row.verdicts, name, text);
    out << '\n';
  }
}

void write_json(std::ostream& out, const Report& report) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : report) {
    ordered_json obj;
    obj["scenario"] = row.scenario;
    obj["parameters"] = ordered_json::object();
    for (const auto& [name, value] : row.parameters) obj["parameters"][name] = number_json(value);
    obj["quantities"] = ordered_json::object();
    for (const auto& [name, value] : row.quantities) obj["quantities"][name] = number_json(value);
    obj["verdicts"] = ordered_json::object();
    for (const auto& [name, value] : row.verdicts) obj["verdicts"][name] = value;
    rows.push_back(std::move(obj));
  }
  out << rows.dump(2) << '\n';
}

std::string to_csv(const Report& report) {
  std::ostringstream out;
  write_csv(out, report);
  return out.str();
}

std::string to_json(const Report& report) {
  std::ostringstream out;
  write_json(out, report);
  return out.str();
}

}  // namespace isospec
