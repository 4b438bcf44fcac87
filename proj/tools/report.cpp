#include "report.hpp"

#include <cstdio>
#include <regex>

#include "adelic/errors.hpp"

namespace adelic::cli {
namespace {

std::string scalar_text(const nlohmann::json& v) {
  if (v.is_number_float()) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
    return buf;
  }
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Dotted-path leaves of a JSON value; arrays of scalars stay on one line.
void flatten(const nlohmann::json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (const auto& [k, child] : v.items()) flatten(child, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  if (v.is_array()) {
    bool scalars = true;
    for (const auto& e : v) scalars = scalars && !e.is_structured();
    if (!scalars) {
      for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "." + std::to_string(i), out);
      return;
    }
    std::string joined;
    for (std::size_t i = 0; i < v.size(); ++i) joined += (i ? ";" : "") + scalar_text(v[i]);
    out.emplace_back(prefix, joined);
    return;
  }
  out.emplace_back(prefix, scalar_text(v));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
  return quoted + "\"";
}

}  // namespace

Format format_from_string(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "text") return Format::text;
  throw DomainError("unknown format '" + s + "' (expected json, csv or text)");
}

std::complex<double> parse_complex(const std::string& text) {
  static const std::regex pattern(
      R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*(?:([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*[ij])?\s*$)");
  static const std::regex pure_imag(R"(^\s*([+-]?)((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*[ij]\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, pure_imag)) {
    const double mag = m[2].matched ? std::stod(m[2].str()) : 1.0;
    return {0.0, m[1].str() == "-" ? -mag : mag};
  }
  if (!text.empty() && std::regex_match(text, m, pattern) && m[1].matched) {
    const double re = std::stod(m[1].str());
    double im = 0.0;
    if (m[2].matched) {
      im = m[3].matched ? std::stod(m[3].str()) : 1.0;
      if (m[2].str() == "-") im = -im;
    }
    return {re, im};
  }
  throw DomainError("cannot parse complex number '" + text + "' (expected a, a+bi or bi)");
}

nlohmann::json complex_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

std::string Report::render(Format format) const {
  nlohmann::json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["command"] = command;
  doc["inputs"] = inputs;
  doc["result"] = result;
  doc["error_estimate"] = error_estimate;
  doc["oracles"] = oracles;

  if (format == Format::json) return doc.dump(2) + "\n";

  if (format == Format::text) {
    std::vector<std::pair<std::string, std::string>> lines;
    flatten(doc, "", lines);
    std::string out;
    for (const auto& [k, v] : lines) out += k + " = " + v + "\n";
    return out;
  }

  std::string out;
  if (!columns.empty()) {
    for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + csv_field(columns[i]);
    out += "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_field(scalar_text(row[i]));
      out += "\n";
    }
    return out;
  }
  std::vector<std::pair<std::string, std::string>> cells;
  flatten(result, "", cells);
  flatten(error_estimate, "error_estimate", cells);
  for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_field(cells[i].first);
  out += "\n";
  for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_field(cells[i].second);
  return out + "\n";
}

}  // namespace adelic::cli
