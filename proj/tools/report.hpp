#pragma once

#include <complex>
#include <string>
#include <vector>

#include "json.hpp"

namespace adelic::cli {

inline constexpr int kReportSchemaVersion = 1;

enum class Format { json, csv, text };

Format format_from_string(const std::string& s);

/// Parses "a", "a+bi", "a-bi", "bi" (also with j). Throws DomainError.
std::complex<double> parse_complex(const std::string& text);

nlohmann::json complex_json(std::complex<double> z);

/// One command's output. JSON objects are std::map backed, so keys come out
/// sorted and the serialization of a given report is deterministic.
struct Report {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json result = nlohmann::json::object();
  nlohmann::json error_estimate = nlohmann::json::object();
  std::vector<std::string> oracles;
  /// Optional row table used for CSV output; otherwise CSV flattens `result`.
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;

  std::string render(Format format) const;
};

}  // namespace adelic::cli
