#pragma once

#include "fusion_positivity/rational.hpp"

#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

namespace fpos::cli {

using nlohmann::json;

enum class Format { table, json, csv };

inline json rational_json(const Rational& q) {
  return json{{"num", numerator_of(q).str()}, {"den", denominator_of(q).str()}};
}

/// A command's result in two shapes: structured JSON and a flat table that
/// doubles as CSV.
struct Output {
  json result;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void print_csv(std::ostream& os, const Output& out) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i]);
    os << '\n';
  };
  line(out.header);
  for (const auto& r : out.rows) line(r);
}

inline void print_table(std::ostream& os, const Output& out) {
  // a lone scalar prints bare so shell callers can capture it directly
  if (out.header.size() == 1 && out.rows.size() == 1) {
    os << out.rows.front().front() << '\n';
    return;
  }
  std::vector<std::size_t> width(out.header.size(), 0);
  auto measure = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells[i].size());
  };
  measure(out.header);
  for (const auto& r : out.rows) measure(r);
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      os << cells[i];
      if (i + 1 < cells.size()) os << std::string(width[i] - cells[i].size() + 2, ' ');
    }
    os << '\n';
  };
  line(out.header);
  for (const auto& r : out.rows) line(r);
}

}  // namespace fpos::cli
