// Copyright 2026 The holder-bounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "holder/holder.hpp"

namespace holder::io {

enum class OutputFormat { kMarkdown, kCsv, kJson };

inline OutputFormat parse_format(const std::string& name) {
  if (name == "markdown" || name == "md" || name == "markdown-table") return OutputFormat::kMarkdown;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw std::invalid_argument("unknown format '" + name + "'");
}

/// A number as {"value": decimal at `digits` significant digits, "hex": exact}.
inline nlohmann::json number_json(const Real& x, int digits) {
  return {{"value", x.to_string(digits)}, {"hex", x.to_hex()}};
}

/// Re-renders a number_json object from its exact field.
inline std::string rerender_number(const nlohmann::json& j, int digits, Bits prec) {
  return Real::parse(j.at("hex").get<std::string>(), prec).to_string(digits);
}

inline nlohmann::json report_json(const BoundReport& r, int digits) {
  return {{"lhs", number_json(r.lhs, digits)},
          {"rhs", number_json(r.rhs, digits)},
          {"margin", number_json(r.margin, digits)},
          {"tolerance", number_json(r.tolerance, digits)},
          {"holds", r.holds}};
}

inline nlohmann::json radical_json(const CanonicalRadical& c) {
  return {{"coef_num", c.coefficient().get_num().get_str()},
          {"coef_den", c.coefficient().get_den().get_str()},
          {"pi_power", c.pi_power()},
          {"rad_num", c.radicand().get_num().get_str()},
          {"rad_den", c.radicand().get_den().get_str()},
          {"text", c.to_string()}};
}

inline nlohmann::json general_result_json(const GeneralInequalityResult& r, int digits) {
  nlohmann::json argmax = nlohmann::json::array();
  for (double a : r.argmax) argmax.push_back(Real(a, 64).to_string(std::min(digits, 17)));
  return {{"n", r.n},
          {"m", r.m_int},
          {"trials", r.trials},
          {"seed", r.seed},
          {"max_lhs", number_json(r.report.lhs, digits)},
          {"argmax", argmax},
          {"bound", number_json(r.report.rhs, digits)},
          {"holds", r.report.holds},
          {"premise_violations", r.premise_violations},
          {"points_evaluated", r.points_evaluated}};
}

struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> footnotes;
};

/// Escapes '|' so norm notation like ||f||_2 stays inside one cell.
inline std::string markdown_cell(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

inline std::string render_markdown(const Table& t) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    os << "|";
    for (const std::string& c : cells) os << " " << markdown_cell(c) << " |";
    os << "\n";
  };
  line(t.headers);
  os << "|";
  for (size_t i = 0; i < t.headers.size(); ++i) os << "---|";
  os << "\n";
  for (const auto& r : t.rows) line(r);
  for (const std::string& f : t.footnotes) os << "\n" << f << "\n";
  return os.str();
}

/// RFC 4180 field quoting.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string render_csv(const Table& t) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
    os << "\r\n";
  };
  line(t.headers);
  for (const auto& r : t.rows) line(r);
  return os.str();
}

}  // namespace holder::io
