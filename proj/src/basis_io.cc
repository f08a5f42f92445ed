/*
 * Copyright 2026 The latgauss Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "latgauss/basis_io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "json.hpp"
#include "latgauss/error.h"

namespace latgauss {
namespace {

double ParseReal(std::string_view token) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw Error(ErrorCode::kParseError,
                "not a finite real number: '" + std::string(token) + "'");
  }
  return value;
}

LatticeBasis FromRows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) {
    throw Error(ErrorCode::kParseError, "basis has no vectors");
  }
  const std::size_t n = rows.front().size();
  Eigen::MatrixXd m(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) {
      throw Error(ErrorCode::kParseError,
                  "row " + std::to_string(i) + " has " +
                      std::to_string(rows[i].size()) + " entries, expected " +
                      std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return LatticeBasis(std::move(m));
}

LatticeBasis ParseJsonBasis(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("vectors") ||
      !doc["vectors"].is_array()) {
    throw Error(ErrorCode::kParseError,
                "expected an object with a \"vectors\" array");
  }
  std::vector<std::vector<double>> rows;
  for (const auto& row : doc["vectors"]) {
    if (!row.is_array()) {
      throw Error(ErrorCode::kParseError, "each vector must be an array");
    }
    auto& out = rows.emplace_back();
    for (const auto& entry : row) {
      if (entry.is_number()) {
        out.push_back(entry.get<double>());
      } else if (entry.is_string()) {
        out.push_back(ParseReal(entry.get<std::string>()));
      } else {
        throw Error(ErrorCode::kParseError,
                    "vector entries must be numbers or decimal strings");
      }
    }
  }
  return FromRows(rows);
}

LatticeBasis ParseTextBasis(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream tokens(line);
    std::string token;
    std::vector<double> row;
    while (tokens >> token) {
      if (row.empty() && token.front() == '#') break;
      row.push_back(ParseReal(token));
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return FromRows(rows);
}

}  // namespace

LatticeBasis ParseBasis(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    throw Error(ErrorCode::kParseError, "empty basis input");
  }
  if (text[first] == '{') return ParseJsonBasis(text);
  return ParseTextBasis(text);
}

LatticeBasis ReadBasisFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kParseError, "cannot open basis file " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseBasis(buffer.str());
}

Eigen::VectorXd ParseVector(std::string_view text) {
  std::vector<double> values;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) values.push_back(ParseReal(token));
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '\t') {
      flush();
    } else {
      token.push_back(ch);
    }
  }
  flush();
  if (values.empty()) {
    throw Error(ErrorCode::kParseError, "empty vector");
  }
  return Eigen::Map<Eigen::VectorXd>(values.data(),
                                     static_cast<Eigen::Index>(values.size()));
}

}  // namespace latgauss
