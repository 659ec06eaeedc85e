// Copyright 2026 The edgemarket Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "edgemarket/scenarios/metrics.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace edgemarket::scenarios {
std::string FormatValue(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string FormatMetricRow(const MetricRow& row) {
  std::string out;
  out += std::to_string(row.step);
  out += ',';
  out += std::to_string(row.window);
  out += ',';
  out += std::to_string(row.bidder);
  out += ',';
  out += row.algo;
  out += ',';
  out += row.metric;
  out += ',';
  out += FormatValue(row.value);
  return out;
}

void WriteMetricsCsv(const std::vector<MetricRow>& rows,
                     const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << kMetricsHeader << '\n';
  for (const MetricRow& r : rows) out << FormatMetricRow(r) << '\n';
}

std::vector<MetricRow> ReadMetricsCsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::string line;
  if (!std::getline(in, line) || line != kMetricsHeader) {
    throw std::runtime_error(path + ": expected header '" +
                             std::string(kMetricsHeader) + "'");
  }
  std::vector<MetricRow> rows;
  long lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 6) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected 6 fields");
    }
    MetricRow r;
    try {
      r.step = std::stoll(f[0]);
      r.window = std::stol(f[1]);
      r.bidder = std::stoi(f[2]);
      r.algo = f[3];
      r.metric = f[4];
      r.value = std::stod(f[5]);
    } catch (const std::logic_error&) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": malformed row");
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace edgemarket::scenarios
