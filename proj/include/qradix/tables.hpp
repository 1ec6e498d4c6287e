// Copyright 2026 The qradix Authors
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

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qradix/cost_models.hpp"

namespace qradix {

enum class TableFormat { Json, Csv, Markdown };

struct OutputTable {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;

  void write(std::ostream& os, TableFormat f) const {
    switch (f) {
      case TableFormat::Csv: write_csv(os); return;
      case TableFormat::Json: write_json(os); return;
      case TableFormat::Markdown: write_markdown(os); return;
    }
  }

  void write_csv(std::ostream& os) const {
    auto field = [](const std::string& s) {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string q = "\"";
      for (char ch : s) { if (ch == '"') q += '"'; q += ch; }
      return q + "\"";
    };
    for (std::size_t i = 0; i < headers.size(); ++i)
      os << (i ? "," : "") << field(headers[i]);
    os << "\n";
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << field(r[i]);
      os << "\n";
    }
  }

  void write_json(std::ostream& os) const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json obj;
      for (std::size_t i = 0; i < headers.size(); ++i) obj[headers[i]] = r[i];
      arr.push_back(std::move(obj));
    }
    os << arr.dump(2) << "\n";
  }

  void write_markdown(std::ostream& os) const {
    os << "|";
    for (const auto& h : headers) os << " " << h << " |";
    os << "\n|";
    for (std::size_t i = 0; i < headers.size(); ++i) os << " --- |";
    os << "\n";
    for (const auto& r : rows) {
      os << "|";
      for (const auto& cell : r) os << " " << cell << " |";
      os << "\n";
    }
  }

  static OutputTable parse_csv(std::istream& is) {
    OutputTable t;
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
      if (line.empty()) continue;
      std::vector<std::string> cells;
      std::string cur;
      bool quoted = false;
      for (std::size_t i = 0; i < line.size(); ++i) {
        char ch = line[i];
        if (quoted) {
          if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') { cur += '"'; ++i; }
          else if (ch == '"') quoted = false;
          else cur += ch;
        } else if (ch == '"') quoted = true;
        else if (ch == ',') { cells.push_back(cur); cur.clear(); }
        else cur += ch;
      }
      cells.push_back(cur);
      if (first) { t.headers = cells; first = false; }
      else t.rows.push_back(cells);
    }
    return t;
  }

  static OutputTable parse_json(std::istream& is) {
    OutputTable t;
    nlohmann::json arr = nlohmann::json::parse(is);
    if (!arr.empty())
      for (auto& [k, v] : arr.front().items()) t.headers.push_back(k);
    for (const auto& obj : arr) {
      std::vector<std::string> row;
      for (const auto& h : t.headers) row.push_back(obj.at(h).get<std::string>());
      t.rows.push_back(std::move(row));
    }
    return t;
  }
};

// ---------------------------------------------------------------------------
// The comparison tables of the results section: every competitor row plus
// the three our-adder rows, minimised over radix per the captions.
// ---------------------------------------------------------------------------
inline OutputTable compare_table(const std::vector<long>& sizes, bool out_of_place) {
  OutputTable t;
  t.headers = {"adder", "policy", "metric"};
  for (long n : sizes) t.headers.push_back(std::to_string(n));
  const char* metric_names[3] = {"tcount", "tdepth", "qc"};
  auto add_row = [&](const std::string& name, const std::string& pol, int metric,
                     const std::function<long(long)>& f) {
    std::vector<std::string> row{name, pol, metric_names[metric]};
    for (long n : sizes) row.push_back(std::to_string(f(n)));
    t.rows.push_back(std::move(row));
  };
  const auto& comp = out_of_place ? cost::outofplace_competitors() : cost::inplace_competitors();
  for (int metric = 0; metric < 3; ++metric) {
    for (const auto& e : comp) {
      const auto& f = metric == 0 ? e.tcount : metric == 1 ? e.tdepth : e.qc;
      add_row(e.name, policy_name(e.marker), metric, f);
    }
    for (Policy pol : {Policy::Star, Policy::Bullet, Policy::Diamond}) {
      cost::Metric m = metric == 0 ? cost::Metric::TCount
                      : metric == 1 ? cost::Metric::TDepth
                                    : cost::Metric::Qc;
      add_row("Our Adder", policy_name(pol), metric,
              [pol, m, out_of_place](long n) {
                return cost::table_best_cell(pol, n, m, out_of_place);
              });
    }
  }
  return t;
}

}  // namespace qradix
