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

#include <string>
#include <vector>

#include "qradix/adder.hpp"
#include "qradix/cost_models.hpp"
#include "qradix/metrics.hpp"
#include "qradix/tables.hpp"

namespace qradix {

// Compares measured circuit metrics against both formula families:
//  - "paper": the published per-step sums and closed forms (the table source)
//  - "circuit": the exact cost model of the synthesized circuits
// A row appears for every quantity where the three values are not all equal;
// `circuit_mismatches` counts the cases where even the circuit model is off
// (those indicate a real defect).
struct Reconciliation {
  OutputTable table;
  long rows_checked = 0;
  long paper_mismatches = 0;
  long circuit_mismatches = 0;
};

inline Reconciliation reconcile_grid(long n_min, long n_max, long r_min, long r_max,
                                     Policy pol = Policy::Star) {
  Reconciliation rec;
  rec.table.headers = {"n", "r", "policy", "quantity", "measured", "circuit_model",
                       "paper_model", "status"};
  auto add = [&](long n, long r, const std::string& what, long meas, long circ, long paper) {
    ++rec.rows_checked;
    const bool circ_ok = meas == circ;
    const bool paper_ok = meas == paper;
    if (!circ_ok) ++rec.circuit_mismatches;
    if (!paper_ok) ++rec.paper_mismatches;
    if (circ_ok && paper_ok) return;
    rec.table.rows.push_back({std::to_string(n), std::to_string(r), policy_name(pol), what,
                              std::to_string(meas), std::to_string(circ), std::to_string(paper),
                              circ_ok ? "paper-only" : "CIRCUIT-MISMATCH"});
  };
  for (long n = n_min; n <= n_max; ++n) {
    for (long r = std::max(r_min, 2L); r <= std::min(r_max, n - 1); ++r) {
      SynthResult res = synth_adder({static_cast<int>(n), static_cast<int>(r), pol, false},
                                    SynthLevel::CliffordT);
      for (int s = 1; s <= 7; ++s)
        add(n, r, "stage" + std::to_string(s) + "_tcount",
            stage_t_count(res.circuit, static_cast<std::uint8_t>(s)),
            cost::circuit_stage_tcount(pol, n, r, s), cost::table_stage_tcount(pol, n, r, s));
      long staged = t_depth_staged(res.circuit);
      long circ_td = (pol == Policy::Star) ? cost::circuit_staged_tdepth_star(n, r) : staged;
      long paper_td;
      try {
        paper_td = cost::table_tdepth(pol, n, r, false);
      } catch (const std::exception&) {
        paper_td = -1;
      }
      add(n, r, "staged_tdepth", staged, circ_td, paper_td);
      add(n, r, "qubit_count", qubit_count(res.circuit), cost::circuit_qc(pol, n, r),
          cost::table_qc(pol, n, r));
    }
  }
  return rec;
}

}  // namespace qradix
