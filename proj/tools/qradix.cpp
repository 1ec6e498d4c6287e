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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qradix/adder.hpp"
#include "qradix/cost_models.hpp"
#include "qradix/export.hpp"
#include "qradix/metrics.hpp"
#include "qradix/reconcile.hpp"
#include "qradix/tables.hpp"
#include "qradix/verify.hpp"

namespace {

using namespace qradix;

Policy parse_policy(const std::string& s) {
  if (s == "star") return Policy::Star;
  if (s == "bullet") return Policy::Bullet;
  if (s == "diamond") return Policy::Diamond;
  throw CLI::ValidationError("policy must be star|bullet|diamond");
}

std::uint64_t env_seed() {
  if (const char* e = std::getenv("QRADIX_SEED")) return std::strtoull(e, nullptr, 10);
  return 0;
}

std::string bits_msb(long v, int n) {
  std::string s;
  for (int i = n - 1; i >= 0; --i) s += ((v >> i) & 1) ? '1' : '0';
  return s;
}

int run_example(std::ostream& os) {
  const int n = 6;
  const long av = 0b101001, bv = 0b010011;
  os << "Worked example: a = " << bits_msb(av, n) << " (" << av << "), b = " << bits_msb(bv, n)
     << " (" << bv << "), input carry 0\n\n";
  const long p = av ^ bv, g = av & bv;
  for (int r = 6; r >= 1; --r) {
    os << "radix " << r << "\n";
    if (r >= n) {
      os << "  sum path only (ripple-carry): s = a + b\n";
    }
    os << "  p = " << bits_msb(p, n) << "\n";
    os << "  g = " << bits_msb(g, n) << "\n";
    if (r < n) {
      GroupLayout L = make_layout(n, r);
      os << "  groups (low bits first):";
      for (auto [lo, hi] : L.groups) os << " [" << lo << "," << hi << ")";
      os << " | top [" << L.top.first << "," << L.top.second << ")\n";
      // group aggregates and the carries into each group
      std::vector<long> gp(L.groups.size()), gg(L.groups.size());
      for (std::size_t k = 0; k < L.groups.size(); ++k) {
        auto [lo, hi] = L.groups[k];
        long P = 1, G = 0;
        for (int i = lo; i < hi; ++i) {
          long pi = (p >> i) & 1, gi = (g >> i) & 1;
          G = gi | (pi & G);
          P &= pi;
        }
        gp[k] = P;
        gg[k] = G;
      }
      os << "  group P =";
      for (long v : gp) os << " " << v;
      os << "   group G =";
      for (long v : gg) os << " " << v;
      os << "\n  carries:";
      long carry = 0;
      for (std::size_t k = 0; k < L.groups.size(); ++k) {
        carry = gg[k] | (gp[k] & carry);
        os << " c" << L.groups[k].second << "=" << carry;
      }
      os << "\n";
    }
    // run the synthesized circuit for the sum
    SynthResult res = synth_adder({n, r, Policy::Star, false}, SynthLevel::Toffoli);
    BitState st;
    st.bits.assign(res.circuit.num_wires(), 0);
    for (int i = 0; i < n; ++i) {
      st.bits[res.a[i]] = static_cast<std::uint8_t>((av >> i) & 1);
      st.bits[res.b[i]] = static_cast<std::uint8_t>((bv >> i) & 1);
    }
    BitState out = reversible_run(res.circuit, st);
    long s = 0;
    for (int i = 0; i < n; ++i) s |= static_cast<long>(out.bits[res.b[i]]) << i;
    os << "  s = " << bits_msb(s, n) << " (" << s << ")\n\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"higher-radix quantum carry-lookahead adder toolkit"};
  app.require_subcommand(1);

  // ---- synth ----
  auto* synth = app.add_subcommand("synth", "synthesize an adder circuit");
  int s_bits = 8, s_radix = 3;
  std::string s_policy = "star", s_level = "cliffordT", s_out, s_format = "qasm";
  synth->add_option("--bits", s_bits, "addend width n")->required();
  synth->add_option("--radix", s_radix, "radix r")->required();
  synth->add_option("--policy", s_policy, "star|bullet|diamond");
  synth->add_option("--level", s_level, "toffoli|cliffordT");
  synth->add_option("--out", s_out, "output path (stdout if omitted)");
  synth->add_option("--format", s_format, "qasm|json");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "check arithmetic correctness by simulation");
  int v_bits = 4, v_radix = 2;
  long v_samples = 256;
  std::string v_policy = "star", v_mode = "exhaustive";
  std::uint64_t v_seed = env_seed();
  verify->add_option("--bits", v_bits)->required();
  verify->add_option("--radix", v_radix)->required();
  verify->add_option("--policy", v_policy);
  verify->add_option("--mode", v_mode, "exhaustive|sampled");
  verify->add_option("--samples", v_samples);
  verify->add_option("--seed", v_seed);

  // ---- metrics ----
  auto* metrics = app.add_subcommand("metrics", "resource report for one synthesis");
  int m_bits = 8, m_radix = 3;
  std::string m_policy = "star";
  bool m_staged = false;
  metrics->add_option("--bits", m_bits)->required();
  metrics->add_option("--radix", m_radix)->required();
  metrics->add_option("--policy", m_policy);
  metrics->add_flag("--staged", m_staged, "include the per-step breakdown");

  // ---- compare ----
  auto* compare = app.add_subcommand("compare", "reproduce the comparison tables");
  std::string c_sizes = "16,32,64,128,256,512,1024", c_tables = "inplace", c_format = "markdown";
  compare->add_option("--sizes", c_sizes, "comma-separated bit widths");
  compare->add_option("--tables", c_tables, "inplace|outofplace");
  compare->add_option("--format", c_format, "json|csv|markdown");

  // ---- best-radix ----
  auto* best = app.add_subcommand("best-radix", "brute-force optimal radix");
  int b_bits = 1024;
  std::string b_metric = "tcount", b_variant = "star";
  best->add_option("--bits", b_bits)->required();
  best->add_option("--metric", b_metric, "tcount|tdepth|qc");
  best->add_option("--variant", b_variant, "star|bullet|diamond");

  // ---- example ----
  app.add_subcommand("example", "walk through the six-bit worked example");

  // ---- reconcile ----
  auto* reconcile = app.add_subcommand("reconcile", "formula-vs-circuit discrepancy report");
  std::string r_grid = "8..16", r_radii = "2..15", r_policy = "star", r_format = "markdown";
  reconcile->add_option("--grid", r_grid, "nmin..nmax");
  reconcile->add_option("--radii", r_radii, "rmin..rmax");
  reconcile->add_option("--policy", r_policy);
  reconcile->add_option("--format", r_format, "json|csv|markdown");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (synth->parsed()) {
      if (s_level != "toffoli" && s_level != "cliffordT") throw std::invalid_argument("bad level");
      if (s_format != "qasm" && s_format != "json") throw std::invalid_argument("bad format");
      SynthLevel lvl = (s_level == "toffoli") ? SynthLevel::Toffoli : SynthLevel::CliffordT;
      SynthResult res = synth_adder({s_bits, s_radix, parse_policy(s_policy), false}, lvl);
      std::ostringstream body;
      if (s_format == "qasm") write_qasm(body, res.circuit);
      else body << circuit_to_json(res.circuit).dump(2) << "\n";
      if (s_out.empty()) {
        std::cout << body.str();
      } else {
        std::ofstream f(s_out);
        if (!f) throw std::runtime_error("cannot open " + s_out);
        f << body.str();
      }
      return 0;
    }
    if (verify->parsed()) {
      VerifyMode mode;
      mode.exhaustive = (v_mode == "exhaustive");
      mode.samples = v_samples;
      mode.seed = v_seed;
      auto rep = verify_adder({v_bits, v_radix, parse_policy(v_policy), false}, mode);
      std::cout << "passed " << rep.passed << "/" << rep.total << "\n";
      for (const auto& f : rep.failures) std::cout << "  fail: " << f << "\n";
      return rep.ok() ? 0 : 1;
    }
    if (metrics->parsed()) {
      Policy pol = parse_policy(m_policy);
      SynthResult res = synth_adder({m_bits, m_radix, pol, false}, SynthLevel::CliffordT);
      ResourceReport rep = report(res.circuit);
      nlohmann::json j;
      j["bits"] = m_bits;
      j["radix"] = m_radix;
      j["policy"] = m_policy;
      j["t_count"] = rep.t_count;
      j["t_depth_scheduled"] = rep.t_depth_scheduled;
      j["t_depth_staged"] = rep.t_depth_staged;
      j["qubit_count"] = rep.qubit_count;
      nlohmann::json hist;
      for (auto& [k, v] : rep.gate_histogram) hist[kind_name(k)] = v;
      j["gate_histogram"] = hist;
      if (m_staged && m_radix < m_bits) {
        nlohmann::json stages = nlohmann::json::array();
        for (int s = 1; s <= 7; ++s) {
          nlohmann::json e;
          e["stage"] = s;
          e["t_count"] = stage_t_count(res.circuit, static_cast<std::uint8_t>(s));
          e["t_depth"] = stage_t_depth(res.circuit, static_cast<std::uint8_t>(s));
          e["t_count_model"] = cost::circuit_stage_tcount(pol, m_bits, m_radix, s);
          e["t_count_paper"] = cost::table_stage_tcount(pol, m_bits, m_radix, s);
          stages.push_back(std::move(e));
        }
        j["stages"] = stages;
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (compare->parsed()) {
      std::vector<long> sizes;
      std::stringstream ss(c_sizes);
      std::string tok;
      while (std::getline(ss, tok, ',')) sizes.push_back(std::stol(tok));
      if (c_tables != "inplace" && c_tables != "outofplace")
        throw std::invalid_argument("bad --tables");
      OutputTable t = compare_table(sizes, c_tables == "outofplace");
      TableFormat f = c_format == "json" ? TableFormat::Json
                      : c_format == "csv" ? TableFormat::Csv
                                          : TableFormat::Markdown;
      t.write(std::cout, f);
      return 0;
    }
    if (best->parsed()) {
      cost::Metric m = b_metric == "tcount" ? cost::Metric::TCount
                       : b_metric == "tdepth" ? cost::Metric::TDepth
                       : b_metric == "qc" ? cost::Metric::Qc
                                          : throw std::invalid_argument("bad metric");
      auto res = cost::best_radix(b_bits, m, parse_policy(b_variant));
      std::cout << "r* = " << res.r << "\nvalue = " << res.value
                << "\nregime = " << cost::regime_name(res.regime) << "\n";
      return 0;
    }
    if (app.get_subcommand("example")->parsed()) return run_example(std::cout);
    if (reconcile->parsed()) {
      auto parse_range = [](const std::string& s) {
        auto pos = s.find("..");
        if (pos == std::string::npos) throw std::invalid_argument("range must be lo..hi");
        return std::pair<long, long>{std::stol(s.substr(0, pos)), std::stol(s.substr(pos + 2))};
      };
      auto [nlo, nhi] = parse_range(r_grid);
      auto [rlo, rhi] = parse_range(r_radii);
      Reconciliation rec = reconcile_grid(nlo, nhi, rlo, rhi, parse_policy(r_policy));
      TableFormat f = r_format == "json" ? TableFormat::Json
                      : r_format == "csv" ? TableFormat::Csv
                                          : TableFormat::Markdown;
      rec.table.write(std::cout, f);
      std::cout << "# checked " << rec.rows_checked << " quantities; "
                << rec.circuit_mismatches << " circuit-model mismatches; "
                << rec.paper_mismatches << " paper-model deviations (documented)\n";
      return rec.circuit_mismatches == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
