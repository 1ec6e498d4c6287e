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

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qradix/circuit.hpp"
#include "qradix/decompose.hpp"

namespace qradix {

enum class SynthLevel : std::uint8_t { Toffoli, CliffordT };

struct AdderSpec {
  int n = 4;
  int r = 2;
  Policy policy = Policy::Star;
  bool out_of_place = false;  // cost-model only; synthesis is in-place
};

struct GroupLayout {
  int alpha = 0;                             // most-significant group width
  int rho = 0;                               // number of radix groups
  std::vector<std::pair<int, int>> groups;   // [lo, hi) per radix group
  std::pair<int, int> top;                   // most-significant group
};

inline GroupLayout make_layout(int n, int r) {
  GroupLayout L;
  if (r >= n) {
    L.alpha = n;
    L.rho = 0;
    L.top = {0, n};
    return L;
  }
  L.alpha = (n % r == 0) ? r : n % r;
  L.rho = (n % r == 0) ? n / r - 1 : n / r;
  for (int g = 0; g < L.rho; ++g) L.groups.emplace_back(g * r, (g + 1) * r);
  L.top = {L.rho * r, n};
  return L;
}

struct SynthResult {
  Circuit circuit;
  std::vector<QubitId> a;  // input register a (preserved)
  std::vector<QubitId> b;  // input register b (holds the sum on exit)
};

// ---------------------------------------------------------------------------
// Policy-aware emission of the recurring gadget roles. At Toffoli level every
// role is a plain Toffoli; at Clifford+T level the role and policy pick the
// decomposition.
// ---------------------------------------------------------------------------
namespace detail {

struct Emit {
  Circuit& c;
  SynthLevel level;
  Policy policy;

  bool raw() const { return level == SynthLevel::Toffoli; }

  // Unpaired Toffoli: Method 3 under every policy.
  void tof_m3(QubitId a, QubitId b, QubitId t) {
    if (raw()) c.toffoli(a, b, t);
    else toffoli_method3(c, a, b, t);
  }

  // AND onto a freshly-zero wire; `la` selects the Logical-And form.
  void and_onto(QubitId x, QubitId y, QubitId t, bool la) {
    if (raw()) c.toffoli(x, y, t);
    else if (la) logical_and_compute_onto(c, x, y, t);
    else toffoli_method3(c, x, y, t);
  }

  // Inverse of and_onto; measurement-based when the compute was Logical-And.
  void unand(QubitId x, QubitId y, QubitId t, bool la) {
    if (raw()) c.toffoli(x, y, t);
    else if (la) logical_and_uncompute(c, x, y, t, /*release=*/false);
    else toffoli_method3(c, x, y, t);
  }

  // In-place paired Toffoli. In the Logical-And regime the product is taken
  // on a borrowed ancilla and CNOTed into the target; the partner undoes the
  // CNOT and measures the ancilla away.
  struct LinkHandle { QubitId anc = 0; bool used = false; };

  LinkHandle link_fwd(QubitId x, QubitId y, QubitId t, bool la) {
    if (raw()) { c.toffoli(x, y, t); return {}; }
    if (!la) { toffoli_method3(c, x, y, t); return {}; }
    QubitId w = c.allocate_one(WireLabel::RadixAncilla);
    logical_and_compute_onto(c, x, y, w);
    c.cnot(w, t);
    return {w, true};
  }
  void link_rev(const LinkHandle& h, QubitId x, QubitId y, QubitId t, bool la) {
    if (raw()) { c.toffoli(x, y, t); return; }
    if (!la) { toffoli_method3(c, x, y, t); return; }
    c.cnot(h.anc, t);
    logical_and_uncompute(c, x, y, h.anc);
  }

  // Clears a wire holding x_src AND b_orig where the b wire currently holds
  // p = a xor b. Unitary form: Toffoli(a, p, w); CNOT(a, w). Measured form:
  // H, measure, conditioned [CZ(a, p), Z(a)], conditioned X reset.
  void clear_g_pspace(QubitId a, QubitId p, QubitId w, bool measured) {
    if (raw() || !measured) {
      tof_m3(a, p, w);
      c.cnot(a, w);
      return;
    }
    c.h(w);
    ClassicalBit m = c.measure(w);
    c.cc_cz(a, p, m);
    c.cc_z(a, m);
    c.cc_x(w, m);
  }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Gidney ripple-carry core. Emits the carry chain, top-bit seed, unwind and
// per-bit sums on registers a/b with optional carry-in wire. Temp wires are
// taken from `temps` when provided (must be |0>), else allocated.
// `la` lowers the temp pairs with the Logical-And structure.
// ---------------------------------------------------------------------------
namespace detail {

inline void gidney_core(Emit& e, const std::vector<QubitId>& a, const std::vector<QubitId>& b,
                        std::optional<QubitId> cin, std::vector<QubitId> temps, bool la,
                        bool release_temps) {
  Circuit& c = e.c;
  const std::size_t k = a.size();
  if (k == 0) return;
  if (k == 1) {
    if (cin) c.cnot(*cin, b[0]);
    c.cnot(a[0], b[0]);
    return;
  }
  std::vector<QubitId>& t = temps;
  if (t.empty()) t = c.allocate(k - 1, WireLabel::RcaAncilla);
  if (cin) { c.cnot(*cin, a[0]); c.cnot(*cin, b[0]); }
  e.and_onto(a[0], b[0], t[0], la);
  if (cin) c.cnot(*cin, t[0]);
  for (std::size_t j = 1; j + 1 < k; ++j) {
    c.cnot(t[j - 1], a[j]);
    c.cnot(t[j - 1], b[j]);
    e.and_onto(a[j], b[j], t[j], la);
    c.cnot(t[j - 1], t[j]);
  }
  c.cnot(t[k - 2], b[k - 1]);
  for (std::size_t j = k - 2; j >= 1; --j) {
    c.cnot(t[j - 1], t[j]);
    e.unand(a[j], b[j], t[j], la);
    c.cnot(t[j - 1], a[j]);
  }
  if (cin) c.cnot(*cin, t[0]);
  e.unand(a[0], b[0], t[0], la);
  if (cin) c.cnot(*cin, a[0]);
  for (std::size_t j = 0; j < k; ++j) c.cnot(a[j], b[j]);
  if (release_temps)
    for (QubitId w : t) c.release(w);
}

}  // namespace detail

// Standalone Gidney RCA with an explicit carry-in wire (|0>): b <- a + b.
// Logical-And temps under bullet/diamond, Method 3 under star.
inline SynthResult gidney_rca(int n, Policy policy = Policy::Diamond,
                              SynthLevel level = SynthLevel::CliffordT) {
  SynthResult out;
  Circuit& c = out.circuit;
  QubitId cin = c.allocate_one(WireLabel::CarryAncilla);
  out.a = c.allocate(static_cast<std::size_t>(n), WireLabel::InputA);
  out.b = c.allocate(static_cast<std::size_t>(n), WireLabel::InputB);
  detail::Emit e{c, level, policy};
  const bool la = (policy != Policy::Star);
  std::vector<QubitId> temps;
  detail::gidney_core(e, out.a, out.b, cin, temps, la, /*release_temps=*/false);
  return out;
}

// ---------------------------------------------------------------------------
// Carry-select sum path: two RCAs with carry 0 and 1 over duplicated input
// registers, then a CSWAP select keyed on the real carry. Stage tags:
// 1 = carry-0 RCA, 2 = carry-1 RCA, 3 = select.
// ---------------------------------------------------------------------------
struct CsaResult {
  Circuit circuit;
  std::vector<QubitId> a0, b0, a1, b1;  // duplicated registers
  QubitId carry;                        // the real carry
};

inline CsaResult csa_sum_path(int n, int cswap_method, Policy policy = Policy::Diamond,
                              SynthLevel level = SynthLevel::CliffordT) {
  CsaResult out;
  Circuit& c = out.circuit;
  out.carry = c.allocate_one(WireLabel::CarryAncilla);
  QubitId z0 = c.allocate_one(WireLabel::CarryAncilla);  // |0> carry
  out.a0 = c.allocate(static_cast<std::size_t>(n), WireLabel::InputA);
  out.b0 = c.allocate(static_cast<std::size_t>(n), WireLabel::InputB);
  QubitId z1 = c.allocate_one(WireLabel::CarryAncilla);  // |1> carry
  out.a1 = c.allocate(static_cast<std::size_t>(n), WireLabel::InputA);
  out.b1 = c.allocate(static_cast<std::size_t>(n), WireLabel::InputB);
  detail::Emit e{c, level, policy};
  const bool la = (policy != Policy::Star);
  std::vector<QubitId> temps;
  c.set_stage(1);
  detail::gidney_core(e, out.a0, out.b0, z0, temps, la, false);
  c.set_stage(2);
  c.x(z1);
  temps.clear();
  detail::gidney_core(e, out.a1, out.b1, z1, temps, la, false);
  c.set_stage(3);
  for (int i = 0; i < n; ++i) {
    if (level == SynthLevel::Toffoli) c.cswap(out.carry, out.b0[i], out.b1[i]);
    else cswap_decomposed(c, cswap_method, out.carry, out.b0[i], out.b1[i]);
  }
  c.set_stage(0);
  return out;
}

// ---------------------------------------------------------------------------
// The in-place higher-radix adder: seven tagged steps plus the carry teardown
// that returns every ancilla to |0>.
//
//   stage 1: per-bit g onto fresh ancillas, b -> p
//   stage 2: per-group propagate ladder and generate chain
//   stage 3: Brent-Kung prefix tree over the group (G, P) pairs
//   stage 4: uncompute the tree (G then P per node, reversed)
//   stage 5: uncompute chains (all but the last link) and ladders
//   stage 6: last chain links, g cleanups, b restore
//   stage 7: carry fan-out copies, per-group Gidney sum paths, carry teardown
// ---------------------------------------------------------------------------
inline SynthResult synth_adder(const AdderSpec& spec, SynthLevel level = SynthLevel::CliffordT) {
  if (spec.n < 1) throw std::invalid_argument("bit width must be >= 1");
  const int n = spec.n;
  const int r = std::min(spec.r, n);
  if (spec.r < 1) throw std::invalid_argument("radix must be >= 1");
  if (r >= n) return gidney_rca(n, spec.policy, level);

  const GroupLayout L = make_layout(n, r);
  const int rho = L.rho;
  SynthResult out;
  Circuit& c = out.circuit;
  out.a = c.allocate(static_cast<std::size_t>(n), WireLabel::InputA);
  out.b = c.allocate(static_cast<std::size_t>(n), WireLabel::InputB);
  const auto& a = out.a;
  const auto& b = out.b;

  detail::Emit e{c, level, spec.policy};
  const bool pol_d = spec.policy == Policy::Diamond;
  const bool pol_s = spec.policy == Policy::Star;
  const bool la_rca = !pol_s;   // sum-path pairs use Logical-And except under star
  const bool la_radix = pol_d;  // radix-layer pairs use Logical-And only under diamond

  // ---- stage 1 ----
  c.set_stage(1);
  const int m = rho * r;  // bits below the top group
  std::vector<QubitId> G(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    G[i] = c.allocate_one(WireLabel::GAncilla);
    e.tof_m3(a[i], b[i], G[i]);
    c.cnot(a[i], b[i]);  // b holds p from here to stage 6
  }

  // ---- stage 2 ----
  c.set_stage(2);
  std::vector<QubitId> Pg(static_cast<std::size_t>(rho));
  struct LadderNode { QubitId x, y, w; };
  std::vector<std::vector<LadderNode>> ladders(static_cast<std::size_t>(rho));
  std::vector<std::vector<detail::Emit::LinkHandle>> links(static_cast<std::size_t>(rho));
  for (int g = 0; g < rho; ++g) {
    const int lo = L.groups[g].first;
    if (r == 1) { Pg[g] = b[lo]; continue; }
    std::vector<QubitId> lvl;
    for (int i = lo; i < lo + r; ++i) lvl.push_back(b[i]);
    while (lvl.size() > 1) {
      std::vector<QubitId> nxt;
      for (std::size_t i = 0; i + 1 < lvl.size(); i += 2) {
        QubitId w = c.allocate_one(WireLabel::RadixAncilla);
        e.and_onto(lvl[i], lvl[i + 1], w, la_radix);
        ladders[g].push_back({lvl[i], lvl[i + 1], w});
        nxt.push_back(w);
      }
      if (lvl.size() % 2) nxt.push_back(lvl.back());
      lvl = std::move(nxt);
    }
    Pg[g] = lvl[0];
    // generate chain; the final link is always an unpaired Method-3 Toffoli
    for (int j = 1; j < r; ++j) {
      if (j + 1 < r)
        links[g].push_back(e.link_fwd(G[lo + j - 1], b[lo + j], G[lo + j], la_radix));
      else
        e.tof_m3(G[lo + j - 1], b[lo + j], G[lo + j]);
    }
  }

  // ---- stage 3: Brent-Kung prefix tree ----
  c.set_stage(3);
  struct BkNode { QubitId px, py, w; int ypos, xpos; };
  std::vector<BkNode> bk;
  std::vector<QubitId> Gw(static_cast<std::size_t>(rho));
  std::map<std::pair<int, int>, QubitId> Pw;
  for (int i = 0; i < rho; ++i) {
    Pw[{i, i}] = Pg[i];
    Gw[i] = G[L.groups[i].second - 1];
  }
  auto emit_node = [&](int x_lo, int x_hi, int y_lo, int y_hi) {
    QubitId px = Pw.at({x_lo, x_hi});
    QubitId py = Pw.at({y_lo, y_hi});
    QubitId w = c.allocate_one(WireLabel::CarryAncilla);
    e.tof_m3(px, py, w);
    Pw[{y_lo, x_hi}] = w;
    e.tof_m3(px, Gw[y_hi], Gw[x_hi]);
    bk.push_back({px, py, w, y_hi, x_hi});
  };
  for (int s = 2; s <= rho; s *= 2)
    for (int j = 1; j * s <= rho; ++j) {
      const int hi = j * s - 1;
      emit_node(hi - s / 2 + 1, hi, hi - s + 1, hi - s / 2);
    }
  for (int s = 1 << std::max(0, 31 - __builtin_clz(std::max(rho, 1))); s >= 2; s /= 2)
    for (int j = 1; j * s + s / 2 <= rho; ++j) {
      const int hi = j * s + s / 2 - 1;
      emit_node(j * s, hi, 0, j * s - 1);
    }

  // ---- stage 7 prologue: carry fan-out copies ----
  c.set_stage(7);
  std::vector<QubitId> C(static_cast<std::size_t>(rho) + 1);
  for (int g = 0; g < rho; ++g) {
    C[g + 1] = c.allocate_one(WireLabel::CarryAncilla);
    c.cnot(Gw[g], C[g + 1]);
  }

  // ---- stage 4: uncompute the tree ----
  c.set_stage(4);
  for (auto it = bk.rbegin(); it != bk.rend(); ++it) {
    e.tof_m3(it->px, Gw[it->ypos], Gw[it->xpos]);
    e.unand(it->px, it->py, it->w, pol_d);
    c.release(it->w);
  }

  // ---- stages 5/6: unwind the radix layer, clean up, restore b ----
  for (int g = 0; g < rho; ++g) {
    const int lo = L.groups[g].first;
    if (r > 1) {
      c.set_stage(6);  // the unpaired last link, one Method-3 Toffoli per group
      e.tof_m3(G[lo + r - 2], b[lo + r - 1], G[lo + r - 1]);
      c.set_stage(5);
      for (int j = r - 2; j >= 1; --j)
        e.link_rev(links[g][static_cast<std::size_t>(j - 1)], G[lo + j - 1], b[lo + j],
                   G[lo + j], la_radix);
      for (auto it = ladders[g].rbegin(); it != ladders[g].rend(); ++it) {
        e.unand(it->x, it->y, it->w, la_radix);
        c.release(it->w);
      }
    }
  }
  c.set_stage(6);
  for (int i = 0; i < m; ++i)
    e.clear_g_pspace(a[i], b[i], G[i], /*measured=*/pol_d);
  for (int i = 0; i < m; ++i) c.cnot(a[i], b[i]);  // p -> b

  // ---- stage 7: per-group sum paths ----
  c.set_stage(7);
  for (int g = 0; g <= rho; ++g) {
    const auto [lo, hi] = (g < rho) ? L.groups[g] : L.top;
    if (lo >= hi) continue;
    std::vector<QubitId> ga(a.begin() + lo, a.begin() + hi);
    std::vector<QubitId> gb(b.begin() + lo, b.begin() + hi);
    std::optional<QubitId> cin;
    if (g > 0) cin = C[g];
    std::vector<QubitId> temps;
    if (g < rho && r > 1)
      for (int i = lo; i + 1 < hi; ++i) temps.push_back(G[i]);  // reuse cleared g wires
    detail::gidney_core(e, ga, gb, cin, temps, la_rca, /*release_temps=*/true);
  }

  // ---- stage 7: carry teardown from (a, s) ----
  // u_{i+1} = MAJ(a_i, not s_i, u_i) recomputes each group carry; CNOT taps
  // clear the copies, then the chain unwinds.
  {
    for (int i = 0; i < m; ++i) c.x(b[i]);
    std::vector<QubitId> u(static_cast<std::size_t>(m) + 1);
    u[1] = c.allocate_one(WireLabel::RcaAncilla);
    e.and_onto(a[0], b[0], u[1], la_rca);
    if (1 % r == 0) c.cnot(u[1], C[1 / r]);
    for (int i = 1; i < m; ++i) {
      c.cnot(u[i], a[i]);
      c.cnot(u[i], b[i]);
      u[i + 1] = c.allocate_one(WireLabel::RcaAncilla);
      e.and_onto(a[i], b[i], u[i + 1], la_rca);
      c.cnot(u[i], u[i + 1]);
      if ((i + 1) % r == 0) c.cnot(u[i + 1], C[(i + 1) / r]);
    }
    for (int i = m - 1; i >= 1; --i) {
      c.cnot(u[i], u[i + 1]);
      e.unand(a[i], b[i], u[i + 1], la_rca);
      c.release(u[i + 1]);
      c.cnot(u[i], b[i]);
      c.cnot(u[i], a[i]);
    }
    e.unand(a[0], b[0], u[1], la_rca);
    c.release(u[1]);
    for (int i = 0; i < m; ++i) c.x(b[i]);
    for (int g = 1; g <= rho; ++g) c.release(C[g]);
  }
  c.set_stage(0);
  return out;
}

}  // namespace qradix
