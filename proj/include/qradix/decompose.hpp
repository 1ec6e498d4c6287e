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

#include <stdexcept>
#include <vector>

#include "qradix/circuit.hpp"

namespace qradix {

// Toffoli decomposition policies for a whole synthesis run.
enum class Policy : std::uint8_t {
  Star,     // every Toffoli lowered with Method 3; fully unitary
  Bullet,   // Logical-And only inside the ripple-carry sum paths
  Diamond,  // Logical-And for every compute/uncompute pair
};

inline const char* policy_name(Policy p) {
  switch (p) {
    case Policy::Star: return "star";
    case Policy::Bullet: return "bullet";
    case Policy::Diamond: return "diamond";
  }
  return "?";
}

enum class AncillaInit : std::uint8_t { Zero, One };

// ---------------------------------------------------------------------------
// Gidney's Logical-And.
//
// Compute: prepares a |T>-type state on the target by H,T (both branches of
// the ancilla-init case distinction use the same two gates), then the
// CNOT/T/CNOT core. Target ends in |x.y> for init Zero, |1 xor x.y| for One.
// T-count 4 (the preparation T included), T-depth 2.
// ---------------------------------------------------------------------------
// The figure's gate sequence applied to an already-allocated target wire.
inline void logical_and_compute_onto(Circuit& c, QubitId x, QubitId y, QubitId a) {
  c.h(a);
  c.t(a);
  c.cnot(x, a);
  c.cnot(y, a);
  c.cnot(a, x);
  c.cnot(a, y);
  c.tdg(x);
  c.tdg(y);
  c.t(a);
  c.cnot(a, x);
  c.cnot(a, y);
  c.h(a);
  c.s(a);
}

inline QubitId logical_and_compute(Circuit& c, QubitId x, QubitId y,
                                   AncillaInit init = AncillaInit::Zero,
                                   bool fresh = false) {
  QubitId a = c.allocate_one(WireLabel::RadixAncilla, fresh);
  if (init == AncillaInit::One) c.x(a);
  logical_and_compute_onto(c, x, y, a);
  return a;
}

// Uncompute: H, measure, conditioned CZ on the two source wires, and a
// conditioned X so the released wire is |0> for both outcomes.
inline ClassicalBit logical_and_uncompute(Circuit& c, QubitId x, QubitId y, QubitId anc,
                                          bool release = true) {
  if (!c.is_live(anc)) throw StructuralError("logical_and_uncompute: dead ancilla");
  c.h(anc);
  ClassicalBit m = c.measure(anc);
  c.cc_cz(x, y, m);
  c.cc_x(anc, m);
  if (release) c.release(anc);
  return m;
}

// ---------------------------------------------------------------------------
// The five unpaired-Toffoli decompositions (T-count 7 each; T-depth 6/4/3/2/1;
// ancillas 0/0/0/1/4). Operands (a, b, t): controls a,b, target t.
// ---------------------------------------------------------------------------

// Method 1: the textbook 7-T circuit in its serial layout (two-control phase
// block first, then the target chain), T-depth 6.
inline void toffoli_method1(Circuit& c, QubitId a, QubitId b, QubitId t) {
  c.cnot(a, b);
  c.tdg(b);
  c.cnot(a, b);
  c.t(a);
  c.t(b);
  c.h(t);
  c.cnot(b, t);
  c.tdg(t);
  c.cnot(a, t);
  c.t(t);
  c.cnot(b, t);
  c.tdg(t);
  c.cnot(a, t);
  c.t(t);
  c.h(t);
}

// Method 2: T-depth 4.
inline void toffoli_method2(Circuit& c, QubitId a, QubitId b, QubitId t) {
  c.h(t);
  c.cnot(b, t);
  c.tdg(t);
  c.cnot(a, t);
  c.t(t);
  c.cnot(b, t);
  c.tdg(b);
  c.tdg(t);
  c.cnot(a, t);
  c.cnot(a, b);
  c.t(a);
  c.tdg(b);
  c.t(t);
  c.cnot(a, b);
  c.s(b);
  c.h(t);
}

// Method 3: T-depth 3. The workhorse for unpaired Toffolis.
inline void toffoli_method3(Circuit& c, QubitId a, QubitId b, QubitId t) {
  c.h(t);
  c.tdg(a);
  c.t(b);
  c.t(t);
  c.cnot(a, b);
  c.cnot(t, a);
  c.tdg(a);
  c.cnot(b, t);
  c.cnot(b, a);
  c.tdg(a);
  c.tdg(b);
  c.t(t);
  c.cnot(t, a);
  c.s(a);
  c.cnot(b, t);
  c.cnot(a, b);
  c.h(t);
}

// Method 4: T-depth 2, one borrowed ancilla.
inline void toffoli_method4(Circuit& c, QubitId a, QubitId b, QubitId t) {
  QubitId w = c.allocate_one(WireLabel::Scratch);
  c.h(t);
  c.t(a);
  c.t(b);
  c.t(t);
  c.cnot(b, a);
  c.cnot(t, b);
  c.cnot(a, t);
  c.cnot(a, w);
  c.cnot(b, w);
  c.tdg(a);
  c.tdg(b);
  c.t(t);
  c.tdg(w);
  c.cnot(b, w);
  c.cnot(a, w);
  c.cnot(a, t);
  c.cnot(t, b);
  c.cnot(b, a);
  c.h(t);
  c.release(w);
}

// Method 5: T-depth 1, four parity ancillas.
inline void toffoli_method5(Circuit& c, QubitId a, QubitId b, QubitId t) {
  auto w = c.allocate(4, WireLabel::Scratch);
  QubitId abt = w[0], ab = w[1], bt = w[2], at = w[3];
  c.h(t);
  c.cnot(a, abt);
  c.cnot(b, abt);
  c.cnot(t, abt);
  c.cnot(a, ab);
  c.cnot(b, ab);
  c.cnot(b, bt);
  c.cnot(t, bt);
  c.cnot(a, at);
  c.cnot(t, at);
  c.t(a);
  c.t(b);
  c.t(t);
  c.t(abt);
  c.tdg(ab);
  c.tdg(bt);
  c.tdg(at);
  c.cnot(t, at);
  c.cnot(a, at);
  c.cnot(t, bt);
  c.cnot(b, bt);
  c.cnot(b, ab);
  c.cnot(a, ab);
  c.cnot(t, abt);
  c.cnot(b, abt);
  c.cnot(a, abt);
  c.h(t);
  c.release(w);
}

inline void toffoli_decomposed(Circuit& c, int method, QubitId a, QubitId b, QubitId t) {
  switch (method) {
    case 1: toffoli_method1(c, a, b, t); break;
    case 2: toffoli_method2(c, a, b, t); break;
    case 3: toffoli_method3(c, a, b, t); break;
    case 4: toffoli_method4(c, a, b, t); break;
    case 5: toffoli_method5(c, a, b, t); break;
    default: throw std::invalid_argument("toffoli method must be 1..5");
  }
}

// ---------------------------------------------------------------------------
// CSWAP decompositions (control, t1, t2); 7 T each, T-depth 4 resp. 3.
// ---------------------------------------------------------------------------
inline void cswap_method1(Circuit& c, QubitId ctl, QubitId t1, QubitId t2) {
  c.cnot(t2, t1);
  c.cnot(ctl, t1);
  c.h(t2);
  c.t(ctl);
  c.tdg(t1);
  c.t(t2);
  c.cnot(t2, t1);
  c.cnot(ctl, t2);
  c.t(t1);
  c.cnot(ctl, t1);
  c.tdg(t2);
  c.tdg(t1);
  c.cnot(ctl, t2);
  c.cnot(t2, t1);
  c.t(t1);
  c.h(t2);
  c.cnot(t2, t1);
}

inline void cswap_method2(Circuit& c, QubitId ctl, QubitId t1, QubitId t2) {
  c.cnot(t2, t1);
  c.h(t2);
  c.t(ctl);
  c.t(t1);
  c.t(t2);
  c.cnot(t1, ctl);
  c.cnot(t2, t1);
  c.cnot(ctl, t2);
  c.tdg(t1);
  c.t(t2);
  c.cnot(ctl, t1);
  c.tdg(ctl);
  c.tdg(t1);
  c.cnot(t2, t1);
  c.cnot(ctl, t2);
  c.cnot(t1, ctl);
  c.h(t2);
  c.cnot(t2, t1);
}

inline void cswap_decomposed(Circuit& c, int method, QubitId ctl, QubitId t1, QubitId t2) {
  switch (method) {
    case 1: cswap_method1(c, ctl, t1, t2); break;
    case 2: cswap_method2(c, ctl, t1, t2); break;
    default: throw std::invalid_argument("cswap method must be 1 or 2");
  }
}

// ---------------------------------------------------------------------------
// Multi-control Toffoli via the Logical-And ladder: a balanced binary tree
// pairs the first k-1 controls down to one signal; the middle Toffoli takes
// that signal and the last control onto the target. Costs for k = m+2
// controls: T-count 4m+7, T-depth 2+floor(log2 m)+3, qubits 2m+3.
// ---------------------------------------------------------------------------
enum class CnNotForm : std::uint8_t { Unpaired, ComputeHalf, UncomputeHalf };

struct CnNotLadder {
  std::vector<QubitId> ancillas;                      // tree ancillas, emission order
  std::vector<std::pair<QubitId, QubitId>> sources;   // inputs of each tree node
};

inline CnNotLadder cnnot_ladder_compute(Circuit& c, const std::vector<QubitId>& controls) {
  CnNotLadder lad;
  std::vector<QubitId> level(controls.begin(), controls.end() - 1);
  while (level.size() > 1) {
    std::vector<QubitId> next;
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
      QubitId w = c.allocate_one(WireLabel::RadixAncilla);
      logical_and_compute_onto(c, level[i], level[i + 1], w);
      lad.ancillas.push_back(w);
      lad.sources.emplace_back(level[i], level[i + 1]);
      next.push_back(w);
    }
    if (level.size() % 2) next.push_back(level.back());
    level = std::move(next);
  }
  // ancillas.back() is the tree top
  return lad;
}

inline void cnnot_ladder_uncompute(Circuit& c, CnNotLadder& lad) {
  // reverse order, measurement based; tree top is the last entry and is a node
  for (std::size_t i = lad.sources.size(); i-- > 0;) {
    logical_and_uncompute(c, lad.sources[i].first, lad.sources[i].second, lad.ancillas[i]);
  }
  lad.ancillas.clear();
  lad.sources.clear();
}

// Emits a k-control NOT. For Unpaired the ladder is computed, the middle
// Toffoli applied, and the ladder measured away. ComputeHalf leaves the
// ladder live and returns it for a later UncomputeHalf.
inline CnNotLadder cnnot(Circuit& c, const std::vector<QubitId>& controls, QubitId target,
                         CnNotForm form = CnNotForm::Unpaired, int middle_method = 3) {
  if (controls.size() < 2) throw std::invalid_argument("cnnot needs k >= 2 controls");
  if (form == CnNotForm::UncomputeHalf)
    throw std::invalid_argument("use cnnot_uncompute_half with the saved ladder");
  if (controls.size() == 2) {
    toffoli_decomposed(c, middle_method, controls[0], controls[1], target);
    return {};
  }
  CnNotLadder lad = cnnot_ladder_compute(c, controls);
  toffoli_decomposed(c, middle_method, lad.ancillas.back(), controls.back(), target);
  if (form == CnNotForm::Unpaired) {
    cnnot_ladder_uncompute(c, lad);
    return {};
  }
  return lad;
}

// Uncompute half of a paired CnNOT: middle Toffoli again, then the ladder.
inline void cnnot_uncompute_half(Circuit& c, const std::vector<QubitId>& controls,
                                 QubitId target, CnNotLadder& lad, int middle_method = 3) {
  if (controls.size() == 2) {
    toffoli_decomposed(c, middle_method, controls[0], controls[1], target);
    return;
  }
  QubitId top = lad.ancillas.back();
  toffoli_decomposed(c, middle_method, top, controls.back(), target);
  cnnot_ladder_uncompute(c, lad);
}

}  // namespace qradix
