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
#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "qradix/circuit.hpp"

namespace qradix {

struct NotDecomposedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResourceReport {
  long t_count = 0;
  long t_depth_scheduled = 0;
  long t_depth_staged = 0;
  long qubit_count = 0;
  std::map<GateKind, long> gate_histogram;
};

inline void require_clifford_t(const Circuit& c) {
  for (const auto& g : c.gates())
    if (g.kind == GateKind::Toffoli || g.kind == GateKind::CnNot || g.kind == GateKind::Cswap)
      throw NotDecomposedError("circuit contains undecomposed multi-qubit gates");
}

inline long t_count(const Circuit& c) {
  require_clifford_t(c);
  long n = 0;
  for (const auto& g : c.gates())
    if (is_t_like(g.kind)) ++n;
  return n;
}

// ASAP scheduling where only T layers cost time: each gate's level is the
// max level over its operand wires (and classical-bit dependencies), plus one
// if it is a T/Tdg. Classical control serializes against the writing Measure.
// Returns the number of T layers.
namespace detail {

template <typename Filter>
long t_layers(const Circuit& c, Filter&& keep) {
  std::vector<long> wire(c.num_wires(), 0);
  std::vector<long> bit(c.classical_bits(), 0);
  long depth = 0;
  for (const auto& g : c.gates()) {
    if (!keep(g)) continue;
    long lv = 0;
    for (QubitId q : g.qubits) lv = std::max(lv, wire[q]);
    if (g.bit != kNoBit &&
        (g.kind == GateKind::ClassicallyControlledZ ||
         g.kind == GateKind::ClassicallyControlledX ||
         g.kind == GateKind::ClassicallyControlledCz))
      lv = std::max(lv, bit[g.bit]);
    if (is_t_like(g.kind)) ++lv;
    for (QubitId q : g.qubits) wire[q] = lv;
    if (g.kind == GateKind::Measure) bit[g.bit] = lv;
    depth = std::max(depth, lv);
  }
  return depth;
}

}  // namespace detail

inline long t_depth_scheduled(const Circuit& c) {
  require_clifford_t(c);
  return detail::t_layers(c, [](const Gate&) { return true; });
}

// Sum over stages of the scheduled depth restricted to that stage's gates.
inline long t_depth_staged(const Circuit& c) {
  require_clifford_t(c);
  bool any_tagged = false, any_untagged = false;
  std::uint8_t max_stage = 0;
  for (const auto& g : c.gates()) {
    if (g.stage == 0) any_untagged = true;
    else { any_tagged = true; max_stage = std::max(max_stage, g.stage); }
  }
  if (!any_tagged) return t_depth_scheduled(c);
  if (any_untagged) throw StructuralError("untagged gates in a staged circuit");
  long total = 0;
  for (std::uint8_t s = 1; s <= max_stage; ++s)
    total += detail::t_layers(c, [s](const Gate& g) { return g.stage == s; });
  return total;
}

inline long stage_t_depth(const Circuit& c, std::uint8_t s) {
  return detail::t_layers(c, [s](const Gate& g) { return g.stage == s; });
}

inline long stage_t_count(const Circuit& c, std::uint8_t s) {
  long n = 0;
  for (const auto& g : c.gates())
    if (g.stage == s && is_t_like(g.kind)) ++n;
  return n;
}

inline long qubit_count(const Circuit& c) { return static_cast<long>(c.high_water()); }

inline ResourceReport report(const Circuit& c) {
  ResourceReport r;
  r.t_count = t_count(c);
  r.t_depth_scheduled = t_depth_scheduled(c);
  bool tagged = false;
  for (const auto& g : c.gates())
    if (g.stage != 0) { tagged = true; break; }
  r.t_depth_staged = tagged ? t_depth_staged(c) : r.t_depth_scheduled;
  r.qubit_count = qubit_count(c);
  for (const auto& g : c.gates()) ++r.gate_histogram[g.kind];
  return r;
}

}  // namespace qradix
