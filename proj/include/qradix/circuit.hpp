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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace qradix {

using QubitId = std::uint32_t;
using ClassicalBit = std::int32_t;
inline constexpr ClassicalBit kNoBit = -1;

enum class GateKind : std::uint8_t {
  X,
  Cnot,
  Toffoli,
  CnNot,  // k >= 3 controls, operands = controls..., target
  Cswap,  // operands = control, t1, t2
  H,
  S,
  Sdg,
  T,
  Tdg,
  Z,
  Cz,
  Measure,               // one qubit operand, writes classical_bit
  ClassicallyControlledZ,
  ClassicallyControlledX,
  ClassicallyControlledCz,
};

inline bool is_t_like(GateKind k) { return k == GateKind::T || k == GateKind::Tdg; }

inline bool is_classical_gate(GateKind k) {
  switch (k) {
    case GateKind::X:
    case GateKind::Cnot:
    case GateKind::Toffoli:
    case GateKind::CnNot:
    case GateKind::Cswap:
      return true;
    default:
      return false;
  }
}

inline const char* kind_name(GateKind k) {
  switch (k) {
    case GateKind::X: return "x";
    case GateKind::Cnot: return "cx";
    case GateKind::Toffoli: return "ccx";
    case GateKind::CnNot: return "cnx";
    case GateKind::Cswap: return "cswap";
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::Z: return "z";
    case GateKind::Cz: return "cz";
    case GateKind::Measure: return "measure";
    case GateKind::ClassicallyControlledZ: return "ccl_z";
    case GateKind::ClassicallyControlledX: return "ccl_x";
    case GateKind::ClassicallyControlledCz: return "ccl_cz";
  }
  return "?";
}

// Wire role tags, mostly for debugging and QASM comments.
enum class WireLabel : std::uint8_t {
  InputA,
  InputB,
  GAncilla,
  RadixAncilla,
  CarryAncilla,
  RcaAncilla,
  Scratch,
};

struct Gate {
  GateKind kind;
  std::vector<QubitId> qubits;  // ordered operands; target last for NOT-like kinds
  ClassicalBit bit = kNoBit;
  std::uint8_t stage = 0;  // 0 = untagged

  // fixed arity for fixed-arity kinds; CnNot is variable (>= 4 operands)
  static int arity(GateKind k) {
    switch (k) {
      case GateKind::X:
      case GateKind::H:
      case GateKind::S:
      case GateKind::Sdg:
      case GateKind::T:
      case GateKind::Tdg:
      case GateKind::Z:
      case GateKind::Measure:
      case GateKind::ClassicallyControlledZ:
      case GateKind::ClassicallyControlledX:
        return 1;
      case GateKind::Cnot:
      case GateKind::Cz:
      case GateKind::ClassicallyControlledCz:
        return 2;
      case GateKind::Toffoli:
      case GateKind::Cswap:
        return 3;
      case GateKind::CnNot:
        return -1;
    }
    return -1;
  }
};

struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInvertibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Gate-level IR: ordered gates, explicit qubit liveness, peak tracking.
// Circuits are cheap value types; builders construct one and hand it off.
class Circuit {
 public:
  Circuit() = default;

  // --- allocation -----------------------------------------------------

  // Allocates `count` wires. Recycles released ids unless `fresh` is set;
  // builders ask for fresh wires where the cost model counts a new qubit.
  std::vector<QubitId> allocate(std::size_t count, WireLabel label = WireLabel::Scratch,
                                bool fresh = false) {
    std::vector<QubitId> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(allocate_one(label, fresh));
    return out;
  }

  QubitId allocate_one(WireLabel label = WireLabel::Scratch, bool fresh = false) {
    QubitId id;
    if (!fresh && !free_list_.empty()) {
      id = free_list_.back();
      free_list_.pop_back();
      live_[id] = true;
    } else {
      id = static_cast<QubitId>(live_.size());
      live_.push_back(true);
      labels_.push_back(label);
    }
    ++live_count_;
    if (live_count_ > high_water_) high_water_ = live_count_;
    return id;
  }

  void release(QubitId q) {
    check_live(q);
    live_[q] = false;
    free_list_.push_back(q);
    --live_count_;
  }

  void release(const std::vector<QubitId>& qs) {
    for (QubitId q : qs) release(q);
  }

  ClassicalBit new_classical_bit() { return static_cast<ClassicalBit>(classical_bits_++); }

  // --- gate emission --------------------------------------------------

  void append(Gate g) {
    validate(g);
    gates_.push_back(std::move(g));
  }

  void emit(GateKind k, std::initializer_list<QubitId> qs) {
    append(Gate{k, std::vector<QubitId>(qs), kNoBit, stage_});
  }
  void emit(GateKind k, std::vector<QubitId> qs) {
    append(Gate{k, std::move(qs), kNoBit, stage_});
  }

  void x(QubitId q) { emit(GateKind::X, {q}); }
  void h(QubitId q) { emit(GateKind::H, {q}); }
  void s(QubitId q) { emit(GateKind::S, {q}); }
  void sdg(QubitId q) { emit(GateKind::Sdg, {q}); }
  void t(QubitId q) { emit(GateKind::T, {q}); }
  void tdg(QubitId q) { emit(GateKind::Tdg, {q}); }
  void z(QubitId q) { emit(GateKind::Z, {q}); }
  void cnot(QubitId c, QubitId t) { emit(GateKind::Cnot, {c, t}); }
  void cz(QubitId a, QubitId b) { emit(GateKind::Cz, {a, b}); }
  void toffoli(QubitId a, QubitId b, QubitId t) { emit(GateKind::Toffoli, {a, b, t}); }
  void cswap(QubitId c, QubitId t1, QubitId t2) { emit(GateKind::Cswap, {c, t1, t2}); }

  ClassicalBit measure(QubitId q) {
    ClassicalBit m = new_classical_bit();
    append(Gate{GateKind::Measure, {q}, m, stage_});
    return m;
  }
  void cc_z(QubitId q, ClassicalBit m) {
    append(Gate{GateKind::ClassicallyControlledZ, {q}, m, stage_});
  }
  void cc_x(QubitId q, ClassicalBit m) {
    append(Gate{GateKind::ClassicallyControlledX, {q}, m, stage_});
  }
  void cc_cz(QubitId a, QubitId b, ClassicalBit m) {
    append(Gate{GateKind::ClassicallyControlledCz, {a, b}, m, stage_});
  }

  // stage tag applied to subsequently emitted gates
  void set_stage(std::uint8_t s) { stage_ = s; }
  std::uint8_t stage() const { return stage_; }

  // --- composition ----------------------------------------------------

  // Reverses gate order and inverts each gate. Fails on measurement or
  // classically controlled gates.
  Circuit adjoint() const {
    Circuit out;
    out.live_ = live_;
    out.labels_ = labels_;
    out.free_list_ = free_list_;
    out.live_count_ = live_count_;
    out.high_water_ = high_water_;
    out.classical_bits_ = classical_bits_;
    out.gates_.reserve(gates_.size());
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
      Gate g = *it;
      switch (g.kind) {
        case GateKind::T: g.kind = GateKind::Tdg; break;
        case GateKind::Tdg: g.kind = GateKind::T; break;
        case GateKind::S: g.kind = GateKind::Sdg; break;
        case GateKind::Sdg: g.kind = GateKind::S; break;
        case GateKind::Measure:
        case GateKind::ClassicallyControlledZ:
        case GateKind::ClassicallyControlledX:
        case GateKind::ClassicallyControlledCz:
          throw NotInvertibleError("adjoint of a measuring circuit");
        default: break;  // self-inverse
      }
      out.gates_.push_back(std::move(g));
    }
    return out;
  }

  // Concatenates `other` onto this circuit. `other`'s qubit ids are mapped
  // through `map` (identity for ids not present). Unmappable = structural error.
  Circuit compose(const Circuit& other,
                  const std::unordered_map<QubitId, QubitId>& map = {}) const {
    Circuit out = *this;
    // grow registry to cover mapped ids
    auto translate = [&](QubitId q) -> QubitId {
      auto it = map.find(q);
      QubitId m = (it == map.end()) ? q : it->second;
      if (m >= out.live_.size())
        throw StructuralError("compose: unmappable qubit " + std::to_string(q));
      return m;
    };
    ClassicalBit bit_base = static_cast<ClassicalBit>(out.classical_bits_);
    out.classical_bits_ += other.classical_bits_;
    for (const Gate& g : other.gates_) {
      Gate h = g;
      for (auto& q : h.qubits) q = translate(q);
      if (h.bit != kNoBit) h.bit += bit_base;
      out.gates_.push_back(std::move(h));
    }
    return out;
  }

  // --- accessors --------------------------------------------------------

  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  std::size_t num_wires() const { return live_.size(); }
  std::size_t classical_bits() const { return classical_bits_; }
  std::size_t live_count() const { return live_count_; }
  std::size_t high_water() const { return high_water_; }
  bool is_live(QubitId q) const { return q < live_.size() && live_[q]; }
  WireLabel label(QubitId q) const { return labels_.at(q); }

  bool has_measurement() const {
    for (const auto& g : gates_)
      if (g.kind == GateKind::Measure) return true;
    return false;
  }

 private:
  void check_live(QubitId q) const {
    if (q >= live_.size()) throw StructuralError("unregistered qubit " + std::to_string(q));
    if (!live_[q]) throw StructuralError("dead qubit " + std::to_string(q));
  }

  void validate(const Gate& g) const {
    int ar = Gate::arity(g.kind);
    if (ar >= 0 && static_cast<int>(g.qubits.size()) != ar)
      throw StructuralError("arity mismatch for gate");
    if (g.kind == GateKind::CnNot && g.qubits.size() < 4)
      throw StructuralError("CnNOT needs at least 3 controls");
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
      check_live(g.qubits[i]);
      for (std::size_t j = i + 1; j < g.qubits.size(); ++j)
        if (g.qubits[i] == g.qubits[j]) throw StructuralError("duplicate operand");
    }
    if (g.kind == GateKind::Measure && g.bit == kNoBit)
      throw StructuralError("measure without classical bit");
    if ((g.kind == GateKind::ClassicallyControlledZ ||
         g.kind == GateKind::ClassicallyControlledX ||
         g.kind == GateKind::ClassicallyControlledCz)) {
      if (g.bit == kNoBit) throw StructuralError("classical control without bit");
      bool written = false;
      for (const auto& prev : gates_)
        if (prev.kind == GateKind::Measure && prev.bit == g.bit) { written = true; break; }
      if (!written && g.bit >= static_cast<ClassicalBit>(classical_bits_))
        throw StructuralError("classical control reads unwritten bit");
    }
  }

  std::vector<Gate> gates_;
  std::vector<bool> live_;          // indexed by qubit id
  std::vector<WireLabel> labels_;
  std::vector<QubitId> free_list_;
  std::size_t live_count_ = 0;
  std::size_t high_water_ = 0;
  std::size_t classical_bits_ = 0;
  std::uint8_t stage_ = 0;
};

}  // namespace qradix
