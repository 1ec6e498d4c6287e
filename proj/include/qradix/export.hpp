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

#include <json.hpp>

#include "qradix/circuit.hpp"

namespace qradix {

// OpenQASM 2.0. Classical bits become one-bit cregs so classically
// controlled corrections can use the `if (c==1)` form.
inline void write_qasm(std::ostream& os, const Circuit& c) {
  os << "OPENQASM 2.0;\n";
  os << "include \"qelib1.inc\";\n";
  os << "qreg q[" << c.num_wires() << "];\n";
  for (std::size_t i = 0; i < c.classical_bits(); ++i) os << "creg m" << i << "[1];\n";
  for (const auto& g : c.gates()) {
    auto q = [&](int i) { return "q[" + std::to_string(g.qubits[static_cast<std::size_t>(i)]) + "]"; };
    switch (g.kind) {
      case GateKind::X: os << "x " << q(0) << ";\n"; break;
      case GateKind::H: os << "h " << q(0) << ";\n"; break;
      case GateKind::S: os << "s " << q(0) << ";\n"; break;
      case GateKind::Sdg: os << "sdg " << q(0) << ";\n"; break;
      case GateKind::T: os << "t " << q(0) << ";\n"; break;
      case GateKind::Tdg: os << "tdg " << q(0) << ";\n"; break;
      case GateKind::Z: os << "z " << q(0) << ";\n"; break;
      case GateKind::Cnot: os << "cx " << q(0) << "," << q(1) << ";\n"; break;
      case GateKind::Cz: os << "cz " << q(0) << "," << q(1) << ";\n"; break;
      case GateKind::Toffoli: os << "ccx " << q(0) << "," << q(1) << "," << q(2) << ";\n"; break;
      case GateKind::Cswap: os << "cswap " << q(0) << "," << q(1) << "," << q(2) << ";\n"; break;
      case GateKind::Measure:
        os << "measure " << q(0) << " -> m" << g.bit << "[0];\n";
        break;
      case GateKind::ClassicallyControlledZ:
        os << "if (m" << g.bit << "==1) z " << q(0) << ";\n";
        break;
      case GateKind::ClassicallyControlledX:
        os << "if (m" << g.bit << "==1) x " << q(0) << ";\n";
        break;
      case GateKind::ClassicallyControlledCz:
        os << "if (m" << g.bit << "==1) cz " << q(0) << "," << q(1) << ";\n";
        break;
      case GateKind::CnNot:
        throw StructuralError("QASM export: decompose CnNOT before writing");
    }
  }
}

inline nlohmann::json circuit_to_json(const Circuit& c) {
  nlohmann::json j;
  j["wires"] = c.num_wires();
  j["classical_bits"] = c.classical_bits();
  j["gates"] = nlohmann::json::array();
  for (const auto& g : c.gates()) {
    nlohmann::json e;
    e["kind"] = kind_name(g.kind);
    e["qubits"] = g.qubits;
    if (g.bit != kNoBit) e["bit"] = g.bit;
    if (g.stage != 0) e["stage"] = g.stage;
    j["gates"].push_back(std::move(e));
  }
  return j;
}

}  // namespace qradix
