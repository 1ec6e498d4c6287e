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

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "qradix/circuit.hpp"

namespace qradix {

// ---------------------------------------------------------------------------
// Bit-level reversible executor for classical-gate circuits at any width.
// ---------------------------------------------------------------------------
struct BitState {
  std::vector<std::uint8_t> bits;       // indexed by wire id
  std::vector<std::uint8_t> classical;  // indexed by classical bit id
};

struct UnsupportedGateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline BitState reversible_run(const Circuit& c, BitState st) {
  st.bits.resize(c.num_wires(), 0);
  st.classical.resize(c.classical_bits(), 0);
  auto& b = st.bits;
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::X: b[g.qubits[0]] ^= 1; break;
      case GateKind::Cnot: b[g.qubits[1]] ^= b[g.qubits[0]]; break;
      case GateKind::Toffoli:
        b[g.qubits[2]] ^= static_cast<std::uint8_t>(b[g.qubits[0]] & b[g.qubits[1]]);
        break;
      case GateKind::CnNot: {
        std::uint8_t all = 1;
        for (std::size_t i = 0; i + 1 < g.qubits.size(); ++i) all &= b[g.qubits[i]];
        b[g.qubits.back()] ^= all;
        break;
      }
      case GateKind::Cswap:
        if (b[g.qubits[0]]) std::swap(b[g.qubits[1]], b[g.qubits[2]]);
        break;
      default:
        throw UnsupportedGateError(std::string("non-classical gate in reversible run: ") +
                                   kind_name(g.kind));
    }
  }
  return st;
}

// ---------------------------------------------------------------------------
// Dense state-vector executor with measurement and classical control.
// ---------------------------------------------------------------------------
struct BranchPolicy {
  // forced outcomes consumed in measurement order; empty = random via seed
  std::vector<int> forced;
  std::uint64_t seed = 0;
};

struct StateVector {
  std::vector<std::complex<double>> amp;
  std::size_t num_qubits = 0;
  std::vector<std::uint8_t> outcomes;  // indexed by classical bit id

  double norm() const {
    double n = 0;
    for (const auto& a : amp) n += std::norm(a);
    return std::sqrt(n);
  }
};

struct ImpossibleBranchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultQubitCap = 22;

inline StateVector statevector_run(const Circuit& c, std::uint64_t input_basis,
                                   BranchPolicy branch = {},
                                   std::size_t cap = kDefaultQubitCap) {
  const std::size_t nq = c.num_wires();
  if (nq > cap) throw CapExceededError("state-vector width " + std::to_string(nq) +
                                       " exceeds cap " + std::to_string(cap));
  StateVector sv;
  sv.num_qubits = nq;
  sv.amp.assign(std::size_t{1} << nq, {0.0, 0.0});
  sv.amp[input_basis] = 1.0;
  sv.outcomes.assign(c.classical_bits(), 0);

  std::mt19937_64 rng(branch.seed);
  std::size_t forced_idx = 0;
  const std::complex<double> ipi4 = std::exp(std::complex<double>(0, std::numbers::pi / 4));

  auto for_pairs = [&](QubitId q, auto&& f) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < sv.amp.size(); ++i)
      if (!(i & bit)) f(i, i | bit);
  };
  auto phase_if = [&](auto&& pred, std::complex<double> ph) {
    for (std::size_t i = 0; i < sv.amp.size(); ++i)
      if (pred(i)) sv.amp[i] *= ph;
  };

  for (const auto& g : c.gates()) {
    const auto& q = g.qubits;
    auto bit_of = [&](int k) { return std::size_t{1} << q[k]; };
    switch (g.kind) {
      case GateKind::X:
        for_pairs(q[0], [&](std::size_t i, std::size_t j) { std::swap(sv.amp[i], sv.amp[j]); });
        break;
      case GateKind::H:
        for_pairs(q[0], [&](std::size_t i, std::size_t j) {
          const auto a = sv.amp[i], b = sv.amp[j];
          constexpr double is2 = 0.70710678118654752440;
          sv.amp[i] = (a + b) * is2;
          sv.amp[j] = (a - b) * is2;
        });
        break;
      case GateKind::S:
        phase_if([&](std::size_t i) { return i & bit_of(0); }, {0.0, 1.0});
        break;
      case GateKind::Sdg:
        phase_if([&](std::size_t i) { return i & bit_of(0); }, {0.0, -1.0});
        break;
      case GateKind::T:
        phase_if([&](std::size_t i) { return i & bit_of(0); }, ipi4);
        break;
      case GateKind::Tdg:
        phase_if([&](std::size_t i) { return i & bit_of(0); }, std::conj(ipi4));
        break;
      case GateKind::Z:
        phase_if([&](std::size_t i) { return i & bit_of(0); }, -1.0);
        break;
      case GateKind::Cz:
        phase_if([&](std::size_t i) { return (i & bit_of(0)) && (i & bit_of(1)); }, -1.0);
        break;
      case GateKind::Cnot:
        for_pairs(q[1], [&](std::size_t i, std::size_t j) {
          if (i & bit_of(0)) std::swap(sv.amp[i], sv.amp[j]);
        });
        break;
      case GateKind::Toffoli:
        for_pairs(q[2], [&](std::size_t i, std::size_t j) {
          if ((i & bit_of(0)) && (i & bit_of(1))) std::swap(sv.amp[i], sv.amp[j]);
        });
        break;
      case GateKind::CnNot:
        for_pairs(q.back(), [&](std::size_t i, std::size_t j) {
          bool all = true;
          for (std::size_t k = 0; k + 1 < q.size(); ++k)
            if (!(i & (std::size_t{1} << q[k]))) { all = false; break; }
          if (all) std::swap(sv.amp[i], sv.amp[j]);
        });
        break;
      case GateKind::Cswap:
        for (std::size_t i = 0; i < sv.amp.size(); ++i) {
          const bool c0 = i & bit_of(0), b1 = i & bit_of(1), b2 = i & bit_of(2);
          if (c0 && b1 && !b2) {
            const std::size_t j = (i & ~bit_of(1)) | bit_of(2);
            std::swap(sv.amp[i], sv.amp[j]);
          }
        }
        break;
      case GateKind::Measure: {
        const std::size_t bit = bit_of(0);
        double p1 = 0;
        for (std::size_t i = 0; i < sv.amp.size(); ++i)
          if (i & bit) p1 += std::norm(sv.amp[i]);
        int outcome;
        if (forced_idx < branch.forced.size()) {
          outcome = branch.forced[forced_idx++];
          const double p = outcome ? p1 : 1.0 - p1;
          if (p < 1e-12) throw ImpossibleBranchError("forced outcome has zero amplitude");
        } else {
          outcome = std::uniform_real_distribution<double>(0, 1)(rng) < p1 ? 1 : 0;
        }
        const double p = outcome ? p1 : 1.0 - p1;
        const double scale = 1.0 / std::sqrt(p);
        for (std::size_t i = 0; i < sv.amp.size(); ++i) {
          if (((i & bit) != 0) != (outcome != 0)) sv.amp[i] = 0;
          else sv.amp[i] *= scale;
        }
        sv.outcomes[g.bit] = static_cast<std::uint8_t>(outcome);
        break;
      }
      case GateKind::ClassicallyControlledZ:
        if (sv.outcomes[g.bit])
          phase_if([&](std::size_t i) { return i & bit_of(0); }, -1.0);
        break;
      case GateKind::ClassicallyControlledX:
        if (sv.outcomes[g.bit])
          for_pairs(q[0], [&](std::size_t i, std::size_t j) { std::swap(sv.amp[i], sv.amp[j]); });
        break;
      case GateKind::ClassicallyControlledCz:
        if (sv.outcomes[g.bit])
          phase_if([&](std::size_t i) { return (i & bit_of(0)) && (i & bit_of(1)); }, -1.0);
        break;
    }
  }
  return sv;
}

// ---------------------------------------------------------------------------
// Unitary equivalence against Toffoli / Fredkin up to one global phase.
// The circuit acts on reference wires 0..2 plus any ancillas, which must
// start and end in |0>.
// ---------------------------------------------------------------------------
enum class ReferenceKind { Toffoli, Fredkin };

struct EquivResult {
  bool equivalent = false;
  double max_error = 1.0;
};

inline EquivResult unitary_equiv(const Circuit& c, ReferenceKind ref, double tol = 1e-9) {
  if (c.has_measurement()) throw StructuralError("unitary_equiv needs a measurement-free circuit");
  auto ref_map = [&](std::uint64_t in) -> std::uint64_t {
    const std::uint64_t a = in & 1, b = (in >> 1) & 1, t = (in >> 2) & 1;
    if (ref == ReferenceKind::Toffoli) return (in & 3) | (((a & b) ^ t) << 2);
    if (a) return a | (t << 1) | (b << 2);  // control q0 swaps q1,q2
    return in;
  };
  std::complex<double> phase{0, 0};
  double max_err = 0;
  for (std::uint64_t in = 0; in < 8; ++in) {
    StateVector sv = statevector_run(c, in);
    const std::uint64_t want = ref_map(in);
    // everything outside |want> x |0...> must vanish; the |want> amplitude
    // must carry a single common phase
    std::complex<double> amp = sv.amp[want];
    if (std::abs(amp) < 1e-9) return {false, 1.0};
    if (in == 0) phase = amp / std::abs(amp);
    for (std::size_t i = 0; i < sv.amp.size(); ++i) {
      const std::complex<double> expect = (i == want) ? phase : std::complex<double>{0, 0};
      max_err = std::max(max_err, std::abs(sv.amp[i] - expect));
    }
  }
  return {max_err < tol, max_err};
}

}  // namespace qradix
