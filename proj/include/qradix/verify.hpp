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

#include <random>
#include <string>
#include <vector>

#include "qradix/adder.hpp"
#include "qradix/simulate.hpp"

namespace qradix {

struct VerificationReport {
  long total = 0;
  long passed = 0;
  std::vector<std::string> failures;  // capped
  bool ok() const { return passed == total; }
};

struct VerifyMode {
  bool exhaustive = true;
  long samples = 256;
  std::uint64_t seed = 0;
};

// Reversible-level arithmetic check: b <- (a+b) mod 2^n, a preserved, every
// ancilla back to zero.
inline VerificationReport verify_adder(const AdderSpec& spec, VerifyMode mode = {}) {
  if (mode.exhaustive && spec.n > 8)
    throw std::invalid_argument("exhaustive verification is limited to n <= 8");
  SynthResult res = synth_adder(spec, SynthLevel::Toffoli);
  const long mask = (1L << spec.n) - 1;
  VerificationReport rep;
  std::mt19937_64 rng(mode.seed);
  auto run_one = [&](long av, long bv) {
    BitState st;
    st.bits.assign(res.circuit.num_wires(), 0);
    for (int i = 0; i < spec.n; ++i) {
      st.bits[res.a[i]] = static_cast<std::uint8_t>((av >> i) & 1);
      st.bits[res.b[i]] = static_cast<std::uint8_t>((bv >> i) & 1);
    }
    BitState out = reversible_run(res.circuit, st);
    long ao = 0, bo = 0;
    for (int i = 0; i < spec.n; ++i) {
      ao |= static_cast<long>(out.bits[res.a[i]]) << i;
      bo |= static_cast<long>(out.bits[res.b[i]]) << i;
    }
    bool anc_clean = true;
    for (std::size_t w = 0; w < out.bits.size(); ++w) {
      bool io = false;
      for (int i = 0; i < spec.n; ++i)
        if (res.a[i] == w || res.b[i] == w) io = true;
      if (!io && out.bits[w]) anc_clean = false;
    }
    ++rep.total;
    if (ao == av && bo == ((av + bv) & mask) && anc_clean) {
      ++rep.passed;
    } else if (rep.failures.size() < 16) {
      rep.failures.push_back("a=" + std::to_string(av) + " b=" + std::to_string(bv) +
                             " -> a'=" + std::to_string(ao) + " b'=" + std::to_string(bo) +
                             (anc_clean ? "" : " dirty-ancilla"));
    }
  };
  if (mode.exhaustive) {
    for (long av = 0; av <= mask; ++av)
      for (long bv = 0; bv <= mask; ++bv) run_one(av, bv);
  } else {
    std::uniform_int_distribution<long> dist(0, mask);
    for (long k = 0; k < mode.samples; ++k) run_one(dist(rng), dist(rng));
  }
  return rep;
}

}  // namespace qradix
