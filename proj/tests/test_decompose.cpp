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

#include <catch2/catch_amalgamated.hpp>

#include "qradix/decompose.hpp"
#include "qradix/metrics.hpp"
#include "qradix/simulate.hpp"

using namespace qradix;

TEST_CASE("logical-and computes the conjunction") {
  for (int x = 0; x <= 1; ++x)
    for (int y = 0; y <= 1; ++y) {
      Circuit c;
      auto v = c.allocate(2);
      QubitId anc = logical_and_compute(c, v[0], v[1]);
      std::uint64_t in = (x ? 1u : 0u) | (y ? 2u : 0u);
      StateVector sv = statevector_run(c, in);
      std::uint64_t want = in | (static_cast<std::uint64_t>(x & y) << anc);
      CHECK(std::norm(sv.amp[want]) == Catch::Approx(1.0).margin(1e-9));
    }
  Circuit c;
  auto v = c.allocate(2);
  logical_and_compute(c, v[0], v[1]);
  CHECK(t_count(c) == 4);
  CHECK(t_depth_scheduled(c) == 2);
}

TEST_CASE("logical-and with a one-initialized ancilla flips the flag") {
  for (int x = 0; x <= 1; ++x)
    for (int y = 0; y <= 1; ++y) {
      Circuit c;
      auto v = c.allocate(2);
      QubitId anc = logical_and_compute(c, v[0], v[1], AncillaInit::One);
      std::uint64_t in = (x ? 1u : 0u) | (y ? 2u : 0u);
      StateVector sv = statevector_run(c, in);
      std::uint64_t want = in | (static_cast<std::uint64_t>(1 ^ (x & y)) << anc);
      CHECK(std::norm(sv.amp[want]) == Catch::Approx(1.0).margin(1e-9));
    }
}

TEST_CASE("logical-and uncompute restores the inputs on both branches") {
  for (int x = 0; x <= 1; ++x)
    for (int y = 0; y <= 1; ++y)
      for (int branch = 0; branch <= 1; ++branch) {
        Circuit c;
        auto v = c.allocate(2);
        QubitId anc = logical_and_compute(c, v[0], v[1]);
        logical_and_uncompute(c, v[0], v[1], anc);
        CHECK(t_count(c) == 4);  // uncompute adds no T
        std::uint64_t in = (x ? 1u : 0u) | (y ? 2u : 0u);
        BranchPolicy bp;
        bp.forced = {branch};
        StateVector sv;
        try {
          sv = statevector_run(c, in, bp);
        } catch (const ImpossibleBranchError&) {
          continue;
        }
        CHECK(std::norm(sv.amp[in]) == Catch::Approx(1.0).margin(1e-9));
      }
}

TEST_CASE("the five unpaired-Toffoli methods") {
  const long want_depth[5] = {6, 4, 3, 2, 1};
  const long want_anc[5] = {0, 0, 0, 1, 4};
  for (int m = 1; m <= 5; ++m) {
    Circuit c;
    auto v = c.allocate(3);
    toffoli_decomposed(c, m, v[0], v[1], v[2]);
    auto eq = unitary_equiv(c, ReferenceKind::Toffoli);
    INFO("method " << m);
    CHECK(eq.equivalent);
    CHECK(eq.max_error < 1e-9);
    CHECK(t_count(c) == 7);
    CHECK(t_depth_scheduled(c) == want_depth[m - 1]);
    CHECK(qubit_count(c) == 3 + want_anc[m - 1]);
  }
  Circuit c;
  auto v = c.allocate(3);
  CHECK_THROWS_AS(toffoli_decomposed(c, 6, v[0], v[1], v[2]), std::invalid_argument);
}

TEST_CASE("cswap decompositions") {
  const long want_depth[2] = {4, 3};
  for (int m = 1; m <= 2; ++m) {
    Circuit c;
    auto v = c.allocate(3);
    cswap_decomposed(c, m, v[0], v[1], v[2]);
    auto eq = unitary_equiv(c, ReferenceKind::Fredkin);
    INFO("cswap method " << m);
    CHECK(eq.equivalent);
    CHECK(t_count(c) == 7);
    CHECK(t_depth_scheduled(c) == want_depth[m - 1]);
  }
  // basis truth table: ctrl=1 swaps
  Circuit c;
  auto v = c.allocate(3);
  cswap_decomposed(c, 2, v[0], v[1], v[2]);
  StateVector sv = statevector_run(c, 0b101);  // ctrl=1, t1=0, t2=1
  CHECK(std::norm(sv.amp[0b011]) == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("multi-control NOT matches the cost table") {
  struct Want { int k; long tc, td, qc; };
  for (auto [k, tc, td, qc] : {Want{2, 7, 3, 3}, Want{3, 11, 5, 5}, Want{4, 15, 6, 7},
                               Want{5, 19, 6, 9}, Want{6, 23, 7, 11}}) {
    Circuit c;
    auto ctl = c.allocate(static_cast<std::size_t>(k));
    QubitId t = c.allocate_one();
    cnnot(c, ctl, t, CnNotForm::Unpaired, 3);
    INFO("k = " << k);
    CHECK(t_count(c) == tc);
    CHECK(t_depth_scheduled(c) == td);
    CHECK(qubit_count(c) == qc);
  }
  Circuit c;
  auto ctl = c.allocate(1);
  QubitId t = c.allocate_one();
  CHECK_THROWS_AS(cnnot(c, ctl, t), std::invalid_argument);
}

TEST_CASE("raw multi-control NOT acts as AND of the controls") {
  for (int k = 2; k <= 6; ++k) {
    Circuit raw;
    auto rc = raw.allocate(static_cast<std::size_t>(k));
    QubitId rt = raw.allocate_one();
    std::vector<QubitId> ops(rc);
    ops.push_back(rt);
    if (k == 2) raw.toffoli(rc[0], rc[1], rt);
    else raw.emit(GateKind::CnNot, ops);
    for (std::uint64_t in = 0; in < (1u << k); ++in) {
      BitState st;
      st.bits.assign(raw.num_wires(), 0);
      for (int i = 0; i < k; ++i) st.bits[rc[i]] = (in >> i) & 1;
      BitState outp = reversible_run(raw, st);
      bool all = in + 1 == (1u << k);
      CHECK(outp.bits[rt] == (all ? 1 : 0));
      for (int i = 0; i < k; ++i) CHECK(outp.bits[rc[i]] == ((in >> i) & 1));
    }
  }
}

TEST_CASE("decomposed multi-control NOT is correct on the state vector") {
  // k = 4, controls (1,1,1,0): target stays 0, controls restored
  Circuit c;
  auto ctl = c.allocate(4);
  QubitId t = c.allocate_one();
  cnnot(c, ctl, t, CnNotForm::Unpaired, 3);
  BranchPolicy bp;
  bp.forced.assign(8, 0);
  std::uint64_t in = 0b0111;  // ctl0..2 set, ctl3 clear
  StateVector sv = statevector_run(c, in, bp);
  CHECK(std::norm(sv.amp[in]) == Catch::Approx(1.0).margin(1e-9));
  // all-ones flips the target, for both forced branch settings
  for (int f : {0, 1}) {
    BranchPolicy b2;
    b2.forced.assign(8, f);
    StateVector sv2;
    try {
      sv2 = statevector_run(c, 0b1111, b2);
    } catch (const ImpossibleBranchError&) {
      continue;
    }
    CHECK(std::norm(sv2.amp[0b1111 | (1u << t)]) == Catch::Approx(1.0).margin(1e-9));
  }
}

TEST_CASE("paired halves beat an unpaired pair for three or more controls") {
  for (int k = 3; k <= 6; ++k) {
    Circuit paired;
    auto ctl = paired.allocate(static_cast<std::size_t>(k));
    QubitId t = paired.allocate_one();
    CnNotLadder lad = cnnot(paired, ctl, t, CnNotForm::ComputeHalf, 3);
    cnnot_uncompute_half(paired, ctl, t, lad, 3);
    Circuit twice;
    auto c2 = twice.allocate(static_cast<std::size_t>(k));
    QubitId t2 = twice.allocate_one();
    cnnot(twice, c2, t2, CnNotForm::Unpaired, 3);
    cnnot(twice, c2, t2, CnNotForm::Unpaired, 3);
    CHECK(t_count(paired) < t_count(twice));
    CHECK(t_count(paired) == 4 * (k - 2) + 2 * 7);
    // basis action: compute then uncompute is the identity
    for (int f : {0, 1}) {
      BranchPolicy bp;
      bp.forced.assign(16, f);
      std::uint64_t in = (1u << k) - 1;
      StateVector sv;
      try {
        sv = statevector_run(paired, in, bp);
      } catch (const ImpossibleBranchError&) {
        continue;
      }
      CHECK(std::norm(sv.amp[in]) == Catch::Approx(1.0).margin(1e-9));
    }
  }
}
