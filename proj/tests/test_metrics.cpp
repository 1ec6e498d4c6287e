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
#include <random>

#include "qradix/adder.hpp"
#include "qradix/decompose.hpp"
#include "qradix/metrics.hpp"

using namespace qradix;

TEST_CASE("t_count counts T and Tdg only") {
  Circuit empty;
  CHECK(t_count(empty) == 0);

  Circuit m3;
  auto v = m3.allocate(3);
  toffoli_method3(m3, v[0], v[1], v[2]);
  CHECK(t_count(m3) == 7);

  Circuit la;
  auto w = la.allocate(2);
  QubitId anc = logical_and_compute(la, w[0], w[1]);
  CHECK(t_count(la) == 4);
  logical_and_uncompute(la, w[0], w[1], anc);
  CHECK(t_count(la) == 4);

  Circuit undec;
  auto u = undec.allocate(3);
  undec.toffoli(u[0], u[1], u[2]);
  CHECK_THROWS_AS(t_count(undec), NotDecomposedError);
}

TEST_CASE("scheduled T-depth packs independent T layers") {
  Circuit two;
  auto v = two.allocate(2);
  two.t(v[0]);
  two.t(v[1]);
  CHECK(t_depth_scheduled(two) == 1);

  Circuit m5;
  auto q = m5.allocate(3);
  toffoli_method5(m5, q[0], q[1], q[2]);
  CHECK(t_depth_scheduled(m5) == 1);

  Circuit cs;
  auto w = cs.allocate(3);
  cswap_method2(cs, w[0], w[1], w[2]);
  CHECK(t_depth_scheduled(cs) == 3);
}

TEST_CASE("classical control serializes against its measurement") {
  Circuit c;
  auto v = c.allocate(2);
  c.t(v[0]);
  ClassicalBit m = c.measure(v[0]);
  c.cc_x(v[1], m);
  c.t(v[1]);  // must come after the conditioned X, itself after the measure
  CHECK(t_depth_scheduled(c) == 2);
}

TEST_CASE("staged depth sums per-stage schedules") {
  Circuit c;
  auto v = c.allocate(2);
  c.set_stage(1);
  c.t(v[0]);
  c.set_stage(2);
  c.t(v[1]);
  CHECK(t_depth_scheduled(c) == 1);  // parallel wires
  CHECK(t_depth_staged(c) == 2);     // but distinct stages

  Circuit mixed;
  auto w = mixed.allocate(1);
  mixed.set_stage(1);
  mixed.t(w[0]);
  mixed.set_stage(0);
  mixed.t(w[0]);
  CHECK_THROWS_AS(t_depth_staged(mixed), StructuralError);
}

TEST_CASE("scheduled depth is subadditive under composition") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    autoscramble = [&](Circuit& c, std::vector<QubitId>& v) {
      for (int g = 0; g < 12; ++g) {
        auto pick = [&] { return v[rng() % v.size()]; };
        switch (rng() % 3) {
          case 0: c.t(pick()); break;
          case 1: c.h(pick()); break;
          default: {
            QubitId x = pick(), y = pick();
            if (x != y) c.cnot(x, y);
          }
        }
      }
    };
    Circuit c1, c2;
    std::vector<QubitId> v1 = c1.allocate(4), v2 = c2.allocate(4);
    scramble(c1, v1);
    scramble(c2, v2);
    Circuit j = c1.compose(c2);
    REQUIRE(t_depth_scheduled(j) <= t_depth_scheduled(c1) + t_depth_scheduled(c2));
  }
}

TEST_CASE("qubit count is the allocator high-water mark") {
  Circuit cnotc;
  auto v = cnotc.allocate(2);
  cnotc.cnot(v[0], v[1]);
  CHECK(qubit_count(cnotc) == 2);

  // ripple-carry sum path: 3n wires (carry-in, two registers, temps)
  SynthResult rca = gidney_rca(16, Policy::Diamond, SynthLevel::CliffordT);
  CHECK(qubit_count(rca.circuit) == 48);
  // the comparison-table row prices the same adder without the carry wire
  CHECK(cost::competitor_cost("Gidney RCA", Policy::Diamond, 16).qc == 47);

  Circuit c5;
  auto ctl = c5.allocate(5);
  QubitId t = c5.allocate_one();
  cnnot(c5, ctl, t, CnNotForm::Unpaired, 3);
  CHECK(qubit_count(c5) == 9);
}

TEST_CASE("reports are deterministic") {
  SynthResult a = synth_adder({8, 3, Policy::Diamond, false}, SynthLevel::CliffordT);
  SynthResult b = synth_adder({8, 3, Policy::Diamond, false}, SynthLevel::CliffordT);
  ResourceReport ra = report(a.circuit), rb = report(b.circuit);
  CHECK(ra.t_count == rb.t_count);
  CHECK(ra.t_depth_scheduled == rb.t_depth_scheduled);
  CHECK(ra.t_depth_staged == rb.t_depth_staged);
  CHECK(ra.qubit_count == rb.qubit_count);
  CHECK(ra.gate_histogram == rb.gate_histogram);
  CHECK(ra.t_count == ra.gate_histogram[GateKind::T] + ra.gate_histogram[GateKind::Tdg]);
  CHECK(ra.t_depth_scheduled <= ra.t_depth_staged);
}
