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

#include "qradix/circuit.hpp"
#include "qradix/metrics.hpp"

using namespace qradix;

TEST_CASE("append grows the gate list and checks liveness") {
  Circuit c;
  QubitId q0 = c.allocate_one();
  c.x(q0);
  CHECK(c.size() == 1);
  QubitId q1 = c.allocate_one();
  c.cnot(q0, q1);
  CHECK(c.size() == 2);
  c.release(q1);
  CHECK_THROWS_AS(c.x(q1), StructuralError);
  CHECK_THROWS_AS(c.cnot(q0, q0), StructuralError);
}

TEST_CASE("allocation recycles and tracks the high-water mark") {
  Circuit c;
  QubitId a = c.allocate_one();
  CHECK(a == 0);
  CHECK(c.high_water() == 1);
  auto two = c.allocate(2);
  CHECK(c.high_water() == 3);
  c.release(two);
  QubitId b = c.allocate_one();
  CHECK((b == two[0] || b == two[1]));  // recycled id
  CHECK(c.high_water() == 3);
  auto f = c.allocate_one(WireLabel::Scratch, /*fresh=*/true);
  CHECK(f == 3);  // fresh skips the free list
  CHECK(c.high_water() == 4);
  CHECK_THROWS_AS(c.release(two[0] == b ? two[1] : two[0]), StructuralError);  // double release
}

TEST_CASE("high-water never decreases while building") {
  Circuit c;
  std::size_t last = 0;
  for (int k = 0; k < 20; ++k) {
    auto v = c.allocate(3);
    c.release(v);
    REQUIRE(c.high_water() >= last);
    last = c.high_water();
  }
}

TEST_CASE("adjoint reverses and inverts") {
  Circuit c;
  QubitId q = c.allocate_one();
  c.t(q);
  Circuit adj = c.adjoint();
  REQUIRE(adj.size() == 1);
  CHECK(adj.gates()[0].kind == GateKind::Tdg);

  Circuit c2;
  auto v = c2.allocate(3);
  c2.cnot(v[0], v[1]);
  c2.toffoli(v[0], v[1], v[2]);
  Circuit adj2 = c2.adjoint();
  REQUIRE(adj2.size() == 2);
  CHECK(adj2.gates()[0].kind == GateKind::Toffoli);
  CHECK(adj2.gates()[1].kind == GateKind::Cnot);

  Circuit c3;
  QubitId m = c3.allocate_one();
  c3.measure(m);
  CHECK_THROWS_AS(c3.adjoint(), NotInvertibleError);
}

TEST_CASE("compose concatenates and T-count is additive") {
  Circuit c1;
  auto v = c1.allocate(2);
  c1.t(v[0]);
  c1.cnot(v[0], v[1]);
  Circuit c2;
  auto w = c2.allocate(2);
  c2.t(w[0]);
  c2.tdg(w[1]);
  Circuit joined = c1.compose(c2);
  CHECK(joined.size() == c1.size() + c2.size());
  CHECK(t_count(joined) == t_count(c1) + t_count(c2));

  std::unordered_map<QubitId, QubitId> bad{{w[0], 99}};
  CHECK_THROWS_AS(c1.compose(c2, bad), StructuralError);
}

TEST_CASE("classical control must read a written bit") {
  Circuit c;
  QubitId q = c.allocate_one();
  ClassicalBit m = c.measure(q);
  c.cc_z(q, m);  // fine
  Circuit c2;
  QubitId p = c2.allocate_one();
  Gate g{GateKind::ClassicallyControlledZ, {p}, 5, 0};
  CHECK_THROWS_AS(c2.append(g), StructuralError);
}

TEST_CASE("builders are deterministic") {
  auto build = [] {
    Circuit c;
    auto v = c.allocate(4);
    for (int i = 0; i < 3; ++i) c.toffoli(v[0], v[1], v[3]);
    c.release(v[3]);
    return c;
  };
  Circuit a = build(), b = build();
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.gates()[i].kind == b.gates()[i].kind);
    CHECK(a.gates()[i].qubits == b.gates()[i].qubits);
  }
}
