// Copyright 2026 The Zeno Gates Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "test_util.h"
#include "zeno/circuits.h"
#include "zeno/oracle.h"

namespace zeno {
namespace {

const RunOptions kIdeal{QiParams{}, QiczMode::kIdealLimit};

RunOptions finite(int n) {
  RunOptions o;
  o.qi.cycles = n;
  return o;
}

TEST_CASE("identity program returns its input") {
  CircuitProgram p;
  p.name = "empty";
  p.subsystems = {{SubsystemSpec::Photon("a"), 0}, {SubsystemSpec::Particle("b", 3), 0}};
  p.inputs = {"a", "b"};
  std::mt19937_64 rng(43);
  Vector in(6);
  for (int i = 0; i < 6; ++i) in(i) = testing::gaussian_amplitude(rng);
  in.normalize();
  const BranchTree tree = brute_force_run(p, logical_input(p, in), OracleOptions{});
  REQUIRE(tree.leaves.size() == 1);
  CHECK((tree.leaves[0].state - in).norm() <= 1e-15);
  CHECK(compare(p, in, kIdeal, OracleOptions{}).max_deviation == 0.0);
  CHECK(compare(p).max_deviation == 0.0);
}

TEST_CASE("Bell leaves") {
  const CircuitProgram bell = bell_generator();
  const BranchTree tree = brute_force_run(bell, OracleOptions{});
  REQUIRE(tree.leaves.size() == 2);
  CHECK(std::abs(tree.total_weight() - 1.0) <= 1e-10);
  for (const auto &leaf : tree.leaves) {
    CHECK(leaf.state.squaredNorm() == doctest::Approx(0.5).epsilon(1e-12));
    const Matrix rho = logical_reduced_density(bell, leaf.state, bell.outputs);
    const Vector want = leaf.outcomes.at("m") == 0 ? bell_phi_plus() : bell_psi_plus();
    CHECK((want.adjoint() * rho * want)(0, 0).real() >= 1.0 - 1e-12);
  }
}

TEST_CASE("direct CX on |10> gives |11> in every leaf") {
  const CircuitProgram p = cnot_circuit(CnotFamily::kDirectCx);
  Vector in = Vector::Zero(4);
  in(2) = 1.0;
  const BranchTree tree = brute_force_run(p, logical_input(p, in), OracleOptions{});
  CHECK(tree.leaves.size() == 2);
  Vector want = Vector::Zero(4);
  want(3) = 1.0;
  for (const auto &leaf : tree.leaves) {
    const Matrix rho = logical_reduced_density(p, leaf.state, p.outputs);
    CHECK((want.adjoint() * rho * want)(0, 0).real() >= 1.0 - 1e-12);
  }
}

TEST_CASE("finite qicz against the ideal oracle") {
  const CircuitProgram q = demo_program("qicz");
  const CompareReport r = compare(q, logical_initial_state(q), finite(10), OracleOptions{});
  CHECK(r.structure_ok);
  CHECK(std::abs(r.max_deviation - 0.39457095028689347) <= 1e-12);
  CHECK(std::abs(r.max_deviation - (1.0 - std::pow(std::cos(std::numbers::pi / 10), 10))) <= 1e-12);
  // Matching modes agree.
  CHECK(compare(q, finite(10)).max_deviation <= 1e-12);
}

TEST_CASE("oracle and simulator agree on every demo") {
  for (const auto &name : demo_names()) {
    const CircuitProgram p = demo_program(name);
    CAPTURE(name);
    const CompareReport ideal = compare(p);
    CHECK(ideal.structure_ok);
    CHECK(ideal.max_deviation <= 1e-10);
    CHECK(std::abs(brute_force_run(p, OracleOptions{}).total_weight() - 1.0) <= 1e-10);
    const CompareReport fin = compare(p, finite(500));
    CHECK(fin.structure_ok);
    CHECK(fin.max_deviation <= 1e-10);
  }
}

TEST_CASE("oracle interrogation uses the closed form") {
  QiParams qi;
  qi.cycles = 50;
  qi.absorb_prob = 0.5;
  qi.cycle_loss = 0.01;
  const CircuitProgram g = configurable_gate({{"ph", {{"b1", 0}, {"b2", 0}}}});
  Vector in = Vector::Zero(8);
  in(4) = 1.0;  // ph = 1, both blocked
  const BranchTree tree = brute_force_run(g, logical_input(g, in), OracleOptions{false, qi});
  REQUIRE(tree.leaves.size() == 1);
  CHECK(std::abs(tree.leaves[0].state(4) - 0.58167322000651261) <= 1e-13);
  CHECK(std::abs(interrogation_amplitude(qi, 2) - 0.58167322000651261) <= 1e-13);
}

TEST_CASE("oracle errors") {
  std::vector<Interferometer> wide;
  for (int i = 0; i < 13; ++i) wide.push_back({"p" + std::to_string(i), {}});
  const CircuitProgram big = configurable_gate(wide);
  CHECK_THROWS_AS(brute_force_run(big, OracleOptions{}), std::invalid_argument);

  const CircuitProgram q = demo_program("qicz");
  RunOptions keep = finite(10);
  keep.qi.residual_v = ResidualVPolicy::kKeep;
  CHECK_THROWS_AS(compare(q, keep), std::invalid_argument);
  CHECK_THROWS_AS(logical_input(q, Vector::Zero(3)), std::invalid_argument);
}

TEST_CASE("reference maps") {
  const Matrix cnot = cnot_reference();
  CHECK((cnot * cnot - Matrix::Identity(4, 4)).norm() <= 1e-15);
  CHECK(std::abs(cnot(3, 2) - 1.0) <= 1e-15);
  const Matrix cz = cz_reference();
  CHECK(std::abs(cz(3, 3) + 1.0) <= 1e-15);
  const Matrix ccx = ccnot_reference();
  CHECK(std::abs(ccx(7, 6) - 1.0) <= 1e-15);
  CHECK(std::abs(w_reference(3).norm() - 1.0) <= 1e-15);
  CHECK(std::abs(w_reference(3)(4) - 1.0 / std::sqrt(3.0)) <= 1e-15);
}

}  // namespace
}  // namespace zeno
