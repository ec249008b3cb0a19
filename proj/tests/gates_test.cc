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
#include <random>
#include <vector>

#include "doctest.h"
#include "test_util.h"
#include "zeno/gates.h"

namespace zeno {
namespace {

// Logical 2x2 block of a gate matrix (levels 0 and 1).
Matrix logical_block(const Matrix &m) { return m.topLeftCorner(2, 2); }

const std::vector<SubsystemSpec> kPhoton{SubsystemSpec::Photon("ph")};

TEST_CASE("photon_h examples") {
  StateVector s = new_state(kPhoton, {photon_level::kZero});
  photon_h(s, "ph");
  CHECK(s.amplitudes()[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(s.amplitudes()[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  photon_h(s, "ph");
  CHECK(std::abs(s.amplitudes()[0] - 1.0) <= 1e-12);
  CHECK(std::abs(s.amplitudes()[1]) <= 1e-12);

  const double r = 1.0 / std::sqrt(2.0);
  StateVector m(kPhoton, std::vector<Amplitude>{r, -r, 0.0, 0.0});
  photon_h(m, "ph");
  CHECK(std::abs(m.amplitudes()[1] - 1.0) <= 1e-12);

  // |1V> and the sink are left alone.
  StateVector v = new_state(kPhoton, {photon_level::kOneV});
  photon_h(v, "ph");
  CHECK(v.amplitudes()[photon_level::kOneV] == Amplitude(1.0));
}

TEST_CASE("Pauli examples") {
  StateVector s = new_state(kPhoton, {photon_level::kOneH});
  photon_z(s, "ph");
  CHECK(s.amplitudes()[1] == Amplitude(-1.0));

  StateVector b = new_state({SubsystemSpec::Particle("b")}, {particle_level::kBlocked});
  particle_x(b, "b");
  CHECK(b.amplitudes()[particle_level::kOpen] == Amplitude(1.0));

  const Matrix hzh = photon_h_matrix() * photon_z_matrix() * photon_h_matrix();
  CHECK((logical_block(hzh) - logical_block(photon_x_matrix())).norm() <= 1e-12);
  const Matrix phzh = particle_h_matrix() * particle_z_matrix() * particle_h_matrix();
  CHECK((logical_block(phzh) - logical_block(particle_x_matrix())).norm() <= 1e-12);
}

TEST_CASE("ideal gates are unitary on their logical blocks") {
  const std::vector<Matrix> twos{photon_h_matrix(), photon_x_matrix(), photon_z_matrix(), photon_phase_matrix(0.7),
                                 particle_h_matrix(), particle_x_matrix(), particle_z_matrix()};
  for (const Matrix &g : twos) {
    const Matrix b = logical_block(g);
    CHECK((b * b.adjoint() - Matrix::Identity(2, 2)).norm() <= 1e-12);
  }
  for (int d = 2; d <= 5; ++d) {
    const Matrix f = particle_fourier_matrix(d).topLeftCorner(d, d);
    CHECK((f * f.adjoint() - Matrix::Identity(d, d)).norm() <= 1e-12);
  }
}

TEST_CASE("classically controlled gates") {
  ClassicalRegister reg;
  StateVector s = new_state(kPhoton, {photon_level::kOneH});
  CHECK_THROWS_AS(classically_controlled(s, reg, "a", ControlledGate::kZ, "ph"), std::logic_error);
  reg.set("a", 0);
  classically_controlled(s, reg, "a", ControlledGate::kZ, "ph");
  CHECK(s.amplitudes()[1] == Amplitude(1.0));
  reg.set("a", 1);
  classically_controlled(s, reg, "a", ControlledGate::kZ, "ph");
  CHECK(s.amplitudes()[1] == Amplitude(-1.0));
}

TEST_CASE("one cZ on a xor c equals cZ on a then cZ on c") {
  std::mt19937_64 rng(17);
  for (int a : {0, 1}) {
    for (int c : {0, 1}) {
      const Vector q = testing::random_qubit(rng);
      StateVector x(kPhoton, std::vector<Amplitude>{q(0), q(1), 0.0, 0.0});
      StateVector y = x;
      ClassicalRegister reg;
      reg.set("a", a);
      reg.set("c", c);
      reg.set("ac", a ^ c);
      classically_controlled(x, reg, "a", ControlledGate::kZ, "ph");
      classically_controlled(x, reg, "c", ControlledGate::kZ, "ph");
      classically_controlled(y, reg, "ac", ControlledGate::kZ, "ph");
      for (size_t i = 0; i < 4; ++i) CHECK(std::abs(x.amplitudes()[i] - y.amplitudes()[i]) <= 1e-15);
    }
  }
}

TEST_CASE("particle preparation") {
  const std::vector<SubsystemSpec> layout{SubsystemSpec::Photon("ph"), SubsystemSpec::Particle("b")};
  StateVector s = new_state(layout, {photon_level::kOneH, particle_level::kBlocked});
  prepare_particle_pm(s, "b", Sign::kMinus);
  const auto branches = branch_all(s, "b", Basis::kParticlePm);
  REQUIRE(branches.size() == 1);
  CHECK(branches[0].outcome == 1);
  CHECK(branches[0].probability == doctest::Approx(1.0));

  StateVector plus = new_state(layout, {0, 0});
  prepare_particle_pm(plus, "b", Sign::kPlus);
  CHECK(branch_all(plus, "b", Basis::kParticlePm)[0].outcome == 0);

  // An entangled particle cannot be re-prepared.
  StateVector e = new_state(layout, {0, 0});
  photon_h(e, "ph");
  const std::vector<std::string> both{"ph", "b"};
  Matrix cx = Matrix::Identity(12, 12);
  cx.block(3, 3, 2, 2) << 0, 1, 1, 0;  // flip b when ph = |1H>
  apply_local(e, both, cx);
  CHECK_THROWS_AS(prepare_particle_pm(e, "b", Sign::kPlus), std::logic_error);

  StateVector q = new_state({SubsystemSpec::Particle("q", 3)}, {0});
  CHECK_THROWS_AS(prepare_particle_pm(q, "q", Sign::kPlus), std::invalid_argument);
  prepare_particle_uniform(q, "q");
  for (int k = 0; k < 3; ++k) CHECK(std::norm(q.amplitudes()[static_cast<size_t>(k)]) == doctest::Approx(1.0 / 3));
}

TEST_CASE("wrap_imperfect") {
  std::mt19937_64 rng(23);
  ImperfectionProfile ones;
  StateVector a = new_state(kPhoton, {0});
  StateVector b = a;
  const bool ok = wrap_imperfect(a, GateClass::kOpticalH, "ph", ones, rng, [](StateVector &s) { photon_h(s, "ph"); });
  CHECK(ok);
  photon_h(b, "ph");
  for (size_t i = 0; i < 4; ++i) CHECK(a.amplitudes()[i] == b.amplitudes()[i]);

  ImperfectionProfile dead;
  dead.p = 0.0;
  for (int i = 0; i < 100; ++i) {
    StateVector s = new_state(kPhoton, {0});
    CHECK_FALSE(wrap_imperfect(s, GateClass::kOpticalH, "ph", dead, rng, [](StateVector &x) { photon_h(x, "ph"); }));
    CHECK(s.norm_squared() == 0.0);
  }

  ImperfectionProfile bad;
  bad.eta = 1.5;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("failure conserves probability per trial") {
  std::mt19937_64 rng(29);
  ImperfectionProfile half;
  half.q = 0.5;
  for (int i = 0; i < 200; ++i) {
    StateVector s = new_state(kPhoton, {0});
    photon_h(s, "ph");
    const double before = s.norm_squared();
    StateVector kept = s;
    const double removed = route_to_sink(kept, "ph");
    CHECK(std::abs(removed + kept.norm_squared() - before) <= 1e-12);
    const bool ok = wrap_imperfect(s, GateClass::kQicz, "ph", half, rng, [](StateVector &) {});
    CHECK(s.norm_squared() == doctest::Approx(ok ? before : 0.0));
  }
}

TEST_CASE("success probability per class") {
  ImperfectionProfile p{0.1, 0.2, 0.3, 0.4, 0.5};
  CHECK(success_probability(p, GateClass::kOpticalH) == 0.1);
  CHECK(success_probability(p, GateClass::kQicz) == 0.2);
  CHECK(success_probability(p, GateClass::kClassicallyControlled) == 0.3);
  CHECK(success_probability(p, GateClass::kParticleH) == 0.4);
  CHECK(success_probability(p, GateClass::kPhotonDetector) == 0.5);
  CHECK(success_probability(p, GateClass::kFree) == 1.0);
}

}  // namespace
}  // namespace zeno
