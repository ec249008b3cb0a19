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

#include "zeno/gates.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zeno {

namespace {

Matrix embed_logical(int dim, const Eigen::Matrix2cd &block) {
  Matrix m = Matrix::Identity(dim, dim);
  m.topLeftCorner(2, 2) = block;
  return m;
}

Eigen::Matrix2cd hadamard() {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd h;
  h << r, r, r, -r;
  return h;
}

Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd x;
  x << 0, 1, 1, 0;
  return x;
}

Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd z;
  z << 1, 0, 0, -1;
  return z;
}

const SubsystemSpec &require_photon(const StateVector &state, std::string_view name) {
  const SubsystemSpec &spec = state.spec(name);
  if (!spec.is_photon()) throw std::invalid_argument("'" + std::string(name) + "' is not a photon");
  return spec;
}

const SubsystemSpec &require_particle(const StateVector &state, std::string_view name) {
  const SubsystemSpec &spec = state.spec(name);
  if (!spec.is_particle()) throw std::invalid_argument("'" + std::string(name) + "' is not a particle");
  return spec;
}

// Level of a particle that is in a definite position (product with the rest).
int definite_position(const StateVector &state, size_t slot) {
  int level = -1;
  const auto amps = state.amplitudes();
  for (size_t i = 0; i < amps.size(); ++i) {
    if (std::norm(amps[i]) <= 1e-30) continue;
    const int l = state.level_of(i, slot);
    if (level == -1) {
      level = l;
    } else if (l != level) {
      throw std::logic_error("particle '" + state.layout()[slot].name +
                             "' is not in a definite position; preparation is an input-stage operation");
    }
  }
  if (level == state.layout()[slot].sink_level()) {
    throw std::logic_error("particle '" + state.layout()[slot].name + "' has exploded");
  }
  return level < 0 ? 0 : level;
}

void reset_particle(StateVector &state, std::string_view particle, const Vector &profile) {
  require_particle(state, particle);
  const size_t slot = state.slot(particle);
  const int from = definite_position(state, slot);
  const size_t stride = state.stride(slot);
  const int positions = state.layout()[slot].positions;
  auto amps = state.amplitudes();
  for (size_t base = 0; base < amps.size(); ++base) {
    if (state.level_of(base, slot) != 0) continue;
    const Amplitude a = amps[base + stride * static_cast<size_t>(from)];
    for (int k = 0; k < positions; ++k) amps[base + stride * static_cast<size_t>(k)] = a * profile(k);
  }
}

}  // namespace

Matrix photon_h_matrix() { return embed_logical(4, hadamard()); }
Matrix photon_x_matrix() { return embed_logical(4, pauli_x()); }
Matrix photon_z_matrix() { return embed_logical(4, pauli_z()); }

Matrix photon_phase_matrix(double angle) {
  Matrix m = Matrix::Identity(4, 4);
  m(photon_level::kOneH, photon_level::kOneH) = std::polar(1.0, angle);
  return m;
}

Matrix particle_h_matrix(int positions) { return embed_logical(positions + 1, hadamard()); }
Matrix particle_x_matrix(int positions) { return embed_logical(positions + 1, pauli_x()); }
Matrix particle_z_matrix(int positions) { return embed_logical(positions + 1, pauli_z()); }

Matrix particle_fourier_matrix(int positions) {
  Matrix m = Matrix::Identity(positions + 1, positions + 1);
  const double norm = 1.0 / std::sqrt(static_cast<double>(positions));
  for (int j = 0; j < positions; ++j) {
    for (int k = 0; k < positions; ++k) {
      m(k, j) = std::polar(norm, 2.0 * std::numbers::pi * j * k / positions);
    }
  }
  return m;
}

void photon_h(StateVector &state, std::string_view photon) {
  require_photon(state, photon);
  apply_local(state, photon, photon_h_matrix());
}

void photon_x(StateVector &state, std::string_view photon) {
  require_photon(state, photon);
  apply_local(state, photon, photon_x_matrix());
}

void photon_z(StateVector &state, std::string_view photon) {
  require_photon(state, photon);
  apply_local(state, photon, photon_z_matrix());
}

void photon_phase(StateVector &state, std::string_view photon, double angle) {
  require_photon(state, photon);
  apply_local(state, photon, photon_phase_matrix(angle));
}

void particle_h(StateVector &state, std::string_view particle) {
  apply_local(state, particle, particle_h_matrix(require_particle(state, particle).positions));
}

void particle_x(StateVector &state, std::string_view particle) {
  apply_local(state, particle, particle_x_matrix(require_particle(state, particle).positions));
}

void particle_z(StateVector &state, std::string_view particle) {
  apply_local(state, particle, particle_z_matrix(require_particle(state, particle).positions));
}

void particle_fourier(StateVector &state, std::string_view particle) {
  apply_local(state, particle, particle_fourier_matrix(require_particle(state, particle).positions));
}

void classically_controlled(StateVector &state, const ClassicalRegister &reg, std::string_view bit,
                            ControlledGate gate, std::string_view target) {
  if (reg.get(bit) == 0) return;
  const SubsystemSpec &spec = state.spec(target);
  if (spec.is_photon()) {
    gate == ControlledGate::kX ? photon_x(state, target) : photon_z(state, target);
  } else {
    gate == ControlledGate::kX ? particle_x(state, target) : particle_z(state, target);
  }
}

void prepare_particle_pm(StateVector &state, std::string_view particle, Sign sign) {
  const int positions = require_particle(state, particle).positions;
  if (positions != 2) throw std::invalid_argument("PM preparation needs a two-position particle");
  Vector profile(2);
  const double r = 1.0 / std::sqrt(2.0);
  profile << r, sign == Sign::kPlus ? r : -r;
  reset_particle(state, particle, profile);
}

void prepare_particle_uniform(StateVector &state, std::string_view particle) {
  const int positions = require_particle(state, particle).positions;
  Vector profile = Vector::Constant(positions, 1.0 / std::sqrt(static_cast<double>(positions)));
  reset_particle(state, particle, profile);
}

void ImperfectionProfile::validate() const {
  for (double v : {p, q, r, s, eta}) {
    if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("imperfection profile entries must lie in [0,1]");
  }
}

double success_probability(const ImperfectionProfile &profile, GateClass cls) {
  switch (cls) {
    case GateClass::kOpticalH:
      return profile.p;
    case GateClass::kQicz:
      return profile.q;
    case GateClass::kClassicallyControlled:
      return profile.r;
    case GateClass::kParticleH:
      return profile.s;
    case GateClass::kPhotonDetector:
      return profile.eta;
    case GateClass::kFree:
      return 1.0;
  }
  return 1.0;
}

double route_to_sink(StateVector &state, std::string_view touched) {
  const size_t slot = state.slot(touched);
  const int sink = state.layout()[slot].sink_level();
  double removed = 0.0;
  auto amps = state.amplitudes();
  for (size_t i = 0; i < amps.size(); ++i) {
    if (state.level_of(i, slot) != sink && amps[i] != Amplitude{}) {
      removed += std::norm(amps[i]);
      amps[i] = 0.0;
    }
  }
  return removed;
}

bool wrap_imperfect(StateVector &state, GateClass cls, std::string_view touched, const ImperfectionProfile &profile,
                    std::mt19937_64 &rng, const std::function<void(StateVector &)> &gate) {
  const double p = success_probability(profile, cls);
  // Certain components consume no randomness, so an all-ones profile follows the ideal trajectory.
  if (p < 1.0) {
    std::bernoulli_distribution ok(p);
    if (!ok(rng)) {
      route_to_sink(state, touched);
      return false;
    }
  }
  gate(state);
  return true;
}

}  // namespace zeno
