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

#ifndef ZENO_GATES_H_
#define ZENO_GATES_H_

#include <functional>
#include <random>
#include <string>
#include <string_view>

#include "zeno/state.h"

namespace zeno {

// Single-subsystem gates act on the logical block only: {|0>, |1H>} for
// photons and {blocked, open} for particles. Other levels are left alone.

Matrix photon_h_matrix();
Matrix photon_x_matrix();
Matrix photon_z_matrix();
/// exp(i * angle) on |1H>.
Matrix photon_phase_matrix(double angle);
/// Particle gates for a particle with `positions` positions (logical block 0, 1).
Matrix particle_h_matrix(int positions = 2);
Matrix particle_x_matrix(int positions = 2);
Matrix particle_z_matrix(int positions = 2);
/// Discrete Fourier transform over all positions; exploded level untouched.
Matrix particle_fourier_matrix(int positions);

void photon_h(StateVector &state, std::string_view photon);
void photon_x(StateVector &state, std::string_view photon);
void photon_z(StateVector &state, std::string_view photon);
void photon_phase(StateVector &state, std::string_view photon, double angle);
void particle_h(StateVector &state, std::string_view particle);
void particle_x(StateVector &state, std::string_view particle);
void particle_z(StateVector &state, std::string_view particle);
void particle_fourier(StateVector &state, std::string_view particle);

enum class ControlledGate { kX, kZ };

/// Applies X or Z to `target` iff the register bit is 1.
void classically_controlled(StateVector &state, const ClassicalRegister &reg, std::string_view bit,
                            ControlledGate gate, std::string_view target);

enum class Sign { kPlus, kMinus };

/// Resets a particle sitting in a definite position to (|blocked> +- |open>)/sqrt(2).
/// Throws std::logic_error when the particle is entangled or in superposition.
void prepare_particle_pm(StateVector &state, std::string_view particle, Sign sign);
/// Same precondition; resets to the uniform superposition over all positions.
void prepare_particle_uniform(StateVector &state, std::string_view particle);

/// Success probabilities of imperfect components.
struct ImperfectionProfile {
  double p = 1.0;    // optical H
  double q = 1.0;    // QICZ
  double r = 1.0;    // classically controlled cX / cZ
  double s = 1.0;    // particle H
  double eta = 1.0;  // photodetector efficiency

  void validate() const;
  bool operator==(const ImperfectionProfile &) const = default;
};

/// Component classes charged by the failure model.
enum class GateClass { kOpticalH, kQicz, kClassicallyControlled, kParticleH, kPhotonDetector, kFree };

double success_probability(const ImperfectionProfile &profile, GateClass cls);

/// Discards every non-sink amplitude of the touched subsystem, i.e. routes it
/// to the sink and prunes it. Returns the weight removed.
double route_to_sink(StateVector &state, std::string_view touched);

/// Applies `gate` with the class success probability drawn from `rng`. On a
/// failed draw the gate is not applied, the touched subsystem is sent to the
/// sink, and false is returned.
bool wrap_imperfect(StateVector &state, GateClass cls, std::string_view touched, const ImperfectionProfile &profile,
                    std::mt19937_64 &rng, const std::function<void(StateVector &)> &gate);

}  // namespace zeno

#endif  // ZENO_GATES_H_
