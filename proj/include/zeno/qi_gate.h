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

#ifndef ZENO_QI_GATE_H_
#define ZENO_QI_GATE_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zeno/state.h"

namespace zeno {

enum class ThetaRule { kPiOver2N, kPiOverN, kExplicit };
enum class ResidualVPolicy { kRouteToSink, kKeep };

/// Parameters of an N-cycle interrogation.
struct QiParams {
  int cycles = 1;
  ThetaRule theta_rule = ThetaRule::kPiOverN;
  double explicit_theta = 0.0;  // radians, used with ThetaRule::kExplicit
  double absorb_prob = 1.0;     // epsilon, per photon/particle encounter
  double cycle_loss = 0.0;      // lambda, per cycle on the in-loop levels
  ResidualVPolicy residual_v = ResidualVPolicy::kRouteToSink;

  /// Rotation angle per cycle.
  double theta() const;
  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

/// A particle sitting in an interferometer arm: the arm is blocked when the
/// particle occupies `position`.
struct Blocker {
  std::string particle;
  int position = particle_level::kBlocked;

  bool operator==(const Blocker &) const = default;
};

/// One interrogation cycle: rotate the {1H, 1V} block by theta, let each
/// blocker absorb (in listed order), then apply loss.
///
/// Absorption moves sqrt(eps) of the |1V>|blocking> amplitude to
/// |sink>|exploded>. Amplitude already sitting on a sink level is discarded
/// first, so every cycle starts from an empty sink and no failure amplitude
/// interferes with an earlier one. Loss scales 1H and 1V by sqrt(1 - lambda);
/// the lost weight goes straight to the norm deficit.
void qi_cycle(StateVector &state, std::string_view photon, std::span<const Blocker> blockers,
              const QiParams &params);

/// N cycles followed by the residual-|1V> policy.
void qi_run(StateVector &state, std::string_view photon, std::span<const Blocker> blockers,
            const QiParams &params);

/// Photon-particle CZ: the photon's |1> mode runs the interferometer and the
/// particle blocks it from position 0.
void qicz(StateVector &state, std::string_view photon, std::string_view particle, const QiParams &params);

/// Multi-controlled Z: the phase flip survives only when every particle is out
/// of the arm.
void qicz_multi(StateVector &state, std::string_view photon, std::span<const std::string> particles,
                const QiParams &params);

/// N -> infinity limit of qi_run with theta = pi/N: -1 on |1H> when no blocker
/// is in its blocking position, identity otherwise.
void qi_ideal_phase(StateVector &state, std::string_view photon, std::span<const Blocker> blockers);

/// Linear map of qicz_multi over photon (x) n two-position particles, built by
/// running every basis state. Layout is photon "ph" followed by "b0", "b1", ...
Matrix effective_map(const QiParams &params, int n_particles);

}  // namespace zeno

#endif  // ZENO_QI_GATE_H_
