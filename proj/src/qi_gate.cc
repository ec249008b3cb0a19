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

#include "zeno/qi_gate.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zeno {

double QiParams::theta() const {
  switch (theta_rule) {
    case ThetaRule::kPiOver2N:
      return std::numbers::pi / (2.0 * cycles);
    case ThetaRule::kPiOverN:
      return std::numbers::pi / cycles;
    case ThetaRule::kExplicit:
      return explicit_theta;
  }
  return 0.0;
}

void QiParams::validate() const {
  if (cycles < 1) throw std::invalid_argument("cycles must be >= 1");
  if (!(absorb_prob >= 0.0 && absorb_prob <= 1.0)) throw std::invalid_argument("absorb_prob must lie in [0,1]");
  if (!(cycle_loss >= 0.0 && cycle_loss < 1.0)) throw std::invalid_argument("cycle_loss must lie in [0,1)");
  if (theta_rule == ThetaRule::kExplicit && !std::isfinite(explicit_theta)) {
    throw std::invalid_argument("explicit theta must be finite");
  }
}

namespace {

// Index bookkeeping for one photon interrogated by a fixed set of blockers.
// Built once per run; every cycle then touches only precomputed slots.
class Interrogation {
 public:
  Interrogation(StateVector &state, std::string_view photon, std::span<const Blocker> blockers)
      : state_(state) {
    const size_t ps = state.slot(photon);
    if (!state.layout()[ps].is_photon()) {
      throw std::invalid_argument("'" + std::string(photon) + "' is not a photon");
    }
    std::vector<size_t> slots;
    for (const auto &b : blockers) {
      const size_t s = state.slot(b.particle);
      const SubsystemSpec &spec = state.layout()[s];
      if (!spec.is_particle()) throw std::invalid_argument("'" + b.particle + "' is not a particle");
      if (b.position < 0 || b.position >= spec.positions) {
        throw std::invalid_argument("blocking position " + std::to_string(b.position) + " invalid for particle '" +
                                    b.particle + "'");
      }
      for (size_t other : slots) {
        if (other == s) throw std::invalid_argument("particle '" + b.particle + "' wired twice in one interferometer");
      }
      slots.push_back(s);
    }

    const size_t stride = state.stride(ps);
    for (size_t base = 0; base < state.size(); ++base) {
      if (state.level_of(base, ps) != photon_level::kZero) continue;
      if (state.on_sink(base)) continue;
      Config c;
      c.h = base + stride * photon_level::kOneH;
      c.v = base + stride * photon_level::kOneV;
      c.sink = base + stride * photon_level::kSink;
      c.first_absorber = absorbers_.size();
      for (size_t k = 0; k < blockers.size(); ++k) {
        const int level = state.level_of(base, slots[k]);
        if (level == blockers[k].position) {
          const size_t exploded = static_cast<size_t>(state.layout()[slots[k]].sink_level());
          absorbers_.push_back(c.sink + (exploded - static_cast<size_t>(level)) * state.stride(slots[k]));
        }
      }
      c.absorber_count = absorbers_.size() - c.first_absorber;
      configs_.push_back(c);
    }
    state.prune_failures();
  }

  // skip_unblocked leaves configurations without absorbers to rotate_unblocked.
  void cycle(double cos_t, double sin_t, double keep, double absorb, double survive, bool skip_unblocked) {
    auto amps = state_.amplitudes();
    for (size_t target : absorbers_) amps[target] = 0.0;
    for (const Config &c : configs_) {
      if (skip_unblocked && c.absorber_count == 0) continue;
      const Amplitude h = amps[c.h];
      Amplitude v = amps[c.v];
      if (h == Amplitude{} && v == Amplitude{}) continue;
      const Amplitude nh = cos_t * h - sin_t * v;
      v = sin_t * h + cos_t * v;
      for (size_t k = 0; k < c.absorber_count; ++k) {
        amps[absorbers_[c.first_absorber + k]] += absorb * v;
        v *= keep;
      }
      amps[c.h] = survive * nh;
      amps[c.v] = survive * v;
    }
  }

  // Unblocked configurations only rotate and lose, so N cycles compose to one
  // rotation by the total angle. Keeps the pi-rotation sign exact.
  void rotate_unblocked(double cos_total, double sin_total, double survive_total) {
    auto amps = state_.amplitudes();
    for (const Config &c : configs_) {
      if (c.absorber_count != 0) continue;
      const Amplitude h = amps[c.h];
      const Amplitude v = amps[c.v];
      amps[c.h] = survive_total * (cos_total * h - sin_total * v);
      amps[c.v] = survive_total * (sin_total * h + cos_total * v);
    }
  }

  void route_residual_v() {
    auto amps = state_.amplitudes();
    for (const Config &c : configs_) {
      amps[c.sink] += amps[c.v];
      amps[c.v] = 0.0;
    }
  }

  void ideal_phase() {
    auto amps = state_.amplitudes();
    for (const Config &c : configs_) {
      if (c.absorber_count == 0) amps[c.h] = -amps[c.h];
    }
  }

 private:
  struct Config {
    size_t h = 0, v = 0, sink = 0;
    size_t first_absorber = 0;
    size_t absorber_count = 0;
  };

  StateVector &state_;
  std::vector<Config> configs_;
  std::vector<size_t> absorbers_;
};

void run_cycles(StateVector &state, std::string_view photon, std::span<const Blocker> blockers,
                const QiParams &params, int cycles, bool final_policy) {
  params.validate();
  Interrogation it(state, photon, blockers);
  const double theta = params.theta();
  const double cos_t = std::cos(theta);
  const double sin_t = std::sin(theta);
  const double keep = std::sqrt(1.0 - params.absorb_prob);
  const double absorb = std::sqrt(params.absorb_prob);
  const double survive = std::sqrt(1.0 - params.cycle_loss);
  for (int n = 0; n < cycles; ++n) it.cycle(cos_t, sin_t, keep, absorb, survive, true);
  double total = cycles * theta;
  if (cycles == params.cycles && params.theta_rule == ThetaRule::kPiOverN) total = std::numbers::pi;
  if (cycles == params.cycles && params.theta_rule == ThetaRule::kPiOver2N) total = std::numbers::pi / 2;
  it.rotate_unblocked(std::cos(total), std::sin(total), std::pow(1.0 - params.cycle_loss, 0.5 * cycles));
  if (final_policy && params.residual_v == ResidualVPolicy::kRouteToSink) it.route_residual_v();
}

}  // namespace

void qi_cycle(StateVector &state, std::string_view photon, std::span<const Blocker> blockers,
              const QiParams &params) {
  run_cycles(state, photon, blockers, params, 1, false);
}

void qi_run(StateVector &state, std::string_view photon, std::span<const Blocker> blockers,
            const QiParams &params) {
  run_cycles(state, photon, blockers, params, params.cycles, true);
}

void qicz(StateVector &state, std::string_view photon, std::string_view particle, const QiParams &params) {
  if (state.spec(particle).positions != 2) {
    throw std::invalid_argument("qicz needs a two-position particle");
  }
  const Blocker b{std::string(particle), particle_level::kBlocked};
  qi_run(state, photon, std::span<const Blocker>(&b, 1), params);
}

void qicz_multi(StateVector &state, std::string_view photon, std::span<const std::string> particles,
                const QiParams &params) {
  if (particles.empty()) throw std::invalid_argument("qicz_multi needs at least one particle");
  std::vector<Blocker> blockers;
  for (const auto &p : particles) blockers.push_back(Blocker{p, particle_level::kBlocked});
  qi_run(state, photon, blockers, params);
}

void qi_ideal_phase(StateVector &state, std::string_view photon, std::span<const Blocker> blockers) {
  Interrogation it(state, photon, blockers);
  it.ideal_phase();
}

Matrix effective_map(const QiParams &params, int n_particles) {
  if (n_particles < 1) throw std::invalid_argument("effective_map needs at least one particle");
  std::vector<SubsystemSpec> layout{SubsystemSpec::Photon("ph")};
  std::vector<std::string> names;
  for (int k = 0; k < n_particles; ++k) {
    names.push_back("b" + std::to_string(k));
    layout.push_back(SubsystemSpec::Particle(names.back()));
  }
  StateVector probe(layout, std::vector<int>(layout.size(), 0));
  const auto dim = static_cast<Eigen::Index>(probe.size());
  Matrix map = Matrix::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    std::vector<Amplitude> amps(static_cast<size_t>(dim));
    amps[static_cast<size_t>(col)] = 1.0;
    StateVector s(layout, std::move(amps));
    qicz_multi(s, "ph", names, params);
    for (Eigen::Index row = 0; row < dim; ++row) map(row, col) = s.amplitudes()[static_cast<size_t>(row)];
  }
  return map;
}

}  // namespace zeno
