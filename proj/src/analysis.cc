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

#include "zeno/analysis.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "zeno/qi_gate.h"

namespace zeno {

std::string GateCensus::str() const {
  std::ostringstream out;
  out << "h_optical=" << h_optical << ",qicz=" << qicz << ",cc=" << cc << ",h_particle=" << h_particle
      << ",detectors=" << detectors;
  return out.str();
}

GateCensus gate_census(const CircuitProgram &program) {
  GateCensus c;
  for (const Instruction &instr : program.instructions) {
    switch (gate_class(instr, program)) {
      case GateClass::kOpticalH:
        ++c.h_optical;
        break;
      case GateClass::kQicz:
        ++c.qicz;
        break;
      case GateClass::kClassicallyControlled:
        ++c.cc;
        break;
      case GateClass::kParticleH:
        ++c.h_particle;
        break;
      case GateClass::kPhotonDetector:
        ++c.detectors;
        break;
      case GateClass::kFree:
        if (std::holds_alternative<Measure>(instr)) {
          ++c.particle_measurements;
        } else if (std::holds_alternative<PhotonGate>(instr) || std::holds_alternative<ParticleGate>(instr)) {
          ++c.other_gates;
        }
        break;
    }
  }
  return c;
}

GateCensus table1_census(CnotFamily family) {
  GateCensus c;
  switch (family) {
    case CnotFamily::kMemory:
      c.h_optical = 4, c.qicz = 5, c.cc = 4, c.h_particle = 0, c.detectors = 2, c.particle_measurements = 2;
      break;
    case CnotFamily::kHalfMemoryKeepControl:
    case CnotFamily::kHalfMemoryKeepTarget:
      c.h_optical = 2, c.qicz = 3, c.cc = 3, c.h_particle = 0, c.detectors = 1, c.particle_measurements = 1;
      break;
    case CnotFamily::kDirectCx:
    case CnotFamily::kDirectCz:
      c.h_optical = 2, c.qicz = 2, c.cc = 1, c.h_particle = 1, c.detectors = 0, c.particle_measurements = 1;
      break;
  }
  return c;
}

double table1_formula(CnotFamily family, const ImperfectionProfile &pr) {
  pr.validate();
  // Factors in census_formula's order so equal exponents give equal bits.
  switch (family) {
    case CnotFamily::kMemory:
      return std::pow(pr.p, 4) * std::pow(pr.q, 5) * std::pow(pr.r, 4) * std::pow(pr.eta, 2);
    case CnotFamily::kHalfMemoryKeepControl:
    case CnotFamily::kHalfMemoryKeepTarget:
      return std::pow(pr.p, 2) * std::pow(pr.q, 3) * std::pow(pr.r, 3) * pr.eta;
    case CnotFamily::kDirectCx:
    case CnotFamily::kDirectCz:
      return std::pow(pr.p, 2) * std::pow(pr.q, 2) * pr.r * pr.s;
  }
  return 0.0;
}

double census_formula(const GateCensus &c, const ImperfectionProfile &pr) {
  pr.validate();
  return std::pow(pr.p, c.h_optical) * std::pow(pr.q, c.qicz) * std::pow(pr.r, c.cc) * std::pow(pr.s, c.h_particle) *
         std::pow(pr.eta, c.detectors);
}

bool direct_beats_half(const ImperfectionProfile &pr) {
  pr.validate();
  // Both yields share p^2 q^2 r.
  if (pr.p <= 0.0 || pr.q <= 0.0 || pr.r <= 0.0) return false;
  return pr.s > pr.eta * pr.q * pr.r * pr.r;
}

int sim_threads(int requested) {
  if (requested > 0) return requested;
  if (const char *env = std::getenv("ZENO_SIM_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

MonteCarloResult monte_carlo_yield(const CircuitProgram &program, const ImperfectionProfile &profile,
                                   std::int64_t trials, std::uint64_t seed, const MonteCarloOptions &options) {
  if (trials < 1) throw std::invalid_argument("monte_carlo_yield: trials must be >= 1");
  profile.validate();
  program.validate();

  // Success probabilities of the charged instructions, in program order.
  std::vector<double> charges;
  for (const Instruction &instr : program.instructions) {
    const double p = success_probability(profile, gate_class(instr, program));
    if (p < 1.0) charges.push_back(p);
  }
  const double quantum = options.full_simulation ? 1.0 : total_success(run_branches(program, options.run));

  auto trial = [&](std::int64_t i) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(i));
    if (options.full_simulation) {
      return !run_sampled(program, options.run, rng, &profile).failed;
    }
    for (double p : charges) {
      if (!std::bernoulli_distribution(p)(rng)) return false;
    }
    if (quantum < 1.0) return std::bernoulli_distribution(std::clamp(quantum, 0.0, 1.0))(rng);
    return true;
  };

  const int workers = static_cast<int>(std::min<std::int64_t>(sim_threads(options.threads), trials));
  std::vector<std::int64_t> counts(static_cast<size_t>(workers), 0);
  auto block = [&](int w) {
    const std::int64_t lo = trials * w / workers;
    const std::int64_t hi = trials * (w + 1) / workers;
    std::int64_t n = 0;
    for (std::int64_t i = lo; i < hi; ++i) n += trial(i) ? 1 : 0;
    counts[static_cast<size_t>(w)] = n;
  };
  if (workers == 1) {
    block(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(block, w);
    for (auto &t : pool) t.join();
  }

  MonteCarloResult out;
  out.trials = trials;
  for (auto n : counts) out.successes += n;
  out.estimate = static_cast<double>(out.successes) / static_cast<double>(trials);
  out.stderr_ = std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(trials));
  return out;
}

double blocked_survival(const QiParams &params) {
  std::vector<SubsystemSpec> layout{SubsystemSpec::Photon("ph"), SubsystemSpec::Particle("b")};
  StateVector s = new_state(layout, {photon_level::kOneH, particle_level::kBlocked});
  qi_run(s, "ph", std::vector<Blocker>{{"b", particle_level::kBlocked}}, params);
  return std::norm(s.at(std::vector<int>{photon_level::kOneH, particle_level::kBlocked}));
}

double qicz_fidelity(const QiParams &params) {
  std::vector<SubsystemSpec> layout{SubsystemSpec::Photon("ph"), SubsystemSpec::Particle("b")};
  std::vector<Amplitude> amps(layout[0].dimension() * layout[1].dimension());
  StateVector s(layout, amps);
  StateVector ideal(layout, amps);
  for (int ph : {photon_level::kZero, photon_level::kOneH}) {
    for (int b : {particle_level::kBlocked, particle_level::kOpen}) {
      const std::vector<int> idx{ph, b};
      s.amplitudes()[s.index_of(idx)] = 0.5;
      ideal.amplitudes()[ideal.index_of(idx)] = (ph == photon_level::kOneH && b == particle_level::kOpen) ? -0.5 : 0.5;
    }
  }
  qicz(s, "ph", "b", params);
  s.prune_failures();  // post-selection
  return fidelity(s, ideal);
}

double qicz_column_deviation(const QiParams &params) {
  const Matrix map = effective_map(params, 1);
  // Logical block of photon (x) particle: photon levels 0, 1H; particle 0, 1.
  const int pd = 3;
  const std::vector<Eigen::Index> logical{0 * pd + 0, 0 * pd + 1, 1 * pd + 0, 1 * pd + 1};
  const double ideal_diag[4] = {1.0, 1.0, 1.0, -1.0};
  double worst = 0.0;
  for (size_t j = 0; j < logical.size(); ++j) {
    double dev = 0.0;
    for (size_t i = 0; i < logical.size(); ++i) {
      const Amplitude want = i == j ? Amplitude(ideal_diag[j]) : Amplitude{};
      dev += std::norm(map(logical[i], logical[j]) - want);
    }
    worst = std::max(worst, std::sqrt(dev));
  }
  return worst;
}

double discrimination_success(int cycles, ThetaRule rule, double absorb, double loss) {
  QiParams params;
  params.cycles = cycles;
  params.theta_rule = rule;
  params.absorb_prob = absorb;
  params.cycle_loss = loss;
  params.residual_v = ResidualVPolicy::kKeep;
  std::vector<SubsystemSpec> layout{SubsystemSpec::Photon("ph"), SubsystemSpec::Particle("b")};
  const std::vector<Blocker> blocker{{"b", particle_level::kBlocked}};

  StateVector open = new_state(layout, {photon_level::kOneH, particle_level::kOpen});
  qi_run(open, "ph", blocker, params);
  StateVector blocked = new_state(layout, {photon_level::kOneH, particle_level::kBlocked});
  qi_run(blocked, "ph", blocker, params);

  const double right_open = std::norm(open.at(std::vector<int>{photon_level::kOneV, particle_level::kOpen}));
  const double right_blocked = std::norm(blocked.at(std::vector<int>{photon_level::kOneH, particle_level::kBlocked}));
  return 0.5 * (right_open + right_blocked);
}

std::vector<SweepRow> zeno_sweep(const std::vector<int> &cycles, ThetaRule rule, double absorb, double loss) {
  std::vector<SweepRow> rows;
  for (int n : cycles) {
    QiParams params;
    params.cycles = n;
    params.theta_rule = rule;
    params.absorb_prob = absorb;
    params.cycle_loss = loss;
    params.validate();
    SweepRow row;
    row.cycles = n;
    row.theta = params.theta();
    row.absorb = absorb;
    row.loss = loss;
    row.success_probability = blocked_survival(params);
    row.fidelity = qicz_fidelity(params);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace zeno
