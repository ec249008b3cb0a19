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

#ifndef ZENO_ANALYSIS_H_
#define ZENO_ANALYSIS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zeno/circuits.h"
#include "zeno/executor.h"
#include "zeno/gates.h"
#include "zeno/program.h"

namespace zeno {

/// Instruction counts per component class.
struct GateCensus {
  int h_optical = 0;
  int qicz = 0;
  int cc = 0;  // classically controlled X / Z and phase corrections
  int h_particle = 0;
  int detectors = 0;  // photon measurements
  int particle_measurements = 0;
  int other_gates = 0;  // uncharged local gates (X, Z, Fourier)

  bool operator==(const GateCensus &) const = default;
  /// "h_optical=4,qicz=5,cc=4,h_particle=0,detectors=2"
  std::string str() const;
};

GateCensus gate_census(const CircuitProgram &program);

/// Published component counts of the family's row (Memory, HalfMemory, Direct).
GateCensus table1_census(CnotFamily family);

/// Memory: eta^2 p^4 q^5 r^4; HalfMemory: eta p^2 q^3 r^3; Direct: p^2 q^2 r s.
double table1_formula(CnotFamily family, const ImperfectionProfile &profile);

/// p^h q^qicz r^cc s^hp eta^det from a census.
double census_formula(const GateCensus &census, const ImperfectionProfile &profile);

/// True when the direct family has the higher yield. With p, q, r > 0 this is
/// s > eta q r^2 (strict); otherwise both yields vanish and the answer is false.
bool direct_beats_half(const ImperfectionProfile &profile);

struct MonteCarloOptions {
  RunOptions run{QiParams{}, QiczMode::kIdealLimit};
  /// Simulate every trial instead of drawing component failures against the
  /// enumerated quantum success probability.
  bool full_simulation = false;
  /// 0 reads ZENO_SIM_THREADS, falling back to the hardware concurrency.
  int threads = 0;
};

struct MonteCarloResult {
  double estimate = 0.0;
  double stderr_ = 0.0;
  std::int64_t trials = 0;
  std::int64_t successes = 0;
};

/// Fraction of trials without a heralded failure. Trial i uses an
/// std::mt19937_64 seeded with seed + i, so the result does not depend on the
/// thread count.
MonteCarloResult monte_carlo_yield(const CircuitProgram &program, const ImperfectionProfile &profile,
                                   std::int64_t trials, std::uint64_t seed, const MonteCarloOptions &options = {});

/// Worker count used for parallel loops.
int sim_threads(int requested = 0);

struct SweepRow {
  int cycles = 0;
  double theta = 0.0;
  double absorb = 1.0;
  double loss = 0.0;
  ImperfectionProfile profile;
  double success_probability = 0.0;
  double fidelity = 0.0;
  std::optional<double> stderr_;  // set iff sampled
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
};

/// Per N: blocked survival (success_probability) and the
/// post-selected fidelity of qicz to the ideal CZ on the uniform input.
std::vector<SweepRow> zeno_sweep(const std::vector<int> &cycles, ThetaRule rule, double absorb, double loss);

/// Surviving |1H> weight of photon |1H> against one blocked particle.
double blocked_survival(const QiParams &params);

/// Post-selected fidelity of qicz(params) to CZ on (|0> + |1>)(|b> + |o>)/2.
double qicz_fidelity(const QiParams &params);

/// Largest column 2-norm difference between the qicz map restricted to the
/// logical block and diag(1, 1, 1, -1). Failure amplitude does not count.
double qicz_column_deviation(const QiParams &params);

/// Probability of telling a blocked from an open arm with equal priors: the
/// photon exits |1V> for open and |1H> for blocked; explosions, loss and the
/// wrong polarization count as errors. The residual |1V> is kept.
double discrimination_success(int cycles, ThetaRule rule, double absorb, double loss = 0.0);

}  // namespace zeno

#endif  // ZENO_ANALYSIS_H_
