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

#ifndef ZENO_EXECUTOR_H_
#define ZENO_EXECUTOR_H_

#include <random>
#include <vector>

#include "zeno/gates.h"
#include "zeno/program.h"
#include "zeno/qi_gate.h"
#include "zeno/state.h"

namespace zeno {

/// kFinite runs the N-cycle interrogation; kIdealLimit replaces every
/// interrogation by its N -> infinity phase map.
enum class QiczMode { kFinite, kIdealLimit };

struct RunOptions {
  QiParams qi;
  QiczMode mode = QiczMode::kFinite;
};

/// Outcome of a run or of one enumerated branch. final_state keeps its norm:
/// its squared norm is success_probability (0 when failed).
struct RunResult {
  StateVector final_state;
  ClassicalRegister reg;
  double success_probability = 0.0;
  bool failed = false;
};

/// Applies one non-measurement instruction in place.
void apply_instruction(StateVector &state, ClassicalRegister &reg, const Instruction &instruction,
                       const RunOptions &options);

/// Samples every measurement. Failure outcomes (photon off the logical block,
/// exploded particle), a photon lost inside an interrogation and failed
/// component draws end the run with failed set.
/// With a profile, every charged instruction goes through wrap_imperfect.
RunResult run_sampled(const CircuitProgram &program, StateVector input, const RunOptions &options,
                      std::mt19937_64 &rng, const ImperfectionProfile *profile = nullptr);
RunResult run_sampled(const CircuitProgram &program, const RunOptions &options, std::mt19937_64 &rng,
                      const ImperfectionProfile *profile = nullptr);

/// Every non-failure measurement branch, in depth-first order with outcomes
/// ascending. Each record keeps its unnormalized state.
std::vector<RunResult> run_branches(const CircuitProgram &program, StateVector input, const RunOptions &options);
std::vector<RunResult> run_branches(const CircuitProgram &program, const RunOptions &options);

/// Sum of the branch weights.
double total_success(const std::vector<RunResult> &branches);

/// Component class charged for an instruction by the failure model.
GateClass gate_class(const Instruction &instruction, const CircuitProgram &program);

}  // namespace zeno

#endif  // ZENO_EXECUTOR_H_
