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

#include "zeno/executor.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace zeno {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void apply_local_gate(StateVector &state, LocalGate gate, const std::string &target) {
  const bool photon = state.spec(target).is_photon();
  switch (gate) {
    case LocalGate::kH:
      photon ? photon_h(state, target) : particle_h(state, target);
      return;
    case LocalGate::kX:
      photon ? photon_x(state, target) : particle_x(state, target);
      return;
    case LocalGate::kZ:
      photon ? photon_z(state, target) : particle_z(state, target);
      return;
    case LocalGate::kFourier:
      particle_fourier(state, target);
      return;
  }
}

// Subsystem whose amplitude a failed component draw discards.
std::string touched_subsystem(const Instruction &instruction) {
  return std::visit(Overloaded{
                        [](const PhotonGate &g) { return g.photon; },
                        [](const ParticleGate &g) { return g.particle; },
                        [](const PreparePm &p) { return p.particle; },
                        [](const PrepareUniform &p) { return p.particle; },
                        [](const Interrogate &q) { return q.photon; },
                        [](const Measure &m) { return m.target; },
                        [](const ClassicallyControlled &c) { return c.target; },
                        [](const ClassicalXor &x) { return x.out; },
                        [](const PhaseCorrection &p) { return p.photon; },
                    },
                    instruction);
}

RunResult failed_result(StateVector state, ClassicalRegister reg) {
  for (auto &a : state.amplitudes()) a = 0.0;
  return RunResult{std::move(state), std::move(reg), 0.0, true};
}

void enumerate(const CircuitProgram &program, size_t pc, StateVector state, ClassicalRegister reg,
               const RunOptions &options, std::vector<RunResult> &out) {
  for (; pc < program.instructions.size(); ++pc) {
    const Instruction &instr = program.instructions[pc];
    if (const auto *m = std::get_if<Measure>(&instr)) {
      for (auto &b : branch_all(state, m->target, m->basis)) {
        if (b.outcome == kFailureOutcome) continue;
        b.state.scale(std::sqrt(b.probability));
        ClassicalRegister next = reg;
        next.set(m->bit, b.outcome);
        enumerate(program, pc + 1, std::move(b.state), std::move(next), options, out);
      }
      return;
    }
    apply_instruction(state, reg, instr, options);
  }
  const double weight = state.norm_squared();
  if (weight <= 1e-15) return;
  out.push_back(RunResult{std::move(state), std::move(reg), weight, false});
}

}  // namespace

GateClass gate_class(const Instruction &instruction, const CircuitProgram &program) {
  return std::visit(Overloaded{
                        [](const PhotonGate &g) {
                          return g.gate == LocalGate::kH ? GateClass::kOpticalH : GateClass::kFree;
                        },
                        [](const ParticleGate &g) {
                          return g.gate == LocalGate::kH ? GateClass::kParticleH : GateClass::kFree;
                        },
                        [](const PreparePm &) { return GateClass::kFree; },
                        [](const PrepareUniform &) { return GateClass::kFree; },
                        [](const Interrogate &) { return GateClass::kQicz; },
                        [&](const Measure &m) {
                          return program.declaration(m.target).spec.is_photon() ? GateClass::kPhotonDetector
                                                                                : GateClass::kFree;
                        },
                        [](const ClassicallyControlled &) { return GateClass::kClassicallyControlled; },
                        [](const ClassicalXor &) { return GateClass::kFree; },
                        [](const PhaseCorrection &) { return GateClass::kClassicallyControlled; },
                    },
                    instruction);
}

void apply_instruction(StateVector &state, ClassicalRegister &reg, const Instruction &instruction,
                       const RunOptions &options) {
  std::visit(Overloaded{
                 [&](const PhotonGate &g) { apply_local_gate(state, g.gate, g.photon); },
                 [&](const ParticleGate &g) { apply_local_gate(state, g.gate, g.particle); },
                 [&](const PreparePm &p) { prepare_particle_pm(state, p.particle, p.sign); },
                 [&](const PrepareUniform &p) { prepare_particle_uniform(state, p.particle); },
                 [&](const Interrogate &q) {
                   if (options.mode == QiczMode::kIdealLimit) {
                     qi_ideal_phase(state, q.photon, q.blockers);
                   } else {
                     qi_run(state, q.photon, q.blockers, options.qi);
                   }
                   // Explosions, loss and residual |1V> are heralded failures.
                   state.prune_failures();
                 },
                 [&](const Measure &) {
                   throw std::logic_error("apply_instruction: measurements are handled by the run loop");
                 },
                 [&](const ClassicallyControlled &c) { classically_controlled(state, reg, c.bit, c.gate, c.target); },
                 [&](const ClassicalXor &x) { reg.set(x.out, reg.get(x.lhs) ^ reg.get(x.rhs)); },
                 [&](const PhaseCorrection &p) {
                   const int k = reg.get(p.outcome);
                   const double angle = -2.0 * std::numbers::pi * p.multiplier * k / p.modulus;
                   photon_phase(state, p.photon, angle);
                 },
             },
             instruction);
}

RunResult run_sampled(const CircuitProgram &program, StateVector input, const RunOptions &options,
                      std::mt19937_64 &rng, const ImperfectionProfile *profile) {
  program.validate();
  options.qi.validate();
  if (profile) profile->validate();
  if (input.layout() != program.layout()) throw std::invalid_argument("run: input layout does not match program");

  StateVector state = std::move(input);
  ClassicalRegister reg;
  for (const Instruction &instr : program.instructions) {
    if (profile) {
      const GateClass cls = gate_class(instr, program);
      const bool ok = wrap_imperfect(state, cls, touched_subsystem(instr), *profile, rng, [](StateVector &) {});
      if (!ok) return failed_result(std::move(state), std::move(reg));
    }
    if (const auto *m = std::get_if<Measure>(&instr)) {
      const double norm = state.norm_squared();
      Branch b = measure(state, m->target, m->basis, rng);
      if (b.outcome == kFailureOutcome) return failed_result(std::move(b.state), std::move(reg));
      b.state.scale(std::sqrt(norm));
      state = std::move(b.state);
      reg.set(m->bit, b.outcome);
      continue;
    }
    const double before = state.norm_squared();
    apply_instruction(state, reg, instr, options);
    if (std::holds_alternative<Interrogate>(instr) && before > 0.0) {
      // Draw the photon's fate against the weight the interrogation pruned.
      const double survive = std::clamp(state.norm_squared() / before, 0.0, 1.0);
      if (!std::bernoulli_distribution(survive)(rng)) return failed_result(std::move(state), std::move(reg));
    }
  }
  const double weight = state.norm_squared();
  return RunResult{std::move(state), std::move(reg), weight, false};
}

RunResult run_sampled(const CircuitProgram &program, const RunOptions &options, std::mt19937_64 &rng,
                      const ImperfectionProfile *profile) {
  return run_sampled(program, program.initial_state(), options, rng, profile);
}

std::vector<RunResult> run_branches(const CircuitProgram &program, StateVector input, const RunOptions &options) {
  program.validate();
  options.qi.validate();
  if (input.layout() != program.layout()) throw std::invalid_argument("run: input layout does not match program");
  std::vector<RunResult> out;
  enumerate(program, 0, std::move(input), ClassicalRegister{}, options, out);
  return out;
}

std::vector<RunResult> run_branches(const CircuitProgram &program, const RunOptions &options) {
  return run_branches(program, program.initial_state(), options);
}

double total_success(const std::vector<RunResult> &branches) {
  double total = 0.0;
  for (const auto &b : branches) total += b.success_probability;
  return total;
}

}  // namespace zeno
