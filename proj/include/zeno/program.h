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

#ifndef ZENO_PROGRAM_H_
#define ZENO_PROGRAM_H_

#include <string>
#include <variant>
#include <vector>

#include "zeno/gates.h"
#include "zeno/qi_gate.h"
#include "zeno/state.h"

namespace zeno {

enum class LocalGate { kH, kX, kZ, kFourier };

struct PhotonGate {
  LocalGate gate = LocalGate::kH;  // kH, kX or kZ
  std::string photon;
  bool operator==(const PhotonGate &) const = default;
};

struct ParticleGate {
  LocalGate gate = LocalGate::kH;
  std::string particle;
  bool operator==(const ParticleGate &) const = default;
};

struct PreparePm {
  std::string particle;
  Sign sign = Sign::kPlus;
  bool operator==(const PreparePm &) const = default;
};

struct PrepareUniform {
  std::string particle;
  bool operator==(const PrepareUniform &) const = default;
};

/// One interferometer: the photon's |1> mode is interrogated against every
/// blocker. A single blocker at position 0 is the plain QICZ.
struct Interrogate {
  std::string photon;
  std::vector<Blocker> blockers;
  bool operator==(const Interrogate &) const = default;
};

struct Measure {
  std::string target;
  Basis basis = Basis::kPhotonComputational;
  std::string bit;
  bool operator==(const Measure &) const = default;
};

struct ClassicallyControlled {
  std::string bit;
  ControlledGate gate = ControlledGate::kX;
  std::string target;
  bool operator==(const ClassicallyControlled &) const = default;
};

struct ClassicalXor {
  std::string lhs;
  std::string rhs;
  std::string out;
  bool operator==(const ClassicalXor &) const = default;
};

/// exp(-2 pi i * multiplier * k / modulus) on the photon's |1H>, where k is a
/// register value (a qudit outcome).
struct PhaseCorrection {
  std::string photon;
  std::string outcome;
  int multiplier = 0;
  int modulus = 1;
  bool operator==(const PhaseCorrection &) const = default;
};

using Instruction = std::variant<PhotonGate, ParticleGate, PreparePm, PrepareUniform, Interrogate, Measure,
                                 ClassicallyControlled, ClassicalXor, PhaseCorrection>;

struct Declaration {
  SubsystemSpec spec;
  int initial_level = 0;
  bool operator==(const Declaration &) const = default;
};

/// An ordered instruction list over named subsystems and classical bits.
struct CircuitProgram {
  std::string name;
  std::vector<Declaration> subsystems;
  std::vector<std::string> bits;
  std::vector<Instruction> instructions;
  /// Logical input / output photons, used by end-to-end checks (optional).
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;

  bool operator==(const CircuitProgram &) const = default;

  std::vector<SubsystemSpec> layout() const;
  StateVector initial_state() const;
  const Declaration &declaration(std::string_view name) const;

  /// Names declared, bits written before read, kinds and ranges consistent.
  /// Throws std::invalid_argument with the offending instruction index.
  void validate() const;
};

/// Instruction mnemonic as used in circuit files ("photon_h", "qicz", ...).
std::string op_name(const Instruction &instruction);

}  // namespace zeno

#endif  // ZENO_PROGRAM_H_
