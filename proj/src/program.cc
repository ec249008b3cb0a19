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

#include "zeno/program.h"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace zeno {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::vector<SubsystemSpec> CircuitProgram::layout() const {
  std::vector<SubsystemSpec> out;
  out.reserve(subsystems.size());
  for (const auto &d : subsystems) out.push_back(d.spec);
  return out;
}

StateVector CircuitProgram::initial_state() const {
  std::vector<int> levels;
  for (const auto &d : subsystems) levels.push_back(d.initial_level);
  return new_state(layout(), levels);
}

const Declaration &CircuitProgram::declaration(std::string_view n) const {
  for (const auto &d : subsystems) {
    if (d.spec.name == n) return d;
  }
  throw std::out_of_range("unknown subsystem '" + std::string(n) + "'");
}

std::string op_name(const Instruction &instruction) {
  return std::visit(
      Overloaded{
          [](const PhotonGate &g) -> std::string {
            switch (g.gate) {
              case LocalGate::kH:
                return "photon_h";
              case LocalGate::kX:
                return "photon_x";
              case LocalGate::kZ:
                return "photon_z";
              case LocalGate::kFourier:
                return "photon_fourier";
            }
            return "photon_?";
          },
          [](const ParticleGate &g) -> std::string {
            switch (g.gate) {
              case LocalGate::kH:
                return "particle_h";
              case LocalGate::kX:
                return "particle_x";
              case LocalGate::kZ:
                return "particle_z";
              case LocalGate::kFourier:
                return "particle_fourier";
            }
            return "particle_?";
          },
          [](const PreparePm &) -> std::string { return "prepare_pm"; },
          [](const PrepareUniform &) -> std::string { return "prepare_uniform"; },
          [](const Interrogate &q) -> std::string {
            const bool all_zero = std::all_of(q.blockers.begin(), q.blockers.end(),
                                              [](const Blocker &b) { return b.position == particle_level::kBlocked; });
            if (all_zero && q.blockers.size() == 1) return "qicz";
            if (all_zero && q.blockers.size() > 1) return "qicz_multi";
            return "interrogate";
          },
          [](const Measure &) -> std::string { return "measure"; },
          [](const ClassicallyControlled &c) -> std::string { return c.gate == ControlledGate::kX ? "cx" : "cz"; },
          [](const ClassicalXor &) -> std::string { return "classical_xor"; },
          [](const PhaseCorrection &) -> std::string { return "phase_correction"; },
      },
      instruction);
}

void CircuitProgram::validate() const {
  std::set<std::string> names;
  for (const auto &d : subsystems) {
    if (!names.insert(d.spec.name).second) throw std::invalid_argument("duplicate subsystem '" + d.spec.name + "'");
    if (d.initial_level < 0 || d.initial_level >= d.spec.dimension()) {
      throw std::invalid_argument("initial level out of range for '" + d.spec.name + "'");
    }
  }
  std::set<std::string> declared_bits(bits.begin(), bits.end());
  if (declared_bits.size() != bits.size()) throw std::invalid_argument("duplicate classical bit");
  for (const auto &b : bits) {
    if (names.count(b)) throw std::invalid_argument("bit '" + b + "' shadows a subsystem name");
  }
  for (const auto &io : inputs) declaration(io);
  for (const auto &io : outputs) declaration(io);

  std::set<std::string> written;
  for (size_t i = 0; i < instructions.size(); ++i) {
    const std::string where = "instruction " + std::to_string(i) + " (" + op_name(instructions[i]) + "): ";
    auto fail = [&](const std::string &msg) { throw std::invalid_argument(where + msg); };
    auto subsystem = [&](const std::string &n) -> const SubsystemSpec & {
      for (const auto &d : subsystems) {
        if (d.spec.name == n) return d.spec;
      }
      fail("unknown subsystem '" + n + "'");
      throw std::logic_error("unreachable");
    };
    auto photon = [&](const std::string &n) {
      if (!subsystem(n).is_photon()) fail("'" + n + "' is not a photon");
    };
    auto particle = [&](const std::string &n) -> const SubsystemSpec & {
      const SubsystemSpec &s = subsystem(n);
      if (!s.is_particle()) fail("'" + n + "' is not a particle");
      return s;
    };
    auto read_bit = [&](const std::string &b) {
      if (!declared_bits.count(b)) fail("undeclared bit '" + b + "'");
      if (!written.count(b)) fail("bit '" + b + "' read before written");
    };
    auto write_bit = [&](const std::string &b) {
      if (!declared_bits.count(b)) fail("undeclared bit '" + b + "'");
      written.insert(b);
    };

    std::visit(Overloaded{
                   [&](const PhotonGate &g) {
                     photon(g.photon);
                     if (g.gate == LocalGate::kFourier) fail("Fourier gate is defined on particles only");
                   },
                   [&](const ParticleGate &g) { particle(g.particle); },
                   [&](const PreparePm &p) {
                     if (particle(p.particle).positions != 2) fail("PM preparation needs a two-position particle");
                   },
                   [&](const PrepareUniform &p) { particle(p.particle); },
                   [&](const Interrogate &q) {
                     photon(q.photon);
                     std::set<std::string> seen;
                     for (const auto &b : q.blockers) {
                       const SubsystemSpec &s = particle(b.particle);
                       if (!seen.insert(b.particle).second) {
                         fail("particle '" + b.particle + "' assigned two positions in one interferometer");
                       }
                       if (b.position < 0 || b.position >= s.positions) fail("blocking position out of range");
                     }
                   },
                   [&](const Measure &m) {
                     const SubsystemSpec &s = subsystem(m.target);
                     const bool ok = m.basis == Basis::kPhotonComputational ? s.is_photon()
                                     : m.basis == Basis::kParticlePm ? (s.is_particle() && s.positions == 2)
                                                                     : s.is_particle();
                     if (!ok) fail("basis does not fit '" + m.target + "'");
                     write_bit(m.bit);
                   },
                   [&](const ClassicallyControlled &c) {
                     read_bit(c.bit);
                     subsystem(c.target);
                   },
                   [&](const ClassicalXor &x) {
                     read_bit(x.lhs);
                     read_bit(x.rhs);
                     write_bit(x.out);
                   },
                   [&](const PhaseCorrection &p) {
                     photon(p.photon);
                     read_bit(p.outcome);
                     if (p.modulus < 1) fail("modulus must be positive");
                   },
               },
               instructions[i]);
  }
}

}  // namespace zeno
