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

#include "zeno/circuits.h"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace zeno {

namespace {

Declaration photon(const std::string &name) { return {SubsystemSpec::Photon(name), photon_level::kZero}; }
Declaration particle(const std::string &name, int positions = 2) {
  return {SubsystemSpec::Particle(name, positions), 0};
}

Instruction h(const std::string &p) { return PhotonGate{LocalGate::kH, p}; }
Instruction cz_gate(const std::string &ph, const std::string &pa) {
  return Interrogate{ph, {Blocker{pa, particle_level::kBlocked}}};
}
Instruction plus(const std::string &pa) { return PreparePm{pa, Sign::kPlus}; }
Instruction measure_photon(const std::string &ph, const std::string &bit) {
  return Measure{ph, Basis::kPhotonComputational, bit};
}
Instruction measure_pm(const std::string &pa, const std::string &bit) { return Measure{pa, Basis::kParticlePm, bit}; }
Instruction cx(const std::string &bit, const std::string &target) {
  return ClassicallyControlled{bit, ControlledGate::kX, target};
}
Instruction cz(const std::string &bit, const std::string &target) {
  return ClassicallyControlled{bit, ControlledGate::kZ, target};
}

void append(std::vector<Instruction> &out, const std::vector<Instruction> &more) {
  out.insert(out.end(), more.begin(), more.end());
}

// Particle |+>, then both photons interrogate it. Outcome m of the particle
// in PM says which correction (none / cZ) the control needs.
CircuitProgram direct_cz() {
  CircuitProgram p;
  p.name = "cnot-direct-cz";
  p.subsystems = {photon("c"), photon("t"), particle("p")};
  p.bits = {"m"};
  p.instructions = {plus("p"), cz_gate("c", "p"), ParticleGate{LocalGate::kH, "p"},
                    h("t"),    cz_gate("t", "p"), h("t"),
                    measure_pm("p", "m"), cz("m", "c")};
  p.inputs = {"c", "t"};
  p.outputs = {"c", "t"};
  return p;
}

CircuitProgram direct_cx() {
  CircuitProgram p;
  p.name = "cnot-direct-cx";
  p.subsystems = {photon("c"), photon("t"), particle("p")};
  p.bits = {"m"};
  p.instructions = {plus("p"), h("t"), cz_gate("t", "p"), h("t"), ParticleGate{LocalGate::kH, "p"},
                    cz_gate("c", "p"), measure_pm("p", "m"), cx("m", "t")};
  p.inputs = {"c", "t"};
  p.outputs = {"c", "t"};
  return p;
}

// The target is written into the particle after the control has marked it,
// then read out on a fresh photon.
CircuitProgram half_memory_keep_control() {
  CircuitProgram p;
  p.name = "cnot-half-memory";
  p.subsystems = {photon("c"), photon("t"), particle("p"), photon("f")};
  p.bits = {"a", "c_bit"};
  p.instructions = {plus("p"), cz_gate("c", "p"), cz_gate("t", "p"), h("t"), h("f"), cz_gate("f", "p"),
                    measure_photon("t", "a"), measure_pm("p", "c_bit"), cx("c_bit", "f"), cz("a", "f"),
                    cz("a", "c")};
  p.inputs = {"c", "t"};
  p.outputs = {"c", "f"};
  return p;
}

// Keep-control with the two roles swapped implements CNOT t -> c; Hadamards on
// both lines before and after turn it around.
CircuitProgram half_memory_keep_target() {
  CircuitProgram p;
  p.name = "cnot-half-memory-keep-target";
  p.subsystems = {photon("c"), photon("t"), particle("p"), photon("f")};
  p.bits = {"a", "c_bit"};
  p.instructions = {plus("p"),
                    h("c"),
                    h("t"),
                    cz_gate("t", "p"),
                    cz_gate("c", "p"),
                    h("c"),
                    h("f"),
                    cz_gate("f", "p"),
                    measure_photon("c", "a"),
                    measure_pm("p", "c_bit"),
                    cx("c_bit", "f"),
                    cz("a", "f"),
                    cz("a", "t"),
                    h("f"),
                    h("t")};
  p.inputs = {"c", "t"};
  p.outputs = {"f", "t"};
  return p;
}

// Both photons go through a memory; the control is written into p1 and
// marked into p2, the target is written into p2.
CircuitProgram memory_cnot(bool merge_xor) {
  CircuitProgram p;
  p.name = merge_xor ? "cnot-memory" : "cnot-memory-unmerged";
  p.subsystems = {photon("c"), photon("t"), particle("p1"), particle("p2"), photon("f1"), photon("f2")};
  p.bits = {"a1", "a2", "c1", "c2"};
  p.instructions = {plus("p1"),          plus("p2"),          cz_gate("c", "p2"),   cz_gate("c", "p1"),
                    h("c"),              cz_gate("t", "p2"),  h("t"),               h("f1"),
                    cz_gate("f1", "p1"), h("f2"),             cz_gate("f2", "p2"),  measure_photon("c", "a1"),
                    measure_photon("t", "a2"), measure_pm("p1", "c1"), measure_pm("p2", "c2"), cx("c1", "f1")};
  if (merge_xor) {
    p.bits.push_back("a12");
    p.instructions.push_back(ClassicalXor{"a1", "a2", "a12"});
    p.instructions.push_back(cz("a12", "f1"));
  } else {
    p.instructions.push_back(cz("a1", "f1"));
    p.instructions.push_back(cz("a2", "f1"));
  }
  p.instructions.push_back(cx("c2", "f2"));
  p.instructions.push_back(cz("a2", "f2"));
  p.inputs = {"c", "t"};
  p.outputs = {"f1", "f2"};
  return p;
}

}  // namespace

CircuitProgram bell_generator() {
  CircuitProgram p;
  p.name = "bell";
  p.subsystems = {photon("p1"), photon("p2"), particle("b")};
  p.bits = {"m"};
  p.instructions = {h("p1"), h("p2"), plus("b"), cz_gate("p1", "b"), cz_gate("p2", "b"), measure_pm("b", "m")};
  p.outputs = {"p1", "p2"};
  return p;
}

CircuitProgram toffoli() {
  CircuitProgram p;
  p.name = "toffoli";
  p.subsystems = {particle("b1"), particle("b2"), photon("t")};
  p.instructions = {h("t"), Interrogate{"t", {Blocker{"b1", 0}, Blocker{"b2", 0}}}, h("t")};
  p.inputs = {"b1", "b2", "t"};
  p.outputs = {"b1", "b2", "t"};
  return p;
}

CircuitProgram configurable_gate(const std::vector<Interferometer> &wiring) {
  CircuitProgram p;
  p.name = "configurable";
  std::vector<std::string> photons;
  std::vector<std::pair<std::string, int>> particles;
  for (const auto &w : wiring) {
    if (std::find(photons.begin(), photons.end(), w.photon) == photons.end()) photons.push_back(w.photon);
    std::set<std::string> seen;
    for (const auto &b : w.blockers) {
      if (!seen.insert(b.particle).second) {
        throw std::invalid_argument("configurable_gate: particle '" + b.particle +
                                    "' assigned two positions in one interferometer");
      }
      if (b.position < 0) throw std::invalid_argument("configurable_gate: negative blocking position");
      auto it = std::find_if(particles.begin(), particles.end(), [&](const auto &e) { return e.first == b.particle; });
      if (it == particles.end()) {
        particles.emplace_back(b.particle, std::max(2, b.position + 1));
      } else {
        it->second = std::max(it->second, b.position + 1);
      }
    }
  }
  for (const auto &ph : photons) p.subsystems.push_back(photon(ph));
  for (const auto &[name, positions] : particles) p.subsystems.push_back(particle(name, positions));
  for (const auto &w : wiring) p.instructions.push_back(Interrogate{w.photon, w.blockers});
  for (const auto &d : p.subsystems) p.inputs.push_back(d.spec.name);
  p.outputs = p.inputs;
  p.validate();
  return p;
}

CircuitProgram w_state_generator(int m) {
  if (m < 2 || m > 4) throw std::invalid_argument("w_state_generator: M must lie in [2, 4]");
  CircuitProgram p;
  p.name = "wstate-" + std::to_string(m);
  std::vector<std::string> w;
  for (int i = 0; i < m; ++i) {
    w.push_back("w" + std::to_string(i));
    p.subsystems.push_back(photon(w.back()));
  }
  p.subsystems.push_back(particle("q", m));
  p.bits = {"k"};
  p.instructions.push_back(PrepareUniform{"q"});
  for (const auto &ph : w) p.instructions.push_back(h(ph));
  // Blocking at position i leaves the flip on every other position; the Z
  // moves it onto position i.
  for (int i = 0; i < m; ++i) {
    p.instructions.push_back(Interrogate{w[i], {Blocker{"q", i}}});
    p.instructions.push_back(PhotonGate{LocalGate::kZ, w[i]});
  }
  for (const auto &ph : w) p.instructions.push_back(h(ph));
  p.instructions.push_back(ParticleGate{LocalGate::kFourier, "q"});
  p.instructions.push_back(Measure{"q", Basis::kQuditPosition, "k"});
  for (int j = 0; j < m; ++j) p.instructions.push_back(PhaseCorrection{w[j], "k", j, m});
  p.outputs = w;
  return p;
}

std::vector<Instruction> memory_write(const std::string &ph, const std::string &pa, const std::string &bit_a) {
  return {cz_gate(ph, pa), h(ph), measure_photon(ph, bit_a)};
}

std::vector<Instruction> memory_read(const std::string &pa, const std::string &fresh, const std::string &bit_c,
                                     const std::string &bit_a) {
  return {h(fresh), cz_gate(fresh, pa), measure_pm(pa, bit_c), cx(bit_c, fresh), cz(bit_a, fresh)};
}

CircuitProgram memory_program(bool inverting) {
  CircuitProgram p;
  p.name = inverting ? "memory-inverting" : "memory";
  p.subsystems = {photon("psi"), particle("m"), photon("out")};
  p.bits = {"a", "c"};
  p.instructions.push_back(PreparePm{"m", inverting ? Sign::kMinus : Sign::kPlus});
  append(p.instructions, memory_write("psi", "m", "a"));
  append(p.instructions, memory_read("m", "out", "c", "a"));
  p.inputs = {"psi"};
  p.outputs = {"out"};
  return p;
}

std::vector<CnotFamily> all_families() {
  return {CnotFamily::kMemory, CnotFamily::kHalfMemoryKeepControl, CnotFamily::kHalfMemoryKeepTarget,
          CnotFamily::kDirectCx, CnotFamily::kDirectCz};
}

std::string family_name(CnotFamily family) {
  switch (family) {
    case CnotFamily::kMemory:
      return "memory";
    case CnotFamily::kHalfMemoryKeepControl:
      return "half-memory";
    case CnotFamily::kHalfMemoryKeepTarget:
      return "half-memory-keep-target";
    case CnotFamily::kDirectCx:
      return "direct-cx";
    case CnotFamily::kDirectCz:
      return "direct-cz";
  }
  return "?";
}

CnotFamily parse_family(std::string_view name) {
  if (name == "half-memory-keep-control") return CnotFamily::kHalfMemoryKeepControl;
  for (CnotFamily f : all_families()) {
    if (family_name(f) == name) return f;
  }
  throw std::invalid_argument("unknown CNOT family '" + std::string(name) +
                              "' (memory, half-memory, half-memory-keep-target, direct-cx, direct-cz)");
}

CircuitProgram cnot_circuit(CnotFamily family, bool merge_xor) {
  switch (family) {
    case CnotFamily::kMemory:
      return memory_cnot(merge_xor);
    case CnotFamily::kHalfMemoryKeepControl:
      return half_memory_keep_control();
    case CnotFamily::kHalfMemoryKeepTarget:
      return half_memory_keep_target();
    case CnotFamily::kDirectCx:
      return direct_cx();
    case CnotFamily::kDirectCz:
      return direct_cz();
  }
  throw std::invalid_argument("unknown CNOT family");
}

std::vector<std::string> demo_names() {
  std::vector<std::string> names{"bell", "toffoli", "wstate-2", "wstate-3", "wstate-4", "memory", "memory-inverting",
                                 "qicz"};
  for (CnotFamily f : all_families()) names.push_back("cnot-" + family_name(f));
  return names;
}

CircuitProgram demo_program(std::string_view name) {
  if (name == "bell") return bell_generator();
  if (name == "toffoli") return toffoli();
  if (name == "memory") return memory_program(false);
  if (name == "memory-inverting") return memory_program(true);
  if (name == "qicz") {
    CircuitProgram p;
    p.name = "qicz";
    p.subsystems = {{SubsystemSpec::Photon("ph"), photon_level::kOneH}, particle("b")};
    p.instructions = {cz_gate("ph", "b")};
    p.inputs = {"ph", "b"};
    p.outputs = {"ph", "b"};
    return p;
  }
  if (name.starts_with("wstate-")) {
    const std::string_view m = name.substr(7);
    if (m == "2" || m == "3" || m == "4") return w_state_generator(m[0] - '0');
  }
  if (name.starts_with("cnot-")) {
    try {
      return cnot_circuit(parse_family(name.substr(5)));
    } catch (const std::invalid_argument &) {
    }
  }
  std::string known;
  for (const auto &n : demo_names()) known += (known.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown demo '" + std::string(name) + "' (" + known + ")");
}

}  // namespace zeno
