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

#ifndef ZENO_CIRCUITS_H_
#define ZENO_CIRCUITS_H_

#include <string>
#include <string_view>
#include <vector>

#include "zeno/program.h"

namespace zeno {

/// Photons p1, p2 and particle b. The particle-PM outcome lands in bit "m":
/// 0 leaves (|00> + |11>)/sqrt(2), 1 leaves (|01> + |10>)/sqrt(2).
CircuitProgram bell_generator();

/// Particles b1, b2 control photon t: t flips iff both particles are open.
CircuitProgram toffoli();

/// One interferometer: the photon's |1> mode against a set of blockers.
struct Interferometer {
  std::string photon;
  std::vector<Blocker> blockers;
};

/// Phase gates only; every photon and particle named by the wiring is
/// declared in first-use order. Particles get max(2, highest position + 1)
/// positions. Throws std::invalid_argument when an interferometer lists the
/// same particle twice.
CircuitProgram configurable_gate(const std::vector<Interferometer> &wiring);

/// Photons w0..w{M-1}, particle q with M positions, outcome "k". 2 <= M <= 4.
CircuitProgram w_state_generator(int m);

/// qicz(photon, particle); H(photon); measure photon -> bit_a.
std::vector<Instruction> memory_write(const std::string &photon, const std::string &particle,
                                      const std::string &bit_a);
/// Fresh |+>; qicz(fresh, particle); measure particle PM -> bit_c; cX^c, cZ^a on fresh.
std::vector<Instruction> memory_read(const std::string &particle, const std::string &fresh, const std::string &bit_c,
                                     const std::string &bit_a);

/// Write photon "psi" into particle "m", read it back on photon "out". With
/// inverting set the particle starts in |-> and the readout is X|psi>.
CircuitProgram memory_program(bool inverting = false);

enum class CnotFamily { kMemory, kHalfMemoryKeepControl, kHalfMemoryKeepTarget, kDirectCx, kDirectCz };

std::vector<CnotFamily> all_families();
/// CLI names: memory, half-memory, half-memory-keep-target, direct-cx, direct-cz.
std::string family_name(CnotFamily family);
/// Accepts the CLI names; "half-memory-keep-control" is an alias. Throws
/// std::invalid_argument.
CnotFamily parse_family(std::string_view name);

/// CNOT from photon "c" to photon "t". inputs() is {c, t}; outputs() lists the
/// photons carrying control and target at the end. merge_xor only affects the
/// Memory family: it folds the two control-line cZ gates into one on a1 xor a2.
CircuitProgram cnot_circuit(CnotFamily family, bool merge_xor = true);

/// Built-in programs: bell, toffoli, wstate-2..4, memory, memory-inverting,
/// qicz (photon |1H> against a blocked particle) and cnot-<family>.
std::vector<std::string> demo_names();
/// Throws std::invalid_argument for unknown names.
CircuitProgram demo_program(std::string_view name);

}  // namespace zeno

#endif  // ZENO_CIRCUITS_H_
