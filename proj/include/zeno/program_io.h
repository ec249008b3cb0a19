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

#ifndef ZENO_PROGRAM_IO_H_
#define ZENO_PROGRAM_IO_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zeno/executor.h"
#include "zeno/program.h"

namespace zeno {

/// Malformed circuit file. what() carries "line L, column C" for syntax
/// errors and "instruction K" for semantic ones.
class ProgramParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Circuit file, version "1":
//
//   {"version": "1", "name": "bell",
//    "subsystems": [{"name": "p1", "kind": "photon"},
//                   {"name": "b", "kind": "particle", "positions": 2, "init": 0}],
//    "bits": ["m"], "inputs": [], "outputs": ["p1"],
//    "instructions": [{"op": "photon_h", "photon": "p1"}, ...]}
//
// "dim" is accepted instead of "positions" and means the full level count
// (positions + 1). Amplitude index order: first subsystem slowest.
CircuitProgram parse_program(std::string_view text);
CircuitProgram load_program(const std::string &path);
/// Canonical, pretty-printed form; parse(serialize(p)) == p.
std::string serialize_program(const CircuitProgram &program);

/// "%.12g".
std::string format_number(double value);
/// Level label: photon 0, 1H, 1V, S; particle position index or X.
std::string level_label(const SubsystemSpec &spec, int level);

std::string result_json(const std::string &program_name, const RunResult &result);
std::string branches_json(const std::string &program_name, const std::vector<RunResult> &branches);
/// Header: branch,success_probability,failed,register,basis_state,re,im
std::string result_csv(const std::vector<RunResult> &branches);

}  // namespace zeno

#endif  // ZENO_PROGRAM_IO_H_
