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

#ifndef ZENO_ORACLE_H_
#define ZENO_ORACLE_H_

#include <map>
#include <string>
#include <vector>

#include "zeno/executor.h"
#include "zeno/program.h"

namespace zeno {

// Reference model. It works on the logical space only (photon: |0>, |1>;
// particle: its positions), writes every instruction as a full-space matrix
// and enumerates measurements by projectors. Anything that leaves the logical
// space is a failure and is dropped. The interrogation is replaced by its
// closed form: the |1>|config> amplitude after N cycles is the HH entry of
// (sqrt(1 - lambda) diag(1, (1 - eps)^(b/2)) R(theta))^N with b the number of
// blockers in place; the ideal limit is -1 when b = 0 and 1 otherwise.

/// Largest logical dimension the oracle accepts.
inline constexpr size_t kOracleMaxDimension = 4096;

struct OracleOptions {
  bool ideal_limit = true;
  QiParams qi;  // finite mode only; residual |1V> is always treated as lost
};

struct BranchLeaf {
  std::map<std::string, int> outcomes;
  Vector state;  // unnormalized, logical space
};

struct BranchTree {
  std::vector<BranchLeaf> leaves;
  double total_weight() const;
};

/// Logical dimension of one subsystem (photon 2, particle d).
int logical_dimension(const SubsystemSpec &spec);

/// Logical product basis vector for the program's initial levels.
Vector logical_initial_state(const CircuitProgram &program);
/// Logical state with the program inputs set to `inputs` (big-endian over
/// program.inputs) and everything else at its initial level.
Vector logical_input(const CircuitProgram &program, const Vector &inputs);
/// The same input embedded in the simulator's extended space.
StateVector simulator_input(const CircuitProgram &program, const Vector &inputs);
/// Restriction of a simulator state to the logical levels.
Vector to_logical(const StateVector &state);

/// Throws std::invalid_argument when the logical dimension exceeds
/// kOracleMaxDimension or an initial level is not logical.
BranchTree brute_force_run(const CircuitProgram &program, const Vector &logical_state, const OracleOptions &options);
BranchTree brute_force_run(const CircuitProgram &program, const OracleOptions &options);

struct CompareReport {
  bool structure_ok = true;
  std::string message;
  double max_deviation = 0.0;
  size_t branches = 0;
};

/// Runs the simulator (branch enumeration) and the oracle on the same input
/// and returns the largest amplitude deviation after aligning the global phase
/// of each branch. Branches are matched by their classical outcomes.
CompareReport compare(const CircuitProgram &program, const Vector &logical_inputs, const RunOptions &sim,
                      const OracleOptions &oracle);
/// Program initial state, oracle in the mode matching `sim`.
CompareReport compare(const CircuitProgram &program, const RunOptions &sim = {QiParams{}, QiczMode::kIdealLimit});

/// Normalized reduced density matrix of `keep` from a logical state.
Matrix logical_reduced_density(const CircuitProgram &program, const Vector &state,
                               const std::vector<std::string> &keep);

// Reference maps in the logical basis, first factor most significant.
Matrix cz_reference();
/// Control first, target second.
Matrix cnot_reference();
/// Controls first; the target flips when both are 1.
Matrix ccnot_reference();
/// (|10..0> + |010..0> + ... + |0..01>)/sqrt(M).
Vector w_reference(int m);
Vector bell_phi_plus();
Vector bell_psi_plus();

/// Closed-form |1>|config> amplitude of one finite interrogation with
/// `blocking` blockers in place.
Amplitude interrogation_amplitude(const QiParams &params, int blocking);

struct CnotReport {
  double max_infidelity = 0.0;    // simulator outputs vs CNOT applied to the input
  double max_deviation = 0.0;     // simulator vs oracle
  double min_success = 1.0;       // total branch weight
  size_t branches = 0;
  bool structure_ok = true;
};

/// Checks one CNOT program on a two-qubit input (control, target): every
/// simulator branch must leave the outputs in CNOT|input>, and the simulator
/// must agree with the oracle.
CnotReport verify_cnot(const CircuitProgram &program, const Vector &input, const RunOptions &sim);

}  // namespace zeno

#endif  // ZENO_ORACLE_H_
