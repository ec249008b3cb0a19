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

#ifndef ZENO_STATE_H_
#define ZENO_STATE_H_

#include <complex>
#include <cstddef>
#include <map>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace zeno {

using Amplitude = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Equality / normalization tolerance for state-level assertions.
inline constexpr double kNormTolerance = 1e-12;
/// Tolerance for comparisons against the independent reference model.
inline constexpr double kOracleTolerance = 1e-10;

enum class SubsystemKind { kPhoton, kParticle };

/// Photon levels. Logical |1> outside an interrogation is kOneH; kOneV is the
/// internal polarization used inside the interferometer; kSink collects lost
/// or absorbed amplitude.
namespace photon_level {
inline constexpr int kZero = 0;
inline constexpr int kOneH = 1;
inline constexpr int kOneV = 2;
inline constexpr int kSink = 3;
}  // namespace photon_level

/// Particle(2) position labels: position 0 blocks the interferometer.
namespace particle_level {
inline constexpr int kBlocked = 0;
inline constexpr int kOpen = 1;
}  // namespace particle_level

/// A named tensor factor. Photons have 4 levels {0, 1H, 1V, sink}; a particle
/// with d positions has d + 1 levels, the last one being "exploded".
struct SubsystemSpec {
  std::string name;
  SubsystemKind kind = SubsystemKind::kPhoton;
  int positions = 0;  // particles only

  static SubsystemSpec Photon(std::string name);
  static SubsystemSpec Particle(std::string name, int positions = 2);

  int dimension() const { return kind == SubsystemKind::kPhoton ? 4 : positions + 1; }
  int sink_level() const { return kind == SubsystemKind::kPhoton ? photon_level::kSink : positions; }
  bool is_photon() const { return kind == SubsystemKind::kPhoton; }
  bool is_particle() const { return kind == SubsystemKind::kParticle; }

  bool operator==(const SubsystemSpec &) const = default;
};

/// Measurement bases.
///
///   kPhotonComputational  outcomes 0, 1 (|1H>); |1V> and sink pool into kFailureOutcome
///   kParticlePm           outcomes 0 (|+>), 1 (|->); exploded is kFailureOutcome. Particle(2) only.
///   kParticleComputational / kQuditPosition
///                         outcomes 0..d-1; exploded is kFailureOutcome
enum class Basis { kPhotonComputational, kParticlePm, kParticleComputational, kQuditPosition };

inline constexpr int kFailureOutcome = -1;

class ImpossibleMeasurement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense amplitudes over an ordered tensor product of subsystems. The first
/// subsystem in the layout is the slowest-varying index. The state may be
/// sub-normalized; 1 - norm is the weight of failures that were discarded.
class StateVector {
 public:
  StateVector(std::vector<SubsystemSpec> layout, std::span<const int> levels);
  StateVector(std::vector<SubsystemSpec> layout, std::vector<Amplitude> amps);

  const std::vector<SubsystemSpec> &layout() const { return layout_; }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  std::span<Amplitude> amplitudes() { return amps_; }
  size_t size() const { return amps_.size(); }

  /// Layout position of a named subsystem; throws std::out_of_range.
  size_t slot(std::string_view name) const;
  const SubsystemSpec &spec(std::string_view name) const { return layout_[slot(name)]; }
  size_t stride(size_t slot) const { return strides_[slot]; }
  int level_of(size_t index, size_t slot) const {
    return static_cast<int>((index / strides_[slot]) % static_cast<size_t>(layout_[slot].dimension()));
  }

  size_t index_of(std::span<const int> levels) const;
  Amplitude at(std::span<const int> levels) const { return amps_[index_of(levels)]; }

  double norm_squared() const;
  /// Weight of amplitude discarded by failure pruning.
  double deficit() const { return 1.0 - norm_squared(); }
  void normalize();
  void scale(double factor);

  /// True when any subsystem of the basis index sits on its sink level.
  bool on_sink(size_t index) const;
  /// Zero every amplitude that touches a sink level, returning the weight dropped.
  double prune_failures();

 private:
  void init_strides();

  std::vector<SubsystemSpec> layout_;
  std::vector<size_t> strides_;
  std::vector<Amplitude> amps_;
};

/// Product basis state. Throws std::out_of_range naming the subsystem whose
/// level is out of range.
StateVector new_state(std::vector<SubsystemSpec> layout, std::span<const int> levels);
inline StateVector new_state(std::vector<SubsystemSpec> layout, std::initializer_list<int> levels) {
  return new_state(std::move(layout), std::span<const int>(levels.begin(), levels.size()));
}

/// Applies a contraction on the listed subsystems (identity elsewhere). The
/// operator acts on the tensor product of targets in the listed order.
void apply_local(StateVector &state, std::span<const std::string> targets, const Matrix &op);
void apply_local(StateVector &state, std::string_view target, const Matrix &op);

/// Largest singular value; apply_local rejects operators above 1 + kNormTolerance.
double operator_norm(const Matrix &op);

struct Branch {
  int outcome = 0;
  StateVector state;
  double probability = 0.0;
};

/// Every outcome with nonzero weight; each post-state is renormalized and
/// probability is the pre-renormalization branch weight.
std::vector<Branch> branch_all(const StateVector &state, std::string_view target, Basis basis);

/// Samples one outcome from branch_all with Born weights relative to the
/// current norm. Throws ImpossibleMeasurement when the total weight is < 1e-15.
Branch measure(const StateVector &state, std::string_view target, Basis basis, std::mt19937_64 &rng);

/// |<a|b>|^2 after normalizing both. Throws std::invalid_argument on layout mismatch.
double fidelity(const StateVector &a, const StateVector &b);

/// Reduced density matrix of the named subsystems (in the listed order),
/// normalized to unit trace.
Matrix reduced_density(const StateVector &state, std::span<const std::string> keep);

/// Bits and qudit outcomes produced by measurements or set explicitly.
class ClassicalRegister {
 public:
  void set(const std::string &name, int value) { values_[name] = value; }
  bool has(std::string_view name) const { return values_.find(std::string(name)) != values_.end(); }
  /// Throws std::logic_error if the name was never written.
  int get(std::string_view name) const;
  const std::map<std::string, int> &values() const { return values_; }
  bool operator==(const ClassicalRegister &) const = default;

 private:
  std::map<std::string, int> values_;
};

}  // namespace zeno

#endif  // ZENO_STATE_H_
