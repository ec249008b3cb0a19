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

#include "zeno/oracle.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zeno {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kDropWeight = 1e-15;

Matrix kron(const Matrix &a, const Matrix &b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// Logical dimensions and digit arithmetic of a program layout.
struct Space {
  std::vector<std::string> names;
  std::vector<int> dims;
  std::vector<size_t> strides;
  size_t size = 1;

  explicit Space(const CircuitProgram &program) {
    for (const auto &d : program.subsystems) {
      names.push_back(d.spec.name);
      dims.push_back(logical_dimension(d.spec));
    }
    strides.assign(dims.size(), 1);
    for (size_t k = dims.size(); k-- > 0;) {
      strides[k] = size;
      size *= static_cast<size_t>(dims[k]);
      if (size > kOracleMaxDimension) {
        throw std::invalid_argument("oracle: logical dimension exceeds " + std::to_string(kOracleMaxDimension));
      }
    }
  }

  size_t slot(const std::string &name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw std::invalid_argument("oracle: unknown subsystem '" + name + "'");
    return static_cast<size_t>(it - names.begin());
  }
  int digit(size_t index, size_t slot) const {
    return static_cast<int>((index / strides[slot]) % static_cast<size_t>(dims[slot]));
  }

  // Identity on every factor except `slot`.
  Matrix embed(size_t slot, const Matrix &op) const {
    Matrix out = Matrix::Identity(1, 1);
    for (size_t k = 0; k < dims.size(); ++k) {
      out = kron(out, k == slot ? op : Matrix::Identity(dims[k], dims[k]));
    }
    return out;
  }
};

Matrix two_level(int dim, Amplitude a, Amplitude b, Amplitude c, Amplitude d) {
  Matrix m = Matrix::Identity(dim, dim);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

Matrix local_matrix(LocalGate gate, int dim) {
  const double r = std::sqrt(0.5);
  switch (gate) {
    case LocalGate::kH:
      return two_level(dim, r, r, r, -r);
    case LocalGate::kX:
      return two_level(dim, 0, 1, 1, 0);
    case LocalGate::kZ:
      return two_level(dim, 1, 0, 0, -1);
    case LocalGate::kFourier: {
      Matrix f(dim, dim);
      for (int k = 0; k < dim; ++k) {
        for (int j = 0; j < dim; ++j) {
          f(k, j) = std::polar(1.0 / std::sqrt(double(dim)), 2.0 * std::numbers::pi * j * k / dim);
        }
      }
      return f;
    }
  }
  throw std::logic_error("unreachable");
}

// Preparation as a map that sends every position to the prepared profile;
// on the definite-position inputs it is used with, it is the reset.
Matrix preparation(const Vector &profile) {
  const auto dim = profile.size();
  Matrix m(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) m.col(j) = profile;
  return m;
}

Matrix interrogation(const Space &space, const Interrogate &q, const OracleOptions &options) {
  const size_t ph = space.slot(q.photon);
  std::vector<std::pair<size_t, int>> blockers;
  for (const auto &b : q.blockers) blockers.emplace_back(space.slot(b.particle), b.position);
  const Amplitude free_amp = options.ideal_limit ? Amplitude(-1.0) : interrogation_amplitude(options.qi, 0);
  Vector diag(static_cast<Eigen::Index>(space.size));
  for (size_t i = 0; i < space.size; ++i) {
    if (space.digit(i, ph) == 0) {
      diag(i) = 1.0;
      continue;
    }
    int b = 0;
    for (const auto &[slot, position] : blockers) b += space.digit(i, slot) == position ? 1 : 0;
    if (options.ideal_limit) {
      diag(i) = b == 0 ? free_amp : Amplitude(1.0);
    } else {
      diag(i) = b == 0 ? free_amp : interrogation_amplitude(options.qi, b);
    }
  }
  return diag.asDiagonal();
}

std::vector<std::pair<int, Matrix>> projectors(const Space &space, const Measure &m) {
  const size_t slot = space.slot(m.target);
  const int dim = space.dims[slot];
  std::vector<std::pair<int, Matrix>> out;
  if (m.basis == Basis::kParticlePm) {
    Vector plus(2), minus(2);
    plus << std::sqrt(0.5), std::sqrt(0.5);
    minus << std::sqrt(0.5), -std::sqrt(0.5);
    out.emplace_back(0, space.embed(slot, plus * plus.adjoint()));
    out.emplace_back(1, space.embed(slot, minus * minus.adjoint()));
    return out;
  }
  for (int k = 0; k < dim; ++k) {
    Matrix p = Matrix::Zero(dim, dim);
    p(k, k) = 1.0;
    out.emplace_back(k, space.embed(slot, p));
  }
  return out;
}

Matrix instruction_matrix(const Space &space, const Instruction &instr, const std::map<std::string, int> &reg,
                          const OracleOptions &options) {
  auto bit = [&](const std::string &name) {
    auto it = reg.find(name);
    if (it == reg.end()) throw std::logic_error("oracle: bit '" + name + "' read before written");
    return it->second;
  };
  auto identity = [&] { return Matrix(Matrix::Identity(space.size, space.size)); };
  return std::visit(
      Overloaded{
          [&](const PhotonGate &g) {
            const size_t s = space.slot(g.photon);
            return space.embed(s, local_matrix(g.gate, space.dims[s]));
          },
          [&](const ParticleGate &g) {
            const size_t s = space.slot(g.particle);
            return space.embed(s, local_matrix(g.gate, space.dims[s]));
          },
          [&](const PreparePm &p) {
            Vector v(2);
            v << std::sqrt(0.5), p.sign == Sign::kPlus ? std::sqrt(0.5) : -std::sqrt(0.5);
            return space.embed(space.slot(p.particle), preparation(v));
          },
          [&](const PrepareUniform &p) {
            const size_t s = space.slot(p.particle);
            return space.embed(s, preparation(Vector::Constant(space.dims[s], 1.0 / std::sqrt(space.dims[s]))));
          },
          [&](const Interrogate &q) { return interrogation(space, q, options); },
          [&](const Measure &) -> Matrix { throw std::logic_error("oracle: measurement is not a matrix"); },
          [&](const ClassicallyControlled &c) {
            if (bit(c.bit) == 0) return identity();
            const size_t s = space.slot(c.target);
            return space.embed(s, local_matrix(c.gate == ControlledGate::kX ? LocalGate::kX : LocalGate::kZ,
                                               space.dims[s]));
          },
          [&](const ClassicalXor &) { return identity(); },
          [&](const PhaseCorrection &p) {
            Matrix m = Matrix::Identity(2, 2);
            m(1, 1) = std::polar(1.0, -2.0 * std::numbers::pi * p.multiplier * bit(p.outcome) / p.modulus);
            return space.embed(space.slot(p.photon), m);
          },
      },
      instr);
}

void expand(const CircuitProgram &program, const Space &space, size_t pc, Vector state,
            std::map<std::string, int> reg, const OracleOptions &options, BranchTree &tree) {
  for (; pc < program.instructions.size(); ++pc) {
    const Instruction &instr = program.instructions[pc];
    if (const auto *m = std::get_if<Measure>(&instr)) {
      for (const auto &[outcome, projector] : projectors(space, *m)) {
        Vector post = projector * state;
        if (post.squaredNorm() <= kDropWeight) continue;
        auto next = reg;
        next[m->bit] = outcome;
        expand(program, space, pc + 1, std::move(post), std::move(next), options, tree);
      }
      return;
    }
    if (const auto *x = std::get_if<ClassicalXor>(&instr)) {
      reg[x->out] = reg.at(x->lhs) ^ reg.at(x->rhs);
      continue;
    }
    state = instruction_matrix(space, instr, reg, options) * state;
  }
  if (state.squaredNorm() <= kDropWeight) return;
  tree.leaves.push_back(BranchLeaf{std::move(reg), std::move(state)});
}

double leaf_deviation(const Vector &sim, const Vector &ora) {
  const Amplitude overlap = sim.dot(ora);  // sim^dagger ora
  Vector aligned = sim;
  if (std::abs(overlap) > 0.0) aligned *= overlap / std::abs(overlap);
  return (ora - aligned).cwiseAbs().maxCoeff();
}

CompareReport compare_states(const CircuitProgram &program, StateVector sim_in, const Vector &ora_in,
                             const RunOptions &sim, const OracleOptions &oracle) {
  if (!oracle.ideal_limit && oracle.qi.residual_v == ResidualVPolicy::kKeep) {
    throw std::invalid_argument("compare: the oracle models the route-to-sink residual policy only");
  }
  const auto sim_leaves = run_branches(program, std::move(sim_in), sim);
  const BranchTree tree = brute_force_run(program, ora_in, oracle);

  CompareReport report;
  std::map<std::map<std::string, int>, Vector> sim_map;
  for (const auto &r : sim_leaves) sim_map[r.reg.values()] = to_logical(r.final_state);
  std::map<std::map<std::string, int>, Vector> ora_map;
  for (const auto &leaf : tree.leaves) ora_map[leaf.outcomes] = leaf.state;

  auto describe = [](const std::map<std::string, int> &outcomes) {
    std::string s = "{";
    for (const auto &[k, v] : outcomes) s += (s.size() > 1 ? "," : "") + k + "=" + std::to_string(v);
    return s + "}";
  };
  auto unmatched = [&](const std::map<std::string, int> &key, const Vector &v, const char *side) {
    report.max_deviation = std::max(report.max_deviation, v.cwiseAbs().maxCoeff());
    if (v.squaredNorm() > 1e-14) {
      report.structure_ok = false;
      report.message += std::string("branch ") + describe(key) + " only in " + side + "; ";
    }
  };
  for (const auto &[key, v] : sim_map) {
    auto it = ora_map.find(key);
    if (it == ora_map.end()) {
      unmatched(key, v, "simulator");
      continue;
    }
    report.max_deviation = std::max(report.max_deviation, leaf_deviation(v, it->second));
    ++report.branches;
  }
  for (const auto &[key, v] : ora_map) {
    if (!sim_map.count(key)) unmatched(key, v, "oracle");
  }
  return report;
}

}  // namespace

double BranchTree::total_weight() const {
  double total = 0.0;
  for (const auto &leaf : leaves) total += leaf.state.squaredNorm();
  return total;
}

int logical_dimension(const SubsystemSpec &spec) { return spec.is_photon() ? 2 : spec.positions; }

Amplitude interrogation_amplitude(const QiParams &params, int blocking) {
  params.validate();
  const double th = params.theta();
  Eigen::Matrix2cd cycle;
  cycle << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
  Eigen::Matrix2cd absorb = Eigen::Matrix2cd::Identity();
  absorb(1, 1) = std::pow(1.0 - params.absorb_prob, 0.5 * blocking);
  cycle = std::sqrt(1.0 - params.cycle_loss) * absorb * cycle;
  Eigen::Matrix2cd power = Eigen::Matrix2cd::Identity();
  for (long n = params.cycles; n > 0; n >>= 1) {
    if (n & 1) power = cycle * power;
    cycle = cycle * cycle;
  }
  return power(0, 0);
}

Vector logical_initial_state(const CircuitProgram &program) {
  const Space space(program);
  size_t index = 0;
  for (size_t k = 0; k < program.subsystems.size(); ++k) {
    const int level = program.subsystems[k].initial_level;
    if (level >= space.dims[k]) {
      throw std::invalid_argument("oracle: initial level of '" + space.names[k] + "' is not logical");
    }
    index += static_cast<size_t>(level) * space.strides[k];
  }
  Vector v = Vector::Zero(static_cast<Eigen::Index>(space.size));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return v;
}

Vector logical_input(const CircuitProgram &program, const Vector &inputs) {
  const Space space(program);
  std::vector<size_t> input_slots;
  size_t input_size = 1;
  for (const auto &name : program.inputs) {
    input_slots.push_back(space.slot(name));
    input_size *= static_cast<size_t>(space.dims[input_slots.back()]);
  }
  if (static_cast<size_t>(inputs.size()) != input_size) {
    throw std::invalid_argument("logical_input: expected " + std::to_string(input_size) + " amplitudes");
  }
  Vector v = Vector::Zero(static_cast<Eigen::Index>(space.size));
  for (size_t i = 0; i < space.size; ++i) {
    bool rest_initial = true;
    for (size_t k = 0; k < space.dims.size(); ++k) {
      if (std::find(input_slots.begin(), input_slots.end(), k) != input_slots.end()) continue;
      if (space.digit(i, k) != program.subsystems[k].initial_level) rest_initial = false;
    }
    if (!rest_initial) continue;
    size_t j = 0;
    for (size_t s : input_slots) j = j * static_cast<size_t>(space.dims[s]) + static_cast<size_t>(space.digit(i, s));
    v(static_cast<Eigen::Index>(i)) = inputs(static_cast<Eigen::Index>(j));
  }
  return v;
}

StateVector simulator_input(const CircuitProgram &program, const Vector &inputs) {
  const Space space(program);
  const Vector logical = logical_input(program, inputs);
  StateVector state = program.initial_state();
  auto amps = state.amplitudes();
  std::fill(amps.begin(), amps.end(), Amplitude{});
  std::vector<int> levels(space.dims.size());
  for (size_t i = 0; i < space.size; ++i) {
    // Logical photon |1> is level 1H; particle positions keep their index.
    for (size_t k = 0; k < levels.size(); ++k) levels[k] = space.digit(i, k);
    amps[state.index_of(levels)] = logical(static_cast<Eigen::Index>(i));
  }
  return state;
}

Vector to_logical(const StateVector &state) {
  std::vector<int> dims;
  size_t size = 1;
  for (const auto &spec : state.layout()) {
    dims.push_back(logical_dimension(spec));
    size *= static_cast<size_t>(dims.back());
  }
  Vector v(static_cast<Eigen::Index>(size));
  std::vector<int> levels(dims.size());
  for (size_t i = 0; i < size; ++i) {
    size_t rest = i;
    for (size_t k = dims.size(); k-- > 0;) {
      levels[k] = static_cast<int>(rest % static_cast<size_t>(dims[k]));
      rest /= static_cast<size_t>(dims[k]);
    }
    v(static_cast<Eigen::Index>(i)) = state.at(levels);
  }
  return v;
}

BranchTree brute_force_run(const CircuitProgram &program, const Vector &logical_state, const OracleOptions &options) {
  program.validate();
  if (!options.ideal_limit) options.qi.validate();
  const Space space(program);
  if (static_cast<size_t>(logical_state.size()) != space.size) {
    throw std::invalid_argument("brute_force_run: state size does not match the program");
  }
  BranchTree tree;
  expand(program, space, 0, logical_state, {}, options, tree);
  return tree;
}

BranchTree brute_force_run(const CircuitProgram &program, const OracleOptions &options) {
  return brute_force_run(program, logical_initial_state(program), options);
}

CompareReport compare(const CircuitProgram &program, const Vector &logical_inputs, const RunOptions &sim,
                      const OracleOptions &oracle) {
  return compare_states(program, simulator_input(program, logical_inputs), logical_input(program, logical_inputs),
                        sim, oracle);
}

CompareReport compare(const CircuitProgram &program, const RunOptions &sim) {
  const OracleOptions oracle{sim.mode == QiczMode::kIdealLimit, sim.qi};
  return compare_states(program, program.initial_state(), logical_initial_state(program), sim, oracle);
}

Matrix logical_reduced_density(const CircuitProgram &program, const Vector &state,
                               const std::vector<std::string> &keep) {
  const Space space(program);
  std::vector<size_t> keep_slots;
  size_t keep_size = 1;
  for (const auto &k : keep) {
    keep_slots.push_back(space.slot(k));
    keep_size *= static_cast<size_t>(space.dims[keep_slots.back()]);
  }
  const size_t rest_size = space.size / keep_size;
  Matrix psi = Matrix::Zero(static_cast<Eigen::Index>(keep_size), static_cast<Eigen::Index>(rest_size));
  for (size_t i = 0; i < space.size; ++i) {
    size_t row = 0;
    for (size_t s : keep_slots) row = row * static_cast<size_t>(space.dims[s]) + static_cast<size_t>(space.digit(i, s));
    size_t col = 0;
    for (size_t k = 0; k < space.dims.size(); ++k) {
      if (std::find(keep_slots.begin(), keep_slots.end(), k) != keep_slots.end()) continue;
      col = col * static_cast<size_t>(space.dims[k]) + static_cast<size_t>(space.digit(i, k));
    }
    psi(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = state(static_cast<Eigen::Index>(i));
  }
  Matrix rho = psi * psi.adjoint();
  const double trace = rho.trace().real();
  if (trace <= 0.0) throw std::invalid_argument("logical_reduced_density: zero state");
  return rho / trace;
}

Matrix cz_reference() {
  Matrix m = Matrix::Identity(4, 4);
  m(3, 3) = -1.0;
  return m;
}

Matrix cnot_reference() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
  return m;
}

Matrix ccnot_reference() {
  Matrix m = Matrix::Identity(8, 8);
  m(6, 6) = m(7, 7) = 0.0;
  m(6, 7) = m(7, 6) = 1.0;
  return m;
}

Vector w_reference(int m) {
  if (m < 1 || m > 12) throw std::invalid_argument("w_reference: M out of range");
  Vector v = Vector::Zero(Eigen::Index{1} << m);
  for (int j = 0; j < m; ++j) v(Eigen::Index{1} << (m - 1 - j)) = 1.0 / std::sqrt(double(m));
  return v;
}

Vector bell_phi_plus() {
  Vector v = Vector::Zero(4);
  v(0) = v(3) = std::sqrt(0.5);
  return v;
}

Vector bell_psi_plus() {
  Vector v = Vector::Zero(4);
  v(1) = v(2) = std::sqrt(0.5);
  return v;
}

CnotReport verify_cnot(const CircuitProgram &program, const Vector &input, const RunOptions &sim) {
  if (input.size() != 4) throw std::invalid_argument("verify_cnot: input must be a two-qubit state");
  const Vector expected = cnot_reference() * input.normalized();
  CnotReport report;
  const auto branches = run_branches(program, simulator_input(program, input), sim);
  double total = 0.0;
  for (const auto &b : branches) {
    const Matrix rho = logical_reduced_density(program, to_logical(b.final_state), program.outputs);
    const double f = (expected.adjoint() * rho * expected)(0, 0).real();
    report.max_infidelity = std::max(report.max_infidelity, 1.0 - f);
    total += b.success_probability;
  }
  report.branches = branches.size();
  report.min_success = total;
  const OracleOptions oracle{sim.mode == QiczMode::kIdealLimit, sim.qi};
  const CompareReport cmp = compare(program, input, sim, oracle);
  report.max_deviation = cmp.max_deviation;
  report.structure_ok = cmp.structure_ok;
  return report;
}

}  // namespace zeno
