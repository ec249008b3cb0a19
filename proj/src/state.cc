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

#include "zeno/state.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace zeno {

namespace {

constexpr double kImpossibleWeight = 1e-15;

struct OutcomeSubspace {
  int outcome;
  std::vector<Vector> basis;  // orthonormal vectors over the subsystem levels
};

Vector unit(int dim, int level) {
  Vector v = Vector::Zero(dim);
  v(level) = 1.0;
  return v;
}

std::vector<OutcomeSubspace> outcome_subspaces(const SubsystemSpec &spec, Basis basis) {
  const int dim = spec.dimension();
  std::vector<OutcomeSubspace> out;
  switch (basis) {
    case Basis::kPhotonComputational:
      if (!spec.is_photon()) {
        throw std::invalid_argument("photon-computational basis on non-photon '" + spec.name + "'");
      }
      out.push_back({0, {unit(dim, photon_level::kZero)}});
      out.push_back({1, {unit(dim, photon_level::kOneH)}});
      out.push_back({kFailureOutcome, {unit(dim, photon_level::kOneV), unit(dim, photon_level::kSink)}});
      return out;
    case Basis::kParticlePm: {
      if (!spec.is_particle() || spec.positions != 2) {
        throw std::invalid_argument("particle-PM basis needs a two-position particle, got '" + spec.name + "'");
      }
      const double r = 1.0 / std::sqrt(2.0);
      Vector plus = Vector::Zero(dim);
      Vector minus = Vector::Zero(dim);
      plus(0) = r;
      plus(1) = r;
      minus(0) = r;
      minus(1) = -r;
      out.push_back({0, {plus}});
      out.push_back({1, {minus}});
      out.push_back({kFailureOutcome, {unit(dim, spec.sink_level())}});
      return out;
    }
    case Basis::kParticleComputational:
    case Basis::kQuditPosition:
      if (!spec.is_particle()) {
        throw std::invalid_argument("position basis on non-particle '" + spec.name + "'");
      }
      for (int k = 0; k < spec.positions; ++k) out.push_back({k, {unit(dim, k)}});
      out.push_back({kFailureOutcome, {unit(dim, spec.sink_level())}});
      return out;
  }
  throw std::invalid_argument("unknown basis");
}

}  // namespace

SubsystemSpec SubsystemSpec::Photon(std::string name) {
  return SubsystemSpec{std::move(name), SubsystemKind::kPhoton, 0};
}

SubsystemSpec SubsystemSpec::Particle(std::string name, int positions) {
  if (positions < 2) throw std::invalid_argument("particle '" + name + "' needs at least 2 positions");
  return SubsystemSpec{std::move(name), SubsystemKind::kParticle, positions};
}

StateVector::StateVector(std::vector<SubsystemSpec> layout, std::span<const int> levels)
    : layout_(std::move(layout)) {
  if (levels.size() != layout_.size()) {
    throw std::invalid_argument("level count does not match layout size");
  }
  for (size_t i = 0; i < layout_.size(); ++i) {
    if (levels[i] < 0 || levels[i] >= layout_[i].dimension()) {
      throw std::out_of_range("level " + std::to_string(levels[i]) + " out of range for subsystem '" +
                              layout_[i].name + "'");
    }
  }
  init_strides();
  amps_[index_of(levels)] = 1.0;
}

StateVector::StateVector(std::vector<SubsystemSpec> layout, std::vector<Amplitude> amps)
    : layout_(std::move(layout)) {
  init_strides();
  if (amps.size() != amps_.size()) throw std::invalid_argument("amplitude count does not match layout");
  for (const auto &a : amps) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw std::invalid_argument("non-finite amplitude");
    }
  }
  amps_ = std::move(amps);
}

void StateVector::init_strides() {
  for (size_t i = 0; i < layout_.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      if (layout_[i].name == layout_[j].name) {
        throw std::invalid_argument("duplicate subsystem name '" + layout_[i].name + "'");
      }
    }
  }
  strides_.assign(layout_.size(), 1);
  size_t total = 1;
  for (size_t i = layout_.size(); i-- > 0;) {
    strides_[i] = total;
    total *= static_cast<size_t>(layout_[i].dimension());
  }
  amps_.assign(total, Amplitude{0.0, 0.0});
}

size_t StateVector::slot(std::string_view name) const {
  for (size_t i = 0; i < layout_.size(); ++i) {
    if (layout_[i].name == name) return i;
  }
  throw std::out_of_range("unknown subsystem '" + std::string(name) + "'");
}

size_t StateVector::index_of(std::span<const int> levels) const {
  if (levels.size() != layout_.size()) throw std::invalid_argument("level count does not match layout size");
  size_t index = 0;
  for (size_t i = 0; i < levels.size(); ++i) {
    if (levels[i] < 0 || levels[i] >= layout_[i].dimension()) {
      throw std::out_of_range("level out of range for subsystem '" + layout_[i].name + "'");
    }
    index += strides_[i] * static_cast<size_t>(levels[i]);
  }
  return index;
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const auto &a : amps_) total += std::norm(a);
  return total;
}

void StateVector::normalize() {
  const double n = norm_squared();
  if (n <= 0.0) throw std::logic_error("cannot normalize a zero state");
  scale(1.0 / std::sqrt(n));
}

void StateVector::scale(double factor) {
  for (auto &a : amps_) a *= factor;
}

bool StateVector::on_sink(size_t index) const {
  for (size_t s = 0; s < layout_.size(); ++s) {
    if (level_of(index, s) == layout_[s].sink_level()) return true;
  }
  return false;
}

double StateVector::prune_failures() {
  double dropped = 0.0;
  for (size_t i = 0; i < amps_.size(); ++i) {
    if (amps_[i] != Amplitude{} && on_sink(i)) {
      dropped += std::norm(amps_[i]);
      amps_[i] = 0.0;
    }
  }
  return dropped;
}

StateVector new_state(std::vector<SubsystemSpec> layout, std::span<const int> levels) {
  return StateVector(std::move(layout), levels);
}

double operator_norm(const Matrix &op) {
  if (op.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(op);
  return svd.singularValues()(0);
}

void apply_local(StateVector &state, std::span<const std::string> targets, const Matrix &op) {
  std::vector<size_t> slots;
  size_t dim = 1;
  for (const auto &t : targets) {
    const size_t s = state.slot(t);
    if (std::find(slots.begin(), slots.end(), s) != slots.end()) {
      throw std::invalid_argument("subsystem '" + t + "' listed twice");
    }
    slots.push_back(s);
    dim *= static_cast<size_t>(state.layout()[s].dimension());
  }
  if (op.rows() != static_cast<Eigen::Index>(dim) || op.cols() != static_cast<Eigen::Index>(dim)) {
    throw std::invalid_argument("operator is " + std::to_string(op.rows()) + "x" + std::to_string(op.cols()) +
                                " but targets span dimension " + std::to_string(dim));
  }
  if (!op.allFinite()) throw std::invalid_argument("operator has non-finite entries");
  if (operator_norm(op) > 1.0 + kNormTolerance) {
    throw std::invalid_argument("operator is not a contraction");
  }

  // Offsets of each target multi-index relative to a base index whose target digits are all zero.
  std::vector<size_t> offsets(dim, 0);
  for (size_t j = 0; j < dim; ++j) {
    size_t rem = j;
    size_t off = 0;
    for (size_t k = slots.size(); k-- > 0;) {
      const auto d = static_cast<size_t>(state.layout()[slots[k]].dimension());
      off += (rem % d) * state.stride(slots[k]);
      rem /= d;
    }
    offsets[j] = off;
  }

  auto amps = state.amplitudes();
  std::vector<Amplitude> in(dim), out(dim);
  for (size_t base = 0; base < amps.size(); ++base) {
    bool is_base = true;
    for (size_t s : slots) {
      if (state.level_of(base, s) != 0) {
        is_base = false;
        break;
      }
    }
    if (!is_base) continue;
    bool any = false;
    for (size_t j = 0; j < dim; ++j) {
      in[j] = amps[base + offsets[j]];
      any = any || in[j] != Amplitude{};
    }
    if (!any) continue;
    for (size_t r = 0; r < dim; ++r) {
      Amplitude acc{};
      for (size_t c = 0; c < dim; ++c) acc += op(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * in[c];
      out[r] = acc;
    }
    for (size_t j = 0; j < dim; ++j) amps[base + offsets[j]] = out[j];
  }
}

void apply_local(StateVector &state, std::string_view target, const Matrix &op) {
  const std::string name(target);
  apply_local(state, std::span<const std::string>(&name, 1), op);
}

std::vector<Branch> branch_all(const StateVector &state, std::string_view target, Basis basis) {
  const SubsystemSpec &spec = state.spec(target);
  std::vector<Branch> branches;
  for (const auto &sub : outcome_subspaces(spec, basis)) {
    Matrix projector = Matrix::Zero(spec.dimension(), spec.dimension());
    for (const auto &u : sub.basis) projector += u * u.adjoint();
    StateVector post = state;
    apply_local(post, target, projector);
    const double weight = post.norm_squared();
    if (weight <= kImpossibleWeight) continue;
    post.normalize();
    branches.push_back(Branch{sub.outcome, std::move(post), weight});
  }
  return branches;
}

Branch measure(const StateVector &state, std::string_view target, Basis basis, std::mt19937_64 &rng) {
  auto branches = branch_all(state, target, basis);
  double total = 0.0;
  for (const auto &b : branches) total += b.probability;
  if (branches.empty() || total < kImpossibleWeight) {
    throw ImpossibleMeasurement("impossible measurement on '" + std::string(target) + "'");
  }
  std::uniform_real_distribution<double> uniform(0.0, total);
  const double u = uniform(rng);
  double acc = 0.0;
  for (auto &b : branches) {
    acc += b.probability;
    if (u < acc) return std::move(b);
  }
  return std::move(branches.back());
}

double fidelity(const StateVector &a, const StateVector &b) {
  if (a.layout() != b.layout()) throw std::invalid_argument("fidelity: layout mismatch");
  Amplitude overlap{};
  for (size_t i = 0; i < a.size(); ++i) overlap += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
  const double na = a.norm_squared();
  const double nb = b.norm_squared();
  if (na <= 0.0 || nb <= 0.0) throw std::invalid_argument("fidelity: zero state");
  return std::clamp(std::norm(overlap) / (na * nb), 0.0, 1.0);
}

Matrix reduced_density(const StateVector &state, std::span<const std::string> keep) {
  std::vector<size_t> keep_slots;
  for (const auto &k : keep) keep_slots.push_back(state.slot(k));
  std::vector<size_t> rest_slots;
  for (size_t s = 0; s < state.layout().size(); ++s) {
    if (std::find(keep_slots.begin(), keep_slots.end(), s) == keep_slots.end()) rest_slots.push_back(s);
  }
  auto dim_of = [&](const std::vector<size_t> &slots) {
    size_t d = 1;
    for (size_t s : slots) d *= static_cast<size_t>(state.layout()[s].dimension());
    return d;
  };
  const size_t dk = dim_of(keep_slots);
  const size_t dr = dim_of(rest_slots);
  Matrix psi = Matrix::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dr));
  auto flat = [&](size_t index, const std::vector<size_t> &slots) {
    size_t f = 0;
    for (size_t s : slots) f = f * static_cast<size_t>(state.layout()[s].dimension()) + state.level_of(index, s);
    return f;
  };
  const auto amps = state.amplitudes();
  for (size_t i = 0; i < amps.size(); ++i) {
    if (amps[i] == Amplitude{}) continue;
    psi(static_cast<Eigen::Index>(flat(i, keep_slots)), static_cast<Eigen::Index>(flat(i, rest_slots))) = amps[i];
  }
  Matrix rho = psi * psi.adjoint();
  const double tr = rho.trace().real();
  if (tr <= 0.0) throw std::invalid_argument("reduced_density: zero state");
  return rho / tr;
}

int ClassicalRegister::get(std::string_view name) const {
  auto it = values_.find(std::string(name));
  if (it == values_.end()) throw std::logic_error("classical bit '" + std::string(name) + "' read before written");
  return it->second;
}

}  // namespace zeno
