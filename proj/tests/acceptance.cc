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


// Acceptance run: one PASS/FAIL line per criterion, each with its runtime
// against its budget. Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "zeno/analysis.h"
#include "zeno/circuits.h"
#include "zeno/oracle.h"
#include "zeno/qi_gate.h"

namespace zeno {
namespace {

constexpr double kPi = std::numbers::pi;

struct Verdict {
  bool pass = true;
  std::string detail;
};

QiParams cycles(int n, ThetaRule rule = ThetaRule::kPiOverN) {
  QiParams p;
  p.cycles = n;
  p.theta_rule = rule;
  return p;
}

Vector haar_qubit(std::mt19937_64 &rng) {
  std::normal_distribution<double> g;
  Vector v(2);
  v << Amplitude(g(rng), g(rng)), Amplitude(g(rng), g(rng));
  return v.normalized();
}

double output_fidelity(const CircuitProgram &program, const RunResult &branch, const Vector &want) {
  const Matrix rho = logical_reduced_density(program, to_logical(branch.final_state), program.outputs);
  const Vector w = want.normalized();
  return (w.adjoint() * rho * w)(0, 0).real();
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Verdict zeno_survival() {
  Verdict v;
  double worst_exact = 0.0;
  double worst_approx_ratio = 0.0;
  for (int n : {2, 10, 100, 1000}) {
    for (ThetaRule rule : {ThetaRule::kPiOverN, ThetaRule::kPiOver2N}) {
      const QiParams p = cycles(n, rule);
      const double s = blocked_survival(p);
      worst_exact = std::max(worst_exact, std::abs(s - std::pow(std::cos(p.theta()), 2 * n)));
      if (rule == ThetaRule::kPiOverN) {
        const double approx = 1.0 - n * p.theta() * p.theta();
        const double bound = 2 * std::pow(kPi, 4) / (double(n) * n);
        worst_approx_ratio = std::max(worst_approx_ratio, std::abs(s - approx) / bound);
      }
    }
  }
  v.pass = worst_exact <= 1e-12 && worst_approx_ratio <= 1.0;
  v.detail = "max |survival - cos^2N| = " + num(worst_exact) + ", max |survival - (1 - N theta^2)| / bound = " +
             num(worst_approx_ratio);
  return v;
}

Verdict sign_shift() {
  const std::vector<SubsystemSpec> layout{SubsystemSpec::Photon("ph"), SubsystemSpec::Particle("b")};
  const std::vector<Blocker> blocker{{"b", particle_level::kBlocked}};
  double worst = 0.0;
  for (int n = 1; n <= 50; ++n) {
    StateVector s = new_state(layout, {photon_level::kOneH, particle_level::kOpen});
    qi_run(s, "ph", blocker, cycles(n));
    worst = std::max(worst, std::abs(s.at(std::vector<int>{photon_level::kOneH, particle_level::kOpen}) + 1.0));
  }
  return {worst <= 1e-15, "max |amplitude + 1| over N = 1..50: " + num(worst)};
}

Verdict cz_contract() {
  const QiParams p = cycles(10000);
  const double dev = qicz_column_deviation(p);
  const double fid = qicz_fidelity(p);
  return {dev <= 1e-3 && fid >= 0.999, "column deviation " + num(dev) + " (pi^2/2N = " +
                                           num(kPi * kPi / 2e4) + "), post-selected infidelity " + num(1.0 - fid)};
}

Verdict bell_branches() {
  const CircuitProgram bell = bell_generator();
  const auto branches = run_branches(bell, RunOptions{QiParams{}, QiczMode::kIdealLimit});
  double worst_fid = 1.0;
  double worst_weight = 0.0;
  for (const auto &b : branches) {
    const Vector want = b.reg.get("m") == 0 ? bell_phi_plus() : bell_psi_plus();
    worst_fid = std::min(worst_fid, output_fidelity(bell, b, want));
    worst_weight = std::max(worst_weight, std::abs(b.success_probability - 0.5));
  }
  const bool ok = branches.size() == 2 && worst_fid >= 1.0 - 1e-9 && worst_weight <= 1e-12;
  return {ok, std::to_string(branches.size()) + " branches, max infidelity " + num(1.0 - worst_fid) + ", max |weight - 0.5| " +
                  num(worst_weight)};
}

Verdict memory_algebra() {
  const RunOptions ideal{QiParams{}, QiczMode::kIdealLimit};
  const CircuitProgram plain = memory_program(false);
  const CircuitProgram inverting = memory_program(true);
  Matrix x(2, 2);
  x << 0, 1, 1, 0;
  std::mt19937_64 rng(2024);
  double worst_plain = 1.0;
  double worst_inv = 1.0;
  bool four = true;
  for (int i = 0; i < 100; ++i) {
    const Vector psi = haar_qubit(rng);
    const auto a = run_branches(plain, simulator_input(plain, psi), ideal);
    const auto b = run_branches(inverting, simulator_input(inverting, psi), ideal);
    four = four && a.size() == 4 && b.size() == 4;
    for (const auto &r : a) worst_plain = std::min(worst_plain, output_fidelity(plain, r, psi));
    for (const auto &r : b) worst_inv = std::min(worst_inv, output_fidelity(inverting, r, x * psi));
  }
  return {four && worst_plain >= 1.0 - 1e-9 && worst_inv >= 1.0 - 1e-9,
          "max infidelity to psi " + num(1.0 - worst_plain) + ", inverting to X psi " + num(1.0 - worst_inv)};
}

Verdict cnot_families() {
  RunOptions sim{cycles(10000), QiczMode::kIdealLimit};
  std::vector<Vector> inputs;
  for (int i = 0; i < 4; ++i) inputs.push_back(Vector::Unit(4, i));
  std::mt19937_64 rng(77);
  for (int i = 0; i < 20; ++i) {
    const Vector a = haar_qubit(rng);
    const Vector b = haar_qubit(rng);
    Vector ab(4);
    ab << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
    inputs.push_back(ab);
  }
  Verdict v;
  std::ostringstream out;
  double worst_dev = 0.0;
  double worst_infid = 0.0;
  for (CnotFamily f : all_families()) {
    const CircuitProgram p = cnot_circuit(f);
    for (const Vector &in : inputs) {
      const CnotReport r = verify_cnot(p, in, sim);
      worst_dev = std::max(worst_dev, r.max_deviation);
      worst_infid = std::max(worst_infid, r.max_infidelity);
      if (!r.structure_ok) v.pass = false;
    }
    const GateCensus got = gate_census(p);
    const GateCensus want = table1_census(f);
    if (!(got == want)) {
      v.pass = false;
      out << "; census " << family_name(f) << " " << got.str() << " != published " << want.str();
    }
  }
  if (worst_dev > 1e-9 || worst_infid > 1e-9) v.pass = false;
  v.detail = "max deviation " + num(worst_dev) + ", max infidelity " + num(worst_infid) + out.str();
  return v;
}

Verdict table1_reproduction() {
  Verdict v;
  std::ostringstream out;
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.5, 1.0);
  const std::int64_t trials = 100000;
  int index = 0;
  for (CnotFamily f : all_families()) {
    const CircuitProgram p = cnot_circuit(f);
    int misses = 0;
    double worst_sigma = 0.0;
    for (int k = 0; k < 20; ++k, ++index) {
      const ImperfectionProfile pr{u(rng), u(rng), u(rng), u(rng), u(rng)};
      const double want = table1_formula(f, pr);
      const MonteCarloResult mc = monte_carlo_yield(p, pr, trials, 1000003ULL * (index + 1));
      const double sigma = std::sqrt(want * (1.0 - want) / double(trials));
      const double dist = sigma > 0 ? std::abs(mc.estimate - want) / sigma : (mc.estimate == want ? 0.0 : 1e9);
      worst_sigma = std::max(worst_sigma, dist);
      if (dist > 4.0) ++misses;
    }
    if (misses) {
      v.pass = false;
      out << family_name(f) << " " << misses << "/20 outside 4 sigma (worst " << num(worst_sigma) << " sigma); ";
    } else {
      out << family_name(f) << " ok (worst " << num(worst_sigma) << " sigma); ";
    }
  }
  int disagree = 0;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const ImperfectionProfile pr{unit(rng), unit(rng), unit(rng), unit(rng), unit(rng)};
    if (direct_beats_half(pr) != (pr.s > pr.eta * pr.q * pr.r * pr.r)) ++disagree;
  }
  if (disagree) v.pass = false;
  out << "classifier disagreements " << disagree << "/1000";
  v.detail = out.str();
  return v;
}

Verdict w_states() {
  const RunOptions sim{cycles(10000), QiczMode::kFinite};
  Verdict v;
  std::ostringstream out;
  for (int m = 2; m <= 4; ++m) {
    const CircuitProgram w = w_state_generator(m);
    const auto branches = run_branches(w, sim);
    double worst = 1.0;
    for (const auto &b : branches) worst = std::min(worst, output_fidelity(w, b, w_reference(m)));
    if (branches.size() != static_cast<size_t>(m) || worst < 0.999) v.pass = false;
    out << (m > 2 ? "; " : "") << "M=" << m << " max infidelity " << num(1.0 - worst);
    if (m == 2) {
      double psi = 1.0;
      for (const auto &b : branches) psi = std::min(psi, output_fidelity(w, b, bell_psi_plus()));
      if (psi < 0.999) v.pass = false;
      out << ", vs Psi+ " << num(1.0 - psi);
    }
  }
  v.detail = out.str();
  return v;
}

Verdict partial_absorber() {
  const double reference = discrimination_success(10, ThetaRule::kPiOver2N, 1.0);
  Verdict v;
  std::ostringstream out;
  out << "eps=1,N=10 reference " << num(reference);
  for (double eps : {0.25, 0.5, 0.75}) {
    double last = 0.0;
    bool monotone = true;
    int beats = -1;
    for (int n = 10; n <= 500; ++n) {
      const double d = discrimination_success(n, ThetaRule::kPiOver2N, eps);
      if (d < last) monotone = false;
      if (beats < 0 && d > reference) beats = n;
      last = d;
    }
    if (!monotone || beats < 0) v.pass = false;
    out << "; eps=" << eps << (monotone ? " monotone" : " NOT monotone") << ", exceeds from N=" << beats;
  }
  v.detail = out.str();
  return v;
}

Verdict oracle_equivalence() {
  double worst = 0.0;
  bool structure = true;
  const RunOptions finite{cycles(10000), QiczMode::kFinite};
  const RunOptions ideal{QiParams{}, QiczMode::kIdealLimit};
  const auto names = demo_names();
  for (const auto &name : names) {
    const CircuitProgram p = demo_program(name);
    for (const RunOptions &o : {ideal, finite}) {
      const CompareReport r = compare(p, o);
      structure = structure && r.structure_ok;
      worst = std::max(worst, r.max_deviation);
    }
  }
  return {structure && worst <= 1e-10,
          std::to_string(names.size()) + " demos, ideal and N=10^4, max deviation " + num(worst)};
}

struct Criterion {
  int id;
  const char *name;
  double budget_s;
  std::function<Verdict()> check;
};

}  // namespace
}  // namespace zeno

int main() {
  using namespace zeno;
  const std::vector<Criterion> criteria{
      {1, "Zeno survival exactness", 1, zeno_survival},
      {2, "sign-shift exactness", 1, sign_shift},
      {3, "CZ contract", 5, cz_contract},
      {4, "Bell branches", 1, bell_branches},
      {5, "memory algebra", 5, memory_algebra},
      {6, "CNOT families", 30, cnot_families},
      {7, "yield table reproduction", 60, table1_reproduction},
      {8, "W state", 10, w_states},
      {9, "partial absorber", 30, partial_absorber},
      {10, "oracle equivalence", 30, oracle_equivalence},
  };
  int failed = 0;
  for (const auto &c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception &e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.budget_s;
    const bool pass = v.pass && in_time;
    failed += pass ? 0 : 1;
    std::printf("%s %2d %s: %s [%.2f s of %.0f s%s]\n", pass ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str(), secs,
                c.budget_s, in_time ? "" : ", over budget");
    std::fflush(stdout);
  }
  return failed;
}
