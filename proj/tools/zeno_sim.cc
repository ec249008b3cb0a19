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

// zeno_sim: command-line front end.
//
// Exit codes: 0 success, 1 usage or parse error, 2 heralded failure,
// 3 verification failure.

#include <cmath>
#include <complex>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zeno/analysis.h"
#include "zeno/circuits.h"
#include "zeno/executor.h"
#include "zeno/oracle.h"
#include "zeno/program_io.h"

namespace {

using namespace zeno;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitHeraldedFailure = 2;
constexpr int kExitVerifyFailed = 3;

struct QiFlags {
  int cycles = 10000;
  std::string theta = "pi-over-n";
  double absorb = 1.0;
  double loss = 0.0;
  bool ideal = false;

  void add(CLI::App *cmd) {
    cmd->add_option("--cycles", cycles, "interrogation cycles N")->check(CLI::PositiveNumber);
    cmd->add_option("--theta", theta, "rotation rule")->check(CLI::IsMember({"pi-over-n", "pi-over-2n"}));
    cmd->add_option("--absorb", absorb, "absorption probability per encounter")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--loss", loss, "loss per cycle")->check(CLI::Range(0.0, 1.0));
    cmd->add_flag("--ideal", ideal, "replace interrogations by their N -> infinity limit");
  }

  RunOptions options() const {
    RunOptions o;
    o.qi.cycles = cycles;
    o.qi.theta_rule = theta == "pi-over-2n" ? ThetaRule::kPiOver2N : ThetaRule::kPiOverN;
    o.qi.absorb_prob = absorb;
    o.qi.cycle_loss = loss;
    o.qi.validate();
    o.mode = ideal ? QiczMode::kIdealLimit : QiczMode::kFinite;
    return o;
  }
};

ImperfectionProfile parse_profile(const std::string &text) {
  std::vector<double> v;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception &) {
      throw std::invalid_argument("profile entry '" + item + "' is not a number");
    }
  }
  if (v.size() != 5) throw std::invalid_argument("profile needs five entries p,q,r,s,eta");
  ImperfectionProfile p{v[0], v[1], v[2], v[3], v[4]};
  p.validate();
  return p;
}

std::string profile_csv(const ImperfectionProfile &p) {
  return format_number(p.p) + "," + format_number(p.q) + "," + format_number(p.r) + "," + format_number(p.s) + "," +
         format_number(p.eta);
}

CircuitProgram load(const std::string &file, const std::string &demo) {
  if (!demo.empty() && !file.empty()) throw std::invalid_argument("give either a file or --demo, not both");
  if (!demo.empty()) return demo_program(demo);
  if (file.empty()) throw std::invalid_argument("no circuit given (file or --demo)");
  return load_program(file);
}

// Control and target basis inputs, |+>|0>, then random product states.
std::vector<Vector> cnot_inputs(int random_count, std::uint64_t seed) {
  std::vector<Vector> inputs;
  for (int k = 0; k < 4; ++k) {
    Vector v = Vector::Zero(4);
    v(k) = 1.0;
    inputs.push_back(v);
  }
  Vector plus_zero = Vector::Zero(4);
  plus_zero(0) = plus_zero(2) = std::sqrt(0.5);
  inputs.push_back(plus_zero);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  for (int k = 0; k < random_count; ++k) {
    Vector a(2), b(2);
    for (int i = 0; i < 2; ++i) {
      a(i) = std::complex<double>(g(rng), g(rng));
      b(i) = std::complex<double>(g(rng), g(rng));
    }
    a.normalize();
    b.normalize();
    Vector ab(4);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) ab(2 * i + j) = a(i) * b(j);
    }
    inputs.push_back(ab);
  }
  return inputs;
}

int cmd_simulate(const std::string &file, const std::string &demo, const QiFlags &qi, std::uint64_t seed,
                 const std::string &branches, const std::string &out) {
  const CircuitProgram program = load(file, demo);
  const RunOptions options = qi.options();
  if (branches == "all") {
    const auto all = run_branches(program, options);
    std::cout << (out == "csv" ? result_csv(all) : branches_json(program.name, all));
    return kExitOk;
  }
  std::mt19937_64 rng(seed);
  const RunResult r = run_sampled(program, options, rng);
  std::cout << (out == "csv" ? result_csv({r}) : result_json(program.name, r));
  return r.failed ? kExitHeraldedFailure : kExitOk;
}

int cmd_cnot(const std::string &family_text, bool verify, const QiFlags &qi, std::uint64_t seed, bool unmerged) {
  const CnotFamily family = parse_family(family_text);
  const CircuitProgram program = cnot_circuit(family, !unmerged);
  if (!verify) {
    std::cout << serialize_program(program);
    return kExitOk;
  }
  const RunOptions options = qi.options();
  double deviation = 0.0, infidelity = 0.0, min_success = 1.0;
  bool structure = true;
  for (const Vector &in : cnot_inputs(20, seed)) {
    const CnotReport r = verify_cnot(program, in, options);
    deviation = std::max(deviation, r.max_deviation);
    infidelity = std::max(infidelity, r.max_infidelity);
    min_success = std::min(min_success, r.min_success);
    structure = structure && r.structure_ok;
  }
  // At finite N the logical map is not exactly CNOT; the oracle runs the
  // same finite interrogation, so the deviation bound is the same.
  const double infidelity_bound = options.mode == QiczMode::kIdealLimit ? 1e-9 : 1e-3;
  const bool pass = structure && deviation <= 1e-10 && infidelity <= infidelity_bound;
  std::cout << "family=" << family_name(family) << " mode=" << (qi.ideal ? "ideal" : "finite")
            << " cycles=" << qi.cycles << " max_deviation=" << format_number(deviation)
            << " max_infidelity=" << format_number(infidelity) << " min_success=" << format_number(min_success)
            << "\n";
  std::cout << (pass ? "PASS max_deviation<=1e-10" : "FAIL") << "\n";
  return pass ? kExitOk : kExitVerifyFailed;
}

int cmd_census(const std::string &family_text) {
  const CnotFamily family = parse_family(family_text);
  std::cout << gate_census(cnot_circuit(family)).str() << "\n";
  return kExitOk;
}

std::vector<int> parse_int_list(const std::string &text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const int n = std::stoi(item);
    if (n < 1) throw std::invalid_argument("cycle counts must be >= 1");
    out.push_back(n);
  }
  return out;
}

std::vector<double> parse_double_list(const std::string &text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(std::stod(item));
  return out;
}

int cmd_sweep(const std::string &what, const std::string &cycles, const QiFlags &qi, const std::string &family_text,
              const std::string &param, const std::string &values, const std::string &profile_text,
              std::int64_t trials, std::uint64_t seed) {
  if (what == "zeno" || what == "fidelity") {
    const ThetaRule rule = qi.theta == "pi-over-2n" ? ThetaRule::kPiOver2N : ThetaRule::kPiOverN;
    const auto rows = zeno_sweep(parse_int_list(cycles), rule, qi.absorb, qi.loss);
    std::cout << "cycles,theta,absorb,loss," << (what == "zeno" ? "survival" : "cz_fidelity") << "\n";
    for (const auto &r : rows) {
      std::cout << r.cycles << "," << format_number(r.theta) << "," << format_number(r.absorb) << ","
                << format_number(r.loss) << ","
                << format_number(what == "zeno" ? r.success_probability : r.fidelity) << "\n";
    }
    return kExitOk;
  }
  // yield: one Monte Carlo estimate per value of the swept profile entry.
  const CnotFamily family = parse_family(family_text);
  const CircuitProgram program = cnot_circuit(family);
  const ImperfectionProfile base = parse_profile(profile_text);
  std::cout << "family,p,q,r,s,eta,trials,seed,estimate,stderr,formula\n";
  for (double v : parse_double_list(values)) {
    ImperfectionProfile p = base;
    if (param == "p") p.p = v;
    if (param == "q") p.q = v;
    if (param == "r") p.r = v;
    if (param == "s") p.s = v;
    if (param == "eta") p.eta = v;
    p.validate();
    const MonteCarloResult mc = monte_carlo_yield(program, p, trials, seed);
    std::cout << family_name(family) << "," << profile_csv(p) << "," << trials << "," << seed << ","
              << format_number(mc.estimate) << "," << format_number(mc.stderr_) << ","
              << format_number(table1_formula(family, p)) << "\n";
  }
  return kExitOk;
}

int cmd_montecarlo(const std::string &family_text, const std::string &profile_text, std::int64_t trials,
                   std::uint64_t seed, bool full) {
  const CnotFamily family = parse_family(family_text);
  const ImperfectionProfile profile = parse_profile(profile_text);
  const CircuitProgram program = cnot_circuit(family);
  MonteCarloOptions options;
  options.full_simulation = full;
  const MonteCarloResult mc = monte_carlo_yield(program, profile, trials, seed, options);
  std::cout << "family,p,q,r,s,eta,trials,seed,estimate,stderr,table1_formula,census_formula\n";
  std::cout << family_name(family) << "," << profile_csv(profile) << "," << trials << "," << seed << ","
            << format_number(mc.estimate) << "," << format_number(mc.stderr_) << ","
            << format_number(table1_formula(family, profile)) << ","
            << format_number(census_formula(gate_census(program), profile)) << "\n";
  return kExitOk;
}

int cmd_oracle_check(const std::string &file, const std::string &demo, const QiFlags &qi) {
  const CircuitProgram program = load(file, demo);
  const CompareReport r = compare(program, qi.options());
  const bool pass = r.structure_ok && r.max_deviation <= kOracleTolerance;
  std::cout << "program=" << program.name << " branches=" << r.branches
            << " max_deviation=" << format_number(r.max_deviation) << "\n";
  if (!r.structure_ok) std::cout << "structure: " << r.message << "\n";
  std::cout << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Quantum-interrogation gate simulator"};
  app.require_subcommand(1);

  std::string file, demo, branches = "sample", out = "json";
  std::uint64_t seed = 1;
  QiFlags qi;
  auto *simulate = app.add_subcommand("simulate", "run a circuit file or a built-in demo");
  simulate->add_option("file", file, "circuit JSON");
  simulate->add_option("--demo", demo, "built-in program")->check(CLI::IsMember(demo_names()));
  qi.add(simulate);
  simulate->add_option("--seed", seed, "measurement seed");
  simulate->add_option("--branches", branches, "sample one trajectory or enumerate all")
      ->check(CLI::IsMember({"sample", "all"}));
  simulate->add_option("--out", out, "output format")->check(CLI::IsMember({"json", "csv"}));

  std::string family;
  bool verify = false, unmerged = false;
  auto *cnot = app.add_subcommand("cnot", "print or verify a CNOT circuit");
  cnot->add_option("--family", family, "memory, half-memory, half-memory-keep-target, direct-cx, direct-cz")
      ->required();
  cnot->add_flag("--verify", verify, "check against the oracle and the CNOT truth table");
  cnot->add_flag("--unmerged", unmerged, "memory family: keep two control-line cZ gates");
  cnot->add_option("--seed", seed, "seed of the random product inputs");
  qi.add(cnot);

  auto *census = app.add_subcommand("census", "component counts of a CNOT family");
  census->add_option("--family", family, "CNOT family")->required();

  std::string what, cycles = "2,10,100,1000", param = "eta", values = "0.5,0.6,0.7,0.8,0.9,1",
                    profile = "1,1,1,1,1";
  std::int64_t trials = 100000;
  auto *sweep = app.add_subcommand("sweep", "CSV sweeps");
  sweep->add_option("--what", what, "zeno, fidelity or yield")->required()->check(
      CLI::IsMember({"zeno", "fidelity", "yield"}));
  sweep->add_option("--cycles-list", cycles, "comma-separated N values (zeno, fidelity)");
  sweep->add_option("--theta", qi.theta, "rotation rule")->check(CLI::IsMember({"pi-over-n", "pi-over-2n"}));
  sweep->add_option("--absorb", qi.absorb, "absorption probability")->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--loss", qi.loss, "loss per cycle")->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--family", family, "CNOT family (yield)");
  sweep->add_option("--param", param, "profile entry swept (yield)")->check(CLI::IsMember({"p", "q", "r", "s", "eta"}));
  sweep->add_option("--values", values, "comma-separated values (yield)");
  sweep->add_option("--profile", profile, "base profile p,q,r,s,eta (yield)");
  sweep->add_option("--trials", trials, "trials per point (yield)")->check(CLI::PositiveNumber);
  sweep->add_option("--seed", seed, "master seed (yield)");

  bool full = false;
  auto *montecarlo = app.add_subcommand("montecarlo", "heralded yield of a CNOT family");
  montecarlo->add_option("--family", family, "CNOT family")->required();
  montecarlo->add_option("--profile", profile, "p,q,r,s,eta")->required();
  montecarlo->add_option("--trials", trials, "trials")->check(CLI::PositiveNumber);
  montecarlo->add_option("--seed", seed, "master seed");
  montecarlo->add_flag("--full", full, "simulate every trial");

  auto *oracle = app.add_subcommand("oracle-check", "compare the simulator with the reference model");
  oracle->add_option("file", file, "circuit JSON");
  oracle->add_option("--demo", demo, "built-in program")->check(CLI::IsMember(demo_names()));
  qi.add(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*simulate) return cmd_simulate(file, demo, qi, seed, branches, out);
    if (*cnot) return cmd_cnot(family, verify, qi, seed, unmerged);
    if (*census) return cmd_census(family);
    if (*sweep) {
      if (what == "yield" && family.empty()) throw std::invalid_argument("sweep --what yield needs --family");
      return cmd_sweep(what, cycles, qi, family, param, values, profile, trials, seed);
    }
    if (*montecarlo) return cmd_montecarlo(family, profile, trials, seed, full);
    if (*oracle) return cmd_oracle_check(file, demo, qi);
  } catch (const ImpossibleMeasurement &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitHeraldedFailure;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
