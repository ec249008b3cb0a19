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

#include "zeno/program_io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace zeno {

namespace {

using Json = nlohmann::ordered_json;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const std::map<std::string, Basis> &basis_names() {
  static const std::map<std::string, Basis> names{{"computational", Basis::kPhotonComputational},
                                                  {"pm", Basis::kParticlePm},
                                                  {"particle-computational", Basis::kParticleComputational},
                                                  {"qudit", Basis::kQuditPosition}};
  return names;
}

std::string basis_name(Basis basis) {
  for (const auto &[name, b] : basis_names()) {
    if (b == basis) return name;
  }
  return "?";
}

// Rounded to 12 significant digits so that dumps print at most 12.
double round12(double v) {
  if (!std::isfinite(v) || v == 0.0) return v == 0.0 ? 0.0 : v;
  return std::stod(format_number(v));
}

std::pair<size_t, size_t> line_column(std::string_view text, size_t byte) {
  size_t line = 1, column = 1;
  for (size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

class InstructionReader {
 public:
  InstructionReader(const Json &j, size_t index) : j_(j), where_("instruction " + std::to_string(index)) {}

  [[noreturn]] void fail(const std::string &msg) const { throw ProgramParseError(where_ + ": " + msg); }

  std::string str(const char *key) const {
    auto it = j_.find(key);
    if (it == j_.end() || !it->is_string()) fail(std::string("missing string field '") + key + "'");
    return it->get<std::string>();
  }
  int integer(const char *key) const {
    auto it = j_.find(key);
    if (it == j_.end() || !it->is_number_integer()) fail(std::string("missing integer field '") + key + "'");
    return it->get<int>();
  }
  std::vector<std::string> strings(const char *key) const {
    auto it = j_.find(key);
    if (it == j_.end() || !it->is_array()) fail(std::string("missing array field '") + key + "'");
    std::vector<std::string> out;
    for (const auto &e : *it) {
      if (!e.is_string()) fail(std::string("'") + key + "' must hold strings");
      out.push_back(e.get<std::string>());
    }
    return out;
  }

  Instruction read() const {
    const std::string op = str("op");
    if (op == "photon_h") return PhotonGate{LocalGate::kH, str("photon")};
    if (op == "photon_x") return PhotonGate{LocalGate::kX, str("photon")};
    if (op == "photon_z") return PhotonGate{LocalGate::kZ, str("photon")};
    if (op == "particle_h") return ParticleGate{LocalGate::kH, str("particle")};
    if (op == "particle_x") return ParticleGate{LocalGate::kX, str("particle")};
    if (op == "particle_z") return ParticleGate{LocalGate::kZ, str("particle")};
    if (op == "particle_fourier") return ParticleGate{LocalGate::kFourier, str("particle")};
    if (op == "prepare_pm") {
      const std::string sign = str("sign");
      if (sign != "+" && sign != "-") fail("sign must be \"+\" or \"-\"");
      return PreparePm{str("particle"), sign == "+" ? Sign::kPlus : Sign::kMinus};
    }
    if (op == "prepare_uniform") return PrepareUniform{str("particle")};
    if (op == "qicz") return Interrogate{str("photon"), {Blocker{str("particle"), particle_level::kBlocked}}};
    if (op == "qicz_multi") {
      Interrogate q{str("photon"), {}};
      for (const auto &p : strings("particles")) q.blockers.push_back(Blocker{p, particle_level::kBlocked});
      if (q.blockers.empty()) fail("qicz_multi needs at least one particle");
      return q;
    }
    if (op == "interrogate") {
      Interrogate q{str("photon"), {}};
      auto it = j_.find("blockers");
      if (it == j_.end() || !it->is_array()) fail("missing array field 'blockers'");
      for (const auto &b : *it) {
        InstructionReader r(b, 0);
        q.blockers.push_back(Blocker{r.str("particle"), r.integer("position")});
      }
      return q;
    }
    if (op == "measure") {
      const std::string basis = str("basis");
      auto b = basis_names().find(basis);
      if (b == basis_names().end()) fail("unknown basis '" + basis + "'");
      return Measure{str("target"), b->second, str("bit")};
    }
    if (op == "cx") return ClassicallyControlled{str("bit"), ControlledGate::kX, str("target")};
    if (op == "cz") return ClassicallyControlled{str("bit"), ControlledGate::kZ, str("target")};
    if (op == "classical_xor") return ClassicalXor{str("lhs"), str("rhs"), str("out")};
    if (op == "phase_correction") {
      return PhaseCorrection{str("photon"), str("outcome"), integer("multiplier"), integer("modulus")};
    }
    fail("unknown op '" + op + "'");
  }

 private:
  const Json &j_;
  std::string where_;
};

Json write_instruction(const Instruction &instr) {
  Json j;
  j["op"] = op_name(instr);
  std::visit(Overloaded{
                 [&](const PhotonGate &g) { j["photon"] = g.photon; },
                 [&](const ParticleGate &g) { j["particle"] = g.particle; },
                 [&](const PreparePm &p) {
                   j["particle"] = p.particle;
                   j["sign"] = p.sign == Sign::kPlus ? "+" : "-";
                 },
                 [&](const PrepareUniform &p) { j["particle"] = p.particle; },
                 [&](const Interrogate &q) {
                   j["photon"] = q.photon;
                   const std::string op = j["op"];
                   if (op == "qicz") {
                     j["particle"] = q.blockers[0].particle;
                   } else if (op == "qicz_multi") {
                     Json ps = Json::array();
                     for (const auto &b : q.blockers) ps.push_back(b.particle);
                     j["particles"] = ps;
                   } else {
                     Json bs = Json::array();
                     for (const auto &b : q.blockers) bs.push_back(Json{{"particle", b.particle}, {"position", b.position}});
                     j["blockers"] = bs;
                   }
                 },
                 [&](const Measure &m) {
                   j["target"] = m.target;
                   j["basis"] = basis_name(m.basis);
                   j["bit"] = m.bit;
                 },
                 [&](const ClassicallyControlled &c) {
                   j["bit"] = c.bit;
                   j["target"] = c.target;
                 },
                 [&](const ClassicalXor &x) {
                   j["lhs"] = x.lhs;
                   j["rhs"] = x.rhs;
                   j["out"] = x.out;
                 },
                 [&](const PhaseCorrection &p) {
                   j["photon"] = p.photon;
                   j["outcome"] = p.outcome;
                   j["multiplier"] = p.multiplier;
                   j["modulus"] = p.modulus;
                 },
             },
             instr);
  return j;
}

std::string register_string(const ClassicalRegister &reg) {
  std::string s;
  for (const auto &[k, v] : reg.values()) s += (s.empty() ? "" : ";") + k + "=" + std::to_string(v);
  return s;
}

std::string basis_state(const StateVector &state, size_t index) {
  std::string s;
  for (size_t k = 0; k < state.layout().size(); ++k) {
    if (k) s += " ";
    s += level_label(state.layout()[k], state.level_of(index, k));
  }
  return s;
}

Json result_object(const RunResult &r) {
  Json j;
  j["success_probability"] = round12(r.success_probability);
  j["failed"] = r.failed;
  Json reg = Json::object();
  for (const auto &[k, v] : r.reg.values()) reg[k] = v;
  j["register"] = reg;
  Json layout = Json::array();
  for (const auto &spec : r.final_state.layout()) layout.push_back(spec.name);
  j["layout"] = layout;
  Json amps = Json::array();
  const auto a = r.final_state.amplitudes();
  for (size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i]) < 1e-12) continue;
    amps.push_back(Json{{"basis", basis_state(r.final_state, i)}, {"re", round12(a[i].real())},
                        {"im", round12(a[i].imag())}});
  }
  j["amplitudes"] = amps;
  return j;
}

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string level_label(const SubsystemSpec &spec, int level) {
  if (spec.is_photon()) {
    static const char *names[] = {"0", "1H", "1V", "S"};
    return names[level];
  }
  return level == spec.sink_level() ? "X" : std::to_string(level);
}

namespace {
CircuitProgram from_json(const Json &j);
}  // namespace

CircuitProgram parse_program(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error &e) {
    const auto [line, column] = line_column(text, e.byte);
    throw ProgramParseError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                            ": malformed JSON");
  }
  try {
    return from_json(j);
  } catch (const ProgramParseError &) {
    throw;
  } catch (const nlohmann::json::exception &e) {
    throw ProgramParseError(std::string("field of the wrong type: ") + e.what());
  } catch (const std::invalid_argument &e) {
    throw ProgramParseError(e.what());
  }
}

namespace {

CircuitProgram from_json(const Json &j) {
  if (!j.is_object()) throw ProgramParseError("top level must be an object");
  if (!j.contains("version") || j["version"] != "1") throw ProgramParseError("unsupported or missing version (want \"1\")");

  CircuitProgram p;
  p.name = j.value("name", "");
  auto names = [&](const char *key) {
    std::vector<std::string> out;
    if (!j.contains(key)) return out;
    if (!j[key].is_array()) throw ProgramParseError(std::string("'") + key + "' must be an array");
    for (const auto &e : j[key]) {
      if (!e.is_string()) throw ProgramParseError(std::string("'") + key + "' must hold strings");
      out.push_back(e.get<std::string>());
    }
    return out;
  };

  if (!j.contains("subsystems") || !j["subsystems"].is_array()) throw ProgramParseError("missing 'subsystems' array");
  size_t k = 0;
  for (const auto &s : j["subsystems"]) {
    const std::string where = "subsystem " + std::to_string(k++) + ": ";
    if (!s.is_object() || !s.contains("name") || !s["name"].is_string() || !s.contains("kind")) {
      throw ProgramParseError(where + "needs 'name' and 'kind'");
    }
    const std::string name = s["name"];
    const std::string kind = s["kind"].is_string() ? s["kind"].get<std::string>() : "";
    Declaration d;
    if (kind == "photon") {
      d.spec = SubsystemSpec::Photon(name);
    } else if (kind == "particle") {
      int positions = 2;
      if (s.contains("positions")) {
        positions = s["positions"].get<int>();
      } else if (s.contains("dim")) {
        positions = s["dim"].get<int>() - 1;
      }
      if (positions < 2) throw ProgramParseError(where + "a particle needs at least two positions");
      d.spec = SubsystemSpec::Particle(name, positions);
    } else {
      throw ProgramParseError(where + "kind must be \"photon\" or \"particle\"");
    }
    d.initial_level = s.value("init", 0);
    p.subsystems.push_back(d);
  }
  p.bits = names("bits");
  p.inputs = names("inputs");
  p.outputs = names("outputs");

  if (j.contains("instructions")) {
    if (!j["instructions"].is_array()) throw ProgramParseError("'instructions' must be an array");
    size_t i = 0;
    for (const auto &e : j["instructions"]) {
      if (!e.is_object()) throw ProgramParseError("instruction " + std::to_string(i) + ": must be an object");
      p.instructions.push_back(InstructionReader(e, i).read());
      ++i;
    }
  }
  try {
    p.validate();
  } catch (const std::exception &e) {
    throw ProgramParseError(e.what());
  }
  return p;
}

}  // namespace

CircuitProgram load_program(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ProgramParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_program(buf.str());
}

std::string serialize_program(const CircuitProgram &p) {
  Json j;
  j["version"] = "1";
  j["name"] = p.name;
  Json subs = Json::array();
  for (const auto &d : p.subsystems) {
    Json s;
    s["name"] = d.spec.name;
    s["kind"] = d.spec.is_photon() ? "photon" : "particle";
    if (d.spec.is_particle()) s["positions"] = d.spec.positions;
    s["init"] = d.initial_level;
    subs.push_back(s);
  }
  j["subsystems"] = subs;
  j["bits"] = p.bits;
  j["inputs"] = p.inputs;
  j["outputs"] = p.outputs;
  Json instrs = Json::array();
  for (const auto &instr : p.instructions) instrs.push_back(write_instruction(instr));
  j["instructions"] = instrs;
  return j.dump(2) + "\n";
}

std::string result_json(const std::string &program_name, const RunResult &result) {
  Json j;
  j["program"] = program_name;
  const Json r = result_object(result);
  for (auto it = r.begin(); it != r.end(); ++it) j[it.key()] = it.value();
  return j.dump(2) + "\n";
}

std::string branches_json(const std::string &program_name, const std::vector<RunResult> &branches) {
  Json j;
  j["program"] = program_name;
  j["total_success"] = round12(total_success(branches));
  Json bs = Json::array();
  for (const auto &b : branches) bs.push_back(result_object(b));
  j["branches"] = bs;
  return j.dump(2) + "\n";
}

std::string result_csv(const std::vector<RunResult> &branches) {
  std::string out = "branch,success_probability,failed,register,basis_state,re,im\n";
  for (size_t b = 0; b < branches.size(); ++b) {
    const RunResult &r = branches[b];
    const auto a = r.final_state.amplitudes();
    for (size_t i = 0; i < a.size(); ++i) {
      if (std::abs(a[i]) < 1e-12) continue;
      out += std::to_string(b) + "," + format_number(r.success_probability) + "," + (r.failed ? "1" : "0") + "," +
             register_string(r.reg) + "," + basis_state(r.final_state, i) + "," + format_number(a[i].real()) + "," +
             format_number(a[i].imag()) + "\n";
    }
    if (r.failed) {
      out += std::to_string(b) + "," + format_number(r.success_probability) + ",1," + register_string(r.reg) + ",,,\n";
    }
  }
  return out;
}

}  // namespace zeno
