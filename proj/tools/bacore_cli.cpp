// Copyright 2026 The bacore authors
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

// Command-line front end. Exit codes:
//   0 decided (either verdict), 2 input error, 3 resource cap exceeded,
//   4 internal error (an emitted certificate failed re-verification).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "bacore/core_solver.hpp"
#include "bacore/infinite_harness.hpp"
#include "bacore/json_io.hpp"
#include "bacore/witness_builder.hpp"

namespace {

using namespace bacore;

constexpr int kExitDecided = 0;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitInternal = 4;

struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::size_t hull_cap(std::size_t flag_cap) {
  if (flag_cap != 0) return flag_cap;
  if (const char* env = std::getenv("BACORE_HULL_CAP")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultHullCap;
}

// ---- per-command handlers; each returns the process exit code ----

int run_core(const ParsedGame& pg) {
  CoreDecision d;
  if (const Game* g = std::get_if<Game>(&pg)) {
    d = solve_core(*g);
    if (d.witness && !verify_core_witness(*g, *d.witness))
      throw InternalError("witness failed re-verification");
    if (d.violation && !verify_violation(*g, *d.violation))
      throw InternalError("certificate failed re-verification");
  } else if (const RestrictedGame* rg = std::get_if<RestrictedGame>(&pg)) {
    d = solve_core(*rg);
    if (d.witness && !verify_core_witness(*rg, *d.witness))
      throw InternalError("witness failed re-verification");
    if (d.violation && !verify_violation(*rg, *d.violation))
      throw InternalError("certificate failed re-verification");
  } else {
    throw std::invalid_argument("core needs an explicit or restricted game file");
  }
  emit(to_json(d));
  return kExitDecided;
}

int run_certify(const ParsedGame& pg) {
  // Solve, then report the certificate with the result of the independent
  // verification pass made explicit.
  const Game* g = std::get_if<Game>(&pg);
  const RestrictedGame* rg = std::get_if<RestrictedGame>(&pg);
  if (!g && !rg)
    throw std::invalid_argument("certify needs an explicit or restricted game file");
  CoreDecision d = g ? solve_core(*g) : solve_core(*rg);
  bool ok = false;
  if (d.witness)
    ok = g ? verify_core_witness(*g, *d.witness) : verify_core_witness(*rg, *d.witness);
  if (d.violation)
    ok = g ? verify_violation(*g, *d.violation) : verify_violation(*rg, *d.violation);
  if (!ok) throw InternalError("certificate failed re-verification");
  Json j = to_json(d);
  j["verified"] = true;
  emit(j);
  return kExitDecided;
}

int run_supcheck(const ParsedGame& pg, const std::string& set_text) {
  const Game* g = std::get_if<Game>(&pg);
  if (!g) throw std::invalid_argument("supcheck needs an explicit game file");
  Coalition covered = set_text.empty()
                          ? Coalition::grand(g->universe)
                          : parse_family(g->universe, set_text).sets.at(0);
  auto render = [](const SupResult& r) -> Json {
    switch (r.kind) {
      case SupResult::Kind::Value:
        return Json{{"kind", "value"}, {"value", to_json(r.value)}};
      case SupResult::Kind::Unbounded:
        return Json{{"kind", "unbounded"}};
      default:
        return Json{{"kind", "infeasible"}};
    }
  };
  emit(Json{{"set", to_json(covered)},
            {"sup_eq", render(sup_balanced_eq(*g, covered))},
            {"sup_ineq", render(sup_balanced_ineq(*g, covered))}});
  return kExitDecided;
}

int run_witness(const ParsedGame& pg, const std::string& family_text,
                std::optional<Rational> lower, const std::string& radius_text,
                std::size_t cap) {
  PlayerUniverse u = std::holds_alternative<GameRule>(pg)
                         ? std::get<GameRule>(pg).universe()
                         : std::get<Game>(pg).universe;
  if (!radius_text.empty() && !lower) {
    // an explicit radius R fixes the bound via R = v(N) - 2L
    Rational grand = std::holds_alternative<GameRule>(pg)
                         ? std::get<GameRule>(pg).evaluate(Coalition::grand(u))
                         : std::get<Game>(pg).grand_value;
    lower = (grand - parse_rational(radius_text)) / 2;
  }
  SetFamily picked = parse_family(u, family_text);
  FieldOfSets field = build_subfield(picked, cap);

  auto finish = [&](const auto& src) {
    QuotientGame q = quotient(src, field);
    DiracWitnessResult res = dirac_witness(q);
    Json j;
    if (res.measure) {
      WitnessReport rep = verify_witness(*res.measure, src, picked, lower);
      if (!rep.pass()) throw InternalError("witness failed re-verification");
      j["status"] = "non_empty";
      j["measure"] = to_json(*res.measure);
      j["report"] = to_json(rep);
    } else {
      if (!res.lifted_violation || !holds_balancing_identity(*res.lifted_violation))
        throw InternalError("violation failed re-verification");
      j["status"] = "empty";
      j["certificate"] = to_json(*res.lifted_violation);
    }
    emit(j);
  };
  if (const GameRule* rule = std::get_if<GameRule>(&pg))
    finish(*rule);
  else if (const Game* g = std::get_if<Game>(&pg))
    finish(*g);
  else
    throw std::invalid_argument("witness needs a rule or explicit game file");
  return kExitDecided;
}

int run_hull(const ParsedGame& pg, const std::string& family_text, std::size_t cap,
             bool atoms_only) {
  PlayerUniverse u;
  SetFamily family = [&] {
    if (const RestrictedGame* rg = std::get_if<RestrictedGame>(&pg)) {
      u = rg->universe;
      if (family_text.empty()) return rg->feasible_prime;
    } else if (const Game* g = std::get_if<Game>(&pg)) {
      u = g->universe;
    } else {
      u = std::get<GameRule>(pg).universe();
    }
    if (family_text.empty())
      throw std::invalid_argument("this input needs --family to pick generators");
    return parse_family(u, family_text);
  }();
  FieldOfSets hull = field_hull(family, cap);
  if (atoms_only) {
    Json atoms = Json::array();
    for (const Coalition& a : hull.atoms()) atoms.push_back(to_json(a));
    emit(Json{{"atoms", atoms}});
  } else {
    emit(to_json(hull));
  }
  return kExitDecided;
}

int run_norm(const std::string& measure_path) {
  std::ifstream in(measure_path);
  if (!in) throw std::invalid_argument("cannot open measure file: " + measure_path);
  Json j;
  in >> j;
  PlayerUniverse u = j.at("universe").is_string()
                         ? PlayerUniverse::naturals()
                         : PlayerUniverse::finite(j.at("universe").at("finite").get<int>());
  std::vector<Coalition> sets;
  for (const Json& cj : j.at("family")) sets.push_back(coalition_from_json(u, cj));
  FieldOfSets field = field_hull(SetFamily::of(u, std::move(sets)));
  DiscreteMeasure m;
  m.context = field;
  for (const Json& pj : j.at("support"))
    m.support.emplace_back(pj.at("point").get<int>(),
                           parse_rational(pj.at("weight").get<std::string>()));
  emit(Json{{"norm", to_json(ba_norm(m))}, {"atoms", to_json(field).at("atoms")}});
  return kExitDecided;
}

int run_ladder(const std::string& rule_name, int n, const std::string& csv_path) {
  LadderReport rep;
  if (rule_name == "example1")
    rep = example1_ladder(n);
  else if (rule_name == "example2")
    rep = example2_ladder(n);
  else
    throw std::invalid_argument("unknown rule: " + rule_name);
  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) throw std::invalid_argument("cannot open csv path: " + csv_path);
    csv << "n,bound_num,bound_den,bound_float\n";
    for (const auto& st : rep.stages)
      csv << st.n << "," << st.forced_bound.get_num().get_str() << ","
          << st.forced_bound.get_den().get_str() << "," << to_double(st.forced_bound)
          << "\n";
  }
  emit(to_json(rep));
  return kExitDecided;
}

int run_probe(const ParsedGame& pg, const std::vector<std::string>& family_texts,
              const std::optional<Rational>& lower) {
  PlayerUniverse u = std::holds_alternative<GameRule>(pg)
                         ? std::get<GameRule>(pg).universe()
                         : std::get<Game>(pg).universe;
  std::vector<SetFamily> families;
  for (const std::string& text : family_texts)
    families.push_back(parse_family(u, text));
  CenteredProbe probe;
  if (const GameRule* rule = std::get_if<GameRule>(&pg))
    probe = centered_probe(*rule, families, lower);
  else if (const Game* g = std::get_if<Game>(&pg))
    probe = centered_probe(*g, families, lower);
  else
    throw std::invalid_argument("probe needs a rule or explicit game file");
  emit(to_json(probe));
  return kExitDecided;
}

int run_epsilon(const ParsedGame& pg, const std::string& eps_text) {
  const Game* g = std::get_if<Game>(&pg);
  if (!g) throw std::invalid_argument("epsilon needs an explicit game file");
  std::vector<Rational> eps_list;
  std::stringstream ss(eps_text);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) eps_list.push_back(parse_rational(tok));
  if (eps_list.empty()) throw std::invalid_argument("--eps needs at least one value");
  emit(to_json(epsilon_equivalence(*g, eps_list)));
  return kExitDecided;
}

int run_bounded_balanced(const ParsedGame& pg, std::size_t cap) {
  const RestrictedGame* rg = std::get_if<RestrictedGame>(&pg);
  if (!rg) throw std::invalid_argument("bounded-balanced needs a restricted game file");
  BoundedBalancedResult res = bounded_balanced_check(*rg, cap);
  Json j{{"bounded_balanced", res.bounded_balanced}};
  if (res.bounded_balanced) {
    if (!res.witness || !verify_core_witness(*rg, *res.witness))
      throw InternalError("witness failed re-verification");
    j["witness"] = to_json(*res.witness);
    if (res.witness_extension) {
      Json values = Json::array();
      for (const Coalition& s : res.witness_extension->feasible_sets())
        values.push_back(Json{{"set", to_json(s)},
                              {"value", to_json(res.witness_extension->value(s))}});
      j["extension"] = Json{{"values", values}};
    }
  } else {
    if (!res.refutation || !verify_violation(*rg, *res.refutation))
      throw InternalError("refutation failed re-verification");
    j["refutation"] = to_json(*res.refutation);
  }
  emit(j);
  return kExitDecided;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact core solver for transferable-utility games"};
  app.require_subcommand(1);

  std::string game_path, family_text, set_text, eps_text, rule_name = "example1";
  std::string csv_path, measure_path;
  std::vector<std::string> probe_families;
  std::string lower_text, radius_text;
  std::size_t cap_flag = 0;
  int ladder_n = 10;

  auto add_game_arg = [&](CLI::App* cmd) {
    cmd->add_option("game", game_path, "game file (JSON)")->required();
  };

  CLI::App* core = app.add_subcommand("core", "decide core non-emptiness");
  add_game_arg(core);
  CLI::App* certify = app.add_subcommand("certify", "decide and re-verify explicitly");
  add_game_arg(certify);
  CLI::App* supcheck =
      app.add_subcommand("supcheck", "compare the equality and inequality sups");
  add_game_arg(supcheck);
  supcheck->add_option("--set", set_text, "covered coalition (default N)");
  CLI::App* witness = app.add_subcommand("witness", "dirac witness for a picked family");
  add_game_arg(witness);
  witness->add_option("--family", family_text, "picked coalitions")->required();
  witness->add_option("--R", radius_text, "explicit norm radius R = v(N) - 2L");
  witness->add_option("--lower", lower_text, "explicit lower bound L");
  witness->add_option("--cap", cap_flag, "field hull size cap");
  CLI::App* hull = app.add_subcommand("hull", "field hull members and atoms");
  add_game_arg(hull);
  hull->add_option("--family", family_text, "generator coalitions");
  hull->add_option("--cap", cap_flag, "field hull size cap");
  CLI::App* atoms = app.add_subcommand("atoms", "atoms of the field hull");
  add_game_arg(atoms);
  atoms->add_option("--family", family_text, "generator coalitions");
  atoms->add_option("--cap", cap_flag, "field hull size cap");
  CLI::App* norm = app.add_subcommand("norm", "total-variation norm of a measure");
  norm->add_option("measure", measure_path, "measure file (JSON)")->required();
  CLI::App* ladder = app.add_subcommand("ladder", "truncation ladder for a named rule");
  ladder->add_option("--rule", rule_name, "example1 or example2");
  ladder->add_option("--n", ladder_n, "last stage");
  ladder->add_option("--csv", csv_path, "also write stage bounds as CSV");
  CLI::App* probe = app.add_subcommand("probe", "centered-system probe over families");
  add_game_arg(probe);
  probe->add_option("--family", probe_families, "picked family (repeatable)")
      ->required();
  probe->add_option("--lower", lower_text, "explicit lower bound L");
  CLI::App* epsilon = app.add_subcommand("epsilon", "epsilon-shift equivalence report");
  add_game_arg(epsilon);
  epsilon->add_option("--eps", eps_text, "comma-separated positive epsilons")
      ->required();
  CLI::App* rcore =
      app.add_subcommand("restricted-core", "decide the restricted core");
  add_game_arg(rcore);
  CLI::App* bb = app.add_subcommand("bounded-balanced",
                                    "constructive bounded-balancedness check");
  add_game_arg(bb);
  bb->add_option("--cap", cap_flag, "field hull size cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;  // help/version stay 0
  }

  try {
    std::optional<Rational> lower;
    if (!lower_text.empty()) lower = parse_rational(lower_text);
    const std::size_t cap = hull_cap(cap_flag);

    if (norm->parsed()) return run_norm(measure_path);
    if (ladder->parsed()) return run_ladder(rule_name, ladder_n, csv_path);

    ParsedGame pg = parse_game_file(game_path);
    if (core->parsed() || rcore->parsed()) return run_core(pg);
    if (certify->parsed()) return run_certify(pg);
    if (supcheck->parsed()) return run_supcheck(pg, set_text);
    if (witness->parsed()) return run_witness(pg, family_text, lower, radius_text, cap);
    if (hull->parsed()) return run_hull(pg, family_text, cap, false);
    if (atoms->parsed()) return run_hull(pg, family_text, cap, true);
    if (probe->parsed()) return run_probe(pg, probe_families, lower);
    if (epsilon->parsed()) return run_epsilon(pg, eps_text);
    if (bb->parsed()) return run_bounded_balanced(pg, cap);
    std::cerr << "error: no command handled\n";
    return kExitInput;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const HullCapExceeded& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResource;
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
}
