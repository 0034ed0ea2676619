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

#include "bacore/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace bacore {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Coalition& s) {
  if (s.kind() == SetKind::Cofinite) return Json{{"excluded", s.base()}};
  return Json(s.base());
}

Json to_json(const PayoffVector& a) {
  Json j = Json::object();
  for (const auto& [i, v] : a.payoffs) j[std::to_string(i)] = to_json(v);
  return j;
}

Json to_json(const BalancedCertificate& cert) {
  Json j;
  j["collection"] = Json::array();
  j["weights"] = Json::array();
  for (const Coalition& s : cert.collection) j["collection"].push_back(to_json(s));
  for (const Rational& w : cert.weights) j["weights"].push_back(to_json(w));
  j["covered"] = to_json(cert.covered);
  j["value_sum"] = to_json(cert.value_sum);
  return j;
}

Json to_json(const CoreDecision& d) {
  Json j;
  j["status"] = d.non_empty ? "non_empty" : "empty";
  if (d.witness) j["witness"] = to_json(*d.witness);
  if (d.violation) j["certificate"] = to_json(*d.violation);
  return j;
}

Json to_json(const DiscreteMeasure& m) {
  Json pts = Json::array();
  for (const auto& [point, weight] : m.support)
    pts.push_back(Json{{"point", point}, {"weight", to_json(weight)}});
  return pts;
}

Json to_json(const WitnessReport& rep) {
  return Json{{"grand_ok", rep.grand_ok},
              {"coalitions_ok", rep.coalitions_ok},
              {"norm_ok", rep.norm_ok},
              {"norm", to_json(rep.norm)},
              {"radius", to_json(rep.radius)},
              {"bound_source", rep.used_global_bound ? "global" : "restriction"},
              {"pass", rep.pass()}};
}

Json to_json(const EpsilonReport& rep) {
  Json stages = Json::array();
  for (const auto& st : rep.stages)
    stages.push_back(Json{{"eps", to_json(st.eps)},
                          {"status", st.non_empty ? "non_empty" : "empty"}});
  return Json{{"stages", stages},
              {"cover_value", to_json(rep.cover_value)},
              {"grand_value", to_json(rep.grand_value)},
              {"criterion_non_empty", rep.criterion_non_empty},
              {"views_agree", rep.views_agree}};
}

Json to_json(const LadderReport& rep) {
  Json stages = Json::array();
  for (const auto& st : rep.stages) {
    Json s{{"n", st.n},
           {"bound", to_json(st.forced_bound)},
           {"bound_float", to_double(st.forced_bound)},
           {"log_aside", std::log(st.n + 1.0)},
           {"lp_status", st.lp_status}};
    if (st.infeasibility) s["certificate"] = to_json(*st.infeasibility);
    stages.push_back(std::move(s));
  }
  Json j{{"stages", stages}, {"dyadic_k", rep.dyadic_k},
         {"dyadic_certified", rep.dyadic_certified}};
  switch (rep.conclusion) {
    case LadderReport::Conclusion::DivergesUnbounded:
      j["conclusion"] = "diverges_unbounded";
      break;
    case LadderReport::Conclusion::Stable:
      j["conclusion"] = "stable";
      if (rep.stable_bound) j["stable_bound"] = to_json(*rep.stable_bound);
      break;
    case LadderReport::Conclusion::Infeasible:
      j["conclusion"] = "infeasible";
      break;
  }
  if (rep.discrepancy) j["discrepancy"] = *rep.discrepancy;
  return j;
}

Json to_json(const CenteredProbe& probe) {
  Json verdicts = Json::array();
  for (const auto& v : probe.verdicts) {
    Json fam = Json::array();
    for (const Coalition& s : v.family.sets) fam.push_back(to_json(s));
    Json jv{{"family", fam}, {"non_empty", v.non_empty}};
    if (v.measure) {
      jv["measure"] = to_json(*v.measure);
      jv["report"] = to_json(v.report);
    }
    if (v.violation) jv["certificate"] = to_json(*v.violation);
    verdicts.push_back(std::move(jv));
  }
  return Json{{"verdicts", verdicts}, {"all_non_empty", probe.all_non_empty}};
}

Json to_json(const FieldOfSets& field) {
  Json members = Json::array();
  Json atoms = Json::array();
  for (const Coalition& s : field.members()) members.push_back(to_json(s));
  for (const Coalition& s : field.atoms()) atoms.push_back(to_json(s));
  return Json{{"members", members}, {"atoms", atoms}};
}

Coalition coalition_from_json(const PlayerUniverse& u, const Json& j) {
  if (j.is_array()) return Coalition::of(u, j.get<std::vector<int>>());
  if (j.is_object() && j.contains("excluded"))
    return Coalition::cofinite(u, j.at("excluded").get<std::vector<int>>());
  throw std::invalid_argument("coalition must be an array or {\"excluded\": [...]}");
}

namespace {

PlayerUniverse universe_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "naturals")
    return PlayerUniverse::naturals();
  if (j.is_object() && j.contains("finite"))
    return PlayerUniverse::finite(j.at("finite").get<int>());
  throw std::invalid_argument("universe must be {\"finite\": n} or \"naturals\"");
}

}  // namespace

ParsedGame parse_game(const Json& j) {
  PlayerUniverse u = universe_from_json(j.at("universe"));

  if (j.contains("rule")) {
    if (u.is_finite())
      throw std::invalid_argument("named rules live over the naturals");
    return GameRule::by_name(j.at("rule").get<std::string>());
  }
  if (!u.is_finite())
    throw std::invalid_argument("table games require a finite universe");

  std::map<Coalition, Rational> table;
  for (const Json& entry : j.at("values")) {
    Coalition s = coalition_from_json(u, entry.at("set"));
    Rational v = parse_rational(entry.at("value").get<std::string>());
    if (table.count(s))
      throw std::invalid_argument("duplicate coalition in value table: " +
                                  s.to_string());
    table.emplace(std::move(s), std::move(v));
  }
  Rational grand = parse_rational(j.at("grand").get<std::string>());
  std::optional<Rational> lower;
  if (j.contains("lower_bound"))
    lower = parse_rational(j.at("lower_bound").get<std::string>());

  if (j.contains("family")) {
    std::vector<Coalition> sets;
    for (const Json& cj : j.at("family")) sets.push_back(coalition_from_json(u, cj));
    return make_restricted(u, SetFamily::of(u, std::move(sets)), std::move(table),
                           std::move(grand), std::move(lower));
  }
  return make_explicit(u, std::move(table), std::move(grand), std::move(lower));
}

ParsedGame parse_game_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open game file: " + path);
  Json j;
  in >> j;
  return parse_game(j);
}

SetFamily parse_family(const PlayerUniverse& u, const std::string& text) {
  std::vector<Coalition> sets;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (part.empty()) continue;
    bool cof = part.front() == '~';
    std::string body = cof ? part.substr(1) : part;
    std::vector<int> members;
    std::stringstream ms(body);
    std::string tok;
    while (std::getline(ms, tok, ',')) {
      if (tok.empty()) continue;
      members.push_back(std::stoi(tok));
    }
    sets.push_back(cof ? Coalition::cofinite(u, std::move(members))
                       : Coalition::of(u, std::move(members)));
  }
  return SetFamily::of(u, std::move(sets));
}

}  // namespace bacore
