#include "ms2ic/json_io.hpp"

#include <fstream>
#include <set>

namespace ms2ic {

namespace {

void only_keys(const json& j, std::initializer_list<const char*> keys, const std::string& what) {
  if (!j.is_object()) throw InputError(what + ": expected a JSON object");
  std::set<std::string> ok(keys.begin(), keys.end());
  for (const auto& [k, _] : j.items())
    if (!ok.count(k)) throw InputError(what + ": unknown key '" + k + "'");
}

std::vector<std::string> world_names(const json& j) {
  if (!j.contains("worlds") || !j["worlds"].is_array()) throw InputError("frame: missing \"worlds\" array");
  std::vector<std::string> w;
  std::set<std::string> seen;
  for (const auto& x : j["worlds"]) {
    if (!x.is_string()) throw InputError("frame: world names must be strings");
    if (!seen.insert(x.get<std::string>()).second) throw InputError("frame: duplicate world " + x.dump());
    w.push_back(x.get<std::string>());
  }
  if (w.empty() || static_cast<int>(w.size()) > kMaxWorlds) throw InputError("frame: between 1 and 64 worlds");
  return w;
}

template <typename F>
void tuples(const json& j, const char* key, std::size_t arity, const std::vector<std::string>& worlds, F add) {
  if (!j.contains(key)) return;
  if (!j[key].is_array()) throw InputError(std::string("frame: \"") + key + "\" must be an array");
  for (const auto& t : j[key]) {
    if (!t.is_array() || t.size() != arity)
      throw InputError(std::string("frame: \"") + key + "\" entries must have " + std::to_string(arity) +
                       " worlds");
    std::vector<int> idx;
    for (const auto& x : t) {
      auto it = x.is_string() ? std::find(worlds.begin(), worlds.end(), x.get<std::string>()) : worlds.end();
      if (it == worlds.end()) throw InputError("frame: unknown world " + x.dump());
      idx.push_back(static_cast<int>(it - worlds.begin()));
    }
    add(idx);
  }
}

json pairs(const std::vector<WorldSet>& rel, const std::vector<std::string>& w) {
  json out = json::array();
  for (std::size_t x = 0; x < rel.size(); ++x)
    for (std::size_t y = 0; y < w.size(); ++y)
      if (has(rel[x], static_cast<int>(y))) out.push_back({w[x], w[y]});
  return out;
}

Formula formula_of(const json& j, const std::string& what, bool hybrid = false) {
  if (!j.is_string()) throw InputError(what + ": formulas are given as strings");
  try {
    return parse(j.get<std::string>(), hybrid);
  } catch (const SyntaxError& e) {
    throw InputError(what + ": " + e.what());
  }
}

Substitution subst_of(const json& j, const std::string& what) {
  if (!j.is_object()) throw InputError(what + ": substitution must be an object");
  Substitution s;
  for (const auto& [k, v] : j.items()) s[k] = formula_of(v, what);
  return s;
}

json subst_json(const Substitution& s) {
  json o = json::object();
  for (const auto& [k, v] : s) o[k] = print(v);
  return o;
}

int index_of(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InputError(what + ": step references must be integers");
  return j.get<int>();
}

}  // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
}

KripkeFrame kripke_from_json(const json& j) {
  only_keys(j, {"worlds", "T", "S", "E", "schema"}, "frame");
  KripkeFrame f(world_names(j));
  tuples(j, "T", 3, f.worlds, [&](const std::vector<int>& t) { f.add_t(t[0], t[1], t[2]); });
  tuples(j, "S", 2, f.worlds, [&](const std::vector<int>& t) { f.add_s(t[0], t[1]); });
  if (j.contains("E")) {
    f.E = std::vector<WorldSet>(f.size(), 0);
    tuples(j, "E", 2, f.worlds, [&](const std::vector<int>& t) { f.add_e(t[0], t[1]); });
  }
  return f;
}

ModalContactFrame contact_from_json(const json& j) {
  only_keys(j, {"worlds", "R", "S", "schema"}, "modal contact frame");
  ModalContactFrame m(world_names(j));
  tuples(j, "R", 2, m.worlds, [&](const std::vector<int>& t) { m.add_r(t[0], t[1]); });
  tuples(j, "S", 2, m.worlds, [&](const std::vector<int>& t) { m.add_s(t[0], t[1]); });
  return m;
}

AnyFrame frame_from_json(const json& j) {
  if (j.is_object() && j.contains("R")) return contact_from_json(j);
  return kripke_from_json(j);
}

json to_json(const KripkeFrame& f) {
  json o;
  o["worlds"] = f.worlds;
  json t = json::array();
  int n = f.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (f.t(x, y, z)) t.push_back({f.worlds[x], f.worlds[y], f.worlds[z]});
  o["T"] = t;
  o["S"] = pairs(f.S, f.worlds);
  if (f.E) o["E"] = pairs(*f.E, f.worlds);
  return o;
}

json to_json(const ModalContactFrame& m) {
  json o;
  o["worlds"] = m.worlds;
  o["R"] = pairs(m.R, m.worlds);
  o["S"] = pairs(m.S, m.worlds);
  return o;
}

json to_json(const AnyFrame& f) {
  return std::visit([](const auto& x) { return to_json(x); }, f);
}

Valuation valuation_from_json(const json& j, const std::vector<std::string>& worlds) {
  if (!j.is_object()) throw InputError("valuation: expected a JSON object");
  auto idx = [&](const json& x) {
    auto it = x.is_string() ? std::find(worlds.begin(), worlds.end(), x.get<std::string>()) : worlds.end();
    if (it == worlds.end()) throw InputError("valuation: unknown world " + x.dump());
    return static_cast<int>(it - worlds.begin());
  };
  Valuation v;
  for (const auto& [k, x] : j.items()) {
    if (k == "schema") continue;
    if (!k.empty() && k[0] == '#') {
      v.noms[k.substr(1)] = idx(x);
    } else {
      if (!x.is_array()) throw InputError("valuation: '" + k + "' must map to an array of worlds");
      WorldSet s = 0;
      for (const auto& w : x) s |= bit(idx(w));
      v.vars[k] = s;
    }
  }
  return v;
}

json to_json(const Valuation& v, const std::vector<std::string>& worlds) {
  json o = json::object();
  for (const auto& [k, s] : v.vars) {
    json a = json::array();
    for (std::size_t i = 0; i < worlds.size(); ++i)
      if (has(s, static_cast<int>(i))) a.push_back(worlds[i]);
    o[k] = a;
  }
  for (const auto& [k, w] : v.noms) o["#" + k] = worlds.at(w);
  return o;
}

Algebra algebra_from_json(const json& j) {
  only_keys(j, {"atoms", "prec", "diamond", "schema"}, "algebra");
  if (!j.contains("atoms") || !j["atoms"].is_number_integer()) throw InputError("algebra: missing \"atoms\"");
  int n = j["atoms"].get<int>();
  if (n < 0 || n > 6) throw InputError("algebra: atoms must be between 0 and 6");
  Algebra a(n);
  auto el = [&](const json& x) {
    if (!x.is_number_integer() || x.get<int>() < 0 || x.get<int>() > a.top())
      throw InputError("algebra: element out of range: " + x.dump());
    return x.get<int>();
  };
  if (j.contains("prec")) {
    if (!j["prec"].is_array()) throw InputError("algebra: \"prec\" must be an array of pairs");
    for (const auto& p : j["prec"]) {
      if (!p.is_array() || p.size() != 2) throw InputError("algebra: \"prec\" entries are pairs");
      a.set_prec(el(p[0]), el(p[1]));
    }
  }
  if (j.contains("diamond")) {
    const auto& d = j["diamond"];
    if (!d.is_array() || static_cast<int>(d.size()) != a.elements())
      throw InputError("algebra: \"diamond\" must list one value per element");
    for (int x = 0; x < a.elements(); ++x) a.diamond[x] = el(d[x]);
  }
  return a;
}

json to_json(const Algebra& a) {
  json o;
  o["atoms"] = a.atoms;
  json p = json::array();
  for (int x = 0; x < a.elements(); ++x)
    for (int y = 0; y < a.elements(); ++y)
      if (a.precedes(x, y)) p.push_back({x, y});
  o["prec"] = p;
  o["diamond"] = a.diamond;
  return o;
}

Proof proof_from_json(const json& j) {
  only_keys(j, {"system", "premises", "steps", "schema"}, "proof");
  Proof p;
  if (j.contains("system")) {
    try {
      p.system = parse_system(j["system"].get<std::string>());
    } catch (const std::exception& e) {
      throw InputError(std::string("proof: ") + e.what());
    }
  }
  if (j.contains("premises"))
    for (const auto& f : j["premises"]) p.premises.push_back(formula_of(f, "proof premise"));
  if (!j.contains("steps") || !j["steps"].is_array()) throw InputError("proof: missing \"steps\" array");
  for (const auto& s : j["steps"]) {
    only_keys(s, {"formula", "by"}, "proof step");
    if (!s.contains("formula") || !s.contains("by")) throw InputError("proof step: needs \"formula\" and \"by\"");
    Step st;
    st.formula = formula_of(s["formula"], "proof step");
    const json& by = s["by"];
    Justification& J = st.by;
    if (by.is_string()) {
      std::string b = by.get<std::string>();
      if (b == "premise") J.kind = By::Premise;
      else if (b == "PC") J = {By::Axiom, "PC", std::nullopt, 0, 0, {}};
      else throw InputError("proof step: unknown justification '" + b + "'");
    } else if (by.is_object() && by.size() == 1) {
      auto [key, val] = *by.items().begin();
      if (key == "axiom") {
        J.kind = By::Axiom;
        if (val.is_string()) {
          J.name = val.get<std::string>();
        } else {
          only_keys(val, {"name", "subst"}, "axiom justification");
          J.name = val.at("name").get<std::string>();
          if (val.contains("subst")) J.subst = subst_of(val["subst"], "axiom substitution");
        }
      } else if (key == "MP") {
        if (!val.is_array() || val.size() != 2) throw InputError("MP takes two step indices");
        J.kind = By::MP;
        J.i = index_of(val[0], "MP");
        J.j = index_of(val[1], "MP");
      } else if (key == "R" || key == "N" || key == "cong") {
        J.kind = key == "R" ? By::R : key == "N" ? By::N : By::Cong;
        J.i = index_of(val, key);
      } else if (key == "pi2") {
        only_keys(val, {"rule", "from", "subst", "fresh"}, "pi2 justification");
        J.kind = By::Pi2;
        J.name = val.at("rule").get<std::string>();
        J.i = index_of(val.at("from"), "pi2");
        if (val.contains("subst")) J.subst = subst_of(val["subst"], "pi2 substitution");
        if (val.contains("fresh"))
          for (const auto& x : val["fresh"]) J.fresh.push_back(x.get<std::string>());
      } else {
        throw InputError("proof step: unknown justification '" + key + "'");
      }
    } else {
      throw InputError("proof step: malformed justification " + by.dump());
    }
    p.steps.push_back(std::move(st));
  }
  return p;
}

json to_json(const Proof& p) {
  json o;
  o["system"] = system_name(p.system);
  json pr = json::array();
  for (const auto& f : p.premises) pr.push_back(print(f));
  o["premises"] = pr;
  json steps = json::array();
  for (const auto& s : p.steps) {
    json by;
    const auto& J = s.by;
    switch (J.kind) {
      case By::Premise: by = "premise"; break;
      case By::Axiom:
        if (J.subst) by = {{"axiom", {{"name", J.name}, {"subst", subst_json(*J.subst)}}}};
        else by = {{"axiom", J.name}};
        break;
      case By::MP: by = {{"MP", {J.i, J.j}}}; break;
      case By::R: by = {{"R", J.i}}; break;
      case By::N: by = {{"N", J.i}}; break;
      case By::Cong: by = {{"cong", J.i}}; break;
      case By::Pi2:
        by = {{"pi2", {{"rule", J.name}, {"from", J.i}, {"subst", J.subst ? subst_json(*J.subst) : json::object()},
                       {"fresh", J.fresh}}}};
        break;
    }
    steps.push_back({{"formula", print(s.formula)}, {"by", by}});
  }
  o["steps"] = steps;
  return o;
}

json to_json(const Report& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"condition", x.condition}, {"witness", x.witness}});
  return {{"ok", r.ok()}, {"violations", v}};
}

json to_json(const Countermodel& c) {
  const auto& w = frame_worlds(c.frame);
  return {{"status", "countermodel"},
          {"frame", to_json(c.frame)},
          {"valuation", to_json(c.valuation, w)},
          {"world", w.at(c.world)},
          {"formula", print(c.formula)}};
}

json to_json(const AdmissibilityReport& r) {
  json o;
  o["rule"] = r.rule;
  o["instantiation"] = subst_json(r.instantiation);
  o["conclusion"] = print(r.conclusion);
  o["vacuous"] = r.vacuous;
  if (r.vacuous) {
    o["status"] = "vacuous";
  } else {
    const auto& e = r.expansion;
    o["status"] = r.verified() ? "verified" : "failed";
    o["premise"] = print(r.premise);
    o["conclusion_failure_world"] = r.failure_world_name;
    o["expansion_kind"] = r.expansion_kind;
    o["expansion"] = to_json(e.frame);
    o["expansion_valuation"] = to_json(e.valuation, e.frame.worlds);
    o["fresh"] = e.fresh;
    o["witness"] = e.frame.worlds.at(r.witness);
    o["checks"] = {{"expansion_is_modal_contact_frame", r.expansion_is_frame},
                   {"regular_stable_pmorphism", r.morphism_ok},
                   {"size_law", r.size_law},
                   {"premise_fails_at_witness", r.premise_fails}};
  }
  o["notes"] = r.notes;
  return o;
}

}  // namespace ms2ic
