#include "ms2ic/pi2.hpp"

#include "ms2ic/semantics.hpp"

namespace ms2ic {

const std::vector<Pi2Rule>& rule_catalog() { return pi2_rules(); }

namespace {

Substitution checked(const Pi2Rule& r, const Substitution& inst) {
  Substitution s;
  std::vector<std::string> need = r.metavars;
  need.push_back("chi");
  for (const auto& m : need) {
    auto it = inst.find(m);
    if (it == inst.end()) throw AdmissibilityError("instantiation lacks '" + m + "'");
    if (!is_core(it->second)) throw AdmissibilityError("hybrid formula in instantiation");
    s[m] = it->second;
  }
  return s;
}

bool pair_rule(const std::string& n) { return n == "rho6" || n == "rho9"; }

}  // namespace

AdmissibilityReport verify_admissibility_instance(const Pi2Rule& rule, const ModalContactFrame& m,
                                                  const Valuation& v, const Substitution& inst) {
  AdmissibilityReport rep;
  rep.rule = rule.name;
  rep.instantiation = checked(rule, inst);
  Report fr = is_modal_contact_frame(m);
  if (!fr.ok()) throw AdmissibilityError("input is not a modal contact frame: " + fr.summary());
  rep.conclusion = substitute(rule.conclusion(), rep.instantiation);
  WorldSet holds;
  try {
    holds = truth_set(m, v, rep.conclusion);
  } catch (const SemanticsError& e) {
    throw AdmissibilityError(std::string("valuation does not cover the instance: ") + e.what());
  }
  int n = m.size();
  if (holds == full_set(n)) {
    rep.vacuous = true;
    rep.notes.push_back("conclusion holds everywhere; nothing to verify");
    return rep;
  }
  int a = 0;
  while (has(holds, a)) ++a;
  rep.failure_world = a;
  rep.failure_world_name = m.worlds[a];

  Formula all = rep.conclusion;
  for (const auto& [k, f] : rep.instantiation) all = conj(all, f);
  std::string p = fresh_variable(all, v);
  Formula phi = rep.instantiation.at("phi");
  bool pairs = pair_rule(rule.name);
  rep.expansion_kind = pairs ? "pair" : "two-copy";
  rep.expansion = pairs ? expand_rho6(m, v, phi, p) : expand_two_copy(m, v, phi, p);
  const Expansion& e = rep.expansion;

  Substitution sp = rep.instantiation;
  sp[rule.fresh[0]] = var(e.fresh);
  rep.premise = substitute(rule.premise(), sp);

  rep.expansion_is_frame = is_modal_contact_frame(e.frame).ok();
  Report mr = is_regular_stable_pmorphism(e.map, e.frame, m);
  rep.morphism_ok = mr.ok();
  if (!rep.morphism_ok) rep.notes.push_back("morphism check: " + mr.summary());
  if (pairs) {
    int r = 0;
    for (int x = 0; x < n; ++x) r += __builtin_popcountll(m.R[x]);
    rep.size_law = e.frame.size() == r;
    std::string name = m.worlds[a] + "|" + m.worlds[a];
    rep.witness = e.frame.index_of(name);
  } else {
    rep.size_law = e.frame.size() == 2 * n;
    rep.witness = a;
  }
  if (rep.witness < 0 || e.map[rep.witness] != a)
    throw std::logic_error("expansion lost the witness world");
  rep.premise_fails = !has(truth_set(e.frame, e.valuation, rep.premise), rep.witness);
  if (rule.name == "rho9") {
    WorldSet wp = e.valuation.vars.at(e.fresh);
    if (image(e.frame.R, wp) != wp) rep.notes.push_back("R'[w(p)] differs from w(p)");
  }
  if (!rep.expansion_is_frame || !rep.morphism_ok)
    throw std::logic_error("expansion violates the frame invariants for rule " + rule.name);
  return rep;
}

std::optional<std::pair<ModalContactFrame, Valuation>> search_conclusion_failure(const Pi2Rule& rule,
                                                                                  const Substitution& inst,
                                                                                  int max_n, int workers) {
  Formula c = substitute(rule.conclusion(), checked(rule, inst));
  auto cm = find_countermodel(c, max_n, FrameKind::ModalContact, Mode::Core, workers);
  if (!cm) return std::nullopt;
  return std::make_pair(std::get<ModalContactFrame>(cm->frame), cm->valuation);
}

}  // namespace ms2ic
