#include "ms2ic/calculus.hpp"

#include <stdexcept>

namespace ms2ic {

System parse_system(const std::string& s) {
  if (s == "S2IC") return System::S2IC;
  if (s == "MS2IC") return System::MS2IC;
  if (s == "MS2ICu") return System::MS2ICu;
  if (s == "MS2IC-nabla") return System::Nabla;
  throw std::invalid_argument("unknown system '" + s + "'");
}

std::string system_name(System s) {
  switch (s) {
    case System::S2IC: return "S2IC";
    case System::MS2IC: return "MS2IC";
    case System::MS2ICu: return "MS2ICu";
    case System::Nabla: return "MS2IC-nabla";
  }
  return "?";
}

namespace {

std::vector<AxiomScheme> make(const std::vector<std::pair<const char*, const char*>>& src, bool nabla) {
  std::vector<AxiomScheme> out;
  for (auto& [n, t] : src) out.push_back({n, parse(t), nabla});
  return out;
}

}  // namespace

const std::vector<AxiomScheme>& core_schemes() {
  static const auto v = make(
      {
          {"A1", "(bot ~> phi) and (phi ~> top)"},
          {"A2", "((phi or psi) ~> chi) <-> ((phi ~> chi) and (psi ~> chi))"},
          {"A3", "(phi ~> (psi and chi)) <-> ((phi ~> psi) and (phi ~> chi))"},
          {"A4", "(phi ~> psi) -> (phi -> psi)"},
          {"A5", "(phi ~> psi) <-> (not psi ~> not phi)"},
          {"A8", "[A] phi -> [A] [A] phi"},
          {"A9", "not [A] phi -> [A] not [A] phi"},
          {"A10", "(phi ~> psi) <-> [A] (phi ~> psi)"},
          {"A11", "[A] phi -> (not [A] phi ~> bot)"},
          {"K", "box (phi -> psi) -> (box phi -> box psi)"},
          {"Add", "(phi ~> psi) -> (box phi ~> box psi)"},
      },
      false);
  return v;
}

const std::vector<AxiomScheme>& nabla_schemes() {
  static const auto v = make(
      {
          {"A0", "[A] p <-> nabla(bot, p)"},
          {"A1", "nabla(top, p) and nabla(p, top)"},
          {"A2", "nabla(p and q, r) <-> nabla(p, r) and nabla(q, r)"},
          {"A3", "nabla(p, q and r) <-> nabla(p, q) and nabla(p, r)"},
          {"A4", "nabla(p, q) -> (p or q)"},
          {"A5", "nabla(p, q) <-> nabla(q, p)"},
          {"A8", "[A] p -> [A] [A] p"},
          {"A9", "not [A] p -> [A] not [A] p"},
          {"A10", "nabla(p, q) <-> [A] nabla(p, q)"},
          {"A11", "[A] p -> nabla([A] p, bot)"},
          {"K", "box (p -> q) -> (box p -> box q)"},
          {"Add", "nabla(p, q) -> nabla(dia p, box q)"},
      },
      true);
  return v;
}

const AxiomScheme* find_scheme(const std::string& name, System system) {
  const auto& list = system == System::Nabla ? nabla_schemes() : core_schemes();
  for (const auto& s : list) {
    if (s.name != name) continue;
    if (system == System::S2IC && (name == "K" || name == "Add")) return nullptr;
    return &s;
  }
  return nullptr;
}

std::vector<std::string> scheme_names() {
  return {"A0", "A1", "A2", "A3", "A4", "A5", "A8", "A9", "A10", "A11", "K", "Add", "PC"};
}

namespace {

bool match(const Formula& t, const Formula& f, Substitution& s) {
  if (t->kind == Kind::Var) {
    auto it = s.find(t->name);
    if (it != s.end()) return same(it->second, f);
    s.emplace(t->name, f);
    return true;
  }
  if (t->kind != f->kind || t->name != f->name) return false;
  int n = arity(t->kind);
  if (n >= 1 && !match(t->a, f->a, s)) return false;
  if (n == 2 && !match(t->b, f->b, s)) return false;
  return true;
}

void atoms(const Formula& f, std::vector<Formula>& out) {
  if (is_boolean_kind(f->kind)) {
    int n = arity(f->kind);
    if (n >= 1) atoms(f->a, out);
    if (n == 2) atoms(f->b, out);
    return;
  }
  for (const auto& g : out)
    if (same(g, f)) return;
  out.push_back(f);
}

bool eval_pc(const Formula& f, const std::vector<Formula>& at, std::uint64_t row) {
  switch (f->kind) {
    case Kind::Bot: return false;
    case Kind::Top: return true;
    case Kind::Not: return !eval_pc(f->a, at, row);
    case Kind::And: return eval_pc(f->a, at, row) && eval_pc(f->b, at, row);
    case Kind::Or: return eval_pc(f->a, at, row) || eval_pc(f->b, at, row);
    case Kind::Implies: return !eval_pc(f->a, at, row) || eval_pc(f->b, at, row);
    case Kind::Iff: return eval_pc(f->a, at, row) == eval_pc(f->b, at, row);
    default:
      for (std::size_t i = 0; i < at.size(); ++i)
        if (same(at[i], f)) return (row >> i) & 1u;
      throw std::logic_error("atom not found");
  }
}

}  // namespace

std::optional<Substitution> match_scheme(const AxiomScheme& s, const Formula& f) {
  Substitution sub;
  if (s.nabla) {
    if (match(s.tmpl, f, sub)) return sub;
    return std::nullopt;
  }
  if (!is_core(f)) return std::nullopt;
  if (match(desugar(s.tmpl), desugar(f), sub)) return sub;
  return std::nullopt;
}

bool is_tautology(const Formula& f) {
  std::vector<Formula> at;
  atoms(f, at);
  if (at.size() > 24) throw std::invalid_argument("too many propositional atoms for a truth table");
  for (std::uint64_t row = 0; row < (std::uint64_t{1} << at.size()); ++row)
    if (!eval_pc(f, at, row)) return false;
  return true;
}

Formula Pi2Rule::premise() const { return implies(F, var("chi")); }
Formula Pi2Rule::conclusion() const { return implies(G, var("chi")); }

const std::vector<Pi2Rule>& pi2_rules() {
  static const std::vector<Pi2Rule> v = {
      {"rho6", parse("(phi ~> p) and (p ~> psi)"), parse("phi ~> psi"), {"phi", "psi"}, {"p"}},
      {"rho7", parse("(p ~> phi) and p"), parse("phi"), {"phi"}, {"p"}},
      {"UC", parse("(p ~> phi) and box p"), parse("box phi"), {"phi"}, {"p"}},
      {"rho9", parse("(phi ~> p) and (p ~> psi) and (p ~> p)"), parse("phi ~> psi"), {"phi", "psi"}, {"p"}},
      {"LC", parse("(p ~> phi) and dia p"), parse("dia phi"), {"phi"}, {"p"}},
  };
  return v;
}

const Pi2Rule* find_rule(const std::string& name) {
  std::string n = name;
  if (n == "ρ6") n = "rho6";
  if (n == "ρ7") n = "rho7";
  if (n == "ρ9") n = "rho9";
  for (const auto& r : pi2_rules())
    if (r.name == n) return &r;
  return nullptr;
}

bool rule_in_system(const std::string& rule, System system) {
  if (system != System::MS2ICu) return false;
  const Pi2Rule* r = find_rule(rule);
  return r && (r->name == "rho6" || r->name == "rho7" || r->name == "UC");
}

namespace {

struct Checker {
  System system;
  std::vector<Formula> norm;  // normalized step formulas

  Formula normal(const Formula& f) const {
    if (!is_core(f)) throw std::invalid_argument("hybrid formula in a proof: " + print(f));
    return system == System::Nabla ? f : desugar(f);
  }
  Formula univ_of(const Formula& f) const { return system == System::Nabla ? univ(f) : simp(top(), f); }
};

ProofError err(int k, const std::string& kind, const std::string& msg) { return {k, kind, msg}; }

bool cong_ok(const Formula& eq, const Formula& g, System system) {
  if (eq->kind != Kind::Iff || g->kind != Kind::Iff) return false;
  const Formula &al = eq->a, &be = eq->b, &x = g->a, &y = g->b;
  if (x->kind != y->kind) return false;
  if (x->kind == Kind::Simp || x->kind == Kind::Nabla) {
    if (same(x->a, al) && same(y->a, be) && same(x->b, y->b)) return true;
    if (same(x->b, al) && same(y->b, be) && same(x->a, y->a)) return true;
    return false;
  }
  if (system == System::Nabla && x->kind == Kind::Univ) return same(x->a, al) && same(y->a, be);
  return false;
}

}  // namespace

std::optional<ProofError> check_proof(const Proof& p, const std::vector<Formula>& premises, System system) {
  Checker c{system, {}};
  std::vector<Formula> prem;
  int k = 0;
  try {
    for (const auto& f : premises) prem.push_back(c.normal(f));
    for (const auto& st : p.steps) {
      ++k;
      Formula f = c.normal(st.formula);
      const auto& by = st.by;
      auto ref = [&](int i) { return i >= 1 && i < k; };
      switch (by.kind) {
        case By::Premise: {
          bool found = false;
          for (const auto& g : prem) found = found || same(g, f);
          if (!found) return err(k, "premise-not-given", "formula is not among the premises");
          break;
        }
        case By::Axiom: {
          if (by.name == "PC") {
            if (!is_tautology(f)) return err(k, "scheme-mismatch", "not a propositional tautology");
            break;
          }
          const AxiomScheme* s = find_scheme(by.name, system);
          if (!s) return err(k, "unknown-scheme", "scheme '" + by.name + "' not in " + system_name(system));
          if (by.subst) {
            Formula inst = substitute(s->tmpl, *by.subst);
            if (!same(c.normal(inst), f))
              return err(k, "scheme-mismatch", "declared instance of " + by.name + " is " + print(inst));
          } else if (!match_scheme(*s, st.formula)) {
            return err(k, "scheme-mismatch", "not an instance of " + by.name);
          }
          break;
        }
        case By::MP: {
          if (!ref(by.i) || !ref(by.j)) return err(k, "bad-index", "MP references must be earlier steps");
          if (!same(c.norm[by.j - 1], implies(c.norm[by.i - 1], f)))
            return err(k, "mp-shape", "step " + std::to_string(by.j) + " is not step " + std::to_string(by.i) +
                                          " -> this step");
          break;
        }
        case By::R:
          if (!ref(by.i)) return err(k, "bad-index", "R references must be earlier steps");
          if (!same(f, c.univ_of(c.norm[by.i - 1]))) return err(k, "rule-shape", "R must prefix [A]");
          break;
        case By::N:
          if (system == System::S2IC) return err(k, "rule-not-in-system", "N is not a rule of S2IC");
          if (!ref(by.i)) return err(k, "bad-index", "N references must be earlier steps");
          if (!same(f, box(c.norm[by.i - 1]))) return err(k, "rule-shape", "N must prefix box");
          break;
        case By::Cong:
          if (!ref(by.i)) return err(k, "bad-index", "congruence references must be earlier steps");
          if (!cong_ok(c.norm[by.i - 1], f, system))
            return err(k, "rule-shape", "not a congruence instance of step " + std::to_string(by.i));
          break;
        case By::Pi2: {
          const Pi2Rule* r = find_rule(by.name);
          if (!r) return err(k, "unknown-rule", "unknown rule '" + by.name + "'");
          if (!rule_in_system(by.name, system))
            return err(k, "rule-not-in-system", r->name + " is not a rule of " + system_name(system));
          if (!ref(by.i)) return err(k, "bad-index", "rule premise must be an earlier step");
          if (!by.subst) return err(k, "rule-shape", "missing declared substitution");
          Substitution s;
          std::vector<std::string> need = r->metavars;
          need.push_back("chi");
          for (const auto& m : need) {
            auto it = by.subst->find(m);
            if (it == by.subst->end()) return err(k, "rule-shape", "substitution lacks '" + m + "'");
            s[m] = it->second;
          }
          if (by.fresh.size() != r->fresh.size())
            return err(k, "rule-shape", "expected " + std::to_string(r->fresh.size()) + " fresh names");
          for (std::size_t a = 0; a < by.fresh.size(); ++a) {
            for (std::size_t b = 0; b < a; ++b)
              if (by.fresh[a] == by.fresh[b]) return err(k, "freshness", "fresh names must be distinct");
            for (const auto& m : need)
              if (occurs_var(s[m], by.fresh[a]))
                return err(k, "freshness", "'" + by.fresh[a] + "' occurs in the instance of " + m);
          }
          Substitution sp = s;
          for (std::size_t a = 0; a < by.fresh.size(); ++a) sp[r->fresh[a]] = var(by.fresh[a]);
          if (!same(c.norm[by.i - 1], c.normal(substitute(r->premise(), sp))))
            return err(k, "rule-shape", "step " + std::to_string(by.i) + " is not the declared premise");
          if (!same(f, c.normal(substitute(r->conclusion(), s))))
            return err(k, "rule-shape", "not the declared conclusion");
          break;
        }
      }
      c.norm.push_back(f);
    }
  } catch (const std::exception& e) {
    return err(k, "malformed", e.what());
  }
  if (p.steps.empty()) return err(0, "empty", "proof has no steps");
  return std::nullopt;
}

namespace {

bool covered(const Formula& c, const std::vector<Formula>& gamma) {
  for (const auto& g : gamma)
    if (same(g, c)) return true;
  return c->kind == Kind::And && covered(c->a, gamma) && covered(c->b, gamma);
}

}  // namespace

std::optional<ProofError> check_gamma_derivation(const std::vector<Formula>& gamma, const Formula& phi,
                                                 const Proof& proof) {
  if (proof.steps.empty()) return ProofError{0, "empty", "proof has no steps"};
  int last = static_cast<int>(proof.steps.size());
  bool nab = proof.system == System::Nabla;
  auto norm = [&](const Formula& f) { return nab ? f : desugar(f); };
  Formula fin = norm(proof.steps.back().formula);
  Formula target = norm(phi);
  bool shaped = false;
  if (fin->kind == Kind::Implies && same(fin->b, target) && !gamma.empty()) {
    const Formula& u = fin->a;
    Formula inner;
    if (nab && u->kind == Kind::Univ) inner = u->a;
    if (!nab && u->kind == Kind::Simp && u->a->kind == Kind::Top) inner = u->b;
    if (inner) {
      std::vector<Formula> g;
      for (const auto& x : gamma) g.push_back(norm(x));
      shaped = covered(inner, g);
    }
  }
  if (gamma.empty() && same(fin, target)) shaped = true;
  if (!shaped) return ProofError{last, "shape-mismatch", "final formula is not [A](conjunction of premises) -> phi"};
  return check_proof(proof, {}, proof.system);
}

Proof substitute_proof(const Proof& p, const Substitution& s) {
  Proof q = p;
  for (auto& f : q.premises) f = substitute(f, s);
  for (auto& st : q.steps) {
    st.formula = substitute(st.formula, s);
    if (st.by.subst)
      for (auto& [k, v] : *st.by.subst) v = substitute(v, s);
  }
  return q;
}

}  // namespace ms2ic
