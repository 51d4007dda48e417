#include "ms2ic/sqema.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "ms2ic/calculus.hpp"
#include "ms2ic/semantics.hpp"

namespace ms2ic {

namespace {

const char* const kReserved = "i";

Formula nnf(const Formula& f, bool n) {
  auto pos = [](const Formula& g) { return nnf(g, false); };
  auto ng = [](const Formula& g) { return nnf(g, true); };
  switch (f->kind) {
    case Kind::Var:
    case Kind::Nominal: return n ? neg(f) : f;
    case Kind::Bot: return n ? top() : f;
    case Kind::Top: return n ? bot() : f;
    case Kind::Not: return nnf(f->a, !n);
    case Kind::And: return n ? disj(ng(f->a), ng(f->b)) : conj(pos(f->a), pos(f->b));
    case Kind::Or: return n ? conj(ng(f->a), ng(f->b)) : disj(pos(f->a), pos(f->b));
    case Kind::Implies: return n ? conj(pos(f->a), ng(f->b)) : disj(ng(f->a), pos(f->b));
    case Kind::Iff:
      return n ? disj(conj(pos(f->a), ng(f->b)), conj(pos(f->b), ng(f->a)))
               : conj(disj(ng(f->a), pos(f->b)), disj(ng(f->b), pos(f->a)));
    case Kind::Simp: return n ? delta(pos(f->a), ng(f->b)) : nabla(ng(f->a), pos(f->b));
    case Kind::Univ: return n ? exist(ng(f->a)) : univ(pos(f->a));
    case Kind::Exist: return n ? univ(ng(f->a)) : exist(pos(f->a));
    case Kind::Box: return n ? dia(ng(f->a)) : box(pos(f->a));
    case Kind::Dia: return n ? box(ng(f->a)) : dia(pos(f->a));
    case Kind::Nabla: return n ? delta(ng(f->a), ng(f->b)) : nabla(pos(f->a), pos(f->b));
    case Kind::Delta: return n ? nabla(ng(f->a), ng(f->b)) : delta(pos(f->a), pos(f->b));
    case Kind::UnivInv: return unary(n ? Kind::ExistInv : Kind::UnivInv, nnf(f->a, n));
    case Kind::ExistInv: return unary(n ? Kind::UnivInv : Kind::ExistInv, nnf(f->a, n));
    case Kind::BoxInv: return unary(n ? Kind::DiaInv : Kind::BoxInv, nnf(f->a, n));
    case Kind::DiaInv: return unary(n ? Kind::BoxInv : Kind::DiaInv, nnf(f->a, n));
    case Kind::NablaInv1: return binary(n ? Kind::DeltaInv1 : Kind::NablaInv1, nnf(f->a, n), nnf(f->b, n));
    case Kind::NablaInv2: return binary(n ? Kind::DeltaInv2 : Kind::NablaInv2, nnf(f->a, n), nnf(f->b, n));
    case Kind::DeltaInv1: return binary(n ? Kind::NablaInv1 : Kind::DeltaInv1, nnf(f->a, n), nnf(f->b, n));
    case Kind::DeltaInv2: return binary(n ? Kind::NablaInv2 : Kind::DeltaInv2, nnf(f->a, n), nnf(f->b, n));
  }
  return f;
}

Formula distribute(const Formula& f) {
  int ar = arity(f->kind);
  Formula a = ar >= 1 ? distribute(f->a) : nullptr;
  Formula b = ar == 2 ? distribute(f->b) : nullptr;
  switch (f->kind) {
    case Kind::And:
      if (a->kind == Kind::Or) return disj(distribute(conj(a->a, b)), distribute(conj(a->b, b)));
      if (b->kind == Kind::Or) return disj(distribute(conj(a, b->a)), distribute(conj(a, b->b)));
      return conj(a, b);
    case Kind::Exist:
    case Kind::Dia:
      if (a->kind == Kind::Or) return disj(distribute(unary(f->kind, a->a)), distribute(unary(f->kind, a->b)));
      return unary(f->kind, a);
    case Kind::Delta:
      if (a->kind == Kind::Or) return disj(distribute(delta(a->a, b)), distribute(delta(a->b, b)));
      if (b->kind == Kind::Or) return disj(distribute(delta(a, b->a)), distribute(delta(a, b->b)));
      return delta(a, b);
    default:
      if (ar == 0) return f;
      if (ar == 1) return unary(f->kind, a);
      return binary(f->kind, a, b);
  }
}

void flatten(const Formula& f, Kind k, std::vector<Formula>& out) {
  if (f->kind == k) {
    flatten(f->a, k, out);
    flatten(f->b, k, out);
  } else {
    out.push_back(f);
  }
}

Formula left_assoc(const Formula& f) {
  if (f->kind == Kind::And || f->kind == Kind::Or) {
    std::vector<Formula> parts;
    flatten(f, f->kind, parts);
    Formula r = left_assoc(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) r = binary(f->kind, r, left_assoc(parts[i]));
    return r;
  }
  int ar = arity(f->kind);
  if (ar == 0) return f;
  if (ar == 1) return unary(f->kind, left_assoc(f->a));
  return binary(f->kind, left_assoc(f->a), left_assoc(f->b));
}

Formula join_or(const std::vector<Formula>& v) {
  if (v.empty()) return bot();
  Formula r = v[0];
  for (std::size_t i = 1; i < v.size(); ++i) r = disj(r, v[i]);
  return r;
}

Formula join_and(const std::vector<Formula>& v) {
  if (v.empty()) return top();
  Formula r = v[0];
  for (std::size_t i = 1; i < v.size(); ++i) r = conj(r, v[i]);
  return r;
}

bool positive_in(const Formula& f, const std::string& p) {
  if (f->kind == Kind::Var) return f->name == p;
  if (f->kind == Kind::Not && f->a->kind == Kind::Var) return false;
  int ar = arity(f->kind);
  return (ar >= 1 && positive_in(f->a, p)) || (ar == 2 && positive_in(f->b, p));
}

Formula rewrite(const Formula& f, const std::function<Formula(const Formula&)>& leaf) {
  if (Formula r = leaf(f)) return r;
  int ar = arity(f->kind);
  if (ar == 0) return f;
  if (ar == 1) return unary(f->kind, rewrite(f->a, leaf));
  return binary(f->kind, rewrite(f->a, leaf), rewrite(f->b, leaf));
}

bool sys_has_nominal(const SqSystem& s, const std::string& n) {
  for (const auto& f : s)
    if (nominals(f).count(n)) return true;
  return false;
}

// the disjunct list of f when f has the shape phi ∨ p with p not in phi
std::optional<std::vector<Formula>> ackermann_form(const Formula& f, const std::string& p) {
  std::vector<Formula> l;
  flatten(f, Kind::Or, l);
  int hit = -1;
  for (int k = 0; k < static_cast<int>(l.size()); ++k) {
    if (l[k]->kind == Kind::Var && l[k]->name == p) {
      if (hit >= 0) return std::nullopt;
      hit = k;
    } else if (occurs_var(l[k], p)) {
      return std::nullopt;
    }
  }
  if (hit < 0) return std::nullopt;
  l.erase(l.begin() + hit);
  return l;
}

}  // namespace

Formula nnf_not(const Formula& f) { return nnf(f, true); }

std::vector<Formula> disjuncts(const Formula& f) {
  std::vector<Formula> out;
  flatten(f, Kind::Or, out);
  return out;
}

std::vector<Formula> phase1(const Formula& axiom) {
  std::vector<Formula> out;
  for (const auto& d : disjuncts(distribute(nnf_not(axiom)))) out.push_back(left_assoc(d));
  return out;
}

SqSystem apply_rule(const SqSystem& sys, const std::string& rule, int index, int disjunct, const std::string& var,
                    const std::vector<std::string>& minted) {
  if (rule == "polarity") {
    Formula pv = ms2ic::var(var);
    SqSystem out;
    for (const auto& f : sys)
      out.push_back(rewrite(f, [&](const Formula& g) -> Formula {
        if (g->kind == Kind::Not && g->a->kind == Kind::Var && g->a->name == var) return pv;
        if (g->kind == Kind::Var && g->name == var) return neg(pv);
        return nullptr;
      }));
    return out;
  }
  if (rule == "ackermann") {
    std::vector<Formula> phis;
    SqSystem keep;
    for (const auto& f : sys) {
      if (auto rest = ackermann_form(f, var)) {
        phis.push_back(join_or(*rest));
      } else if (positive_in(f, var)) {
        throw SqemaError("Ackermann not applicable: '" + var + "' occurs positively in " + print(f));
      } else {
        keep.push_back(f);
      }
    }
    Formula repl = join_and(phis);
    SqSystem out;
    for (const auto& f : keep)
      out.push_back(rewrite(f, [&](const Formula& g) -> Formula {
        if (g->kind == Kind::Not && g->a->kind == Kind::Var && g->a->name == var) return repl;
        return nullptr;
      }));
    return out;
  }
  if (index < 0 || index >= static_cast<int>(sys.size())) throw SqemaError("formula index out of range");
  std::vector<Formula> l = disjuncts(sys[index]);
  if (disjunct < 0 || disjunct >= static_cast<int>(l.size())) throw SqemaError("disjunct index out of range");
  Formula d = l[disjunct];
  std::vector<Formula> rest = l;
  rest.erase(rest.begin() + disjunct);
  Formula phi = join_or(rest);
  auto with = [&](const Formula& x) { return rest.empty() ? x : disj(phi, x); };
  auto shape = [&](Kind k) {
    if (d->kind != k) throw SqemaError(rule + "-rule: shape mismatch at " + print(sys[index]));
  };
  std::vector<Formula> repl;
  if (rule == "and") {
    shape(Kind::And);
    repl = {with(d->a), with(d->b)};
  } else if (rule == "univ") {
    shape(Kind::Univ);
    repl = {disj(unary(Kind::UnivInv, phi), d->a)};
  } else if (rule == "box") {
    shape(Kind::Box);
    repl = {disj(unary(Kind::BoxInv, phi), d->a)};
  } else if (rule == "nabla1") {
    shape(Kind::Nabla);
    repl = {disj(binary(Kind::NablaInv1, phi, d->b), d->a)};
  } else if (rule == "nabla2") {
    shape(Kind::Nabla);
    repl = {disj(binary(Kind::NablaInv2, d->a, phi), d->b)};
  } else if (rule == "exist" || rule == "dia" || rule == "delta") {
    shape(rule == "exist" ? Kind::Exist : rule == "dia" ? Kind::Dia : Kind::Delta);
    if (rest.size() != 1 || rest[0]->kind != Kind::Not || rest[0]->a->kind != Kind::Nominal)
      throw SqemaError(rule + "-rule: premise must be headed by a negated nominal");
    std::size_t need = rule == "delta" ? 2 : 1;
    if (minted.size() != need) throw SqemaError(rule + "-rule: expected " + std::to_string(need) + " nominals");
    for (const auto& k : minted)
      if (sys_has_nominal(sys, k) || k == kReserved) throw SqemaError("nominal collision: #" + k);
    if (need == 2 && minted[0] == minted[1]) throw SqemaError("nominal collision: #" + minted[0]);
    Formula k1 = nominal(minted[0]);
    if (rule == "delta") {
      Formula k2 = nominal(minted[1]);
      repl = {disj(rest[0], delta(k1, k2)), disj(neg(k1), d->a), disj(neg(k2), d->b)};
    } else {
      repl = {disj(rest[0], unary(d->kind, k1)), disj(neg(k1), d->a)};
    }
  } else {
    throw SqemaError("unknown rule '" + rule + "'");
  }
  SqSystem out(sys.begin(), sys.begin() + index);
  out.insert(out.end(), repl.begin(), repl.end());
  out.insert(out.end(), sys.begin() + index + 1, sys.end());
  return out;
}

bool replay(const SystemTrace& t) {
  SqSystem cur = t.initial;
  try {
    for (const auto& e : t.steps) {
      if (cur.size() != e.before.size()) return false;
      for (std::size_t i = 0; i < cur.size(); ++i)
        if (!same(cur[i], e.before[i])) return false;
      cur = apply_rule(cur, e.rule, e.index, e.disjunct, e.var, e.minted);
      if (cur.size() != e.after.size()) return false;
      for (std::size_t i = 0; i < cur.size(); ++i)
        if (!same(cur[i], e.after[i])) return false;
    }
  } catch (const SqemaError&) {
    return false;
  }
  if (cur.size() != t.final.size()) return false;
  for (std::size_t i = 0; i < cur.size(); ++i)
    if (!same(cur[i], t.final[i])) return false;
  return true;
}

// ── standard translation ──

namespace {

struct Translator {
  int counter = 0;
  std::string fresh() { return "v" + std::to_string(++counter); }

  static std::string nom(const std::string& n) { return n == kReserved ? "x" : "y_" + n; }

  Fo st(const Formula& f, const std::string& x) {
    using namespace fo;
    auto two = [&](bool all, bool inv1, bool inv2, const Formula& a, const Formula& b, bool nega) {
      std::string y = fresh(), z = fresh();
      Fo rel = inv1 ? t(y, x, z) : inv2 ? t(z, y, x) : t(x, y, z);
      Fo sa = st(a, y);
      if (nega) sa = neg(sa);
      Fo body = all ? implies(rel, disj(sa, st(b, z))) : conj(conj(rel, sa), st(b, z));
      return all ? forall(y, forall(z, body)) : exists(y, exists(z, body));
    };
    auto one = [&](bool all, bool fwd, bool isE, const Formula& a) {
      std::string y = fresh();
      Fo rel = isE ? (fwd ? e(x, y) : e(y, x)) : (fwd ? s(x, y) : s(y, x));
      return all ? forall(y, implies(rel, st(a, y))) : exists(y, conj(rel, st(a, y)));
    };
    switch (f->kind) {
      case Kind::Var: return pred(f->name, x);
      case Kind::Nominal: return eq(x, nom(f->name));
      case Kind::Bot: return falsity();
      case Kind::Top: return truth();
      case Kind::Not: return neg(st(f->a, x));
      case Kind::And: return conj(st(f->a, x), st(f->b, x));
      case Kind::Or: return disj(st(f->a, x), st(f->b, x));
      case Kind::Implies: return implies(st(f->a, x), st(f->b, x));
      case Kind::Iff: return iff(st(f->a, x), st(f->b, x));
      case Kind::Simp: return two(true, false, false, f->a, f->b, true);
      case Kind::Nabla: return two(true, false, false, f->a, f->b, false);
      case Kind::Delta: return two(false, false, false, f->a, f->b, false);
      case Kind::NablaInv1: return two(true, true, false, f->a, f->b, false);
      case Kind::DeltaInv1: return two(false, true, false, f->a, f->b, false);
      case Kind::NablaInv2: return two(true, false, true, f->a, f->b, false);
      case Kind::DeltaInv2: return two(false, false, true, f->a, f->b, false);
      case Kind::Univ: return one(true, true, true, f->a);
      case Kind::Exist: return one(false, true, true, f->a);
      case Kind::UnivInv: return one(true, false, true, f->a);
      case Kind::ExistInv: return one(false, false, true, f->a);
      case Kind::Box: return one(true, true, false, f->a);
      case Kind::Dia: return one(false, true, false, f->a);
      case Kind::BoxInv: return one(true, false, false, f->a);
      case Kind::DiaInv: return one(false, false, false, f->a);
    }
    throw SqemaError("unbound construct in standard translation");
  }
};

bool nominal_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

Fo standard_translation(const Formula& f, const std::string& var) { return Translator{}.st(f, var); }

Fo phase3(const std::vector<Formula>& pures) {
  Translator tr;
  Fo body;
  std::set<std::string> all;
  for (auto it = pures.rbegin(); it != pures.rend(); ++it) {
    Fo part = fo::exists("x0", tr.st(neg(*it), "x0"));
    body = body ? fo::conj(part, body) : part;
    for (const auto& n : nominals(*it)) all.insert(n);
  }
  if (!body) return fo::truth();
  std::vector<std::string> ns;
  for (const auto& n : all)
    if (n != kReserved) ns.push_back(n);
  std::sort(ns.begin(), ns.end(), nominal_less);
  for (auto it = ns.rbegin(); it != ns.rend(); ++it) body = fo::forall(Translator::nom(*it), body);
  return body;
}

// ── strategy ──

namespace {

struct Search {
  int bound;
  int steps = 0;
  int minted = 0;

  std::string mint(const SqSystem& s) {
    while (true) {
      std::string n = "j" + std::to_string(++minted);
      if (!sys_has_nominal(s, n)) return n;
    }
  }

  bool step(SqSystem& s, std::vector<TraceEntry>& tr, const std::string& rule, int idx, int dj,
            const std::string& var, std::vector<std::string> minted_names) {
    if (++steps > bound) return false;
    TraceEntry e{rule, idx, dj, var, minted_names, s, {}};
    s = apply_rule(s, rule, idx, dj, var, minted_names);
    e.after = s;
    tr.push_back(std::move(e));
    return true;
  }

  // moves every positive occurrence of p into a formula of the shape phi ∨ p
  bool isolate(SqSystem& s, std::vector<TraceEntry>& tr, const std::string& p) {
    while (true) {
      int idx = -1;
      for (int k = 0; k < static_cast<int>(s.size()); ++k)
        if (positive_in(s[k], p) && !ackermann_form(s[k], p)) {
          idx = k;
          break;
        }
      if (idx < 0) return true;
      auto l = disjuncts(s[idx]);
      int dj = -1;
      for (int k = 0; k < static_cast<int>(l.size()); ++k) {
        if (!occurs_var(l[k], p)) continue;
        if (dj >= 0) return false;
        dj = k;
      }
      const Formula& d = l[dj];
      bool nom_head = l.size() == 2 && l[1 - dj]->kind == Kind::Not && l[1 - dj]->a->kind == Kind::Nominal;
      std::string rule;
      std::vector<std::string> names;
      switch (d->kind) {
        case Kind::And: rule = "and"; break;
        case Kind::Univ: rule = "univ"; break;
        case Kind::Box: rule = "box"; break;
        case Kind::Nabla:
          if (!occurs_var(d->b, p)) rule = "nabla1";
          else if (!occurs_var(d->a, p)) rule = "nabla2";
          else return false;
          break;
        case Kind::Exist:
        case Kind::Dia:
          if (!nom_head) return false;
          rule = d->kind == Kind::Exist ? "exist" : "dia";
          names = {mint(s)};
          break;
        case Kind::Delta:
          if (!nom_head) return false;
          rule = "delta";
          names.push_back(mint(s));
          names.push_back(mint(s));
          break;
        default: return false;
      }
      if (!step(s, tr, rule, idx, dj, "", names)) return false;
    }
  }

  bool solve(SqSystem& s, std::vector<TraceEntry>& tr) {
    std::set<std::string> vs;
    for (const auto& f : s)
      for (const auto& v : variables(f)) vs.insert(v);
    if (vs.empty()) return true;
    for (const auto& p : vs) {
      for (bool sw : {false, true}) {
        SqSystem c = s;
        auto t = tr;
        int saved = minted;
        bool ok = true;
        if (sw) ok = step(c, t, "polarity", 0, 0, p, {});
        ok = ok && isolate(c, t, p) && step(c, t, "ackermann", 0, 0, p, {});
        if (ok && solve(c, t)) {
          s = std::move(c);
          tr = std::move(t);
          return true;
        }
        minted = saved;
        if (steps > bound) return false;
      }
    }
    return false;
  }
};

}  // namespace

SqemaResult run_sqema(const Formula& axiom, int step_bound) {
  SqemaResult res;
  res.disjuncts = phase1(axiom);
  Search search{step_bound};
  std::vector<Formula> pures;
  res.ok = true;
  for (const auto& a : res.disjuncts) {
    SystemTrace st;
    st.initial = {disj(neg(nominal(kReserved)), a)};
    SqSystem s = st.initial;
    st.solved = search.solve(s, st.steps);
    st.final = st.solved ? s : st.initial;
    if (!st.solved && res.ok) {
      res.ok = false;
      std::string sys;
      for (const auto& f : st.final) sys += "\n  " + print(f);
      res.failure = search.steps > step_bound ? "step bound exceeded" : "stuck system:" + sys;
    }
    pures.push_back(join_and(st.final));
    res.systems.push_back(std::move(st));
  }
  if (res.ok) {
    res.pure = join_or(pures);
    res.fo = phase3(pures);
  }
  return res;
}

// ── named axioms and printed correspondents ──

std::optional<Formula> correspondence_axiom(const std::string& name) {
  if (name == "A5-lr") return parse("nabla(p, q) -> nabla(q, p)");
  if (name == "A10-lr") return parse("nabla(p, q) -> [A] nabla(p, q)");
  if (name == "A10-rl") return parse("[A] nabla(p, q) -> nabla(p, q)");
  if (const AxiomScheme* s = find_scheme(name, System::Nabla)) return s->tmpl;
  return std::nullopt;
}

std::vector<std::string> correspondence_axiom_names() {
  return {"A0", "A1", "A2", "A3", "A4", "A5", "A5-lr", "A8", "A9", "A10", "A10-lr", "A10-rl", "A11", "K", "Add"};
}

std::optional<Fo> printed_correspondent(const std::string& name) {
  static const std::map<std::string, std::string> table = {
      {"A0", "forall z. (E(x,z) <-> exists y. T(x,y,z))"},
      {"A1", "true"},
      {"A2", "true"},
      {"A3", "true"},
      {"A4", "T(x,x,x)"},
      {"A5", "forall y, z. (T(x,y,z) -> T(x,z,y))"},
      {"A5-lr", "forall y, z. (T(x,y,z) -> T(x,z,y))"},
      {"A8", "forall y, z. (E(x,y) & E(y,z) -> E(x,z))"},
      {"A9", "forall y, z. (E(x,y) & E(x,z) -> E(y,z))"},
      {"A10-lr", "forall y, z, w. (E(x,w) & T(w,y,z) -> T(x,y,z))"},
      {"K", "true"},
      {"Add", "forall y, z, w. (T(x,y,z) & S(z,w) -> exists u. (T(x,u,w) & S(y,u)))"},
  };
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return parse_fo(it->second);
}

std::optional<Disagreement> check_local_correspondence(const KripkeFrame& f, int world, const Formula& axiom,
                                                       const Fo& fo) {
  auto bad = local_truth(AnyFrame{f}, world, axiom, Mode::Appendix, kDefaultVariableCap);
  bool modal = !bad;
  bool first = eval_fo(f, fo, {{"x", world}});
  if (modal == first) return std::nullopt;
  return Disagreement{modal, first, bad};
}

}  // namespace ms2ic
