#include "ms2ic/algebras.hpp"

#include <functional>

#include "ms2ic/calculus.hpp"

namespace ms2ic {

Algebra::Algebra(int n) : atoms(n) {
  if (n < 0 || n > 6) throw AlgebraError("atom count must be between 0 and 6");
  prec.assign(elements(), 0);
  diamond.resize(elements());
  for (int a = 0; a < elements(); ++a) diamond[a] = a;
}

void Algebra::set_prec(int a, int b, bool on) {
  if (on) prec[a] |= std::uint64_t{1} << b;
  else prec[a] &= ~(std::uint64_t{1} << b);
}

Algebra Algebra::order(int n) {
  Algebra a(n);
  for (int x = 0; x < a.elements(); ++x)
    for (int y = 0; y < a.elements(); ++y)
      if ((x & ~y) == 0) a.set_prec(x, y);
  return a;
}

namespace {

bool leq(int a, int b) { return (a & ~b) == 0; }
std::string el(int a) { return std::to_string(a); }

template <typename F>
bool first(int m, int arity, F&& f) {
  // calls f on every tuple until it returns true
  std::vector<int> t(arity, 0);
  while (true) {
    if (f(t)) return true;
    int i = 0;
    while (i < arity && ++t[i] == m) t[i++] = 0;
    if (i == arity) return false;
  }
}

}  // namespace

Report check_contact(const Algebra& A) {
  Report rep;
  int m = A.elements(), one = A.top();
  if (!A.precedes(0, 0)) rep.violations.push_back({"S1", {"0", "0"}});
  else if (!A.precedes(one, one)) rep.violations.push_back({"S1", {el(one), el(one)}});
  std::vector<int> w;
  auto add = [&](const char* c) {
    std::vector<std::string> s;
    for (int x : w) s.push_back(el(x));
    rep.violations.push_back({c, s});
  };
  if (first(m, 3, [&](const std::vector<int>& t) {
        int a = t[0], b = t[1], c = t[2];
        if (A.precedes(a, b) && A.precedes(a, c) && !A.precedes(a, b & c)) { w = {a, b, c}; return true; }
        return false;
      }))
    add("S2");
  if (first(m, 3, [&](const std::vector<int>& t) {
        int a = t[0], b = t[1], c = t[2];
        if (A.precedes(a, c) && A.precedes(b, c) && !A.precedes(a | b, c)) { w = {a, b, c}; return true; }
        return false;
      }))
    add("S3");
  if (first(m, 4, [&](const std::vector<int>& t) {
        int a = t[0], b = t[1], c = t[2], d = t[3];
        if (leq(a, b) && A.precedes(b, c) && leq(c, d) && !A.precedes(a, d)) { w = {a, b, c, d}; return true; }
        return false;
      }))
    add("S4");
  if (first(m, 2, [&](const std::vector<int>& t) {
        if (A.precedes(t[0], t[1]) && !leq(t[0], t[1])) { w = {t[0], t[1]}; return true; }
        return false;
      }))
    add("S5");
  if (first(m, 2, [&](const std::vector<int>& t) {
        if (A.precedes(t[0], t[1]) && !A.precedes(A.complement(t[1]), A.complement(t[0]))) {
          w = {t[0], t[1]};
          return true;
        }
        return false;
      }))
    add("S6");
  return rep;
}

Report check_compingent(const Algebra& A) {
  Report rep;
  int m = A.elements();
  for (int a = 0; a < m; ++a) {
    bool bad = false;
    for (int b = 0; b < m && !bad; ++b) {
      if (!A.precedes(a, b)) continue;
      bool found = false;
      for (int c = 0; c < m && !found; ++c) found = A.precedes(a, c) && A.precedes(c, b);
      if (!found) { rep.violations.push_back({"S7", {el(a), el(b)}}); bad = true; }
    }
    if (bad) break;
  }
  for (int a = 1; a < m; ++a) {
    bool found = false;
    for (int b = 1; b < m && !found; ++b) found = A.precedes(b, a);
    if (!found) { rep.violations.push_back({"S8", {el(a)}}); break; }
  }
  return rep;
}

Report check_s9(const Algebra& A) {
  Report rep;
  int m = A.elements();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (!A.precedes(a, b)) continue;
      bool found = false;
      for (int c = 0; c < m && !found; ++c) found = A.precedes(c, c) && A.precedes(a, c) && A.precedes(c, b);
      if (!found) {
        rep.violations.push_back({"S9", {el(a), el(b)}});
        return rep;
      }
    }
  return rep;
}

std::vector<int> box_dual_table(const Algebra& A) {
  std::vector<int> box(A.elements());
  for (int a = 0; a < A.elements(); ++a) box[a] = A.complement(A.diamond[A.complement(a)]);
  return box;
}

namespace {

bool upper_cont(const Algebra& A, const std::vector<int>& op) {
  for (int a = 0; a < A.elements(); ++a) {
    int meet = A.top();
    for (int b = 0; b < A.elements(); ++b)
      if (A.precedes(a, b)) meet &= op[b];
    if (meet != op[a]) return false;
  }
  return true;
}

bool lower_cont(const Algebra& A, const std::vector<int>& op) {
  for (int a = 0; a < A.elements(); ++a) {
    int join = 0;
    for (int b = 0; b < A.elements(); ++b)
      if (A.precedes(b, a)) join |= op[b];
    if (join != op[a]) return false;
  }
  return true;
}

}  // namespace

bool box_upper_continuous(const Algebra& A) { return upper_cont(A, box_dual_table(A)); }
bool box_lower_continuous(const Algebra& A) { return lower_cont(A, box_dual_table(A)); }

OperatorFlags check_operator(const Algebra& A) {
  OperatorFlags fl;
  int m = A.elements();
  const auto& d = A.diamond;
  fl.de_vries_additive = d[0] == 0;
  for (int a1 = 0; a1 < m && fl.de_vries_additive; ++a1)
    for (int b1 = 0; b1 < m && fl.de_vries_additive; ++b1) {
      if (!A.precedes(a1, b1)) continue;
      for (int a2 = 0; a2 < m && fl.de_vries_additive; ++a2)
        for (int b2 = 0; b2 < m && fl.de_vries_additive; ++b2)
          if (A.precedes(a2, b2) && !A.precedes(d[a1 | a2], d[b1] | d[b2])) fl.de_vries_additive = false;
    }
  fl.finitely_additive = d[0] == 0;
  for (int a = 0; a < m && fl.finitely_additive; ++a)
    for (int b = 0; b < m && fl.finitely_additive; ++b)
      if (d[a | b] != (d[a] | d[b])) fl.finitely_additive = false;
  fl.proximity_preserving = true;
  fl.order_preserving = true;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (A.precedes(a, b) && !A.precedes(d[a], d[b])) fl.proximity_preserving = false;
      if (leq(a, b) && !leq(d[a], d[b])) fl.order_preserving = false;
    }
  fl.upper_continuous = upper_cont(A, d);
  fl.lower_continuous = lower_cont(A, d);
  return fl;
}

int algebra_truth(const Algebra& A, const AlgebraValuation& v, const Formula& f) {
  auto ev = [&](const Formula& g) { return algebra_truth(A, v, g); };
  int one = A.top();
  auto strict = [&](int a, int b) { return A.precedes(a, b) ? one : 0; };
  switch (f->kind) {
    case Kind::Var: {
      auto it = v.find(f->name);
      if (it == v.end()) throw AlgebraError("unbound variable '" + f->name + "'");
      if (it->second < 0 || it->second > one) throw AlgebraError("valuation out of range");
      return it->second;
    }
    case Kind::Bot: return 0;
    case Kind::Top: return one;
    case Kind::Not: return A.complement(ev(f->a));
    case Kind::And: return ev(f->a) & ev(f->b);
    case Kind::Or: return ev(f->a) | ev(f->b);
    case Kind::Implies: return (A.complement(ev(f->a)) | ev(f->b)) & one;
    case Kind::Iff: return A.complement(ev(f->a) ^ ev(f->b));
    case Kind::Simp: return strict(ev(f->a), ev(f->b));
    case Kind::Nabla: return strict(A.complement(ev(f->a)), ev(f->b));
    case Kind::Delta: return A.complement(strict(ev(f->a), A.complement(ev(f->b))));
    case Kind::Univ: return strict(one, ev(f->a));
    case Kind::Exist: return A.complement(strict(one, A.complement(ev(f->a))));
    case Kind::Dia: return A.diamond[ev(f->a)];
    case Kind::Box: return A.complement(A.diamond[A.complement(ev(f->a))]);
    default: throw AlgebraError("hybrid construct in algebraic semantics: " + print(f));
  }
}

std::optional<AlgebraValuation> algebra_validates(const Algebra& A, const Formula& f, int cap) {
  auto vs = variables(f);
  std::vector<std::string> vars(vs.begin(), vs.end());
  if (cap < 0) cap = 3;
  if (static_cast<int>(vars.size()) > cap)
    throw AlgebraError("formula has " + std::to_string(vars.size()) + " variables, above the cap of " +
                       std::to_string(cap));
  if (A.atoms * static_cast<int>(vars.size()) > 24) throw AlgebraError("valuation space too large");
  AlgebraValuation v;
  std::optional<AlgebraValuation> bad;
  int m = A.elements();
  first(m, static_cast<int>(vars.size()), [&](const std::vector<int>& t) {
    for (std::size_t i = 0; i < vars.size(); ++i) v[vars[i]] = t[i];
    if (algebra_truth(A, v, f) != A.top()) { bad = v; return true; }
    return false;
  });
  return bad;
}

std::optional<PiWitness> check_pi_sentence(const Algebra& A, const Pi2Rule& rule) {
  int m = A.elements();
  int k = static_cast<int>(rule.metavars.size());
  int fk = static_cast<int>(rule.fresh.size());
  std::optional<PiWitness> bad;
  AlgebraValuation v;
  first(m, k + 1, [&](const std::vector<int>& t) {
    for (int i = 0; i < k; ++i) v[rule.metavars[i]] = t[i];
    int z = t[k];
    if (leq(algebra_truth(A, v, rule.G), z)) return false;
    bool exists = first(m, fk, [&](const std::vector<int>& y) {
      for (int i = 0; i < fk; ++i) v[rule.fresh[i]] = y[i];
      return !leq(algebra_truth(A, v, rule.F), z);
    });
    if (!exists) {
      bad = PiWitness{std::vector<int>(t.begin(), t.begin() + k), z};
      return true;
    }
    return false;
  });
  return bad;
}

std::vector<Algebra> all_contact_relations(int n) {
  if (n > 2) throw AlgebraError("exhaustive contact relations only up to 2 atoms");
  Algebra base(n);
  int m = base.elements();
  std::vector<Algebra> out;
  std::uint64_t total = std::uint64_t{1} << (m * m);
  for (std::uint64_t r = 0; r < total; ++r) {
    Algebra a(n);
    for (int x = 0; x < m; ++x) a.prec[x] = (r >> (x * m)) & ((std::uint64_t{1} << m) - 1);
    if (check_contact(a).ok()) out.push_back(a);
  }
  return out;
}

}  // namespace ms2ic
