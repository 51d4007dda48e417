#include "ms2ic/calculus.hpp"

namespace ms2ic {

namespace {

Justification J(By k, std::string name = {}, std::optional<Substitution> s = {}, int i = 0, int j = 0) {
  Justification r;
  r.kind = k;
  r.name = std::move(name);
  r.subst = std::move(s);
  r.i = i;
  r.j = j;
  return r;
}

class Script {
 public:
  explicit Script(System s) { p_.system = s; }

  int add(const Formula& f, Justification j) {
    p_.steps.push_back({f, std::move(j)});
    return static_cast<int>(p_.steps.size());
  }
  int add(const std::string& f, Justification j) { return add(parse(f), std::move(j)); }

  int axiom(const std::string& f, const std::string& name, Substitution s) {
    return add(f, J(By::Axiom, name, std::move(s)));
  }
  int pc(const Formula& f) { return add(f, J(By::Axiom, "PC")); }
  int pc(const std::string& f) { return pc(parse(f)); }
  int mp(int i, int j) {
    // step j must be step i -> result
    Formula r = p_.steps[j - 1].formula->b;
    return add(r, J(By::MP, "", std::nullopt, i, j));
  }
  int mp(const std::string& f, int i, int j) { return add(f, J(By::MP, "", std::nullopt, i, j)); }
  int rule(By k, const std::string& f, int i) { return add(f, J(k, "", std::nullopt, i)); }

  // appends another script's steps, shifted; returns the index of its last step
  int include(const Proof& q) {
    int off = static_cast<int>(p_.steps.size());
    for (Step st : q.steps) {
      if (st.by.kind == By::MP) {
        st.by.i += off;
        st.by.j += off;
      } else if (st.by.kind != By::Premise && st.by.kind != By::Axiom) {
        st.by.i += off;
      }
      p_.steps.push_back(st);
    }
    return static_cast<int>(p_.steps.size());
  }

  const Formula& at(int i) const { return p_.steps[i - 1].formula; }
  Proof done() const { return p_; }

 private:
  Proof p_;
};

Substitution sub(std::initializer_list<std::pair<const char*, const char*>> l) {
  Substitution s;
  for (auto& [k, v] : l) s[k] = parse(v);
  return s;
}

Proof univ_box() {
  Script s(System::MS2IC);
  int add = s.axiom("(top ~> q) -> (box top ~> box q)", "Add", sub({{"phi", "top"}, {"psi", "q"}}));
  int t = s.pc("top");
  int bt = s.rule(By::N, "box top", t);
  int e = s.pc("box top -> (top <-> box top)");
  int eq = s.mp(bt, e);
  int cg = s.rule(By::Cong, "(top ~> box q) <-> (box top ~> box q)", eq);
  int t1 = s.pc(
      "((top ~> q) -> (box top ~> box q)) -> (((top ~> box q) <-> (box top ~> box q)) -> "
      "((top ~> q) -> (top ~> box q)))");
  int m1 = s.mp(add, t1);
  int lift = s.mp(cg, m1);
  int a4 = s.axiom("(top ~> box q) -> (top -> box q)", "A4", sub({{"phi", "top"}, {"psi", "box q"}}));
  int t2 = s.pc(
      "((top ~> q) -> (top ~> box q)) -> (((top ~> box q) -> (top -> box q)) -> ((top ~> q) -> box q))");
  int m2 = s.mp(lift, t2);
  s.mp("[A] q -> box q", a4, m2);
  return s.done();
}

Proof univ_congruence() {
  Script s(System::MS2IC);
  Proof ub = univ_box();
  int a = s.include(substitute_proof(ub, sub({{"q", "q -> r"}})));
  int b = s.include(substitute_proof(ub, sub({{"q", "r -> q"}})));
  int c = s.axiom("box (q -> r) -> (box q -> box r)", "K", sub({{"phi", "q"}, {"psi", "r"}}));
  int d = s.axiom("box (r -> q) -> (box r -> box q)", "K", sub({{"phi", "r"}, {"psi", "q"}}));
  int e = s.pc("(q <-> r) <-> ((q -> r) and (r -> q))");
  int f = s.rule(By::Cong, "([A] (q <-> r)) <-> (top ~> ((q -> r) and (r -> q)))", e);
  int g = s.axiom("(top ~> ((q -> r) and (r -> q))) <-> ((top ~> (q -> r)) and (top ~> (r -> q)))", "A3",
                  sub({{"phi", "top"}, {"psi", "q -> r"}, {"chi", "r -> q"}}));
  Formula goal = parse("[A] (q <-> r) -> (box q <-> box r)");
  std::vector<int> hyps = {a, b, c, d, f, g};
  Formula taut = goal;
  for (auto it = hyps.rbegin(); it != hyps.rend(); ++it) taut = implies(s.at(*it), taut);
  int cur = s.pc(taut);
  for (int h : hyps) cur = s.mp(h, cur);
  return s.done();
}

Proof k_instance() {
  Script s(System::MS2IC);
  s.axiom("box (p -> q) -> (box p -> box q)", "K", sub({{"phi", "p"}, {"psi", "q"}}));
  return s.done();
}

Proof univ_t() {
  Script s(System::MS2IC);
  int a4 = s.axiom("(top ~> q) -> (top -> q)", "A4", sub({{"phi", "top"}, {"psi", "q"}}));
  int t = s.pc("((top ~> q) -> (top -> q)) -> ([A] q -> q)");
  s.mp(a4, t);
  return s.done();
}

Proof rho7_example() {
  Script s(System::MS2ICu);
  int a4 = s.axiom("(p ~> q) -> (p -> q)", "A4", sub({{"phi", "p"}, {"psi", "q"}}));
  int t = s.pc("((p ~> q) -> (p -> q)) -> (((p ~> q) and p) -> q)");
  int pr = s.mp(a4, t);
  Justification j = J(By::Pi2, "rho7", sub({{"phi", "q"}, {"chi", "q"}}), pr);
  j.fresh = {"p"};
  s.add("q -> q", j);
  return s.done();
}

Proof uc_example() {
  Script s(System::MS2ICu);
  int pr = s.pc("((p ~> q) and box p) -> top");
  Justification j = J(By::Pi2, "UC", sub({{"phi", "q"}, {"chi", "top"}}), pr);
  j.fresh = {"p"};
  s.add("box q -> top", j);
  return s.done();
}

}  // namespace

std::vector<NamedProof> builtin_library() {
  return {
      {"univ_box", parse("[A] q -> box q"), univ_box()},
      {"univ_congruence", parse("[A] (q <-> r) -> (box q <-> box r)"), univ_congruence()},
      {"K_instance", parse("box (p -> q) -> (box p -> box q)"), k_instance()},
      {"univ_t", parse("[A] q -> q"), univ_t()},
      {"rho7_example", parse("q -> q"), rho7_example()},
      {"uc_example", parse("box q -> top"), uc_example()},
  };
}

}  // namespace ms2ic
