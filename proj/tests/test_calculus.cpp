#include <doctest.h>

#include <random>

#include "ms2ic/calculus.hpp"
#include "ms2ic/semantics.hpp"
#include "oracles.hpp"

using namespace ms2ic;

namespace {

Justification by(By k, std::string name = "", int i = 0, int j = 0) {
  Justification out;
  out.kind = k;
  out.name = std::move(name);
  out.i = i;
  out.j = j;
  return out;
}

Proof library(const std::string& name) {
  for (const auto& np : builtin_library())
    if (np.name == name) return np.proof;
  FAIL("missing script " << name);
  return {};
}

}  // namespace

TEST_CASE("scheme registry") {
  CHECK(scheme_names().size() == 13);
  CHECK(find_scheme("A4", System::MS2IC));
  CHECK_FALSE(find_scheme("A6", System::MS2IC));
  CHECK_FALSE(find_scheme("K", System::S2IC));
  CHECK_FALSE(find_scheme("A0", System::MS2IC));
  CHECK(find_scheme("A0", System::Nabla));
  CHECK(parse_system("MS2ICu") == System::MS2ICu);
  CHECK(system_name(System::Nabla) == "MS2IC-nabla");
  CHECK_THROWS(parse_system("S5"));
}

TEST_CASE("match_scheme") {
  const AxiomScheme& a4 = *find_scheme("A4", System::MS2IC);
  auto m = match_scheme(a4, parse("(r ~> s) -> (r -> s)"));
  REQUIRE(m);
  CHECK(same(m->at("phi"), var("r")));
  CHECK(same(m->at("psi"), var("s")));
  auto k = match_scheme(*find_scheme("K", System::MS2IC), parse("box(q -> q) -> (box q -> box q)"));
  REQUIRE(k);
  CHECK(same(k->at("phi"), var("q")));
  CHECK(same(k->at("psi"), var("q")));
  CHECK_FALSE(match_scheme(a4, parse("(r ~> s) -> (s -> r)")));
  // metavariables bind whole subformulas
  auto big = match_scheme(a4, parse("(box r ~> [A] s) -> (box r -> [A] s)"));
  REQUIRE(big);
  CHECK(same(big->at("psi"), desugar(parse("[A] s"))));
}

TEST_CASE("tautologies over modal atoms") {
  CHECK(is_tautology(parse("p -> p")));
  CHECK(is_tautology(parse("box q or not box q")));
  CHECK(is_tautology(parse("(p ~> q) and r -> r")));
  CHECK_FALSE(is_tautology(parse("box q -> q")));
  CHECK_FALSE(is_tautology(parse("p ~> p")));
}

TEST_CASE("three-step proof with R and N") {
  Proof p;
  p.system = System::MS2IC;
  p.premises = {var("q")};
  p.steps = {{parse("q"), by(By::Premise)},
             {parse("[A] q"), by(By::R, "", 1)},
             {parse("box [A] q"), by(By::N, "", 2)}};
  CHECK_FALSE(check_proof(p));
  p.premises.clear();
  auto e = check_proof(p);
  REQUIRE(e);
  CHECK(e->step == 1);
  CHECK(e->kind == "premise-not-given");
  p.system = System::S2IC;
  p.premises = {var("q")};
  e = check_proof(p);
  REQUIRE(e);
  CHECK(e->step == 3);
}

TEST_CASE("every scheme checks as a one-step proof") {
  for (const auto& name : scheme_names()) {
    Proof p;
    Formula f;
    if (name == "PC") {
      f = parse("p or not p");
    } else if (name == "A0") {
      p.system = System::Nabla;
      f = find_scheme(name, System::Nabla)->tmpl;
    } else {
      f = find_scheme(name, System::MS2IC)->tmpl;
    }
    p.steps = {{f, by(By::Axiom, name)}};
    CHECK_MESSAGE(!check_proof(p), name);
  }
  for (const auto& s : nabla_schemes()) {
    Proof p;
    p.system = System::Nabla;
    p.steps = {{s.tmpl, by(By::Axiom, s.name)}};
    CHECK_MESSAGE(!check_proof(p), s.name);
  }
}

TEST_CASE("declared substitutions are checked") {
  Proof p;
  Justification j = by(By::Axiom, "A4");
  j.subst = Substitution{{"phi", var("r")}, {"psi", var("s")}};
  p.steps = {{parse("(r ~> s) -> (r -> s)"), j}};
  CHECK_FALSE(check_proof(p));
  p.steps[0].by.subst = Substitution{{"phi", var("s")}, {"psi", var("r")}};
  auto e = check_proof(p);
  REQUIRE(e);
  CHECK(e->kind == "scheme-mismatch");
  p.steps[0].by = by(By::Axiom, "A6");
  CHECK(check_proof(p)->kind == "unknown-scheme");
}

TEST_CASE("shipped library") {
  auto lib = builtin_library();
  std::set<std::string> names;
  for (const auto& np : lib) {
    names.insert(np.name);
    CHECK_MESSAGE(!check_proof(np.proof), np.name);
    REQUIRE(!np.proof.steps.empty());
    CHECK(same(np.proof.steps.back().formula, np.goal));
  }
  for (const char* n : {"univ_box", "univ_congruence", "K_instance", "univ_t"}) CHECK(names.count(n));
  CHECK(same(library("univ_box").steps.back().formula, parse("[A] q -> box q")));
  CHECK(same(library("univ_congruence").steps.back().formula, parse("[A] (q <-> r) -> (box q <-> box r)")));
}

TEST_CASE("library theorems are valid on modal contact frames") {
  for (const auto& np : builtin_library()) {
    if (np.proof.system == System::Nabla) continue;
    for (int n = 1; n <= 3; ++n)
      enumerate_modal_contact(n, [&](const ModalContactFrame& m) {
        REQUIRE_MESSAGE(oracle::valid(oracle::from(m), np.goal), np.name);
        return true;
      });
  }
}

TEST_CASE("substitution closure") {
  std::mt19937_64 rng(59);
  for (const auto& np : builtin_library()) {
    if (!np.proof.premises.empty()) continue;
    for (int i = 0; i < 20; ++i) {
      Substitution s{{"q", oracle::random_formula(rng, 2, {"s", "t"})},
                     {"r", oracle::random_formula(rng, 2, {"s", "t"})}};
      bool pi2 = false;
      for (const auto& st : np.proof.steps) pi2 = pi2 || st.by.kind == By::Pi2;
      Proof sp = substitute_proof(np.proof, s);
      if (!pi2) REQUIRE_MESSAGE(!check_proof(sp), np.name);
      CHECK(same(sp.steps.back().formula, substitute(np.goal, s)));
    }
  }
}

TEST_CASE("Pi2 steps") {
  Proof p = library("rho7_example");
  REQUIRE_FALSE(check_proof(p));
  int last = static_cast<int>(p.steps.size());

  Proof fresh = p;
  fresh.steps.back().by.fresh = {"q"};
  auto e = check_proof(fresh);
  REQUIRE(e);
  CHECK(e->step == last);
  CHECK(e->kind == "freshness");

  Proof core = p;
  core.system = System::MS2IC;
  e = check_proof(core);
  REQUIRE(e);
  CHECK(e->kind == "rule-not-in-system");

  Proof uc = library("uc_example");
  REQUIRE_FALSE(check_proof(uc));
  uc.steps.back().by.subst = Substitution{{"phi", var("q")}, {"chi", parse("p or not p")}};
  uc.steps.back().formula = parse("box q -> p or not p");
  uc.steps[0].formula = parse("((p ~> q) and box p) -> p or not p");
  e = check_proof(uc);
  REQUIRE(e);
  CHECK(e->kind == "freshness");
  CHECK(e->step == 2);

  Proof unknown = p;
  unknown.steps.back().by.name = "rho42";
  CHECK(check_proof(unknown)->kind == "unknown-rule");
  CHECK(rule_in_system("UC", System::MS2ICu));
  CHECK_FALSE(rule_in_system("rho9", System::MS2ICu));
  CHECK_FALSE(rule_in_system("UC", System::MS2IC));
}

TEST_CASE("Pi2 rule templates") {
  CHECK(same(find_rule("UC")->premise(), parse("(p ~> phi) and box p -> chi")));
  CHECK(same(find_rule("UC")->conclusion(), parse("box phi -> chi")));
  CHECK(same(find_rule("rho9")->premise(), parse("(phi ~> p) and (p ~> psi) and (p ~> p) -> chi")));
  CHECK(same(find_rule("LC")->premise(), parse("(p ~> phi) and dia p -> chi")));
  CHECK(find_rule("ρ6") == find_rule("rho6"));
}

TEST_CASE("MP diagnostics") {
  Proof p;
  p.steps = {{parse("q -> q"), by(By::Axiom, "PC")},
             {parse("(q -> q) -> (r -> r)"), by(By::Axiom, "PC")},
             {parse("r -> r"), by(By::MP, "", 1, 2)}};
  CHECK_FALSE(check_proof(p));
  p.steps[2].by.j = 7;
  auto e = check_proof(p);
  REQUIRE(e);
  CHECK(e->step == 3);
  CHECK(e->kind == "bad-index");
  p.steps[2].by.i = 2;
  p.steps[2].by.j = 1;
  CHECK(check_proof(p)->kind == "mp-shape");
  p.steps[2].by.i = 3;
  p.steps[2].by.j = 3;
  CHECK(check_proof(p)->kind == "bad-index");
  CHECK(check_proof(Proof{})->kind == "empty");
}

TEST_CASE("Gamma derivations") {
  Proof t = library("univ_t");
  CHECK_FALSE(check_gamma_derivation({var("q")}, var("q"), t));
  Proof ax;
  ax.steps = {{parse("(r ~> s) -> (r -> s)"), by(By::Axiom, "A4")}};
  CHECK_FALSE(check_gamma_derivation({}, parse("(r ~> s) -> (r -> s)"), ax));
  auto e = check_gamma_derivation({var("q")}, var("r"), t);
  REQUIRE(e);
  CHECK(e->kind == "shape-mismatch");
  CHECK(check_gamma_derivation({var("s")}, var("q"), t));
}
