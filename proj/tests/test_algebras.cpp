#include <doctest.h>

#include <random>

#include "ms2ic/algebras.hpp"
#include "ms2ic/calculus.hpp"
#include "ms2ic/pi2.hpp"
#include "oracles.hpp"

using namespace ms2ic;

namespace {

const Pi2Rule& rule(const std::string& name) { return *find_rule(name); }

Algebra from_pairs(int atoms, std::vector<std::pair<int, int>> prec) {
  Algebra a(atoms);
  for (auto [x, y] : prec) a.set_prec(x, y);
  return a;
}

}  // namespace

TEST_CASE("check_contact examples") {
  CHECK(check_contact(Algebra::order(1)).ok());
  Report r = check_contact(from_pairs(2, {{0, 0}, {3, 3}}));
  CHECK(r.violates("S4"));
  for (int n = 0; n <= 3; ++n) CHECK(check_contact(Algebra::order(n)).ok());
}

TEST_CASE("check_compingent and S9") {
  for (int n = 0; n <= 3; ++n) {
    CHECK(check_compingent(Algebra::order(n)).ok());
    CHECK(check_s9(Algebra::order(n)).ok());
  }
  Algebra a = from_pairs(1, {{0, 0}, {0, 1}, {1, 1}});
  CHECK(check_compingent(a).ok());
  a.set_prec(1, 1, false);
  Report r = check_compingent(a);
  CHECK_FALSE(r.violates("S7"));
  REQUIRE(r.violates("S8"));
  CHECK(r.violations.back().witness == std::vector<std::string>{"1"});
}

TEST_CASE("contact relations agree with the oracle") {
  for (int n = 1; n <= 2; ++n) {
    auto rels = all_contact_relations(n);
    int m = 1 << n;
    std::size_t expected = 0;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (m * m)); ++code) {
      oracle::Alg o;
      o.atoms = n;
      for (int i = 0; i < m * m; ++i)
        if ((code >> i) & 1) o.prec.insert({i / m, i % m});
      o.dia.resize(m);
      expected += oracle::contact(o);
    }
    CHECK(rels.size() == expected);
    for (const auto& a : rels) REQUIRE(oracle::contact(oracle::from(a)));
  }
}

TEST_CASE("operator flags") {
  OperatorFlags id = check_operator(Algebra::order(2));
  CHECK(id.de_vries_additive);
  CHECK(id.finitely_additive);
  CHECK(id.proximity_preserving);
  CHECK(id.order_preserving);
  CHECK(id.upper_continuous);
  CHECK(id.lower_continuous);

  Algebra z = Algebra::order(1);
  z.diamond = {0, 0};
  OperatorFlags f = check_operator(z);
  CHECK(f.finitely_additive);
  CHECK(f.proximity_preserving);

  CHECK(box_dual_table(Algebra::order(2)) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("operator flags agree with the oracle") {
  auto check = [](const Algebra& a) {
    OperatorFlags f = check_operator(a);
    oracle::Alg o = oracle::from(a);
    REQUIRE(f.finitely_additive == oracle::finitely_additive(o));
    REQUIRE(f.de_vries_additive == oracle::de_vries_additive(o));
    REQUIRE(f.proximity_preserving == oracle::proximity_preserving(o));
    REQUIRE(f.order_preserving == oracle::order_preserving(o));
    REQUIRE(f.upper_continuous == oracle::upper_continuous(o));
    REQUIRE(f.lower_continuous == oracle::lower_continuous(o));
    REQUIRE(box_lower_continuous(a) == oracle::box_lower_continuous(o));
    auto dual = box_dual_table(a);
    REQUIRE((a.diamond[0] == 0) == (dual[a.top()] == a.top()));
  };
  for (Algebra a : all_contact_relations(1))
    for (int t = 0; t < 4; ++t) {
      a.diamond = {t & 1, t >> 1};
      check(a);
    }
  std::mt19937_64 rng(41);
  auto rels = all_contact_relations(2);
  for (int i = 0; i < 2000; ++i) {
    Algebra a = rels[rng() % rels.size()];
    for (auto& d : a.diamond) d = static_cast<int>(rng() % 4);
    check(a);
  }
}

TEST_CASE("algebra_truth") {
  Algebra a = Algebra::order(2);
  CHECK(algebra_truth(a, {{"p", 3}, {"q", 3}}, parse("p ~> q")) == 3);
  CHECK(algebra_truth(a, {{"p", 1}, {"q", 2}}, parse("p ~> q")) == 0);
  a.diamond = {0, 2, 1, 3};
  CHECK(algebra_truth(a, {{"p", 1}}, parse("dia p")) == 2);
  CHECK(algebra_truth(a, {{"p", 1}}, parse("box p")) == 2);
  CHECK_THROWS(algebra_truth(a, {}, parse("p")));
  CHECK_THROWS(algebra_truth(a, {}, parse("#i", true)));
}

TEST_CASE("strict implication takes only the values 0 and 1") {
  std::mt19937_64 rng(43);
  auto rels = all_contact_relations(2);
  for (int i = 0; i < 500; ++i) {
    Algebra a = rels[rng() % rels.size()];
    for (auto& d : a.diamond) d = static_cast<int>(rng() % 4);
    Formula f = simp(oracle::random_formula(rng, 2, {"p", "q"}), oracle::random_formula(rng, 2, {"p", "q"}));
    int v = algebra_truth(a, {{"p", static_cast<int>(rng() % 4)}, {"q", static_cast<int>(rng() % 4)}}, f);
    REQUIRE((v == 0 || v == 3));
  }
}

TEST_CASE("algebra_validates") {
  for (int n = 1; n <= 2; ++n)
    for (const auto& s : core_schemes()) CHECK_MESSAGE(!algebra_validates(Algebra::order(n), s.tmpl), s.name);
  Algebra bad = from_pairs(1, {{0, 0}, {1, 1}, {1, 0}});
  REQUIRE(check_contact(bad).violates("S5"));
  CHECK(algebra_validates(bad, parse("(p ~> q) -> (p -> q)")));
  CHECK_FALSE(algebra_validates(bad, top()));
}

TEST_CASE("simple algebras validate the library theorems and (Add) needs its algebraic form") {
  std::vector<Formula> goals;
  for (const auto& np : builtin_library())
    if (np.proof.system != System::Nabla) goals.push_back(np.goal);
  std::mt19937_64 rng(47);
  auto rels = all_contact_relations(2);
  int tested = 0;
  while (tested < 40) {
    Algebra a = rels[rng() % rels.size()];
    for (auto& d : a.diamond) d = static_cast<int>(rng() % 4);
    OperatorFlags f = check_operator(a);
    if (!f.finitely_additive || !f.de_vries_additive) continue;
    ++tested;
    for (const auto& g : goals) REQUIRE(!algebra_validates(a, g));
  }
  Algebra add = Algebra::order(2);
  add.diamond = {0, 3, 0, 0};
  CHECK(algebra_validates(add, parse("(p ~> q) -> (box p ~> box q)")));
}

TEST_CASE("Pi-sentences") {
  CHECK_FALSE(check_pi_sentence(Algebra::order(2), rule("UC")));
  CHECK(check_operator(Algebra::order(2)).upper_continuous);
  CHECK_FALSE(check_pi_sentence(Algebra::order(2), rule("rho7")));

  auto check = [](const Algebra& a) {
    oracle::Alg o = oracle::from(a);
    REQUIRE(!check_pi_sentence(a, rule("UC")) == oracle::pi_uc(o));
    REQUIRE(!check_pi_sentence(a, rule("rho7")) == oracle::pi_rho7(o));
  };
  for (Algebra a : all_contact_relations(1))
    for (int t = 0; t < 4; ++t) {
      a.diamond = {t & 1, t >> 1};
      check(a);
    }
  std::mt19937_64 rng(53);
  auto rels = all_contact_relations(2);
  for (int i = 0; i < 300; ++i) {
    Algebra a = rels[rng() % rels.size()];
    for (auto& d : a.diamond) d = static_cast<int>(rng() % 4);
    check(a);
  }
}

TEST_CASE("Pi(rho6) and Pi(rho7) hold exactly on compingent algebras") {
  for (int n = 1; n <= 2; ++n)
    for (const Algebra& a : all_contact_relations(n)) {
      bool pis = !check_pi_sentence(a, rule("rho6")) && !check_pi_sentence(a, rule("rho7"));
      REQUIRE(pis == check_compingent(a).ok());
    }
}

TEST_CASE("Algebra bounds") {
  CHECK_THROWS_AS(Algebra(7), AlgebraError);
  CHECK_THROWS_AS(Algebra(-1), AlgebraError);
  CHECK(Algebra(0).elements() == 1);
}
