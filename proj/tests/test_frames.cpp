#include <doctest.h>

#include "ms2ic/frames.hpp"
#include "ms2ic/semantics.hpp"
#include "oracles.hpp"

using namespace ms2ic;

namespace {

KripkeFrame kripke(std::vector<std::string> w, std::vector<std::array<int, 3>> T, std::vector<std::pair<int, int>> S) {
  KripkeFrame f(std::move(w));
  for (auto [x, y, z] : T) f.add_t(x, y, z);
  for (auto [x, y] : S) f.add_s(x, y);
  return f;
}

ModalContactFrame contact(std::vector<std::string> w, std::vector<std::pair<int, int>> R,
                          std::vector<std::pair<int, int>> S) {
  ModalContactFrame m(std::move(w));
  for (auto [x, y] : R) m.add_r(x, y);
  for (auto [x, y] : S) m.add_s(x, y);
  return m;
}

ModalContactFrame all_r(std::vector<std::string> w, std::vector<std::pair<int, int>> S) {
  int n = static_cast<int>(w.size());
  std::vector<std::pair<int, int>> R;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) R.emplace_back(x, y);
  return contact(std::move(w), R, std::move(S));
}

}  // namespace

TEST_CASE("et_relation") {
  CHECK(et_relation(kripke({"x"}, {{0, 0, 0}}, {})) == std::vector<WorldSet>{1});
  CHECK(et_relation(kripke({"x"}, {}, {})) == std::vector<WorldSet>{0});
  CHECK(et_relation(kripke({"0", "1"}, {{0, 1, 0}}, {})) == std::vector<WorldSet>{2, 0});
}

TEST_CASE("is_ms2ic_frame examples") {
  CHECK(is_ms2ic_frame(kripke({"x"}, {{0, 0, 0}}, {})).ok());
  Report r = is_ms2ic_frame(kripke({"x", "y"}, {{0, 0, 0}}, {}));
  REQUIRE(r.violates("1"));
  CHECK(r.violations.front().witness == std::vector<std::string>{"y"});
  CHECK(is_ms2ic_frame(kripke({"x"}, {{0, 0, 0}}, {{0, 0}})).ok());
}

TEST_CASE("is_ms2ic_frame agrees with the oracle on every 2-world frame") {
  int agree = 0;
  enumerate_kripke(2, false, [&](const KripkeFrame& f) {
    REQUIRE(is_ms2ic_frame(f).ok() == oracle::ms2ic_conditions(oracle::from(f)));
    ++agree;
    return true;
  });
  CHECK(agree == 4096);
}

TEST_CASE("is_modal_contact_frame examples") {
  CHECK(is_modal_contact_frame(contact({"a"}, {{0, 0}}, {})).ok());
  Report sym = is_modal_contact_frame(contact({"a", "b"}, {{0, 0}, {1, 1}, {0, 1}}, {}));
  REQUIRE(sym.violates("symmetric"));
  CHECK(sym.violations.front().witness == std::vector<std::string>{"a", "b"});
  CHECK(is_modal_contact_frame(all_r({"a", "b"}, {{0, 1}})).violates("confluence"));
}

TEST_CASE("modal contact enumeration matches an oracle filter") {
  CHECK(enumerate_modal_contact(1, [](const ModalContactFrame&) { return true; }) == 2);
  for (int n = 1; n <= 2; ++n) {
    std::uint64_t expected = 0, all = std::uint64_t{1} << (2 * n * n);
    for (std::uint64_t code = 0; code < all; ++code) {
      oracle::Contact c;
      c.n = n;
      for (int i = 0; i < n * n; ++i) {
        if ((code >> i) & 1) c.R.insert({i / n, i % n});
        if ((code >> (n * n + i)) & 1) c.S.insert({i / n, i % n});
      }
      expected += oracle::contact_conditions(c);
    }
    CHECK(enumerate_modal_contact(n, [](const ModalContactFrame&) { return true; }) == expected);
  }
  CHECK(enumerate_kripke(2, false, [](const KripkeFrame&) { return true; }) == 4096);
}

TEST_CASE("enumeration guard") {
  CHECK_THROWS_AS(enumerate_kripke(3, false, [](const KripkeFrame&) { return true; }), FrameError);
  CHECK_THROWS_AS(enumerate_kripke(0, false, [](const KripkeFrame&) { return true; }), FrameError);
  CHECK(enumerate_kripke(2, false, [](const KripkeFrame&) { return false; }) == 1);
}

TEST_CASE("random frames") {
  CHECK(is_modal_contact_frame(random_modal_contact(3, 7)).ok());
  CHECK(random_modal_contact(4, 9) == random_modal_contact(4, 9));
  for (std::uint64_t s = 0; s < 200; ++s) {
    REQUIRE(is_modal_contact_frame(random_modal_contact(1 + s % 4, s)).ok());
    REQUIRE(is_ms2ic_frame(random_ms2ic(1 + s % 4, s)).ok());
  }
}

TEST_CASE("t_from_r and r_from_t") {
  CHECK(t_from_r(contact({"a"}, {{0, 0}}, {})) == kripke({"a"}, {{0, 0, 0}}, {}));
  KripkeFrame full = t_from_r(all_r({"a", "b"}, {}));
  int triples = 0;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) triples += full.t(x, y, z);
  CHECK(triples == 8);
  enumerate_modal_contact(2, [](const ModalContactFrame& m) {
    KripkeFrame f = t_from_r(m);
    REQUIRE(is_ms2ic_frame(f).ok());
    REQUIRE(is_simple(f));
    REQUIRE(r_from_t(f) == m);
    return true;
  });
  CHECK_THROWS(r_from_t(kripke({"a", "b"}, {{0, 0, 0}, {1, 1, 1}}, {})));
}

TEST_CASE("E_T classes and generated subframes") {
  KripkeFrame two = kripke({"a", "b"}, {{0, 0, 0}, {1, 1, 1}}, {});
  auto classes = et_classes(two);
  REQUIRE(classes.size() == 2);
  CHECK(generated_subframe(two, classes[0]) == kripke({"a"}, {{0, 0, 0}}, {}));
  KripkeFrame simple = t_from_r(all_r({"a", "b"}, {{0, 0}, {1, 1}}));
  REQUIRE(et_classes(simple).size() == 1);
  CHECK(generated_subframe(simple, et_classes(simple)[0]) == simple);
  CHECK_THROWS(generated_subframe(simple, 1));

  for (std::uint64_t s = 0; s < 300; ++s) {
    KripkeFrame f = random_ms2ic(3, s);
    WorldSet seen = 0;
    for (WorldSet c : et_classes(f)) {
      REQUIRE((seen & c) == 0);
      seen |= c;
      KripkeFrame g = generated_subframe(f, c);
      REQUIRE(is_ms2ic_frame(g).ok());
      // closure under T-projections and S
      for (int x = 0; x < 3; ++x) {
        if (!has(c, x)) continue;
        REQUIRE((image(f.S, bit(x)) & ~c) == 0);
        for (int y = 0; y < 3; ++y)
          if (f.T[x * 3 + y]) REQUIRE((has(c, y) && (f.T[x * 3 + y] & ~c) == 0));
      }
    }
    REQUIRE(seen == full_set(3));
  }
}

TEST_CASE("p-morphisms") {
  ModalContactFrame m = all_r({"a", "b"}, {{0, 0}, {1, 1}});
  CHECK(is_regular_stable_pmorphism({0, 1}, m, m).ok());
  ModalContactFrame one = contact({"x"}, {{0, 0}}, {});
  CHECK(is_regular_stable_pmorphism({0, 0}, all_r({"a", "b"}, {}), one).ok());
  // the only R-edge of the target has no preimage edge
  ModalContactFrame disc = contact({"a", "b"}, {{0, 0}, {1, 1}}, {});
  ModalContactFrame joined = all_r({"c", "d"}, {});
  CHECK(is_regular_stable_pmorphism({0, 1}, disc, joined).violates("R2"));

  KripkeFrame k = t_from_r(m);
  CHECK(is_pmorphism({0, 1}, k, k).ok());
  CHECK(is_pmorphism({0, 0}, t_from_r(all_r({"a", "b"}, {})), t_from_r(one)).ok());
  CHECK(is_pmorphism({0, 1}, t_from_r(disc), t_from_r(joined)).violates("T2"));
}

TEST_CASE("expand_rho6") {
  ModalContactFrame one = contact({"a"}, {{0, 0}}, {{0, 0}});
  Valuation v;
  v.vars["q"] = 1;
  Expansion e = expand_rho6(one, v, var("q"));
  CHECK(e.frame.size() == 1);
  CHECK(e.map == WorldMap{0});

  ModalContactFrame m = all_r({"a", "b"}, {});
  Expansion e2 = expand_rho6(m, v, var("q"));
  REQUIRE(e2.frame.size() == 4);
  CHECK(e2.frame.worlds == std::vector<std::string>{"a|a", "a|b", "b|a", "b|b"});
  CHECK(e2.fresh == "p");
  CHECK(e2.valuation.vars.at("p") == (bit(0) | bit(1) | bit(2)));
  CHECK(image(e2.frame.R, e2.valuation.vars.at("p")) == e2.valuation.vars.at("p"));

  Valuation vp = v;
  vp.vars["p"] = 0;
  CHECK(expand_rho6(m, vp, parse("p and q")).fresh == "p_0");
  CHECK_THROWS_AS(expand_rho6(m, v, var("q"), "q"), FrameError);
  CHECK_THROWS_AS(expand_rho6(all_r({"a", "b"}, {{0, 1}}), v, var("q")), FrameError);
}

TEST_CASE("expand_two_copy") {
  Valuation v;
  v.vars["q"] = 1;
  Expansion e = expand_two_copy(contact({"a"}, {{0, 0}}, {}), v, var("q"));
  CHECK(e.frame == contact({"1:a", "2:a"}, {{0, 0}, {1, 1}}, {}));

  Valuation vb;
  vb.vars["q"] = bit(1);
  ModalContactFrame m = all_r({"a", "b"}, {{0, 1}, {1, 1}});
  Expansion e2 = expand_two_copy(m, vb, var("q"));
  CHECK(e2.frame.size() == 4);
  CHECK(e2.valuation.vars.at("p") == bit(1));
  CHECK(e2.frame.worlds[1] == "1:b");
  CHECK(image(e2.frame.R, e2.valuation.vars.at("p")) == e2.valuation.vars.at("p"));
}

TEST_CASE("expansions are frames with regular stable p-morphisms") {
  std::mt19937_64 rng(17);
  for (std::uint64_t s = 0; s < 400; ++s) {
    int n = 1 + static_cast<int>(s % 4);
    ModalContactFrame m = random_modal_contact(n, s);
    Valuation v;
    v.vars["q"] = rng() & full_set(n);
    v.vars["r"] = rng() & full_set(n);
    Formula phi = oracle::random_formula(rng, 2, {"q", "r"});
    Expansion a = expand_rho6(m, v, phi), b = expand_two_copy(m, v, phi);
    int edges = 0;
    for (int x = 0; x < n; ++x) edges += std::popcount(m.R[x]);
    REQUIRE(a.frame.size() == edges);
    REQUIRE(b.frame.size() == 2 * n);
    for (const Expansion* e : {&a, &b}) {
      REQUIRE(is_modal_contact_frame(e->frame).ok());
      REQUIRE(is_regular_stable_pmorphism(e->map, e->frame, m).ok());
      REQUIRE(oracle::contact_conditions(oracle::from(e->frame)));
    }
    REQUIRE(image(a.frame.R, a.valuation.vars.at(a.fresh)) == a.valuation.vars.at(a.fresh));
  }
}
