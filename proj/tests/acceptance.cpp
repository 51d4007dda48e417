// One line per acceptance criterion. Exit status is 0 if every criterion passes,
// or if the failing criteria are exactly those listed with --expect-fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "ms2ic/algebras.hpp"
#include "ms2ic/calculus.hpp"
#include "ms2ic/fo.hpp"
#include "ms2ic/pi2.hpp"
#include "ms2ic/semantics.hpp"
#include "ms2ic/sqema.hpp"
#include "oracles.hpp"

using namespace ms2ic;

namespace {

// pinned tolerances
constexpr long kAllowedExceptions = 0;
constexpr int kSampledFrames = 10000;
constexpr int kAdmissibilityPerRule = 1000;
constexpr int kSampledTables = 10000;
constexpr double kCriterion1Seconds = 120.0;
constexpr double kCriterion5Seconds = 300.0;
constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt(double s) {
  std::ostringstream o;
  o.precision(1);
  o << std::fixed << s << "s";
  return o.str();
}

// Kripke frame with E whose tuples are drawn at a per-frame density
KripkeFrame sample_kripke(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dens(0.1, 0.9);
  KripkeFrame f = KripkeFrame::numbered(n);
  f.E.emplace(n, 0);
  double dt = dens(rng), ds = dens(rng), de = dens(rng);
  std::uniform_real_distribution<double> u(0, 1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (u(rng) < ds) f.add_s(x, y);
      if (u(rng) < de) f.add_e(x, y);
      for (int z = 0; z < n; ++z)
        if (u(rng) < dt) f.add_t(x, y, z);
    }
  return f;
}

// exhaustive pointed frames of size <= 2 with E, then sampled pointed frames of size 3-4
void pointed_population(std::uint64_t seed, const std::function<void(const KripkeFrame&, int)>& visit) {
  for (int n = 1; n <= 2; ++n)
    enumerate_kripke(n, true, [&](const KripkeFrame& f) {
      for (int w = 0; w < n; ++w) visit(f, w);
      return true;
    });
  std::mt19937_64 rng(seed);
  for (int i = 0; i < kSampledFrames; ++i) {
    int n = 3 + i % 2;
    KripkeFrame f = sample_kripke(n, rng);
    visit(f, static_cast<int>(rng() % n));
  }
}

// ── 1 ──

Outcome criterion1() {
  auto t0 = Clock::now();
  std::vector<Formula> axioms;
  for (const auto& s : core_schemes()) axioms.push_back(s.tmpl);
  long frames = 0, positives = 0, disagreements = 0, oracle_disagreements = 0;
  auto test = [&](const KripkeFrame& f) {
    ++frames;
    bool checker = is_ms2ic_frame(f).ok();
    bool all_valid = true;
    for (const auto& a : axioms)
      if (is_valid_in_frame(f, a)) {
        all_valid = false;
        break;
      }
    positives += checker;
    disagreements += checker != all_valid;
    oracle_disagreements += checker != oracle::ms2ic_conditions(oracle::from(f));
  };
  enumerate_kripke(2, false, [&](const KripkeFrame& f) {
    test(f);
    return true;
  });
  std::mt19937_64 rng(kSeed + 1);
  for (int i = 0; i < kSampledFrames; ++i) {
    KripkeFrame f;
    switch (i % 3) {
      case 0: f = random_kripke(3, rng(), false); break;
      case 1: f = random_ms2ic(3, rng()); break;
      default: {
        // one tuple flipped in an MS2IC frame
        f = random_ms2ic(3, rng());
        int k = static_cast<int>(rng() % 36);
        if (k < 27) f.T[k / 3] ^= bit(k % 3);
        else f.S[(k - 27) / 3] ^= bit((k - 27) % 3);
      }
    }
    test(f);
  }
  double secs = seconds_since(t0);
  Outcome o;
  o.pass = disagreements <= kAllowedExceptions && oracle_disagreements <= kAllowedExceptions &&
           frames == 4096 + kSampledFrames && secs < kCriterion1Seconds;
  o.detail = std::to_string(frames) + " frames (" + std::to_string(positives) + " MS2IC), " +
             std::to_string(disagreements) + " disagreements, " + std::to_string(oracle_disagreements) +
             " oracle disagreements, " + fmt(secs) + " (limit " + fmt(kCriterion1Seconds) + ")";
  return o;
}

// ── 2 ──

struct Printed {
  const char* axiom;
  const char* fo;
};

// printed first-order correspondents
const std::vector<Printed>& printed() {
  static const std::vector<Printed> p = {
      {"A0", "forall z. (E(x,z) <-> exists y. T(x,y,z))"},
      {"A4", "T(x,x,x)"},
      {"A5", "forall y, z. (T(x,y,z) -> T(x,z,y))"},
      {"A9", "forall y, z. ((E(x,y) & E(x,z)) -> E(y,z))"},
      {"A10-lr", "forall y, z, w. ((E(x,w) & T(w,y,z)) -> T(x,y,z))"},
      {"K", "true"},
      {"Add", "forall y, z, w. ((T(x,y,z) & S(z,w)) -> exists u. (T(x,u,w) & S(y,u)))"},
  };
  return p;
}

Outcome criterion2() {
  auto t0 = Clock::now();
  Outcome o;
  o.pass = true;
  std::string parts;
  for (const auto& it : printed()) {
    Formula ax = *correspondence_axiom(it.axiom);
    SqemaResult r = run_sqema(ax);
    if (!r.ok) {
      o.pass = false;
      parts += std::string(" ") + it.axiom + " SQEMA failed;";
      continue;
    }
    Fo paper = parse_fo(it.fo);
    long pointed = 0, bad = 0;
    pointed_population(kSeed + 2, [&](const KripkeFrame& f, int w) {
      ++pointed;
      bool raw = eval_fo(f, r.fo, {{"x", w}});
      bool printed_value = eval_fo(f, paper, {{"x", w}});
      if (raw != printed_value || check_local_correspondence(f, w, ax, paper)) ++bad;
    });
    if (bad > kAllowedExceptions || pointed != 131080 + kSampledFrames) o.pass = false;
    parts += std::string(" ") + it.axiom + " " + std::to_string(bad) + "/" +
             std::to_string(pointed) + ";";
  }
  o.detail = "disagreements per item:" + parts + " " + fmt(seconds_since(t0));
  return o;
}

// ── 3 ──

struct Consequence {
  const char* derived;
  std::vector<const char*> sources;
};

struct ConsequenceCount {
  long applicable = 0, exceptions = 0;
};

ConsequenceCount consequence(const Consequence& c) {
  std::map<std::string, Fo> fo;
  for (const auto& p : printed()) fo[p.axiom] = parse_fo(p.fo);
  fo["A8"] = parse_fo("forall y, z. ((E(x,y) & E(y,z)) -> E(x,z))");
  Formula derived = *correspondence_axiom(c.derived);
  ConsequenceCount out;
  pointed_population(kSeed + 3, [&](const KripkeFrame& f, int w) {
    // the source correspondents hold at every world of the frame
    for (const char* s : c.sources)
      for (int x = 0; x < f.size(); ++x)
        if (!eval_fo(f, fo.at(s), {{"x", x}})) return;
    ++out.applicable;
    if (local_truth(f, w, derived, Mode::Appendix)) ++out.exceptions;
  });
  return out;
}

Outcome criterion3() {
  auto t0 = Clock::now();
  const std::vector<Consequence> items = {
      {"A8", {"A5", "A9"}},
      {"A10-rl", {"A5"}},
      {"A11", {"A0", "A5", "A8"}},
  };
  Outcome o;
  o.pass = true;
  for (const auto& c : items) {
    ConsequenceCount k = consequence(c);
    if (k.exceptions > kAllowedExceptions) o.pass = false;
    std::string src;
    for (const char* s : c.sources) src += std::string(src.empty() ? "" : "+") + s;
    o.detail += std::string(c.derived) + " from " + src + ": " + std::to_string(k.exceptions) +
                " exceptions in " + std::to_string(k.applicable) + "; ";
  }
  // the (T) law [A] q -> q behind the A8 and A10-rl derivations
  for (const auto& np : builtin_library())
    if (np.name == "univ_t") o.detail += std::string("univ_t script ") + (check_proof(np.proof) ? "rejected" : "checks") + "; ";
  o.detail += fmt(seconds_since(t0));
  return o;
}

// not an acceptance line: the same check with A0 and A4 added to the sources
std::string criterion3_supplement() {
  std::string out;
  for (const Consequence& c : {Consequence{"A8", {"A0", "A4", "A9"}},
                               Consequence{"A10-rl", {"A0", "A4"}}}) {
    ConsequenceCount k = consequence(c);
    std::string src;
    for (const char* s : c.sources) src += std::string(src.empty() ? "" : "+") + s;
    out += std::string(c.derived) + " from " + src + ": " + std::to_string(k.exceptions) +
           " exceptions in " + std::to_string(k.applicable) + "; ";
  }
  return out;
}

// ── 4 ──

Outcome criterion4() {
  long contact = 0, simple = 0, bad = 0;
  for (int n = 1; n <= 3; ++n)
    enumerate_modal_contact(n, [&](const ModalContactFrame& m) {
      ++contact;
      if (!(r_from_t(t_from_r(m)) == m)) ++bad;
      return true;
    });
  for (int n = 1; n <= 2; ++n)
    enumerate_ms2ic(n, [&](const KripkeFrame& f) {
      if (!is_simple(f)) return true;
      ++simple;
      ModalContactFrame m = r_from_t(f);
      if (!is_modal_contact_frame(m).ok() || !(t_from_r(m) == f)) ++bad;
      return true;
    });
  Outcome o;
  o.pass = bad <= kAllowedExceptions && contact > 0 && simple > 0;
  o.detail = std::to_string(contact) + " modal contact frames (n<=3), " + std::to_string(simple) +
             " simple MS2IC frames (n<=2), " + std::to_string(bad) + " failed round trips";
  return o;
}

// ── 5 ──

Outcome criterion5() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(kSeed + 5);
  Outcome o;
  o.pass = true;
  for (const auto& rule : rule_catalog()) {
    int verified = 0, failed = 0, vacuous = 0;
    while (verified + failed < kAdmissibilityPerRule) {
      int n = 1 + static_cast<int>(rng() % 4);
      ModalContactFrame m = random_modal_contact(n, rng());
      Valuation v;
      v.vars["q"] = rng() & full_set(n);
      v.vars["r"] = rng() & full_set(n);
      Substitution inst;
      for (const auto& mv : rule.metavars) inst[mv] = oracle::random_formula(rng, 2, {"q", "r"});
      inst["chi"] = oracle::random_formula(rng, 2, {"q", "r"});
      AdmissibilityReport rep = verify_admissibility_instance(rule, m, v, inst);
      if (rep.vacuous) {
        ++vacuous;
        continue;
      }
      oracle::Contact c = oracle::from(rep.expansion.frame);
      oracle::Val w = oracle::from(rep.expansion.valuation, rep.expansion.frame.size());
      bool ok = rep.verified() && oracle::contact_conditions(c) && !oracle::holds(c, w, rep.premise, rep.witness);
      ok ? ++verified : ++failed;
    }
    if (failed > kAllowedExceptions) o.pass = false;
    o.detail += rule.name + " " + std::to_string(verified) + "/" + std::to_string(verified + failed) + " (" +
                std::to_string(vacuous) + " vacuous skipped); ";
  }
  double secs = seconds_since(t0);
  if (secs >= kCriterion5Seconds) o.pass = false;
  o.detail += fmt(secs) + " (limit " + fmt(kCriterion5Seconds) + ")";
  return o;
}

// ── 6 ──

Outcome criterion6() {
  long tables = 0, a = 0, b = 0, c = 0, d = 0, ea = 0, eb = 0, ec = 0, ed = 0, bare = 0;
  auto test = [&](const Algebra& alg) {
    ++tables;
    OperatorFlags f = check_operator(alg);
    if (f.finitely_additive) {
      ++a;
      ea += f.de_vries_additive != f.proximity_preserving;
    }
    bool conclusion = f.order_preserving && f.finitely_additive;
    if (f.upper_continuous && f.de_vries_additive && check_contact(alg).ok()) {
      ++b;
      eb += !conclusion;
    }
    bare += f.upper_continuous && !conclusion;
    if (f.finitely_additive && f.de_vries_additive && check_contact(alg).ok()) {
      ++c;
      ec += !check_pi_sentence(alg, *find_rule("UC")) != f.upper_continuous;
    }
    ++d;
    ed += f.upper_continuous != box_lower_continuous(alg);
    oracle::Alg o = oracle::from(alg);
    ed += f.upper_continuous != oracle::upper_continuous(o);
    ed += box_lower_continuous(alg) != oracle::box_lower_continuous(o);
  };
  for (Algebra alg : all_contact_relations(1))
    for (int t = 0; t < 4; ++t) {
      alg.diamond = {t & 1, t >> 1};
      test(alg);
    }
  std::mt19937_64 rng(kSeed + 6);
  auto rels = all_contact_relations(2);
  auto fill = [&](Algebra& alg, bool additive) {
    if (additive) {
      int d1 = static_cast<int>(rng() % 4), d2 = static_cast<int>(rng() % 4);
      alg.diamond = {0, d1, d2, d1 | d2};
    } else {
      for (auto& x : alg.diamond) x = static_cast<int>(rng() % 4);
    }
  };
  for (int i = 0; i < kSampledTables; ++i) {
    Algebra ord = Algebra::order(2);
    fill(ord, i % 2 == 0);
    test(ord);
    Algebra alg = rels[rng() % rels.size()];
    fill(alg, i % 2 == 0);
    test(alg);
  }
  Outcome o;
  long exceptions = ea + eb + ec + ed;
  o.pass = exceptions <= kAllowedExceptions && tables >= 2 * kSampledTables;
  o.detail = std::to_string(tables) + " tables; (a) " + std::to_string(ea) + "/" + std::to_string(a) + ", (b) " +
             std::to_string(eb) + "/" + std::to_string(b) + ", (c) " + std::to_string(ec) + "/" + std::to_string(c) +
             ", (d) " + std::to_string(ed) + "/" + std::to_string(d) +
             " exceptions/applicable; upper continuous without de Vries additivity: " + std::to_string(bare) +
             " not order-preserving or not finitely additive (outside the hypothesis)";
  return o;
}

// ── 7 ──

Outcome criterion7() {
  Outcome o;
  o.pass = true;
  auto lib = builtin_library();
  auto find = [&](const std::string& n) -> Proof {
    for (const auto& np : lib)
      if (np.name == n) return np.proof;
    return {};
  };
  for (const char* n : {"univ_box", "univ_congruence"}) {
    Proof p = find(n);
    bool ok = p.system == System::MS2IC && !p.steps.empty() && !check_proof(p);
    o.pass = o.pass && ok;
    o.detail += std::string(n) + (ok ? " ok; " : " REJECTED; ");
  }
  int schemes = 0;
  for (const auto& name : scheme_names()) {
    Proof p;
    Step st;
    st.by.kind = By::Axiom;
    st.by.name = name;
    if (name == "PC") {
      st.formula = parse("q -> q");
    } else if (name == "A0") {
      p.system = System::Nabla;
      st.formula = find_scheme(name, System::Nabla)->tmpl;
    } else {
      st.formula = find_scheme(name, System::MS2IC)->tmpl;
    }
    p.steps = {st};
    if (!check_proof(p)) ++schemes;
  }
  o.pass = o.pass && schemes == 13 && scheme_names().size() == 13;
  o.detail += std::to_string(schemes) + "/13 schemes self-check; ";

  // broken MP index at step 3 of univ_box's first MP
  Proof mp = find("univ_box");
  int mp_step = 0;
  for (std::size_t k = 0; k < mp.steps.size() && !mp_step; ++k)
    if (mp.steps[k].by.kind == By::MP) mp_step = static_cast<int>(k) + 1;
  mp.steps[mp_step - 1].by.j = mp_step + 5;
  auto e1 = check_proof(mp);
  bool m1 = e1 && e1->step == mp_step && e1->kind == "bad-index";

  // wrong scheme instance: an A4 step rewritten into a non-instance
  Proof ws = find("univ_t");
  ws.steps[0].formula = parse("(top ~> q) -> (q -> top)");
  auto e2 = check_proof(ws);
  bool m2 = e2 && e2->step == 1 && e2->kind == "scheme-mismatch";

  // Pi2 freshness: the rho7 step declares q, which occurs in phi
  Proof fr = find("rho7_example");
  int pi_step = static_cast<int>(fr.steps.size());
  fr.steps.back().by.fresh = {"q"};
  auto e3 = check_proof(fr);
  bool m3 = e3 && e3->step == pi_step && e3->kind == "freshness";

  o.pass = o.pass && m1 && m2 && m3;
  auto show = [](const std::optional<ProofError>& e) {
    return e ? "step " + std::to_string(e->step) + " " + e->kind : std::string("accepted");
  };
  o.detail += "broken MP index -> " + show(e1) + " (expected step " + std::to_string(mp_step) +
              "); wrong instance -> " + show(e2) + " (expected step 1); freshness -> " + show(e3) +
              " (expected step " + std::to_string(pi_step) + ")";
  return o;
}

// ── 8 ──

Outcome criterion8() {
  std::vector<std::pair<std::string, Formula>> axioms;
  for (const auto& s : core_schemes()) axioms.emplace_back(s.name, s.tmpl);
  long frames = 0, candidates = 0, failures = 0, oracle_failures = 0;
  for (int n = 1; n <= 3; ++n) {
    candidates += std::int64_t{1} << (2 * n * n);
    enumerate_modal_contact(n, [&](const ModalContactFrame& m) {
      ++frames;
      oracle::Contact c = oracle::from(m);
      for (const auto& [name, a] : axioms) {
        failures += is_valid_in_frame(m, a).has_value();
        oracle_failures += !oracle::valid(c, a);
      }
      return true;
    });
  }
  long alg_failures = 0;
  for (int n = 1; n <= 2; ++n)
    for (const auto& [name, a] : axioms) alg_failures += algebra_validates(Algebra::order(n), a).has_value();
  Outcome o;
  o.pass = failures + oracle_failures + alg_failures <= kAllowedExceptions && frames > 0;
  o.detail = std::to_string(frames) + " modal contact frames of " + std::to_string(candidates) +
             " candidates x " + std::to_string(axioms.size()) + " axioms: " + std::to_string(failures) +
             " failures (oracle " + std::to_string(oracle_failures) + "); order algebras n<=2: " +
             std::to_string(alg_failures) + " failures";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected_failures;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--expect-fail" && i + 1 < argc) {
      std::stringstream in(argv[++i]);
      for (std::string k; std::getline(in, k, ',');) expected_failures.insert(std::stoi(k));
    } else {
      std::cerr << "usage: acceptance [--expect-fail 3[,k...]]" << std::endl;
      return 2;
    }
  }
  std::set<int> failures;
  std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
      {5, criterion5}, {6, criterion6}, {7, criterion7}, {8, criterion8}};
  bool all = true;
  for (const auto& [k, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    all = all && o.pass;
    if (!o.pass) failures.insert(k);
    std::cout << "criterion " << k << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail << std::endl;
    if (k == 3 && !o.pass) std::cout << "  note: with A0 and A4 added to the sources: " << criterion3_supplement() << std::endl;
  }
  std::cout << (all ? "all criteria pass" : "some criteria fail") << std::endl;
  if (all) return 0;
  std::string listed;
  for (int k : expected_failures) listed += (listed.empty() ? "" : ",") + std::to_string(k);
  if (failures == expected_failures) {
    std::cout << "failing criteria match the expected failures {" << listed << "}" << std::endl;
    return 0;
  }
  std::cout << "failing criteria differ from the expected failures {" << listed << "}" << std::endl;
  return 1;
}
