#include <CLI11.hpp>
#include <iostream>
#include <random>

#include "ms2ic/algebras.hpp"
#include "ms2ic/calculus.hpp"
#include "ms2ic/fo.hpp"
#include "ms2ic/json_io.hpp"
#include "ms2ic/pi2.hpp"
#include "ms2ic/semantics.hpp"
#include "ms2ic/sqema.hpp"

using namespace ms2ic;

namespace {

struct Options {
  bool json = false;
  std::uint64_t seed = 0;
  int workers = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int emit(const Options& o, json j, const std::string& text, int code) {
  if (o.json) {
    j["schema"] = "v1";
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
  return code;
}

Mode mode_of(const std::string& s) {
  if (s == "core") return Mode::Core;
  if (s == "appendix") return Mode::Appendix;
  throw UsageError("mode must be 'core' or 'appendix'");
}

int world_of(const std::vector<std::string>& worlds, const std::string& w) {
  for (std::size_t i = 0; i < worlds.size(); ++i)
    if (worlds[i] == w) return static_cast<int>(i);
  throw InputError("unknown world '" + w + "'");
}

std::string set_text(WorldSet s, const std::vector<std::string>& w) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (has(s, static_cast<int>(i))) {
      out += (first ? "" : ", ") + w[i];
      first = false;
    }
  return out + "}";
}

json set_json(WorldSet s, const std::vector<std::string>& w) {
  json a = json::array();
  for (std::size_t i = 0; i < w.size(); ++i)
    if (has(s, static_cast<int>(i))) a.push_back(w[i]);
  return a;
}

std::string valuation_text(const Valuation& v, const std::vector<std::string>& w) {
  std::string out;
  for (const auto& [k, s] : v.vars) out += "  " + k + " = " + set_text(s, w) + "\n";
  for (const auto& [k, i] : v.noms) out += "  #" + k + " = " + w.at(i) + "\n";
  return out;
}

std::string report_text(const Report& r) {
  if (r.ok()) return "ok\n";
  std::string out;
  for (const auto& v : r.violations) {
    out += "violates " + v.condition + " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) out += (i ? ", " : "") + v.witness[i];
    out += ")\n";
  }
  return out;
}

// ── subcommands ──

int cmd_parse(const Options& o, const std::string& text, bool hybrid) {
  Formula f = parse(text, hybrid);
  json j = {{"status", "ok"}, {"formula", print(f)}, {"core", is_core(f)}, {"size", size(f)}, {"depth", depth(f)}};
  std::string t = print(f) + "\n";
  if (is_core(f)) {
    j["desugared"] = print(desugar(f));
    t += "desugared: " + print(desugar(f)) + "\n";
  }
  return emit(o, j, t, 0);
}

int cmd_check_frame(const Options& o, const std::string& path) {
  AnyFrame f = frame_from_json(load_json_file(path));
  Report r;
  std::string kind;
  if (auto* k = std::get_if<KripkeFrame>(&f)) {
    r = is_ms2ic_frame(*k);
    kind = "ms2ic";
  } else {
    r = is_modal_contact_frame(std::get<ModalContactFrame>(f));
    kind = "modal-contact";
  }
  json j = to_json(r);
  j["kind"] = kind;
  return emit(o, j, kind + " frame check: " + report_text(r), r.ok() ? 0 : 1);
}

int cmd_check_algebra(const Options& o, const std::string& path) {
  Algebra a = algebra_from_json(load_json_file(path));
  Report c = check_contact(a), cp = check_compingent(a), s9 = check_s9(a);
  OperatorFlags fl = check_operator(a);
  json pis = json::object();
  std::string pt;
  if (c.ok())
    for (const auto& r : rule_catalog()) {
      auto w = check_pi_sentence(a, r);
      pis[r.name] = !w;
      pt += "  Pi(" + r.name + "): " + (w ? "fails" : "holds") + "\n";
    }
  json j = {{"contact", to_json(c)},
            {"compingent", to_json(cp)},
            {"S9", to_json(s9)},
            {"operator",
             {{"de_vries_additive", fl.de_vries_additive},
              {"finitely_additive", fl.finitely_additive},
              {"proximity_preserving", fl.proximity_preserving},
              {"order_preserving", fl.order_preserving},
              {"upper_continuous", fl.upper_continuous},
              {"lower_continuous", fl.lower_continuous}}},
            {"pi_sentences", pis}};
  auto yn = [](bool b) { return b ? std::string("yes") : std::string("no"); };
  std::string t = "contact (S1-S6): " + report_text(c) + "compingent (S7-S8): " + report_text(cp) +
                  "S9: " + report_text(s9) + "de Vries additive: " + yn(fl.de_vries_additive) +
                  "\nfinitely additive: " + yn(fl.finitely_additive) +
                  "\nproximity preserving: " + yn(fl.proximity_preserving) +
                  "\norder preserving: " + yn(fl.order_preserving) +
                  "\nupper continuous: " + yn(fl.upper_continuous) +
                  "\nlower continuous: " + yn(fl.lower_continuous) + "\n" + pt;
  return emit(o, j, t, c.ok() ? 0 : 1);
}

int cmd_model_check(const Options& o, const std::string& frame, const std::string& val, const std::string& text,
                    const std::string& world, const std::string& mode) {
  AnyFrame f = frame_from_json(load_json_file(frame));
  const auto& w = frame_worlds(f);
  Valuation v = valuation_from_json(load_json_file(val), w);
  Formula phi = parse(text, true);
  WorldSet s = truth_set(f, v, phi, mode_of(mode));
  json j = {{"formula", print(phi)}, {"truth_set", set_json(s, w)}};
  std::string t = "truth set: " + set_text(s, w) + "\n";
  bool ok = s == full_set(frame_size(f));
  if (!world.empty()) {
    ok = has(s, world_of(w, world));
    j["world"] = world;
    t += world + (ok ? " satisfies the formula\n" : " refutes the formula\n");
  }
  j["status"] = ok ? "true" : "false";
  return emit(o, j, t, ok ? 0 : 1);
}

int cmd_validity(const Options& o, const std::string& text, const std::string& frame, const std::string& algebra,
                 const std::string& kind, int max_n, const std::string& mode, int cap) {
  Formula phi = parse(text, true);
  if (!algebra.empty()) {
    Algebra a = algebra_from_json(load_json_file(algebra));
    auto bad = algebra_validates(a, phi, cap);
    if (!bad) return emit(o, {{"status", "valid"}, {"formula", print(phi)}}, "valid in the algebra\n", 0);
    json jv = json::object();
    std::string t = "refuted in the algebra by\n";
    for (const auto& [k, x] : *bad) {
      jv[k] = x;
      t += "  " + k + " = " + std::to_string(x) + "\n";
    }
    return emit(o, {{"status", "countermodel"}, {"formula", print(phi)}, {"valuation", jv}}, t, 1);
  }
  std::optional<Countermodel> cm;
  if (!frame.empty()) {
    cm = is_valid_in_frame(frame_from_json(load_json_file(frame)), phi, mode_of(mode), cap);
  } else {
    if (max_n < 1) throw UsageError("--max-n must be at least 1");
    cm = find_countermodel(phi, max_n, parse_frame_kind(kind), mode_of(mode), o.workers, cap);
  }
  if (!cm) return emit(o, {{"status", "valid"}, {"formula", print(phi)}}, "valid\n", 0);
  const auto& w = frame_worlds(cm->frame);
  std::string t = "countermodel with " + std::to_string(w.size()) + " worlds, fails at " + w[cm->world] + "\n" +
                  to_json(cm->frame).dump() + "\n" + valuation_text(cm->valuation, w);
  return emit(o, to_json(*cm), t, 1);
}

int cmd_local_truth(const Options& o, const std::string& frame, const std::string& world, const std::string& text,
                    const std::string& mode, int cap) {
  AnyFrame f = frame_from_json(load_json_file(frame));
  const auto& w = frame_worlds(f);
  Formula phi = parse(text, true);
  auto bad = local_truth(f, world_of(w, world), phi, mode_of(mode), cap);
  if (!bad)
    return emit(o, {{"status", "valid"}, {"world", world}}, "valid at " + world + " under every valuation\n", 0);
  return emit(o, {{"status", "countermodel"}, {"world", world}, {"valuation", to_json(*bad, w)}},
              "refuted at " + world + " by\n" + valuation_text(*bad, w), 1);
}

int cmd_expand(const Options& o, const std::string& frame, const std::string& val, const std::string& phi_text,
               const std::string& construction, const std::string& fresh) {
  ModalContactFrame m = contact_from_json(load_json_file(frame));
  Valuation v = valuation_from_json(load_json_file(val), m.worlds);
  Formula phi = parse(phi_text);
  Expansion e;
  if (construction == "rho6" || construction == "pair") e = expand_rho6(m, v, phi, fresh);
  else if (construction == "two-copy" || construction == "rho7") e = expand_two_copy(m, v, phi, fresh);
  else throw UsageError("--construction must be 'rho6' or 'two-copy'");
  json map = json::object();
  std::string t;
  for (std::size_t i = 0; i < e.map.size(); ++i) {
    map[e.frame.worlds[i]] = m.worlds[e.map[i]];
    t += "  " + e.frame.worlds[i] + " -> " + m.worlds[e.map[i]] + "\n";
  }
  Report mr = is_regular_stable_pmorphism(e.map, e.frame, m);
  json j = {{"frame", to_json(e.frame)},
            {"map", map},
            {"valuation", to_json(e.valuation, e.frame.worlds)},
            {"fresh", e.fresh},
            {"regular_stable_pmorphism", mr.ok()}};
  std::string head = to_json(e.frame).dump() + "\nmap:\n" + t + "valuation:\n" +
                     valuation_text(e.valuation, e.frame.worlds) + "fresh variable: " + e.fresh +
                     "\nregular stable p-morphism: " + report_text(mr);
  return emit(o, j, head, mr.ok() ? 0 : 1);
}

int cmd_admissibility(const Options& o, const std::string& rule_name, const std::string& frame,
                      const std::string& val, const std::string& phi, const std::string& psi, const std::string& chi,
                      bool search, int max_n) {
  const Pi2Rule* r = find_rule(rule_name);
  if (!r) throw UsageError("unknown rule '" + rule_name + "'");
  Substitution inst;
  if (phi.empty()) throw UsageError("--phi is required");
  inst["phi"] = parse(phi);
  bool two = r->metavars.size() == 2;
  if (two) {
    if (psi.empty() || chi.empty()) throw UsageError(r->name + " needs --phi, --psi and --chi");
    inst["psi"] = parse(psi);
    inst["chi"] = parse(chi);
  } else {
    std::string c = chi.empty() ? psi : chi;
    if (c.empty()) throw UsageError(r->name + " needs --phi and --psi");
    inst["chi"] = parse(c);
  }
  ModalContactFrame m;
  Valuation v;
  if (search) {
    auto found = search_conclusion_failure(*r, inst, max_n, o.workers);
    if (!found) {
      json j = {{"rule", r->name}, {"status", "vacuous"}, {"vacuous", true}};
      return emit(o, j, "conclusion valid on all modal contact frames up to " + std::to_string(max_n) +
                            " worlds: vacuous\n", 1);
    }
    m = found->first;
    v = found->second;
  } else {
    if (frame.empty() || val.empty()) throw UsageError("--frame and --valuation are required without --search");
    m = contact_from_json(load_json_file(frame));
    v = valuation_from_json(load_json_file(val), m.worlds);
  }
  AdmissibilityReport rep = verify_admissibility_instance(*r, m, v, inst);
  json j = to_json(rep);
  if (search) j["input_frame"] = to_json(m), j["input_valuation"] = to_json(v, m.worlds);
  std::string t;
  if (rep.vacuous) {
    t = "conclusion " + print(rep.conclusion) + " holds everywhere: vacuous\n";
  } else {
    auto yn = [](bool b) { return b ? std::string("ok") : std::string("FAILED"); };
    t = "conclusion " + print(rep.conclusion) + " fails at " + rep.failure_world_name + "\n" +
        rep.expansion_kind + " expansion with " + std::to_string(rep.expansion.frame.size()) + " worlds\n" +
        "modal contact frame: " + yn(rep.expansion_is_frame) + "\nregular stable p-morphism: " +
        yn(rep.morphism_ok) + "\nsize law: " + yn(rep.size_law) + "\npremise " + print(rep.premise) +
        " fails at " + rep.expansion.frame.worlds[rep.witness] + ": " + yn(rep.premise_fails) + "\n" +
        (rep.verified() ? "verified\n" : "NOT verified\n");
  }
  return emit(o, j, t, rep.verified() ? 0 : 1);
}

int cmd_check_proof(const Options& o, const std::string& path, const std::string& library, const std::string& sys,
                    const std::vector<std::string>& gamma, const std::string& goal) {
  Proof p;
  std::string label;
  if (!library.empty()) {
    bool found = false;
    for (const auto& np : builtin_library())
      if (np.name == library) {
        p = np.proof;
        found = true;
      }
    if (!found) throw UsageError("no library script named '" + library + "'");
    label = library;
  } else {
    if (path.empty()) throw UsageError("--proof or --library is required");
    p = proof_from_json(load_json_file(path));
    label = path;
  }
  if (!sys.empty()) p.system = parse_system(sys);
  std::optional<ProofError> e;
  if (!goal.empty()) {
    std::vector<Formula> g;
    for (const auto& x : gamma) g.push_back(parse(x));
    e = check_gamma_derivation(g, parse(goal), p);
  } else {
    e = check_proof(p);
  }
  if (!e) {
    std::string last = p.steps.empty() ? "" : print(p.steps.back().formula);
    return emit(o, {{"status", "ok"}, {"system", system_name(p.system)}, {"steps", p.steps.size()}, {"proves", last}},
                label + ": ok (" + std::to_string(p.steps.size()) + " steps) proves " + last + "\n", 0);
  }
  return emit(o, {{"status", "error"}, {"step", e->step}, {"kind", e->kind}, {"message", e->message}},
              label + ": error at step " + std::to_string(e->step) + " (" + e->kind + "): " + e->message + "\n", 1);
}

bool uses_e(const Formula& f) {
  switch (f->kind) {
    case Kind::Univ:
    case Kind::Exist:
    case Kind::UnivInv:
    case Kind::ExistInv: return true;
    default: break;
  }
  int a = arity(f->kind);
  return (a >= 1 && uses_e(f->a)) || (a == 2 && uses_e(f->b));
}

bool fo_uses_e(const Fo& f) {
  if (f->kind == FoKind::E) return true;
  return (f->a && fo_uses_e(f->a)) || (f->b && fo_uses_e(f->b));
}

int cmd_correspond(const Options& o, const std::string& axiom_name, const std::string& text,
                   const std::string& fo_text, int n, int samples) {
  Formula ax;
  std::string label;
  if (!axiom_name.empty()) {
    auto a = correspondence_axiom(axiom_name);
    if (!a) throw UsageError("unknown axiom '" + axiom_name + "'");
    ax = *a;
    label = axiom_name;
  } else if (!text.empty()) {
    ax = parse(text);
    label = print(ax);
  } else {
    throw UsageError("--axiom or --formula is required");
  }
  SqemaResult r = run_sqema(ax);
  json j;
  std::string t = "axiom: " + print(ax) + "\nphase 1 disjuncts:\n";
  json dj = json::array();
  for (const auto& d : r.disjuncts) {
    dj.push_back(print(d));
    t += "  " + print(d) + "\n";
  }
  j["axiom"] = print(ax);
  j["disjuncts"] = dj;
  json systems = json::array();
  for (std::size_t k = 0; k < r.systems.size(); ++k) {
    const auto& s = r.systems[k];
    json steps = json::array();
    t += "system " + std::to_string(k + 1) + ":\n";
    for (const auto& e : s.steps) {
      json after = json::array();
      std::string line = "  " + e.rule + (e.var.empty() ? "" : " " + e.var) + ":";
      for (const auto& f : e.after) {
        after.push_back(print(f));
        line += "  || " + print(f);
      }
      steps.push_back({{"rule", e.rule}, {"index", e.index}, {"var", e.var}, {"minted", e.minted}, {"after", after}});
      t += line + "\n";
    }
    systems.push_back({{"solved", s.solved}, {"steps", steps}});
  }
  j["systems"] = systems;
  if (!r.ok) {
    j["status"] = "failure";
    j["failure"] = r.failure;
    return emit(o, j, t + "SQEMA failed: " + r.failure + "\n", 1);
  }
  j["pure"] = print(r.pure);
  j["first_order"] = print_fo(r.fo);
  t += "pure: " + print(r.pure) + "\nfirst-order: " + print_fo(r.fo) + "\n";

  Fo target;
  std::string target_label;
  if (!fo_text.empty()) {
    target = parse_fo(fo_text);
    target_label = print_fo(target);
  } else if (auto pc = printed_correspondent(axiom_name.empty() ? "" : axiom_name)) {
    target = *pc;
    target_label = print_fo(target);
  }
  bool with_e = uses_e(ax) || (target && fo_uses_e(target));
  std::uint64_t total = 0, agree_raw = 0, agree_target = 0;
  std::optional<std::pair<KripkeFrame, int>> bad;
  auto test = [&](const KripkeFrame& f, int w) {
    ++total;
    bool ok = !check_local_correspondence(f, w, ax, r.fo);
    agree_raw += ok;
    bool ok2 = true;
    if (target) {
      ok2 = !check_local_correspondence(f, w, ax, target);
      agree_target += ok2;
    }
    if ((!ok || !ok2) && !bad) bad = std::make_pair(f, w);
  };
  enumerate_kripke(n, with_e, [&](const KripkeFrame& f) {
    test(f, 0);
    return true;
  });
  std::mt19937_64 rng(o.seed);
  for (int s = 0; s < samples; ++s) {
    int size = 3 + static_cast<int>(rng() % 2);
    KripkeFrame f = random_kripke(size, rng(), with_e);
    test(f, static_cast<int>(rng() % size));
  }
  bool ok = agree_raw == total && (!target || agree_target == total);
  std::string count = std::to_string(target ? agree_target : agree_raw) + "/" + std::to_string(total);
  json v = {{"pointed_frames", total}, {"phase3_agrees", agree_raw}};
  if (target) {
    v["target"] = target_label;
    v["target_agrees"] = agree_target;
  }
  if (bad) v["witness"] = {{"frame", to_json(bad->first)}, {"world", bad->first.worlds[bad->second]}};
  j["verification"] = v;
  j["status"] = ok ? "verified" : "disagreement";
  std::string what = target ? target_label : std::string("the axiom");
  if (ok) t += "verified ≡ " + what + " on " + count + " pointed frames\n";
  else t += "DISAGREEMENT with " + what + " (" + count + " agree)\n" + to_json(bad->first).dump() + "\n";
  return emit(o, j, t, ok ? 0 : 1);
}

int cmd_pi_check(const Options& o, const std::string& path, const std::string& rule) {
  Algebra a = algebra_from_json(load_json_file(path));
  if (!check_contact(a).ok()) throw InputError("algebra: not a contact algebra");
  json res = json::object();
  std::string t;
  bool all = true;
  for (const auto& r : rule_catalog()) {
    if (!rule.empty() && find_rule(rule) != &r) continue;
    auto w = check_pi_sentence(a, r);
    if (w) {
      all = false;
      json x = json::object();
      for (std::size_t i = 0; i < r.metavars.size(); ++i) x[r.metavars[i]] = w->x[i];
      res[r.name] = {{"holds", false}, {"witness", {{"x", x}, {"z", w->z}}}};
      t += "Pi(" + r.name + "): fails";
      for (std::size_t i = 0; i < r.metavars.size(); ++i) t += " " + r.metavars[i] + "=" + std::to_string(w->x[i]);
      t += " z=" + std::to_string(w->z) + "\n";
    } else {
      res[r.name] = {{"holds", true}};
      t += "Pi(" + r.name + "): holds\n";
    }
  }
  if (res.empty()) throw UsageError("unknown rule '" + rule + "'");
  return emit(o, {{"rules", res}, {"status", all ? "holds" : "fails"}}, t, all ? 0 : 1);
}

int cmd_enumerate(const Options& o, const std::string& kind_s, int n, std::uint64_t limit) {
  FrameKind kind = parse_frame_kind(kind_s);
  json frames = json::array();
  std::string t;
  auto keep = [&](json f) {
    if (frames.size() < limit) {
      t += f.dump() + "\n";
      frames.push_back(std::move(f));
    }
    return true;
  };
  std::uint64_t count = 0;
  switch (kind) {
    case FrameKind::Kripke:
    case FrameKind::KripkeE:
      count = enumerate_kripke(n, kind == FrameKind::KripkeE, [&](const KripkeFrame& f) { return keep(to_json(f)); });
      break;
    case FrameKind::ModalContact:
      count = enumerate_modal_contact(n, [&](const ModalContactFrame& f) { return keep(to_json(f)); });
      break;
    case FrameKind::MS2IC:
      count = enumerate_ms2ic(n, [&](const KripkeFrame& f) { return keep(to_json(f)); });
      break;
  }
  return emit(o, {{"kind", kind_s}, {"n", n}, {"count", count}, {"frames", frames}},
              t + std::to_string(count) + " " + kind_s + " frames with " + std::to_string(n) + " worlds\n", 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for the modal symmetric strict implication calculus"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "JSON output")->configurable();
  app.add_option("--seed", o.seed, "seed for all sampling");
  app.add_option("--workers", o.workers, "worker threads for frame scans")->check(CLI::Range(1, 256));
  app.fallthrough();

  std::string formula, frame, valuation, world, mode = "core", algebra, kind = "modal-contact", phi, psi, chi;
  std::string construction, fresh, rule, proof, library, system, axiom, fo_text, goal;
  std::vector<std::string> gamma;
  bool hybrid = false, search = false;
  int max_n = 3, cap = kDefaultVariableCap, n = 2, samples = 0;
  std::uint64_t limit = 0;
  std::function<int()> run;

  auto* p = app.add_subcommand("parse", "parse and pretty-print a formula");
  p->add_option("--formula", formula)->required();
  p->add_flag("--hybrid", hybrid, "accept nominals and inverse modalities");
  p->callback([&] { run = [&] { return cmd_parse(o, formula, hybrid); }; });

  auto* cf = app.add_subcommand("check-frame", "check the frame conditions");
  cf->add_option("--frame", frame)->required();
  cf->callback([&] { run = [&] { return cmd_check_frame(o, frame); }; });

  auto* ca = app.add_subcommand("check-algebra", "check contact axioms and operator properties");
  ca->add_option("--algebra", algebra)->required();
  ca->callback([&] { run = [&] { return cmd_check_algebra(o, algebra); }; });

  auto* mc = app.add_subcommand("model-check", "truth set of a formula under a valuation");
  mc->add_option("--frame", frame)->required();
  mc->add_option("--valuation", valuation)->required();
  mc->add_option("--formula", formula)->required();
  mc->add_option("--world", world);
  mc->add_option("--mode", mode);
  mc->callback([&] { run = [&] { return cmd_model_check(o, frame, valuation, formula, world, mode); }; });

  auto* va = app.add_subcommand("validity", "validity on a frame, an algebra, or all small frames");
  va->add_option("--formula", formula)->required();
  va->add_option("--frame", frame);
  va->add_option("--algebra", algebra);
  va->add_option("--kind", kind);
  va->add_option("--max-n", max_n);
  va->add_option("--mode", mode);
  va->add_option("--cap", cap);
  va->callback([&] { run = [&] { return cmd_validity(o, formula, frame, algebra, kind, max_n, mode, cap); }; });

  auto* lt = app.add_subcommand("local-truth", "validity at one world under all valuations");
  lt->add_option("--frame", frame)->required();
  lt->add_option("--world", world)->required();
  lt->add_option("--formula", formula)->required();
  lt->add_option("--mode", mode);
  lt->add_option("--cap", cap);
  lt->callback([&] { run = [&] { return cmd_local_truth(o, frame, world, formula, mode, cap); }; });

  auto* ex = app.add_subcommand("expand", "pair or two-copy expansion of a modal contact frame");
  ex->add_option("--frame", frame)->required();
  ex->add_option("--valuation", valuation)->required();
  ex->add_option("--phi", phi)->required();
  ex->add_option("--construction", construction)->required();
  ex->add_option("--fresh", fresh);
  ex->callback([&] { run = [&] { return cmd_expand(o, frame, valuation, phi, construction, fresh); }; });

  auto* ad = app.add_subcommand("admissibility", "verify one admissibility instance of a Pi2-rule");
  ad->add_option("--rule", rule)->required();
  ad->add_option("--frame", frame);
  ad->add_option("--valuation", valuation);
  ad->add_option("--phi", phi);
  ad->add_option("--psi", psi);
  ad->add_option("--chi", chi);
  ad->add_flag("--search", search, "search for a conclusion countermodel");
  ad->add_option("--max-n", max_n);
  ad->callback(
      [&] { run = [&] { return cmd_admissibility(o, rule, frame, valuation, phi, psi, chi, search, max_n); }; });

  auto* cp = app.add_subcommand("check-proof", "check a Hilbert proof");
  cp->add_option("--proof", proof);
  cp->add_option("--library", library, "check a shipped script by name");
  cp->add_option("--system", system);
  cp->add_option("--gamma", gamma, "premises of a derivation [A](g1 and ...) -> phi");
  cp->add_option("--phi", goal, "goal of the derivation");
  cp->callback([&] { run = [&] { return cmd_check_proof(o, proof, library, system, gamma, goal); }; });

  auto* co = app.add_subcommand("correspond", "run SQEMA and verify the first-order output");
  co->add_option("--axiom", axiom);
  co->add_option("--formula", formula);
  co->add_option("--fo", fo_text, "first-order formula to compare against");
  co->add_option("--n", n, "frame size for exhaustive verification")->check(CLI::Range(1, 3));
  co->add_option("--samples", samples, "extra random pointed frames of size 3-4");
  co->callback([&] { run = [&] { return cmd_correspond(o, axiom, formula, fo_text, n, samples); }; });

  auto* pc = app.add_subcommand("pi-check", "evaluate the Pi-sentences of the rules on an algebra");
  pc->add_option("--algebra", algebra)->required();
  pc->add_option("--rule", rule);
  pc->callback([&] { run = [&] { return cmd_pi_check(o, algebra, rule); }; });

  auto* en = app.add_subcommand("enumerate", "enumerate frames of a given size");
  en->add_option("--kind", kind)->required();
  en->add_option("--n", n)->required();
  en->add_option("--limit", limit, "print at most this many frames");
  en->callback([&] { run = [&] { return cmd_enumerate(o, kind, n, limit); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    return run();
  } catch (const SyntaxError& e) {
    std::cerr << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
