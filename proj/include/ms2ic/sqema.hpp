#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ms2ic/fo.hpp"
#include "ms2ic/formula.hpp"
#include "ms2ic/frames.hpp"

namespace ms2ic {

class SqemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using SqSystem = std::vector<Formula>;

// rule names: and, univ, box, nabla1, nabla2, exist, dia, delta, ackermann, polarity
struct TraceEntry {
  std::string rule;
  int index = 0;     // formula position in the system (0-based)
  int disjunct = 0;  // position of the rewritten disjunct inside that formula
  std::string var;   // ackermann / polarity
  std::vector<std::string> minted;
  SqSystem before;
  SqSystem after;
};

struct SystemTrace {
  SqSystem initial;
  std::vector<TraceEntry> steps;
  SqSystem final;
  bool solved = false;
};

Formula nnf_not(const Formula& f);  // negation normal form of ¬f
std::vector<Formula> phase1(const Formula& axiom);
std::vector<Formula> disjuncts(const Formula& f);

SqSystem apply_rule(const SqSystem& sys, const std::string& rule, int index, int disjunct = 0,
                    const std::string& var = "", const std::vector<std::string>& minted = {});
bool replay(const SystemTrace& t);

Fo standard_translation(const Formula& f, const std::string& var);
// ∀ȳ ⋀ₖ ∃x0 ST(¬pureₖ, x0); x stays free and names the reserved nominal #i
Fo phase3(const std::vector<Formula>& pures);

struct SqemaResult {
  bool ok = false;
  std::vector<Formula> disjuncts;
  std::vector<SystemTrace> systems;
  Formula pure;
  Fo fo;
  std::string failure;
};

SqemaResult run_sqema(const Formula& axiom, int step_bound = 10000);

// ∇-language axioms by name, including A5-lr, A10-lr and A10-rl
std::optional<Formula> correspondence_axiom(const std::string& name);
std::vector<std::string> correspondence_axiom_names();
// first-order correspondents printed for the appendix items, keyed by axiom name
std::optional<Fo> printed_correspondent(const std::string& name);

struct Disagreement {
  bool modal = false;
  bool first_order = false;
  std::optional<Valuation> countervaluation;
};

std::optional<Disagreement> check_local_correspondence(const KripkeFrame& f, int world, const Formula& axiom,
                                                       const Fo& fo);

}  // namespace ms2ic
