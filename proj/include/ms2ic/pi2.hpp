#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ms2ic/calculus.hpp"
#include "ms2ic/frames.hpp"

namespace ms2ic {

class AdmissibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// the five rules in catalog order: rho6, rho7, UC, rho9, LC
const std::vector<Pi2Rule>& rule_catalog();

struct AdmissibilityReport {
  std::string rule;
  Substitution instantiation;
  Formula conclusion;          // G(φ̄) -> χ
  Formula premise;             // F(φ̄, p) -> χ with p renamed to expansion.fresh
  bool vacuous = false;
  int failure_world = -1;      // conclusion fails here in the input frame
  std::string failure_world_name;
  std::string expansion_kind;  // "pair" or "two-copy"
  Expansion expansion;
  int witness = -1;            // a' in the expansion
  bool expansion_is_frame = false;
  bool morphism_ok = false;
  bool size_law = false;
  bool premise_fails = false;
  bool verified() const {
    return !vacuous && expansion_is_frame && morphism_ok && size_law && premise_fails;
  }
  std::vector<std::string> notes;
};

// inst binds the rule's metavariables and "chi"
AdmissibilityReport verify_admissibility_instance(const Pi2Rule& rule, const ModalContactFrame& m,
                                                  const Valuation& v, const Substitution& inst);

// smallest modal contact frame (up to max_n worlds) refuting the instantiated conclusion
std::optional<std::pair<ModalContactFrame, Valuation>> search_conclusion_failure(const Pi2Rule& rule,
                                                                                  const Substitution& inst,
                                                                                  int max_n, int workers = 1);

}  // namespace ms2ic
