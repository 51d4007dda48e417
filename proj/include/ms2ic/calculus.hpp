#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ms2ic/formula.hpp"

namespace ms2ic {

// Nabla is the ∇-language presentation with (A0), where [A] is primitive.
enum class System { S2IC, MS2IC, MS2ICu, Nabla };

System parse_system(const std::string& s);
std::string system_name(System s);

struct AxiomScheme {
  std::string name;
  Formula tmpl;         // every variable is a metavariable
  bool nabla = false;   // [A] and ∇ primitive; matched syntactically
};

const std::vector<AxiomScheme>& core_schemes();   // A1..A5, A8..A11, K, Add
const std::vector<AxiomScheme>& nabla_schemes();  // A0..A5, A8..A11, K, Add in ∇ form
const AxiomScheme* find_scheme(const std::string& name, System system);
std::vector<std::string> scheme_names();  // the 12 templates plus "PC"

std::optional<Substitution> match_scheme(const AxiomScheme& s, const Formula& f);
bool is_tautology(const Formula& f);

struct Pi2Rule {
  std::string name;
  Formula F;                          // premise antecedent over metavars and fresh
  Formula G;                          // conclusion antecedent over metavars
  std::vector<std::string> metavars;  // formula metavariables of F and G
  std::vector<std::string> fresh;
  Formula premise() const;     // F -> chi
  Formula conclusion() const;  // G -> chi
};

const std::vector<Pi2Rule>& pi2_rules();
const Pi2Rule* find_rule(const std::string& name);
bool rule_in_system(const std::string& rule, System system);

enum class By { Premise, Axiom, MP, R, N, Cong, Pi2 };

struct Justification {
  By kind = By::Premise;
  std::string name;                  // scheme or rule
  std::optional<Substitution> subst;
  int i = 0;                         // 1-based step references
  int j = 0;
  std::vector<std::string> fresh;
};

struct Step {
  Formula formula;
  Justification by;
};

struct Proof {
  System system = System::MS2IC;
  std::vector<Formula> premises;
  std::vector<Step> steps;
};

struct ProofError {
  int step = 0;       // 1-based
  std::string kind;   // bad-index, scheme-mismatch, mp-shape, rule-shape, freshness, rule-not-in-system, ...
  std::string message;
};

std::optional<ProofError> check_proof(const Proof& p, const std::vector<Formula>& premises, System system);
inline std::optional<ProofError> check_proof(const Proof& p) { return check_proof(p, p.premises, p.system); }

std::optional<ProofError> check_gamma_derivation(const std::vector<Formula>& gamma, const Formula& phi,
                                                 const Proof& proof);

Proof substitute_proof(const Proof& p, const Substitution& s);

struct NamedProof {
  std::string name;
  Formula goal;
  Proof proof;
};

std::vector<NamedProof> builtin_library();

}  // namespace ms2ic
