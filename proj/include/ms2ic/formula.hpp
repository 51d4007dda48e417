#pragma once

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ms2ic {

enum class Kind {
  Var, Bot, Top, Not, And, Or, Implies, Iff, Simp,
  Box, Dia, Univ, Exist, Nabla, Delta,
  // hybrid reversive extension
  Nominal, UnivInv, ExistInv, BoxInv, DiaInv,
  NablaInv1, NablaInv2, DeltaInv1, DeltaInv2
};

struct Node;
using Formula = std::shared_ptr<const Node>;

struct Node {
  Kind kind;
  std::string name;  // Var and Nominal only
  Formula a, b;
};

int arity(Kind k);
bool is_hybrid_kind(Kind k);
bool is_boolean_kind(Kind k);

// ── construction ──

Formula var(std::string name);
Formula nominal(std::string name);
Formula bot();
Formula top();
Formula neg(Formula f);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula iff(Formula a, Formula b);
Formula simp(Formula a, Formula b);
Formula box(Formula f);
Formula dia(Formula f);
Formula univ(Formula f);
Formula exist(Formula f);
Formula nabla(Formula a, Formula b);
Formula delta(Formula a, Formula b);
Formula unary(Kind k, Formula f);
Formula binary(Kind k, Formula a, Formula b);

Formula conj_all(const std::vector<Formula>& fs);  // empty -> top
Formula disj_all(const std::vector<Formula>& fs);  // empty -> bot

// ── comparison ──

int compare(const Formula& x, const Formula& y);
bool same(const Formula& x, const Formula& y);
struct FormulaLess {
  bool operator()(const Formula& x, const Formula& y) const { return compare(x, y) < 0; }
};

bool is_core(const Formula& f);
std::size_t size(const Formula& f);
std::size_t depth(const Formula& f);

// ── concrete syntax ──

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& msg, std::size_t column);
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

// Columns are 1-based. An unexpected end of input is reported one column
// past the position a following token would take after a separating blank.
Formula parse(std::string_view text, bool hybrid = false);
std::string print(const Formula& f);

// ── transformations ──

using Substitution = std::map<std::string, Formula>;

Formula substitute(const Formula& f, const Substitution& s);
Formula desugar(const Formula& f);
Formula negate_normalized(const Formula& f);  // ¬⊤=⊥, ¬⊥=⊤, ¬¬φ=φ
Formula to_nabla_language(const Formula& f);
Formula from_nabla_language(const Formula& f);

std::set<std::string> variables(const Formula& f);
std::set<std::string> nominals(const Formula& f);
bool occurs_var(const Formula& f, const std::string& name);

}  // namespace ms2ic
