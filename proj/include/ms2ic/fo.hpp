#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ms2ic/frames.hpp"

namespace ms2ic {

enum class FoKind { True, False, Eq, E, S, T, Pred, Not, And, Or, Implies, Iff, Forall, Exists };

struct FoNode;
using Fo = std::shared_ptr<const FoNode>;

struct FoNode {
  FoKind kind;
  std::vector<std::string> args;  // atom arguments
  std::string name;               // bound variable or predicate name
  Fo a, b;
};

namespace fo {
Fo truth();
Fo falsity();
Fo eq(const std::string& x, const std::string& y);
Fo e(const std::string& x, const std::string& y);
Fo s(const std::string& x, const std::string& y);
Fo t(const std::string& x, const std::string& y, const std::string& z);
Fo pred(const std::string& name, const std::string& x);
Fo neg(Fo a);
Fo conj(Fo a, Fo b);
Fo disj(Fo a, Fo b);
Fo implies(Fo a, Fo b);
Fo iff(Fo a, Fo b);
Fo forall(const std::string& v, Fo body);
Fo exists(const std::string& v, Fo body);
}  // namespace fo

// concrete syntax: forall y. exists z. (T(x,y,z) & E(x,y)) -> y = z
Fo parse_fo(std::string_view text);
std::string print_fo(const Fo& f);
std::set<std::string> free_vars(const Fo& f);

using Assignment = std::map<std::string, int>;

// E atoms read univ_relation when the frame has no E; Pred atoms read v.vars
bool eval_fo(const KripkeFrame& f, const Fo& phi, const Assignment& a, const Valuation& v = {});

}  // namespace ms2ic
