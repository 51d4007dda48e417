#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ms2ic/formula.hpp"
#include "ms2ic/frames.hpp"

namespace ms2ic {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Powerset algebra over `atoms` atoms; elements are masks 0..2^atoms-1.
// prec[a] is the mask of all b with a ≺ b.
struct Algebra {
  int atoms = 0;
  std::vector<std::uint64_t> prec;
  std::vector<int> diamond;

  Algebra() = default;
  explicit Algebra(int atoms);  // empty prec, identity diamond

  int elements() const { return 1 << atoms; }
  int top() const { return elements() - 1; }
  int complement(int a) const { return top() & ~a; }
  bool precedes(int a, int b) const { return (prec[a] >> b) & 1u; }
  void set_prec(int a, int b, bool on = true);
  bool operator==(const Algebra& o) const = default;

  static Algebra order(int atoms);  // ≺ = ≤, ◇ = id
};

using AlgebraValuation = std::map<std::string, int>;

Report check_contact(const Algebra& a);
Report check_compingent(const Algebra& a);  // (S7), (S8)
Report check_s9(const Algebra& a);

struct OperatorFlags {
  bool de_vries_additive = false;
  bool finitely_additive = false;
  bool proximity_preserving = false;
  bool order_preserving = false;
  bool upper_continuous = false;
  bool lower_continuous = false;
};

OperatorFlags check_operator(const Algebra& a);
std::vector<int> box_dual_table(const Algebra& a);
bool box_upper_continuous(const Algebra& a);
bool box_lower_continuous(const Algebra& a);

int algebra_truth(const Algebra& a, const AlgebraValuation& v, const Formula& f);
std::optional<AlgebraValuation> algebra_validates(const Algebra& a, const Formula& f, int cap = -1);

struct Pi2Rule;
struct PiWitness {
  std::vector<int> x;  // values for the rule's formula metavariables
  int z = 0;
};
std::optional<PiWitness> check_pi_sentence(const Algebra& a, const Pi2Rule& rule);

// all contact relations at the given atom count (exhaustive; atoms <= 2)
std::vector<Algebra> all_contact_relations(int atoms);

}  // namespace ms2ic
