#pragma once

#include <optional>
#include <variant>

#include "ms2ic/frames.hpp"

namespace ms2ic {

// Core: [A] is read as top ~> phi; hybrid kinds are rejected.
// Appendix: [A] and its inverse use E when the frame carries one.
enum class Mode { Core, Appendix };

class SemanticsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using AnyFrame = std::variant<KripkeFrame, ModalContactFrame>;

int frame_size(const AnyFrame& f);
const std::vector<std::string>& frame_worlds(const AnyFrame& f);

WorldSet truth_set(const KripkeFrame& f, const Valuation& v, const Formula& phi, Mode mode = Mode::Core);
WorldSet truth_set(const ModalContactFrame& m, const Valuation& v, const Formula& phi);
WorldSet truth_set(const AnyFrame& f, const Valuation& v, const Formula& phi, Mode mode = Mode::Core);

// relation read by [A] and <E>: E if present, otherwise {(x,z) : exists y. Txyz}
std::vector<WorldSet> univ_relation(const KripkeFrame& f);

struct Countermodel {
  AnyFrame frame;
  Valuation valuation;
  int world = 0;
  Formula formula;
};

constexpr int kDefaultVariableCap = 3;

// Calls visit for every valuation of the formula's variables and nominals,
// ordered by bitmask; stops when visit returns false.
void for_each_valuation(int n, const std::vector<std::string>& vars, const std::vector<std::string>& noms,
                        const std::function<bool(const Valuation&)>& visit);

std::optional<Countermodel> is_valid_in_frame(const AnyFrame& f, const Formula& phi, Mode mode = Mode::Core,
                                              int cap = kDefaultVariableCap);
std::optional<Valuation> local_truth(const AnyFrame& f, int world, const Formula& phi, Mode mode = Mode::Core,
                                     int cap = kDefaultVariableCap);
std::optional<Countermodel> find_countermodel(const Formula& phi, int max_n, FrameKind kind,
                                              Mode mode = Mode::Core, int workers = 1,
                                              int cap = kDefaultVariableCap);

}  // namespace ms2ic
