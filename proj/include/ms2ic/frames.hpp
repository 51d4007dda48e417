#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ms2ic/formula.hpp"

namespace ms2ic {

using WorldSet = std::uint64_t;
constexpr int kMaxWorlds = 64;

inline WorldSet bit(int i) { return WorldSet{1} << i; }
inline bool has(WorldSet s, int i) { return (s >> i) & 1u; }
inline WorldSet full_set(int n) { return n >= 64 ? ~WorldSet{0} : (bit(n) - 1); }

class FrameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Relations are stored as successor masks: T[x*n+y] holds {z : Txyz}.
struct KripkeFrame {
  std::vector<std::string> worlds;
  std::vector<WorldSet> T;
  std::vector<WorldSet> S;
  std::optional<std::vector<WorldSet>> E;

  KripkeFrame() = default;
  explicit KripkeFrame(std::vector<std::string> names);
  static KripkeFrame numbered(int n);

  int size() const { return static_cast<int>(worlds.size()); }
  bool t(int x, int y, int z) const { return has(T[x * size() + y], z); }
  bool s(int x, int y) const { return has(S[x], y); }
  void add_t(int x, int y, int z) { T[x * size() + y] |= bit(z); }
  void add_s(int x, int y) { S[x] |= bit(y); }
  void add_e(int x, int y);
  int index_of(const std::string& w) const;
  bool operator==(const KripkeFrame& o) const;
};

struct ModalContactFrame {
  std::vector<std::string> worlds;
  std::vector<WorldSet> R;
  std::vector<WorldSet> S;

  ModalContactFrame() = default;
  explicit ModalContactFrame(std::vector<std::string> names);
  static ModalContactFrame numbered(int n);

  int size() const { return static_cast<int>(worlds.size()); }
  bool r(int x, int y) const { return has(R[x], y); }
  bool s(int x, int y) const { return has(S[x], y); }
  void add_r(int x, int y) { R[x] |= bit(y); }
  void add_s(int x, int y) { S[x] |= bit(y); }
  int index_of(const std::string& w) const;
  bool operator==(const ModalContactFrame& o) const;
};

// world index i of the source maps to target index map[i]
using WorldMap = std::vector<int>;

struct Violation {
  std::string condition;
  std::vector<std::string> witness;
};

struct Report {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool violates(const std::string& condition) const;
  std::string summary() const;
};

WorldSet image(const std::vector<WorldSet>& rel, WorldSet a);
WorldSet preimage(const std::vector<WorldSet>& rel, WorldSet a);

std::vector<WorldSet> et_relation(const KripkeFrame& f);
Report is_ms2ic_frame(const KripkeFrame& f);
Report is_modal_contact_frame(const ModalContactFrame& m);
bool is_simple(const KripkeFrame& f);

KripkeFrame t_from_r(const ModalContactFrame& m);
ModalContactFrame r_from_t(const KripkeFrame& f);

std::vector<WorldSet> et_classes(const KripkeFrame& f);
KripkeFrame generated_subframe(const KripkeFrame& f, WorldSet worlds);

Report is_pmorphism(const WorldMap& map, const KripkeFrame& src, const KripkeFrame& dst);
Report is_regular_stable_pmorphism(const WorldMap& map, const ModalContactFrame& src,
                                   const ModalContactFrame& dst);

// ── expansions ──

struct Valuation {
  std::map<std::string, WorldSet> vars;
  std::map<std::string, int> noms;
};

struct Expansion {
  ModalContactFrame frame;
  WorldMap map;
  Valuation valuation;
  std::string fresh;
};

std::string fresh_variable(const Formula& phi, const Valuation& v, const std::string& base = "p");
// An empty `fresh` picks fresh_variable(phi, v); a given name must not occur in phi or v.
Expansion expand_rho6(const ModalContactFrame& m, const Valuation& v, const Formula& phi,
                      const std::string& fresh = "");
Expansion expand_two_copy(const ModalContactFrame& m, const Valuation& v, const Formula& phi,
                          const std::string& fresh = "");

// ── enumeration ──

enum class FrameKind { Kripke, KripkeE, ModalContact, MS2IC };

FrameKind parse_frame_kind(const std::string& s);
std::string frame_kind_name(FrameKind k);

std::uint64_t enumeration_bound();  // CLW_MAX_ENUM or 2^28
int enumeration_bits(int n, FrameKind kind);

// Visitors return false to stop early. Returns the number of frames yielded.
std::uint64_t enumerate_kripke(int n, bool with_e, const std::function<bool(const KripkeFrame&)>& visit,
                               std::uint64_t bound = 0);
std::uint64_t enumerate_modal_contact(int n, const std::function<bool(const ModalContactFrame&)>& visit,
                                      std::uint64_t bound = 0);
std::uint64_t enumerate_ms2ic(int n, const std::function<bool(const KripkeFrame&)>& visit,
                              std::uint64_t bound = 0);

KripkeFrame random_kripke(int n, std::uint64_t seed, bool with_e);
ModalContactFrame random_modal_contact(int n, std::uint64_t seed);
KripkeFrame random_ms2ic(int n, std::uint64_t seed);

}  // namespace ms2ic
