#include "ms2ic/frames.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>

#include "ms2ic/semantics.hpp"

namespace ms2ic {

namespace {

void check_size(std::size_t n) {
  if (n == 0) throw FrameError("frame must have at least one world");
  if (n > static_cast<std::size_t>(kMaxWorlds))
    throw FrameError("frames are limited to " + std::to_string(kMaxWorlds) + " worlds");
}

std::vector<std::string> number_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return names;
}

int find_name(const std::vector<std::string>& ws, const std::string& w) {
  auto it = std::find(ws.begin(), ws.end(), w);
  if (it == ws.end()) throw FrameError("unknown world '" + w + "'");
  return static_cast<int>(it - ws.begin());
}

}  // namespace

KripkeFrame::KripkeFrame(std::vector<std::string> names) : worlds(std::move(names)) {
  check_size(worlds.size());
  T.assign(worlds.size() * worlds.size(), 0);
  S.assign(worlds.size(), 0);
}

KripkeFrame KripkeFrame::numbered(int n) { return KripkeFrame(number_names(n)); }

void KripkeFrame::add_e(int x, int y) {
  if (!E) E.emplace(worlds.size(), 0);
  (*E)[x] |= bit(y);
}

int KripkeFrame::index_of(const std::string& w) const { return find_name(worlds, w); }

bool KripkeFrame::operator==(const KripkeFrame& o) const {
  return worlds == o.worlds && T == o.T && S == o.S && E == o.E;
}

ModalContactFrame::ModalContactFrame(std::vector<std::string> names) : worlds(std::move(names)) {
  check_size(worlds.size());
  R.assign(worlds.size(), 0);
  S.assign(worlds.size(), 0);
}

ModalContactFrame ModalContactFrame::numbered(int n) { return ModalContactFrame(number_names(n)); }

int ModalContactFrame::index_of(const std::string& w) const { return find_name(worlds, w); }

bool ModalContactFrame::operator==(const ModalContactFrame& o) const {
  return worlds == o.worlds && R == o.R && S == o.S;
}

bool Report::violates(const std::string& condition) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.condition == condition; });
}

std::string Report::summary() const {
  if (ok()) return "pass";
  std::ostringstream os;
  os << "fail";
  for (const auto& v : violations) {
    os << " (" << v.condition;
    for (const auto& w : v.witness) os << ' ' << w;
    os << ')';
  }
  return os.str();
}

WorldSet image(const std::vector<WorldSet>& rel, WorldSet a) {
  WorldSet out = 0;
  for (std::size_t x = 0; x < rel.size(); ++x)
    if (has(a, static_cast<int>(x))) out |= rel[x];
  return out;
}

WorldSet preimage(const std::vector<WorldSet>& rel, WorldSet a) {
  WorldSet out = 0;
  for (std::size_t x = 0; x < rel.size(); ++x)
    if (rel[x] & a) out |= bit(static_cast<int>(x));
  return out;
}

std::vector<WorldSet> et_relation(const KripkeFrame& f) {
  int n = f.size();
  std::vector<WorldSet> e(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (f.T[x * n + y]) e[x] |= bit(y);
  return e;
}

Report is_ms2ic_frame(const KripkeFrame& f) {
  Report rep;
  int n = f.size();
  const auto& W = f.worlds;
  auto et = et_relation(f);

  for (int x = 0; x < n; ++x)
    if (!f.t(x, x, x)) { rep.violations.push_back({"1", {W[x]}}); break; }

  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (f.t(x, y, z) && !f.t(x, z, y)) {
            rep.violations.push_back({"2", {W[x], W[y], W[z]}});
            return;
          }
  }();

  [&] {
    for (int x = 0; x < n; ++x)
      if (!has(et[x], x)) { rep.violations.push_back({"3", {W[x], W[x]}}); return; }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (has(et[x], y) && !has(et[y], x)) { rep.violations.push_back({"3", {W[x], W[y]}}); return; }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (has(et[x], y) && has(et[y], z) && !has(et[x], z)) {
            rep.violations.push_back({"3", {W[x], W[y], W[z]}});
            return;
          }
  }();

  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          if (!f.t(x, y, z)) continue;
          for (int w = 0; w < n; ++w)
            if (has(et[x], w) && !f.t(w, y, z)) {
              rep.violations.push_back({"4", {W[x], W[y], W[z], W[w]}});
              return;
            }
        }
  }();

  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          if (!f.t(x, y, z)) continue;
          for (int w = 0; w < n; ++w) {
            if (!f.s(y, w)) continue;
            // need u with Txwu and zSu
            if ((f.T[x * n + w] & f.S[z]) == 0) {
              rep.violations.push_back({"5", {W[x], W[y], W[z], W[w]}});
              return;
            }
          }
        }
  }();
  return rep;
}

Report is_modal_contact_frame(const ModalContactFrame& m) {
  Report rep;
  int n = m.size();
  const auto& W = m.worlds;
  for (int x = 0; x < n; ++x)
    if (!m.r(x, x)) { rep.violations.push_back({"reflexive", {W[x]}}); break; }
  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (m.r(x, y) && !m.r(y, x)) { rep.violations.push_back({"symmetric", {W[x], W[y]}}); return; }
  }();
  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (!m.r(x, y)) continue;
        for (int z = 0; z < n; ++z) {
          if (!m.s(x, z)) continue;
          if ((m.R[z] & m.S[y]) == 0) {
            rep.violations.push_back({"confluence", {W[x], W[y], W[z]}});
            return;
          }
        }
      }
  }();
  return rep;
}

bool is_simple(const KripkeFrame& f) {
  auto et = et_relation(f);
  WorldSet all = full_set(f.size());
  return std::all_of(et.begin(), et.end(), [&](WorldSet s) { return s == all; });
}

KripkeFrame t_from_r(const ModalContactFrame& m) {
  KripkeFrame f(m.worlds);
  int n = m.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) f.T[x * n + y] = m.R[y];
  f.S = m.S;
  return f;
}

ModalContactFrame r_from_t(const KripkeFrame& f) {
  Report rep = is_ms2ic_frame(f);
  if (!rep.ok()) throw FrameError("r_from_t: not an MS2IC frame: " + rep.summary());
  if (!is_simple(f)) throw FrameError("r_from_t: frame is not simple");
  ModalContactFrame m(f.worlds);
  int n = f.size();
  for (int x = 0; x < n; ++x) m.R[x] = f.T[x * n + x];
  m.S = f.S;
  return m;
}

std::vector<WorldSet> et_classes(const KripkeFrame& f) {
  Report rep = is_ms2ic_frame(f);
  if (!rep.ok()) throw FrameError("et_classes: not an MS2IC frame: " + rep.summary());
  auto et = et_relation(f);
  std::vector<WorldSet> classes;
  WorldSet seen = 0;
  for (int x = 0; x < f.size(); ++x) {
    if (has(seen, x)) continue;
    classes.push_back(et[x]);
    seen |= et[x];
  }
  return classes;
}

KripkeFrame generated_subframe(const KripkeFrame& f, WorldSet ws) {
  int n = f.size();
  ws &= full_set(n);
  if (ws == 0) throw FrameError("generated_subframe: empty world set");
  std::vector<int> idx(n, -1);
  std::vector<std::string> names;
  for (int x = 0; x < n; ++x)
    if (has(ws, x)) { idx[x] = static_cast<int>(names.size()); names.push_back(f.worlds[x]); }
  for (int x = 0; x < n; ++x) {
    if (!has(ws, x)) continue;
    if (f.S[x] & ~ws) throw FrameError("generated_subframe: not closed under S at " + f.worlds[x]);
    for (int y = 0; y < n; ++y) {
      WorldSet zs = f.T[x * n + y];
      if (zs && (!has(ws, y) || (zs & ~ws)))
        throw FrameError("generated_subframe: not closed under T at " + f.worlds[x]);
    }
  }
  KripkeFrame g(names);
  for (int x = 0; x < n; ++x) {
    if (!has(ws, x)) continue;
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (f.t(x, y, z)) g.add_t(idx[x], idx[y], idx[z]);
    for (int y = 0; y < n; ++y)
      if (f.s(x, y)) g.add_s(idx[x], idx[y]);
    if (f.E)
      for (int y = 0; y < n; ++y)
        if (has((*f.E)[x], y) && has(ws, y)) g.add_e(idx[x], idx[y]);
  }
  if (f.E && !g.E) g.E.emplace(names.size(), 0);
  return g;
}

namespace {

void check_map(const WorldMap& map, int src_n, int dst_n) {
  if (static_cast<int>(map.size()) != src_n) throw FrameError("world map is not total");
  for (int v : map)
    if (v < 0 || v >= dst_n) throw FrameError("world map leaves the target frame");
}

void check_s_conditions(Report& rep, const WorldMap& f, const std::vector<WorldSet>& S,
                        const std::vector<WorldSet>& S2, const std::vector<std::string>& W,
                        const std::vector<std::string>& W2) {
  int n = static_cast<int>(S.size()), n2 = static_cast<int>(S2.size());
  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (has(S[x], y) && !has(S2[f[x]], f[y])) { rep.violations.push_back({"S1", {W[x], W[y]}}); return; }
  }();
  [&] {
    for (int x = 0; x < n; ++x)
      for (int y2 = 0; y2 < n2; ++y2) {
        if (!has(S2[f[x]], y2)) continue;
        bool found = false;
        for (int y = 0; y < n && !found; ++y) found = has(S[x], y) && f[y] == y2;
        if (!found) { rep.violations.push_back({"S2", {W[x], W2[y2]}}); return; }
      }
  }();
}

}  // namespace

Report is_pmorphism(const WorldMap& f, const KripkeFrame& src, const KripkeFrame& dst) {
  int n = src.size(), n2 = dst.size();
  check_map(f, n, n2);
  Report rep;
  const auto& W = src.worlds;
  const auto& W2 = dst.worlds;
  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (src.t(x, y, z) && !dst.t(f[x], f[y], f[z])) {
            rep.violations.push_back({"T1", {W[x], W[y], W[z]}});
            return;
          }
  }();
  [&] {
    for (int x = 0; x < n; ++x)
      for (int y2 = 0; y2 < n2; ++y2)
        for (int z2 = 0; z2 < n2; ++z2) {
          if (!dst.t(f[x], y2, z2)) continue;
          bool found = false;
          for (int y = 0; y < n && !found; ++y)
            for (int z = 0; z < n && !found; ++z)
              found = src.t(x, y, z) && f[y] == y2 && f[z] == z2;
          if (!found) { rep.violations.push_back({"T2", {W[x], W2[y2], W2[z2]}}); return; }
        }
  }();
  check_s_conditions(rep, f, src.S, dst.S, W, W2);
  return rep;
}

Report is_regular_stable_pmorphism(const WorldMap& f, const ModalContactFrame& src,
                                   const ModalContactFrame& dst) {
  int n = src.size(), n2 = dst.size();
  check_map(f, n, n2);
  Report rep;
  const auto& W = src.worlds;
  const auto& W2 = dst.worlds;
  check_s_conditions(rep, f, src.S, dst.S, W, W2);
  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (src.r(x, y) && !dst.r(f[x], f[y])) { rep.violations.push_back({"R1", {W[x], W[y]}}); return; }
  }();
  [&] {
    for (int x2 = 0; x2 < n2; ++x2)
      for (int y2 = 0; y2 < n2; ++y2) {
        if (!dst.r(x2, y2)) continue;
        bool found = false;
        for (int x = 0; x < n && !found; ++x)
          for (int y = 0; y < n && !found; ++y) found = src.r(x, y) && f[x] == x2 && f[y] == y2;
        if (!found) { rep.violations.push_back({"R2", {W2[x2], W2[y2]}}); return; }
      }
  }();
  return rep;
}

// ── expansions ──

std::string fresh_variable(const Formula& phi, const Valuation& v, const std::string& base) {
  auto used = variables(phi);
  for (const auto& [k, _] : v.vars) used.insert(k);
  if (!used.count(base)) return base;
  for (int i = 0;; ++i) {
    std::string c = base + "_" + std::to_string(i);
    if (!used.count(c)) return c;
  }
}

namespace {

Valuation pull_back(const Valuation& v, const WorldMap& f) {
  Valuation w;
  for (const auto& [name, set] : v.vars) {
    WorldSet pre = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
      if (has(set, f[i])) pre |= bit(static_cast<int>(i));
    w.vars[name] = pre;
  }
  return w;
}

std::string pick_fresh(const Formula& phi, const Valuation& v, const std::string& fresh) {
  if (fresh.empty()) return fresh_variable(phi, v);
  if (occurs_var(phi, fresh) || v.vars.count(fresh))
    throw FrameError("fresh variable '" + fresh + "' already occurs in the formula or valuation");
  return fresh;
}

void require_valid(const ModalContactFrame& m) {
  Report rep = is_modal_contact_frame(m);
  if (!rep.ok()) throw FrameError("input is not a modal contact frame: " + rep.summary());
}

}  // namespace

Expansion expand_rho6(const ModalContactFrame& m, const Valuation& v, const Formula& phi, const std::string& fresh) {
  require_valid(m);
  int n = m.size();
  WorldSet phi_set = truth_set(m, v, phi);
  std::vector<std::pair<int, int>> pairs;
  for (int x1 = 0; x1 < n; ++x1)
    for (int x2 = 0; x2 < n; ++x2)
      if (m.r(x1, x2)) pairs.emplace_back(x1, x2);
  if (pairs.size() > static_cast<std::size_t>(kMaxWorlds))
    throw FrameError("expansion exceeds " + std::to_string(kMaxWorlds) + " worlds");
  std::vector<std::string> names;
  for (auto [a, b] : pairs) names.push_back(m.worlds[a] + "|" + m.worlds[b]);
  Expansion out;
  out.frame = ModalContactFrame(names);
  int k = static_cast<int>(pairs.size());
  for (int i = 0; i < k; ++i) {
    auto [x1, x2] = pairs[i];
    for (int j = 0; j < k; ++j) {
      auto [y1, y2] = pairs[j];
      bool same_set = (x1 == y1 && x2 == y2) || (x1 == y2 && x2 == y1);
      if (same_set) out.frame.add_r(i, j);
      if (m.s(x1, y1) && m.s(x2, y2)) out.frame.add_s(i, j);
    }
    out.map.push_back(x1);
  }
  out.valuation = pull_back(v, out.map);
  out.fresh = pick_fresh(phi, v, fresh);
  WorldSet wp = 0;
  for (int i = 0; i < k; ++i)
    if (has(phi_set, pairs[i].first) || has(phi_set, pairs[i].second)) wp |= bit(i);
  out.valuation.vars[out.fresh] = wp;
  return out;
}

Expansion expand_two_copy(const ModalContactFrame& m, const Valuation& v, const Formula& phi,
                          const std::string& fresh) {
  require_valid(m);
  int n = m.size();
  if (2 * n > kMaxWorlds) throw FrameError("expansion exceeds " + std::to_string(kMaxWorlds) + " worlds");
  WorldSet phi_set = truth_set(m, v, phi);
  std::vector<std::string> names;
  for (int c = 1; c <= 2; ++c)
    for (int x = 0; x < n; ++x) names.push_back(std::to_string(c) + ":" + m.worlds[x]);
  Expansion out;
  out.frame = ModalContactFrame(names);
  for (int x = 0; x < n; ++x) {
    out.frame.add_r(x, x);
    for (int y = 0; y < n; ++y) {
      if (m.r(x, y)) out.frame.add_r(n + x, n + y);
      if (m.s(x, y)) { out.frame.add_s(x, y); out.frame.add_s(n + x, n + y); }
    }
  }
  for (int c = 0; c < 2; ++c)
    for (int x = 0; x < n; ++x) out.map.push_back(x);
  out.valuation = pull_back(v, out.map);
  out.fresh = pick_fresh(phi, v, fresh);
  out.valuation.vars[out.fresh] = phi_set & full_set(n);
  return out;
}

// ── enumeration ──

FrameKind parse_frame_kind(const std::string& s) {
  if (s == "kripke") return FrameKind::Kripke;
  if (s == "kripke-e") return FrameKind::KripkeE;
  if (s == "modal-contact") return FrameKind::ModalContact;
  if (s == "ms2ic") return FrameKind::MS2IC;
  throw FrameError("unknown frame kind '" + s + "'");
}

std::string frame_kind_name(FrameKind k) {
  switch (k) {
    case FrameKind::Kripke: return "kripke";
    case FrameKind::KripkeE: return "kripke-e";
    case FrameKind::ModalContact: return "modal-contact";
    case FrameKind::MS2IC: return "ms2ic";
  }
  return "?";
}

std::uint64_t enumeration_bound() {
  if (const char* env = std::getenv("CLW_MAX_ENUM")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::uint64_t{1} << 28;
}

int enumeration_bits(int n, FrameKind kind) {
  switch (kind) {
    case FrameKind::Kripke: case FrameKind::MS2IC: return n * n * n + n * n;
    case FrameKind::KripkeE: return n * n * n + 2 * n * n;
    case FrameKind::ModalContact: return 2 * n * n;
  }
  return 0;
}

namespace {

void guard(int n, FrameKind kind, std::uint64_t bound) {
  if (n < 1) throw FrameError("enumeration needs n >= 1");
  if (bound == 0) bound = enumeration_bound();
  int bits = enumeration_bits(n, kind);
  if (bits >= 63 || (std::uint64_t{1} << bits) > bound)
    throw FrameError("enumeration of " + frame_kind_name(kind) + " frames with " + std::to_string(n) +
                     " worlds needs 2^" + std::to_string(bits) + " candidates, above the bound " +
                     std::to_string(bound) + " (set CLW_MAX_ENUM to override)");
}

void set_binary(std::vector<WorldSet>& rel, int n, std::uint64_t mask) {
  for (int x = 0; x < n; ++x) rel[x] = (mask >> (x * n)) & full_set(n);
}

void set_ternary(std::vector<WorldSet>& rel, int n, std::uint64_t mask) {
  for (int xy = 0; xy < n * n; ++xy) rel[xy] = (mask >> (xy * n)) & full_set(n);
}

}  // namespace

std::uint64_t enumerate_kripke(int n, bool with_e, const std::function<bool(const KripkeFrame&)>& visit,
                               std::uint64_t bound) {
  guard(n, with_e ? FrameKind::KripkeE : FrameKind::Kripke, bound);
  KripkeFrame f = KripkeFrame::numbered(n);
  if (with_e) f.E.emplace(n, 0);
  std::uint64_t tn = std::uint64_t{1} << (n * n * n), sn = std::uint64_t{1} << (n * n);
  std::uint64_t en = with_e ? sn : 1, count = 0;
  for (std::uint64_t t = 0; t < tn; ++t) {
    set_ternary(f.T, n, t);
    for (std::uint64_t s = 0; s < sn; ++s) {
      set_binary(f.S, n, s);
      for (std::uint64_t e = 0; e < en; ++e) {
        if (with_e) set_binary(*f.E, n, e);
        ++count;
        if (!visit(f)) return count;
      }
    }
  }
  return count;
}

std::uint64_t enumerate_modal_contact(int n, const std::function<bool(const ModalContactFrame&)>& visit,
                                      std::uint64_t bound) {
  guard(n, FrameKind::ModalContact, bound);
  ModalContactFrame m = ModalContactFrame::numbered(n);
  std::uint64_t rn = std::uint64_t{1} << (n * n), count = 0;
  for (std::uint64_t r = 0; r < rn; ++r) {
    set_binary(m.R, n, r);
    bool refl_sym = true;
    for (int x = 0; x < n && refl_sym; ++x) {
      if (!m.r(x, x)) refl_sym = false;
      for (int y = 0; y < n && refl_sym; ++y)
        if (m.r(x, y) != m.r(y, x)) refl_sym = false;
    }
    if (!refl_sym) continue;
    for (std::uint64_t s = 0; s < rn; ++s) {
      set_binary(m.S, n, s);
      if (!is_modal_contact_frame(m).ok()) continue;
      ++count;
      if (!visit(m)) return count;
    }
  }
  return count;
}

std::uint64_t enumerate_ms2ic(int n, const std::function<bool(const KripkeFrame&)>& visit,
                              std::uint64_t bound) {
  guard(n, FrameKind::MS2IC, bound);
  std::uint64_t count = 0;
  enumerate_kripke(n, false, [&](const KripkeFrame& f) {
    if (!is_ms2ic_frame(f).ok()) return true;
    ++count;
    return visit(f);
  }, bound);
  return count;
}

KripkeFrame random_kripke(int n, std::uint64_t seed, bool with_e) {
  std::mt19937_64 rng(seed);
  KripkeFrame f = KripkeFrame::numbered(n);
  for (auto& m : f.T) m = rng() & full_set(n);
  for (auto& m : f.S) m = rng() & full_set(n);
  if (with_e) {
    f.E.emplace(n, 0);
    for (auto& m : *f.E) m = rng() & full_set(n);
  }
  return f;
}

namespace {

ModalContactFrame random_mcf_rng(int n, std::mt19937_64& rng) {
  ModalContactFrame m = ModalContactFrame::numbered(n);
  std::uniform_int_distribution<int> density(1, 3);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    int dr = density(rng), ds = density(rng);
    std::uniform_int_distribution<int> coin(0, 3);
    for (int x = 0; x < n; ++x) { m.R[x] = bit(x); m.S[x] = 0; }
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        if (coin(rng) < dr) { m.add_r(x, y); m.add_r(y, x); }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (coin(rng) < ds) m.add_s(x, y);
    if (is_modal_contact_frame(m).ok()) return m;
  }
  for (auto& s : m.S) s = 0;
  return m;
}

}  // namespace

ModalContactFrame random_modal_contact(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_mcf_rng(n, rng);
}

KripkeFrame random_ms2ic(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> cls(0, n - 1);
  std::vector<int> of(n);
  for (int x = 0; x < n; ++x) of[x] = cls(rng);
  KripkeFrame f = KripkeFrame::numbered(n);
  for (int c = 0; c < n; ++c) {
    std::vector<int> members;
    for (int x = 0; x < n; ++x)
      if (of[x] == c) members.push_back(x);
    if (members.empty()) continue;
    int k = static_cast<int>(members.size());
    ModalContactFrame m = random_mcf_rng(k, rng);
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        if (m.s(a, b)) f.add_s(members[a], members[b]);
        for (int d = 0; d < k; ++d)
          if (m.r(b, d)) f.add_t(members[a], members[b], members[d]);
      }
    }
  }
  return f;
}

}  // namespace ms2ic
