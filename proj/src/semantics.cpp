#include "ms2ic/semantics.hpp"

#include <algorithm>
#include <thread>

namespace ms2ic {

int frame_size(const AnyFrame& f) {
  return std::visit([](const auto& g) { return g.size(); }, f);
}

const std::vector<std::string>& frame_worlds(const AnyFrame& f) {
  return std::visit([](const auto& g) -> const std::vector<std::string>& { return g.worlds; }, f);
}

std::vector<WorldSet> univ_relation(const KripkeFrame& f) {
  if (f.E) return *f.E;
  int n = f.size();
  std::vector<WorldSet> u(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) u[x] |= f.T[x * n + y];
  return u;
}

namespace {

class KripkeEval {
 public:
  KripkeEval(const KripkeFrame& f, const Valuation& v, Mode mode)
      : f_(f), v_(v), mode_(mode), n_(f.size()), all_(full_set(f.size())) {
    if (mode == Mode::Appendix && f.E) {
      u_ = *f.E;
    } else {
      u_.assign(n_, 0);
      for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) u_[x] |= f.T[x * n_ + y];
    }
  }

  WorldSet eval(const Formula& p) const {
    switch (p->kind) {
      case Kind::Var: {
        auto it = v_.vars.find(p->name);
        if (it == v_.vars.end()) throw SemanticsError("unbound variable '" + p->name + "'");
        return it->second & all_;
      }
      case Kind::Bot: return 0;
      case Kind::Top: return all_;
      case Kind::Not: return ~eval(p->a) & all_;
      case Kind::And: return eval(p->a) & eval(p->b);
      case Kind::Or: return eval(p->a) | eval(p->b);
      case Kind::Implies: return (~eval(p->a) | eval(p->b)) & all_;
      case Kind::Iff: return ~(eval(p->a) ^ eval(p->b)) & all_;
      case Kind::Simp: return simp_set(eval(p->a), eval(p->b));
      case Kind::Nabla: return simp_set(~eval(p->a) & all_, eval(p->b));
      case Kind::Delta: return ~simp_set(eval(p->a), ~eval(p->b) & all_) & all_;
      case Kind::Box: return box_set(f_.S, eval(p->a));
      case Kind::Dia: return ~box_set(f_.S, ~eval(p->a) & all_) & all_;
      case Kind::Univ: return box_set(u_, eval(p->a));
      case Kind::Exist: return ~box_set(u_, ~eval(p->a) & all_) & all_;
      default: break;
    }
    if (mode_ != Mode::Appendix)
      throw SemanticsError("hybrid construct in core mode: " + print(p));
    switch (p->kind) {
      case Kind::Nominal: {
        auto it = v_.noms.find(p->name);
        if (it == v_.noms.end()) throw SemanticsError("unbound nominal '#" + p->name + "'");
        return bit(it->second);
      }
      case Kind::UnivInv: return ~image(u_, ~eval(p->a) & all_) & all_;
      case Kind::ExistInv: return image(u_, eval(p->a));
      case Kind::BoxInv: return ~image(f_.S, ~eval(p->a) & all_) & all_;
      case Kind::DiaInv: return image(f_.S, eval(p->a));
      case Kind::NablaInv1: return ~delta_inv1(~eval(p->a) & all_, ~eval(p->b) & all_) & all_;
      case Kind::NablaInv2: return ~delta_inv2(~eval(p->a) & all_, ~eval(p->b) & all_) & all_;
      case Kind::DeltaInv1: return delta_inv1(eval(p->a), eval(p->b));
      case Kind::DeltaInv2: return delta_inv2(eval(p->a), eval(p->b));
      default: throw SemanticsError("unsupported node");
    }
  }

 private:
  const KripkeFrame& f_;
  const Valuation& v_;
  Mode mode_;
  int n_;
  WorldSet all_;
  std::vector<WorldSet> u_;

  // {x : forall y in a, T[x][y] subset of b}
  WorldSet simp_set(WorldSet a, WorldSet b) const {
    WorldSet out = 0, nb = ~b;
    for (int x = 0; x < n_; ++x) {
      bool ok = true;
      const WorldSet* row = &f_.T[x * n_];
      for (int y = 0; y < n_ && ok; ++y)
        if (has(a, y) && (row[y] & nb)) ok = false;
      if (ok) out |= bit(x);
    }
    return out;
  }

  WorldSet box_set(const std::vector<WorldSet>& rel, WorldSet a) const {
    WorldSet out = 0;
    for (int x = 0; x < n_; ++x)
      if ((rel[x] & ~a) == 0) out |= bit(x);
    return out;
  }

  // {x : exists y in a, z in b, Tyxz}
  WorldSet delta_inv1(WorldSet a, WorldSet b) const {
    WorldSet out = 0;
    for (int y = 0; y < n_; ++y) {
      if (!has(a, y)) continue;
      for (int x = 0; x < n_; ++x)
        if (f_.T[y * n_ + x] & b) out |= bit(x);
    }
    return out;
  }

  // {x : exists y in a, z in b, Tzyx}
  WorldSet delta_inv2(WorldSet a, WorldSet b) const {
    WorldSet out = 0;
    for (int z = 0; z < n_; ++z) {
      if (!has(b, z)) continue;
      for (int y = 0; y < n_; ++y)
        if (has(a, y)) out |= f_.T[z * n_ + y];
    }
    return out;
  }
};

class ContactEval {
 public:
  ContactEval(const ModalContactFrame& m, const Valuation& v) : m_(m), v_(v), all_(full_set(m.size())) {}

  WorldSet eval(const Formula& p) const {
    switch (p->kind) {
      case Kind::Var: {
        auto it = v_.vars.find(p->name);
        if (it == v_.vars.end()) throw SemanticsError("unbound variable '" + p->name + "'");
        return it->second & all_;
      }
      case Kind::Bot: return 0;
      case Kind::Top: return all_;
      case Kind::Not: return ~eval(p->a) & all_;
      case Kind::And: return eval(p->a) & eval(p->b);
      case Kind::Or: return eval(p->a) | eval(p->b);
      case Kind::Implies: return (~eval(p->a) | eval(p->b)) & all_;
      case Kind::Iff: return ~(eval(p->a) ^ eval(p->b)) & all_;
      case Kind::Simp: return strict(eval(p->a), eval(p->b));
      case Kind::Nabla: return strict(~eval(p->a) & all_, eval(p->b));
      case Kind::Delta: return ~strict(eval(p->a), ~eval(p->b) & all_) & all_;
      case Kind::Univ: return strict(all_, eval(p->a));
      case Kind::Exist: return ~strict(all_, ~eval(p->a) & all_) & all_;
      case Kind::Box: {
        WorldSet a = eval(p->a), out = 0;
        for (int x = 0; x < m_.size(); ++x)
          if ((m_.S[x] & ~a) == 0) out |= bit(x);
        return out;
      }
      case Kind::Dia: {
        WorldSet a = eval(p->a), out = 0;
        for (int x = 0; x < m_.size(); ++x)
          if (m_.S[x] & a) out |= bit(x);
        return out;
      }
      default:
        throw SemanticsError("hybrid construct on a modal contact frame: " + print(p));
    }
  }

 private:
  const ModalContactFrame& m_;
  const Valuation& v_;
  WorldSet all_;

  WorldSet strict(WorldSet a, WorldSet b) const { return (image(m_.R, a) & ~b) == 0 ? all_ : 0; }
};

}  // namespace

WorldSet truth_set(const KripkeFrame& f, const Valuation& v, const Formula& phi, Mode mode) {
  return KripkeEval(f, v, mode).eval(phi);
}

WorldSet truth_set(const ModalContactFrame& m, const Valuation& v, const Formula& phi) {
  if (!is_core(phi)) return truth_set(t_from_r(m), v, phi, Mode::Appendix);
  return ContactEval(m, v).eval(phi);
}

WorldSet truth_set(const AnyFrame& f, const Valuation& v, const Formula& phi, Mode mode) {
  if (auto* k = std::get_if<KripkeFrame>(&f)) return truth_set(*k, v, phi, mode);
  return truth_set(std::get<ModalContactFrame>(f), v, phi);
}

void for_each_valuation(int n, const std::vector<std::string>& vars, const std::vector<std::string>& noms,
                        const std::function<bool(const Valuation&)>& visit) {
  Valuation v;
  std::size_t k = vars.size();
  std::uint64_t per = std::uint64_t{1} << n;
  std::uint64_t var_total = 1;
  for (std::size_t i = 0; i < k; ++i) var_total *= per;
  std::uint64_t nom_total = 1;
  for (std::size_t i = 0; i < noms.size(); ++i) nom_total *= static_cast<std::uint64_t>(n);
  for (std::uint64_t c = 0; c < var_total; ++c) {
    std::uint64_t rest = c;
    for (std::size_t i = 0; i < k; ++i) {
      v.vars[vars[i]] = rest % per;
      rest /= per;
    }
    for (std::uint64_t d = 0; d < nom_total; ++d) {
      std::uint64_t r2 = d;
      for (const auto& nm : noms) {
        v.noms[nm] = static_cast<int>(r2 % n);
        r2 /= n;
      }
      if (!visit(v)) return;
    }
  }
}

namespace {

void check_cap(int n, const Formula& phi, int cap, std::vector<std::string>& vars,
               std::vector<std::string>& noms) {
  auto vs = variables(phi);
  auto ns = nominals(phi);
  vars.assign(vs.begin(), vs.end());
  noms.assign(ns.begin(), ns.end());
  if (static_cast<int>(vars.size() + noms.size()) > cap)
    throw SemanticsError("formula has " + std::to_string(vars.size() + noms.size()) +
                         " variables and nominals, above the cap of " + std::to_string(cap));
  if (static_cast<long>(n) * static_cast<long>(vars.size()) > 40)
    throw SemanticsError("valuation space 2^" + std::to_string(n * vars.size()) + " is too large");
}

}  // namespace

std::optional<Countermodel> is_valid_in_frame(const AnyFrame& f, const Formula& phi, Mode mode, int cap) {
  int n = frame_size(f);
  std::vector<std::string> vars, noms;
  check_cap(n, phi, cap, vars, noms);
  WorldSet all = full_set(n);
  std::optional<Countermodel> cm;
  for_each_valuation(n, vars, noms, [&](const Valuation& v) {
    WorldSet t = truth_set(f, v, phi, mode);
    if (t == all) return true;
    int w = 0;
    while (has(t, w)) ++w;
    cm = Countermodel{f, v, w, phi};
    return false;
  });
  return cm;
}

std::optional<Valuation> local_truth(const AnyFrame& f, int world, const Formula& phi, Mode mode, int cap) {
  int n = frame_size(f);
  if (world < 0 || world >= n) throw SemanticsError("world index out of range");
  std::vector<std::string> vars, noms;
  check_cap(n, phi, cap, vars, noms);
  std::optional<Valuation> bad;
  for_each_valuation(n, vars, noms, [&](const Valuation& v) {
    if (has(truth_set(f, v, phi, mode), world)) return true;
    bad = v;
    return false;
  });
  return bad;
}

std::optional<Countermodel> find_countermodel(const Formula& phi, int max_n, FrameKind kind, Mode mode,
                                              int workers, int cap) {
  if (max_n < 1) throw SemanticsError("max_n must be at least 1");
  workers = std::max(1, workers);
  for (int n = 1; n <= max_n; ++n) {
    std::vector<AnyFrame> frames;
    auto push_k = [&](const KripkeFrame& f) { frames.emplace_back(f); return true; };
    switch (kind) {
      case FrameKind::Kripke: enumerate_kripke(n, false, push_k); break;
      case FrameKind::KripkeE: enumerate_kripke(n, true, push_k); break;
      case FrameKind::MS2IC: enumerate_ms2ic(n, push_k); break;
      case FrameKind::ModalContact:
        enumerate_modal_contact(n, [&](const ModalContactFrame& m) { frames.emplace_back(m); return true; });
        break;
    }
    std::vector<std::optional<Countermodel>> found(workers);
    std::vector<std::size_t> found_at(workers, frames.size());
    std::size_t chunk = (frames.size() + workers - 1) / workers;
    auto scan = [&](int w) {
      std::size_t lo = w * chunk, hi = std::min(frames.size(), lo + chunk);
      for (std::size_t i = lo; i < hi; ++i) {
        if (auto cm = is_valid_in_frame(frames[i], phi, mode, cap)) {
          found[w] = std::move(cm);
          found_at[w] = i;
          return;
        }
      }
    };
    if (workers == 1) {
      scan(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(scan, w);
      for (auto& t : pool) t.join();
    }
    // chunks are contiguous, so the first hit in chunk order is the global minimum
    for (int w = 0; w < workers; ++w)
      if (found[w]) return found[w];
  }
  return std::nullopt;
}

}  // namespace ms2ic
