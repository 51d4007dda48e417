#include "ms2ic/fo.hpp"

#include <cctype>
#include <stdexcept>

#include "ms2ic/semantics.hpp"

namespace ms2ic {

namespace fo {
namespace {
Fo mk(FoKind k, std::vector<std::string> args = {}, std::string name = {}, Fo a = nullptr, Fo b = nullptr) {
  return std::make_shared<const FoNode>(FoNode{k, std::move(args), std::move(name), std::move(a), std::move(b)});
}
}  // namespace
Fo truth() { return mk(FoKind::True); }
Fo falsity() { return mk(FoKind::False); }
Fo eq(const std::string& x, const std::string& y) { return mk(FoKind::Eq, {x, y}); }
Fo e(const std::string& x, const std::string& y) { return mk(FoKind::E, {x, y}); }
Fo s(const std::string& x, const std::string& y) { return mk(FoKind::S, {x, y}); }
Fo t(const std::string& x, const std::string& y, const std::string& z) { return mk(FoKind::T, {x, y, z}); }
Fo pred(const std::string& name, const std::string& x) { return mk(FoKind::Pred, {x}, name); }
Fo neg(Fo a) { return mk(FoKind::Not, {}, {}, std::move(a)); }
Fo conj(Fo a, Fo b) { return mk(FoKind::And, {}, {}, std::move(a), std::move(b)); }
Fo disj(Fo a, Fo b) { return mk(FoKind::Or, {}, {}, std::move(a), std::move(b)); }
Fo implies(Fo a, Fo b) { return mk(FoKind::Implies, {}, {}, std::move(a), std::move(b)); }
Fo iff(Fo a, Fo b) { return mk(FoKind::Iff, {}, {}, std::move(a), std::move(b)); }
Fo forall(const std::string& v, Fo body) { return mk(FoKind::Forall, {}, v, std::move(body)); }
Fo exists(const std::string& v, Fo body) { return mk(FoKind::Exists, {}, v, std::move(body)); }
}  // namespace fo

namespace {

class FoParser {
 public:
  explicit FoParser(std::string_view s) : s_(s) {}

  Fo run() {
    Fo f = iff();
    skip();
    if (i_ != s_.size()) fail("unexpected input");
    return f;
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string& m) {
    throw std::invalid_argument("FO syntax error at column " + std::to_string(i_ + 1) + ": " + m);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(std::string_view t) {
    skip();
    if (s_.substr(i_, t.size()) == t) {
      i_ += t.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view t) {
    if (!eat(t)) fail("expected '" + std::string(t) + "'");
  }
  std::string ident() {
    skip();
    std::size_t b = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    if (b == i_) fail("expected identifier");
    return std::string(s_.substr(b, i_ - b));
  }
  bool keyword(std::string_view k) {
    skip();
    std::size_t e = i_ + k.size();
    if (s_.substr(i_, k.size()) != k) return false;
    if (e < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[e])) || s_[e] == '_')) return false;
    i_ = e;
    return true;
  }

  Fo iff() {
    Fo a = imp();
    if (eat("<->")) return fo::iff(a, iff());
    return a;
  }
  Fo imp() {
    Fo a = disj();
    if (eat("->")) return fo::implies(a, imp());
    return a;
  }
  Fo disj() {
    Fo a = conj();
    while (eat("|")) a = fo::disj(a, conj());
    return a;
  }
  Fo conj() {
    Fo a = unary();
    while (eat("&")) a = fo::conj(a, unary());
    return a;
  }
  Fo unary() {
    if (eat("~")) return fo::neg(unary());
    bool all = keyword("forall");
    if (all || keyword("exists")) {
      std::vector<std::string> vs{ident()};
      while (eat(",")) vs.push_back(ident());
      expect(".");
      Fo body = iff();
      for (auto it = vs.rbegin(); it != vs.rend(); ++it) body = all ? fo::forall(*it, body) : fo::exists(*it, body);
      return body;
    }
    return atom();
  }
  std::vector<std::string> args() {
    expect("(");
    std::vector<std::string> a{ident()};
    while (eat(",")) a.push_back(ident());
    expect(")");
    return a;
  }
  Fo atom() {
    if (eat("(")) {
      Fo f = iff();
      expect(")");
      return f;
    }
    if (keyword("true")) return fo::truth();
    if (keyword("false")) return fo::falsity();
    std::string id = ident();
    skip();
    if (i_ < s_.size() && s_[i_] == '(') {
      auto a = args();
      auto need = [&](std::size_t n) {
        if (a.size() != n) fail(id + " expects " + std::to_string(n) + " arguments");
      };
      if (id == "T") return need(3), fo::t(a[0], a[1], a[2]);
      if (id == "E") return need(2), fo::e(a[0], a[1]);
      if (id == "S") return need(2), fo::s(a[0], a[1]);
      need(1);
      return fo::pred(id, a[0]);
    }
    if (eat("!=")) return fo::neg(fo::eq(id, ident()));
    expect("=");
    return fo::eq(id, ident());
  }
};

int prec(FoKind k) {
  switch (k) {
    case FoKind::Iff: return 1;
    case FoKind::Implies: return 2;
    case FoKind::Or: return 3;
    case FoKind::And: return 4;
    case FoKind::Forall:
    case FoKind::Exists: return 0;
    default: return 6;
  }
}

std::string join(const std::vector<std::string>& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + a[i];
  return s;
}

std::string pr(const Fo& f);

std::string wrap(const Fo& f, bool paren) { return paren ? "(" + pr(f) + ")" : pr(f); }

std::string pr(const Fo& f) {
  switch (f->kind) {
    case FoKind::True: return "true";
    case FoKind::False: return "false";
    case FoKind::Eq: return f->args[0] + " = " + f->args[1];
    case FoKind::E: return "E(" + join(f->args) + ")";
    case FoKind::S: return "S(" + join(f->args) + ")";
    case FoKind::T: return "T(" + join(f->args) + ")";
    case FoKind::Pred: return f->name + "(" + f->args[0] + ")";
    case FoKind::Not:
      if (f->a->kind == FoKind::Eq) return f->a->args[0] + " != " + f->a->args[1];
      return "~" + wrap(f->a, prec(f->a->kind) < 6);
    case FoKind::Forall:
    case FoKind::Exists: {
      std::vector<std::string> vs{f->name};
      Fo body = f->a;
      while (body->kind == f->kind) {
        vs.push_back(body->name);
        body = body->a;
      }
      std::string q = f->kind == FoKind::Forall ? "forall " : "exists ";
      std::string s;
      for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + vs[i];
      return q + s + ". " + pr(body);
    }
    default: {
      static const std::map<FoKind, std::string> op = {
          {FoKind::And, " & "}, {FoKind::Or, " | "}, {FoKind::Implies, " -> "}, {FoKind::Iff, " <-> "}};
      int p = prec(f->kind);
      bool right = f->kind == FoKind::Implies || f->kind == FoKind::Iff;
      int pa = prec(f->a->kind), pb = prec(f->b->kind);
      bool la = pa < p || (pa == p && right) || pa == 0;
      bool rb = pb < p || (pb == p && !right);
      return wrap(f->a, la) + op.at(f->kind) + wrap(f->b, rb);
    }
  }
}

void fv(const Fo& f, std::set<std::string> bound, std::set<std::string>& out) {
  switch (f->kind) {
    case FoKind::Forall:
    case FoKind::Exists:
      bound.insert(f->name);
      fv(f->a, bound, out);
      return;
    default:
      for (const auto& a : f->args)
        if (!bound.count(a)) out.insert(a);
      if (f->a) fv(f->a, bound, out);
      if (f->b) fv(f->b, bound, out);
  }
}

struct Evaluator {
  const KripkeFrame& f;
  const Valuation& v;
  std::vector<WorldSet> E;
  Assignment a;

  int get(const std::string& x) const {
    auto it = a.find(x);
    if (it == a.end()) throw std::invalid_argument("unassigned variable '" + x + "'");
    return it->second;
  }

  bool ev(const Fo& g) {
    switch (g->kind) {
      case FoKind::True: return true;
      case FoKind::False: return false;
      case FoKind::Eq: return get(g->args[0]) == get(g->args[1]);
      case FoKind::E: return has(E[get(g->args[0])], get(g->args[1]));
      case FoKind::S: return f.s(get(g->args[0]), get(g->args[1]));
      case FoKind::T: return f.t(get(g->args[0]), get(g->args[1]), get(g->args[2]));
      case FoKind::Pred: {
        auto it = v.vars.find(g->name);
        if (it == v.vars.end()) throw std::invalid_argument("no valuation for predicate '" + g->name + "'");
        return has(it->second, get(g->args[0]));
      }
      case FoKind::Not: return !ev(g->a);
      case FoKind::And: return ev(g->a) && ev(g->b);
      case FoKind::Or: return ev(g->a) || ev(g->b);
      case FoKind::Implies: return !ev(g->a) || ev(g->b);
      case FoKind::Iff: return ev(g->a) == ev(g->b);
      case FoKind::Forall:
      case FoKind::Exists: {
        bool all = g->kind == FoKind::Forall;
        auto saved = a.find(g->name) != a.end() ? std::optional<int>(a[g->name]) : std::nullopt;
        bool result = all;
        for (int w = 0; w < f.size(); ++w) {
          a[g->name] = w;
          if (ev(g->a) != all) {
            result = !all;
            break;
          }
        }
        if (saved) a[g->name] = *saved;
        else a.erase(g->name);
        return result;
      }
    }
    return false;
  }
};

}  // namespace

Fo parse_fo(std::string_view text) { return FoParser(text).run(); }
std::string print_fo(const Fo& f) { return pr(f); }

std::set<std::string> free_vars(const Fo& f) {
  std::set<std::string> out;
  fv(f, {}, out);
  return out;
}

bool eval_fo(const KripkeFrame& f, const Fo& phi, const Assignment& a, const Valuation& v) {
  Evaluator e{f, v, univ_relation(f), a};
  return e.ev(phi);
}

}  // namespace ms2ic
