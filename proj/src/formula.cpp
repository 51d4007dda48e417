#include "ms2ic/formula.hpp"

#include <cctype>
#include <functional>

namespace ms2ic {

int arity(Kind k) {
  switch (k) {
    case Kind::Var: case Kind::Bot: case Kind::Top: case Kind::Nominal:
      return 0;
    case Kind::Not: case Kind::Box: case Kind::Dia: case Kind::Univ: case Kind::Exist:
    case Kind::UnivInv: case Kind::ExistInv: case Kind::BoxInv: case Kind::DiaInv:
      return 1;
    default:
      return 2;
  }
}

bool is_hybrid_kind(Kind k) { return k >= Kind::Nominal; }

bool is_boolean_kind(Kind k) {
  switch (k) {
    case Kind::Bot: case Kind::Top: case Kind::Not: case Kind::And: case Kind::Or:
    case Kind::Implies: case Kind::Iff:
      return true;
    default:
      return false;
  }
}

Formula var(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  return std::make_shared<const Node>(Node{Kind::Var, std::move(name), nullptr, nullptr});
}
Formula nominal(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty nominal name");
  return std::make_shared<const Node>(Node{Kind::Nominal, std::move(name), nullptr, nullptr});
}
Formula bot() {
  static const Formula f = std::make_shared<const Node>(Node{Kind::Bot, "", nullptr, nullptr});
  return f;
}
Formula top() {
  static const Formula f = std::make_shared<const Node>(Node{Kind::Top, "", nullptr, nullptr});
  return f;
}
Formula unary(Kind k, Formula f) {
  return std::make_shared<const Node>(Node{k, "", std::move(f), nullptr});
}
Formula binary(Kind k, Formula a, Formula b) {
  return std::make_shared<const Node>(Node{k, "", std::move(a), std::move(b)});
}
Formula neg(Formula f) { return unary(Kind::Not, std::move(f)); }
Formula conj(Formula a, Formula b) { return binary(Kind::And, std::move(a), std::move(b)); }
Formula disj(Formula a, Formula b) { return binary(Kind::Or, std::move(a), std::move(b)); }
Formula implies(Formula a, Formula b) { return binary(Kind::Implies, std::move(a), std::move(b)); }
Formula iff(Formula a, Formula b) { return binary(Kind::Iff, std::move(a), std::move(b)); }
Formula simp(Formula a, Formula b) { return binary(Kind::Simp, std::move(a), std::move(b)); }
Formula box(Formula f) { return unary(Kind::Box, std::move(f)); }
Formula dia(Formula f) { return unary(Kind::Dia, std::move(f)); }
Formula univ(Formula f) { return unary(Kind::Univ, std::move(f)); }
Formula exist(Formula f) { return unary(Kind::Exist, std::move(f)); }
Formula nabla(Formula a, Formula b) { return binary(Kind::Nabla, std::move(a), std::move(b)); }
Formula delta(Formula a, Formula b) { return binary(Kind::Delta, std::move(a), std::move(b)); }

Formula conj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return top();
  Formula acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) acc = conj(acc, fs[i]);
  return acc;
}

Formula disj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return bot();
  Formula acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) acc = disj(acc, fs[i]);
  return acc;
}

int compare(const Formula& x, const Formula& y) {
  if (x.get() == y.get()) return 0;
  if (x->kind != y->kind) return x->kind < y->kind ? -1 : 1;
  if (int c = x->name.compare(y->name); c != 0) return c < 0 ? -1 : 1;
  int n = arity(x->kind);
  if (n >= 1) {
    if (int c = compare(x->a, y->a); c != 0) return c;
  }
  if (n == 2) return compare(x->b, y->b);
  return 0;
}

bool same(const Formula& x, const Formula& y) { return compare(x, y) == 0; }

bool is_core(const Formula& f) {
  if (is_hybrid_kind(f->kind)) return false;
  int n = arity(f->kind);
  if (n >= 1 && !is_core(f->a)) return false;
  if (n == 2 && !is_core(f->b)) return false;
  return true;
}

std::size_t size(const Formula& f) {
  int n = arity(f->kind);
  return 1 + (n >= 1 ? size(f->a) : 0) + (n == 2 ? size(f->b) : 0);
}

std::size_t depth(const Formula& f) {
  int n = arity(f->kind);
  std::size_t d = 0;
  if (n >= 1) d = depth(f->a);
  if (n == 2) d = std::max(d, depth(f->b));
  return n == 0 ? 0 : d + 1;
}

SyntaxError::SyntaxError(const std::string& msg, std::size_t column)
    : std::runtime_error("syntax error at column " + std::to_string(column) + ": " + msg),
      column_(column) {}

// ── lexer ──

namespace {

enum class Tok {
  Ident, NominalName, LParen, RParen, Comma,
  KwBot, KwTop, KwNot, KwAnd, KwOr, Arrow, DArrow, Squig,
  KwBox, KwDia, UnivBr, ExistBr, KwNabla, KwDelta,
  BoxInvT, DiaInvT, UnivInvT, ExistInvT, Nabla1InvT, Nabla2InvT, Delta1InvT, Delta2InvT,
  End
};

struct Token {
  Tok tok;
  std::string text;
  std::size_t col;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto has_inv = [&](std::size_t at) { return s.substr(at, 2) == "^-"; };
  while (i < s.size()) {
    char c = s[i];
    std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    if (c == '(') { out.push_back({Tok::LParen, "(", col}); ++i; continue; }
    if (c == ')') { out.push_back({Tok::RParen, ")", col}); ++i; continue; }
    if (c == ',') { out.push_back({Tok::Comma, ",", col}); ++i; continue; }
    if (s.substr(i, 3) == "<->") { out.push_back({Tok::DArrow, "<->", col}); i += 3; continue; }
    if (s.substr(i, 2) == "->") { out.push_back({Tok::Arrow, "->", col}); i += 2; continue; }
    if (s.substr(i, 2) == "~>") { out.push_back({Tok::Squig, "~>", col}); i += 2; continue; }
    if (s.substr(i, 3) == "[A]") {
      i += 3;
      if (has_inv(i)) { out.push_back({Tok::UnivInvT, "[A]^-", col}); i += 2; }
      else out.push_back({Tok::UnivBr, "[A]", col});
      continue;
    }
    if (s.substr(i, 3) == "<E>") {
      i += 3;
      if (has_inv(i)) { out.push_back({Tok::ExistInvT, "<E>^-", col}); i += 2; }
      else out.push_back({Tok::ExistBr, "<E>", col});
      continue;
    }
    if (c == '#') {
      std::size_t j = i + 1;
      while (j < s.size() && ident_char(s[j])) ++j;
      if (j == i + 1) throw SyntaxError("empty nominal name", col);
      out.push_back({Tok::NominalName, std::string(s.substr(i + 1, j - i - 1)), col});
      i = j;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      std::string w(s.substr(i, j - i));
      bool inv = has_inv(j);
      std::size_t next = inv ? j + 2 : j;
      Tok t = Tok::Ident;
      if (w == "bot") t = Tok::KwBot;
      else if (w == "top") t = Tok::KwTop;
      else if (w == "not") t = Tok::KwNot;
      else if (w == "and") t = Tok::KwAnd;
      else if (w == "or") t = Tok::KwOr;
      else if (w == "box") t = inv ? Tok::BoxInvT : Tok::KwBox;
      else if (w == "dia") t = inv ? Tok::DiaInvT : Tok::KwDia;
      else if (w == "nabla") t = Tok::KwNabla;
      else if (w == "delta") t = Tok::KwDelta;
      else if (w == "nabla1" && inv) t = Tok::Nabla1InvT;
      else if (w == "nabla2" && inv) t = Tok::Nabla2InvT;
      else if (w == "delta1" && inv) t = Tok::Delta1InvT;
      else if (w == "delta2" && inv) t = Tok::Delta2InvT;
      bool consumed_inv = t == Tok::BoxInvT || t == Tok::DiaInvT || t == Tok::Nabla1InvT ||
                          t == Tok::Nabla2InvT || t == Tok::Delta1InvT || t == Tok::Delta2InvT;
      if (inv && !consumed_inv) throw SyntaxError("unexpected '^-' after '" + w + "'", j + 1);
      out.push_back({t, consumed_inv ? w + "^-" : w, col});
      i = consumed_inv ? next : j;
      continue;
    }
    throw SyntaxError(std::string("unknown token '") + c + "'", col);
  }
  std::size_t end_col = s.size() + 2;
  out.push_back({Tok::End, "", end_col});
  return out;
}

bool is_hybrid_token(Tok t) {
  switch (t) {
    case Tok::NominalName: case Tok::BoxInvT: case Tok::DiaInvT: case Tok::UnivInvT:
    case Tok::ExistInvT: case Tok::Nabla1InvT: case Tok::Nabla2InvT: case Tok::Delta1InvT:
    case Tok::Delta2InvT:
      return true;
    default:
      return false;
  }
}

// precedence: <-> 1, -> 2, ~> 3, or 4, and 5
class Parser {
 public:
  Parser(std::vector<Token> toks, bool hybrid) : toks_(std::move(toks)), hybrid_(hybrid) {}

  Formula run() {
    Formula f = parse_iff();
    if (peek().tok != Tok::End) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  bool hybrid_;

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    if (peek().tok == Tok::End) throw SyntaxError("unexpected end of input", peek().col);
    throw SyntaxError(msg, peek().col);
  }
  void expect(Tok t, const char* what) {
    if (peek().tok != t) fail(std::string("expected ") + what);
    ++pos_;
  }

  Formula parse_iff() {
    Formula l = parse_implies();
    if (peek().tok == Tok::DArrow) { next(); return iff(l, parse_iff()); }
    return l;
  }
  Formula parse_implies() {
    Formula l = parse_simp();
    if (peek().tok == Tok::Arrow) { next(); return implies(l, parse_implies()); }
    return l;
  }
  Formula parse_simp() {
    Formula l = parse_or();
    if (peek().tok == Tok::Squig) { next(); return simp(l, parse_simp()); }
    return l;
  }
  Formula parse_or() {
    Formula l = parse_and();
    while (peek().tok == Tok::KwOr) { next(); l = disj(l, parse_and()); }
    return l;
  }
  Formula parse_and() {
    Formula l = parse_unary();
    while (peek().tok == Tok::KwAnd) { next(); l = conj(l, parse_unary()); }
    return l;
  }
  Formula pair(Kind k) {
    expect(Tok::LParen, "'('");
    Formula a = parse_iff();
    expect(Tok::Comma, "','");
    Formula b = parse_iff();
    expect(Tok::RParen, "')'");
    return binary(k, a, b);
  }
  Formula parse_unary() {
    const Token& t = peek();
    if (is_hybrid_token(t.tok) && !hybrid_) fail("hybrid token '" + t.text + "' outside hybrid mode");
    switch (t.tok) {
      case Tok::KwNot: next(); return neg(parse_unary());
      case Tok::KwBox: next(); return box(parse_unary());
      case Tok::KwDia: next(); return dia(parse_unary());
      case Tok::UnivBr: next(); return univ(parse_unary());
      case Tok::ExistBr: next(); return exist(parse_unary());
      case Tok::BoxInvT: next(); return unary(Kind::BoxInv, parse_unary());
      case Tok::DiaInvT: next(); return unary(Kind::DiaInv, parse_unary());
      case Tok::UnivInvT: next(); return unary(Kind::UnivInv, parse_unary());
      case Tok::ExistInvT: next(); return unary(Kind::ExistInv, parse_unary());
      case Tok::KwNabla: next(); return pair(Kind::Nabla);
      case Tok::KwDelta: next(); return pair(Kind::Delta);
      case Tok::Nabla1InvT: next(); return pair(Kind::NablaInv1);
      case Tok::Nabla2InvT: next(); return pair(Kind::NablaInv2);
      case Tok::Delta1InvT: next(); return pair(Kind::DeltaInv1);
      case Tok::Delta2InvT: next(); return pair(Kind::DeltaInv2);
      case Tok::KwBot: next(); return bot();
      case Tok::KwTop: next(); return top();
      case Tok::Ident: return var(next().text);
      case Tok::NominalName: return nominal(next().text);
      case Tok::LParen: {
        next();
        Formula f = parse_iff();
        expect(Tok::RParen, "')'");
        return f;
      }
      default:
        fail("unexpected '" + t.text + "'");
    }
  }
};

int prec(Kind k) {
  switch (k) {
    case Kind::Iff: return 1;
    case Kind::Implies: return 2;
    case Kind::Simp: return 3;
    case Kind::Or: return 4;
    case Kind::And: return 5;
    default: return 6;
  }
}

const char* unary_word(Kind k) {
  switch (k) {
    case Kind::Not: return "not ";
    case Kind::Box: return "box ";
    case Kind::Dia: return "dia ";
    case Kind::Univ: return "[A] ";
    case Kind::Exist: return "<E> ";
    case Kind::UnivInv: return "[A]^- ";
    case Kind::ExistInv: return "<E>^- ";
    case Kind::BoxInv: return "box^- ";
    case Kind::DiaInv: return "dia^- ";
    default: return "?";
  }
}

const char* pair_word(Kind k) {
  switch (k) {
    case Kind::Nabla: return "nabla";
    case Kind::Delta: return "delta";
    case Kind::NablaInv1: return "nabla1^-";
    case Kind::NablaInv2: return "nabla2^-";
    case Kind::DeltaInv1: return "delta1^-";
    case Kind::DeltaInv2: return "delta2^-";
    default: return "?";
  }
}

const char* infix_word(Kind k) {
  switch (k) {
    case Kind::And: return " and ";
    case Kind::Or: return " or ";
    case Kind::Implies: return " -> ";
    case Kind::Iff: return " <-> ";
    case Kind::Simp: return " ~> ";
    default: return "?";
  }
}

void print_into(std::string& out, const Formula& f);

void print_operand(std::string& out, const Formula& f, bool paren) {
  if (paren) out += '(';
  print_into(out, f);
  if (paren) out += ')';
}

void print_into(std::string& out, const Formula& f) {
  switch (f->kind) {
    case Kind::Var: out += f->name; return;
    case Kind::Nominal: out += '#'; out += f->name; return;
    case Kind::Bot: out += "bot"; return;
    case Kind::Top: out += "top"; return;
    case Kind::Nabla: case Kind::Delta: case Kind::NablaInv1: case Kind::NablaInv2:
    case Kind::DeltaInv1: case Kind::DeltaInv2:
      out += pair_word(f->kind);
      out += '(';
      print_into(out, f->a);
      out += ", ";
      print_into(out, f->b);
      out += ')';
      return;
    case Kind::And: case Kind::Or: case Kind::Implies: case Kind::Iff: case Kind::Simp: {
      int p = prec(f->kind);
      bool left_assoc = f->kind == Kind::And || f->kind == Kind::Or;
      int pl = prec(f->a->kind), pr = prec(f->b->kind);
      print_operand(out, f->a, left_assoc ? pl < p : pl <= p);
      out += infix_word(f->kind);
      print_operand(out, f->b, left_assoc ? pr <= p : pr < p);
      return;
    }
    default:
      out += unary_word(f->kind);
      print_operand(out, f->a, prec(f->a->kind) < 6);
      return;
  }
}

}  // namespace

Formula parse(std::string_view text, bool hybrid) {
  Parser p(lex(text), hybrid);
  return p.run();
}

std::string print(const Formula& f) {
  std::string out;
  print_into(out, f);
  return out;
}

// ── transformations ──

namespace {

Formula rebuild(const Formula& f, const std::function<Formula(const Formula&)>& g) {
  int n = arity(f->kind);
  if (n == 0) return f;
  Formula a = g(f->a);
  if (n == 1) return a.get() == f->a.get() ? f : unary(f->kind, a);
  Formula b = g(f->b);
  if (a.get() == f->a.get() && b.get() == f->b.get()) return f;
  return binary(f->kind, a, b);
}

}  // namespace

Formula substitute(const Formula& f, const Substitution& s) {
  if (f->kind == Kind::Var) {
    auto it = s.find(f->name);
    return it == s.end() ? f : it->second;
  }
  return rebuild(f, [&](const Formula& g) { return substitute(g, s); });
}

Formula negate_normalized(const Formula& f) {
  if (f->kind == Kind::Top) return bot();
  if (f->kind == Kind::Bot) return top();
  if (f->kind == Kind::Not) return f->a;
  return neg(f);
}

Formula desugar(const Formula& f) {
  if (!is_core(f)) throw std::invalid_argument("desugar: hybrid formula " + print(f));
  switch (f->kind) {
    case Kind::Univ: return simp(top(), desugar(f->a));
    case Kind::Exist: return neg(simp(top(), neg(desugar(f->a))));
    case Kind::Dia: return neg(box(neg(desugar(f->a))));
    case Kind::Nabla: return simp(negate_normalized(desugar(f->a)), desugar(f->b));
    case Kind::Delta: return neg(simp(desugar(f->a), negate_normalized(desugar(f->b))));
    default: return rebuild(f, desugar);
  }
}

Formula to_nabla_language(const Formula& f) {
  switch (f->kind) {
    case Kind::Simp:
      return nabla(negate_normalized(to_nabla_language(f->a)), to_nabla_language(f->b));
    case Kind::Univ: return nabla(bot(), to_nabla_language(f->a));
    case Kind::Exist: return neg(nabla(bot(), negate_normalized(to_nabla_language(f->a))));
    default: return rebuild(f, to_nabla_language);
  }
}

Formula from_nabla_language(const Formula& f) {
  switch (f->kind) {
    case Kind::Nabla:
      return simp(negate_normalized(from_nabla_language(f->a)), from_nabla_language(f->b));
    case Kind::Delta:
      return neg(simp(from_nabla_language(f->a), negate_normalized(from_nabla_language(f->b))));
    default: return rebuild(f, from_nabla_language);
  }
}

namespace {
void collect(const Formula& f, Kind k, std::set<std::string>& out) {
  if (f->kind == k) out.insert(f->name);
  int n = arity(f->kind);
  if (n >= 1) collect(f->a, k, out);
  if (n == 2) collect(f->b, k, out);
}
}  // namespace

std::set<std::string> variables(const Formula& f) {
  std::set<std::string> out;
  collect(f, Kind::Var, out);
  return out;
}

std::set<std::string> nominals(const Formula& f) {
  std::set<std::string> out;
  collect(f, Kind::Nominal, out);
  return out;
}

bool occurs_var(const Formula& f, const std::string& name) {
  if (f->kind == Kind::Var) return f->name == name;
  int n = arity(f->kind);
  return (n >= 1 && occurs_var(f->a, name)) || (n == 2 && occurs_var(f->b, name));
}

}  // namespace ms2ic
