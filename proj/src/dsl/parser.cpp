/*
 * Copyright 2026 The qfock Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include "qfock/dsl/parser.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "qfock/dsl/builtins.hpp"

namespace qfock::dsl {
namespace {

using Kind = ParseError::Kind;

constexpr int kMaxDepth = 200;
constexpr int kMaxPower = 256;
constexpr int kMaxModes = 24;

struct Token {
  enum Type { ident, integer, symbol, newline, end } type = end;
  std::string text;
  SourceLocation where;
  std::size_t begin = 0;
  std::size_t end_offset = 0;
};

/// Splits the source into tokens. Newlines are significant only outside
/// brackets, so expressions may span lines inside (), [] and {}.
class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  const Token& peek() {
    if (!peeked_) {
      ahead_ = scan();
      peeked_ = true;
    }
    return ahead_;
  }

  Token next() {
    peek();
    peeked_ = false;
    return ahead_;
  }

  /// Reads a suite or relation name; only valid when nothing is peeked.
  Token raw_name() {
    skip_blanks();
    Token tok;
    tok.where = here();
    tok.begin = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) advance();
    tok.end_offset = pos_;
    tok.text = std::string(text_.substr(tok.begin, pos_ - tok.begin));
    if (tok.text.empty()) {
      throw ParseError(Kind::syntax, tok.where, "expected a name");
    }
    tok.type = Token::ident;
    return tok;
  }

  bool peeked() const { return peeked_; }

 private:
  static bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
           c == '.';
  }

  SourceLocation here() const { return {line_, column_}; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_blanks() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == '\n' && depth_ > 0) {
        advance();
      } else {
        break;
      }
    }
  }

  Token scan() {
    skip_blanks();
    Token tok;
    tok.where = here();
    tok.begin = pos_;
    if (pos_ >= text_.size()) {
      tok.type = Token::end;
      return tok;
    }
    const char c = text_[pos_];
    if (c == '\n') {
      advance();
      tok.type = Token::newline;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        advance();
      }
      tok.type = Token::ident;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        advance();
      }
      tok.type = Token::integer;
    } else if (c == '=' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
      advance();
      advance();
      tok.type = Token::symbol;
    } else if (std::string_view("+-*/^()[]{},;:=@").find(c) != std::string_view::npos) {
      if (c == '(' || c == '[' || c == '{') ++depth_;
      if ((c == ')' || c == ']' || c == '}') && depth_ > 0) --depth_;
      advance();
      tok.type = Token::symbol;
    } else {
      const auto byte = static_cast<unsigned char>(c);
      std::ostringstream msg;
      if (std::isprint(byte)) {
        msg << "unexpected character '" << c << "'";
      } else {
        msg << "unexpected byte 0x" << std::hex << static_cast<int>(byte);
      }
      throw ParseError(Kind::lexical, tok.where, msg.str());
    }
    tok.end_offset = pos_;
    tok.text = std::string(text_.substr(tok.begin, pos_ - tok.begin));
    return tok;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  int depth_ = 0;
  Token ahead_;
  bool peeked_ = false;
};

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> words = {"t", "q", "i", "qcomm", "qpow", "qbr",
                                              "qnum", "let", "assert", "suite", "modes"};
  return words;
}

std::shared_ptr<Expr> make(ExprKind kind, SourceLocation where) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->where = where;
  return e;
}

ExprPtr make_literal(Scalar value, SourceLocation where) {
  auto e = make(ExprKind::literal, where);
  e->literal = std::move(value);
  return e;
}

bool is_literal(const ExprPtr& e) { return e->kind == ExprKind::literal; }

int small_int(const Rational& r, SourceLocation where, const char* what) {
  if (!r.is_integer() || !r.is_small() || r.abs() > Rational(1 << 30)) {
    throw ParseError(Kind::syntax, where, std::string(what) + " must be a small integer");
  }
  return static_cast<int>(r.numerator().get_si());
}

/// c^e for a constant c, where a fractional e is allowed only on t-powers.
Scalar literal_power(const Scalar& base, const Rational& e, SourceLocation where) {
  if (e.is_integer()) {
    const int k = small_int(e, where, "exponent");
    if (k > kMaxPower || k < -kMaxPower) {
      throw ParseError(Kind::syntax, where, "exponent out of range");
    }
    if (k < 0 && base.is_zero()) {
      throw ParseError(Kind::syntax, where, "negative power of zero");
    }
    return base.pow(k);
  }
  const LaurentPoly& n = base.num();
  if (!n.is_zero() && base.den().is_one() && n.span() == 0 && n.leading().is_one()) {
    const Rational k = Rational(n.low()) * e;
    if (k.is_integer()) return Scalar::t_power(small_int(k, where, "exponent"));
  }
  throw ParseError(Kind::syntax, where,
                   "(" + base.to_string() + ")^(" + e.to_string() +
                       ") is not an integral power of t");
}

/// Builds a binary node, folding constant operands into a literal.
ExprPtr binary(ExprKind kind, ExprPtr a, ExprPtr b, SourceLocation where) {
  if (is_literal(a) && is_literal(b)) {
    const Scalar& x = a->literal;
    const Scalar& y = b->literal;
    switch (kind) {
      case ExprKind::add: return make_literal(x + y, where);
      case ExprKind::subtract: return make_literal(x - y, where);
      case ExprKind::compose: return make_literal(x * y, where);
      case ExprKind::divide:
        if (y.is_zero()) throw ParseError(Kind::syntax, where, "division by zero");
        return make_literal(x / y, where);
      default: break;
    }
  }
  auto e = make(kind, where);
  e->children = {std::move(a), std::move(b)};
  return e;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  Suite suite() {
    Suite s;
    bool saw_name = false, saw_modes = false;
    std::set<std::string> relation_names;
    while (true) {
      const Token tok = lex_.next();
      if (tok.type == Token::end) break;
      if (tok.type == Token::newline) continue;
      if (tok.type != Token::ident) fail(tok, "expected a statement");
      if (tok.text == "suite") {
        if (saw_name) fail(tok, "duplicate suite statement");
        saw_name = true;
        s.name = lex_.raw_name().text;
      } else if (tok.text == "modes") {
        if (saw_modes) fail(tok, "duplicate modes statement");
        saw_modes = true;
        const Token n = expect_integer();
        const int m = small_int(Rational::parse(n.text), n.where, "mode count");
        if (m < 1 || m > kMaxModes) fail(n, "mode count must be between 1 and 24");
        s.modes = m;
      } else if (tok.text == "let") {
        const Token id = lex_.next();
        if (id.type != Token::ident) fail(id, "expected a binding name");
        if (reserved_words().count(id.text)) fail(id, "'" + id.text + "' is reserved");
        if (find_builtin(id.text, false, {}) >= 0) {
          fail(id, "binding '" + id.text + "' shadows a builtin");
        }
        if (s.binding(id.text)) fail(id, "duplicate binding '" + id.text + "'");
        expect_symbol("=");
        s.bindings.push_back({id.text, expr(), id.where});
      } else if (tok.text == "assert") {
        const Token n = lex_.raw_name();
        if (!relation_names.insert(n.text).second) {
          fail(n, "duplicate relation name '" + n.text + "'");
        }
        Relation r;
        r.name = n.text;
        r.where = tok.where;
        expect_symbol(":");
        r.lhs = expr();
        expect_symbol("==");
        r.rhs = expr();
        while (lex_.peek().type == Token::symbol && lex_.peek().text == "@") {
          attribute(r);
        }
        s.relations.push_back(std::move(r));
      } else {
        fail(tok, "unknown statement '" + tok.text + "'");
      }
      const Token eol = lex_.next();
      if (eol.type != Token::newline && eol.type != Token::end) {
        fail(eol, "unexpected '" + eol.text + "' at end of statement");
      }
      if (eol.type == Token::end) break;
    }
    resolve(s);
    return s;
  }

  ExprPtr standalone() {
    while (lex_.peek().type == Token::newline) lex_.next();
    ExprPtr e = expr();
    while (lex_.peek().type == Token::newline) lex_.next();
    const Token tok = lex_.next();
    if (tok.type != Token::end) fail(tok, "unexpected '" + tok.text + "' after expression");
    Suite empty;
    check_names(e, empty);
    return e;
  }

 private:
  [[noreturn]] static void fail(const Token& tok, const std::string& message) {
    throw ParseError(Kind::syntax, tok.where, message);
  }

  static std::string describe(const Token& tok) {
    switch (tok.type) {
      case Token::end: return "end of input";
      case Token::newline: return "end of line";
      default: return "'" + tok.text + "'";
    }
  }

  Token expect_symbol(const std::string& s) {
    const Token tok = lex_.next();
    if (tok.type != Token::symbol || tok.text != s) {
      fail(tok, "expected '" + s + "' but found " + describe(tok));
    }
    return tok;
  }

  Token expect_integer() {
    const Token tok = lex_.next();
    if (tok.type != Token::integer) fail(tok, "expected an integer but found " + describe(tok));
    return tok;
  }

  bool at_symbol(const char* s) {
    const Token& tok = lex_.peek();
    return tok.type == Token::symbol && tok.text == s;
  }

  void attribute(Relation& r) {
    expect_symbol("@");
    const Token key = lex_.next();
    if (key.type != Token::ident) fail(key, "expected an attribute name");
    expect_symbol("=");
    const Token val = lex_.next();
    if (key.text == "margin") {
      if (r.margin) fail(key, "duplicate margin attribute");
      if (val.type == Token::ident && val.text == "auto") return;
      if (val.type != Token::integer) fail(val, "margin must be 'auto' or an integer");
      r.margin = small_int(Rational::parse(val.text), val.where, "margin");
    } else if (key.text == "mode") {
      if (r.mode) fail(key, "duplicate mode attribute");
      const auto m = val.type == Token::ident ? parse_relation_mode(val.text) : std::nullopt;
      if (!m) fail(val, "mode must be exact, sample or limit");
      r.mode = m;
    } else if (key.text == "samples") {
      if (r.samples) fail(key, "duplicate samples attribute");
      if (val.type != Token::integer) fail(val, "samples must be a positive integer");
      const int k = small_int(Rational::parse(val.text), val.where, "samples");
      if (k < 1) fail(val, "samples must be a positive integer");
      r.samples = k;
    } else {
      fail(key, "unknown attribute '" + key.text + "'");
    }
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& p, const Token& at) : p(p) {
      if (++p.depth_ > kMaxDepth) fail(at, "expression nested too deeply");
    }
    ~DepthGuard() { --p.depth_; }
    Parser& p;
  };

  ExprPtr expr() {
    DepthGuard guard(*this, lex_.peek());
    ExprPtr e = product();
    while (at_symbol("+") || at_symbol("-")) {
      const Token op = lex_.next();
      ExprPtr rhs = product();
      e = binary(op.text == "+" ? ExprKind::add : ExprKind::subtract, std::move(e),
                 std::move(rhs), op.where);
    }
    return e;
  }

  bool starts_atom() {
    const Token& tok = lex_.peek();
    if (tok.type == Token::integer || tok.type == Token::ident) return true;
    return tok.type == Token::symbol &&
           (tok.text == "(" || tok.text == "[" || tok.text == "{");
  }

  ExprPtr product() {
    ExprPtr e = unary();
    while (true) {
      if (at_symbol("*") || at_symbol("/")) {
        const Token op = lex_.next();
        ExprPtr rhs = unary();
        e = binary(op.text == "*" ? ExprKind::compose : ExprKind::divide, std::move(e),
                   std::move(rhs), op.where);
      } else if (starts_atom()) {
        const SourceLocation where = lex_.peek().where;
        ExprPtr rhs = unary();
        e = binary(ExprKind::compose, std::move(e), std::move(rhs), where);
      } else {
        return e;
      }
    }
  }

  ExprPtr unary() {
    DepthGuard guard(*this, lex_.peek());
    if (at_symbol("-")) {
      const Token op = lex_.next();
      ExprPtr operand = unary();
      if (is_literal(operand)) return make_literal(-operand->literal, op.where);
      auto e = make(ExprKind::negate, op.where);
      e->children = {std::move(operand)};
      return e;
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (!at_symbol("^")) return base;
    const Token op = lex_.next();
    Rational e;
    if (at_symbol("-")) {
      lex_.next();
      e = -Rational::parse(expect_integer().text);
    } else if (at_symbol("(")) {
      lex_.next();
      e = constant(expr(), op);
      expect_symbol(")");
    } else {
      e = Rational::parse(expect_integer().text);
    }
    if (at_symbol("^")) fail(lex_.peek(), "chained powers need parentheses");
    if (is_literal(base)) return make_literal(literal_power(base->literal, e, op.where), op.where);
    if (!e.is_integer() || e.sign() < 0) {
      throw ParseError(Kind::syntax, op.where,
                       "operator powers must be nonnegative integers, got " + e.to_string());
    }
    if (e > Rational(kMaxPower)) throw ParseError(Kind::syntax, op.where, "exponent out of range");
    auto node = make(ExprKind::power, op.where);
    node->exponent = e;
    node->children = {std::move(base)};
    return node;
  }

  /// The rational value of a constant expression.
  static Rational constant(const ExprPtr& e, const Token& at) {
    if (!is_literal(e) || !e->literal.is_constant() || !e->literal.constant_value().is_real()) {
      throw ParseError(Kind::syntax, e ? e->where : at.where, "expected a rational constant");
    }
    return e->literal.constant_value().re();
  }

  Rational quarter(const ExprPtr& e, const Token& at) {
    const Rational v = constant(e, at);
    if (!(v * Rational(4)).is_integer()) {
      throw ParseError(Kind::syntax, e->where,
                       "exponent " + v.to_string() + " is not a multiple of 1/4");
    }
    return v;
  }

  ExprPtr atom() {
    DepthGuard guard(*this, lex_.peek());
    const Token tok = lex_.next();
    if (tok.type == Token::integer) {
      return make_literal(Scalar(Rational::parse(tok.text)), tok.where);
    }
    if (tok.type == Token::symbol) {
      if (tok.text == "(") {
        ExprPtr e = expr();
        expect_symbol(")");
        return e;
      }
      if (tok.text == "[" || tok.text == "{") {
        ExprPtr a = expr();
        expect_symbol(",");
        ExprPtr b = expr();
        expect_symbol(tok.text == "[" ? "]" : "}");
        auto e = make(tok.text == "[" ? ExprKind::commutator : ExprKind::anticommutator,
                      tok.where);
        e->children = {std::move(a), std::move(b)};
        return e;
      }
      fail(tok, "expected an expression but found " + describe(tok));
    }
    if (tok.type != Token::ident) fail(tok, "expected an expression but found " + describe(tok));
    if (tok.text == "t") return make_literal(Scalar::t_power(1), tok.where);
    if (tok.text == "q") return make_literal(Scalar::t_power(4), tok.where);
    if (tok.text == "i") return make_literal(Scalar::imaginary_unit(), tok.where);
    const bool call = at_symbol("(") && lex_.peek().begin == tok.end_offset;
    if (tok.text == "qcomm") {
      if (!call) fail(tok, "qcomm needs an argument list");
      lex_.next();
      ExprPtr a = expr();
      expect_symbol(",");
      ExprPtr b = expr();
      const Token semi = expect_symbol(";");
      const Rational e = quarter(expr(), semi);
      expect_symbol(")");
      auto node = make(ExprKind::q_commutator, tok.where);
      node->exponent = e;
      node->children = {std::move(a), std::move(b)};
      return node;
    }
    if (tok.text == "qpow" || tok.text == "qbr" || tok.text == "qnum") {
      if (!call) fail(tok, tok.text + " needs an argument list");
      lex_.next();
      ExprPtr d = expr();
      Rational e(1);
      if (at_symbol(";")) {
        const Token semi = lex_.next();
        e = quarter(expr(), semi);
        if (e.is_zero()) throw ParseError(Kind::syntax, semi.where, "base exponent must be nonzero");
      }
      expect_symbol(")");
      const ExprKind kind = tok.text == "qpow"  ? ExprKind::qpow
                            : tok.text == "qbr" ? ExprKind::qbr
                                                : ExprKind::qnum;
      auto node = make(kind, tok.where);
      node->exponent = e;
      node->children = {std::move(d)};
      return node;
    }
    if (reserved_words().count(tok.text)) fail(tok, "'" + tok.text + "' cannot start an expression");
    auto node = make(ExprKind::name, tok.where);
    node->name = tok.text;
    if (call) {
      lex_.next();
      node->call = true;
      if (!at_symbol(")")) {
        do {
          node->args.push_back(name_arg());
        } while (at_symbol(",") && (lex_.next(), true));
      }
      expect_symbol(")");
    }
    return node;
  }

  NameArg name_arg() {
    NameArg arg;
    const Token& first = lex_.peek();
    if (first.type == Token::ident && !reserved_words().count(first.text)) {
      arg.key = lex_.next().text;
      expect_symbol("=");
      if (at_symbol("(")) {
        const Token open = lex_.next();
        arg.tuple = true;
        do {
          arg.values.push_back(constant(expr(), open));
        } while (at_symbol(",") && (lex_.next(), true));
        expect_symbol(")");
        return arg;
      }
    }
    const Token at = lex_.peek();
    arg.values.push_back(constant(expr(), at));
    return arg;
  }

  /// Every name must be a let binding or a builtin, and bindings are acyclic.
  void resolve(const Suite& s) {
    for (const auto& b : s.bindings) check_names(b.value, s);
    for (const auto& r : s.relations) {
      check_names(r.lhs, s);
      check_names(r.rhs, s);
    }
    std::map<std::string, int> state;  // 1 = visiting, 2 = done
    std::vector<std::string> path;
    for (const auto& b : s.bindings) visit(b.name, s, state, path, b.where);
  }

  void visit(const std::string& name, const Suite& s, std::map<std::string, int>& state,
             std::vector<std::string>& path, SourceLocation where) {
    int& st = state[name];
    if (st == 2) return;
    path.push_back(name);
    if (st == 1) {
      std::string chain;
      const auto start = std::find(path.begin(), path.end(), name);
      for (auto it = start; it != path.end(); ++it) {
        chain += (it == start ? "" : " -> ") + *it;
      }
      throw ParseError(Kind::cyclic_binding, where,
                       "binding '" + name + "' depends on itself via " + chain);
    }
    st = 1;
    std::vector<const Expr*> refs;
    collect(s.binding(name)->value.get(), s, refs);
    for (const Expr* ref : refs) visit(ref->name, s, state, path, ref->where);
    state[name] = 2;
    path.pop_back();
  }

  static void collect(const Expr* e, const Suite& s, std::vector<const Expr*>& out) {
    if (e->kind == ExprKind::name && !e->call && s.binding(e->name)) out.push_back(e);
    for (const auto& c : e->children) collect(c.get(), s, out);
  }

  static void check_names(const ExprPtr& e, const Suite& s) {
    if (e->kind == ExprKind::name) {
      if (!e->call && s.binding(e->name)) return;
      std::string why;
      if (find_builtin(e->name, e->call, e->args, &why) < 0) {
        throw ParseError(Kind::unresolved_name, e->where, why);
      }
      return;
    }
    for (const auto& c : e->children) check_names(c, s);
  }

  Lexer lex_;
  int depth_ = 0;
};

// Printing. Precedence: 1 sum, 2 product, 3 unary, 4 power, 5 atom.

bool atomic_literal(const std::string& s, int prec) {
  if (s == "t" || s == "i") return true;
  if (!s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(c); })) {
    return true;
  }
  if (prec >= 4 || s.rfind("t^", 0) != 0) return false;
  const std::string e = s.substr(2);
  std::size_t k = e.size() > 1 && e[0] == '-' ? 1 : 0;
  return k < e.size() && std::all_of(e.begin() + static_cast<long>(k), e.end(),
                                     [](char c) { return std::isdigit(c); });
}

std::string print_rational_exponent(const Rational& e) {
  if (e.is_integer()) return e.to_string();
  return "(" + e.to_string() + ")";
}

void print(const Expr& e, int prec, std::string& out);

void print_binary(const Expr& e, const char* op, int self, int left, int right, int prec,
                  std::string& out) {
  if (prec > self) out += '(';
  print(*e.children[0], left, out);
  out += op;
  print(*e.children[1], right, out);
  if (prec > self) out += ')';
}

void print(const Expr& e, int prec, std::string& out) {
  switch (e.kind) {
    case ExprKind::literal: {
      const std::string s = e.literal.to_string();
      if (atomic_literal(s, prec)) {
        out += s;
      } else {
        out += "(" + s + ")";
      }
      return;
    }
    case ExprKind::name: {
      out += e.name;
      if (!e.call) return;
      out += '(';
      for (std::size_t k = 0; k < e.args.size(); ++k) {
        const NameArg& a = e.args[k];
        if (k) out += ", ";
        if (!a.key.empty()) out += a.key + "=";
        if (a.tuple) out += '(';
        for (std::size_t j = 0; j < a.values.size(); ++j) {
          if (j) out += ", ";
          out += a.values[j].to_string();
        }
        if (a.tuple) out += ')';
      }
      out += ')';
      return;
    }
    case ExprKind::add: print_binary(e, " + ", 1, 1, 2, prec, out); return;
    case ExprKind::subtract: print_binary(e, " - ", 1, 1, 2, prec, out); return;
    case ExprKind::compose: print_binary(e, " ", 2, 2, 4, prec, out); return;
    case ExprKind::divide: print_binary(e, " / ", 2, 2, 4, prec, out); return;
    case ExprKind::negate:
      if (prec > 3) out += '(';
      out += '-';
      print(*e.children[0], 3, out);
      if (prec > 3) out += ')';
      return;
    case ExprKind::power:
      if (prec > 4) out += '(';
      print(*e.children[0], 5, out);
      out += "^" + print_rational_exponent(e.exponent);
      if (prec > 4) out += ')';
      return;
    case ExprKind::commutator:
    case ExprKind::anticommutator: {
      const bool comm = e.kind == ExprKind::commutator;
      out += comm ? '[' : '{';
      print(*e.children[0], 1, out);
      out += ", ";
      print(*e.children[1], 1, out);
      out += comm ? ']' : '}';
      return;
    }
    case ExprKind::q_commutator:
      out += "qcomm(";
      print(*e.children[0], 1, out);
      out += ", ";
      print(*e.children[1], 1, out);
      out += "; " + e.exponent.to_string() + ")";
      return;
    case ExprKind::qpow:
    case ExprKind::qbr:
    case ExprKind::qnum:
      out += e.kind == ExprKind::qpow ? "qpow(" : e.kind == ExprKind::qbr ? "qbr(" : "qnum(";
      print(*e.children[0], 1, out);
      if (!e.exponent.is_one()) out += "; " + e.exponent.to_string();
      out += ')';
      return;
  }
}

}  // namespace

Suite parse_suite(std::string_view text) { return Parser(text).suite(); }

ExprPtr parse_expression(std::string_view text) { return Parser(text).standalone(); }

std::string print_expr(const ExprPtr& expr) {
  std::string out;
  print(*expr, 1, out);
  return out;
}

std::string print_relation(const Relation& r) {
  std::string out = "assert " + r.name + ": " + print_expr(r.lhs) + " == " + print_expr(r.rhs);
  if (r.margin) out += " @margin=" + std::to_string(*r.margin);
  if (r.mode) out += " @mode=" + to_string(*r.mode);
  if (r.samples) out += " @samples=" + std::to_string(*r.samples);
  return out;
}

std::string print_suite(const Suite& suite) {
  std::string out = "suite " + suite.name + "\nmodes " + std::to_string(suite.modes) + "\n";
  for (const auto& b : suite.bindings) {
    out += "let " + b.name + " = " + print_expr(b.value) + "\n";
  }
  for (const auto& r : suite.relations) out += print_relation(r) + "\n";
  return out;
}

}  // namespace qfock::dsl
