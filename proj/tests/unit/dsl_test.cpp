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


#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "qfock/dsl/bind.hpp"
#include "qfock/dsl/builtins.hpp"
#include "qfock/dsl/parser.hpp"
#include "qfock/dsl/suites.hpp"
#include "qfock/fock/interior.hpp"

namespace qfock::dsl {
namespace {

using Kind = ParseError::Kind;

ParseError parse_failure(const std::string& text) {
  try {
    parse_suite(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "parsed without error:\n" << text;
  return ParseError(Kind::syntax, {}, "");
}

void expect_error(const std::string& text, Kind kind, int line, int column) {
  const ParseError e = parse_failure(text);
  EXPECT_EQ(e.kind(), kind) << e.what();
  EXPECT_EQ(e.where().line, line) << e.what();
  EXPECT_EQ(e.where().column, column) << e.what();
}

TEST(Parse, SmallSuite) {
  const Suite s = parse_suite(
      "# comment\n"
      "suite demo\n"
      "modes 2\n"
      "let x = A1p A2m   # trailing comment\n"
      "assert first: [n1, x] == x @margin=0\n"
      "assert second: qcomm(A1m, A1p; 1/2) == q^(1/4) qpow(n1) @mode=sample @samples=3\n");
  EXPECT_EQ(s.name, "demo");
  EXPECT_EQ(s.modes, 2);
  ASSERT_EQ(s.bindings.size(), 1u);
  ASSERT_EQ(s.relations.size(), 2u);
  EXPECT_EQ(s.relations[0].name, "first");
  EXPECT_EQ(s.relations[0].margin, 0);
  EXPECT_FALSE(s.relations[0].mode);
  EXPECT_EQ(s.relations[1].mode, RelationMode::sample);
  EXPECT_EQ(s.relations[1].samples, 3);
  EXPECT_EQ(s.relations[1].lhs->kind, ExprKind::q_commutator);
  EXPECT_EQ(s.relations[1].lhs->exponent, Rational(1, 2));
  EXPECT_EQ(s.relations[0].where.line, 5);
}

TEST(Parse, ScalarLiteralsFold) {
  const ExprPtr e = parse_expression("1/(1 - t^4)");
  ASSERT_EQ(e->kind, ExprKind::literal);
  EXPECT_EQ(e->literal, (Scalar(1) - Scalar::t_power(4)).inv());
  EXPECT_EQ(parse_expression("q^(-1/2)")->literal, Scalar::t_power(-2));
  EXPECT_EQ(parse_expression("i i")->literal, Scalar(-1));
  EXPECT_EQ(parse_expression("(q + q^-1) / 2")->literal,
            (Scalar::t_power(4) + Scalar::t_power(-4)) / Scalar(2));
}

TEST(Parse, Precedence) {
  // Unary minus binds looser than ^ and tighter than juxtaposition.
  const ExprPtr e = parse_expression("-A1p^2 A1m + I");
  ASSERT_EQ(e->kind, ExprKind::add);
  const ExprPtr& product = e->children[0];
  ASSERT_EQ(product->kind, ExprKind::compose);
  EXPECT_EQ(product->children[0]->kind, ExprKind::negate);
  EXPECT_EQ(product->children[0]->children[0]->kind, ExprKind::power);
}

TEST(Parse, LiteralRoundTrip) {
  const ExprPtr e = parse_expression("1/(1 - t^4)");
  const ExprPtr again = parse_expression(print_expr(e));
  EXPECT_TRUE(same_expr(e, again)) << print_expr(e);
}

TEST(Parse, ErrorLocations) {
  expect_error("suite s\nmodes 1\nassert a: A1p == $\n", Kind::lexical, 3, 18);
  expect_error("suite s\nmodes 1\nassert a: A1p ==\n", Kind::syntax, 3, 17);
  expect_error("suite s\nmodes 1\nassert a: Foo == I\n", Kind::unresolved_name, 3, 11);
  expect_error("suite s\nlet a = b\nlet b = a\nassert r: a == I\n", Kind::cyclic_binding, 3, 9);
  expect_error("suite s\nlet a = I\nlet a = I\n", Kind::syntax, 3, 5);
  expect_error("suite s\nlet I = A1p\n", Kind::syntax, 2, 5);
  expect_error("suite s\nmodes 25\n", Kind::syntax, 2, 7);
  expect_error("suite s\nassert r: A1p^-1 == I\n", Kind::syntax, 2, 14);
  expect_error("suite s\nassert r: L(1,2,3) == I\n", Kind::unresolved_name, 2, 11);
  expect_error("suite s\nassert r: I == I @mode=fast\n", Kind::syntax, 2, 24);
  expect_error("suite s\nassert r: I == 0^(-1/2) I\n", Kind::syntax, 2, 17);
}

TEST(Parse, MessagesCarryLocation) {
  const ParseError e = parse_failure("suite s\n\n  assert r: A1p ==\n");
  const std::string what = e.what();
  EXPECT_EQ(what.rfind(std::to_string(e.where().line) + ":" +
                           std::to_string(e.where().column) + ": ",
                       0),
            0u)
      << what;
}

TEST(Builtins, CatalogLookup) {
  EXPECT_GE(find_builtin("A12p", false, {}), 0);
  EXPECT_EQ(family_mode("A12p"), 12);
  EXPECT_EQ(family_mode("N3"), 3);
  EXPECT_EQ(family_mode("A0p"), 0);
  std::string why;
  EXPECT_LT(find_builtin("Mplus", true, {NameArg{"", {Rational(1)}, false}}, &why), 0);
  EXPECT_FALSE(why.empty());
  EXPECT_GE(find_builtin("E", true,
                         {NameArg{"a", {Rational(1), Rational(0)}, true},
                          NameArg{"c", {Rational(2)}, false}}),
            0);
  for (const auto& info : builtin_catalog()) EXPECT_FALSE(info.summary.empty()) << info.name;
}

TEST(Suites, FrozenSet) {
  const std::vector<std::string> expected = {
      "aw-embedding",     "aw-params-centrality", "classical-limit",
      "commutant",        "howe-commutation",     "o3-cartesian",
      "oq-n-generic",     "oq4-casimirs",         "oq4-relations",
      "proof-lemmas",     "qhiggs-proposition",   "qosc",
      "script-K-consistency", "su11-metaplectic", "su11-tilde"};
  std::vector<std::string> names;
  for (const auto& s : builtin_suite_sources()) names.push_back(s.name);
  EXPECT_EQ(names, expected);
  const auto suites = builtin_suites();
  for (std::size_t k = 0; k < suites.size(); ++k) EXPECT_EQ(suites[k].name, expected[k]);
  EXPECT_THROW(builtin_suite("nosuch"), ConfigError);
}

TEST(Suites, GeneratorsMatchEmbeddedFiles) {
  EXPECT_EQ(qosc_text(1), builtin_suite_sources()[11].text);
  EXPECT_EQ(oq_n_generic_text(5), builtin_suite_sources()[6].text);
  const Suite four = parse_suite(qosc_text(4));
  EXPECT_EQ(four.modes, 4);
  EXPECT_EQ(four.relations.size(), 4u * 5 + 6u * 5);
  const Suite six = parse_suite(oq_n_generic_text(6));
  EXPECT_EQ(six.relations.size(), 2u * 4 + 6u);
}

TEST(Suites, NamedContents) {
  const Suite higgs = builtin_suite("qhiggs-proposition");
  auto has = [](const Suite& s, const std::string& name) {
    for (const auto& r : s.relations) {
      if (r.name == name) return true;
    }
    return false;
  };
  EXPECT_TRUE(has(higgs, "mplus-mminus"));
  EXPECT_TRUE(has(higgs, "half-l-mplus"));
  const Suite howe = builtin_suite("howe-commutation");
  EXPECT_EQ(howe.relations.size(), 9u);
  for (const auto& r : builtin_suite("classical-limit").relations) {
    EXPECT_EQ(r.mode, RelationMode::limit) << r.name;
  }
}

TEST(Suites, RoundTripAndDeterminism) {
  for (const auto& s : builtin_suites()) {
    const std::string printed = print_suite(s);
    EXPECT_EQ(printed, print_suite(s));
    const Suite again = parse_suite(printed);
    EXPECT_EQ(again, s) << s.name << "\n" << printed;
    EXPECT_EQ(print_suite(again), printed) << s.name;
  }
}

TEST(Bind, BuiltinSuitesBind) {
  for (const auto& s : builtin_suites()) {
    const Realization<Scalar> r(ModeConfig(s.modes, 2));
    const auto bound = bind(s, r);
    EXPECT_EQ(bound.size(), s.relations.size()) << s.name;
  }
  const Realization<Scalar> r(ModeConfig(1, 8));
  EXPECT_EQ(bind(builtin_suite("qosc"), r).size(), 5u);
}

TEST(Bind, RangeErrors) {
  const Realization<Scalar> r4(ModeConfig(4, 2));
  const Suite five = parse_suite("suite s\nmodes 5\nassert r: A5p == A5p\n");
  EXPECT_THROW(bind(five, r4), BindError);
  const Suite hidden = parse_suite("suite s\nmodes 4\n\nassert r: A5p == I\n");
  try {
    bind(hidden, r4);
    ADD_FAILURE() << "mode 5 bound on four modes";
  } catch (const BindError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("4:11: ", 0), 0u) << e.what();
  }
  const Suite offdiag = parse_suite("suite s\nmodes 1\nassert r: qpow(A1p) == I\n");
  EXPECT_THROW(bind(offdiag, Realization<Scalar>(ModeConfig(1, 2))), BindError);
}

TEST(Bind, EvaluateExpression) {
  const ModeConfig cfg(1, 4);
  const Realization<Scalar> r(cfg);
  const auto v = evaluate_expression(parse_expression("[A1m,A1p]"), r);
  const std::vector<int> two = {2};
  EXPECT_EQ(render_column(v.op(), cfg.index(two)), "t^8 |2>");
  const ModeConfig cfg2(2, 4);
  const Realization<Scalar> r2(cfg2);
  const auto lhs = evaluate_expression(parse_expression("qcomm(j1,j2;1/2)"), r2).op();
  const auto rhs = evaluate_expression(parse_expression("j3"), r2).op();
  EXPECT_EQ(equal_on_interior(lhs, rhs, Margin::automatic()).outcome, Outcome::pass);
  EXPECT_TRUE(evaluate_expression(parse_expression("q - t^4"), r).scalar().is_zero());
}

// Random well-formed expression text over a fixed vocabulary.
class ExprGen {
 public:
  explicit ExprGen(std::uint64_t seed) : rng_(seed) {}

  std::string expr(int depth) {
    if (depth <= 0) return atom();
    switch (pick(12)) {
      case 0:
        return expr(depth - 1) + " + " + expr(depth - 1);
      case 1:
        return expr(depth - 1) + " - " + expr(depth - 1);
      case 2:
        return expr(depth - 1) + " " + expr(depth - 1);
      case 3:
        return expr(depth - 1) + " * " + expr(depth - 1);
      case 4:
        return "-" + expr(depth - 1);
      case 5:
        return "(" + expr(depth - 1) + ")^" + std::to_string(pick(3));
      case 6:
        return "[" + expr(depth - 1) + ", " + expr(depth - 1) + "]";
      case 7:
        return "{" + expr(depth - 1) + ", " + expr(depth - 1) + "}";
      case 8:
        return "qcomm(" + expr(depth - 1) + ", " + expr(depth - 1) + "; " +
               kExponents[pick(4)] + ")";
      case 9:
        return std::string(kFunctions[pick(3)]) + "(" + diagonal() + "; " +
               kExponents[pick(4)] + ")";
      case 10:
        return "(" + expr(depth - 1) + ") / " + std::to_string(1 + pick(5));
      default:
        return "(" + expr(depth - 1) + ")";
    }
  }

  std::string suite() {
    std::string text = "suite random-" + std::to_string(pick(1000)) + "\nmodes 4\n";
    const int lets = pick(4);
    for (int k = 0; k < lets; ++k) {
      text += "let x" + std::to_string(k) + " = " + expr(2) + "\n";
      vocabulary_.push_back("x" + std::to_string(k));
    }
    const int relations = 1 + pick(4);
    for (int k = 0; k < relations; ++k) {
      text += "assert rel-" + std::to_string(k) + ": " + expr(3) + " == " + expr(2);
      if (pick(3) == 0) text += " @margin=" + std::to_string(pick(3));
      if (pick(3) == 0) text += " @mode=sample @samples=" + std::to_string(1 + pick(9));
      text += "\n";
    }
    vocabulary_.resize(kBaseWords);
    return text;
  }

 private:
  static constexpr const char* kExponents[] = {"1", "1/2", "-1/4", "3/4"};
  static constexpr const char* kFunctions[] = {"qpow", "qbr", "qnum"};
  static constexpr std::size_t kBaseWords = 16;

  int pick(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }

  std::string diagonal() {
    const char* d[] = {"n1", "n2 + 1/2", "J0(1)", "2 n3 - 1", "L / 2", "H"};
    return d[pick(6)];
  }

  std::string atom() {
    if (pick(4) == 0) {
      const char* lit[] = {"2", "t", "q", "i", "q^(1/2)", "(1 - q)", "t^-3"};
      return lit[pick(7)];
    }
    return vocabulary_[static_cast<std::size_t>(pick(static_cast<int>(vocabulary_.size())))];
  }

  std::mt19937_64 rng_;
  std::vector<std::string> vocabulary_ = {
      "I",       "A1p",     "A2m",      "n3",   "N4",        "L(1,2)",
      "Mplus",   "H",       "J0(1)",    "xi(3)", "Tplus(1/4)", "E(a=(1,0,0,-1), c=2)",
      "E(2,3)",  "K3",      "jp(2)",    "AWr"};
};

TEST(ParseProperties, PrintParseIsIdentity) {
  ExprGen gen(2026);
  for (int trial = 0; trial < 300; ++trial) {
    const std::string text = gen.suite();
    Suite first;
    ASSERT_NO_THROW(first = parse_suite(text)) << text;
    const Suite second = parse_suite(print_suite(first));
    EXPECT_EQ(second, first) << text << "\n---\n" << print_suite(first);
  }
}

TEST(ParseProperties, FuzzedInputsNeverCrash) {
  std::mt19937_64 rng(99);
  const auto& sources = builtin_suite_sources();
  const std::string alphabet = "abcAXnpqt019()[]{},;:=@^*/+-# \n\t.$%&!";
  int errors = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    std::string text = sources[rng() % sources.size()].text;
    const int edits = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < edits; ++k) {
      const std::size_t at = rng() % (text.size() + 1);
      const char c = alphabet[rng() % alphabet.size()];
      switch (rng() % 3) {
        case 0:
          text.insert(text.begin() + static_cast<std::ptrdiff_t>(at), c);
          break;
        case 1:
          if (at < text.size()) text.erase(at, 1 + rng() % 8);
          break;
        default:
          if (at < text.size()) text[at] = c;
          break;
      }
    }
    try {
      const Suite s = parse_suite(text);
      EXPECT_EQ(parse_suite(print_suite(s)), s);
    } catch (const ParseError& e) {
      ++errors;
      EXPECT_GE(e.where().line, 1) << e.what();
      EXPECT_GE(e.where().column, 1) << e.what();
    }
  }
  EXPECT_GT(errors, 1000);
}

TEST(ParseProperties, RandomBytes) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    std::string text(rng() % 64, ' ');
    for (char& c : text) c = static_cast<char>(rng() % 256);
    try {
      parse_suite(text);
    } catch (const ParseError& e) {
      EXPECT_GE(e.where().line, 1);
    }
  }
}

}  // namespace
}  // namespace qfock::dsl
