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


#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qfock/error.hpp"
#include "qfock/scalar/scalar.hpp"

namespace qfock::dsl {

struct SourceLocation {
  int line = 0;
  int column = 0;
};

/// A diagnostic tied to a position in the source text.
class ParseError : public Error {
 public:
  enum class Kind { lexical, syntax, unresolved_name, cyclic_binding };

  ParseError(Kind kind, SourceLocation where, const std::string& message);

  Kind kind() const { return kind_; }
  SourceLocation where() const { return where_; }
  /// The message without the "line:column: kind:" prefix.
  const std::string& message() const { return message_; }

 private:
  Kind kind_;
  SourceLocation where_;
  std::string message_;
};

std::string to_string(ParseError::Kind kind);

enum class ExprKind {
  name,            // builtin or let-bound reference, optionally with arguments
  literal,         // constant in Q(i)(t)
  negate,
  add,
  subtract,
  compose,         // juxtaposition or '*'
  divide,          // divisor must evaluate to a scalar
  power,           // exponent held in `exponent`
  commutator,      // [X,Y]
  anticommutator,  // {X,Y}
  q_commutator,    // qcomm(X,Y;e) = q^e XY - q^-e YX
  qpow,            // qpow(D;e) = q^(e D) on a diagonal with constant entries
  qbr,             // qbr(D;e) = [D]_{q^e}
  qnum,            // qnum(D;e) = (D)_{q^e}
};

/// Argument of a builtin name: positional (`key` empty) or `key=value`;
/// tuple arguments are written `key=(a,b,...)`.
struct NameArg {
  std::string key;
  std::vector<Rational> values;
  bool tuple = false;

  friend bool operator==(const NameArg&, const NameArg&) = default;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Node of the expression tree. Only the fields relevant to `kind` are
/// meaningful; `where` is ignored by structural equality.
struct Expr {
  ExprKind kind = ExprKind::literal;
  SourceLocation where;
  std::string name;
  bool call = false;  // name written with a parenthesised argument list
  std::vector<NameArg> args;
  Scalar literal;
  Rational exponent = Rational(1);
  std::vector<ExprPtr> children;
};

bool operator==(const Expr& a, const Expr& b);
bool same_expr(const ExprPtr& a, const ExprPtr& b);

enum class RelationMode { exact, sample, limit };
std::string to_string(RelationMode mode);
std::optional<RelationMode> parse_relation_mode(const std::string& text);

struct Relation {
  std::string name;
  ExprPtr lhs;
  ExprPtr rhs;
  std::optional<int> margin;  // absent means automatic
  std::optional<RelationMode> mode;
  std::optional<int> samples;
  SourceLocation where;
};

struct Binding {
  std::string name;
  ExprPtr value;
  SourceLocation where;
};

struct Suite {
  std::string name = "unnamed";
  int modes = 1;
  std::vector<Binding> bindings;
  std::vector<Relation> relations;

  const Binding* binding(const std::string& name) const;
};

/// Structural equality; source locations are ignored.
bool operator==(const Relation& a, const Relation& b);
bool operator==(const Binding& a, const Binding& b);
bool operator==(const Suite& a, const Suite& b);

}  // namespace qfock::dsl
