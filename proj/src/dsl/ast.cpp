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


#include "qfock/dsl/ast.hpp"

#include <algorithm>

namespace qfock::dsl {

std::string to_string(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::lexical: return "lexical error";
    case ParseError::Kind::syntax: return "syntax error";
    case ParseError::Kind::unresolved_name: return "unresolved name";
    case ParseError::Kind::cyclic_binding: return "cyclic binding";
  }
  return "error";
}

ParseError::ParseError(Kind kind, SourceLocation where, const std::string& message)
    : Error(std::to_string(where.line) + ":" + std::to_string(where.column) + ": " +
            dsl::to_string(kind) + ": " + message),
      kind_(kind),
      where_(where),
      message_(message) {}

bool same_expr(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.children.size() != b.children.size()) return false;
  switch (a.kind) {
    case ExprKind::name:
      if (a.name != b.name || a.call != b.call || a.args != b.args) return false;
      break;
    case ExprKind::literal:
      if (a.literal != b.literal) return false;
      break;
    case ExprKind::power:
    case ExprKind::q_commutator:
    case ExprKind::qpow:
    case ExprKind::qbr:
    case ExprKind::qnum:
      if (a.exponent != b.exponent) return false;
      break;
    default:
      break;
  }
  for (std::size_t k = 0; k < a.children.size(); ++k) {
    if (!same_expr(a.children[k], b.children[k])) return false;
  }
  return true;
}

std::string to_string(RelationMode mode) {
  switch (mode) {
    case RelationMode::exact: return "exact";
    case RelationMode::sample: return "sample";
    case RelationMode::limit: return "limit";
  }
  return "exact";
}

std::optional<RelationMode> parse_relation_mode(const std::string& text) {
  if (text == "exact") return RelationMode::exact;
  if (text == "sample") return RelationMode::sample;
  if (text == "limit") return RelationMode::limit;
  return std::nullopt;
}

const Binding* Suite::binding(const std::string& n) const {
  for (const auto& b : bindings) {
    if (b.name == n) return &b;
  }
  return nullptr;
}

bool operator==(const Relation& a, const Relation& b) {
  return a.name == b.name && same_expr(a.lhs, b.lhs) && same_expr(a.rhs, b.rhs) &&
         a.margin == b.margin && a.mode == b.mode && a.samples == b.samples;
}

bool operator==(const Binding& a, const Binding& b) {
  return a.name == b.name && same_expr(a.value, b.value);
}

bool operator==(const Suite& a, const Suite& b) {
  return a.name == b.name && a.modes == b.modes && a.bindings == b.bindings &&
         a.relations == b.relations;
}

}  // namespace qfock::dsl
