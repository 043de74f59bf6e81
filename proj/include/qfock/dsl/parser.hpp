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

#include <string>
#include <string_view>

#include "qfock/dsl/ast.hpp"

namespace qfock::dsl {

/// Parses a suite file. Throws ParseError on the first lexical or syntax
/// error, then on the first reference that is neither let-bound nor a
/// builtin, then on the first cyclic binding.
Suite parse_suite(std::string_view text);

/// Parses one expression whose names must all be builtins.
ExprPtr parse_expression(std::string_view text);

/// Canonical rendering; parse_suite(print_suite(s)) == s.
std::string print_suite(const Suite& suite);
std::string print_expr(const ExprPtr& expr);
std::string print_relation(const Relation& relation);

}  // namespace qfock::dsl
