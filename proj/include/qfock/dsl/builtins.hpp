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
#include <vector>

#include "qfock/dsl/ast.hpp"

namespace qfock::dsl {

/// Shape of one builtin parameter.
struct ParamSpec {
  std::string key;  // empty for positional
  bool tuple = false;
  bool integer = true;
};

/// Entry of the frozen builtin name table. Names containing "<k>" stand for
/// a family indexed by a 1-based mode number written inline, e.g. A3p.
struct BuiltinInfo {
  std::string name;
  std::vector<ParamSpec> params;
  int min_modes = 0;
  std::string summary;
};

const std::vector<BuiltinInfo>& builtin_catalog();

/// Index into builtin_catalog() of the entry matching the name and argument
/// shape, or -1 with a reason in *why.
int find_builtin(const std::string& name, bool call, const std::vector<NameArg>& args,
                 std::string* why = nullptr);

/// Mode number of a family member such as "A3p" or "N12"; 0 if not a family
/// name.
int family_mode(const std::string& name);

}  // namespace qfock::dsl
