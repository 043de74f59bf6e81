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

struct SuiteSource {
  std::string name;
  std::string text;
};

/// The embedded suite files, sorted by name.
const std::vector<SuiteSource>& builtin_suite_sources();

/// Parsed builtin suites, sorted by name.
std::vector<Suite> builtin_suites();

/// Throws ConfigError for an unknown name.
Suite builtin_suite(const std::string& name);

/// Defining relations of the q-oscillators on m modes, including the
/// vanishing of cross-mode commutators.
std::string qosc_text(int m);

/// Adjacent-generator cubic relations and distant commutation of the
/// L(i,i+1) realization on m modes.
std::string oq_n_generic_text(int m);

}  // namespace qfock::dsl
