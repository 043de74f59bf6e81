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


#include "qfock/dsl/suites.hpp"

#include <sstream>

#include "qfock/dsl/parser.hpp"
#include "qfock/error.hpp"

namespace qfock::dsl {

std::vector<Suite> builtin_suites() {
  std::vector<Suite> out;
  for (const auto& source : builtin_suite_sources()) {
    out.push_back(parse_suite(source.text));
  }
  return out;
}

Suite builtin_suite(const std::string& name) {
  for (const auto& source : builtin_suite_sources()) {
    if (source.name == name) return parse_suite(source.text);
  }
  throw ConfigError("unknown builtin suite '" + name + "'");
}

std::string qosc_text(int m) {
  if (m < 1) throw ConfigError("qosc_text needs at least one mode");
  std::ostringstream s;
  s << "# Defining relations of independent q-oscillators in the number gauge.\n"
    << "suite qosc\n"
    << "modes " << m << "\n";
  for (int k = 1; k <= m; ++k) {
    const std::string p = "A" + std::to_string(k) + "p";
    const std::string n = "A" + std::to_string(k) + "m";
    const std::string d = "n" + std::to_string(k);
    const std::string id = std::to_string(k);
    s << "\n"
      << "assert number-raise-" << id << ": [" << d << ", " << p << "] == " << p << "\n"
      << "assert number-lower-" << id << ": [" << d << ", " << n << "] == -" << n << "\n"
      << "assert ladder-" << id << ": [" << n << ", " << p << "] == qpow(" << d << ")\n"
      << "assert q-commutator-" << id << ": " << n << " " << p << " - q " << p << " " << n
      << " == I\n"
      << "assert number-operator-" << id << ": N" << id << " == " << p << " " << n << "\n";
  }
  for (int j = 1; j <= m; ++j) {
    for (int k = j + 1; k <= m; ++k) {
      const std::string tag = std::to_string(j) + "-" + std::to_string(k);
      const std::string aj = "A" + std::to_string(j);
      const std::string ak = "A" + std::to_string(k);
      s << "\n"
        << "assert cross-pp-" << tag << ": [" << aj << "p, " << ak << "p] == 0\n"
        << "assert cross-pm-" << tag << ": [" << aj << "p, " << ak << "m] == 0\n"
        << "assert cross-mp-" << tag << ": [" << aj << "m, " << ak << "p] == 0\n"
        << "assert cross-mm-" << tag << ": [" << aj << "m, " << ak << "m] == 0\n"
        << "assert cross-number-" << tag << ": [n" << j << ", " << ak << "p] == 0\n";
    }
  }
  return s.str();
}

std::string oq_n_generic_text(int m) {
  if (m < 2) throw ConfigError("oq_n_generic_text needs at least two modes");
  auto gen = [](int k) {
    return "L(" + std::to_string(k) + "," + std::to_string(k + 1) + ")";
  };
  std::ostringstream s;
  s << "# Relations of o_{q^(1/2)}(" << m << ") for the generators L(k,k+1) built from\n"
    << "# " << m << " q-oscillators. Generator k is L(k,k+1).\n"
    << "suite oq-n-generic\n"
    << "modes " << m << "\n\n"
    << "let b = q^(1/2) + q^(-1/2)\n\n";
  const int count = m - 1;
  for (int k = 1; k + 1 <= count; ++k) {
    for (const auto& [x, y] : {std::pair{k, k + 1}, std::pair{k + 1, k}}) {
      const std::string a = gen(x), c = gen(y);
      s << "assert cubic-" << x << "-" << y << ": " << a << " " << c << "^2 - b " << c
        << " " << a << " " << c << " + " << c << "^2 " << a << " == -" << a << "\n";
    }
  }
  for (int j = 1; j <= count; ++j) {
    for (int k = j + 2; k <= count; ++k) {
      s << "assert commute-" << j << "-" << k << ": [" << gen(j) << ", " << gen(k)
        << "] == 0\n";
    }
  }
  return s.str();
}

}  // namespace qfock::dsl
