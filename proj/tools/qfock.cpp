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


// Command-line front end: list suites, verify them, and inspect operators.
//
// Exit codes: 0 every relation passed, 1 some relation failed, 2 some
// relation was inconclusive, 3 usage, parse or binding error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qfock/dsl/bind.hpp"
#include "qfock/dsl/parser.hpp"
#include "qfock/dsl/suites.hpp"
#include "qfock/verify/verify.hpp"

namespace {

using namespace qfock;

constexpr int kExitUsage = 3;

dsl::Suite load_suite(const std::string& spec) {
  const std::string prefix = "builtin:";
  if (spec.rfind(prefix, 0) == 0) return dsl::builtin_suite(spec.substr(prefix.size()));
  std::ifstream in(spec);
  if (!in) throw ConfigError("cannot read suite file '" + spec + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return dsl::parse_suite(text.str());
}

int exit_code(Outcome o) {
  switch (o) {
    case Outcome::pass:
      return 0;
    case Outcome::fail:
      return 1;
    case Outcome::inconclusive:
      return 2;
  }
  return 2;
}

std::vector<int> parse_state(const std::string& text) {
  std::vector<int> occ;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    const int n = std::stoi(item, &used);
    if (used != item.size()) throw ConfigError("bad occupation '" + item + "'");
    occ.push_back(n);
  }
  return occ;
}

struct VerifyArgs {
  std::string suite;
  int cutoff = 0;
  int modes = 0;
  std::string margin = "auto";
  std::string mode;
  std::string samples = "auto";
  std::uint64_t seed = 0;
  std::string report;
  bool quiet = false;
  bool timings = false;
  std::int64_t gauge_seed = -1;
};

int verify_cmd(const VerifyArgs& a, bool margin_given) {
  const dsl::Suite suite = load_suite(a.suite);
  verify::VerifyConfig cfg;
  cfg.seed = a.seed;
  cfg.timings = a.timings;
  if (margin_given && a.margin != "auto") {
    std::size_t used = 0;
    const int m = std::stoi(a.margin, &used);
    if (used != a.margin.size() || m < 0) throw ConfigError("bad margin '" + a.margin + "'");
    cfg.margin = Margin::of(m);
  } else if (margin_given) {
    cfg.margin = Margin::automatic();
  }
  if (!a.mode.empty()) {
    cfg.mode = dsl::parse_relation_mode(a.mode);
    if (!cfg.mode) throw ConfigError("bad mode '" + a.mode + "'");
  }
  if (a.samples != "auto") {
    std::size_t used = 0;
    const int k = std::stoi(a.samples, &used);
    if (used != a.samples.size() || k < 1) throw ConfigError("bad sample count '" + a.samples + "'");
    cfg.samples = k;
  }
  if (a.gauge_seed >= 0) cfg.gauge_seed = static_cast<std::uint64_t>(a.gauge_seed);
  // Suites on four or more modes default to cutoff 4 to keep exact runs
  // at desk scale.
  const int cutoff = a.cutoff > 0 ? a.cutoff : (suite.modes >= 4 ? 4 : 8);
  const int modes = a.modes > 0 ? a.modes : suite.modes;
  const verify::Report report = verify::run(suite, cfg, ModeConfig(modes, cutoff));
  if (!a.report.empty()) {
    std::ofstream out(a.report);
    if (!out) throw ConfigError("cannot write report '" + a.report + "'");
    out << verify::to_json(report);
  }
  if (!a.quiet) std::cout << verify::to_text(report);
  return exit_code(report.overall());
}

int suites_cmd() {
  for (const auto& s : dsl::builtin_suites()) {
    std::cout << s.name << "\t" << s.modes << "\t" << s.relations.size() << "\n";
  }
  return 0;
}

void print_value(const dsl::Value<Scalar>& v, const ModeConfig& cfg,
                 const std::string& state) {
  if (!state.empty()) {
    const std::vector<int> occ = parse_state(state);
    const StateIndex s = cfg.index(occ);
    if (v.is_scalar()) {
      std::cout << (v.scalar().is_zero() ? "0" : "(" + v.scalar().to_string() + ") " +
                                                      cfg.label(s))
                << "\n";
    } else {
      std::cout << render_column(v.op(), s) << "\n";
    }
    return;
  }
  if (v.is_scalar()) {
    std::cout << v.scalar().to_string() << "\n";
  } else {
    std::cout << render(v.op());
  }
}

int eval_cmd(const std::string& expr, int modes, int cutoff, const std::string& state) {
  const dsl::ExprPtr e = dsl::parse_expression(expr);
  const ModeConfig cfg(modes, cutoff);
  const Realization<Scalar> r(cfg);
  print_value(dsl::evaluate_expression(e, r), cfg, state);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of q-oscillator operator identities"};
  app.require_subcommand(1);

  auto* suites = app.add_subcommand("suites", "List builtin suites: name, modes, relations");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Verify every relation of a suite");
  verify->add_option("--suite", va.suite, "builtin:<name> or a .qsuite path")->required();
  verify->add_option("--cutoff", va.cutoff, "Occupation cutoff N (default 4 on 4+ modes, else 8)");
  verify->add_option("--modes", va.modes, "Number of modes (default: the suite's)");
  auto* margin = verify->add_option("--margin", va.margin, "auto or a nonnegative integer");
  verify->add_option("--mode", va.mode, "exact, sample or limit (default: per relation)");
  verify->add_option("--samples", va.samples, "auto or a minimum sample count");
  verify->add_option("--seed", va.seed, "Sample point seed")->capture_default_str();
  verify->add_option("--report", va.report, "Write the JSON report here");
  verify->add_flag("--quiet", va.quiet, "Suppress the text table");
  verify->add_flag("--timings", va.timings, "Record wall time per relation");
  verify->add_option("--gauge-seed", va.gauge_seed, "Conjugate by a seeded random diagonal");

  std::string show_op;
  int show_cutoff = 2, show_modes = 4;
  auto* show = app.add_subcommand("show", "Print the nonzero columns of an operator");
  show->add_option("--op", show_op, "Builtin operator name, e.g. \"L(1,2)\"")->required();
  show->add_option("--cutoff", show_cutoff, "Occupation cutoff")->capture_default_str();
  show->add_option("--modes", show_modes, "Number of modes")->capture_default_str();

  std::string expr, state;
  int eval_cutoff = 4, eval_modes = 1;
  auto* eval = app.add_subcommand("eval", "Evaluate a DSL expression");
  eval->add_option("--expr", expr, "Expression over builtin names")->required();
  eval->add_option("--cutoff", eval_cutoff, "Occupation cutoff")->capture_default_str();
  eval->add_option("--modes", eval_modes, "Number of modes")->capture_default_str();
  eval->add_option("--state", state, "Apply to the basis state n1,n2,...");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*suites) return suites_cmd();
    if (*verify) return verify_cmd(va, margin->count() > 0);
    if (*show) return eval_cmd(show_op, show_modes, show_cutoff, "");
    if (*eval) return eval_cmd(expr, eval_modes, eval_cutoff, state);
  } catch (const qfock::Error& e) {
    std::cerr << "qfock: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "qfock: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
