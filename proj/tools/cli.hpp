// Copyright 2026 The qhorn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// qhorn command-line dispatch. run() never prints; it returns the JSON
// payload for stdout and any diagnostics for stderr.

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qhorn/io.hpp"
#include "selftest.hpp"

namespace qhorn::tools {

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kSelfTestFailure = 3 };

struct CommandOutcome {
  int exit_code = kOk;
  Json payload;
  std::string diagnostics;
};

/// Missing or conflicting flags detected after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

struct Args {
  unsigned jobs = 1;
  std::string cache;

  // shared by several subcommands
  int n = 0, r = 0, s = 0;
  Int d = 0, D = 0;
  std::string subsets, points, classes;

  std::string a, b;                 // qprod
  std::string lambda, mu;           // lr
  std::optional<std::string> nu;    // lr
  std::optional<int> rows;          // lr
  std::string state_action;         // state
  std::string state_text;           // state
  int state_fields = 0;             // state: how many of n, r, d, D, subsets were given
  std::string shift_point;          // state normalize
  std::string method = "gw";        // gamma
  bool multiplicity_one = false;    // facets
  int restarts = 100, max_iters = 2000;
  double tol = 1e-6;
  std::uint64_t seed = 1;
  std::string witness_method = "lm";
  std::string level = "quick";
};

inline Json with_schema(Json j) {
  j["schema_version"] = kSchemaVersion;
  return j;
}

inline std::optional<std::string> cache_dir(const Args& args) {
  if (!args.cache.empty()) return args.cache;
  if (const char* env = std::getenv("QHORN_CACHE_DIR"); env && *env) return std::string(env);
  return std::nullopt;
}

class CacheSession {
 public:
  CacheSession(const Args& args, std::ostream& diag) : dir_(cache_dir(args)) {
    if (dir_) load_btable_cache(*dir_, &diag);
  }
  void save() {
    if (dir_) save_btable_cache(*dir_);
  }

 private:
  std::optional<std::string> dir_;
};

inline SchubertState make_state(const Args& args) {
  if (!args.state_text.empty()) {
    if (args.state_fields) throw UsageError("give either --state or the individual state fields, not both");
    const SchubertState st = parse_state(args.state_text);
    std::vector<std::string> labels;
    if (!args.points.empty()) labels = split(args.points, ';');
    return SchubertState(st.d(), st.r(), st.D(), st.n(), st.subsets(), std::move(labels));
  }
  if (args.state_fields != 5) throw UsageError("state needs --state or all of --n --r --d --D --subsets");
  auto subsets = parse_subsets(args.subsets, args.n);
  std::vector<std::string> labels;
  if (!args.points.empty()) labels = split(args.points, ';');
  return SchubertState(args.d, args.r, args.D, args.n, std::move(subsets), std::move(labels));
}

inline ClassTuple checked_classes(const Args& args) {
  ClassTuple t = parse_classes(args.classes);
  if (args.n != 0 && t.n() != args.n)
    throw DomainError("classes have rank " + std::to_string(t.n()) + " but --n is " + std::to_string(args.n));
  if (args.s != 0 && t.s() != args.s)
    throw DomainError("got " + std::to_string(t.s()) + " classes but --s is " + std::to_string(args.s));
  return t;
}

inline Json cmd_gw(const Args& args) {
  const auto subsets = parse_subsets(args.subsets, args.n);
  return {{"value", gw_number(args.r, args.n, args.d, subsets)}};
}

inline Json cmd_qprod(const Args& args) {
  return to_json(quantum_product(args.r, args.n, parse_partition(args.a), parse_partition(args.b)));
}

inline Json cmd_lr(const Args& args) {
  const Partition lambda = parse_partition(args.lambda), mu = parse_partition(args.mu);
  if (args.nu) return {{"value", lr_coefficient(lambda, mu, parse_partition(*args.nu))}};
  if (args.rows && *args.rows < 0) throw DomainError("--rows must be nonnegative");
  return to_json(schur_multiply(lambda, mu, args.rows));
}

inline Json cmd_state(const Args& args) {
  const SchubertState st = make_state(args);
  if (args.state_action == "dim") return {{"dim", state_dim(st)}};
  if (args.state_action == "nonnull") return {{"nonnull", is_nonnull(st)}};
  if (args.state_action == "value") return {{"value", gen_gw(st)}};
  const std::size_t p = args.shift_point.empty() ? 0 : st.point_index(args.shift_point);
  return {{"state", to_json(normalize(st, p))}};
}

inline CommandOutcome cmd_gamma(const Args& args, std::ostream& diag) {
  const ClassTuple t = checked_classes(args);
  CacheSession cache(args, diag);
  CommandOutcome out;
  if (args.method == "gw") {
    out.payload = {{"member", gamma_member_gw(t, args.jobs)}};
  } else if (args.method == "recursive") {
    out.payload = {{"member", gamma_member_recursive(t)}};
  } else {
    const bool by_gw = gamma_member_gw(t, args.jobs);
    const bool by_rec = gamma_member_recursive(t);
    out.payload = {{"member", by_gw}, {"methods_agree", by_gw == by_rec}};
    if (by_gw != by_rec) {
      out.payload["member_gw"] = by_gw;
      out.payload["member_recursive"] = by_rec;
      out.exit_code = kSelfTestFailure;
      diag << "error: membership methods disagree\n";
    }
  }
  cache.save();
  return out;
}

inline Json cmd_facets(const Args& args) {
  if (args.n < 2 || args.s < 2) throw DomainError("facets needs --n >= 2 and --s >= 2");
  const auto list = facet_list(args.n, args.s, args.multiplicity_one, args.jobs);
  Json ineqs = Json::array();
  for (const auto& h : *list) ineqs.push_back(to_json(h));
  return {{"n", args.n}, {"s", args.s}, {"count", list->size()}, {"inequalities", std::move(ineqs)}};
}

inline Json cmd_witness(const Args& args) {
  const ClassTuple t = checked_classes(args);
  WitnessOptions opt;
  opt.restarts = args.restarts;
  opt.max_iters = args.max_iters;
  opt.tol = args.tol;
  opt.seed = args.seed;
  opt.jobs = args.jobs;
  opt.method = args.witness_method == "gd" ? WitnessMethod::gradient_descent : WitnessMethod::levenberg_marquardt;
  const WitnessResult w = realize(t, opt);
  Json j = to_json(w);
  j["certified"] = local_monodromy_check(w, t, args.tol);
  return j;
}

inline CommandOutcome cmd_selftest(const Args& args, std::ostream& diag) {
  CacheSession cache(args, diag);
  const auto level = args.level == "full" ? SelfTestLevel::full : SelfTestLevel::quick;
  const auto checks = run_selftest(level, args.jobs);
  cache.save();
  CommandOutcome out;
  Json list = Json::array();
  bool all = true;
  for (const auto& c : checks) {
    list.push_back({{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}});
    all = all && c.passed;
    if (!c.passed) diag << "selftest: " << c.name << " FAILED\n";
  }
  out.payload = {{"level", args.level}, {"passed", all}, {"checks", std::move(list)}};
  out.exit_code = all ? kOk : kSelfTestFailure;
  return out;
}

}  // namespace detail

/// Parses argv (without the program name) and executes one subcommand.
inline CommandOutcome run(const std::vector<std::string>& argv) {
  detail::Args args;
  CLI::App app{"Quantum Schubert calculus and multiplicative Horn inequalities", "qhorn"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--jobs", args.jobs, "Worker threads for enumeration and restarts")->check(CLI::Range(1u, 1024u));
  app.add_option("--cache", args.cache, "Directory for persisted B-tables (default: $QHORN_CACHE_DIR)");

  auto add_grassmannian = [&](CLI::App* sub) {
    sub->add_option("--n", args.n, "Ambient rank n")->required();
    sub->add_option("--r", args.r, "Subspace rank r")->required();
  };

  auto* gw = app.add_subcommand("gw", "Gromov-Witten number of Schubert classes");
  add_grassmannian(gw);
  gw->add_option("--d", args.d, "Degree")->required();
  gw->add_option("--subsets", args.subsets, "Subsets, e.g. \"1,3;2,4;1,2\"")->required();

  auto* qprod = app.add_subcommand("qprod", "Quantum product of two Schubert classes");
  add_grassmannian(qprod);
  qprod->add_option("--a", args.a, "First partition, e.g. \"2,1\"")->required();
  qprod->add_option("--b", args.b, "Second partition")->required();

  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient or Schur product");
  lr->add_option("--lambda", args.lambda, "Partition lambda")->required();
  lr->add_option("--mu", args.mu, "Partition mu")->required();
  lr->add_option("--nu", args.nu, "Partition nu; omit for the full expansion");
  lr->add_option("--rows", args.rows, "Keep only terms with at most this many rows");

  auto* state = app.add_subcommand("state", "Schubert state operations");
  state->add_option("action", args.state_action, "dim | nonnull | normalize | value")
      ->required()
      ->check(CLI::IsMember({"dim", "nonnull", "normalize", "value"}));
  state->add_option("--state", args.state_text, "Whole state, e.g. \"d=1,r=2,D=0,n=4;I=1,2|1,3|2,4\"");
  std::vector<CLI::Option*> state_opts = {
      state->add_option("--n", args.n, "Ambient rank n"),
      state->add_option("--r", args.r, "Subspace rank r"),
      state->add_option("--d", args.d, "Subbundle degree d"),
      state->add_option("--D", args.D, "Ambient degree D"),
      state->add_option("--subsets", args.subsets, "One subset per marked point"),
  };
  state->add_option("--points", args.points, "Marked point labels, e.g. \"p;q;x\"");
  state->add_option("--shift-point", args.shift_point, "Label of the point to shift at when normalizing");

  auto* gamma = app.add_subcommand("gamma", "Membership in the multiplicative eigenvalue polytope");
  gamma->add_option("--n", args.n, "Rank (checked against the classes)");
  gamma->add_option("--s", args.s, "Number of classes (checked against the classes)");
  gamma->add_option("--classes", args.classes, "Classes, e.g. \"1/4,-1/4;1/4,-1/4;0,0\"")->required();
  gamma->add_option("--method", args.method, "gw | recursive | both")
      ->check(CLI::IsMember({"gw", "recursive", "both"}));

  auto* facets = app.add_subcommand("facets", "Inequalities indexed by nonzero GW numbers");
  facets->add_option("--n", args.n, "Rank")->required();
  facets->add_option("--s", args.s, "Number of classes")->required();
  facets->add_flag("--multiplicity-one", args.multiplicity_one, "Only inequalities with GW number 1");

  auto* witness = app.add_subcommand("witness", "Search for unitaries with the given spectra and product I");
  witness->add_option("--n", args.n, "Rank (checked against the classes)");
  witness->add_option("--s", args.s, "Number of classes (checked against the classes)");
  witness->add_option("--classes", args.classes, "Classes")->required();
  witness->add_option("--restarts", args.restarts, "Random restarts")->check(CLI::PositiveNumber);
  witness->add_option("--max-iters", args.max_iters, "Iterations per restart")->check(CLI::PositiveNumber);
  witness->add_option("--tol", args.tol, "Residual tolerance")->check(CLI::PositiveNumber);
  witness->add_option("--seed", args.seed, "Random seed");
  witness->add_option("--method", args.witness_method, "lm | gd")->check(CLI::IsMember({"lm", "gd"}));

  auto* selftest = app.add_subcommand("selftest", "Run the built-in consistency checks");
  selftest->add_option("--level", args.level, "quick | full")->check(CLI::IsMember({"quick", "full"}));

  CommandOutcome out;
  std::ostringstream diag;
  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out.payload = detail::with_schema({{"help", app.help()}});
    return out;
  } catch (const CLI::CallForAllHelp&) {
    out.payload = detail::with_schema({{"help", app.help("", CLI::AppFormatMode::All)}});
    return out;
  } catch (const CLI::ParseError& e) {
    out.exit_code = kUsage;
    out.payload = detail::with_schema({{"error", e.what()}, {"kind", "usage"}});
    out.diagnostics = std::string("usage error: ") + e.what() + "\n";
    return out;
  }

  try {
    if (gw->parsed()) {
      out.payload = detail::cmd_gw(args);
    } else if (qprod->parsed()) {
      out.payload = detail::cmd_qprod(args);
    } else if (lr->parsed()) {
      out.payload = detail::cmd_lr(args);
    } else if (state->parsed()) {
      for (auto* opt : state_opts) args.state_fields += opt->count() > 0 ? 1 : 0;
      out.payload = detail::cmd_state(args);
    } else if (gamma->parsed()) {
      out = detail::cmd_gamma(args, diag);
    } else if (facets->parsed()) {
      out.payload = detail::cmd_facets(args);
    } else if (witness->parsed()) {
      out.payload = detail::cmd_witness(args);
    } else if (selftest->parsed()) {
      out = detail::cmd_selftest(args, diag);
    }
  } catch (const UsageError& e) {
    out.exit_code = kUsage;
    out.payload = {{"error", e.what()}, {"kind", "usage"}};
    diag << "usage error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {  // DomainError, PreconditionError
    out.exit_code = kDomain;
    out.payload = {{"error", e.what()}, {"kind", "domain"}};
    diag << "error: " << e.what() << "\n";
  } catch (const NumericalError& e) {
    out.exit_code = kDomain;
    out.payload = {{"error", e.what()}, {"kind", "numerical"}};
    diag << "error: " << e.what() << "\n";
  } catch (const InternalError& e) {
    out.exit_code = kSelfTestFailure;
    out.payload = {{"error", e.what()}, {"kind", "internal"}};
    diag << "internal error: " << e.what() << "\n";
  }
  out.payload = detail::with_schema(std::move(out.payload));
  out.diagnostics += diag.str();
  return out;
}

}  // namespace qhorn::tools
