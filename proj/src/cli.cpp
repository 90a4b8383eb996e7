// Copyright 2026 the triq authors
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

#include "triq/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "triq/characterize.hpp"
#include "triq/envelope.hpp"
#include "triq/format.hpp"
#include "triq/json_io.hpp"
#include "triq/oracle.hpp"
#include "triq/spaces.hpp"

namespace triq {

namespace {

std::vector<double> parse_double_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    if (item.empty())
      throw std::invalid_argument(std::string(what) + ": empty entry in '" + text + "'");
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (end != item.c_str() + item.size())
      throw std::invalid_argument(std::string(what) + ": bad number '" + item + "'");
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

std::pair<double, double> parse_range(const std::string& text, const char* what) {
  const auto vals = parse_double_list(text, what);
  if (vals.size() != 2)
    throw std::invalid_argument(std::string(what) + ": expected two comma-separated values");
  return {vals[0], vals[1]};
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("TRIQ_SEED")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (*env == '\0' || *end != '\0')
      throw std::invalid_argument("TRIQ_SEED must be an unsigned integer");
    return v;
  }
  return 0;
}

std::string margin_text(double margin) {
  if (std::isinf(margin)) return margin > 0 ? "+inf" : "-inf";
  return format_double(margin);
}

std::string clause_condition(const Verdict& v) {
  std::ostringstream os;
  const auto bound_value = [&] { return format_double(1.0 - v.margin); };
  const char* rel = v.member ? " <= 1" : " > 1";
  if (v.clause == "Thm2.4(i)") {
    os << "sum mu^(1/(p-1)) = " << bound_value() << rel;
  } else if (v.clause == "Thm2.5(i)") {
    os << "max mu = " << bound_value() << rel;
  } else if (v.clause == "Thm2.4(ii)" || v.clause == "Thm2.5(ii)") {
    os << v.k_negative << " negative entries, a basis probe breaks the forward inequality";
  } else if (v.clause == "Thm2.6(i)" || v.clause == "Thm2.7(i)") {
    os << "two or more positive entries admit a cancelling pair";
  } else if (v.clause == "Thm2.6(ii)") {
    os << "mu_j^(1/(p-1)) - (1 + sum |mu_i|^(1/(p-1))) = " << format_double(v.margin);
  } else if (v.clause == "Thm2.7(ii)") {
    os << "mu_j - max{1, |mu_i|} = " << format_double(v.margin);
  } else if (v.clause == "Thm2.6(iii)" || v.clause == "Thm2.7(iii)") {
    os << "all entries negative, right side never positive";
  } else if (v.clause == "Cor2.8(i)") {
    if (v.k_negative > 0 && v.k_negative < static_cast<int>(v.mu.size()))
      os << "entries change sign";
    else
      os << "one sign, sum |mu|^(1/(p-1)) = " << bound_value() << rel;
  } else if (v.clause == "Cor2.8(ii)") {
    if (v.k_negative > 0 && v.k_negative < static_cast<int>(v.mu.size()))
      os << "entries change sign";
    else
      os << "one sign, max |mu| = " << bound_value() << rel;
  }
  return os.str();
}

std::string verdict_human(const Verdict& v) {
  std::ostringstream os;
  os << (v.member ? "member of " : "not a member of ") << set_letter(v.set_id) << "("
     << format_double(v.p) << ") by " << v.clause << ": " << clause_condition(v) << " (margin "
     << margin_text(v.margin) << (v.boundary ? ", boundary)" : ")");
  return os.str();
}

std::string witness_human(const Witness& w) {
  std::ostringstream os;
  os << "witness found (probe " << probe_name(w.probe) << ", space " << w.space.to_string()
     << ")\n";
  for (std::size_t i = 0; i < w.vectors.size(); ++i) {
    os << "  x" << i + 1 << " = [";
    for (std::size_t d = 0; d < w.vectors[i].size(); ++d) {
      if (d) os << ", ";
      os << format_double(w.vectors[i][d]);
    }
    os << "]  norm " << format_double(w.norms[i]) << "\n";
  }
  os << "  sum_norm = " << format_double(w.sum_norm) << "\n";
  os << "  lhs = " << format_double(w.lhs) << "  rhs = " << format_double(w.rhs) << "  gap = "
     << format_double(w.gap) << "\n";
  return os.str();
}

struct DecideArgs {
  std::string set;
  double p = 0.0;
  std::string mu;
  double tol = kDefaultTol;
  bool json = false;
};

struct FalsifyArgs {
  std::string set;
  double p = 0.0;
  std::string mu;
  std::string space = "lq:2:2";
  long budget = 4000;
  std::optional<std::uint64_t> seed;
  double tol = kDefaultTol;
  bool json = false;
};

struct EnvelopeArgs {
  double p = 0.0;
  int n = 0;
  int grid = 0;
  std::string out_path;
};

struct CrosscheckArgs {
  long trials = 0;
  std::optional<std::uint64_t> seed;
  std::string p_range = "1.1,4";
  std::string n_range = "2,5";
  long budget = 2000;
  std::string space = "lq:2:2";
};

int run_decide(const DecideArgs& a, std::ostream& out) {
  const Exponent p(a.p);
  const CoefficientTuple mu(parse_double_list(a.mu, "mu"));
  const SetId set = set_from_letter(a.set.size() == 1 ? a.set[0] : '?');
  Verdict v;
  switch (set) {
    case SetId::F: v = decide_F(p, mu, a.tol); break;
    case SetId::G: v = decide_G(p, mu, a.tol); break;
    case SetId::H: v = decide_H(p, mu, a.tol); break;
  }
  out << (a.json ? verdict_to_json(v) : verdict_human(v)) << "\n";
  return 0;
}

int run_falsify(const FalsifyArgs& a, std::ostream& out, std::ostream& err) {
  const Exponent p(a.p);
  const CoefficientTuple mu(parse_double_list(a.mu, "mu"));
  const SetId set = set_from_letter(a.set.size() == 1 ? a.set[0] : '?');
  if (set == SetId::H) throw std::invalid_argument("falsify: set must be F or G");

  SearchConfig cfg;
  cfg.space = SpaceDescriptor::parse(a.space);
  cfg.budget = a.budget;
  cfg.seed = resolve_seed(a.seed);

  const Verdict verdict = set == SetId::F ? decide_F(p, mu, a.tol) : decide_G(p, mu, a.tol);
  const FalsifyOutcome outcome = set == SetId::F ? falsify_F(p, mu, cfg) : falsify_G(p, mu, cfg);

  if (outcome.witness) {
    out << (a.json ? witness_to_json(*outcome.witness) + "\n"
                   : witness_human(*outcome.witness));
  } else if (a.json) {
    out << "{\"witness\":null,\"min_gap\":" << format_double(outcome.min_gap)
        << ",\"evaluations\":" << outcome.evaluations << "}\n";
  } else {
    out << "no witness found (min gap = " << format_double(outcome.min_gap) << ")\n";
  }

  if (verdict.member == !outcome.witness.has_value()) return 0;
  err << "internal inconsistency: decide reports " << (verdict.member ? "member" : "non-member")
      << " but falsify " << (outcome.witness ? "found a witness" : "found none") << "\n";
  return 3;
}

int run_envelope(const EnvelopeArgs& a, std::ostream& out, std::ostream& err) {
  const Exponent p(a.p);
  const auto rows = sample_envelope(p, a.n, a.grid);
  if (a.out_path.empty()) {
    write_envelope_csv(out, rows, a.n);
    return 0;
  }
  std::ofstream file(a.out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << a.out_path << "' for writing\n";
    return 2;
  }
  write_envelope_csv(file, rows, a.n);
  return file.good() ? 0 : 2;
}

int run_crosscheck(const CrosscheckArgs& a, std::ostream& out) {
  const auto p_range = parse_range(a.p_range, "p-range");
  const auto n_range_d = parse_range(a.n_range, "n-range");
  const int n_lo = static_cast<int>(n_range_d.first);
  const int n_hi = static_cast<int>(n_range_d.second);

  SearchConfig cfg;
  cfg.space = SpaceDescriptor::parse(a.space);
  cfg.budget = a.budget;

  const auto report = crosscheck(a.trials, resolve_seed(a.seed), p_range, {n_lo, n_hi}, cfg);
  out << report.to_text();
  return report.clean() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"numerical verifier for generalized triangle inequalities in lq spaces"};
  app.name("triq");
  app.require_subcommand(1);

  DecideArgs dec;
  auto* decide_cmd = app.add_subcommand("decide", "closed-form membership verdict for F/G/H");
  decide_cmd->add_option("--set", dec.set, "coefficient set: F, G or H")->required();
  decide_cmd->add_option("--p", dec.p, "exponent p > 0")->required();
  decide_cmd->add_option("--mu", dec.mu, "comma-separated coefficients")->required();
  decide_cmd->add_option("--tol", dec.tol, "boundary tolerance on the margin");
  decide_cmd->add_flag("--json", dec.json, "machine-readable output");

  FalsifyArgs fal;
  auto* falsify_cmd = app.add_subcommand("falsify", "search for a violating witness");
  falsify_cmd->add_option("--set", fal.set, "coefficient set: F or G")->required();
  falsify_cmd->add_option("--p", fal.p, "exponent p > 0")->required();
  falsify_cmd->add_option("--mu", fal.mu, "comma-separated coefficients")->required();
  falsify_cmd->add_option("--space", fal.space, "witness space, lq:<q>:<dim>");
  falsify_cmd->add_option("--budget", fal.budget, "max probe evaluations");
  falsify_cmd->add_option("--seed", fal.seed, "search seed (default: TRIQ_SEED or 0)");
  falsify_cmd->add_option("--tol", fal.tol, "boundary tolerance for the verdict");
  falsify_cmd->add_flag("--json", fal.json, "machine-readable output");

  EnvelopeArgs env;
  auto* envelope_cmd = app.add_subcommand("envelope", "export the h_p surface as CSV");
  envelope_cmd->add_option("--p", env.p, "exponent p > 1")->required();
  envelope_cmd->add_option("--n", env.n, "ambient tuple length, >= 2")->required();
  envelope_cmd->add_option("--grid", env.grid, "barycentric subdivisions, >= 2")->required();
  envelope_cmd->add_option("--out", env.out_path, "output file (default: stdout)");

  CrosscheckArgs cros;
  auto* crosscheck_cmd =
      app.add_subcommand("crosscheck", "theorem-vs-oracle agreement harness");
  crosscheck_cmd->add_option("--trials", cros.trials, "number of random (p, mu) draws")
      ->required();
  crosscheck_cmd->add_option("--seed", cros.seed, "harness seed (default: TRIQ_SEED or 0)");
  crosscheck_cmd->add_option("--p-range", cros.p_range, "exponent range a,b");
  crosscheck_cmd->add_option("--n-range", cros.n_range, "tuple length range a,b");
  crosscheck_cmd->add_option("--budget", cros.budget, "per-check search budget");
  crosscheck_cmd->add_option("--space", cros.space, "witness space, lq:<q>:<dim>");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("triq");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (decide_cmd->parsed()) return run_decide(dec, out);
    if (falsify_cmd->parsed()) return run_falsify(fal, out, err);
    if (envelope_cmd->parsed()) return run_envelope(env, out, err);
    if (crosscheck_cmd->parsed()) return run_crosscheck(cros, out);
    return 2;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace triq
