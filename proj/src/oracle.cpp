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

#include "triq/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "triq/format.hpp"
#include "triq/rng.hpp"

namespace triq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Substream ids, one per probe stage, so serial and parallel evaluation
// orders cannot change the draws.
enum Stream : std::uint64_t {
  kStreamRandomF = 5,
  kStreamRandomG = 7,
  kStreamVerify = 9,
};

struct GapParts {
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
};

GapParts gap_parts(const Exponent& p, const CoefficientTuple& mu, const NormTuple& nt,
                   SetId direction) {
  if (static_cast<int>(nt.s.size()) != mu.n())
    throw std::invalid_argument("gap: tuple sizes disagree");
  GapParts g;
  g.lhs = std::pow(nt.t, p.p());
  for (int i = 0; i < mu.n(); ++i) g.rhs += std::pow(nt.s[i], p.p()) / mu.mu[i];
  g.gap = direction == SetId::F ? g.rhs - g.lhs : g.lhs - g.rhs;
  return g;
}

// Anything below this is a genuine violation rather than float noise.
double violation_threshold(const GapParts& g) {
  return -1e-12 * std::max({1.0, std::fabs(g.lhs), std::fabs(g.rhs)});
}

void check_config(const SearchConfig& cfg) {
  if (cfg.budget < 1) throw std::invalid_argument("search config: budget must be >= 1");
  if (cfg.space.dim < 2)
    throw std::invalid_argument("search config: witness space needs dim >= 2");
}

NormTuple basis_tuple(int n, int i) {
  NormTuple nt;
  nt.s.assign(n, 0.0);
  nt.s[i] = 1.0;
  nt.t = 1.0;
  return nt;
}

NormTuple cancellation_tuple(int n, int i, int j) {
  NormTuple nt;
  nt.s.assign(n, 0.0);
  nt.s[i] = 1.0;
  nt.s[j] = 1.0;
  nt.t = 0.0;
  return nt;
}

// Sum of dual powers |mu_i|^(1/(p-1)) over the given indices, or nan
// when any term or the total leaves the finite range. Extreme p or mu
// can overflow these sums; degenerate probes are skipped rather than
// built from them.
double dual_power_sum(const Exponent& p, const CoefficientTuple& mu, int skip = -1) {
  const double e = p.dual_exp();
  double total = 0.0;
  for (int i = 0; i < mu.n(); ++i) {
    if (i == skip) continue;
    const double w = std::pow(std::fabs(mu.mu[i]), e);
    if (!std::isfinite(w)) return std::numeric_limits<double>::quiet_NaN();
    total += w;
  }
  return std::isfinite(total) ? total : std::numeric_limits<double>::quiet_NaN();
}

// Search state shared by the falsifiers: tracks the most violating gap
// and promotes it to a realized witness when it crosses the threshold.
class Search {
 public:
  Search(const Exponent& p, const CoefficientTuple& mu, SetId direction, const SearchConfig& cfg)
      : p_(p), mu_(mu), direction_(direction), cfg_(cfg) {
    outcome_.min_gap = kInf;
  }

  bool done() const { return outcome_.witness.has_value(); }
  long remaining() const { return cfg_.budget - outcome_.evaluations; }
  const NormTuple& best_arg() const { return outcome_.min_arg; }

  void evaluate(const NormTuple& nt, Probe probe) {
    ++outcome_.evaluations;
    const GapParts g = gap_parts(p_, mu_, nt, direction_);
    if (g.gap < outcome_.min_gap) {
      outcome_.min_gap = g.gap;
      outcome_.min_arg = nt;
      outcome_.min_probe = probe;
    }
    if (g.gap < violation_threshold(g)) promote(nt, probe);
  }

  FalsifyOutcome take() { return std::move(outcome_); }

 private:
  // Realizes nt as concrete vectors and keeps the witness only if the
  // gap recomputed from actual norms still violates.
  void promote(const NormTuple& nt, Probe probe) {
    Witness w;
    w.space = cfg_.space;
    w.probe = probe;
    w.vectors = realize_tuple(cfg_.space, nt);
    Vector total(cfg_.space.dim, 0.0);
    for (const auto& x : w.vectors) {
      w.norms.push_back(norm(cfg_.space, x));
      for (int d = 0; d < cfg_.space.dim; ++d) total[d] += x[d];
    }
    w.sum_norm = norm(cfg_.space, total);
    NormTuple actual{w.norms, w.sum_norm};
    const GapParts g = gap_parts(p_, mu_, actual, direction_);
    w.lhs = g.lhs;
    w.rhs = g.rhs;
    w.gap = g.gap;
    if (g.gap < violation_threshold(g)) outcome_.witness = std::move(w);
  }

  const Exponent& p_;
  const CoefficientTuple& mu_;
  SetId direction_;
  const SearchConfig& cfg_;
  FalsifyOutcome outcome_;
};

std::vector<double> random_simplex_point(Rng& rng, int n) {
  std::vector<double> s(n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    s[i] = -std::log(1.0 - rng.next_double());
    sum += s[i];
  }
  for (double& v : s) v /= sum;
  return s;
}

// Largest composition total whose count of `parts`-part compositions
// (entries >= low) stays within budget.
int grid_total_for_budget(long budget, int parts, int low) {
  if (parts <= 1) return std::max(low, 1);
  const int base = std::max(low * parts, parts);
  auto count = [&](int total) {
    // C(total - low*parts + parts - 1, parts - 1), computed in doubles
    double c = 1.0;
    const int m = total - low * parts;
    for (int i = 1; i <= parts - 1; ++i) c *= static_cast<double>(m + i) / i;
    return c;
  };
  int g = base;
  while (g < 100000 && count(g + 1) <= static_cast<double>(budget)) ++g;
  return g;
}

template <typename Fn>
void for_each_simplex_grid(int total, int parts, int low, Fn&& fn) {
  if (parts <= 0 || total < low * parts) return;
  std::vector<int> k(parts, low);
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == parts - 1) {
      k[pos] = rem;
      fn(k);
      return;
    }
    for (int v = low; v <= rem - low * (parts - 1 - pos); ++v) {
      k[pos] = v;
      self(self, pos + 1, rem - v);
    }
  };
  rec(rec, 0, total);
}

// Random + grid sweep over simplex-normalized member norms, optionally
// followed by two zoom rounds around the best cell. `make_tuple` fixes
// the matching t for the direction being attacked.
template <typename MakeTuple>
void sweep(Search& search, int n, Rng rng, int grid_low, bool refine, MakeTuple&& make_tuple) {
  const long budget = search.remaining();
  if (budget <= 0) return;
  const long refine_budget = refine ? budget / 5 : 0;
  const long random_budget = (budget - refine_budget) / 2;
  const long grid_budget = budget - refine_budget - random_budget;

  for (long i = 0; i < random_budget && !search.done(); ++i) {
    auto s = random_simplex_point(rng, n);
    search.evaluate(make_tuple(std::move(s)), Probe::random_search);
  }
  if (search.done()) return;

  const int g = grid_total_for_budget(grid_budget, n, grid_low);
  for_each_simplex_grid(g, n, grid_low, [&](const std::vector<int>& k) {
    if (search.done()) return;
    std::vector<double> s(n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += k[i];
    if (sum == 0.0) return;
    for (int i = 0; i < n; ++i) s[i] = k[i] / sum;
    search.evaluate(make_tuple(std::move(s)), Probe::grid);
  });
  if (search.done()) return;

  // Two rounds of 10x zoom around the incumbent; the gap is smooth away
  // from the simplex boundary, so shrinking boxes keep improving it.
  double radius = 1.0 / g;
  const long per_round = refine_budget / 2;
  for (int round = 0; round < 2 && !search.done(); ++round, radius /= 10.0) {
    const NormTuple center = search.best_arg();
    for (long i = 0; i < per_round && !search.done(); ++i) {
      std::vector<double> s(n);
      double sum = 0.0;
      for (int d = 0; d < n; ++d) {
        s[d] = std::max(0.0, center.s[d] + rng.uniform(-radius, radius));
        sum += s[d];
      }
      if (sum <= 0.0) continue;
      for (double& v : s) v /= sum;
      search.evaluate(make_tuple(std::move(s)), Probe::grid);
    }
  }
}

}  // namespace

const char* probe_name(Probe p) {
  switch (p) {
    case Probe::collinear: return "collinear";
    case Probe::basis: return "basis";
    case Probe::cancellation: return "cancellation";
    case Probe::lagrange: return "lagrange";
    case Probe::random_search: return "random";
    case Probe::grid: return "grid";
  }
  return "?";
}

double gap_F(const Exponent& p, const CoefficientTuple& mu, const NormTuple& nt) {
  return gap_parts(p, mu, nt, SetId::F).gap;
}

double gap_G(const Exponent& p, const CoefficientTuple& mu, const NormTuple& nt) {
  return gap_parts(p, mu, nt, SetId::G).gap;
}

NormTuple collinear_probe_F(const Exponent& p, const CoefficientTuple& mu) {
  if (!p.gt1()) throw std::invalid_argument("collinear probe: requires p > 1");
  const double e = p.dual_exp();
  NormTuple nt;
  nt.s.resize(mu.n());
  double total = 0.0;
  for (int i = 0; i < mu.n(); ++i) {
    if (mu.mu[i] <= 0.0) throw std::invalid_argument("collinear probe: requires mu > 0");
    nt.s[i] = std::pow(mu.mu[i], e);
    total += nt.s[i];
  }
  for (double& v : nt.s) v /= total;
  nt.t = 1.0;
  return nt;
}

NormTuple lagrange_probe_G(const Exponent& p, const CoefficientTuple& mu, int j) {
  if (!p.gt1()) throw std::invalid_argument("lagrange probe: requires p > 1");
  if (j < 0 || j >= mu.n() || mu.mu[j] <= 0.0)
    throw std::invalid_argument("lagrange probe: j must point at the positive entry");
  const double e = p.dual_exp();
  double b_sum = 0.0;
  for (int i = 0; i < mu.n(); ++i)
    if (i != j) b_sum += std::pow(std::fabs(mu.mu[i]), e);
  NormTuple nt;
  nt.s.resize(mu.n());
  for (int i = 0; i < mu.n(); ++i)
    nt.s[i] = i == j ? 1.0 : std::pow(std::fabs(mu.mu[i]), e) / (1.0 + b_sum);
  nt.t = 1.0 / (1.0 + b_sum);
  return nt;
}

FalsifyOutcome falsify_F(const Exponent& p, const CoefficientTuple& mu, const SearchConfig& cfg) {
  check_config(cfg);
  const int n = mu.n();
  Search search(p, mu, SetId::F, cfg);

  // Any negative coefficient is exposed by zeroing everything else.
  for (int i = 0; i < n && !search.done(); ++i)
    if (mu.mu[i] < 0.0) search.evaluate(basis_tuple(n, i), Probe::basis);

  const bool all_positive = count_negatives(mu) == 0;
  if (!search.done() && all_positive && p.gt1()) {
    const double total = dual_power_sum(p, mu);
    if (std::isfinite(total) && total > 0.0)
      search.evaluate(collinear_probe_F(p, mu), Probe::collinear);
  }

  for (int i = 0; i < n && !search.done(); ++i)
    if (mu.mu[i] > 0.0) search.evaluate(basis_tuple(n, i), Probe::basis);

  if (!search.done()) {
    // Aligned members maximize the left side, so t = sum s_i; the gap is
    // p-homogeneous, letting the sweep stay on the unit simplex.
    sweep(search, n, Rng(cfg.seed).substream(kStreamRandomF), 1, cfg.refine,
          [&](std::vector<double> s) {
            NormTuple nt;
            nt.t = 0.0;
            for (double v : s) nt.t += v;
            nt.s = std::move(s);
            return nt;
          });
  }
  return search.take();
}

FalsifyOutcome falsify_G(const Exponent& p, const CoefficientTuple& mu, const SearchConfig& cfg) {
  check_config(cfg);
  const int n = mu.n();
  const int k = count_negatives(mu);
  Search search(p, mu, SetId::G, cfg);

  if (k <= n - 2) {
    // Two positive entries cancel each other and leave a positive right
    // side against a zero left side.
    int j1 = -1, j2 = -1;
    for (int i = 0; i < n; ++i) {
      if (mu.mu[i] <= 0.0) continue;
      if (j1 < 0)
        j1 = i;
      else if (j2 < 0)
        j2 = i;
    }
    search.evaluate(cancellation_tuple(n, j1, j2), Probe::cancellation);
  } else if (k == n - 1) {
    int j = -1;
    for (int i = 0; i < n; ++i)
      if (mu.mu[i] > 0.0) j = i;
    bool stationary_done = false;
    if (p.gt1() && std::isfinite(dual_power_sum(p, mu, j))) {
      search.evaluate(lagrange_probe_G(p, mu, j), Probe::lagrange);
      stationary_done = true;
    }
    if (!stationary_done) {
      // p <= 1, or the stationary tuple overflowed: the basis and
      // pairwise cancellation probes settle those slices
      if (!search.done()) search.evaluate(basis_tuple(n, j), Probe::basis);
      for (int i = 0; i < n && !search.done(); ++i)
        if (i != j) search.evaluate(cancellation_tuple(n, j, i), Probe::cancellation);
    }
  }
  // k == n: the right side is never positive; nothing to probe.

  if (!search.done()) {
    // The reverse gap grows with t, so attack at the feasible minimum.
    sweep(search, n, Rng(cfg.seed).substream(kStreamRandomG), 0, cfg.refine,
          [&](std::vector<double> s) {
            NormTuple nt;
            nt.t = feasible_t_range(s).lo;
            nt.s = std::move(s);
            return nt;
          });
  }
  return search.take();
}

VerifySummary random_verify(const Exponent& p, const CoefficientTuple& mu, SetId direction,
                            const SearchConfig& cfg) {
  if (direction == SetId::H)
    throw std::invalid_argument("random_verify: direction must be F or G");
  check_config(cfg);
  const int n = mu.n();
  const int dim = cfg.space.dim;
  Rng rng = Rng(cfg.seed).substream(kStreamVerify);

  auto random_vec = [&](double scale) {
    Vector v(dim);
    for (int d = 0; d < dim; ++d) v[d] = rng.uniform(-scale, scale);
    return v;
  };

  VerifySummary out;
  out.min_gap = kInf;
  for (long i = 0; i < cfg.budget; ++i) {
    std::vector<Vector> xs(n);
    const int mode = static_cast<int>(rng.uniform_int(0, 2));
    if (mode == 0 || n == 1) {
      for (auto& x : xs) x = random_vec(1.0);
    } else if (mode == 1) {
      // all members share one direction: the collinear extremal family
      const Vector d = random_vec(1.0);
      for (auto& x : xs) {
        const double c = rng.next_double();
        x.resize(dim);
        for (int t = 0; t < dim; ++t) x[t] = c * d[t];
      }
    } else {
      // one cancelling pair, the rest small or zero
      const auto i1 = rng.uniform_int(0, n - 1);
      auto i2 = rng.uniform_int(0, n - 2);
      if (i2 >= i1) ++i2;
      const Vector v = random_vec(1.0);
      for (int m = 0; m < n; ++m) {
        if (m == i1) {
          xs[m] = v;
        } else if (m == i2) {
          xs[m].resize(dim);
          for (int t = 0; t < dim; ++t) xs[m][t] = -v[t];
        } else {
          xs[m] = rng.next_double() < 0.5 ? Vector(dim, 0.0) : random_vec(0.2);
        }
      }
    }

    NormTuple nt;
    nt.s.resize(n);
    Vector total(dim, 0.0);
    double mass = 0.0;
    for (int m = 0; m < n; ++m) {
      nt.s[m] = norm(cfg.space, xs[m]);
      mass += nt.s[m];
      for (int t = 0; t < dim; ++t) total[t] += xs[m][t];
    }
    ++out.samples;
    if (mass == 0.0) continue;
    nt.t = norm(cfg.space, total);
    const double g =
        direction == SetId::F ? gap_F(p, mu, nt) : gap_G(p, mu, nt);
    if (g < out.min_gap) {
      out.min_gap = g;
      out.argmin = nt;
    }
  }
  return out;
}

double euler_lagrange_residual(const SpaceDescriptor& space, const Vector& x, const Vector& y,
                               double a, double b, double mu, double nu) {
  if (mu == 0.0 || nu == 0.0)
    throw std::invalid_argument("euler_lagrange: mu and nu must be nonzero");
  if (x.size() != y.size())
    throw std::invalid_argument("euler_lagrange: x and y must share a dimension");
  const double lambda = mu * a * a + nu * b * b;
  if (lambda == 0.0) throw std::domain_error("euler_lagrange: lambda = mu a^2 + nu b^2 is zero");

  const int dim = static_cast<int>(x.size());
  Vector combo(dim), cross(dim);
  for (int d = 0; d < dim; ++d) {
    combo[d] = a * x[d] + b * y[d];
    cross[d] = nu * b * x[d] - mu * a * y[d];
  }
  const double nx = norm(space, x);
  const double ny = norm(space, y);
  const double nc = norm(space, combo);
  const double nk = norm(space, cross);
  const double lhs = nx * nx / mu + ny * ny / nu - nc * nc / lambda;
  const double rhs = nk * nk / (lambda * mu * nu);
  return lhs - rhs;
}

namespace {

// Draws a coefficient tuple whose binding condition straddles its
// threshold, so member and non-member cases both occur with margins
// clear of the boundary band.
CoefficientTuple draw_coefficients(Rng& rng, const Exponent& p, int n) {
  for (int attempt = 0;; ++attempt) {
    const int k = static_cast<int>(rng.uniform_int(0, n));
    std::vector<double> m(n);
    for (double& v : m) v = std::exp(rng.uniform(std::log(0.2), std::log(5.0)));
    const std::vector<double> raw(m);

    const double r = std::exp(rng.uniform(std::log(0.7), std::log(1.4)));
    if (k == 0) {
      if (p.gt1()) {
        double total = 0.0;
        for (double v : m) total += std::pow(v, p.dual_exp());
        const double scale = std::pow(r / total, p.p() - 1.0);
        for (double& v : m) v *= scale;
      } else {
        double mx = 0.0;
        for (double v : m) mx = std::max(mx, v);
        for (double& v : m) v *= r / mx;
      }
    } else if (k == n - 1) {
      // the straddle targets the single-positive reverse condition
      if (p.gt1()) {
        double b_sum = 0.0;
        for (int i = 1; i < n; ++i) b_sum += std::pow(m[i], p.dual_exp());
        m[0] = std::pow((1.0 + b_sum) * r, p.p() - 1.0);
      } else {
        double mx = 1.0;
        for (int i = 1; i < n; ++i) mx = std::max(mx, m[i]);
        m[0] = mx * r;
      }
    }
    // extreme exponents can push the straddle out of the finite range
    for (int i = 0; i < n; ++i)
      if (!std::isfinite(m[i]) || m[i] == 0.0) m[i] = raw[i];

    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    if (k != n - 1) {
      for (int i = n - 1; i > 0; --i)
        std::swap(idx[i], idx[rng.uniform_int(0, i)]);
    } else {
      // slot 0 holds the straddled positive entry; place it anywhere
      std::swap(idx[0], idx[rng.uniform_int(0, n - 1)]);
    }
    std::vector<double> mu(n);
    for (int i = 0; i < n; ++i) mu[idx[i]] = (k == n - 1 ? i > 0 : i < k) ? -m[i] : m[i];

    CoefficientTuple tuple(std::move(mu));
    const double mf = decide_F(p, tuple).margin;
    const double mg = decide_G(p, tuple).margin;
    const bool near_f = std::isfinite(mf) && std::fabs(mf) <= 1e-3;
    const bool near_g = std::isfinite(mg) && std::fabs(mg) <= 1e-3;
    if (!near_f && !near_g) return tuple;
    if (attempt > 100) {
      for (double& v : tuple.mu) v *= 1.5;
      return CoefficientTuple(tuple.mu);
    }
  }
}

}  // namespace

std::string CrosscheckReport::to_text() const {
  std::ostringstream os;
  os << "crosscheck: trials=" << trials << " seed=" << seed << " p_range=["
     << format_double(p_range.first) << "," << format_double(p_range.second) << "] n_range=["
     << n_range.first << "," << n_range.second << "]\n";
  os << "checks=" << checks << " agreements=" << agreements
     << " disagreements=" << disagreements.size() << "\n";
  os << "member_checks=" << member_checks << " worst_verify_gap=";
  if (member_checks > 0)
    os << format_double(worst_verify_gap);
  else
    os << "none";
  os << "\nnonmember_checks=" << nonmember_checks << "\n";
  os << "probe_hits:";
  if (probe_hits.empty()) {
    os << " none";
  } else {
    for (const auto& [name, hits] : probe_hits) os << " " << name << "=" << hits;
  }
  os << "\n";
  for (const auto& d : disagreements) {
    os << "disagreement: trial=" << d.trial << " set=" << set_letter(d.set)
       << " p=" << format_double(d.p) << " mu=[";
    for (std::size_t i = 0; i < d.mu.size(); ++i) {
      if (i) os << ",";
      os << format_double(d.mu[i]);
    }
    os << "] " << d.detail << "\n";
  }
  return os.str();
}

CrosscheckReport crosscheck(long trials, std::uint64_t seed, std::pair<double, double> p_range,
                            std::pair<int, int> n_range, const SearchConfig& cfg) {
  if (trials < 0) throw std::invalid_argument("crosscheck: trials must be >= 0");
  if (!(p_range.first > 0.0) || !(p_range.second >= p_range.first) || p_range.second > 1e6)
    throw std::invalid_argument("crosscheck: bad p range");
  if (n_range.first < 1 || n_range.second < n_range.first)
    throw std::invalid_argument("crosscheck: bad n range");
  check_config(cfg);

  CrosscheckReport report;
  report.trials = trials;
  report.seed = seed;
  report.p_range = p_range;
  report.n_range = n_range;
  report.worst_verify_gap = kInf;

  const Rng root(seed);
  for (long trial = 0; trial < trials; ++trial) {
    Rng rng = root.substream(static_cast<std::uint64_t>(trial));
    double p_val = rng.uniform(p_range.first, p_range.second);
    if (p_val > 1.0 && p_val - 1.0 < 1e-9) p_val = 1.0;
    const Exponent p(p_val);
    const int n = static_cast<int>(rng.uniform_int(n_range.first, n_range.second));
    const CoefficientTuple mu = draw_coefficients(rng, p, n);

    for (const SetId set : {SetId::F, SetId::G}) {
      const Verdict verdict = set == SetId::F ? decide_F(p, mu) : decide_G(p, mu);
      SearchConfig trial_cfg = cfg;
      trial_cfg.seed = mix64(seed ^ (2 * static_cast<std::uint64_t>(trial) +
                                     (set == SetId::F ? 0u : 1u)));
      const FalsifyOutcome outcome =
          set == SetId::F ? falsify_F(p, mu, trial_cfg) : falsify_G(p, mu, trial_cfg);
      ++report.checks;

      if (verdict.member) {
        ++report.member_checks;
        bool ok = true;
        if (outcome.witness) {
          ok = false;
          report.disagreements.push_back(
              {trial, set, p.p(), mu.mu,
               "member but witness found (gap=" + format_double(outcome.witness->gap) + ")"});
        }
        const VerifySummary vs = random_verify(p, mu, set, trial_cfg);
        report.worst_verify_gap = std::min(report.worst_verify_gap, vs.min_gap);
        if (vs.min_gap < -1e-9) {
          ok = false;
          report.disagreements.push_back(
              {trial, set, p.p(), mu.mu,
               "member but random_verify hit gap=" + format_double(vs.min_gap)});
        }
        if (ok) ++report.agreements;
      } else {
        ++report.nonmember_checks;
        if (outcome.witness) {
          ++report.agreements;
          ++report.probe_hits[probe_name(outcome.witness->probe)];
        } else {
          report.disagreements.push_back(
              {trial, set, p.p(), mu.mu,
               "non-member but no witness (min gap=" + format_double(outcome.min_gap) + ")"});
        }
      }
    }
  }
  return report;
}

}  // namespace triq
