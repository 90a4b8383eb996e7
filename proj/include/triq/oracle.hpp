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

#ifndef TRIQ_ORACLE_HPP
#define TRIQ_ORACLE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "triq/characterize.hpp"
#include "triq/spaces.hpp"

namespace triq {

enum class Probe { collinear, basis, cancellation, lagrange, random_search, grid };

const char* probe_name(Probe p);

/// Concrete vectors demonstrating a violation (or tightness) of the
/// inequality for a given (p, mu). `gap` is direction-signed: rhs - lhs
/// for the F direction, lhs - rhs for G, so gap < 0 certifies violation
/// either way. lhs is ||sum x_i||^p and rhs is sum ||x_i||^p / mu_i.
struct Witness {
  SpaceDescriptor space{2.0, 2};
  std::vector<Vector> vectors;
  std::vector<double> norms;
  double sum_norm = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  Probe probe = Probe::random_search;
};

struct SearchConfig {
  long budget = 4000;
  std::uint64_t seed = 0;
  SpaceDescriptor space{2.0, 2};
  bool refine = true;
};

/// Signed slack of the forward inequality at a norm tuple:
/// sum s_i^p / mu_i - t^p. Negative values violate the F direction.
double gap_F(const Exponent& p, const CoefficientTuple& mu, const NormTuple& nt);

/// Signed slack of the reversed inequality: t^p - sum s_i^p / mu_i.
double gap_G(const Exponent& p, const CoefficientTuple& mu, const NormTuple& nt);

/// Collinear configuration s_i = mu_i^(1/(p-1)) / M, t = 1 (p > 1,
/// all mu positive). This is the exact simplex minimizer of gap_F; its
/// value is M^(1-p) - 1 with M = sum mu_i^(1/(p-1)).
NormTuple collinear_probe_F(const Exponent& p, const CoefficientTuple& mu);

/// Stationary cancellation configuration for the reverse direction with
/// the single positive entry at index j: s_j = 1,
/// s_i = |mu_i|^(1/(p-1)) / (1+B), t = 1/(1+B). Its gap is
/// (1+B)^(1-p) - 1/mu_j, negative exactly when membership fails.
NormTuple lagrange_probe_G(const Exponent& p, const CoefficientTuple& mu, int j);

struct FalsifyOutcome {
  std::optional<Witness> witness;
  double min_gap = 0.0;      // most violating gap seen across all probes
  NormTuple min_arg;         // norm tuple achieving min_gap
  Probe min_probe = Probe::random_search;
  long evaluations = 0;
};

/// Searches for a violation of the forward inequality. Closed-form
/// probes (basis, collinear) run first and are decisive for every
/// off-boundary non-member; the seeded random + grid search spends the
/// remaining budget as an independent cross-check.
FalsifyOutcome falsify_F(const Exponent& p, const CoefficientTuple& mu, const SearchConfig& cfg);

/// Same for the reversed inequality, with cancellation, basis and
/// stationary probes.
FalsifyOutcome falsify_G(const Exponent& p, const CoefficientTuple& mu, const SearchConfig& cfg);

struct VerifySummary {
  double min_gap = 0.0;
  long samples = 0;
  NormTuple argmin;
};

/// Monte-Carlo sweep over random vector tuples in cfg.space: independent
/// draws mixed with all-aligned and pairwise-cancelling configurations.
/// Returns the minimum direction-signed gap; evidence, never proof.
VerifySummary random_verify(const Exponent& p, const CoefficientTuple& mu, SetId direction,
                            const SearchConfig& cfg);

/// LHS - RHS of the Euler-Lagrange identity
///   ||x||^2/mu + ||y||^2/nu - ||ax+by||^2/lambda = ||nu b x - mu a y||^2/(lambda mu nu)
/// with lambda = mu a^2 + nu b^2. Vanishes in Euclidean space; other
/// norms expose a nonzero residual.
double euler_lagrange_residual(const SpaceDescriptor& space, const Vector& x, const Vector& y,
                               double a, double b, double mu, double nu);

struct Disagreement {
  long trial = 0;
  SetId set = SetId::F;
  double p = 0.0;
  std::vector<double> mu;
  std::string detail;
};

struct CrosscheckReport {
  long trials = 0;
  std::uint64_t seed = 0;
  std::pair<double, double> p_range{0.0, 0.0};
  std::pair<int, int> n_range{0, 0};
  long checks = 0;
  long agreements = 0;
  std::vector<Disagreement> disagreements;
  std::map<std::string, long> probe_hits;
  long member_checks = 0;
  long nonmember_checks = 0;
  double worst_verify_gap = 0.0;  // minimum random_verify gap among members

  bool clean() const { return disagreements.empty(); }
  std::string to_text() const;
};

/// Theorem-vs-oracle agreement harness: draws (p, mu) pairs with margins
/// bounded away from the decision boundary, then requires every member
/// to survive falsification and Monte-Carlo sweep, and every non-member
/// to produce a witness.
CrosscheckReport crosscheck(long trials, std::uint64_t seed, std::pair<double, double> p_range,
                            std::pair<int, int> n_range, const SearchConfig& cfg);

}  // namespace triq

#endif  // TRIQ_ORACLE_HPP
