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

#ifndef TRIQ_CHARACTERIZE_HPP
#define TRIQ_CHARACTERIZE_HPP

#include <string>
#include <vector>

namespace triq {

enum class Regime { GT1, LE1 };

/// Positive exponent p of the inequality, tagged with the theorem branch
/// it falls under: GT1 for p > 1, LE1 for 0 < p <= 1. Values of p in
/// (1, 1 + 1e-9) are rejected so 1/(p-1) stays representable.
class Exponent {
 public:
  explicit Exponent(double p);

  double p() const { return p_; }
  Regime regime() const { return regime_; }
  bool gt1() const { return regime_ == Regime::GT1; }

  /// 1/(p-1); only valid in the GT1 regime.
  double dual_exp() const;

 private:
  double p_;
  Regime regime_;
};

/// The coefficient tuple (mu_1..mu_n). Entries act as denominators, so
/// zeros are a hard input error rather than a verdict.
struct CoefficientTuple {
  std::vector<double> mu;

  explicit CoefficientTuple(std::vector<double> values);
  int n() const { return static_cast<int>(mu.size()); }
};

enum class SetId { F, G, H };

char set_letter(SetId id);
SetId set_from_letter(char c);

/// Decision for one (set, p, mu) query. `margin` is the signed distance
/// of the binding scalar condition from its threshold (positive inside,
/// +-infinity when no scalar condition binds), and `clause` names the
/// theorem part that settled the query.
struct Verdict {
  SetId set_id = SetId::F;
  double p = 0.0;
  std::vector<double> mu;
  bool member = false;
  std::string clause;
  double margin = 0.0;
  int k_negative = 0;
  bool boundary = false;
};

inline constexpr double kDefaultTol = 1e-12;

int count_negatives(const CoefficientTuple& mu);

/// Membership of mu in F(p): || sum x_i ||^p <= sum ||x_i||^p / mu_i for
/// all vectors. GT1: all mu_i > 0 and sum mu_i^(1/(p-1)) <= 1. LE1: all
/// mu_i in (0, 1]. Any negative entry is an empty slice.
Verdict decide_F(const Exponent& p, const CoefficientTuple& mu, double tol = kDefaultTol);

/// Membership of mu in G(p), the reversed inequality. Needs at most one
/// positive entry; with exactly one (index j), GT1 requires
/// mu_j^(1/(p-1)) >= 1 + sum_{i != j} |mu_i|^(1/(p-1)) and LE1 requires
/// mu_j >= max(1, max |mu_i|). All-negative tuples are always members.
Verdict decide_G(const Exponent& p, const CoefficientTuple& mu, double tol = kDefaultTol);

/// Membership in H(p): the inequality against |sum ||x_i||^p / mu_i|.
/// GT1: one common sign and sum |mu_i|^(1/(p-1)) <= 1. LE1: the union
/// (0,1]^n cup [-1,0)^n.
Verdict decide_H(const Exponent& p, const CoefficientTuple& mu, double tol = kDefaultTol);

}  // namespace triq

#endif  // TRIQ_CHARACTERIZE_HPP
