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

#include "triq/characterize.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "triq/format.hpp"

namespace triq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Verdict make_verdict(SetId set, const Exponent& p, const CoefficientTuple& mu, bool member,
                     std::string clause, double margin, int k, double tol) {
  Verdict v;
  v.set_id = set;
  v.p = p.p();
  v.mu = mu.mu;
  v.member = member;
  v.clause = std::move(clause);
  v.margin = margin;
  v.k_negative = k;
  v.boundary = std::isfinite(margin) && std::fabs(margin) <= tol;
  return v;
}

void check_tol(double tol) {
  if (!(tol >= 0.0)) throw std::invalid_argument("tol must be >= 0");
}

}  // namespace

Exponent::Exponent(double p) : p_(p) {
  if (!std::isfinite(p) || p <= 0.0 || p > 1e6)
    throw std::invalid_argument("exponent: p must be in (0, 1e6], got " + format_double(p));
  if (p <= 1.0) {
    regime_ = Regime::LE1;
  } else {
    if (p - 1.0 < 1e-9)
      throw std::invalid_argument("exponent: p > 1 must satisfy p - 1 >= 1e-9");
    regime_ = Regime::GT1;
  }
}

double Exponent::dual_exp() const {
  if (regime_ != Regime::GT1) throw std::logic_error("dual_exp: requires p > 1");
  return 1.0 / (p_ - 1.0);
}

CoefficientTuple::CoefficientTuple(std::vector<double> values) : mu(std::move(values)) {
  if (mu.empty()) throw std::invalid_argument("mu: need at least one entry");
  for (double m : mu) {
    if (!std::isfinite(m)) throw std::invalid_argument("mu: entries must be finite");
    if (m == 0.0) throw std::invalid_argument("mu entries must be nonzero");
  }
}

char set_letter(SetId id) {
  switch (id) {
    case SetId::F: return 'F';
    case SetId::G: return 'G';
    case SetId::H: return 'H';
  }
  return '?';
}

SetId set_from_letter(char c) {
  switch (c) {
    case 'F': return SetId::F;
    case 'G': return SetId::G;
    case 'H': return SetId::H;
    default: throw std::invalid_argument("set must be one of F, G, H");
  }
}

int count_negatives(const CoefficientTuple& mu) {
  int k = 0;
  for (double m : mu.mu)
    if (m < 0.0) ++k;
  return k;
}

Verdict decide_F(const Exponent& p, const CoefficientTuple& mu, double tol) {
  check_tol(tol);
  const int k = count_negatives(mu);
  if (k > 0) {
    // F(p; k) is empty for k >= 1: zeroing all but a negative index
    // forces ||x||^p <= ||x||^p / mu_j < 0.
    return make_verdict(SetId::F, p, mu, false, p.gt1() ? "Thm2.4(ii)" : "Thm2.5(ii)", -kInf, k,
                        tol);
  }
  if (p.gt1()) {
    double sum = 0.0;
    for (double m : mu.mu) sum += std::pow(m, p.dual_exp());
    const double margin = 1.0 - sum;
    return make_verdict(SetId::F, p, mu, margin >= -tol, "Thm2.4(i)", margin, k, tol);
  }
  double mx = 0.0;
  for (double m : mu.mu) mx = std::max(mx, m);
  const double margin = 1.0 - mx;
  return make_verdict(SetId::F, p, mu, margin >= -tol, "Thm2.5(i)", margin, k, tol);
}

Verdict decide_G(const Exponent& p, const CoefficientTuple& mu, double tol) {
  check_tol(tol);
  const int k = count_negatives(mu);
  const int n = mu.n();
  if (k <= n - 2) {
    // Two positive entries admit a cancelling pair, so the slice is empty.
    return make_verdict(SetId::G, p, mu, false, p.gt1() ? "Thm2.6(i)" : "Thm2.7(i)", -kInf, k,
                        tol);
  }
  if (k == n) {
    // All-negative: the right side is never positive.
    return make_verdict(SetId::G, p, mu, true, p.gt1() ? "Thm2.6(iii)" : "Thm2.7(iii)", kInf, k,
                        tol);
  }
  int j = -1;
  for (int i = 0; i < n; ++i)
    if (mu.mu[i] > 0.0) j = i;
  if (p.gt1()) {
    const double e = p.dual_exp();
    double rest = 0.0;
    for (int i = 0; i < n; ++i)
      if (i != j) rest += std::pow(std::fabs(mu.mu[i]), e);
    const double lead = std::pow(mu.mu[j], e);
    if (std::isinf(lead) && std::isinf(rest))
      throw std::invalid_argument("decide_G: coefficients overflow the dual power at this p");
    const double margin = lead - 1.0 - rest;
    return make_verdict(SetId::G, p, mu, margin >= -tol, "Thm2.6(ii)", margin, k, tol);
  }
  double threshold = 1.0;
  for (int i = 0; i < n; ++i)
    if (i != j) threshold = std::max(threshold, std::fabs(mu.mu[i]));
  const double margin = mu.mu[j] - threshold;
  return make_verdict(SetId::G, p, mu, margin >= -tol, "Thm2.7(ii)", margin, k, tol);
}

Verdict decide_H(const Exponent& p, const CoefficientTuple& mu, double tol) {
  check_tol(tol);
  const int k = count_negatives(mu);
  const int n = mu.n();
  const bool same_sign = (k == 0) || (k == n);
  const char* clause = p.gt1() ? "Cor2.8(i)" : "Cor2.8(ii)";
  if (!same_sign) return make_verdict(SetId::H, p, mu, false, clause, -kInf, k, tol);
  if (p.gt1()) {
    double sum = 0.0;
    for (double m : mu.mu) sum += std::pow(std::fabs(m), p.dual_exp());
    const double margin = 1.0 - sum;
    return make_verdict(SetId::H, p, mu, margin >= -tol, clause, margin, k, tol);
  }
  double mx = 0.0;
  for (double m : mu.mu) mx = std::max(mx, std::fabs(m));
  const double margin = 1.0 - mx;
  return make_verdict(SetId::H, p, mu, margin >= -tol, clause, margin, k, tol);
}

}  // namespace triq
