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

#include "triq/envelope.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "triq/format.hpp"

namespace triq {

namespace {

void require_gt1(const Exponent& p, const char* who) {
  if (!p.gt1()) throw std::invalid_argument(std::string(who) + ": requires p > 1");
}

// Enumerates compositions of `total` into `parts` pieces, each >= low,
// lexicographic ascending, invoking fn on each.
template <typename Fn>
void for_each_composition(int total, int parts, int low, Fn&& fn) {
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

}  // namespace

SimplexPoint::SimplexPoint(std::vector<double> coords) : s(std::move(coords)) {
  if (s.empty()) throw std::invalid_argument("simplex point: empty");
  double sum = 0.0;
  for (double v : s) {
    if (!std::isfinite(v) || v < 0.0)
      throw std::invalid_argument("simplex point: coordinates must be finite and >= 0");
    sum += v;
  }
  if (std::fabs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("simplex point: coordinates must sum to 1, got " +
                                format_double(sum));
}

bool SimplexPoint::interior() const {
  for (double v : s)
    if (v <= 0.0) return false;
  return true;
}

EnvelopePoint::EnvelopePoint(std::vector<double> coords) : a(std::move(coords)) {
  if (a.empty()) throw std::invalid_argument("envelope point: empty");
  for (double v : a)
    if (!std::isfinite(v) || v <= 0.0)
      throw std::invalid_argument("envelope point: coordinates must be positive");
}

OmegaSampleSet::OmegaSampleSet(std::vector<std::vector<double>> pts) {
  for (auto& p : pts) add(std::move(p));
}

void OmegaSampleSet::add(std::vector<double> pt) {
  if (pt.empty()) throw std::invalid_argument("omega sample: empty tuple");
  double sum = 0.0;
  for (double v : pt) {
    if (!std::isfinite(v) || v < 0.0)
      throw std::invalid_argument("omega sample: coordinates must be finite and >= 0");
    sum += v;
  }
  if (sum < 1.0 - 1e-12)
    throw std::invalid_argument("omega sample: coordinate sum must be >= 1, got " +
                                format_double(sum));
  samples.push_back(std::move(pt));
}

double h_p(const Exponent& p, std::span<const double> a_head) {
  require_gt1(p, "h_p");
  if (a_head.empty()) throw std::invalid_argument("h_p: need at least one coordinate");
  const double e = -1.0 / (p.p() - 1.0);  // 1/(1-p)
  double sum = 0.0;
  for (double a : a_head) {
    if (!std::isfinite(a) || a <= 0.0)
      throw std::invalid_argument("h_p: coordinates must be positive");
    sum += std::pow(a, e);
  }
  if (sum >= 1.0 - 1e-12)
    throw std::domain_error("h_p: sum a_i^(1/(1-p)) = " + format_double(sum) +
                            " is not strictly below 1");
  return std::pow(1.0 - sum, -(p.p() - 1.0));
}

EnvelopePoint envelope_point(const Exponent& p, const SimplexPoint& s) {
  require_gt1(p, "envelope_point");
  if (!s.interior())
    throw std::invalid_argument("envelope_point: simplex point must be interior");
  std::vector<double> a(s.n());
  for (int i = 0; i < s.n(); ++i) a[i] = std::pow(s.s[i], 1.0 - p.p());
  return EnvelopePoint(std::move(a));
}

Residual envelope_residual(const Exponent& p, const EnvelopePoint& a, const SimplexPoint& s) {
  require_gt1(p, "envelope_residual");
  if (a.n() != s.n())
    throw std::invalid_argument("envelope_residual: dimension mismatch");
  if (!s.interior())
    throw std::invalid_argument("envelope_residual: simplex point must be interior");
  const int n = s.n();
  const double pp = p.p();
  Residual r;
  r.value = -1.0;
  for (int i = 0; i < n; ++i) r.value += a.a[i] * std::pow(s.s[i], pp);
  r.grad.resize(n - 1);
  const double last = a.a[n - 1] * std::pow(s.s[n - 1], pp - 1.0);
  for (int i = 0; i + 1 < n; ++i)
    r.grad[i] = pp * (a.a[i] * std::pow(s.s[i], pp - 1.0) - last);
  return r;
}

DpResult in_Dp(const Exponent& p, std::span<const double> a, const OmegaSampleSet& omega,
               double tol) {
  if (omega.samples.empty()) throw std::invalid_argument("in_Dp: empty sample set");
  if (!(tol >= 0.0)) throw std::invalid_argument("in_Dp: tol must be >= 0");
  for (double v : a)
    if (!std::isfinite(v) || v < 0.0)
      throw std::invalid_argument("in_Dp: coefficients must be finite and >= 0");
  const double pp = p.p();
  DpResult res;
  res.worst_value = std::numeric_limits<double>::infinity();
  for (const auto& sample : omega.samples) {
    if (sample.size() != a.size())
      throw std::invalid_argument("in_Dp: sample dimension mismatch");
    double v = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) v += a[i] * std::pow(sample[i], pp);
    if (v < res.worst_value) {
      res.worst_value = v;
      res.worst_sample = sample;
    }
  }
  res.inside = res.worst_value >= 1.0 - tol;
  return res;
}

std::vector<std::vector<double>> sample_envelope(const Exponent& p, int n, int grid) {
  require_gt1(p, "sample_envelope");
  if (n < 2) throw std::invalid_argument("sample_envelope: n must be >= 2");
  if (grid < 2) throw std::invalid_argument("sample_envelope: grid must be >= 2");
  std::vector<std::vector<double>> rows;
  for_each_composition(grid, n, 1, [&](const std::vector<int>& k) {
    std::vector<double> s(n);
    for (int i = 0; i < n; ++i) s[i] = static_cast<double>(k[i]) / grid;
    const EnvelopePoint a = envelope_point(p, SimplexPoint(s));
    std::vector<double> row(a.a.begin(), a.a.end() - 1);
    row.push_back(h_p(p, std::span<const double>(row.data(), row.size())));
    rows.push_back(std::move(row));
  });
  return rows;
}

void write_envelope_csv(std::ostream& out, const std::vector<std::vector<double>>& rows, int n) {
  for (int i = 1; i < n; ++i) out << "a" << i << ",";
  out << "h_p\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ",";
      out << format_double_12(row[i]);
    }
    out << "\n";
  }
}

OmegaSampleSet simplex_offset_grid(int n, int grid) {
  if (n < 1 || grid < 1) throw std::invalid_argument("simplex_offset_grid: bad arguments");
  OmegaSampleSet omega;
  const double denom = grid + 0.5 * n;
  for_each_composition(grid, n, 0, [&](const std::vector<int>& k) {
    std::vector<double> s(n);
    for (int i = 0; i < n; ++i) s[i] = (k[i] + 0.5) / denom;
    omega.add(std::move(s));
  });
  return omega;
}

void add_standard_basis(OmegaSampleSet& omega, int n) {
  for (int i = 0; i < n; ++i) {
    std::vector<double> e(n, 0.0);
    e[i] = 1.0;
    omega.add(std::move(e));
  }
}

}  // namespace triq
