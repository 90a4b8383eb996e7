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

#include "triq/spaces.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "triq/format.hpp"

namespace triq {

namespace {

constexpr double kPi = 3.14159265358979323846;

double norm2(double q, double x, double y) {
  x = std::fabs(x);
  y = std::fabs(y);
  if (std::isinf(q)) return std::max(x, y);
  if (q == 1.0) return x + y;
  if (q == 2.0) return std::sqrt(x * x + y * y);
  if (x == 0.0) return y;
  if (y == 0.0) return x;
  return std::pow(std::pow(x, q) + std::pow(y, q), 1.0 / q);
}

// Point on the unit q-circle at angle theta, upper half plane. Angles
// within rounding of the axis snap onto it so collinear configurations
// come out exact.
std::array<double, 2> unit2(double q, double theta) {
  double c = std::cos(theta);
  double s = std::sin(theta);
  if (std::fabs(s) < 1e-15) {
    c = c < 0.0 ? -1.0 : 1.0;
    s = 0.0;
  }
  const double m = norm2(q, c, s);
  return {c / m, s / m};
}

// Finds theta in [0, pi] with || A*e1 + B*u(theta) ||_q = target, where
// u is the unit q-circle point. The path is continuous with endpoint
// values A+B and |A-B|; bracketing bisection needs no monotonicity.
double solve_angle(double q, double A, double B, double target) {
  const double f_lo = A + B;
  const double f_hi = std::fabs(A - B);
  target = std::clamp(target, f_hi, f_lo);
  const double tol = 1e-12 * std::max(1.0, target);

  auto f = [&](double theta) {
    const auto u = unit2(q, theta);
    return norm2(q, A + B * u[0], B * u[1]);
  };

  double lo = 0.0, hi = kPi;
  double best = 0.0, best_err = std::fabs(f_lo - target);
  if (std::fabs(f_hi - target) < best_err) {
    best = kPi;
    best_err = std::fabs(f_hi - target);
  }
  for (int it = 0; it < 200 && best_err > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    const double err = std::fabs(fm - target);
    if (err < best_err) {
      best = mid;
      best_err = err;
    }
    if (fm >= target)
      lo = mid;
    else
      hi = mid;
  }
  return best;
}

}  // namespace

SpaceDescriptor::SpaceDescriptor(double q_exp, int dimension) : q(q_exp), dim(dimension) {
  if (std::isnan(q) || q < 1.0)
    throw std::invalid_argument("space: q must be >= 1 or inf, got " + format_double(q));
  if (dim < 1) throw std::invalid_argument("space: dim must be >= 1");
}

bool SpaceDescriptor::max_norm() const { return std::isinf(q); }

SpaceDescriptor SpaceDescriptor::parse(std::string_view text) {
  const auto bad = [&] {
    return std::invalid_argument("space: expected lq:<q>:<dim>, got '" + std::string(text) + "'");
  };
  const auto first = text.find(':');
  const auto second = text.find(':', first + 1);
  if (first == std::string_view::npos || second == std::string_view::npos) throw bad();
  if (text.substr(0, first) != "lq") throw bad();
  const std::string q_str(text.substr(first + 1, second - first - 1));
  const std::string dim_str(text.substr(second + 1));
  if (q_str.empty() || dim_str.empty()) throw bad();

  double q_val;
  if (q_str == "inf") {
    q_val = std::numeric_limits<double>::infinity();
  } else {
    char* end = nullptr;
    q_val = std::strtod(q_str.c_str(), &end);
    if (end != q_str.c_str() + q_str.size()) throw bad();
  }
  char* end = nullptr;
  const long dim_val = std::strtol(dim_str.c_str(), &end, 10);
  if (end != dim_str.c_str() + dim_str.size() || dim_val < 1 || dim_val > 1000000) throw bad();
  return SpaceDescriptor(q_val, static_cast<int>(dim_val));
}

std::string SpaceDescriptor::to_string() const {
  return "lq:" + format_double(q) + ":" + std::to_string(dim);
}

double norm(const SpaceDescriptor& space, const Vector& v) {
  if (static_cast<int>(v.size()) != space.dim)
    throw std::invalid_argument("norm: vector has dimension " + std::to_string(v.size()) +
                                ", space expects " + std::to_string(space.dim));
  for (double c : v)
    if (!std::isfinite(c)) throw std::invalid_argument("norm: non-finite coordinate");

  if (space.max_norm()) {
    double m = 0.0;
    for (double c : v) m = std::max(m, std::fabs(c));
    return m;
  }
  if (space.q == 1.0) {
    double s = 0.0;
    for (double c : v) s += std::fabs(c);
    return s;
  }
  if (space.q == 2.0) {
    double s = 0.0;
    for (double c : v) s += c * c;
    return std::sqrt(s);
  }
  double s = 0.0;
  for (double c : v) s += std::pow(std::fabs(c), space.q);
  return std::pow(s, 1.0 / space.q);
}

Interval feasible_t_range(std::span<const double> s) {
  if (s.empty()) throw std::invalid_argument("feasible_t_range: empty tuple");
  double sum = 0.0, mx = 0.0;
  for (double v : s) {
    if (!std::isfinite(v) || v < 0.0)
      throw std::invalid_argument("feasible_t_range: norms must be finite and >= 0");
    sum += v;
    mx = std::max(mx, v);
  }
  if (sum == 0.0) throw std::invalid_argument("feasible_t_range: all-zero tuple");
  return {std::max(0.0, 2.0 * mx - sum), sum};
}

void validate_norm_tuple(const NormTuple& nt) {
  if (nt.s.empty()) throw std::invalid_argument("norm tuple: empty");
  double sum = 0.0, mx = 0.0;
  for (double v : nt.s) {
    if (!std::isfinite(v) || v < 0.0)
      throw std::invalid_argument("norm tuple: norms must be finite and >= 0");
    sum += v;
    mx = std::max(mx, v);
  }
  if (!std::isfinite(nt.t) || nt.t < 0.0)
    throw std::invalid_argument("norm tuple: t must be finite and >= 0");
  // tight slack: tuples measured from actual vectors carry only rounding
  const double slack = 1e-12 * std::max(1.0, sum);
  if (sum == 0.0) {
    if (nt.t > slack) throw std::invalid_argument("norm tuple: infeasible (all norms zero, t > 0)");
    return;
  }
  const double lo = std::max(0.0, 2.0 * mx - sum);
  if (nt.t < lo - slack || nt.t > sum + slack)
    throw std::invalid_argument("norm tuple: infeasible, t = " + format_double(nt.t) +
                                " outside [" + format_double(lo) + ", " + format_double(sum) + "]");
}

// A feasible tuple is realized as a closed quadrilateral with sides
// (a, b, c, t): the members are split into three aligned bundles whose
// sums a, b, c each stay below (sum + t) / 2, the quadrilateral is cut
// along a diagonal w into two triangles, and each triangle is solved by
// bisection against the first coordinate axis. Collinear bundles keep
// every member norm exact; only the two bisections carry tolerance.
std::vector<Vector> realize_tuple(const SpaceDescriptor& space, const NormTuple& nt) {
  if (space.dim < 2) throw std::invalid_argument("realize_tuple: requires dim >= 2");
  validate_norm_tuple(nt);

  const int n = static_cast<int>(nt.s.size());
  std::vector<Vector> out(n, Vector(space.dim, 0.0));

  double sum = 0.0;
  for (double v : nt.s) sum += v;
  if (sum == 0.0) return out;  // all-zero members, t ~ 0

  const Interval range = feasible_t_range(nt.s);
  const double t = std::clamp(nt.t, range.lo, range.hi);

  // Descending greedy split into three bundles. With items processed
  // largest first, each bundle sum ends up <= max(s_max, sum/2), which
  // is <= (sum + t)/2 because t >= 2*s_max - sum.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return nt.s[i] > nt.s[j]; });
  std::array<double, 3> bin_sum{0.0, 0.0, 0.0};
  std::vector<int> bin_of(n, 0);
  for (int idx : order) {
    int best = 0;
    for (int b = 1; b < 3; ++b)
      if (bin_sum[b] < bin_sum[best]) best = b;
    bin_of[idx] = best;
    bin_sum[best] += nt.s[idx];
  }
  const double a = bin_sum[0], b = bin_sum[1], c = bin_sum[2];

  // Diagonal w must close triangle (a, b, w) and triangle (w, c, t).
  const double w_lo = std::max(std::fabs(a - b), std::fabs(c - t));
  const double w_hi = std::min(a + b, c + t);
  double w = 0.5 * (w_lo + w_hi);
  if (w_lo <= w_hi) w = std::clamp(w, w_lo, w_hi);

  const double q = space.q;
  std::array<double, 2> u1{1.0, 0.0}, u2{1.0, 0.0}, u3{1.0, 0.0};

  if (a > 0.0 && b > 0.0) {
    // || w*e1 - a*u1 || = b, solved via the mirrored path
    // || w*e1 + a*u(theta) || = b and u1 = reflect_x(u(theta)).
    const double theta = solve_angle(q, w, a, b);
    const auto u = unit2(q, theta);
    u1 = {-u[0], u[1]};
    std::array<double, 2> diff{w - a * u1[0], -a * u1[1]};
    const double d = norm2(q, diff[0], diff[1]);
    if (d > 0.0) u2 = {diff[0] / d, diff[1] / d};
  }
  // a == 0 or b == 0 forces w to collapse onto the other side; both
  // directions stay on the axis and the zero bundle is empty anyway.

  if (c > 0.0 && w > 0.0) {
    const double psi = solve_angle(q, w, c, t);
    u3 = unit2(q, psi);
  }
  // c == 0 forces w = t; w == 0 forces t = c and u3 = e1 works.

  const std::array<std::array<double, 2>, 3> dir{u1, u2, u3};
  for (int i = 0; i < n; ++i) {
    // + 0.0 folds negative zeros so printed witnesses stay tidy
    out[i][0] = nt.s[i] * dir[bin_of[i]][0] + 0.0;
    out[i][1] = nt.s[i] * dir[bin_of[i]][1] + 0.0;
  }

  // Postcondition guard; bisection tolerances keep errors far below this.
  Vector total(space.dim, 0.0);
  for (const auto& x : out)
    for (int d = 0; d < space.dim; ++d) total[d] += x[d];
  if (std::fabs(norm(space, total) - nt.t) > 1e-9 * std::max(1.0, nt.t))
    throw std::logic_error("realize_tuple: failed to meet target sum norm");
  for (int i = 0; i < n; ++i)
    if (std::fabs(norm(space, out[i]) - nt.s[i]) > 1e-9 * std::max(1.0, nt.s[i]))
      throw std::logic_error("realize_tuple: failed to meet member norm");
  return out;
}

}  // namespace triq
