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

#ifndef TRIQ_SPACES_HPP
#define TRIQ_SPACES_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace triq {

/// A finite-dimensional l^q space. q may be any real >= 1 or infinity
/// (the max norm); anything below 1 is rejected because l^q is not a
/// norm there.
struct SpaceDescriptor {
  double q;
  int dim;

  SpaceDescriptor(double q_exp, int dimension);

  bool max_norm() const;

  /// Parses "lq:<q>:<dim>" with q a decimal or "inf", e.g. "lq:2:3".
  static SpaceDescriptor parse(std::string_view text);
  std::string to_string() const;
};

using Vector = std::vector<double>;

/// Member norms s_1..s_n together with the norm t of the sum.
struct NormTuple {
  std::vector<double> s;
  double t = 0.0;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// l^q norm of v: (sum |v_i|^q)^(1/q), or max |v_i| when q = inf.
double norm(const SpaceDescriptor& space, const Vector& v);

/// Range of ||x_1 + ... + x_n|| achievable with ||x_i|| = s_i in any
/// space of dimension >= 2: [max(0, 2 max_i s_i - sum s), sum s].
Interval feasible_t_range(std::span<const double> s);

/// Throws unless nt satisfies the feasibility interval (with a small
/// absolute slack for tuples computed in floating point).
void validate_norm_tuple(const NormTuple& nt);

/// Builds x_1..x_n in `space` with ||x_i|| = s_i and ||sum x_i|| = t,
/// both to 1e-9 * max(1, target). The vectors live in the first two
/// coordinates. Requires space.dim >= 2 and a feasible tuple.
std::vector<Vector> realize_tuple(const SpaceDescriptor& space, const NormTuple& nt);

}  // namespace triq

#endif  // TRIQ_SPACES_HPP
