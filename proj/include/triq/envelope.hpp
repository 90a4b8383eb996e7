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

#ifndef TRIQ_ENVELOPE_HPP
#define TRIQ_ENVELOPE_HPP

#include <iosfwd>
#include <span>
#include <vector>

#include "triq/characterize.hpp"

namespace triq {

/// Point on the unit simplex: s_i >= 0, sum s_i = 1. Interior points
/// have every coordinate strictly positive.
struct SimplexPoint {
  std::vector<double> s;

  explicit SimplexPoint(std::vector<double> coords);
  int n() const { return static_cast<int>(s.size()); }
  bool interior() const;
};

/// Coefficient point (a_1..a_n) of the half-space family; when fed to
/// h_p the leading n-1 coordinates must satisfy the surface domain
/// condition sum a_i^(1/(1-p)) < 1.
struct EnvelopePoint {
  std::vector<double> a;

  explicit EnvelopePoint(std::vector<double> coords);
  int n() const { return static_cast<int>(a.size()); }
};

/// Finite family of nonnegative tuples with coordinate sum >= 1, the
/// sampled stand-in for the constraint sets of the D_p machinery.
struct OmegaSampleSet {
  std::vector<std::vector<double>> samples;

  OmegaSampleSet() = default;
  explicit OmegaSampleSet(std::vector<std::vector<double>> pts);
  void add(std::vector<double> pt);
  std::size_t size() const { return samples.size(); }
};

/// The envelope surface (1 - sum a_i^(1/(1-p)))^(1-p) for p > 1.
/// Throws when the domain condition fails (checked with a 1e-12 margin
/// before exponentiation).
double h_p(const Exponent& p, std::span<const double> a_head);

/// Tangency point of the surface family at an interior simplex point:
/// a_i = s_i^(1-p). The last coordinate equals h_p of the leading ones.
EnvelopePoint envelope_point(const Exponent& p, const SimplexPoint& s);

struct Residual {
  double value = 0.0;               // F(a; s) = sum a_i s_i^p - 1
  std::vector<double> grad;         // dF/ds_i for the n-1 free parameters
};

/// Defining system of the envelope: both the surface equation and its
/// s-gradient vanish exactly at a = envelope_point(p, s).
Residual envelope_residual(const Exponent& p, const EnvelopePoint& a, const SimplexPoint& s);

struct DpResult {
  bool inside = false;
  double worst_value = 0.0;
  std::vector<double> worst_sample;
};

/// Sampled membership in D_p(omega): min over samples of sum a_i s_i^p
/// must stay >= 1 - tol. Reports the minimizing sample.
DpResult in_Dp(const Exponent& p, std::span<const double> a, const OmegaSampleSet& omega,
               double tol);

/// Interior barycentric grid rows (a_1..a_{n-1}, h_p) of the envelope
/// surface: one row per composition of `grid` into n positive parts,
/// lexicographic in s = k/grid. Empty when grid < n.
std::vector<std::vector<double>> sample_envelope(const Exponent& p, int n, int grid);

/// CSV with header a1,...,a{n-1},h_p, 12 significant digits, LF endings.
void write_envelope_csv(std::ostream& out, const std::vector<std::vector<double>>& rows, int n);

/// Uniform barycentric grid shifted off the boundary: one sample per
/// composition of `grid` into n nonnegative parts, with coordinates
/// (k_i + 1/2) / (grid + n/2), so the minimum coordinate is ~1/(2 grid).
OmegaSampleSet simplex_offset_grid(int n, int grid);

/// Appends the standard basis tuples e_1..e_n.
void add_standard_basis(OmegaSampleSet& omega, int n);

}  // namespace triq

#endif  // TRIQ_ENVELOPE_HPP
