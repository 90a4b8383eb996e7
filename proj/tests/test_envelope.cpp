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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "triq/envelope.hpp"
#include "triq/rng.hpp"

using namespace triq;

namespace {

std::vector<double> random_simplex(Rng& rng, int n, double floor_coord = 0.0) {
  std::vector<double> s(n);
  double sum = 0.0;
  for (double& v : s) {
    v = -std::log(1.0 - rng.next_double());
    sum += v;
  }
  for (double& v : s) v = floor_coord + (v / sum) * (1.0 - floor_coord * n);
  return s;
}

double dot_power(const std::vector<double>& a, const std::vector<double>& s, double p) {
  double v = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) v += a[i] * std::pow(s[i], p);
  return v;
}

}  // namespace

TEST_CASE("h_p closed form with tangency oracle") {
  const Exponent p2(2.0);

  // (2, 2): grid-minimize 2 s^2 + 2 (1-s)^2 and confirm the minimum is 1
  CHECK(h_p(p2, std::vector<double>{2.0}) == doctest::Approx(2.0).epsilon(1e-12));
  double min_val = 1e300;
  for (int i = 0; i <= 100000; ++i) {
    const double s = i / 100000.0;
    min_val = std::min(min_val, 2.0 * s * s + 2.0 * (1 - s) * (1 - s));
  }
  CHECK(min_val == doctest::Approx(1.0).epsilon(1e-9));

  // (3, 3, 3): the quadratic 3 sum s_i^2 bottoms out at 1 on the simplex
  CHECK(h_p(p2, std::vector<double>{3.0, 3.0}) == doctest::Approx(3.0).epsilon(1e-12));
  min_val = 1e300;
  for (int i = 0; i <= 300; ++i) {
    for (int j = 0; j <= 300 - i; ++j) {
      const double s1 = i / 300.0, s2 = j / 300.0, s3 = 1.0 - s1 - s2;
      min_val = std::min(min_val, 3.0 * (s1 * s1 + s2 * s2 + s3 * s3));
    }
  }
  CHECK(min_val == doctest::Approx(1.0).epsilon(1e-9));

  CHECK_THROWS_AS(h_p(p2, std::vector<double>{1.0}), std::domain_error);
  CHECK_THROWS_AS(h_p(p2, std::vector<double>{0.5}), std::domain_error);
  CHECK_THROWS_AS(h_p(Exponent(0.5), std::vector<double>{2.0}), std::invalid_argument);
}

TEST_CASE("envelope_point worked cases") {
  const auto sym = envelope_point(Exponent(2.0), SimplexPoint({0.5, 0.5}));
  CHECK(sym.a[0] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(sym.a[1] == doctest::Approx(2.0).epsilon(1e-14));

  const auto cubic = envelope_point(Exponent(3.0), SimplexPoint({0.5, 0.5}));
  CHECK(cubic.a[0] == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(cubic.a[1] == doctest::Approx(4.0).epsilon(1e-14));
  // the closed form reproduces the parametric last coordinate
  CHECK(h_p(Exponent(3.0), std::vector<double>{4.0}) == doctest::Approx(4.0).epsilon(1e-12));

  const auto skew = envelope_point(Exponent(2.0), SimplexPoint({1.0 / 3.0, 2.0 / 3.0}));
  CHECK(skew.a[0] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(skew.a[1] == doctest::Approx(1.5).epsilon(1e-14));

  CHECK_THROWS_AS(envelope_point(Exponent(2.0), SimplexPoint({1.0, 0.0})),
                  std::invalid_argument);
}

TEST_CASE("envelope_residual vanishes exactly on the surface") {
  const Exponent p2(2.0);

  const auto at_sym = envelope_residual(p2, EnvelopePoint({2, 2}), SimplexPoint({0.5, 0.5}));
  CHECK(at_sym.value == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(at_sym.grad[0] == doctest::Approx(0.0).epsilon(1e-15));

  const auto at_skew =
      envelope_residual(p2, EnvelopePoint({3, 1.5}), SimplexPoint({1.0 / 3.0, 2.0 / 3.0}));
  CHECK(at_skew.value == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(at_skew.grad[0] == doctest::Approx(0.0).epsilon(1e-12));

  // off the tangency parameter the system is visibly nonzero
  const auto off = envelope_residual(p2, EnvelopePoint({2, 2}), SimplexPoint({0.4, 0.6}));
  const double expected_value = 2 * 0.4 * 0.4 + 2 * 0.6 * 0.6 - 1;
  const double expected_grad = 2 * (2 * 0.4 - 2 * 0.6);
  CHECK(off.value == doctest::Approx(expected_value).epsilon(1e-14));
  CHECK(off.value == doctest::Approx(0.04).epsilon(1e-12));
  CHECK(off.grad[0] == doctest::Approx(expected_grad).epsilon(1e-14));
  CHECK(off.grad[0] == doctest::Approx(-0.8).epsilon(1e-12));
}

TEST_CASE("in_Dp sampled membership") {
  const auto grid2 = simplex_offset_grid(2, 40);

  // p <= 1 with unit coefficients: every sample stays above 1
  CHECK(in_Dp(Exponent(0.5), std::vector<double>{1, 1}, grid2, 1e-9).inside);

  const auto tangent = in_Dp(Exponent(2.0), std::vector<double>{2, 2}, grid2, 1e-3);
  CHECK(tangent.inside);
  CHECK(tangent.worst_value == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(tangent.worst_sample[0] == doctest::Approx(0.5).epsilon(0.05));

  OmegaSampleSet mid;
  mid.add({0.5, 0.5});
  const auto below = in_Dp(Exponent(2.0), std::vector<double>{1.5, 1.5}, mid, 1e-9);
  CHECK_FALSE(below.inside);
  CHECK(below.worst_value == doctest::Approx(0.75).epsilon(1e-14));

  CHECK_THROWS_AS(in_Dp(Exponent(2.0), std::vector<double>{1, 1}, OmegaSampleSet{}, 1e-9),
                  std::invalid_argument);
  CHECK_THROWS_AS(in_Dp(Exponent(2.0), std::vector<double>{-1, 1}, grid2, 1e-9),
                  std::invalid_argument);
}

TEST_CASE("omega sample validation") {
  OmegaSampleSet omega;
  CHECK_THROWS_AS(omega.add({0.25, 0.25}), std::invalid_argument);
  CHECK_THROWS_AS(omega.add({2.0, -0.5}), std::invalid_argument);
  omega.add({0.5, 0.5});
  omega.add({3.0, 0.0});
  CHECK(omega.size() == 2);
}

TEST_CASE("sample_envelope grids") {
  const Exponent p2(2.0);

  const auto single = sample_envelope(p2, 2, 2);
  REQUIRE(single.size() == 1);
  CHECK(single[0][0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(single[0][1] == doctest::Approx(2.0).epsilon(1e-12));

  const auto quarter = sample_envelope(p2, 2, 4);
  REQUIRE(quarter.size() == 3);
  CHECK(quarter[0][0] == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(quarter[0][1] == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(quarter[1][0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(quarter[2][0] == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(quarter[2][1] == doctest::Approx(4.0).epsilon(1e-12));

  // interior compositions of 4 into 3 parts: C(3,2) rows, lexicographic
  const auto tri = sample_envelope(p2, 3, 4);
  REQUIRE(tri.size() == 3);
  CHECK(tri[0][0] == doctest::Approx(4.0));
  CHECK(tri[0][1] == doctest::Approx(4.0));
  CHECK(tri[0][2] == doctest::Approx(2.0));
  CHECK(tri[1][2] == doctest::Approx(4.0));
  CHECK(tri[2][0] == doctest::Approx(2.0));

  CHECK(sample_envelope(p2, 4, 3).empty());  // grid below n has no interior
  CHECK_THROWS_AS(sample_envelope(p2, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(sample_envelope(p2, 2, 1), std::invalid_argument);
}

TEST_CASE("envelope csv bytes") {
  const auto rows = sample_envelope(Exponent(2.0), 2, 4);
  std::ostringstream os;
  write_envelope_csv(os, rows, 2);
  CHECK(os.str() == "a1,h_p\n4,1.33333333333\n2,2\n1.33333333333,4\n");

  std::ostringstream os3;
  write_envelope_csv(os3, sample_envelope(Exponent(2.0), 3, 4), 3);
  CHECK(os3.str() == "a1,a2,h_p\n4,4,2\n4,2,4\n2,4,4\n");
}

TEST_CASE("parametric point matches the closed form") {
  Rng rng(909);
  for (const double p_val : {1.5, 2.0, 3.0}) {
    const Exponent p(p_val);
    for (const int n : {2, 3, 4}) {
      for (int trial = 0; trial < 350; ++trial) {
        const SimplexPoint s(random_simplex(rng, n, 1e-3));
        const auto a = envelope_point(p, s);
        const std::vector<double> head(a.a.begin(), a.a.end() - 1);
        const double closed = h_p(p, head);
        CHECK(std::fabs(closed - a.a[n - 1]) <= 1e-9 * std::fabs(closed));
      }
    }
  }
}

TEST_CASE("tangency: surface points support every simplex sample") {
  Rng rng(1010);
  for (const double p_val : {1.5, 2.0, 3.0}) {
    const Exponent p(p_val);
    for (const int n : {2, 3}) {
      for (int rep = 0; rep < 40; ++rep) {
        const SimplexPoint s(random_simplex(rng, n, 0.02));
        const auto a = envelope_point(p, s);
        CHECK(std::fabs(dot_power(a.a, s.s, p_val) - 1.0) <= 1e-9);
        for (int probe = 0; probe < 200; ++probe) {
          const auto other = random_simplex(rng, n);
          CHECK(dot_power(a.a, other, p_val) >= 1.0 - 1e-9);
        }
        const auto res = envelope_residual(p, a, s);
        CHECK(std::fabs(res.value) <= 1e-9);
        for (double g : res.grad) CHECK(std::fabs(g) <= 1e-9);
      }
    }
  }
}

TEST_CASE("epigraph equivalence on a dense grid") {
  Rng rng(1111);
  for (const double p_val : {1.5, 2.0, 3.0}) {
    const Exponent p(p_val);
    for (const int n : {2, 3}) {
      const auto omega = simplex_offset_grid(n, 60);
      for (int rep = 0; rep < 20; ++rep) {
        const SimplexPoint s(random_simplex(rng, n, 0.15));
        auto a = envelope_point(p, s).a;
        const double surface = a[n - 1];

        a[n - 1] = surface * 1.05;
        CHECK(in_Dp(p, a, omega, 1e-9).inside);

        a[n - 1] = surface * 0.95;
        CHECK_FALSE(in_Dp(p, a, omega, 1e-3).inside);
      }
    }
  }
}

TEST_CASE("low-exponent box equivalence") {
  Rng rng(1212);
  for (const double p_val : {0.3, 0.7, 1.0}) {
    const Exponent p(p_val);
    for (const int n : {2, 3, 4}) {
      auto omega = simplex_offset_grid(n, 24);
      add_standard_basis(omega, n);
      for (int rep = 0; rep < 40; ++rep) {
        std::vector<double> a(n);
        double lowest = 1e300;
        for (double& v : a) {
          v = rng.uniform(0.5, 1.5);
          if (std::fabs(v - 1.0) < 1e-6) v = 1.0 + (v < 1.0 ? -1e-6 : 1e-6);
          lowest = std::min(lowest, v);
        }
        CHECK(in_Dp(p, a, omega, 1e-12).inside == (lowest >= 1.0 - 1e-12));
      }
    }
  }
}

TEST_CASE("h_p is strictly convex") {
  Rng rng(1313);
  for (const double p_val : {1.5, 2.0, 3.0}) {
    const Exponent p(p_val);
    for (const int m : {1, 2, 3}) {  // surface arguments, n - 1
      for (int rep = 0; rep < 120; ++rep) {
        // draw two domain points via z-coordinates summing below 1
        auto draw = [&] {
          std::vector<double> z = random_simplex(rng, m + 1);
          const double shrink = rng.uniform(0.2, 0.95);
          std::vector<double> a(m);
          for (int i = 0; i < m; ++i) a[i] = std::pow(shrink * z[i], 1.0 - p_val);
          return a;
        };
        const auto x = draw();
        const auto y = draw();
        double gap_inf = 0.0;
        std::vector<double> mid(m);
        for (int i = 0; i < m; ++i) {
          mid[i] = 0.5 * (x[i] + y[i]);
          gap_inf = std::max(gap_inf, std::fabs(x[i] - y[i]));
        }
        if (gap_inf < 1e-9) continue;
        CHECK(h_p(p, mid) < 0.5 * (h_p(p, x) + h_p(p, y)));
      }
    }
  }
}
