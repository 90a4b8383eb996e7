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

#ifndef TRIQ_RNG_HPP
#define TRIQ_RNG_HPP

#include <cstdint>

namespace triq {

/// splitmix64 finalizer; also used to derive substream seeds.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Small counter-based generator (splitmix64). Deterministic across
/// platforms: integer ops only, doubles built from the top 53 bits.
/// Substreams derived from (seed, stream index) are independent of how
/// much the parent stream has been consumed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : base_(seed), state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix64(state_);
  }

  /// Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Inclusive on both ends.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rng substream(std::uint64_t stream) const {
    return Rng(mix64(base_ ^ (0x9e3779b97f4a7c15ull * (stream + 1))));
  }

  std::uint64_t base_seed() const { return base_; }

 private:
  std::uint64_t base_;
  std::uint64_t state_;
};

}  // namespace triq

#endif  // TRIQ_RNG_HPP
