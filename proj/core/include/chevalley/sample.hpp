/* Copyright 2026 The chevalley authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Seeded random valid parameters, by rejection sampling.
//
// Draws use std::mt19937_64 with a fixed reduction so the stream is identical
// on every platform.

#ifndef CHEVALLEY_SAMPLE_HPP
#define CHEVALLEY_SAMPLE_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "chevalley/lparam.hpp"

namespace chevalley {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return uniform(0, 1) == 1; }
  /// p/q with q drawn from the divisors of max_den and |p/q| <= bound.
  Rational rational(std::int64_t bound, std::int64_t max_den);

 private:
  std::mt19937_64 engine_;
};

class ParamSampler {
 public:
  ParamSampler(LGroupPtr L, std::uint64_t seed, std::int64_t max_den = 24);

  /// A random parameter accepted by make_param.
  LParam next();
  /// A random parameter for which levi_of succeeds as well.
  LParam next_normal();
  /// Number of candidates rejected so far.
  std::size_t rejected() const { return rejected_; }

 private:
  LGroupPtr L_;
  Rng rng_;
  std::int64_t max_den_;
  std::vector<WeylElem> twisted_involutions_;
  std::size_t rejected_ = 0;
};

}  // namespace chevalley

#endif  // CHEVALLEY_SAMPLE_HPP
