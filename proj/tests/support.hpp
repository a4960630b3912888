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
// Helpers shared by the unit and acceptance tests. The oracles here are
// written independently of the library's algorithms: explicit reflection
// formulas, orbit enumeration by brute force, and matrix realizations.

#ifndef CHEVALLEY_TEST_SUPPORT_HPP
#define CHEVALLEY_TEST_SUPPORT_HPP

#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "chevalley/lparam.hpp"

// Stream operators so test frameworks can print failing values.
namespace chevalley {
inline std::ostream& operator<<(std::ostream& os, const IntVec& v) { return os << vec_str(v); }
inline std::ostream& operator<<(std::ostream& os, const RatVec& v) { return os << vec_str(v); }
inline std::ostream& operator<<(std::ostream& os, const GaussVec& v) { return os << vec_str(v); }
inline std::ostream& operator<<(std::ostream& os, const IntMat& m) { return os << m.str(); }
}  // namespace chevalley

namespace support {

using namespace chevalley;

inline GaussVec gv(std::initializer_list<const char*> xs) {
  GaussVec v;
  for (const char* x : xs) v.push_back(Gaussian::parse(x));
  return v;
}

inline RatVec rv(std::initializer_list<const char*> xs) {
  RatVec v;
  for (const char* x : xs) v.push_back(Rational::parse(x));
  return v;
}

inline Gaussian gmul(const Gaussian& a, const Gaussian& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

/// Positive coroots as the orbit of the simple coroots under the reflections
/// y -> y - <a_i, y> a_i^v, keeping those with nonnegative coordinates along
/// the simple coroots (computed by rational solving).
inline std::vector<IntVec> oracle_coroots(const RootDatum& d) {
  std::set<IntVec> all(d.simple_coroots.begin(), d.simple_coroots.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<IntVec> cur(all.begin(), all.end());
    for (const auto& y : cur)
      for (int i = 0; i < d.num_simple(); ++i) {
        IntVec z = y;
        std::int64_t c = dot(d.simple_roots[i], y);
        for (int t = 0; t < d.rank; ++t) z[t] -= c * d.simple_coroots[i][t];
        if (all.insert(z).second) grew = true;
      }
  }
  return {all.begin(), all.end()};
}

/// The coroots with nonnegative coefficients along the simple coroots.
inline std::vector<IntVec> oracle_positive_coroots(const RootDatum& d) {
  // Coefficients c solve sum_j c_j <a_i, a_j^v> = <a_i, y>.
  const int m = d.num_simple();
  std::vector<IntVec> out;
  for (const auto& y : oracle_coroots(d)) {
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) a[i][j] = dot(d.simple_roots[i], d.simple_coroots[j]);
      a[i][m] = dot(d.simple_roots[i], y);
    }
    for (int c = 0; c < m; ++c) {
      int p = c;
      while (a[p][c].is_zero()) ++p;
      std::swap(a[p], a[c]);
      for (int r = 0; r < m; ++r) {
        if (r == c || a[r][c].is_zero()) continue;
        Rational f = a[r][c] / a[c][c];
        for (int k = c; k <= m; ++k) a[r][k] -= f * a[c][k];
      }
    }
    bool positive = true;
    for (int i = 0; i < m; ++i)
      if ((a[i][m] / a[i][i]).sign() < 0) positive = false;
    if (positive) out.push_back(y);
  }
  return out;
}

inline RatVec oracle_rho_check(const RootDatum& d) {
  RatVec s(d.rank);
  for (const auto& c : oracle_positive_coroots(d))
    for (int t = 0; t < d.rank; ++t) s[t] += Rational(c[t], 2);
  return s;
}

/// Reflection on X_* straight from the formula.
inline IntMat oracle_reflection(const RootDatum& d, int i) {
  IntMat m(d.rank, d.rank);
  for (int c = 0; c < d.rank; ++c) {
    IntVec e(d.rank, 0);
    e[c] = 1;
    std::int64_t k = dot(d.simple_roots[i], e);
    for (int r = 0; r < d.rank; ++r) m(r, c) = e[r] - k * d.simple_coroots[i][r];
  }
  return m;
}

/// All Weyl group matrices on X_* by closure under right multiplication.
inline std::set<IntMat> oracle_weyl_matrices(const RootDatum& d) {
  std::set<IntMat> all{IntMat::identity(d.rank)};
  std::vector<IntMat> frontier(all.begin(), all.end());
  while (!frontier.empty()) {
    std::vector<IntMat> next;
    for (const auto& m : frontier)
      for (int i = 0; i < d.num_simple(); ++i) {
        IntMat p = m * oracle_reflection(d, i);
        if (all.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return all;
}

/// Number of positive coroots sent to negative ones.
inline int oracle_length(const RootDatum& d, const IntMat& m) {
  auto pos = oracle_positive_coroots(d);
  std::set<IntVec> pset(pos.begin(), pos.end());
  int n = 0;
  for (const auto& c : pos)
    if (!pset.count(m * c)) ++n;
  return n;
}

/// Orbit of v under the Weyl group, by brute force.
inline std::set<GaussVec> oracle_orbit(const RootDatum& d, const GaussVec& v) {
  std::set<GaussVec> out;
  for (const auto& m : oracle_weyl_matrices(d)) out.insert(m * v);
  return out;
}

}  // namespace support

#endif  // CHEVALLEY_TEST_SUPPORT_HPP
