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

#include "chevalley/lattice.hpp"

#include <cstdlib>
#include <utility>

namespace chevalley {

namespace {

void swap_rows(IntMat& m, int a, int b) {
  if (a == b) return;
  for (int c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMat& m, int a, int b) {
  if (a == b) return;
  for (int r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row[a] += f * row[b]
void add_row(IntMat& m, int a, int b, std::int64_t f) {
  if (f == 0) return;
  for (int c = 0; c < m.cols(); ++c) m(a, c) = checked_add(m(a, c), checked_mul(f, m(b, c)));
}

void add_col(IntMat& m, int a, int b, std::int64_t f) {
  if (f == 0) return;
  for (int r = 0; r < m.rows(); ++r) m(r, a) = checked_add(m(r, a), checked_mul(f, m(r, b)));
}

void negate_row(IntMat& m, int a) {
  for (int c = 0; c < m.cols(); ++c) m(a, c) = -m(a, c);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMat& a) {
  const int m = a.rows();
  const int n = a.cols();
  IntMat d = a;
  IntMat u = IntMat::identity(m);
  IntMat v = IntMat::identity(n);
  int t = 0;
  while (t < m && t < n) {
    // Smallest nonzero entry in the remaining block becomes the pivot.
    int pr = -1, pc = -1;
    for (int r = t; r < m; ++r)
      for (int c = t; c < n; ++c)
        if (d(r, c) != 0 && (pr < 0 || std::llabs(d(r, c)) < std::llabs(d(pr, pc)))) {
          pr = r;
          pc = c;
        }
    if (pr < 0) break;
    swap_rows(d, t, pr);
    swap_rows(u, t, pr);
    swap_cols(d, t, pc);
    swap_cols(v, t, pc);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int r = t + 1; r < m; ++r) {
        std::int64_t q = floor_div(d(r, t), d(t, t));
        add_row(d, r, t, -q);
        add_row(u, r, t, -q);
        if (d(r, t) != 0) {
          swap_rows(d, t, r);
          swap_rows(u, t, r);
          clean = false;
        }
      }
      for (int c = t + 1; c < n; ++c) {
        std::int64_t q = floor_div(d(t, c), d(t, t));
        add_col(d, c, t, -q);
        add_col(v, c, t, -q);
        if (d(t, c) != 0) {
          swap_cols(d, t, c);
          swap_cols(v, t, c);
          clean = false;
        }
      }
      if (clean) {
        // Divisibility: the pivot must divide the rest of the block.
        for (int r = t + 1; r < m && clean; ++r)
          for (int c = t + 1; c < n; ++c)
            if (d(r, c) % d(t, t) != 0) {
              add_row(d, t, r, 1);
              add_row(u, t, r, 1);
              clean = false;
              break;
            }
      }
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
    ++t;
  }
  return SmithForm{std::move(u), std::move(v), std::move(d), t};
}

std::optional<RatVec> solve_mod_integers(const IntMat& a, const RatVec& rhs) {
  if (static_cast<int>(rhs.size()) != a.rows()) throw Error(ErrorKind::RankMismatch, "congruence shape mismatch");
  // A x = d + k  <=>  D (V^-1 x) = U d + U k, and U k ranges over Z^m.
  SmithForm s = smith_normal_form(a);
  RatVec ud = s.u * rhs;
  RatVec y(a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    std::int64_t di = s.diag(i);
    if (i < s.rank) {
      y[i] = ud[i] / Rational(di);
    } else if (!ud[i].is_integer()) {
      return std::nullopt;
    }
  }
  return s.v * y;
}

bool in_integer_image(const IntMat& a, const RatVec& x) {
  if (static_cast<int>(x.size()) != a.rows()) throw Error(ErrorKind::RankMismatch, "image test shape mismatch");
  if (!is_integral(x)) return false;
  SmithForm s = smith_normal_form(a);
  RatVec ux = s.u * x;
  for (int i = 0; i < a.rows(); ++i) {
    std::int64_t di = s.diag(i);
    if (i < s.rank) {
      if (ux[i].num() % di != 0) return false;
    } else if (!ux[i].is_zero()) {
      return false;
    }
  }
  return true;
}

IntMat hermite_rows(const IntMat& gens) {
  IntMat h = gens;
  const int m = h.rows();
  const int n = h.cols();
  int row = 0;
  std::vector<int> pivot_cols;
  for (int c = 0; c < n && row < m; ++c) {
    // Euclid down the column until one nonzero entry remains at `row`.
    while (true) {
      int best = -1;
      for (int r = row; r < m; ++r)
        if (h(r, c) != 0 && (best < 0 || std::llabs(h(r, c)) < std::llabs(h(best, c)))) best = r;
      if (best < 0) break;
      swap_rows(h, row, best);
      bool done = true;
      for (int r = row + 1; r < m; ++r) {
        if (h(r, c) == 0) continue;
        add_row(h, r, row, -floor_div(h(r, c), h(row, c)));
        if (h(r, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(row, c) == 0) continue;
    if (h(row, c) < 0) negate_row(h, row);
    for (int r = 0; r < row; ++r) add_row(h, r, row, -floor_div(h(r, c), h(row, c)));
    pivot_cols.push_back(c);
    ++row;
  }
  IntMat out(row, n);
  for (int r = 0; r < row; ++r)
    for (int c = 0; c < n; ++c) out(r, c) = h(r, c);
  return out;
}

RatVec reduce_modulo(const RatVec& x, const IntMat& hnf) {
  RatVec y = x;
  for (int r = 0; r < hnf.rows(); ++r) {
    int c = 0;
    while (hnf(r, c) == 0) ++c;
    std::int64_t q = (y[c] / Rational(hnf(r, c))).floor();
    if (q == 0) continue;
    for (int k = 0; k < hnf.cols(); ++k) y[k] -= Rational(checked_mul(q, hnf(r, k)));
  }
  return y;
}

SaturationQuotient saturation_quotient(int n, const std::vector<IntVec>& cols) {
  if (cols.empty()) return {IntMat::identity(n), IntMat::identity(n)};
  SmithForm s = smith_normal_form(IntMat::from_columns(n, cols));
  // Rows r.. of U annihilate the span; together with U^-1 they split Z^n.
  IntMat uinv = *s.u.unimodular_inverse();
  const int q = n - s.rank;
  IntMat proj(q, n), sect(n, q);
  for (int i = 0; i < q; ++i)
    for (int c = 0; c < n; ++c) {
      proj(i, c) = s.u(s.rank + i, c);
      sect(c, i) = uinv(c, s.rank + i);
    }
  return {proj, sect};
}

}  // namespace chevalley
