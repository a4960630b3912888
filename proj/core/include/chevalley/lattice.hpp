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
// Integer lattice algorithms: Smith and Hermite normal forms, and the
// congruence solver used for torus conjugacy.

#ifndef CHEVALLEY_LATTICE_HPP
#define CHEVALLEY_LATTICE_HPP

#include <optional>
#include <vector>

#include "chevalley/matrix.hpp"

namespace chevalley {

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... , d_i >= 0.
struct SmithForm {
  IntMat u;
  IntMat v;
  IntMat d;
  int rank = 0;

  std::int64_t diag(int i) const { return i < d.rows() && i < d.cols() ? d(i, i) : 0; }
};

SmithForm smith_normal_form(const IntMat& a);

/// Some x in Q^n with A x = d (mod Z^m), or nullopt if none exists.
std::optional<RatVec> solve_mod_integers(const IntMat& a, const RatVec& d);

/// Whether the rational vector x lies in the integer column span A Z^n.
bool in_integer_image(const IntMat& a, const RatVec& x);

/// Row-style Hermite normal form of the lattice spanned by the rows of `gens`:
/// echelon rows, positive pivots, entries above each pivot reduced into [0, pivot).
/// Zero rows dropped, so equal lattices give equal matrices.
IntMat hermite_rows(const IntMat& gens);

/// Canonical representative of x modulo the row lattice of `hnf` (output of
/// hermite_rows): pivot coordinates land in [0, pivot).
RatVec reduce_modulo(const RatVec& x, const IntMat& hnf);

/// The free quotient Z^n / sat(span of cols). `projection` is (n-r) x n with kernel
/// exactly the saturation; `section` is n x (n-r) with projection * section = 1.
struct SaturationQuotient {
  IntMat projection;
  IntMat section;
  int quotient_rank() const { return projection.rows(); }
};

SaturationQuotient saturation_quotient(int n, const std::vector<IntVec>& cols);

}  // namespace chevalley

#endif  // CHEVALLEY_LATTICE_HPP
