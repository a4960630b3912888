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
// Based root data realized on Z^n with the standard dot product as pairing.
//
// A datum carries simple roots in X^* and simple coroots in X_*, both copies
// of Z^n. Simple reflections act on X^* by x -> x - <x, a_i^v> a_i and on X_*
// by y -> y - <a_i, y> a_i^v. Indices are 0-based internally; the spec string
// grammar and serialized words use 1-based indices.

#ifndef CHEVALLEY_ROOTDATA_HPP
#define CHEVALLEY_ROOTDATA_HPP

#include <string>
#include <string_view>
#include <vector>

#include "chevalley/matrix.hpp"

namespace chevalley {

struct RootDatum {
  int rank = 0;
  std::vector<IntVec> simple_roots;
  std::vector<IntVec> simple_coroots;
  std::string label;

  int num_simple() const { return static_cast<int>(simple_roots.size()); }
  /// cartan(i, j) = <alpha_i, alpha_j^v>.
  IntMat cartan() const;

  /// Value equality; the label is ignored.
  friend bool operator==(const RootDatum& a, const RootDatum& b) {
    return a.rank == b.rank && a.simple_roots == b.simple_roots && a.simple_coroots == b.simple_coroots;
  }
};

/// Validates and returns the datum; InvalidCartan / RankMismatch on bad input.
RootDatum make_datum(int rank, std::vector<IntVec> roots, std::vector<IntVec> coroots, std::string label = {});

/// Parses SPEC := TYPE ("x" TYPE)*, TYPE := [A-G]<n> [sc|ad] | GL(n) | T1.
/// Untagged simple types default to "sc".
RootDatum build_datum(std::string_view spec);

RootDatum dual_datum(const RootDatum& d);

/// Positive roots and coroots, index-aligned (coroots[k] is the coroot of roots[k]).
struct PositiveSystem {
  std::vector<IntVec> roots;
  std::vector<IntVec> coroots;
  /// roots[k] = sum_i coefficients[k][i] * alpha_i.
  std::vector<IntVec> coefficients;
};

PositiveSystem positive_system(const RootDatum& d);
std::vector<IntVec> positive_coroots(const RootDatum& d);
/// Half the sum of the positive coroots, in X_* (x) Q.
RatVec rho_check(const RootDatum& d);
/// Half the sum of the positive roots, in X^* (x) Q.
RatVec rho(const RootDatum& d);

/// Simple reflection s_i as a matrix on X_* and on X^*.
IntMat reflection_on_cocharacters(const RootDatum& d, int i);
IntMat reflection_on_characters(const RootDatum& d, int i);

/// Automorphism of the based datum: `matrix` acts on X^* sending alpha_i to
/// alpha_{permutation[i]}; its inverse transpose does the same on coroots.
struct BasedAut {
  IntMat matrix;
  std::vector<int> permutation;

  /// Inverse transpose of `matrix`: the action on X_*.
  IntMat on_cocharacters() const;
  bool is_identity() const { return matrix == IntMat::identity(matrix.rows()); }

  friend bool operator==(const BasedAut&, const BasedAut&) = default;
};

BasedAut identity_aut(const RootDatum& d);
/// Validates `matrix` and derives the permutation; NotBasedAut otherwise.
BasedAut make_based_aut(const RootDatum& d, const IntMat& matrix);
/// The automorphism permuting simple roots by `perm` on the root span and
/// acting by radical_sign * identity on the common kernel of the coroots.
/// NotBasedAut if perm is not a Cartan symmetry or the result is not integral.
BasedAut based_aut_from_permutation(const RootDatum& d, const std::vector<int>& perm, int radical_sign = 1);
/// Every based automorphism obtainable from based_aut_from_permutation.
std::vector<BasedAut> diagram_automorphisms(const RootDatum& d);

BasedAut compose(const BasedAut& a, const BasedAut& b);  // a after b
/// The same automorphism viewed on the dual datum: matrix a.on_cocharacters().
BasedAut transpose_aut(const RootDatum& d, const BasedAut& a);

std::string datum_str(const RootDatum& d);

}  // namespace chevalley

#endif  // CHEVALLEY_ROOTDATA_HPP
