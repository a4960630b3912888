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
// L-groups of connected reductive groups, given an inner class.
//
// For G with based datum D, the dual group has datum dual(D) and delta acts
// through theta0 = (tau)^t where tau = -w0 gamma is the distinguished
// automorphism of D attached to the inner class gamma. On X_*(H^) = X^*(H)
// theta0 acts by tau itself.

#ifndef CHEVALLEY_LGROUP_HPP
#define CHEVALLEY_LGROUP_HPP

#include <memory>
#include <string_view>
#include <vector>

#include "chevalley/tits.hpp"

namespace chevalley {

struct LGroup {
  RootDatum g_datum;
  RootDatum dual;
  /// Based automorphism of `dual`.
  BasedAut theta0;
  WeylGroupPtr weyl;
  TitsContextPtr tits;

  int rank() const { return dual.rank; }
  /// theta0 on X_*(H^).
  const IntMat& theta0_co() const { return tits->theta_co; }
};

using LGroupPtr = std::shared_ptr<const LGroup>;

/// -w0 as a based automorphism of d (on X^*).
BasedAut minus_w0(const RootDatum& d);

/// gamma-style: theta0 = transpose(-w0 gamma). NotInvolution unless gamma^2 = 1.
LGroupPtr build_lgroup(const RootDatum& g, const BasedAut& gamma);
/// tau-style: theta0 = transpose(tau).
LGroupPtr build_lgroup_tau(const RootDatum& g, const BasedAut& tau);
/// "split" (tau = 1) or "compact" (tau = -w0, the inner class of a compact form).
LGroupPtr build_lgroup(const RootDatum& g, std::string_view inner_class);

/// Some w in W with w theta0 = -1 on X_*(H^).
bool has_compact_cartan(const LGroup& l);

struct StandardLevi {
  /// Sorted simple indices (0-based).
  std::vector<int> subset;

  friend bool operator==(const StandardLevi&, const StandardLevi&) = default;
  friend auto operator<=>(const StandardLevi&, const StandardLevi&) = default;
};

bool is_theta0_stable(const LGroup& l, const std::vector<int>& subset);
/// All theta0-stable subsets, ordered by size then lexicographically.
std::vector<StandardLevi> standard_levis(const LGroup& l);

/// "{1,2}" (1-based).
std::string levi_str(const StandardLevi& s);

}  // namespace chevalley

#endif  // CHEVALLEY_LGROUP_HPP
