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
// Finite-dimensional semisimple representations of the real Weil group.
//
// W_R = C^x u jC^x with j^2 = -1 and j z j^-1 = zbar. The irreducibles are
//   chi(t, eps):  z -> (z zbar)^t,  j -> (-1)^eps
//   I(k, t):      induced from z -> (z/|z|)^k (z zbar)^t, k >= 1.
// I(0, t) is reducible and is stored as chi(t, 0) + chi(t, 1).

#ifndef CHEVALLEY_WEILREP_HPP
#define CHEVALLEY_WEILREP_HPP

#include <string>
#include <string_view>
#include <vector>

#include "chevalley/lparam.hpp"

namespace chevalley {

struct WeilIrr {
  enum class Kind { Character, Induced };
  Kind kind = Kind::Character;
  Gaussian t;
  int eps = 0;  // characters only
  int k = 0;    // induced only, k >= 1

  int dim() const { return kind == Kind::Character ? 1 : 2; }

  friend bool operator==(const WeilIrr&, const WeilIrr&) = default;
  friend bool operator<(const WeilIrr& a, const WeilIrr& b);
};

WeilIrr weil_chi(const Gaussian& t, int eps);
/// Throws for k < 1; use weil_induced_rep for k = 0.
WeilIrr weil_induced(int k, const Gaussian& t);

class WeilRep {
 public:
  WeilRep() = default;
  explicit WeilRep(std::vector<WeilIrr> summands);

  /// Sorted summands.
  const std::vector<WeilIrr>& summands() const { return summands_; }
  int dim() const;

  friend bool operator==(const WeilRep&, const WeilRep&) = default;

 private:
  std::vector<WeilIrr> summands_;
};

/// I(k, t) with |k| normalized; I(0, t) splits into two characters.
WeilRep weil_induced_rep(int k, const Gaussian& t);
WeilRep weil_sum(const WeilRep& a, const WeilRep& b);

WeilRep weil_dual(const WeilRep& r);
WeilRep weil_hermitian_dual(const WeilRep& r);
bool weil_is_hermitian(const WeilRep& r);
bool weil_is_unitary(const WeilRep& r);
/// Sorted multiset of exponents.
std::vector<Gaussian> weil_inf_char(const WeilRep& r);

/// Parameter for GL(n) (split) with n = dim(r). DimensionMismatch if n is
/// given and differs from dim(r).
LParam weil_to_lparam(const WeilRep& r, int n = -1);
/// The L-group of split GL(n).
LGroupPtr gl_lgroup(int n);

/// "chi(t,eps)" and "I(k,t)" joined by "+".
WeilRep parse_weilrep(std::string_view text);
std::string weil_str(const WeilIrr& x);
std::string weil_str(const WeilRep& r);

}  // namespace chevalley

#endif  // CHEVALLEY_WEILREP_HPP
