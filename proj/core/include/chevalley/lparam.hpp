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
// Admissible homomorphisms W_R -> L-group in aligned position.
//
// A parameter is phi(z) = z^lambda zbar^{theta^v lambda} with lambda in
// X_*(H^) (x) C and phi(j) = exp(2 pi i mu) sigma_w delta, where
// theta^v = w theta0 on X_*(H^). Validity:
//   (c')  w theta0(w) = e
//   (c)   theta^v is an involution
//   (int) lambda - theta^v lambda is integral
//   (e)   phi(j)^2 = exp(pi i (lambda - theta^v lambda)), evaluated in the Tits group.

#ifndef CHEVALLEY_LPARAM_HPP
#define CHEVALLEY_LPARAM_HPP

#include <optional>
#include <string>
#include <vector>

#include "chevalley/lgroup.hpp"
#include "chevalley/torus.hpp"

namespace chevalley {

struct LParam {
  LGroupPtr L;
  GaussVec lambda;
  RatVec mu;  // entries in [0, 1)
  WeylElem w;
  IntMat theta_check;

  ExtTitsElem phi_j() const { return make_tits(L->tits, mu, w, 1); }
};

struct ClauseVerdict {
  std::string clause;  // "c'", "c", "integrality", "e"
  bool ok = false;
  std::string detail;
};

/// All four clauses, evaluated without throwing (later clauses are skipped,
/// reported as failing, when an earlier one they depend on fails).
std::vector<ClauseVerdict> check_validity(const LGroupPtr& L, const GaussVec& lambda, const RatVec& mu, const WeylElem& w);

/// ValidityC, ValidityIntegrality or ValidityE naming the first failing clause.
LParam make_param(const LGroupPtr& L, const GaussVec& lambda, const RatVec& mu, const WeylElem& w);
/// From the Tits element phi(j) (eps must be 1).
LParam param_from_phi(const LGroupPtr& L, const GaussVec& lambda, const ExtTitsElem& phi_j);

/// Conjugation by exp(2 pi i nu).
LParam conjugate_param(const LParam& p, const RatVec& nu);
/// Conjugation by sigma_u.
LParam conjugate_param(const LParam& p, const WeylElem& u);

/// Some u in W and nu with q = exp(nu) sigma_u . p (ContextMismatch for different L).
bool params_equivalent(const LParam& p, const LParam& q);

/// Canonical dominant representative of W.v for v in X_*(H^) (x) C, with
/// dominance on real parts first and imaginary parts on ties.
GaussVec dominant_representative(const LGroup& l, const GaussVec& v);
GaussVec inf_char(const LParam& p);

/// The projection of p to the L-group of the radical (quotient of X_*(H^) by
/// the saturation of the coroots in `subset`, or all coroots).
TorusParam rad_param(const LParam& p);
TorusParam rad_param_for_subset(const LParam& p, const std::vector<int>& subset);
TorusCharData rad_char(const LParam& p);

struct CentralChar {
  RatVec tau;
  /// tau - rho_i - (rho^v - w rho^v) / 2. Congruent to tau when w lies in a
  /// standard Levi on which theta^v = -1; unlike tau it is unchanged by
  /// conjugating p.
  RatVec invariant;
  /// Canonical representative of `invariant` modulo `lattice`.
  RatVec canonical;
  /// Hermite basis (rows) of the root lattice plus (1 + theta^v) Z^n.
  IntMat lattice;
};

/// tau = (1 - theta^v) lambda / 2 - (1 + theta^v) mu + rho_i. The positive
/// imaginary roots are those positive for chamber.(2 rho) (default chamber: e).
CentralChar central_char(const LParam& p, const WeylElem* chamber = nullptr);
/// Canonical representative of x modulo the central-character lattice of p.
RatVec central_class(const LParam& p, const RatVec& x);

bool is_discrete_series(const LParam& p);

/// Dual roots alpha with <alpha, lambda> = <alpha, theta^v lambda> = 0.
std::vector<IntVec> s_roots(const LParam& p);

struct LeviReduction {
  StandardLevi levi;
  WeylElem conjugator;
  LParam param;
};

/// NormalizationRequired (with a witness root) if some S-root alpha has theta^v alpha = -alpha.
LeviReduction levi_of(const LParam& p);
/// Whether w lies in the parabolic subgroup W_S.
bool in_parabolic(const WeylElem& w, const std::vector<int>& subset);

LParam contragredient_param(const LParam& p);
LParam tau_twist_param(const LParam& p);

struct PacketDescriptor {
  StandardLevi levi;
  GaussVec inf_char;
  TorusCharData rad_char;
};

PacketDescriptor packet_descriptor(const LParam& p);

struct ContragredientReport {
  LParam dual;
  LParam twisted;
  PacketDescriptor descriptor;
  PacketDescriptor dual_descriptor;
  std::vector<CheckResult> checks;

  bool all_passed() const;
};

ContragredientReport verify_contragredient(const LParam& p);

std::string param_str(const LParam& p);

}  // namespace chevalley

#endif  // CHEVALLEY_LPARAM_HPP
