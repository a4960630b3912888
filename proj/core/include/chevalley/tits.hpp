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
// The Tits group of a root datum extended by an involution delta.
//
// Elements are exp(2 pi i mu) sigma_w delta^eps with mu in Q^n / Z^n (a torsion
// point of the torus with cocharacter lattice Z^n), sigma_w the canonical lift
// of w, and delta acting on the torus and on the lifts through theta0.

#ifndef CHEVALLEY_TITS_HPP
#define CHEVALLEY_TITS_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chevalley/weyl.hpp"

namespace chevalley {

struct TitsContext {
  WeylGroupPtr weyl;
  /// Based automorphism of weyl->datum() by which delta acts.
  BasedAut theta0;
  /// theta0 on X_*.
  IntMat theta_co;
  RatVec rho_check;

  const RootDatum& datum() const { return weyl->datum(); }
  int rank() const { return weyl->rank(); }
};

using TitsContextPtr = std::shared_ptr<const TitsContext>;

/// theta0 defaults to the identity. NotInvolution if theta0 squared is not 1.
TitsContextPtr make_tits_context(const RootDatum& d, std::optional<BasedAut> theta0 = std::nullopt);
TitsContextPtr make_tits_context(WeylGroupPtr weyl, std::optional<BasedAut> theta0 = std::nullopt);

struct ExtTitsElem {
  TitsContextPtr ctx;
  RatVec mu;  // entries in [0, 1)
  WeylElem w;
  int eps = 0;

  friend bool operator==(const ExtTitsElem& a, const ExtTitsElem& b) {
    return a.mu == b.mu && a.w == b.w && a.eps == b.eps;
  }
};

ExtTitsElem make_tits(const TitsContextPtr& ctx, const RatVec& mu, const WeylElem& w, int eps);
ExtTitsElem tits_identity(const TitsContextPtr& ctx);
ExtTitsElem tits_torus(const TitsContextPtr& ctx, const RatVec& mu);
ExtTitsElem sigma(const TitsContextPtr& ctx, const WeylElem& w);
ExtTitsElem sigma_simple(const TitsContextPtr& ctx, int i);
ExtTitsElem tits_delta(const TitsContextPtr& ctx);

/// Normal form of a*b; ContextMismatch if the contexts differ.
ExtTitsElem tits_mul(const ExtTitsElem& a, const ExtTitsElem& b);
ExtTitsElem tits_inverse(const ExtTitsElem& a);
/// The Chevalley involution: mu -> -mu, sigma_a -> sigma_a^-1, delta fixed.
ExtTitsElem chevalley(const ExtTitsElem& a);
/// Conjugation by delta.
ExtTitsElem apply_theta0(const ExtTitsElem& a);

struct TitsLemmaCheck {
  RatVec lhs;
  RatVec rhs;
  bool equal = false;
};

/// sigma_w sigma_{w^-1} against exp(pi i (rho^v - w rho^v)).
TitsLemmaCheck check_titslemma(const TitsContextPtr& ctx, const WeylElem& w);

/// For g with eps = 1 and w theta0(w) = e: some nu with
/// exp(2 pi i nu) C(g) exp(-2 pi i nu) = g^-1. PreconditionViolated otherwise.
std::optional<RatVec> h_conjugate_to_inverse(const ExtTitsElem& g);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Every identity of the Tits group checked exhaustively over W, for the
/// untwisted extension and for each involutive diagram automorphism:
/// braid relations, sigma_a^2, sigma_w sigma_{w^-1}, sigma_w0^2 and its
/// centrality, theta0-fixedness of sigma_w0, C(sigma_w) = sigma_{w^-1}^-1,
/// C theta0 = theta0 C, and both parts of the C(g delta) lemma.
std::vector<CheckResult> tits_suite(const RootDatum& d);

/// {"mu":[..],"w":[..],"eps":e} style text.
std::string tits_str(const ExtTitsElem& a);

}  // namespace chevalley

#endif  // CHEVALLEY_TITS_HPP
