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
// Genuine characters of gamma-covers of real tori and their E-group parameters.
//
// theta acts on X^*(H) = Z^n; the dual involution on X_*(H^) = Z^n is
// theta^v = -theta (the identification X^*(H) = X_*(H^) is the identity).
// A parameter phi(z) = z^lambda zbar^{theta^v lambda}, phi(j) = exp(2 pi i mu) delta
// has kappa = (1 - theta^v) lambda / 2 - (1 + theta^v) mu.

#ifndef CHEVALLEY_TORUS_HPP
#define CHEVALLEY_TORUS_HPP

#include "chevalley/matrix.hpp"

namespace chevalley {

/// NotInvolution unless theta is square with theta^2 = 1.
void check_involution(const IntMat& theta);

struct TorusCharData {
  IntMat theta;
  GaussVec lambda;
  RatVec kappa;
  RatVec gamma;
};

/// Validates (1 + theta) lambda = (1 + theta) kappa and kappa - gamma integral.
TorusCharData make_char_data(const IntMat& theta, const GaussVec& lambda, const RatVec& kappa, const RatVec& gamma);

struct EGroup {
  IntMat theta_check;
  /// delta^2 = exp(2 pi i gamma).
  RatVec gamma;
};

/// The E-group of the real torus with involution theta on X^*(H).
EGroup egroup_for(const IntMat& theta, const RatVec& gamma);

struct TorusParam {
  EGroup egroup;
  GaussVec lambda;
  RatVec mu;  // entries in [0, 1)
};

/// InvalidParam when lambda - theta^v lambda is not integral or kappa is not in gamma + Z^n.
TorusParam make_torus_param(const EGroup& e, const GaussVec& lambda, const RatVec& mu);

/// (1 - theta^v) lambda / 2 - (1 + theta^v) mu, a rational vector for valid data.
RatVec torus_kappa(const IntMat& theta_check, const GaussVec& lambda, const RatVec& mu);

/// Same theta and gamma required (ContextMismatch). Equal lambda and
/// kappa_1 - kappa_2 in (1 - theta) Z^n.
bool char_equal(const TorusCharData& a, const TorusCharData& b);

TorusCharData param_to_char(const TorusParam& p);
TorusParam torus_contragredient(const TorusParam& p);
/// Equal lambda and mu_1 - mu_2 in (1 - theta^v) Q^n + Z^n.
bool torus_params_conjugate(const TorusParam& a, const TorusParam& b);

}  // namespace chevalley

#endif  // CHEVALLEY_TORUS_HPP
