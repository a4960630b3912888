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

#include "chevalley/torus.hpp"

#include "chevalley/lattice.hpp"

namespace chevalley {

void check_involution(const IntMat& theta) {
  if (!theta.is_square()) throw Error(ErrorKind::NotInvolution, "involution must be square");
  if (!(theta * theta == IntMat::identity(theta.rows())))
    throw Error(ErrorKind::NotInvolution, theta.str() + " does not square to the identity");
}

TorusCharData make_char_data(const IntMat& theta, const GaussVec& lambda, const RatVec& kappa, const RatVec& gamma) {
  check_involution(theta);
  const int n = theta.rows();
  if (static_cast<int>(lambda.size()) != n || static_cast<int>(kappa.size()) != n || static_cast<int>(gamma.size()) != n)
    throw Error(ErrorKind::RankMismatch, "character data of wrong length");
  IntMat one_plus = IntMat::identity(n) + theta;
  if (!(one_plus * lambda == one_plus * to_gauss(kappa)))
    throw Error(ErrorKind::InvalidParam, "(1+theta) lambda != (1+theta) kappa");
  if (!is_integral(kappa - gamma)) throw Error(ErrorKind::InvalidParam, "kappa - gamma is not integral");
  return {theta, lambda, kappa, gamma};
}

EGroup egroup_for(const IntMat& theta, const RatVec& gamma) {
  check_involution(theta);
  if (static_cast<int>(gamma.size()) != theta.rows()) throw Error(ErrorKind::RankMismatch, "gamma has wrong length");
  if (!is_integral(Rational(2) * gamma)) throw Error(ErrorKind::InvalidParam, "gamma must lie in (1/2) Z^n");
  IntMat check = -theta;
  if (!is_integral(gamma - check * gamma))
    throw Error(ErrorKind::InvalidParam, "delta^2 = exp(2 pi i gamma) is not fixed by theta^v");
  return {check, gamma};
}

RatVec torus_kappa(const IntMat& theta_check, const GaussVec& lambda, const RatVec& mu) {
  const int n = theta_check.rows();
  IntMat one = IntMat::identity(n);
  GaussVec half_diff = Rational(1, 2) * ((one - theta_check) * lambda);
  if (!is_zero(imag_part(half_diff)))
    throw Error(ErrorKind::InvalidParam, "lambda - theta^v lambda is not real");
  return real_part(half_diff) - (one + theta_check) * mu;
}

TorusParam make_torus_param(const EGroup& e, const GaussVec& lambda, const RatVec& mu) {
  const int n = e.theta_check.rows();
  if (static_cast<int>(lambda.size()) != n || static_cast<int>(mu.size()) != n)
    throw Error(ErrorKind::RankMismatch, "torus parameter of wrong length");
  GaussVec diff = lambda - e.theta_check * lambda;
  if (!is_zero(imag_part(diff)) || !is_integral(real_part(diff)))
    throw Error(ErrorKind::InvalidParam, "lambda - theta^v lambda = " + vec_str(diff) + " is not integral");
  RatVec kappa = torus_kappa(e.theta_check, lambda, mu);
  if (!is_integral(kappa - e.gamma))
    throw Error(ErrorKind::InvalidParam, "kappa = " + vec_str(kappa) + " is not in gamma + Z^n");
  return {e, lambda, mod_one(mu)};
}

bool char_equal(const TorusCharData& a, const TorusCharData& b) {
  if (!(a.theta == b.theta) || a.gamma != b.gamma)
    throw Error(ErrorKind::ContextMismatch, "characters of different covers");
  if (a.lambda != b.lambda) return false;
  IntMat one_minus = IntMat::identity(a.theta.rows()) - a.theta;
  return in_integer_image(one_minus, a.kappa - b.kappa);
}

TorusCharData param_to_char(const TorusParam& p) {
  IntMat theta = -p.egroup.theta_check;
  return make_char_data(theta, p.lambda, torus_kappa(p.egroup.theta_check, p.lambda, p.mu), p.egroup.gamma);
}

TorusParam torus_contragredient(const TorusParam& p) { return make_torus_param(p.egroup, -p.lambda, -p.mu); }

bool torus_params_conjugate(const TorusParam& a, const TorusParam& b) {
  if (!(a.egroup.theta_check == b.egroup.theta_check) || a.egroup.gamma != b.egroup.gamma)
    throw Error(ErrorKind::ContextMismatch, "parameters for different E-groups");
  if (a.lambda != b.lambda) return false;
  IntMat one_minus = IntMat::identity(a.egroup.theta_check.rows()) - a.egroup.theta_check;
  return solve_mod_integers(one_minus, b.mu - a.mu).has_value();
}

}  // namespace chevalley
