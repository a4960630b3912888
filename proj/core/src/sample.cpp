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

#include "chevalley/sample.hpp"

#include "chevalley/lattice.hpp"

namespace chevalley {

namespace {
constexpr int kMaxAttempts = 10000;
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

Rational Rng::rational(std::int64_t bound, std::int64_t max_den) {
  std::vector<std::int64_t> dens;
  for (std::int64_t q = 1; q <= max_den; ++q)
    if (max_den % q == 0) dens.push_back(q);
  std::int64_t q = dens[uniform(0, static_cast<std::int64_t>(dens.size()) - 1)];
  return Rational(uniform(-bound * q, bound * q), q);
}

ParamSampler::ParamSampler(LGroupPtr L, std::uint64_t seed, std::int64_t max_den)
    : L_(std::move(L)), rng_(seed), max_den_(max_den) {
  for (const auto& w : L_->weyl->elements())
    if (weyl_mul(w, apply_aut(L_->theta0, w)).is_identity()) twisted_involutions_.push_back(w);
}

LParam ParamSampler::next() {
  const int n = L_->rank();
  const IntMat one = IntMat::identity(n);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const WeylElem& w = twisted_involutions_[rng_.uniform(0, static_cast<std::int64_t>(twisted_involutions_.size()) - 1)];
    IntMat theta = w.matrix() * L_->theta0_co();
    // lambda = (1 + theta) x / 2 + y with y in (1/2) Z^n; the first term is
    // theta-fixed, so only y affects lambda - theta lambda.
    GaussVec x(n);
    bool small = rng_.uniform(0, 3) == 0;
    for (int i = 0; i < n; ++i) {
      Rational re = small ? Rational(rng_.uniform(-2, 2)) : rng_.rational(3, max_den_);
      Rational im = rng_.uniform(0, 3) == 0 ? rng_.rational(2, max_den_) : Rational(0);
      x[i] = Gaussian(re, im);
    }
    RatVec y(n);
    for (int i = 0; i < n; ++i) y[i] = Rational(rng_.uniform(-3, 3), 2);
    GaussVec lambda = Rational(1, 2) * ((one + theta) * x) + to_gauss(y);
    GaussVec diff = lambda - theta * lambda;
    if (!is_zero(imag_part(diff)) || !is_integral(real_part(diff))) {
      ++rejected_;
      continue;
    }
    // (e): (1 + theta) mu = ((lambda - theta lambda) - (rho^v - w rho^v)) / 2 mod Z^n.
    RatVec rho = L_->tits->rho_check;
    RatVec rhs = Rational(1, 2) * (real_part(diff) - (rho - w.matrix() * rho));
    auto mu0 = solve_mod_integers(one + theta, rhs);
    if (!mu0) {
      ++rejected_;
      continue;
    }
    RatVec nu(n), half(n);
    for (int i = 0; i < n; ++i) {
      nu[i] = rng_.rational(1, max_den_);
      half[i] = Rational(rng_.uniform(0, 1), 2);
    }
    RatVec mu = *mu0 + (one - theta) * nu;
    if (is_integral((one + theta) * half)) mu = mu + half;
    try {
      return make_param(L_, lambda, mu, w);
    } catch (const Error&) {
      ++rejected_;
    }
  }
  throw Error(ErrorKind::PreconditionViolated, "sampler exhausted its attempts");
}

LParam ParamSampler::next_normal() {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    LParam p = next();
    try {
      levi_of(p);
      return p;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NormalizationRequired) throw;
      ++rejected_;
    }
  }
  throw Error(ErrorKind::PreconditionViolated, "sampler exhausted its attempts");
}

}  // namespace chevalley
