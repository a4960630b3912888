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

#include "chevalley/tits.hpp"

#include "chevalley/lattice.hpp"

namespace chevalley {

namespace {

void require_same(const ExtTitsElem& a, const ExtTitsElem& b) {
  if (a.ctx == b.ctx) return;
  if (!a.ctx || !b.ctx || !(a.ctx->datum() == b.ctx->datum()) || !(a.ctx->theta0 == b.ctx->theta0))
    throw Error(ErrorKind::ContextMismatch, "Tits elements over different contexts");
}

RatVec half(const IntVec& v) { return Rational(1, 2) * to_rat(v); }

}  // namespace

TitsContextPtr make_tits_context(WeylGroupPtr weyl, std::optional<BasedAut> theta0) {
  auto ctx = std::make_shared<TitsContext>();
  const RootDatum& d = weyl->datum();
  ctx->theta0 = theta0 ? make_based_aut(d, theta0->matrix) : identity_aut(d);
  if (!(ctx->theta0.matrix * ctx->theta0.matrix == IntMat::identity(d.rank)))
    throw Error(ErrorKind::NotInvolution, "theta0 " + ctx->theta0.matrix.str() + " is not an involution");
  ctx->theta_co = ctx->theta0.on_cocharacters();
  ctx->rho_check = rho_check(d);
  ctx->weyl = std::move(weyl);
  return ctx;
}

TitsContextPtr make_tits_context(const RootDatum& d, std::optional<BasedAut> theta0) {
  return make_tits_context(WeylGroup::create(d), std::move(theta0));
}

ExtTitsElem make_tits(const TitsContextPtr& ctx, const RatVec& mu, const WeylElem& w, int eps) {
  if (static_cast<int>(mu.size()) != ctx->rank()) throw Error(ErrorKind::RankMismatch, "torus part has wrong length");
  if (!(w.datum() == ctx->datum())) throw Error(ErrorKind::ContextMismatch, "Weyl element over another datum");
  return {ctx, mod_one(mu), w, eps & 1};
}

ExtTitsElem tits_identity(const TitsContextPtr& ctx) {
  return {ctx, RatVec(ctx->rank()), ctx->weyl->identity(), 0};
}

ExtTitsElem tits_torus(const TitsContextPtr& ctx, const RatVec& mu) {
  return make_tits(ctx, mu, ctx->weyl->identity(), 0);
}

ExtTitsElem sigma(const TitsContextPtr& ctx, const WeylElem& w) { return make_tits(ctx, RatVec(ctx->rank()), w, 0); }

ExtTitsElem sigma_simple(const TitsContextPtr& ctx, int i) { return sigma(ctx, ctx->weyl->generator(i)); }

ExtTitsElem tits_delta(const TitsContextPtr& ctx) {
  return {ctx, RatVec(ctx->rank()), ctx->weyl->identity(), 1};
}

ExtTitsElem tits_mul(const ExtTitsElem& a, const ExtTitsElem& b) {
  require_same(a, b);
  const TitsContext& ctx = *a.ctx;
  const RootDatum& d = ctx.datum();
  // delta^eps1 exp(mu2) sigma_w2 = exp(theta mu2) sigma_theta(w2) delta^eps1.
  RatVec mu2 = b.mu;
  WeylElem w2 = b.w;
  if (a.eps) {
    mu2 = ctx.theta_co * mu2;
    w2 = apply_aut(ctx.theta0, w2);
  }
  RatVec mu = a.mu + a.w.matrix() * mu2;
  // sigma_w1 sigma_w2 letter by letter. If w = y s_i with l(y) < l(w) then
  // sigma_w sigma_i = sigma_y sigma_i^2 = exp(y a_i^v / 2) sigma_y.
  WeylElem cur = a.w;
  for (int i : w2.word()) {
    WeylElem next = weyl_mul(cur, ctx.weyl->generator(i));
    if (descent(cur, i)) mu = mu + next.matrix() * half(d.simple_coroots[i]);
    cur = std::move(next);
  }
  return {a.ctx, mod_one(mu), std::move(cur), (a.eps + b.eps) & 1};
}

ExtTitsElem tits_inverse(const ExtTitsElem& a) {
  const auto& ctx = a.ctx;
  const RootDatum& d = ctx->datum();
  // (exp(mu) sigma_w delta^e)^-1 = delta^e sigma_w^-1 exp(-mu), and
  // sigma_i^-1 = exp(a_i^v / 2) sigma_i.
  ExtTitsElem r = a.eps ? tits_delta(ctx) : tits_identity(ctx);
  const auto& word = a.w.word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    r = tits_mul(r, tits_torus(ctx, half(d.simple_coroots[*it])));
    r = tits_mul(r, sigma_simple(ctx, *it));
  }
  return tits_mul(r, tits_torus(ctx, -a.mu));
}

ExtTitsElem chevalley(const ExtTitsElem& a) {
  const auto& ctx = a.ctx;
  const RootDatum& d = ctx->datum();
  ExtTitsElem r = tits_torus(ctx, -a.mu);
  for (int i : a.w.word()) {
    r = tits_mul(r, tits_torus(ctx, half(d.simple_coroots[i])));
    r = tits_mul(r, sigma_simple(ctx, i));
  }
  if (a.eps) r = tits_mul(r, tits_delta(ctx));
  return r;
}

ExtTitsElem apply_theta0(const ExtTitsElem& a) {
  return {a.ctx, mod_one(a.ctx->theta_co * a.mu), apply_aut(a.ctx->theta0, a.w), a.eps};
}

TitsLemmaCheck check_titslemma(const TitsContextPtr& ctx, const WeylElem& w) {
  ExtTitsElem prod = tits_mul(sigma(ctx, w), sigma(ctx, weyl_inv(w)));
  TitsLemmaCheck out;
  out.lhs = prod.mu;
  out.rhs = mod_one(Rational(1, 2) * (ctx->rho_check - w.matrix() * ctx->rho_check));
  out.equal = prod.w.is_identity() && prod.eps == 0 && out.lhs == out.rhs;
  return out;
}

std::optional<RatVec> h_conjugate_to_inverse(const ExtTitsElem& g) {
  const auto& ctx = g.ctx;
  if (g.eps != 1) throw Error(ErrorKind::PreconditionViolated, "element has no delta component");
  if (!weyl_mul(g.w, apply_aut(ctx->theta0, g.w)).is_identity())
    throw Error(ErrorKind::PreconditionViolated, "w theta0(w) != e for w = " + word_str(g.w));
  ExtTitsElem c = chevalley(g);
  ExtTitsElem inv = tits_inverse(g);
  if (!(c.w == inv.w) || c.eps != inv.eps) return std::nullopt;
  // exp(nu) exp(mu_c) sigma_w delta exp(-nu) = exp(nu + mu_c - w theta0 nu) sigma_w delta.
  IntMat a = IntMat::identity(ctx->rank()) - g.w.matrix() * ctx->theta_co;
  return solve_mod_integers(a, inv.mu - c.mu);
}

std::string tits_str(const ExtTitsElem& a) {
  std::string s = "{\"mu\":[";
  for (std::size_t k = 0; k < a.mu.size(); ++k) s += (k ? ",\"" : "\"") + a.mu[k].str() + "\"";
  s += "],\"w\":" + word_str(a.w) + ",\"eps\":" + std::to_string(a.eps) + "}";
  return s;
}

}  // namespace chevalley

namespace chevalley {

namespace {

int braid_order(const RootDatum& d, int i, int j) {
  switch (dot(d.simple_roots[i], d.simple_coroots[j]) * dot(d.simple_roots[j], d.simple_coroots[i])) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    default: return 6;
  }
}

struct Tally {
  std::size_t ok = 0;
  std::size_t total = 0;
  std::string first_failure;

  void add(bool pass, const std::string& what) {
    ++total;
    if (pass) {
      ++ok;
    } else if (first_failure.empty()) {
      first_failure = what;
    }
  }

  CheckResult result(const std::string& name) const {
    std::string detail = std::to_string(ok) + "/" + std::to_string(total);
    if (!first_failure.empty()) detail += ", first failure at " + first_failure;
    return {name, ok == total, detail};
  }
};

std::vector<BasedAut> involutive_automorphisms(const RootDatum& d) {
  std::vector<BasedAut> out;
  for (const auto& a : diagram_automorphisms(d))
    if (a.matrix * a.matrix == IntMat::identity(d.rank)) out.push_back(a);
  return out;
}

}  // namespace

std::vector<CheckResult> tits_suite(const RootDatum& d) {
  auto weyl = WeylGroup::create(d);
  auto ctx = make_tits_context(weyl);
  const auto& elems = weyl->elements();
  const int m = d.num_simple();
  std::vector<CheckResult> out;

  Tally braid;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      int order = braid_order(d, i, j);
      ExtTitsElem left = tits_identity(ctx), right = tits_identity(ctx);
      for (int k = 0; k < order; ++k) {
        left = tits_mul(left, sigma_simple(ctx, k % 2 ? j : i));
        right = tits_mul(right, sigma_simple(ctx, k % 2 ? i : j));
      }
      braid.add(left == right, "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  out.push_back(braid.result("braid relations"));

  Tally square;
  for (int i = 0; i < m; ++i) {
    ExtTitsElem s = sigma_simple(ctx, i);
    square.add(tits_mul(s, s) == tits_torus(ctx, half(d.simple_coroots[i])), std::to_string(i + 1));
  }
  out.push_back(square.result("sigma_a^2 = a^v(-1)"));

  Tally lemma;
  for (const auto& w : elems) lemma.add(check_titslemma(ctx, w).equal, word_str(w));
  out.push_back(lemma.result("sigma_w sigma_{w^-1} = exp(pi i (rho^v - w rho^v))"));

  auto autos = involutive_automorphisms(d);
  if (m > 0) {
    WeylElem w0 = weyl->longest_element();
    ExtTitsElem s0 = sigma(ctx, w0);
    ExtTitsElem z = tits_mul(s0, s0);
    Tally central;
    central.add(z == tits_torus(ctx, ctx->rho_check), "square");
    for (const auto& a : autos) {
      auto actx = make_tits_context(weyl, a);
      ExtTitsElem za = make_tits(actx, z.mu, z.w, 0);
      ExtTitsElem delta = tits_delta(actx);
      central.add(tits_mul(za, delta) == tits_mul(delta, za), "delta");
      for (int i = 0; i < m; ++i) {
        ExtTitsElem s = sigma_simple(actx, i);
        central.add(tits_mul(za, s) == tits_mul(s, za), "sigma_" + std::to_string(i + 1));
      }
    }
    out.push_back(central.result("sigma_w0^2 = exp(2 pi i rho^v), central"));

    Tally fixed;
    for (const auto& a : autos) {
      auto actx = make_tits_context(weyl, a);
      fixed.add(apply_theta0(sigma(actx, w0)) == sigma(actx, w0), a.matrix.str());
    }
    out.push_back(fixed.result("theta0(sigma_w0) = sigma_w0"));
  }

  Tally lift;
  for (const auto& w : elems)
    lift.add(chevalley(sigma(ctx, w)) == tits_inverse(sigma(ctx, weyl_inv(w))), word_str(w));
  out.push_back(lift.result("C(sigma_w) = (sigma_{w^-1})^-1"));

  Tally commute, involution, lemma_a, lemma_b;
  for (const auto& a : autos) {
    auto actx = make_tits_context(weyl, a);
    for (const auto& w : elems) {
      for (int eps = 0; eps < 2; ++eps) {
        RatVec mu(d.rank);
        for (int i = 0; i < d.rank; ++i) mu[i] = Rational((i + 1) * (w.length() + 1), 2 * d.rank + 1);
        ExtTitsElem g = make_tits(actx, mu, w, eps);
        commute.add(chevalley(apply_theta0(g)) == apply_theta0(chevalley(g)), tits_str(g));
        involution.add(chevalley(chevalley(g)) == g, tits_str(g));
      }
      if (!weyl_mul(w, apply_aut(a, w)).is_identity()) continue;
      ExtTitsElem gd = make_tits(actx, RatVec(d.rank), w, 1);
      if (a.is_identity()) lemma_a.add(chevalley(gd) == tits_inverse(gd), word_str(w));
      for (int shift = 0; shift < 3; ++shift) {
        RatVec mu(d.rank);
        for (int i = 0; i < d.rank; ++i) mu[i] = Rational(shift * (i + 1), 3 + i);
        ExtTitsElem g = make_tits(actx, mu, w, 1);
        auto nu = h_conjugate_to_inverse(g);
        bool ok = false;
        if (nu) {
          ExtTitsElem conj = tits_mul(tits_mul(tits_torus(actx, *nu), chevalley(g)), tits_torus(actx, -*nu));
          ok = conj == tits_inverse(g);
        }
        lemma_b.add(ok, tits_str(g));
      }
    }
  }
  out.push_back(commute.result("C theta0 = theta0 C"));
  out.push_back(involution.result("C^2 = 1"));
  out.push_back(lemma_a.result("C(sigma_w delta) = (sigma_w delta)^-1 for w^2 = e"));
  out.push_back(lemma_b.result("C(g delta) is H-conjugate to (g delta)^-1"));
  return out;
}

}  // namespace chevalley
