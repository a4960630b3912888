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

#include "chevalley/lparam.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "chevalley/lattice.hpp"

namespace chevalley {

namespace {

bool lex_negative(const Gaussian& g) { return g.re.sign() < 0 || (g.re.is_zero() && g.im.sign() < 0); }

void require_shapes(const LGroupPtr& L, const GaussVec& lambda, const RatVec& mu, const WeylElem& w) {
  if (static_cast<int>(lambda.size()) != L->rank() || static_cast<int>(mu.size()) != L->rank())
    throw Error(ErrorKind::RankMismatch, "parameter vectors must have length " + std::to_string(L->rank()));
  if (!w.group() || !(w.datum() == L->dual)) throw Error(ErrorKind::ContextMismatch, "Weyl element not in the dual Weyl group");
}

void require_same_group(const LParam& p, const LParam& q) {
  if (p.L == q.L) return;
  if (!(p.L->dual == q.L->dual) || !(p.L->theta0 == q.L->theta0))
    throw Error(ErrorKind::ContextMismatch, "parameters for different L-groups");
}

}  // namespace

std::vector<ClauseVerdict> check_validity(const LGroupPtr& L, const GaussVec& lambda, const RatVec& mu, const WeylElem& w) {
  require_shapes(L, lambda, mu, w);
  std::vector<ClauseVerdict> out;
  const int n = L->rank();

  WeylElem twisted = weyl_mul(w, apply_aut(L->theta0, w));
  ClauseVerdict cp{"c'", twisted.is_identity(), "w theta0(w) = " + word_str(twisted)};
  out.push_back(cp);

  IntMat theta = w.matrix() * L->theta0_co();
  bool inv = theta * theta == IntMat::identity(n);
  out.push_back({"c", inv, "theta = " + theta.str()});

  GaussVec diff = lambda - theta * lambda;
  bool integral = is_zero(imag_part(diff)) && is_integral(real_part(diff));
  out.push_back({"integrality", integral, "lambda - theta lambda = " + vec_str(diff)});

  ClauseVerdict e{"e", false, "skipped"};
  if (cp.ok && inv && integral) {
    ExtTitsElem g = make_tits(L->tits, mu, w, 1);
    ExtTitsElem sq = tits_mul(g, g);
    RatVec rhs = mod_one(Rational(1, 2) * real_part(diff));
    e.ok = sq.w.is_identity() && sq.eps == 0 && sq.mu == rhs;
    e.detail = "phi(j)^2 = exp(2 pi i " + vec_str(sq.mu) + "), phi(-1) = exp(2 pi i " + vec_str(rhs) + ")";
  }
  out.push_back(e);
  return out;
}

LParam make_param(const LGroupPtr& L, const GaussVec& lambda, const RatVec& mu, const WeylElem& w) {
  auto verdicts = check_validity(L, lambda, mu, w);
  if (!verdicts[0].ok) throw Error(ErrorKind::ValidityC, "clause (c') fails: " + verdicts[0].detail);
  if (!verdicts[1].ok) throw Error(ErrorKind::ValidityC, "clause (c) fails: " + verdicts[1].detail);
  if (!verdicts[2].ok) throw Error(ErrorKind::ValidityIntegrality, verdicts[2].detail + " is not integral");
  if (!verdicts[3].ok) throw Error(ErrorKind::ValidityE, "clause (e) fails: " + verdicts[3].detail);
  return {L, lambda, mod_one(mu), w, w.matrix() * L->theta0_co()};
}

LParam param_from_phi(const LGroupPtr& L, const GaussVec& lambda, const ExtTitsElem& phi_j) {
  if (phi_j.eps != 1) throw Error(ErrorKind::InvalidParam, "phi(j) must lie in the non-identity component");
  return make_param(L, lambda, phi_j.mu, phi_j.w);
}

LParam conjugate_param(const LParam& p, const RatVec& nu) {
  if (static_cast<int>(nu.size()) != p.L->rank()) throw Error(ErrorKind::RankMismatch, "torus element has wrong length");
  return make_param(p.L, p.lambda, p.mu + (IntMat::identity(p.L->rank()) - p.theta_check) * nu, p.w);
}

LParam conjugate_param(const LParam& p, const WeylElem& u) {
  if (!(u.datum() == p.L->dual)) throw Error(ErrorKind::ContextMismatch, "conjugator not in the dual Weyl group");
  const auto& ctx = p.L->tits;
  ExtTitsElem s = sigma(ctx, u);
  ExtTitsElem phi = tits_mul(tits_mul(s, p.phi_j()), tits_inverse(s));
  return param_from_phi(p.L, u.matrix() * p.lambda, phi);
}

bool params_equivalent(const LParam& p, const LParam& q) {
  require_same_group(p, q);
  for (const auto& u : p.L->weyl->elements()) {
    if (!(u.matrix() * p.lambda == q.lambda)) continue;
    LParam c = conjugate_param(p, u);
    if (!(c.w == q.w)) continue;
    IntMat a = IntMat::identity(p.L->rank()) - c.theta_check;
    if (solve_mod_integers(a, q.mu - c.mu)) return true;
  }
  return false;
}

GaussVec dominant_representative(const LGroup& l, const GaussVec& v) {
  const RootDatum& d = l.dual;
  std::vector<IntMat> refl;
  for (int i = 0; i < d.num_simple(); ++i) refl.push_back(reflection_on_cocharacters(d, i));
  GaussVec x = v;
  for (;;) {
    int found = -1;
    for (int i = 0; i < d.num_simple(); ++i)
      if (lex_negative(dot(d.simple_roots[i], x))) {
        found = i;
        break;
      }
    if (found < 0) return x;
    x = refl[found] * x;
  }
}

GaussVec inf_char(const LParam& p) { return dominant_representative(*p.L, p.lambda); }

TorusParam rad_param_for_subset(const LParam& p, const std::vector<int>& subset) {
  const int n = p.L->rank();
  std::vector<IntVec> cols;
  for (int i : subset) cols.push_back(p.L->dual.simple_coroots.at(i));
  SaturationQuotient q = saturation_quotient(n, cols);
  IntMat theta_rad = q.projection * p.theta_check * q.section;
  if (!(theta_rad * q.projection == q.projection * p.theta_check))
    throw Error(ErrorKind::PreconditionViolated, "theta does not preserve the coroots of " + levi_str({subset}));
  EGroup e = egroup_for(-theta_rad, RatVec(q.quotient_rank()));
  return make_torus_param(e, q.projection * p.lambda, q.projection * p.mu);
}

TorusParam rad_param(const LParam& p) {
  std::vector<int> all(p.L->dual.num_simple());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return rad_param_for_subset(p, all);
}

TorusCharData rad_char(const LParam& p) { return param_to_char(rad_param(p)); }

namespace {

IntMat central_lattice(const LParam& p) {
  const int n = p.L->rank();
  std::vector<IntVec> gens = p.L->dual.simple_coroots;
  IntMat one_plus = IntMat::identity(n) + p.theta_check;
  for (int c = 0; c < n; ++c) gens.push_back(one_plus.col(c));
  return hermite_rows(IntMat::from_rows(n, gens));
}

}  // namespace

RatVec central_class(const LParam& p, const RatVec& x) { return reduce_modulo(x, central_lattice(p)); }

CentralChar central_char(const LParam& p, const WeylElem* chamber) {
  const int n = p.L->rank();
  IntMat one = IntMat::identity(n);
  IntVec functional = p.L->weyl->two_rho();
  if (chamber) functional = chamber->char_matrix() * functional;
  IntVec two_rho_i(n, 0);
  for (const auto& c : positive_coroots(p.L->dual)) {
    if (!(p.theta_check * c == -c)) continue;
    two_rho_i = two_rho_i + (dot(functional, c) > 0 ? c : -c);
  }
  GaussVec half_diff = Rational(1, 2) * ((one - p.theta_check) * p.lambda);
  RatVec tau = real_part(half_diff) - (one + p.theta_check) * p.mu + Rational(1, 2) * to_rat(two_rho_i);
  const RatVec& rc = p.L->tits->rho_check;
  CentralChar out;
  out.tau = tau;
  out.invariant = tau - Rational(1, 2) * to_rat(two_rho_i) - Rational(1, 2) * (rc - p.w.matrix() * rc);
  out.lattice = central_lattice(p);
  out.canonical = reduce_modulo(out.invariant, out.lattice);
  return out;
}

bool is_discrete_series(const LParam& p) {
  const RootDatum& d = p.L->dual;
  GaussVec tl = p.theta_check * p.lambda;
  for (int i = 0; i < d.num_simple(); ++i)
    if (!(p.theta_check * d.simple_coroots[i] == -d.simple_coroots[i])) return false;
  for (const auto& a : positive_system(d).roots) {
    Gaussian x = dot(a, p.lambda);
    if (x.is_zero() && dot(a, tl).is_zero()) return false;  // a root of S^
    if (x.is_zero()) return false;                          // singular lambda
  }
  return true;
}

std::vector<IntVec> s_roots(const LParam& p) {
  GaussVec tl = p.theta_check * p.lambda;
  std::vector<IntVec> out;
  for (const auto& a : positive_system(p.L->dual).roots)
    if (dot(a, p.lambda).is_zero() && dot(a, tl).is_zero()) out.push_back(a);
  return out;
}

bool in_parabolic(const WeylElem& w, const std::vector<int>& subset) {
  for (int i : w.word())
    if (std::find(subset.begin(), subset.end(), i) == subset.end()) return false;
  return true;
}

LeviReduction levi_of(const LParam& p) {
  const RootDatum& d = p.L->dual;
  const int n = d.rank;
  IntMat theta_chars = p.theta_check.transpose();
  for (const auto& a : s_roots(p))
    if (theta_chars * a == -a)
      throw Error(ErrorKind::NormalizationRequired,
                  "root " + vec_str(a) + " of the centralizer is real for theta; a Cayley transform would be needed");
  PositiveSystem ps = positive_system(d);
  std::map<IntVec, std::size_t> index;
  for (std::size_t k = 0; k < ps.roots.size(); ++k) {
    index[ps.roots[k]] = k;
    index[-ps.roots[k]] = k;
  }
  auto fixed = rational_kernel(IntMat::identity(n) - p.theta_check);
  std::vector<IntVec> levi_roots;
  for (const auto& a : ps.roots) {
    bool vanishes = true;
    for (const auto& v : fixed)
      if (!dot(a, v).is_zero()) {
        vanishes = false;
        break;
      }
    if (vanishes) levi_roots.push_back(a);
  }
  for (const auto& u : p.L->weyl->elements()) {
    std::set<int> support;
    for (const auto& a : levi_roots) {
      const IntVec& coeff = ps.coefficients[index.at(u.char_matrix() * a)];
      for (int i = 0; i < d.num_simple(); ++i)
        if (coeff[i] != 0) support.insert(i);
    }
    std::vector<int> subset(support.begin(), support.end());
    if (!is_theta0_stable(*p.L, subset)) continue;
    std::size_t count = 0;
    for (const auto& coeff : ps.coefficients) {
      bool inside = true;
      for (int i = 0; i < d.num_simple(); ++i)
        if (coeff[i] != 0 && !support.count(i)) inside = false;
      count += inside;
    }
    if (count != levi_roots.size()) continue;
    LParam q = conjugate_param(p, u);
    if (!in_parabolic(q.w, subset)) continue;
    return {StandardLevi{subset}, u, q};
  }
  throw Error(ErrorKind::PreconditionViolated, "no standard Levi found for " + param_str(p));
}

LParam contragredient_param(const LParam& p) { return param_from_phi(p.L, -p.lambda, chevalley(p.phi_j())); }

LParam tau_twist_param(const LParam& p) { return param_from_phi(p.L, -p.lambda, tits_inverse(p.phi_j())); }

PacketDescriptor packet_descriptor(const LParam& p) {
  LeviReduction r = levi_of(p);
  return {r.levi, inf_char(p), param_to_char(rad_param_for_subset(r.param, r.levi.subset))};
}

bool ContragredientReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

ContragredientReport verify_contragredient(const LParam& p) {
  LParam dual = contragredient_param(p);
  LParam twisted = tau_twist_param(p);
  PacketDescriptor desc = packet_descriptor(p);
  PacketDescriptor dual_desc = packet_descriptor(dual);
  ContragredientReport r{dual, twisted, desc, dual_desc, {}};

  GaussVec expected_inf = dominant_representative(*p.L, -inf_char(p));
  GaussVec got_inf = inf_char(dual);
  r.checks.push_back({"inf_char", got_inf == expected_inf,
                      "inf_char(C.phi) = " + vec_str(got_inf) + ", dominant(-inf_char(phi)) = " + vec_str(expected_inf)});

  TorusCharData got_rad = rad_char(dual);
  TorusCharData expected_rad = param_to_char(torus_contragredient(rad_param(p)));
  r.checks.push_back({"rad_char", char_equal(got_rad, expected_rad),
                      "lambda = " + vec_str(got_rad.lambda) + ", kappa = " + vec_str(got_rad.kappa) +
                          " vs lambda = " + vec_str(expected_rad.lambda) + ", kappa = " + vec_str(expected_rad.kappa)});

  bool eq = params_equivalent(dual, twisted);
  r.checks.push_back({"conjugacy", eq, "C.phi: " + param_str(dual) + "; phi.tau: " + param_str(twisted)});

  CentralChar cp = central_char(p);
  CentralChar cd = central_char(dual);
  RatVec negated = central_class(p, -cp.invariant);
  r.checks.push_back({"central_char", cd.canonical == negated,
                      "class(C.phi) = " + vec_str(cd.canonical) + ", -class(phi) = " + vec_str(negated)});
  return r;
}

std::string param_str(const LParam& p) {
  return "lambda=" + vec_str(p.lambda) + " mu=" + vec_str(p.mu) + " w=" + word_str(p.w);
}

}  // namespace chevalley
