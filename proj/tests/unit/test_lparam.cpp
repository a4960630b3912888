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

#include <doctest.h>

#include <algorithm>
#include <functional>

#include "chevalley/lparam.hpp"
#include "chevalley/sample.hpp"
#include "support.hpp"

using namespace chevalley;
using support::gv;
using support::rv;

namespace {
LGroupPtr sl2() { return build_lgroup(build_datum("A1 sc"), "split"); }

LParam ds() {
  auto L = sl2();
  return make_param(L, gv({"1"}), rv({"0"}), L->weyl->generator(0));
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidSpec;
}

struct Config {
  const char* group;
  const char* inner;
};
const Config kConfigs[] = {{"A1 sc", "split"}, {"A1 ad", "split"}, {"GL(2)", "split"}, {"GL(3)", "split"},
                           {"A2 sc", "split"}, {"A2 sc", "compact"}, {"B2", "split"}, {"B2", "compact"},
                           {"G2", "split"},    {"A1xT1", "split"}, {"T1", "split"}, {"T1", "compact"}};
}  // namespace

TEST_CASE("validity examples") {
  auto L = sl2();
  CHECK_NOTHROW(ds());
  CHECK(kind_of([&] { make_param(L, gv({"1/2"}), rv({"0"}), L->weyl->generator(0)); }) == ErrorKind::ValidityE);
  auto verdicts = check_validity(L, gv({"1/2"}), rv({"0"}), L->weyl->generator(0));
  REQUIRE(verdicts.size() == 4);
  CHECK(verdicts[0].clause == "c'");
  CHECK(verdicts[0].ok);
  CHECK(verdicts[2].ok);
  CHECK(verdicts[3].clause == "e");
  CHECK_FALSE(verdicts[3].ok);
  for (const char* spec : {"A1 sc", "A2 sc", "B2", "GL(3)", "G2"}) {
    auto l = build_lgroup(build_datum(spec), "split");
    GaussVec zero(l->rank());
    CHECK_NOTHROW(make_param(l, zero, RatVec(l->rank()), l->weyl->identity()));
  }
}

TEST_CASE("clause failures are classified") {
  auto a2 = build_lgroup(build_datum("A2 sc"), "split");
  // s1 s2 is not a twisted involution for theta0 = 1.
  WeylElem c = a2->weyl->from_word({0, 1});
  CHECK(kind_of([&] { make_param(a2, gv({"0", "0"}), rv({"0", "0"}), c); }) == ErrorKind::ValidityC);
  auto L = sl2();
  CHECK(kind_of([&] { make_param(L, gv({"1/3"}), rv({"0"}), L->weyl->generator(0)); }) ==
        ErrorKind::ValidityIntegrality);
  CHECK(kind_of([&] { make_param(L, gv({"1", "2"}), rv({"0"}), L->weyl->generator(0)); }) == ErrorKind::RankMismatch);
}

TEST_CASE("clause (e) agrees with its closed form") {
  // phi(j)^2 has torus part (1 + theta^v) mu + (rho^v - w rho^v) / 2.
  for (const char* spec : {"A1 sc", "A1 ad", "A2 sc", "B2", "GL(2)"}) {
    CAPTURE(spec);
    auto L = build_lgroup(build_datum(spec), "split");
    const int n = L->rank();
    RatVec rc = support::oracle_rho_check(L->dual);
    for (const auto& w : L->weyl->elements()) {
      if (!weyl_mul(w, w).is_identity()) continue;
      IntMat th = w.matrix();
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          GaussVec lambda(n);
          RatVec mu(n);
          lambda[0] = Rational(a, 2);
          mu[0] = Rational(b, 4);
          if (n > 1) {
            lambda[1] = Rational(b, 2);
            mu[1] = Rational(a, 4);
          }
          auto v = check_validity(L, lambda, mu, w);
          if (!v[2].ok) continue;
          RatVec lhs = Rational(1, 2) * (real_part(lambda) - th * real_part(lambda));
          RatVec rhs = (IntMat::identity(n) + th) * mu + Rational(1, 2) * (rc - th * rc);
          CHECK(v[3].ok == is_integral(lhs - rhs));
        }
    }
  }
}

TEST_CASE("conjugation examples") {
  LParam p = ds();
  CHECK(params_equivalent(conjugate_param(p, rv({"0"})), p));
  CHECK(conjugate_param(p, rv({"0"})).mu == p.mu);
  CHECK(conjugate_param(p, p.L->weyl->identity()).lambda == p.lambda);
  LParam q = conjugate_param(p, rv({"1/4"}));
  CHECK(q.mu == rv({"1/2"}));
  CHECK(params_equivalent(p, q));

  LParam neg = make_param(p.L, gv({"-1"}), rv({"0"}), p.L->weyl->generator(0));
  CHECK(params_equivalent(p, neg));

  auto a2 = build_lgroup(build_datum("A2 sc"), "split");
  LParam ps = make_param(a2, gv({"1/3", "2/7"}), rv({"0", "0"}), a2->weyl->identity());
  WeylElem w0 = a2->weyl->longest_element();
  LParam moved = conjugate_param(ps, w0);
  CHECK(moved.lambda == w0.matrix() * ps.lambda);
  CHECK(moved.w.is_identity());
  LParam negp = make_param(a2, gv({"-1/3", "-2/7"}), rv({"0", "0"}), a2->weyl->identity());
  CHECK_FALSE(params_equivalent(ps, negp));
}

TEST_CASE("equivalence agrees with isomorphism of the GL(2) representation") {
  // A GL(2) parameter is a 2-dimensional W_R representation; read off its
  // isomorphism class directly from the matrices.
  //   w = e: phi(j) = diag(exp(2 pi i mu_k)) with mu_k in {0, 1/2}, so two characters.
  //   w = s, lambda_1 != lambda_2: the induced representation with k = |lambda_1 - lambda_2|.
  //   w = s, lambda_1 == lambda_2: phi(j) has eigenvalues +1 and -1.
  auto gl2 = build_lgroup(build_datum("GL(2)"), "split");
  auto key = [](const LParam& p) {
    std::vector<std::string> parts;
    if (p.w.is_identity()) {
      for (int k = 0; k < 2; ++k) parts.push_back("chi " + p.lambda[k].str() + " " + (Rational(2) * p.mu[k]).str());
    } else if (p.lambda[0] == p.lambda[1]) {
      parts = {"chi " + p.lambda[0].str() + " 0", "chi " + p.lambda[0].str() + " 1"};
    } else {
      Gaussian d = p.lambda[0] - p.lambda[1];
      if (d.re.sign() < 0) d = -d;
      parts.push_back("I " + d.str() + " " + (Rational(1, 2) * (p.lambda[0] + p.lambda[1])).str());
    }
    std::sort(parts.begin(), parts.end());
    return parts;
  };
  std::vector<LParam> fleet;
  for (const auto& w : gl2->weyl->elements())
    for (int a = -4; a <= 4; ++a)
      for (int b = -4; b <= 4; ++b)
        for (int m0 = 0; m0 < 4; ++m0)
          for (int m1 = 0; m1 < 4; ++m1) {
            GaussVec lambda{Rational(a, 2), Rational(b, 2)};
            RatVec mu{Rational(m0, 4), Rational(m1, 4)};
            auto v = check_validity(gl2, lambda, mu, w);
            if (std::all_of(v.begin(), v.end(), [](const ClauseVerdict& c) { return c.ok; }))
              fleet.push_back(make_param(gl2, lambda, mu, w));
          }
  REQUIRE(fleet.size() > 50);
  auto normal = [](const LParam& p) {
    try {
      levi_of(p);
      return true;
    } catch (const Error&) {
      return false;
    }
  };
  // Conjugacy through Norm(H^) and the torus is always sound. It is also
  // complete once both sides are normal; a singular w = s parameter is
  // conjugate to a diagonal one only outside the normalizer.
  int missed = 0;
  for (std::size_t i = 0; i < fleet.size(); ++i)
    for (std::size_t j = i; j < fleet.size(); ++j) {
      CAPTURE(param_str(fleet[i]));
      CAPTURE(param_str(fleet[j]));
      bool eq = params_equivalent(fleet[i], fleet[j]);
      bool iso = key(fleet[i]) == key(fleet[j]);
      if (eq) CHECK(iso);
      bool both_normal = normal(fleet[i]) && normal(fleet[j]);
      if (both_normal) CHECK(eq == iso);
      if (iso && !eq) {
        ++missed;
        CHECK_FALSE(both_normal);
      }
    }
  MESSAGE("isomorphic pairs not related by Norm(H^)-conjugacy (one side non-normal): " << missed);
  CHECK(missed > 0);
}

TEST_CASE("dominant representatives") {
  LParam p = ds();
  CHECK(dominant_representative(*p.L, gv({"-1"})) == gv({"1"}));
  auto gl2 = build_lgroup(build_datum("GL(2)"), "split");
  CHECK(dominant_representative(*gl2, gv({"0", "1"})) == gv({"1", "0"}));
  CHECK(dominant_representative(*gl2, gv({"i", "2i"})) == gv({"2i", "i"}));
}

TEST_CASE("infinitesimal character against the orbit oracle") {
  auto L = build_lgroup(build_datum("B2"), "split");
  ParamSampler s(L, 99);
  for (int k = 0; k < 60; ++k) {
    LParam p = s.next();
    auto orbit = support::oracle_orbit(L->dual, p.lambda);
    GaussVec ic = inf_char(p);
    CHECK(orbit.count(ic) == 1);
    for (const auto& v : orbit) CHECK(dominant_representative(*L, v) == ic);
  }
}

TEST_CASE("radical character examples") {
  auto gl2 = build_lgroup(build_datum("GL(2)"), "split");
  LParam p = make_param(gl2, gv({"1/2", "-1/2"}), rv({"0", "0"}), gl2->weyl->generator(0));
  TorusCharData rc = rad_char(p);
  REQUIRE(rc.lambda.size() == 1);
  CHECK(rc.lambda[0].is_zero());
  CHECK(is_zero(rc.kappa));
  CHECK(rad_char(ds()).lambda.empty());

  auto gl1 = build_lgroup(build_datum("T1"), "split");
  LParam t = make_param(gl1, gv({"1/3"}), rv({"1/2"}), gl1->weyl->identity());
  TorusCharData direct = param_to_char(make_torus_param(egroup_for(-gl1->theta0_co(), RatVec(1)), t.lambda, t.mu));
  CHECK(char_equal(rad_char(t), direct));
}

TEST_CASE("central character examples") {
  CentralChar c = central_char(ds());
  // tau = lambda + rho_i = 1 + 1 = 2 on X_*(H^) = Z, modulo the coroot lattice 2Z.
  CHECK(c.tau == rv({"2"}));
  CHECK(is_zero(c.canonical));
  auto L = sl2();
  CentralChar triv = central_char(make_param(L, gv({"0"}), rv({"0"}), L->weyl->identity()));
  CHECK(is_zero(triv.canonical));
}

TEST_CASE("central character is independent of the chamber") {
  for (const auto& cfg : kConfigs) {
    const std::string group = cfg.group;
    CAPTURE(group);
    auto L = build_lgroup(build_datum(cfg.group), cfg.inner);
    ParamSampler s(L, 5);
    for (int k = 0; k < 15; ++k) {
      LParam p = s.next();
      RatVec base = central_class(p, central_char(p).tau);
      for (const auto& u : L->weyl->elements()) CHECK(central_class(p, central_char(p, &u).tau) == base);
    }
  }
}

TEST_CASE("central character: the displayed formula in standard position") {
  for (const auto& cfg : kConfigs) {
    const std::string group = cfg.group;
    CAPTURE(group);
    auto L = build_lgroup(build_datum(cfg.group), cfg.inner);
    ParamSampler s(L, 12);
    for (int k = 0; k < 25; ++k) {
      LParam p = s.next_normal();
      LParam q = levi_of(p).param;
      CentralChar cq = central_char(q);
      CHECK(is_integral(cq.tau));
      CHECK(central_class(q, cq.tau) == central_char(p).canonical);
    }
  }
}

TEST_CASE("discrete series examples") {
  CHECK(is_discrete_series(ds()));
  auto a2 = build_lgroup(build_datum("A2 sc"), "split");
  CHECK_FALSE(is_discrete_series(make_param(a2, gv({"1", "1"}), rv({"0", "0"}), a2->weyl->identity())));
  // w0 is not -1 on A2, so no parameter with w = w0 is discrete.
  WeylElem w0 = a2->weyl->longest_element();
  int found = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      RatVec mu{Rational(a, 4), Rational(b, 4)};
      if (!check_validity(a2, gv({"1", "1"}), mu, w0)[3].ok) continue;
      ++found;
      CHECK_FALSE(is_discrete_series(make_param(a2, gv({"1", "1"}), mu, w0)));
    }
  CHECK(found > 0);
  ParamSampler sampler(a2, 1);
  for (int k = 0; k < 50; ++k) CHECK_FALSE(is_discrete_series(sampler.next()));
}

TEST_CASE("Levi reduction examples") {
  LeviReduction r = levi_of(ds());
  CHECK(r.levi.subset == std::vector<int>{0});
  CHECK(r.conjugator.is_identity());

  auto L = sl2();
  LeviReduction t = levi_of(make_param(L, gv({"0"}), rv({"0"}), L->weyl->identity()));
  CHECK(t.levi.subset.empty());

  auto gl2 = build_lgroup(build_datum("GL(2)"), "split");
  LeviReduction g = levi_of(make_param(gl2, gv({"1/3", "0"}), rv({"0", "0"}), gl2->weyl->identity()));
  CHECK(g.levi.subset.empty());

  CHECK(kind_of([&] { levi_of(make_param(gl2, gv({"1/2", "1/2"}), rv({"1/2", "0"}), gl2->weyl->generator(0))); }) ==
        ErrorKind::NormalizationRequired);
}

TEST_CASE("Levi reduction postconditions and discrete series") {
  for (const auto& cfg : kConfigs) {
    const std::string group = cfg.group;
    CAPTURE(group);
    const std::string inner = cfg.inner;
    CAPTURE(inner);
    auto L = build_lgroup(build_datum(cfg.group), cfg.inner);
    ParamSampler s(L, 17);
    for (int k = 0; k < 40; ++k) {
      LParam p = s.next_normal();
      LeviReduction r = levi_of(p);
      CHECK(is_theta0_stable(*L, r.levi.subset));
      CHECK(in_parabolic(r.param.w, r.levi.subset));
      CHECK(params_equivalent(p, r.param));
      CHECK(r.param.lambda == r.conjugator.matrix() * p.lambda);
      if (is_discrete_series(p)) CHECK(static_cast<int>(r.levi.subset.size()) == L->dual.num_simple());
    }
  }
}

TEST_CASE("conjugation preserves validity and equivalence") {
  for (const auto& cfg : kConfigs) {
    const std::string group = cfg.group;
    CAPTURE(group);
    auto L = build_lgroup(build_datum(cfg.group), cfg.inner);
    ParamSampler s(L, 23);
    Rng rng(4);
    const auto& els = L->weyl->elements();
    for (int k = 0; k < 25; ++k) {
      LParam p = s.next();
      RatVec nu(L->rank());
      for (auto& x : nu) x = rng.rational(2, 12);
      LParam q = conjugate_param(conjugate_param(p, nu), els[static_cast<std::size_t>(rng.uniform(0, els.size() - 1))]);
      CHECK(check_validity(L, q.lambda, q.mu, q.w)[3].ok);
      CHECK(params_equivalent(p, q));
      CHECK(params_equivalent(q, p));
      CHECK(inf_char(p) == inf_char(q));
      CHECK(central_char(p).canonical == central_char(q).canonical);
    }
  }
}

TEST_CASE("contragredient examples") {
  auto L = sl2();
  LParam triv = make_param(L, gv({"0"}), rv({"0"}), L->weyl->identity());
  LParam td = contragredient_param(triv);
  CHECK(td.lambda == triv.lambda);
  CHECK(td.mu == triv.mu);
  CHECK(td.w == triv.w);
  CHECK(tau_twist_param(triv).mu == triv.mu);

  LParam d = contragredient_param(ds());
  CHECK(d.lambda == gv({"-1"}));
  CHECK(d.w == ds().w);
  CHECK(params_equivalent(d, ds()));
  ContragredientReport r = verify_contragredient(ds());
  CHECK(r.all_passed());
  CHECK(r.checks.size() == 4);

  auto a2 = build_lgroup(build_datum("A2 sc"), "split");
  LParam ps = make_param(a2, gv({"1/3", "2/7"}), rv({"0", "0"}), a2->weyl->identity());
  ContragredientReport ra = verify_contragredient(ps);
  CHECK(ra.all_passed());
  CHECK_FALSE(ra.descriptor.inf_char == ra.dual_descriptor.inf_char);
}

TEST_CASE("contragredient closed form") {
  for (const auto& cfg : kConfigs) {
    const std::string group = cfg.group;
    CAPTURE(group);
    auto L = build_lgroup(build_datum(cfg.group), cfg.inner);
    RatVec rc = support::oracle_rho_check(L->dual);
    ParamSampler s(L, 8);
    for (int k = 0; k < 30; ++k) {
      LParam p = s.next();
      LParam d = contragredient_param(p);
      CHECK(d.lambda == -p.lambda);
      CHECK(d.w == p.w);
      CHECK(d.mu == mod_one(-p.mu + Rational(1, 2) * (rc - p.w.matrix() * rc)));
      CHECK(contragredient_param(d).mu == p.mu);
    }
  }
}

TEST_CASE("contragredient verification on sampled parameters") {
  for (const auto& cfg : kConfigs) {
    const std::string group = cfg.group;
    CAPTURE(group);
    const std::string inner = cfg.inner;
    CAPTURE(inner);
    auto L = build_lgroup(build_datum(cfg.group), cfg.inner);
    ParamSampler s(L, 31);
    for (int k = 0; k < 30; ++k) {
      LParam p = s.next_normal();
      ContragredientReport r = verify_contragredient(p);
      for (const auto& c : r.checks) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.passed);
      }
      CHECK(central_char(r.dual).canonical == central_class(p, -central_char(p).invariant));
    }
  }
}

TEST_CASE("sampler is deterministic") {
  auto L = build_lgroup(build_datum("B2"), "split");
  ParamSampler a(L, 77), b(L, 77);
  for (int k = 0; k < 20; ++k) CHECK(param_str(a.next()) == param_str(b.next()));
}

TEST_CASE("printing") { CHECK(param_str(ds()) == "lambda=(1) mu=(0) w=[1]"); }
