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

#include <random>

#include "chevalley/weilrep.hpp"
#include "support.hpp"

using namespace chevalley;
using support::gv;
using support::rv;

namespace {
WeilRep R(const char* s) { return parse_weilrep(s); }

WeilRep random_rep(std::mt19937_64& g) {
  WeilRep out;
  int pieces = 1 + static_cast<int>(g() % 3);
  for (int k = 0; k < pieces; ++k) {
    Gaussian t(Rational(static_cast<std::int64_t>(g() % 9) - 4, 4), Rational(static_cast<std::int64_t>(g() % 5) - 2, 3));
    if (g() % 2)
      out = weil_sum(out, WeilRep({weil_chi(t, static_cast<int>(g() % 2))}));
    else
      out = weil_sum(out, weil_induced_rep(static_cast<int>(g() % 4), t));
  }
  return out;
}
}  // namespace

TEST_CASE("parsing and printing") {
  CHECK(weil_str(R("chi(0,0)")) == "chi(0,0)");
  CHECK(weil_str(R("I(1,0)")) == "I(1,0)");
  CHECK(R("I(-2,1/2)") == R("I(2,1/2)"));
  CHECK(R("I(0,1)") == R("chi(1,0)+chi(1,1)"));
  CHECK(R("chi(-1,1) + chi(1,0)") == R("chi(1,0)+chi(-1,1)"));
  CHECK(R("chi(1/2+3/4i,0)").summands()[0].t == Gaussian(Rational(1, 2), Rational(3, 4)));
  for (const char* s : {"chi(1/2,1)+I(3,-1/2i)", "I(1,0)+I(1,0)", "chi(2i,0)"}) CHECK(R(weil_str(R(s)).c_str()) == R(s));
  for (const char* bad : {"", "chi(0)", "chi(0,2)", "J(1,0)", "I(x,0)", "chi(0,0)+", "chi((0,0)", "I(1,0"})
    CHECK_THROWS_AS(parse_weilrep(bad), Error);
  CHECK(R("I(2,0)+chi(0,1)").dim() == 3);
}

TEST_CASE("dual examples") {
  CHECK(weil_dual(R("chi(0,0)")) == R("chi(0,0)"));
  CHECK(weil_dual(R("I(1,0)")) == R("I(1,0)"));
  CHECK(weil_dual(R("chi(1,0)+chi(-1,1)")) == R("chi(-1,0)+chi(1,1)"));
}

TEST_CASE("hermitian dual examples") {
  CHECK(weil_hermitian_dual(R("chi(2i,1)+I(3,-i)")) == R("chi(2i,1)+I(3,-i)"));
  CHECK(weil_hermitian_dual(R("chi(1/2,0)")) == R("chi(-1/2,0)"));
  CHECK_FALSE(weil_is_hermitian(R("chi(1/2,0)")));
  CHECK_FALSE(weil_is_unitary(R("chi(1/2,0)")));
  CHECK(weil_is_hermitian(R("I(2,3i)")));
  CHECK(weil_is_unitary(R("I(2,3i)")));
  CHECK(weil_is_hermitian(R("chi(1/2,0)+chi(-1/2,0)")));
  CHECK_FALSE(weil_is_unitary(R("chi(1/2,0)+chi(-1/2,0)")));
}

TEST_CASE("involution properties on random representations") {
  std::mt19937_64 g(500);
  for (int k = 0; k < 500; ++k) {
    WeilRep r = random_rep(g);
    CHECK(weil_hermitian_dual(weil_hermitian_dual(r)) == r);
    CHECK(weil_dual(weil_dual(r)) == r);
    CHECK(weil_dual(r).dim() == r.dim());
    // Dual and hermitian dual commute.
    CHECK(weil_dual(weil_hermitian_dual(r)) == weil_hermitian_dual(weil_dual(r)));
    if (weil_is_unitary(r)) CHECK(weil_is_hermitian(r));
  }
}

TEST_CASE("infinitesimal character examples") {
  CHECK(weil_inf_char(R("I(1,0)")) == std::vector<Gaussian>{Rational(-1, 2), Rational(1, 2)});
  CHECK(weil_inf_char(R("chi(0,0)")) == std::vector<Gaussian>{Gaussian(0)});
  CHECK(weil_inf_char(R("I(2,1/2)")) == std::vector<Gaussian>{Rational(-1, 2), Rational(3, 2)});
}

TEST_CASE("parameters attached to representations") {
  LParam triv = weil_to_lparam(R("chi(0,0)"));
  CHECK(triv.lambda == gv({"0"}));
  CHECK(is_zero(triv.mu));

  LParam d = weil_to_lparam(R("I(1,0)"));
  CHECK(d.lambda == gv({"1/2", "-1/2"}));
  CHECK(word_str(d.w) == "[1]");
  CHECK(is_discrete_series(d));

  LParam two = weil_to_lparam(R("chi(0,0)+chi(0,1)"));
  CHECK(two.w.is_identity());
  CHECK(two.mu == rv({"0", "1/2"}));

  try {
    weil_to_lparam(R("I(1,0)"), 3);
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
}

TEST_CASE("duality is compatible with the contragredient parameter") {
  std::mt19937_64 g(41);
  for (int k = 0; k < 150; ++k) {
    WeilRep r = random_rep(g);
    if (r.dim() > 4) continue;
    LParam p = weil_to_lparam(r);
    LParam q = weil_to_lparam(weil_dual(r));
    CHECK(params_equivalent(contragredient_param(p), q));
    CHECK(inf_char(p) == dominant_representative(*p.L, [&] {
            auto ic = weil_inf_char(r);
            return GaussVec(ic.begin(), ic.end());
          }()));
  }
}
