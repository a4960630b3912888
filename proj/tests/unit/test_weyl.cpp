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

#include <map>

#include "chevalley/weyl.hpp"
#include "support.hpp"

using namespace chevalley;

namespace {
WeylElem w_of(const WeylGroupPtr& w, std::vector<int> one_based) {
  for (int& i : one_based) --i;
  return w->from_word(one_based);
}
}  // namespace

TEST_CASE("multiplication examples") {
  auto a2 = WeylGroup::create(build_datum("A2 sc"));
  CHECK(weyl_mul(w_of(a2, {1}), w_of(a2, {1})).is_identity());
  WeylElem x = weyl_mul(w_of(a2, {1, 2}), w_of(a2, {1}));
  CHECK(word_str(x) == "[1,2,1]");
  CHECK(x == weyl_mul(w_of(a2, {2, 1}), w_of(a2, {2})));

  auto b2 = WeylGroup::create(build_datum("B2"));
  WeylElem c = w_of(b2, {1, 2});
  WeylElem p = c;
  for (int k = 0; k < 3; ++k) p = weyl_mul(p, c);
  CHECK(p.is_identity());
}

TEST_CASE("longest element examples") {
  CHECK(word_str(WeylGroup::create(build_datum("A1 sc"))->longest_element()) == "[1]");
  CHECK(word_str(WeylGroup::create(build_datum("A2 sc"))->longest_element()) == "[1,2,1]");
  CHECK(WeylGroup::create(build_datum("G2"))->longest_element().length() == 6);
  try {
    WeylGroup::create(build_datum("T1"))->longest_element();
    FAIL("expected NoRoots");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoRoots);
  }
}

TEST_CASE("descent examples") {
  auto a2 = WeylGroup::create(build_datum("A2 sc"));
  for (int i = 0; i < 2; ++i) CHECK_FALSE(descent(a2->identity(), i));
  CHECK(descent(w_of(a2, {1, 2, 1}), 0));
  CHECK_FALSE(descent(w_of(a2, {1, 2}), 0));
  auto a1 = WeylGroup::create(build_datum("A1 sc"));
  CHECK(descent(a1->generator(0), 0));
}

TEST_CASE("group orders") {
  CHECK(WeylGroup::create(build_datum("A1 sc"))->order() == 2);
  CHECK(WeylGroup::create(build_datum("A2 sc"))->order() == 6);
  CHECK(WeylGroup::create(build_datum("B2"))->order() == 8);
  CHECK(WeylGroup::create(build_datum("G2"))->order() == 12);
  CHECK(WeylGroup::create(build_datum("A3"))->order() == 24);
  CHECK(WeylGroup::create(build_datum("B3"))->order() == 48);
  CHECK(WeylGroup::create(build_datum("D4"))->order() == 192);
  CHECK(WeylGroup::create(build_datum("T1"))->order() == 1);
}

TEST_CASE("exhaustive comparison with the matrix oracle in rank <= 3") {
  for (const char* spec : {"A1 sc", "A2 sc", "B2", "C2", "G2", "A3", "B3", "C3 ad", "A1xA1", "GL(3)", "A1xT1"}) {
    CAPTURE(spec);
    RootDatum d = build_datum(spec);
    auto w = WeylGroup::create(d);
    auto oracle = support::oracle_weyl_matrices(d);
    const auto& els = w->elements();
    REQUIRE(els.size() == oracle.size());
    std::set<IntMat> mats;
    std::set<std::vector<int>> words;
    for (const auto& u : els) {
      mats.insert(u.matrix());
      words.insert(u.word());
      // Canonical word is reduced.
      CHECK(u.length() == support::oracle_length(d, u.matrix()));
      // Round trip through the word and the matrix.
      CHECK(w->from_word(u.word()).matrix() == u.matrix());
      CHECK(w->from_matrix(u.matrix()).word() == u.word());
      CHECK(u.char_matrix().transpose() * u.matrix() == IntMat::identity(d.rank));
      WeylElem inv = weyl_inv(u);
      CHECK(weyl_mul(u, inv).is_identity());
      CHECK(inv.length() == u.length());
      for (int i = 0; i < d.num_simple(); ++i) {
        WeylElem us = weyl_mul(u, w->generator(i));
        // Right descent iff length drops.
        CHECK(descent(u, i) == (us.length() < u.length()));
        CHECK(std::abs(us.length() - u.length()) == 1);
        WeylElem su = weyl_mul(w->generator(i), u);
        CHECK(left_descent(u, i) == (su.length() < u.length()));
      }
    }
    CHECK(mats == oracle);
    CHECK(words.size() == els.size());
    // Sorted by (length, word).
    for (std::size_t k = 1; k < els.size(); ++k) CHECK(els[k - 1] < els[k]);
  }
}

TEST_CASE("canonical word is the lexicographically smallest reduced word") {
  RootDatum d = build_datum("A3");
  auto w = WeylGroup::create(d);
  // Enumerate every word of length <= 6 and keep the smallest reduced one per element.
  std::map<IntMat, std::vector<int>> best;
  std::vector<std::vector<int>> frontier{{}};
  for (int len = 0; len <= 6; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& word : frontier) {
      WeylElem u = w->from_word(word);
      if (u.length() == len) {
        auto it = best.find(u.matrix());
        if (it == best.end() || word < it->second) best[u.matrix()] = word;
      }
      for (int i = 0; i < 3; ++i) {
        auto nw = word;
        nw.push_back(i);
        next.push_back(nw);
      }
    }
    frontier = std::move(next);
  }
  REQUIRE(best.size() == 24);
  for (const auto& [m, word] : best) CHECK(w->from_matrix(m).word() == word);
}

TEST_CASE("group laws") {
  auto w = WeylGroup::create(build_datum("B3"));
  const auto& els = w->elements();
  for (std::size_t a = 0; a < els.size(); a += 7)
    for (std::size_t b = 0; b < els.size(); b += 5)
      for (std::size_t c = 0; c < els.size(); c += 11) {
        CHECK(weyl_mul(weyl_mul(els[a], els[b]), els[c]) == weyl_mul(els[a], weyl_mul(els[b], els[c])));
      }
  for (const auto& u : els) CHECK(weyl_inv(weyl_inv(u)) == u);
}

TEST_CASE("actions on the two lattices are compatible with the pairing") {
  RootDatum d = build_datum("G2");
  auto w = WeylGroup::create(d);
  IntVec x{3, -1}, y{1, 2};
  for (const auto& u : w->elements()) {
    IntVec ux = weyl_act(u, x, Side::Characters);
    IntVec uy = weyl_act(u, y, Side::Cocharacters);
    CHECK(dot(ux, uy) == dot(x, y));
    RatVec r = weyl_act(u, support::rv({"1/2", "-1/3"}), Side::Cocharacters);
    CHECK(r == u.matrix() * support::rv({"1/2", "-1/3"}));
  }
}

TEST_CASE("minus w0 permutes the simple roots") {
  for (const char* spec : {"A1 sc", "A2 sc", "A3", "B2", "G2", "D4", "GL(3)"}) {
    CAPTURE(spec);
    RootDatum d = build_datum(spec);
    auto w = WeylGroup::create(d);
    WeylElem w0 = w->longest_element();
    std::set<IntVec> simple(d.simple_roots.begin(), d.simple_roots.end());
    for (const auto& a : d.simple_roots) CHECK(simple.count(-weyl_act(w0, a, Side::Characters)) == 1);
    CHECK(weyl_mul(w0, w0).is_identity());
  }
}

TEST_CASE("automorphisms act on W") {
  RootDatum d = build_datum("A2 sc");
  auto w = WeylGroup::create(d);
  BasedAut flip = based_aut_from_permutation(d, {1, 0});
  CHECK(word_str(apply_aut(flip, w->generator(0))) == "[2]");
  for (const auto& u : w->elements()) {
    CHECK(apply_aut(flip, apply_aut(flip, u)) == u);
    CHECK(apply_aut(flip, u).length() == u.length());
  }
}

TEST_CASE("from_matrix rejects foreign matrices") {
  auto w = WeylGroup::create(build_datum("A2 sc"));
  CHECK_THROWS_AS(w->from_matrix(IntMat({{0, 1}, {1, 0}})), Error);
  CHECK_THROWS_AS(w->from_word({5}), Error);
}
