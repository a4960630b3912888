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

#include "chevalley/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace chevalley {

namespace {
constexpr std::size_t kMaxOrder = 200000;

void require_same(const WeylElem& u, const WeylElem& v) {
  if (u.group() == v.group()) return;
  if (!u.group() || !v.group() || !(u.datum() == v.datum()))
    throw Error(ErrorKind::DatumMismatch, "Weyl elements over different data");
}
}  // namespace

const RootDatum& WeylElem::datum() const { return group_->datum(); }

WeylElem::WeylElem(WeylGroupPtr g, IntMat m, IntMat cm)
    : group_(std::move(g)), matrix_(std::move(m)), char_matrix_(std::move(cm)) {
  word_ = group_->canonical_word(char_matrix_);
}

WeylGroup::WeylGroup(RootDatum d) : datum_(std::move(d)) {
  auto ps = positive_system(datum_);
  num_positive_ = static_cast<int>(ps.roots.size());
  two_rho_ = IntVec(datum_.rank, 0);
  for (const auto& r : ps.roots) two_rho_ = two_rho_ + r;
  for (int i = 0; i < datum_.num_simple(); ++i) {
    gens_.push_back(reflection_on_cocharacters(datum_, i));
    char_gens_.push_back(reflection_on_characters(datum_, i));
  }
}

WeylGroupPtr WeylGroup::create(RootDatum d) { return WeylGroupPtr(new WeylGroup(std::move(d))); }

std::vector<int> WeylGroup::canonical_word(const IntMat& char_matrix) const {
  // v = w.(2 rho); i is a left descent of w iff <v, a_i^v> < 0. Peeling the
  // smallest left descent each time yields the lex-smallest reduced word.
  IntVec v = char_matrix * two_rho_;
  std::vector<int> word;
  for (;;) {
    int found = -1;
    for (int i = 0; i < num_generators(); ++i) {
      if (dot(v, datum_.simple_coroots[i]) < 0) {
        found = i;
        break;
      }
    }
    if (found < 0) break;
    word.push_back(found);
    v = char_gens_[found] * v;
    if (static_cast<int>(word.size()) > num_positive_)
      throw Error(ErrorKind::InvalidParam, "matrix does not act as a Weyl group element");
  }
  return word;
}

WeylElem WeylGroup::make(IntMat m, IntMat cm) const { return WeylElem(shared_from_this(), std::move(m), std::move(cm)); }

WeylElem WeylGroup::identity() const { return make(IntMat::identity(rank()), IntMat::identity(rank())); }

WeylElem WeylGroup::generator(int i) const {
  if (i < 0 || i >= num_generators()) throw Error(ErrorKind::InvalidParam, "simple index out of range");
  return make(gens_[i], char_gens_[i]);
}

WeylElem WeylGroup::from_word(const std::vector<int>& word) const {
  IntMat m = IntMat::identity(rank());
  IntMat cm = IntMat::identity(rank());
  for (int i : word) {
    if (i < 0 || i >= num_generators())
      throw Error(ErrorKind::InvalidParam, "simple index " + std::to_string(i + 1) + " out of range");
    m = m * gens_[i];
    cm = cm * char_gens_[i];
  }
  return make(std::move(m), std::move(cm));
}

WeylElem WeylGroup::from_matrix(const IntMat& m) const {
  if (m.rows() != rank() || m.cols() != rank()) throw Error(ErrorKind::RankMismatch, "matrix has wrong shape");
  auto inv = m.unimodular_inverse();
  if (!inv) throw Error(ErrorKind::InvalidParam, "matrix is not invertible over Z");
  WeylElem candidate = make(m, inv->transpose());
  WeylElem check = from_word(candidate.word());
  if (!(check == candidate)) throw Error(ErrorKind::InvalidParam, "matrix " + m.str() + " is not in the Weyl group");
  return candidate;
}

const std::vector<WeylElem>& WeylGroup::elements() const {
  std::call_once(elements_once_, [this] {
    std::map<IntVec, WeylElem> seen;
    std::deque<WeylElem> queue;
    WeylElem e = identity();
    seen.emplace(two_rho_, e);
    queue.push_back(e);
    while (!queue.empty()) {
      WeylElem w = queue.front();
      queue.pop_front();
      for (int i = 0; i < num_generators(); ++i) {
        IntMat cm = w.char_matrix() * char_gens_[i];
        IntVec key = cm * two_rho_;
        if (seen.count(key)) continue;
        WeylElem next = make(w.matrix() * gens_[i], std::move(cm));
        seen.emplace(std::move(key), next);
        queue.push_back(std::move(next));
        if (seen.size() > kMaxOrder) throw Error(ErrorKind::PreconditionViolated, "Weyl group too large to enumerate");
      }
    }
    std::vector<WeylElem> all;
    all.reserve(seen.size());
    for (auto& [k, w] : seen) all.push_back(std::move(w));
    std::sort(all.begin(), all.end());
    elements_ = std::move(all);
  });
  return elements_;
}

WeylElem WeylGroup::longest_element() const {
  if (num_generators() == 0) throw Error(ErrorKind::NoRoots, "datum has no roots");
  // w0 sends 2 rho to -2 rho; walk down from the identity by ascents.
  WeylElem w = identity();
  for (;;) {
    int asc = -1;
    for (int i = 0; i < num_generators(); ++i)
      if (!descent(w, i)) {
        asc = i;
        break;
      }
    if (asc < 0) return w;
    w = make(w.matrix() * gens_[asc], w.char_matrix() * char_gens_[asc]);
  }
}

WeylElem weyl_mul(const WeylElem& u, const WeylElem& v) {
  require_same(u, v);
  return u.group()->make(u.matrix() * v.matrix(), u.char_matrix() * v.char_matrix());
}

WeylElem weyl_inv(const WeylElem& u) {
  // The inverse of a reflection product is the reversed product.
  std::vector<int> rev(u.word().rbegin(), u.word().rend());
  return u.group()->from_word(rev);
}

RatVec weyl_act(const WeylElem& u, const RatVec& x, Side side) {
  return side == Side::Cocharacters ? u.matrix() * x : u.char_matrix() * x;
}

GaussVec weyl_act(const WeylElem& u, const GaussVec& x, Side side) {
  return side == Side::Cocharacters ? u.matrix() * x : u.char_matrix() * x;
}

IntVec weyl_act(const WeylElem& u, const IntVec& x, Side side) {
  return side == Side::Cocharacters ? u.matrix() * x : u.char_matrix() * x;
}

bool descent(const WeylElem& u, int i) {
  // u s_i < u iff u(a_i^v) is a negative coroot iff <2 rho, u a_i^v> < 0.
  return dot(u.group()->two_rho(), u.matrix() * u.datum().simple_coroots.at(i)) < 0;
}

bool left_descent(const WeylElem& u, int i) {
  return dot(u.char_matrix() * u.group()->two_rho(), u.datum().simple_coroots.at(i)) < 0;
}

WeylElem apply_aut(const BasedAut& a, const WeylElem& u) {
  if (static_cast<int>(a.permutation.size()) != u.group()->num_generators())
    throw Error(ErrorKind::DatumMismatch, "automorphism does not match the Weyl group");
  std::vector<int> word;
  word.reserve(u.word().size());
  for (int i : u.word()) word.push_back(a.permutation[i]);
  return u.group()->from_word(word);
}

std::string word_str(const std::vector<int>& word) {
  std::string s = "[";
  for (std::size_t k = 0; k < word.size(); ++k) s += (k ? "," : "") + std::to_string(word[k] + 1);
  return s + "]";
}

std::string word_str(const WeylElem& u) { return word_str(u.word()); }

}  // namespace chevalley
