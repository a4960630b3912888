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
// Weyl group of a root datum.
//
// An element is stored by its matrix on X_*; the canonical word (the
// lexicographically smallest reduced word) is derived from the orbit point
// w.(2 rho) in X^*. Words are 0-based here and 1-based when printed.

#ifndef CHEVALLEY_WEYL_HPP
#define CHEVALLEY_WEYL_HPP

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "chevalley/rootdata.hpp"

namespace chevalley {

class WeylGroup;
using WeylGroupPtr = std::shared_ptr<const WeylGroup>;

enum class Side { Characters, Cocharacters };

class WeylElem {
 public:
  WeylElem() = default;

  const WeylGroupPtr& group() const { return group_; }
  const RootDatum& datum() const;
  /// Canonical reduced word, 0-based.
  const std::vector<int>& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }
  /// Action on X_*.
  const IntMat& matrix() const { return matrix_; }
  /// Action on X^* (inverse transpose of matrix()).
  const IntMat& char_matrix() const { return char_matrix_; }

  friend bool operator==(const WeylElem& a, const WeylElem& b) { return a.matrix_ == b.matrix_; }
  friend bool operator<(const WeylElem& a, const WeylElem& b) {
    if (a.word_.size() != b.word_.size()) return a.word_.size() < b.word_.size();
    return a.word_ < b.word_;
  }

 private:
  friend class WeylGroup;
  WeylElem(WeylGroupPtr g, IntMat m, IntMat cm);

  WeylGroupPtr group_;
  std::vector<int> word_;
  IntMat matrix_;
  IntMat char_matrix_;
};

class WeylGroup : public std::enable_shared_from_this<WeylGroup> {
 public:
  static WeylGroupPtr create(RootDatum d);

  const RootDatum& datum() const { return datum_; }
  int num_generators() const { return datum_.num_simple(); }
  int rank() const { return datum_.rank; }
  /// Sum of the positive roots, a regular dominant element of X^*.
  const IntVec& two_rho() const { return two_rho_; }
  int num_positive_roots() const { return num_positive_; }

  WeylElem identity() const;
  WeylElem generator(int i) const;
  /// Product of generators along an arbitrary (not necessarily reduced) word.
  WeylElem from_word(const std::vector<int>& word) const;
  /// InvalidParam unless `m` (an action on X_*) lies in W.
  WeylElem from_matrix(const IntMat& m) const;
  /// All elements, sorted by (length, canonical word). Computed once.
  const std::vector<WeylElem>& elements() const;
  std::size_t order() const { return elements().size(); }
  /// NoRoots for a pure torus.
  WeylElem longest_element() const;

 private:
  explicit WeylGroup(RootDatum d);
  WeylElem make(IntMat m, IntMat cm) const;
  std::vector<int> canonical_word(const IntMat& char_matrix) const;

  friend class WeylElem;
  friend WeylElem weyl_mul(const WeylElem&, const WeylElem&);
  friend WeylElem weyl_inv(const WeylElem&);
  friend WeylElem apply_aut(const BasedAut&, const WeylElem&);

  RootDatum datum_;
  IntVec two_rho_;
  int num_positive_ = 0;
  std::vector<IntMat> gens_;
  std::vector<IntMat> char_gens_;
  mutable std::once_flag elements_once_;
  mutable std::vector<WeylElem> elements_;
};

WeylElem weyl_mul(const WeylElem& u, const WeylElem& v);
WeylElem weyl_inv(const WeylElem& u);
RatVec weyl_act(const WeylElem& u, const RatVec& x, Side side);
GaussVec weyl_act(const WeylElem& u, const GaussVec& x, Side side);
IntVec weyl_act(const WeylElem& u, const IntVec& x, Side side);
/// length(u s_i) < length(u).
bool descent(const WeylElem& u, int i);
/// length(s_i u) < length(u).
bool left_descent(const WeylElem& u, int i);
/// The image of u under an automorphism of the based datum (s_i -> s_{perm(i)}).
WeylElem apply_aut(const BasedAut& a, const WeylElem& u);

/// "[1,2,1]" (1-based).
std::string word_str(const std::vector<int>& word);
std::string word_str(const WeylElem& u);

}  // namespace chevalley

#endif  // CHEVALLEY_WEYL_HPP
