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

#include "chevalley/lgroup.hpp"

#include <algorithm>

namespace chevalley {

BasedAut minus_w0(const RootDatum& d) {
  if (d.num_simple() == 0) return make_based_aut(d, -IntMat::identity(d.rank));
  auto w = WeylGroup::create(d);
  return make_based_aut(d, -w->longest_element().char_matrix());
}

LGroupPtr build_lgroup_tau(const RootDatum& g, const BasedAut& tau) {
  BasedAut checked = make_based_aut(g, tau.matrix);
  if (!(checked.matrix * checked.matrix == IntMat::identity(g.rank)))
    throw Error(ErrorKind::NotInvolution, "inner class automorphism " + tau.matrix.str() + " is not an involution");
  auto l = std::make_shared<LGroup>();
  l->g_datum = g;
  l->dual = dual_datum(g);
  l->theta0 = transpose_aut(g, checked);
  l->weyl = WeylGroup::create(l->dual);
  l->tits = make_tits_context(l->weyl, l->theta0);
  return l;
}

LGroupPtr build_lgroup(const RootDatum& g, const BasedAut& gamma) {
  BasedAut checked = make_based_aut(g, gamma.matrix);
  if (!(checked.matrix * checked.matrix == IntMat::identity(g.rank)))
    throw Error(ErrorKind::NotInvolution, "inner class " + gamma.matrix.str() + " is not an involution");
  return build_lgroup_tau(g, compose(minus_w0(g), checked));
}

LGroupPtr build_lgroup(const RootDatum& g, std::string_view inner_class) {
  if (inner_class == "split") return build_lgroup_tau(g, identity_aut(g));
  if (inner_class == "compact") return build_lgroup_tau(g, minus_w0(g));
  throw Error(ErrorKind::InvalidSpec, "unknown inner class '" + std::string(inner_class) + "'");
}

bool has_compact_cartan(const LGroup& l) {
  const IntMat minus_one = -IntMat::identity(l.rank());
  for (const auto& w : l.weyl->elements())
    if (w.matrix() * l.theta0_co() == minus_one) return true;
  return false;
}

bool is_theta0_stable(const LGroup& l, const std::vector<int>& subset) {
  for (int i : subset)
    if (std::find(subset.begin(), subset.end(), l.theta0.permutation.at(i)) == subset.end()) return false;
  return true;
}

std::vector<StandardLevi> standard_levis(const LGroup& l) {
  const int m = l.dual.num_simple();
  std::vector<StandardLevi> out;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    StandardLevi s;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) s.subset.push_back(i);
    if (is_theta0_stable(l, s.subset)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const StandardLevi& a, const StandardLevi& b) {
    if (a.subset.size() != b.subset.size()) return a.subset.size() < b.subset.size();
    return a.subset < b.subset;
  });
  return out;
}

std::string levi_str(const StandardLevi& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.subset.size(); ++k) out += (k ? "," : "") + std::to_string(s.subset[k] + 1);
  return out + "}";
}

}  // namespace chevalley
