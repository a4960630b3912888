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

#include "chevalley/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "chevalley/lattice.hpp"

namespace chevalley {

namespace {

constexpr std::size_t kMaxPositiveRoots = 4096;

std::string trim_copy(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Euclidean realization of the simple roots of an irreducible type, as integer
// vectors whose dot products are proportional to the invariant form.
std::vector<IntVec> euclidean_simple_roots(char type, int n) {
  auto unit = [](int dim, int i, std::int64_t s = 1) {
    IntVec v(dim, 0);
    v[i] = s;
    return v;
  };
  std::vector<IntVec> roots;
  switch (type) {
    case 'A':
      for (int i = 0; i < n; ++i) roots.push_back(unit(n + 1, i) - unit(n + 1, i + 1));
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) roots.push_back(unit(n, i) - unit(n, i + 1));
      roots.push_back(unit(n, n - 1));
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) roots.push_back(unit(n, i) - unit(n, i + 1));
      roots.push_back(unit(n, n - 1, 2));
      break;
    case 'D':
      for (int i = 0; i + 1 < n; ++i) roots.push_back(unit(n, i) - unit(n, i + 1));
      roots.push_back(unit(n, n - 2) + unit(n, n - 1));
      break;
    case 'F':
      roots = {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
      break;
    case 'G':
      roots = {{1, -1, 0}, {-2, 1, 1}};
      break;
    default:
      break;
  }
  return roots;
}

IntMat cartan_of_type(char type, int n) {
  bool ok = (type == 'A' && n >= 1) || (type == 'B' && n >= 2) || (type == 'C' && n >= 2) ||
            (type == 'D' && n >= 3) || (type == 'F' && n == 4) || (type == 'G' && n == 2);
  if (type == 'E') throw Error(ErrorKind::InvalidSpec, "type E has rank > 4, outside the supported range");
  if (!ok || n > 4) throw Error(ErrorKind::InvalidSpec, std::string("unsupported simple type ") + type + std::to_string(n));
  auto roots = euclidean_simple_roots(type, n);
  IntMat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = 2 * dot(roots[i], roots[j]) / dot(roots[j], roots[j]);
  return a;
}

struct Block {
  int rank = 0;
  std::vector<IntVec> roots;
  std::vector<IntVec> coroots;
  std::string label;
};

Block parse_type(const std::string& token) {
  std::string t = trim_copy(token);
  if (t == "T1") return Block{1, {}, {}, "T1"};
  if (t.rfind("GL(", 0) == 0) {
    if (t.size() < 5 || t.back() != ')') throw Error(ErrorKind::InvalidSpec, "bad GL token '" + t + "'");
    int n = 0;
    try {
      n = std::stoi(t.substr(3, t.size() - 4));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidSpec, "bad GL token '" + t + "'");
    }
    if (n < 1 || n > 9) throw Error(ErrorKind::InvalidSpec, "GL(n) needs 1 <= n <= 9");
    Block b{n, {}, {}, "GL(" + std::to_string(n) + ")"};
    for (int i = 0; i + 1 < n; ++i) {
      IntVec v(n, 0);
      v[i] = 1;
      v[i + 1] = -1;
      b.roots.push_back(v);
      b.coroots.push_back(v);
    }
    return b;
  }
  if (t.size() < 2 || t[0] < 'A' || t[0] > 'G' || !std::isdigit(static_cast<unsigned char>(t[1])))
    throw Error(ErrorKind::InvalidSpec, "unrecognized type '" + t + "'");
  char type = t[0];
  int n = t[1] - '0';
  std::string rest = trim_copy(t.substr(2));
  bool adjoint = false;
  if (rest == "ad") {
    adjoint = true;
  } else if (!rest.empty() && rest != "sc") {
    throw Error(ErrorKind::InvalidSpec, "unrecognized lattice tag '" + rest + "'");
  }
  IntMat a = cartan_of_type(type, n);
  Block b{n, {}, {}, std::string(1, type) + std::to_string(n) + (adjoint ? " ad" : " sc")};
  for (int i = 0; i < n; ++i) {
    IntVec root(n, 0), coroot(n, 0);
    if (adjoint) {
      root[i] = 1;
      coroot = a.col(i);
    } else {
      root = a.row(i);
      coroot[i] = 1;
    }
    b.roots.push_back(root);
    b.coroots.push_back(coroot);
  }
  return b;
}

std::vector<std::string> split_factors(std::string_view spec) {
  std::string s(spec);
  // Accept the multiplication sign as a separator too.
  for (std::size_t p; (p = s.find("\xC3\x97")) != std::string::npos;) s.replace(p, 2, "x");
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == 'x') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

bool finite_type(const IntMat& a) {
  const int m = a.rows();
  for (int i = 0; i < m; ++i) {
    if (a(i, i) != 2) return false;
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      if (a(i, j) > 0) return false;
      if ((a(i, j) == 0) != (a(j, i) == 0)) return false;
    }
  }
  // Finite type iff every principal minor is positive.
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    IntMat sub(static_cast<int>(idx.size()), static_cast<int>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) sub(int(r), int(c)) = a(idx[r], idx[c]);
    if (sub.determinant() <= Rational(0)) return false;
  }
  return true;
}

}  // namespace

IntMat RootDatum::cartan() const {
  const int m = num_simple();
  IntMat a(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a(i, j) = dot(simple_roots[i], simple_coroots[j]);
  return a;
}

RootDatum make_datum(int rank, std::vector<IntVec> roots, std::vector<IntVec> coroots, std::string label) {
  if (rank < 1) throw Error(ErrorKind::RankMismatch, "rank must be positive");
  if (roots.size() != coroots.size())
    throw Error(ErrorKind::RankMismatch, "different numbers of simple roots and coroots");
  if (static_cast<int>(roots.size()) > rank) throw Error(ErrorKind::RankMismatch, "more simple roots than the rank");
  for (const auto& v : roots)
    if (static_cast<int>(v.size()) != rank) throw Error(ErrorKind::RankMismatch, "root of wrong length " + vec_str(v));
  for (const auto& v : coroots)
    if (static_cast<int>(v.size()) != rank) throw Error(ErrorKind::RankMismatch, "coroot of wrong length " + vec_str(v));
  RootDatum d{rank, std::move(roots), std::move(coroots), std::move(label)};
  const int m = d.num_simple();
  if (rational_rank(d.simple_roots, rank) != m || rational_rank(d.simple_coroots, rank) != m)
    throw Error(ErrorKind::InvalidCartan, "simple roots or coroots are linearly dependent");
  if (!finite_type(d.cartan())) throw Error(ErrorKind::InvalidCartan, "pairing matrix " + d.cartan().str() + " is not of finite type");
  return d;
}

RootDatum build_datum(std::string_view spec) {
  auto parts = split_factors(spec);
  int rank = 0;
  std::vector<Block> blocks;
  std::string label;
  for (const auto& p : parts) {
    if (trim_copy(p).empty()) throw Error(ErrorKind::InvalidSpec, "empty factor in '" + std::string(spec) + "'");
    blocks.push_back(parse_type(p));
    rank += blocks.back().rank;
    label += (label.empty() ? "" : " x ") + blocks.back().label;
  }
  std::vector<IntVec> roots, coroots;
  int offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t k = 0; k < b.roots.size(); ++k) {
      IntVec r(rank, 0), c(rank, 0);
      for (int i = 0; i < b.rank; ++i) {
        r[offset + i] = b.roots[k][i];
        c[offset + i] = b.coroots[k][i];
      }
      roots.push_back(r);
      coroots.push_back(c);
    }
    offset += b.rank;
  }
  return make_datum(rank, std::move(roots), std::move(coroots), label);
}

RootDatum dual_datum(const RootDatum& d) {
  return RootDatum{d.rank, d.simple_coroots, d.simple_roots, d.label.empty() ? "" : "dual(" + d.label + ")"};
}

IntMat reflection_on_cocharacters(const RootDatum& d, int i) {
  IntMat m = IntMat::identity(d.rank);
  for (int r = 0; r < d.rank; ++r)
    for (int c = 0; c < d.rank; ++c) m(r, c) -= d.simple_coroots[i][r] * d.simple_roots[i][c];
  return m;
}

IntMat reflection_on_characters(const RootDatum& d, int i) { return reflection_on_cocharacters(d, i).transpose(); }

PositiveSystem positive_system(const RootDatum& d) {
  PositiveSystem ps;
  std::set<IntVec> seen;
  for (int i = 0; i < d.num_simple(); ++i) {
    ps.roots.push_back(d.simple_roots[i]);
    ps.coroots.push_back(d.simple_coroots[i]);
    IntVec e(d.num_simple(), 0);
    e[i] = 1;
    ps.coefficients.push_back(e);
    seen.insert(d.simple_roots[i]);
  }
  // s_i permutes the positive roots other than alpha_i.
  for (std::size_t k = 0; k < ps.roots.size(); ++k) {
    for (int i = 0; i < d.num_simple(); ++i) {
      if (ps.roots[k] == d.simple_roots[i]) continue;
      std::int64_t c = dot(ps.roots[k], d.simple_coroots[i]);
      if (c == 0) continue;
      IntVec r = ps.roots[k];
      IntVec cr = ps.coroots[k];
      std::int64_t cc = dot(d.simple_roots[i], cr);
      for (int t = 0; t < d.rank; ++t) {
        r[t] -= c * d.simple_roots[i][t];
        cr[t] -= cc * d.simple_coroots[i][t];
      }
      if (seen.insert(r).second) {
        IntVec coeff = ps.coefficients[k];
        coeff[i] -= c;
        ps.roots.push_back(r);
        ps.coroots.push_back(cr);
        ps.coefficients.push_back(coeff);
        if (ps.roots.size() > kMaxPositiveRoots) throw Error(ErrorKind::InvalidCartan, "root closure does not terminate");
      }
    }
  }
  return ps;
}

std::vector<IntVec> positive_coroots(const RootDatum& d) { return positive_system(d).coroots; }

namespace {
RatVec half_sum(const std::vector<IntVec>& vs, int rank) {
  IntVec s(rank, 0);
  for (const auto& v : vs) s = s + v;
  return Rational(1, 2) * to_rat(s);
}
}  // namespace

RatVec rho_check(const RootDatum& d) { return half_sum(positive_system(d).coroots, d.rank); }

RatVec rho(const RootDatum& d) { return half_sum(positive_system(d).roots, d.rank); }

IntMat BasedAut::on_cocharacters() const {
  auto inv = matrix.unimodular_inverse();
  if (!inv) throw Error(ErrorKind::NotBasedAut, "matrix is not invertible over Z");
  return inv->transpose();
}

BasedAut identity_aut(const RootDatum& d) {
  std::vector<int> perm(d.num_simple());
  std::iota(perm.begin(), perm.end(), 0);
  return {IntMat::identity(d.rank), perm};
}

BasedAut make_based_aut(const RootDatum& d, const IntMat& matrix) {
  if (matrix.rows() != d.rank || matrix.cols() != d.rank) throw Error(ErrorKind::RankMismatch, "automorphism matrix has wrong shape");
  auto inv = matrix.unimodular_inverse();
  if (!inv) throw Error(ErrorKind::NotBasedAut, "matrix " + matrix.str() + " is not invertible over Z");
  IntMat on_co = inv->transpose();
  std::vector<int> perm(d.num_simple(), -1);
  std::vector<bool> hit(d.num_simple(), false);
  for (int i = 0; i < d.num_simple(); ++i) {
    IntVec image = matrix * d.simple_roots[i];
    for (int j = 0; j < d.num_simple(); ++j)
      if (image == d.simple_roots[j]) perm[i] = j;
    if (perm[i] < 0 || hit[perm[i]])
      throw Error(ErrorKind::NotBasedAut, "matrix " + matrix.str() + " does not permute the simple roots");
    hit[perm[i]] = true;
    if (on_co * d.simple_coroots[i] != d.simple_coroots[perm[i]])
      throw Error(ErrorKind::NotBasedAut, "matrix " + matrix.str() + " does not permute the simple coroots compatibly");
  }
  return {matrix, perm};
}

BasedAut based_aut_from_permutation(const RootDatum& d, const std::vector<int>& perm, int radical_sign) {
  const int m = d.num_simple();
  const int n = d.rank;
  if (static_cast<int>(perm.size()) != m) throw Error(ErrorKind::NotBasedAut, "permutation has wrong length");
  IntMat a = d.cartan();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (a(perm[i], perm[j]) != a(i, j)) throw Error(ErrorKind::NotBasedAut, "permutation is not a Dynkin diagram symmetry");
  // Basis: simple roots, then the kernel of the coroot pairing.
  auto kernel = rational_kernel(IntMat::from_rows(n, d.simple_coroots));
  std::vector<RatVec> source, target;
  for (int i = 0; i < m; ++i) {
    source.push_back(to_rat(d.simple_roots[i]));
    target.push_back(to_rat(d.simple_roots[perm[i]]));
  }
  for (const auto& k : kernel) {
    source.push_back(k);
    target.push_back(Rational(radical_sign) * k);
  }
  // Solve M * source = target column by column of the identity: M = T S^-1.
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n));
  // Rows of the system S^T M^T = T^T.
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      aug[r][c] = source[r][c];
      aug[r][n + c] = target[r][c];
    }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (aug[p][c].is_zero()) ++p;
    std::swap(aug[p], aug[c]);
    Rational inv = Rational(1) / aug[c][c];
    for (auto& x : aug[c]) x *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || aug[r][c].is_zero()) continue;
      Rational f = aug[r][c];
      for (int k = 0; k < 2 * n; ++k) aug[r][k] -= f * aug[c][k];
    }
  }
  IntMat mat(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const Rational& x = aug[c][n + r];  // (M^T)(c, r) = M(r, c)
      if (!x.is_integer()) throw Error(ErrorKind::NotBasedAut, "diagram symmetry does not preserve the lattice");
      mat(r, c) = x.num();
    }
  return make_based_aut(d, mat);
}

std::vector<BasedAut> diagram_automorphisms(const RootDatum& d) {
  std::vector<int> perm(d.num_simple());
  std::iota(perm.begin(), perm.end(), 0);
  const bool has_radical = d.num_simple() < d.rank;
  std::vector<BasedAut> out;
  do {
    for (int sign : {1, -1}) {
      if (sign < 0 && !has_radical) continue;
      try {
        BasedAut a = based_aut_from_permutation(d, perm, sign);
        if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
      } catch (const Error&) {
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

BasedAut compose(const BasedAut& a, const BasedAut& b) {
  std::vector<int> perm(b.permutation.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = a.permutation[b.permutation[i]];
  return {a.matrix * b.matrix, perm};
}

BasedAut transpose_aut(const RootDatum& d, const BasedAut& a) {
  // Re-validate on d first so a foreign automorphism is reported here.
  make_based_aut(d, a.matrix);
  return make_based_aut(dual_datum(d), a.on_cocharacters());
}

std::string datum_str(const RootDatum& d) {
  if (!d.label.empty()) return d.label;
  std::string s = "rank " + std::to_string(d.rank) + " roots";
  for (const auto& r : d.simple_roots) s += " " + vec_str(r);
  s += " coroots";
  for (const auto& c : d.simple_coroots) s += " " + vec_str(c);
  return s;
}

}  // namespace chevalley
