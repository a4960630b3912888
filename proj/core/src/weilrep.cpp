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

#include "chevalley/weilrep.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

namespace chevalley {

bool operator<(const WeilIrr& a, const WeilIrr& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.t != b.t) return a.t < b.t;
  if (a.k != b.k) return a.k < b.k;
  return a.eps < b.eps;
}

WeilIrr weil_chi(const Gaussian& t, int eps) {
  if (eps != 0 && eps != 1) throw Error(ErrorKind::InvalidParam, "eps must be 0 or 1");
  return {WeilIrr::Kind::Character, t, eps, 0};
}

WeilIrr weil_induced(int k, const Gaussian& t) {
  if (k < 1) throw Error(ErrorKind::InvalidParam, "I(k,t) needs k >= 1 after normalization");
  return {WeilIrr::Kind::Induced, t, 0, k};
}

WeilRep::WeilRep(std::vector<WeilIrr> summands) : summands_(std::move(summands)) {
  std::sort(summands_.begin(), summands_.end());
}

int WeilRep::dim() const {
  int d = 0;
  for (const auto& s : summands_) d += s.dim();
  return d;
}

WeilRep weil_induced_rep(int k, const Gaussian& t) {
  if (k < 0) k = -k;
  if (k == 0) return WeilRep({weil_chi(t, 0), weil_chi(t, 1)});
  return WeilRep({weil_induced(k, t)});
}

WeilRep weil_sum(const WeilRep& a, const WeilRep& b) {
  std::vector<WeilIrr> all = a.summands();
  all.insert(all.end(), b.summands().begin(), b.summands().end());
  return WeilRep(std::move(all));
}

namespace {
template <class F>
WeilRep map_t(const WeilRep& r, F f) {
  std::vector<WeilIrr> out = r.summands();
  for (auto& s : out) s.t = f(s.t);
  return WeilRep(std::move(out));
}
}  // namespace

WeilRep weil_dual(const WeilRep& r) {
  return map_t(r, [](const Gaussian& t) { return -t; });
}

WeilRep weil_hermitian_dual(const WeilRep& r) {
  return map_t(r, [](const Gaussian& t) { return -t.conj(); });
}

bool weil_is_hermitian(const WeilRep& r) { return weil_hermitian_dual(r) == r; }

bool weil_is_unitary(const WeilRep& r) {
  return std::all_of(r.summands().begin(), r.summands().end(), [](const WeilIrr& s) { return s.t.re.is_zero(); });
}

std::vector<Gaussian> weil_inf_char(const WeilRep& r) {
  std::vector<Gaussian> out;
  for (const auto& s : r.summands()) {
    if (s.kind == WeilIrr::Kind::Character) {
      out.push_back(s.t);
    } else {
      out.push_back(s.t + Gaussian(Rational(s.k, 2)));
      out.push_back(s.t - Gaussian(Rational(s.k, 2)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

LGroupPtr gl_lgroup(int n) {
  static std::mutex mu;
  static std::map<int, LGroupPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  LGroupPtr l = build_lgroup(build_datum("GL(" + std::to_string(n) + ")"), "split");
  cache.emplace(n, l);
  return l;
}

LParam weil_to_lparam(const WeilRep& r, int n) {
  const int d = r.dim();
  if (d < 1) throw Error(ErrorKind::DimensionMismatch, "empty representation");
  if (n >= 0 && n != d)
    throw Error(ErrorKind::DimensionMismatch, "representation has dimension " + std::to_string(d) + ", expected " + std::to_string(n));
  LGroupPtr L = gl_lgroup(d);
  GaussVec lambda(d);
  RatVec mu(d);
  std::vector<int> word;
  int pos = 0;
  for (const auto& s : r.summands()) {
    if (s.kind == WeilIrr::Kind::Character) {
      lambda[pos] = s.t;
      mu[pos] = Rational(s.eps, 2);
      pos += 1;
    } else {
      // phi(z) = diag(z^{t+k/2} zbar^{t-k/2}, z^{t-k/2} zbar^{t+k/2}) and
      // phi(j) = diag(exp(pi i (k-1)), 1) sigma_s.
      lambda[pos] = s.t + Gaussian(Rational(s.k, 2));
      lambda[pos + 1] = s.t - Gaussian(Rational(s.k, 2));
      mu[pos] = Rational(s.k - 1, 2);
      word.push_back(pos);
      pos += 2;
    }
  }
  return make_param(L, lambda, mu, L->weyl->from_word(word));
}

namespace {

std::string strip(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

int parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw Error(ErrorKind::ParseError, "bad integer '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::ParseError, "bad integer '" + s + "'");
  }
}

WeilRep parse_term(const std::string& term) {
  auto open = term.find('(');
  if (open == std::string::npos || term.back() != ')') throw Error(ErrorKind::ParseError, "bad summand '" + term + "'");
  std::string head = strip(term.substr(0, open));
  std::string body = term.substr(open + 1, term.size() - open - 2);
  auto comma = body.find(',');
  if (comma == std::string::npos) throw Error(ErrorKind::ParseError, "summand needs two arguments: '" + term + "'");
  std::string a = strip(body.substr(0, comma));
  std::string b = strip(body.substr(comma + 1));
  if (head == "chi") {
    int eps = parse_int(b);
    if (eps != 0 && eps != 1) throw Error(ErrorKind::ParseError, "eps must be 0 or 1 in '" + term + "'");
    return WeilRep({weil_chi(Gaussian::parse(a), eps)});
  }
  if (head == "I") return weil_induced_rep(parse_int(a), Gaussian::parse(b));
  throw Error(ErrorKind::ParseError, "unknown summand '" + head + "'");
}

}  // namespace

WeilRep parse_weilrep(std::string_view text) {
  WeilRep out;
  std::string cur;
  int depth = 0;
  bool any = false;
  auto flush = [&] {
    std::string t = strip(cur);
    if (t.empty()) throw Error(ErrorKind::ParseError, "empty summand in '" + std::string(text) + "'");
    out = weil_sum(out, parse_term(t));
    any = true;
    cur.clear();
  };
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw Error(ErrorKind::ParseError, "unbalanced parentheses in '" + std::string(text) + "'");
    if (c == '+' && depth == 0) {
      flush();
    } else {
      cur += c;
    }
  }
  if (depth != 0) throw Error(ErrorKind::ParseError, "unbalanced parentheses in '" + std::string(text) + "'");
  flush();
  if (!any) throw Error(ErrorKind::ParseError, "empty representation");
  return out;
}

std::string weil_str(const WeilIrr& x) {
  if (x.kind == WeilIrr::Kind::Character) return "chi(" + x.t.str() + "," + std::to_string(x.eps) + ")";
  return "I(" + std::to_string(x.k) + "," + x.t.str() + ")";
}

std::string weil_str(const WeilRep& r) {
  std::string s;
  for (const auto& x : r.summands()) s += (s.empty() ? "" : " + ") + weil_str(x);
  return s.empty() ? "0" : s;
}

}  // namespace chevalley
