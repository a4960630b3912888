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

#include "chevalley/matrix.hpp"

#include <sstream>

namespace chevalley {

IntMat::IntMat(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  data_.reserve(std::size_t(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw Error(ErrorKind::RankMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_columns(int rows, const std::vector<IntVec>& cols) {
  IntMat m(rows, static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols(); ++c) {
    if (static_cast<int>(cols[c].size()) != rows) throw Error(ErrorKind::RankMismatch, "column length mismatch");
    for (int r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

IntMat IntMat::from_rows(int cols, const std::vector<IntVec>& rows) {
  IntMat m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols) throw Error(ErrorKind::RankMismatch, "row length mismatch");
    for (int c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntVec IntMat::row(int r) const { return IntVec(data_.begin() + std::size_t(r) * cols_, data_.begin() + std::size_t(r + 1) * cols_); }

IntVec IntMat::col(int c) const {
  IntVec v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMat IntMat::operator-() const {
  IntMat m = *this;
  for (auto& x : m.data_) x = -x;
  return m;
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::RankMismatch, "matrix product shape mismatch");
  IntMat m(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      std::int64_t x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols_; ++j) m(i, j) = checked_add(m(i, j), checked_mul(x, b(k, j)));
    }
  return m;
}

IntMat operator+(const IntMat& a, const IntMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::RankMismatch, "matrix sum shape mismatch");
  IntMat m = a;
  for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] = checked_add(m.data_[k], b.data_[k]);
  return m;
}

IntMat operator-(const IntMat& a, const IntMat& b) { return a + (-b); }

IntVec IntMat::operator*(const IntVec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error(ErrorKind::RankMismatch, "matrix-vector shape mismatch");
  IntVec out(rows_, 0);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out[r] = checked_add(out[r], checked_mul((*this)(r, c), v[c]));
  return out;
}

RatVec IntMat::operator*(const RatVec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error(ErrorKind::RankMismatch, "matrix-vector shape mismatch");
  RatVec out(rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0) out[r] += Rational((*this)(r, c)) * v[c];
  return out;
}

GaussVec IntMat::operator*(const GaussVec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error(ErrorKind::RankMismatch, "matrix-vector shape mismatch");
  GaussVec out(rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0) out[r] += Rational((*this)(r, c)) * v[c];
  return out;
}

Rational IntMat::determinant() const {
  if (!is_square()) throw Error(ErrorKind::RankMismatch, "determinant of non-square matrix");
  const int n = rows_;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a[r][c] = (*this)(r, c);
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (!a[r][c].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      Rational f = a[r][c] / a[c][c];
      for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

std::optional<IntMat> IntMat::unimodular_inverse() const {
  if (!is_square()) return std::nullopt;
  const int n = rows_;
  Rational det = determinant();
  if (det != Rational(1) && det != Rational(-1)) return std::nullopt;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) a[r][c] = (*this)(r, c);
    a[r][n + r] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int pivot = c;
    while (a[pivot][c].is_zero()) ++pivot;
    std::swap(a[pivot], a[c]);
    Rational inv = Rational(1) / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      Rational f = a[r][c];
      for (int k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  IntMat out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out(r, c) = a[r][n + c].num();
  return out;
}

std::string IntMat::str() const {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < rows_; ++r) {
    if (r) os << ",";
    os << vec_str(row(r));
  }
  os << "]";
  return os.str();
}

std::int64_t dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::RankMismatch, "pairing of vectors of different length");
  std::int64_t s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s = checked_add(s, checked_mul(a[k], b[k]));
  return s;
}

Rational dot(const IntVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::RankMismatch, "pairing of vectors of different length");
  Rational s;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0) s += Rational(a[k]) * b[k];
  return s;
}

Gaussian dot(const IntVec& a, const GaussVec& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::RankMismatch, "pairing of vectors of different length");
  Gaussian s;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0) s += Rational(a[k]) * b[k];
  return s;
}

RatVec to_rat(const IntVec& v) { return RatVec(v.begin(), v.end()); }

GaussVec to_gauss(const RatVec& v) { return GaussVec(v.begin(), v.end()); }

bool is_integral(const RatVec& v) {
  for (const auto& x : v)
    if (!x.is_integer()) return false;
  return true;
}

IntVec to_int(const RatVec& v) {
  IntVec out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_integer()) throw Error(ErrorKind::InvalidParam, "expected an integral vector, got " + vec_str(v));
    out[k] = v[k].num();
  }
  return out;
}

RatVec mod_one(const RatVec& v) {
  RatVec out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k].frac();
  return out;
}

bool is_zero(const RatVec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

bool is_zero(const IntVec& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

namespace {
template <class V, class F>
V zip(const V& a, const V& b, F f) {
  if (a.size() != b.size()) throw Error(ErrorKind::RankMismatch, "vector length mismatch");
  V out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = f(a[k], b[k]);
  return out;
}
}  // namespace

RatVec operator+(const RatVec& a, const RatVec& b) { return zip(a, b, [](auto x, auto y) { return x + y; }); }
RatVec operator-(const RatVec& a, const RatVec& b) { return zip(a, b, [](auto x, auto y) { return x - y; }); }
RatVec operator-(const RatVec& a) {
  RatVec out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = -a[k];
  return out;
}
RatVec operator*(const Rational& s, const RatVec& v) {
  RatVec out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = s * v[k];
  return out;
}
GaussVec operator+(const GaussVec& a, const GaussVec& b) { return zip(a, b, [](auto x, auto y) { return x + y; }); }
GaussVec operator-(const GaussVec& a, const GaussVec& b) { return zip(a, b, [](auto x, auto y) { return x - y; }); }
GaussVec operator-(const GaussVec& a) {
  GaussVec out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = -a[k];
  return out;
}
GaussVec operator*(const Rational& s, const GaussVec& v) {
  GaussVec out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = s * v[k];
  return out;
}
IntVec operator+(const IntVec& a, const IntVec& b) { return zip(a, b, [](auto x, auto y) { return checked_add(x, y); }); }
IntVec operator-(const IntVec& a, const IntVec& b) { return zip(a, b, [](auto x, auto y) { return checked_add(x, -y); }); }
IntVec operator-(const IntVec& a) {
  IntVec out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = -a[k];
  return out;
}

RatVec real_part(const GaussVec& v) {
  RatVec out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k].re;
  return out;
}

RatVec imag_part(const GaussVec& v) {
  RatVec out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k].im;
  return out;
}

namespace {

// Row-reduces in place; returns pivot columns.
std::vector<int> row_reduce(std::vector<RatVec>& a, int cols) {
  std::vector<int> pivots;
  int row = 0;
  for (int c = 0; c < cols && row < static_cast<int>(a.size()); ++c) {
    int p = -1;
    for (int r = row; r < static_cast<int>(a.size()); ++r)
      if (!a[r][c].is_zero()) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(a[p], a[row]);
    Rational inv = Rational(1) / a[row][c];
    for (auto& x : a[row]) x *= inv;
    for (int r = 0; r < static_cast<int>(a.size()); ++r) {
      if (r == row || a[r][c].is_zero()) continue;
      Rational f = a[r][c];
      for (int k = 0; k < cols; ++k) a[r][k] -= f * a[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

int rational_rank(const std::vector<IntVec>& vectors, int dim) {
  std::vector<RatVec> a;
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != dim) throw Error(ErrorKind::RankMismatch, "vector length mismatch");
    a.push_back(to_rat(v));
  }
  return static_cast<int>(row_reduce(a, dim).size());
}

std::vector<RatVec> rational_kernel(const IntMat& m) {
  std::vector<RatVec> a;
  for (int r = 0; r < m.rows(); ++r) a.push_back(to_rat(m.row(r)));
  auto pivots = row_reduce(a, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVec x(m.cols());
    x[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = -a[k][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

namespace {
template <class V>
std::string join(const V& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) os << ",";
    os << v[k];
  }
  os << ")";
  return os.str();
}
}  // namespace

std::string vec_str(const IntVec& v) { return join(v); }
std::string vec_str(const RatVec& v) { return join(v); }
std::string vec_str(const GaussVec& v) { return join(v); }

}  // namespace chevalley
