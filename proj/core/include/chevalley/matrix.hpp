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
// Dense integer matrices and the handful of exact vector operations the
// lattice code needs. Matrices act on column vectors.

#ifndef CHEVALLEY_MATRIX_HPP
#define CHEVALLEY_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chevalley/rational.hpp"

namespace chevalley {

class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, 0) {}
  IntMat(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMat identity(int n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static IntMat from_columns(int rows, const std::vector<IntVec>& cols);
  static IntMat from_rows(int cols, const std::vector<IntVec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  std::int64_t& operator()(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
  std::int64_t operator()(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

  IntVec row(int r) const;
  IntVec col(int c) const;

  IntMat transpose() const;
  IntMat operator-() const;
  friend IntMat operator*(const IntMat& a, const IntMat& b);
  friend IntMat operator+(const IntMat& a, const IntMat& b);
  friend IntMat operator-(const IntMat& a, const IntMat& b);
  friend bool operator==(const IntMat&, const IntMat&) = default;
  friend auto operator<=>(const IntMat&, const IntMat&) = default;

  IntVec operator*(const IntVec& v) const;
  RatVec operator*(const RatVec& v) const;
  GaussVec operator*(const GaussVec& v) const;

  /// Exact determinant (square matrices only).
  Rational determinant() const;
  /// Inverse over the integers; nullopt unless det = +-1.
  std::optional<IntMat> unimodular_inverse() const;

  std::string str() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

std::int64_t dot(const IntVec& a, const IntVec& b);
Rational dot(const IntVec& a, const RatVec& b);
Gaussian dot(const IntVec& a, const GaussVec& b);

RatVec to_rat(const IntVec& v);
GaussVec to_gauss(const RatVec& v);
bool is_integral(const RatVec& v);
/// Integer vector from an integral rational vector; throws otherwise.
IntVec to_int(const RatVec& v);
/// Componentwise reduction into [0, 1).
RatVec mod_one(const RatVec& v);
bool is_zero(const RatVec& v);
bool is_zero(const IntVec& v);

RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a);
RatVec operator*(const Rational& s, const RatVec& v);
GaussVec operator+(const GaussVec& a, const GaussVec& b);
GaussVec operator-(const GaussVec& a, const GaussVec& b);
GaussVec operator-(const GaussVec& a);
GaussVec operator*(const Rational& s, const GaussVec& v);
IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a);

RatVec real_part(const GaussVec& v);
RatVec imag_part(const GaussVec& v);

/// Rank over the rationals of the given vectors.
int rational_rank(const std::vector<IntVec>& vectors, int dim);
/// Basis (as rational row vectors) of the kernel {x : M x = 0}.
std::vector<RatVec> rational_kernel(const IntMat& m);

std::string vec_str(const IntVec& v);
std::string vec_str(const RatVec& v);
std::string vec_str(const GaussVec& v);

}  // namespace chevalley

#endif  // CHEVALLEY_MATRIX_HPP
