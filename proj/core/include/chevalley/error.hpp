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
// Error type shared by every module.

#ifndef CHEVALLEY_ERROR_HPP
#define CHEVALLEY_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace chevalley {

enum class ErrorKind {
  InvalidSpec,
  InvalidCartan,
  RankMismatch,
  NotBasedAut,
  DatumMismatch,
  NoRoots,
  ContextMismatch,
  PreconditionViolated,
  NotInvolution,
  InvalidParam,
  ValidityC,
  ValidityIntegrality,
  ValidityE,
  NormalizationRequired,
  DimensionMismatch,
  ParseError,
  Overflow,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace chevalley

#endif  // CHEVALLEY_ERROR_HPP
