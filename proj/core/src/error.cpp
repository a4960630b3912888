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

#include "chevalley/error.hpp"

namespace chevalley {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::InvalidCartan: return "InvalidCartan";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NotBasedAut: return "NotBasedAut";
    case ErrorKind::DatumMismatch: return "DatumMismatch";
    case ErrorKind::NoRoots: return "NoRoots";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotInvolution: return "NotInvolution";
    case ErrorKind::InvalidParam: return "InvalidParam";
    case ErrorKind::ValidityC: return "ValidityC";
    case ErrorKind::ValidityIntegrality: return "ValidityIntegrality";
    case ErrorKind::ValidityE: return "ValidityE";
    case ErrorKind::NormalizationRequired: return "NormalizationRequired";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace chevalley
