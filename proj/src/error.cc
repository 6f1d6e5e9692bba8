/*
 * Copyright 2026 The realcyclo Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "realcyclo/error.h"

namespace realcyclo {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidConductor:
      return "InvalidConductor";
    case ErrorCode::kZeroElement:
      return "ZeroElement";
    case ErrorCode::kNoSuchRoot:
      return "NoSuchRoot";
    case ErrorCode::kSizeMismatch:
      return "SizeMismatch";
    case ErrorCode::kDomainMismatch:
      return "DomainMismatch";
    case ErrorCode::kModulusUnsuitable:
      return "ModulusUnsuitable";
    case ErrorCode::kDegreeTooLarge:
      return "DegreeTooLarge";
    case ErrorCode::kSingularMatrix:
      return "SingularMatrix";
    case ErrorCode::kIllConditioned:
      return "IllConditioned";
    case ErrorCode::kNotARoot:
      return "NotARoot";
    case ErrorCode::kInvalidK:
      return "InvalidK";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kOverflow:
      return "Overflow";
  }
  return "Unknown";
}

}  // namespace realcyclo
