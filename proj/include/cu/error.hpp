// Copyright 2026 The cu-lattice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cu {

enum class ErrorCode {
  ElementModelMismatch,
  UnrepresentableSupremum,
  ParseError,
  InvariantViolation,
  ModelTooLarge,
  NotAdditive,
  NotMonotone,
  NotDominated,
  SearchBoundExceeded,
  NotDirected,
  NotIncreasing,
  NoIndexWithinChain,
  HypothesisFailed,
  GridExhausted,
  NotSimple,
  ProportionalityUnverified,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `witness` holds a replayable description
/// of the offending input (elements, indices) when one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string witness = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::string witness_;
};

}  // namespace cu
