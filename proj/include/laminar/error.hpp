// Copyright 2026 The Authors.
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

#ifndef LAMINAR_ERROR_HPP_
#define LAMINAR_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace laminar {

enum class ErrorKind {
  kBadIdentifier,
  kDuplicateElement,
  kForeignElement,
  kNotAnAntichain,
  kEliminationFails,
  kOverlappingSets,
  kRankZero,
  kBadBasepoint,
  kTooSmall,
  kTooLarge,
  kNotLaminar,
  kNegativeCapacity,
  kEmptyMemberSet,
  kLoopBase,
  kNotCanonical,
  kNotAChain,
  kBadParams,
  kUndefinedName,
  kParseError,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this exception. The message is a
// single line suitable for printing as-is.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        message_(message) {}

  ErrorKind kind() const { return kind_; }
  // The message without the kind prefix.
  const std::string& message() const { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

}  // namespace laminar

#endif  // LAMINAR_ERROR_HPP_
