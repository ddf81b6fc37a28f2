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

#ifndef DEPSPACE_ERROR_H_
#define DEPSPACE_ERROR_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace depspace {

enum class ErrorCode {
  kInvalidArgument,
  kInvalidName,
  kDuplicateElementName,
  kUnknownElementInDelta,
  kDuplicateElementWithinMember,
  kMemberTooSmall,
  kForeignElement,
  kUnknownElement,
  kDependentStart,
  kNotContained,
  kTooLarge,
  kNotABasis,
  kNotIndependent,
  kMalformedCertificate,
  kTooLargeForExhaustive,
  kNotAChain,
  kDependentMember,
  kSelfLoop,
  kDuplicateEdge,
  kDuplicateVector,
  kInfeasibleCount,
  kParseError,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library. `member()` identifies the offending
// delta member (declaration index) when the error concerns one; `line()` is
// set by the space-file parser.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> member = std::nullopt,
        std::optional<std::size_t> line = std::nullopt);

  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }
  std::optional<std::size_t> member() const { return member_; }
  std::optional<std::size_t> line() const { return line_; }

  Error WithLine(std::size_t line) const;

 private:
  ErrorCode code_;
  std::string detail_;
  std::optional<std::size_t> member_;
  std::optional<std::size_t> line_;
};

}  // namespace depspace

#endif  // DEPSPACE_ERROR_H_
