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

#include "depspace/error.h"

namespace depspace {
namespace {

std::string Compose(ErrorCode code, const std::string& message,
                    std::optional<std::size_t> line) {
  std::string out;
  if (line) out += "line " + std::to_string(*line) + ": ";
  out += ErrorCodeName(code);
  if (!message.empty()) out += ": " + message;
  return out;
}

}  // namespace

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvalidName: return "InvalidName";
    case ErrorCode::kDuplicateElementName: return "DuplicateElementName";
    case ErrorCode::kUnknownElementInDelta: return "UnknownElementInDelta";
    case ErrorCode::kDuplicateElementWithinMember:
      return "DuplicateElementWithinMember";
    case ErrorCode::kMemberTooSmall: return "MemberTooSmall";
    case ErrorCode::kForeignElement: return "ForeignElement";
    case ErrorCode::kUnknownElement: return "UnknownElement";
    case ErrorCode::kDependentStart: return "DependentStart";
    case ErrorCode::kNotContained: return "NotContained";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNotABasis: return "NotABasis";
    case ErrorCode::kNotIndependent: return "NotIndependent";
    case ErrorCode::kMalformedCertificate: return "MalformedCertificate";
    case ErrorCode::kTooLargeForExhaustive: return "TooLargeForExhaustive";
    case ErrorCode::kNotAChain: return "NotAChain";
    case ErrorCode::kDependentMember: return "DependentMember";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kDuplicateVector: return "DuplicateVector";
    case ErrorCode::kInfeasibleCount: return "InfeasibleCount";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> member, std::optional<std::size_t> line)
    : std::runtime_error(Compose(code, message, line)),
      code_(code),
      detail_(message),
      member_(member),
      line_(line) {}

Error Error::WithLine(std::size_t line) const {
  return Error(code_, detail_, member_, line);
}

}  // namespace depspace
