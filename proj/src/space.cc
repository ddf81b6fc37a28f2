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

#include "depspace/space.h"

#include <algorithm>
#include <cctype>

#include "depspace/error.h"

namespace depspace {

bool IsValidToken(std::string_view token) {
  if (token.empty()) return false;
  return std::none_of(token.begin(), token.end(), [](char c) {
    return c == '#' || std::isspace(static_cast<unsigned char>(c));
  });
}

DependenceSpace BuildSpace(
    const std::vector<std::string>& element_names,
    const std::vector<std::vector<std::string>>& delta_members,
    int min_circuit_size) {
  if (min_circuit_size != 1 && min_circuit_size != 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "minimum circuit size must be 1 or 2, got " +
                    std::to_string(min_circuit_size));
  }
  DependenceSpace space;
  space.min_circuit_size_ = min_circuit_size;
  space.names_ = element_names;
  for (std::size_t i = 0; i < element_names.size(); ++i) {
    const std::string& name = element_names[i];
    if (!IsValidToken(name)) {
      throw Error(ErrorCode::kInvalidName, "'" + name + "'");
    }
    if (!space.index_.emplace(name, i).second) {
      throw Error(ErrorCode::kDuplicateElementName, name);
    }
  }

  std::vector<ElementSet> members;
  members.reserve(delta_members.size());
  for (std::size_t m = 0; m < delta_members.size(); ++m) {
    ElementSet member;
    for (const std::string& token : delta_members[m]) {
      const auto it = space.index_.find(token);
      if (it == space.index_.end()) {
        throw Error(ErrorCode::kUnknownElementInDelta, token, m);
      }
      if (member.Contains(it->second)) {
        throw Error(ErrorCode::kDuplicateElementWithinMember, token, m);
      }
      member.Insert(it->second);
    }
    if (member.Size() < static_cast<std::size_t>(min_circuit_size)) {
      throw Error(ErrorCode::kMemberTooSmall,
                  "member has " + std::to_string(member.Size()) +
                      " element(s), minimum is " +
                      std::to_string(min_circuit_size),
                  m);
    }
    members.push_back(std::move(member));
  }
  std::sort(members.begin(), members.end(), LexLess);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  space.delta_ = std::move(members);

  space.ground_ = ElementSet::Prefix(space.names_.size());
  space.words_ = std::max<std::size_t>(
      1, (space.names_.size() + ElementSet::kWordBits - 1) /
             ElementSet::kWordBits);
  space.packed_.assign(space.delta_.size() * space.words_, 0);
  for (std::size_t m = 0; m < space.delta_.size(); ++m) {
    space.delta_[m].CopyWords(
        std::span(space.packed_).subspan(m * space.words_, space.words_));
  }
  return space;
}

DependenceSpace CanonicalForm(const DependenceSpace& space) {
  return BuildSpace(space.names(), DeltaNames(space), space.min_circuit_size());
}

std::optional<ElementId> DependenceSpace::Find(std::string_view name) const {
  const auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return ElementId{it->second};
}

ElementId DependenceSpace::Id(std::string_view name) const {
  if (auto id = Find(name)) return *id;
  throw Error(ErrorCode::kUnknownElement, std::string(name));
}

void DependenceSpace::RequireMember(const ElementSet& set) const {
  if (set.Bound() > size()) {
    throw Error(ErrorCode::kForeignElement,
                "index " + std::to_string(set.Bound() - 1) +
                    " outside ground set of size " + std::to_string(size()));
  }
}

void DependenceSpace::RequireMember(ElementId id) const {
  if (id.index >= size()) {
    throw Error(ErrorCode::kForeignElement,
                "index " + std::to_string(id.index) +
                    " outside ground set of size " + std::to_string(size()));
  }
}

std::vector<std::uint64_t> DependenceSpace::Pack(const ElementSet& set) const {
  std::vector<std::uint64_t> out(std::max(words_, set.words().size()), 0);
  set.CopyWords(out);
  out.resize(words_);
  return out;
}

ElementSet DependenceSpace::SetOf(std::span<const std::string> names) const {
  ElementSet out;
  for (const std::string& name : names) out.Insert(Id(name));
  return out;
}

ElementSet DependenceSpace::SetOf(
    std::initializer_list<std::string_view> names) const {
  ElementSet out;
  for (std::string_view name : names) out.Insert(Id(name));
  return out;
}

std::vector<std::vector<std::string>> DeltaNames(const DependenceSpace& space) {
  std::vector<std::vector<std::string>> out;
  out.reserve(space.delta().size());
  for (const ElementSet& member : space.delta()) {
    out.push_back(NamesOf(space, member));
  }
  return out;
}

std::vector<std::string> NamesOf(const DependenceSpace& space,
                                 const ElementSet& set) {
  std::vector<std::string> out;
  set.ForEach([&](ElementId id) { out.push_back(space.Name(id)); });
  return out;
}

}  // namespace depspace
