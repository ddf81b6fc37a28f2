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

#ifndef DEPSPACE_SPACE_FILE_H_
#define DEPSPACE_SPACE_FILE_H_

#include <string>
#include <string_view>

#include "depspace/space.h"

namespace depspace {

// Line-oriented text format:
//
//   # comment               ('#' to end of line is ignored anywhere)
//   minsize 1               optional, before `elements`
//   elements a b c d        exactly once, first content line after minsize
//   dep a b c               zero or more, one delta member each
//
// Throws Error with line() set: kParseError for structural problems, and
// the BuildSpace codes for the element and member problems they describe.
DependenceSpace ParseSpaceFile(std::string_view text);

// Canonical rendering; ParseSpaceFile(FormatSpaceFile(s)) == s and
// formatting that result again reproduces the same bytes.
std::string FormatSpaceFile(const DependenceSpace& space);

}  // namespace depspace

#endif  // DEPSPACE_SPACE_FILE_H_
