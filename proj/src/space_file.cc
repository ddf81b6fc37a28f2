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

#include "depspace/space_file.h"

#include <optional>
#include <sstream>
#include <vector>

#include "depspace/error.h"

namespace depspace {
namespace {

std::vector<std::string> Tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string token; in >> token;) out.push_back(std::move(token));
  return out;
}

}  // namespace

DependenceSpace ParseSpaceFile(std::string_view text) {
  std::optional<int> min_size;
  std::optional<std::vector<std::string>> elements;
  std::size_t elements_line = 0;
  std::vector<std::vector<std::string>> delta;
  std::vector<std::size_t> delta_lines;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto tokens = Tokens(line);
    if (tokens.empty()) continue;
    const std::string keyword = tokens.front();
    tokens.erase(tokens.begin());
    const auto fail = [&](const std::string& reason) {
      return Error(ErrorCode::kParseError, reason, std::nullopt, line_no);
    };

    if (keyword == "minsize") {
      if (elements) throw fail("minsize must precede elements");
      if (min_size) throw fail("duplicate minsize directive");
      if (tokens.size() != 1 || (tokens[0] != "1" && tokens[0] != "2")) {
        throw fail("minsize takes a single value, 1 or 2");
      }
      min_size = tokens[0] == "1" ? 1 : 2;
    } else if (keyword == "elements") {
      if (elements) throw fail("duplicate elements line");
      elements = std::move(tokens);
      elements_line = line_no;
    } else if (keyword == "dep") {
      if (!elements) throw fail("dep before elements");
      delta.push_back(std::move(tokens));
      delta_lines.push_back(line_no);
    } else {
      throw fail("unknown directive '" + keyword + "'");
    }
  }
  if (!elements) {
    throw Error(ErrorCode::kParseError, "missing elements line", std::nullopt,
                line_no == 0 ? 1 : line_no);
  }

  try {
    return BuildSpace(*elements, delta, min_size.value_or(2));
  } catch (const Error& e) {
    if (e.member()) throw e.WithLine(delta_lines.at(*e.member()));
    throw e.WithLine(elements_line);
  }
}

std::string FormatSpaceFile(const DependenceSpace& space) {
  std::string out;
  if (space.min_circuit_size() == 1) out += "minsize 1\n";
  out += "elements";
  for (const std::string& name : space.names()) out += " " + name;
  out += '\n';
  for (const auto& member : DeltaNames(space)) {
    out += "dep";
    for (const std::string& name : member) out += " " + name;
    out += '\n';
  }
  return out;
}

}  // namespace depspace
