// Copyright 2026 The cliffgraph Authors
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

#include "cliffgraph/family.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "cliffgraph/error.hpp"

namespace cliffgraph {

namespace {

struct KindName {
  FamilyKind kind;
  std::string_view name;
};

constexpr KindName kKinds[] = {
    {FamilyKind::kPath, "path"},         {FamilyKind::kStar, "star"},
    {FamilyKind::kComplete, "complete"}, {FamilyKind::kCycle, "cycle"},
    {FamilyKind::kEdgeless, "edgeless"}, {FamilyKind::kGkm, "gkm"},
    {FamilyKind::kUnion, "union"},
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FamilySpec parse_all() {
    FamilySpec spec = parse_spec();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  std::string_view word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  int integer() {
    skip_space();
    int value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{}) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  FamilySpec parse_spec() {
    const std::size_t start = pos_;
    const std::string_view name = word();
    if (name.empty()) fail("expected a family name");
    expect(':');
    FamilySpec spec;
    if (name == "dynkin") {
      skip_space();
      if (pos_ >= text_.size()) fail("expected Dynkin type A, D or E");
      switch (text_[pos_]) {
        case 'A': spec.kind = FamilyKind::kDynkinA; break;
        case 'D': spec.kind = FamilyKind::kDynkinD; break;
        case 'E': spec.kind = FamilyKind::kDynkinE; break;
        default: fail("expected Dynkin type A, D or E");
      }
      ++pos_;
      spec.parameters.push_back(integer());
      return spec;
    }
    bool known = false;
    for (const auto& k : kKinds) {
      if (k.name == name) {
        spec.kind = k.kind;
        known = true;
      }
    }
    if (!known) throw ParseError(start, "unknown family '" + std::string(name) + "'");
    if (spec.kind == FamilyKind::kUnion) {
      expect('(');
      spec.operands.push_back(parse_spec());
      while (consume(',')) spec.operands.push_back(parse_spec());
      expect(')');
      if (spec.operands.size() < 2) fail("union needs at least two operands");
      return spec;
    }
    spec.parameters.push_back(integer());
    if (spec.kind == FamilyKind::kGkm) {
      expect(',');
      spec.parameters.push_back(integer());
    }
    return spec;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void require_arity(const FamilySpec& spec, std::size_t count) {
  if (spec.parameters.size() != count) {
    throw Error(ErrorKind::kParameter, "family " + to_string(spec) + " expects " +
                                           std::to_string(count) + " parameter(s)");
  }
}

}  // namespace

FamilySpec parse_family(std::string_view text) { return Parser(text).parse_all(); }

std::string to_string(const FamilySpec& spec) {
  auto params = [&] {
    std::string out;
    for (std::size_t i = 0; i < spec.parameters.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(spec.parameters[i]);
    }
    return out;
  };
  switch (spec.kind) {
    case FamilyKind::kDynkinA: return "dynkin:A" + params();
    case FamilyKind::kDynkinD: return "dynkin:D" + params();
    case FamilyKind::kDynkinE: return "dynkin:E" + params();
    case FamilyKind::kUnion: {
      std::string out = "union:(";
      for (std::size_t i = 0; i < spec.operands.size(); ++i) {
        if (i) out += ',';
        out += to_string(spec.operands[i]);
      }
      return out + ")";
    }
    default:
      break;
  }
  for (const auto& k : kKinds) {
    if (k.kind == spec.kind) return std::string(k.name) + ":" + params();
  }
  return "?";
}

Graph build_family(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::kPath: require_arity(spec, 1); return path_graph(spec.parameters[0]);
    case FamilyKind::kStar: require_arity(spec, 1); return star_graph(spec.parameters[0]);
    case FamilyKind::kComplete: require_arity(spec, 1); return complete_graph(spec.parameters[0]);
    case FamilyKind::kCycle: require_arity(spec, 1); return cycle_graph(spec.parameters[0]);
    case FamilyKind::kEdgeless: require_arity(spec, 1); return edgeless_graph(spec.parameters[0]);
    case FamilyKind::kGkm:
      require_arity(spec, 2);
      return gkm_graph(spec.parameters[0], spec.parameters[1]);
    case FamilyKind::kDynkinA: require_arity(spec, 1); return dynkin_graph(DynkinType::kA, spec.parameters[0]);
    case FamilyKind::kDynkinD: require_arity(spec, 1); return dynkin_graph(DynkinType::kD, spec.parameters[0]);
    case FamilyKind::kDynkinE: require_arity(spec, 1); return dynkin_graph(DynkinType::kE, spec.parameters[0]);
    case FamilyKind::kUnion: {
      if (spec.operands.size() < 2) throw Error(ErrorKind::kParameter, "union needs at least two operands");
      Graph g = build_family(spec.operands[0]);
      for (std::size_t i = 1; i < spec.operands.size(); ++i) g = disjoint_union(g, build_family(spec.operands[i]));
      return g;
    }
  }
  throw Error(ErrorKind::kParameter, "unknown family");
}

}  // namespace cliffgraph
