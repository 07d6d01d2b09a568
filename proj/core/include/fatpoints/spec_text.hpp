// Copyright 2026 The fatpoints Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "fatpoints/schemes.hpp"

namespace fatpoints {

// Scheme mini-language:
//
//   system  := "L(" INT "," INT (";" items?)? (";" defs)? ")"
//   items   := item ("," item)*
//   item    := INT brack? pow? at?
//   brack   := "[" group ("+" group)* "]"
//   group   := INT at?
//   pow     := "^" INT
//   at      := "@" ("gen" | "H" INT | "pt" INT | "near(" INT "," SINT ")")
//   defs    := def ("," def)*
//   def     := "pt" INT "=(" SINT ("," SINT)* ")"
//
// e.g. "L(3,3;2^4)", "L(5,4;3[10],2^8,2^6@H3)" or
// "L(2,4;2@pt0,2@pt1;pt0=(1,0,0),pt1=(0,1,0))". Whitespace is ignored.
// "near(c,s)" places a point at center point c plus s times a random vector.
SchemeSpec parse_spec(std::string_view text);

// Canonical text: equal consecutive points are folded into "^k", Generic
// placements are omitted and direction groups are merged.
std::string print_spec(const SchemeSpec& spec);

nlohmann::json spec_to_json(const SchemeSpec& spec);
SchemeSpec spec_from_json(const nlohmann::json& j);

std::string placement_to_string(const Placement& p);

}  // namespace fatpoints
