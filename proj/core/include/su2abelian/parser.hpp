// Copyright 2026 the su2abelian authors.
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

#include <string_view>

#include "su2abelian/presentation.hpp"

namespace su2abelian {

// Parses "<a,b | (a^3 b)^2 b^-3, (a^-1 b^3)^2 a^3>".
//
//   presentation := "<" genlist "|" rellist? ">"
//   genlist      := ident ("," ident)*
//   rellist      := word ("," word)*
//   word         := factor+
//   factor       := (ident | "(" word ")") ("^" sint)?
//   ident        := lowercase-letter digit*
//   sint         := ["-"] digit+
//
// An omitted exponent means 1; inverses are written via "^-1" or negative
// exponents.  Parenthesized subwords and exponents are expanded on the spot.
// Throws ParseError (with position) on malformed input.
GroupPresentation parse_presentation(std::string_view text);

}  // namespace su2abelian
