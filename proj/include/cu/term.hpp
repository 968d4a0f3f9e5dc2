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

#include <string_view>

#include "cu/realify.hpp"

namespace cu {

/// Parses a RealElement term:
///   expr := prod ('+' prod)*
///   prod := COEF '*' prod | atom
///   atom := hat(ELEM) | sup[expr,...] | diff[expr,expr] | meet[expr,expr] | (expr) | 0
/// COEF is a nonnegative rational or inf. diff[g,f] is the complement of f in g
/// and meet[f,g] the grid meet at denominator `denominator`.
/// Throws Error(ParseError) on malformed input.
RealElement parse_term(const Realification& r, std::string_view text, std::uint64_t denominator = 4);

}  // namespace cu
