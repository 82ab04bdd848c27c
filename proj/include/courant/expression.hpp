// Copyright 2026 The Courant Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <set>
#include <string>
#include <vector>

#include "courant/rational_function.hpp"

namespace courant {

/// Names an expression may refer to.
struct SymbolScope {
  std::vector<std::string> coordinates;
  std::set<std::string> parameters;
  std::set<std::string> functions;

  NameContext names() const { return NameContext{coordinates}; }
};

/// Parses an expression over the scope.
///
/// Grammar: sums and differences of products and quotients of factors; a
/// factor is an optionally negated power `atom ^ n` (n a nonnegative
/// integer); an atom is an integer, a declared name, a jet `f_{x,y}` of a
/// declared function symbol, or a parenthesized expression. `^` binds
/// tighter than unary minus, which binds tighter than `*` and `/`.
///
/// `line` and `column` locate the first character for diagnostics; errors
/// are SyntaxError with the position of the offending token.
RationalFunction parse_expression(const std::string& text, const SymbolScope& scope, int line = 1,
                                  int column = 1);

/// Like parse_expression but rejects non-polynomial results.
Scalar parse_polynomial(const std::string& text, const SymbolScope& scope, int line = 1, int column = 1);

}  // namespace courant
