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

#include "courant/expression.hpp"

#include <algorithm>
#include <cctype>

#include "courant/errors.hpp"

namespace courant {

namespace {

enum class Tok { Number, Ident, Jet, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::vector<std::string> jet;  // coordinate names of a jet multi-index
  int column;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

class Parser {
 public:
  Parser(const std::string& text, const SymbolScope& scope, int line, int column)
      : text_(text), scope_(scope), line_(line), column0_(column) {
    advance();
  }

  RationalFunction parse() {
    RationalFunction value = expression();
    if (tok_.kind != Tok::End) fail("unexpected '" + tok_.text + "'", "operator or end of expression");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what, const std::string& expected) const {
    throw SyntaxError(what + "; expected " + expected, line_, column0_ + tok_.column);
  }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    tok_ = Token{Tok::End, "end of expression", {}, static_cast<int>(pos_)};
    if (pos_ >= text_.size()) return;
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      tok_.kind = Tok::Number;
      tok_.text = text_.substr(start, pos_ - start);
      return;
    }
    if (ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) {
        if (text_[pos_] == '_' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '{') break;
        ++pos_;
      }
      tok_.kind = Tok::Ident;
      tok_.text = text_.substr(start, pos_ - start);
      if (pos_ + 1 < text_.size() && text_[pos_] == '_' && text_[pos_ + 1] == '{') lex_jet();
      return;
    }
    static const std::string ops = "+-*/^()";
    static const Tok kinds[] = {Tok::Plus, Tok::Minus, Tok::Star, Tok::Slash, Tok::Caret, Tok::LParen, Tok::RParen};
    const auto at = ops.find(c);
    if (at == std::string::npos) {
      tok_.text = std::string(1, c);
      fail("unexpected character '" + tok_.text + "'", "number, name, operator or parenthesis");
    }
    tok_.kind = kinds[at];
    tok_.text = std::string(1, c);
    ++pos_;
  }

  void lex_jet() {
    pos_ += 2;
    tok_.kind = Tok::Jet;
    while (true) {
      while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
      const std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      if (start == pos_) {
        tok_.column = static_cast<int>(pos_);
        fail("malformed jet index", "coordinate name");
      }
      tok_.jet.push_back(text_.substr(start, pos_ - start));
      while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (pos_ < text_.size() && text_[pos_] == '}') {
        ++pos_;
        break;
      }
      tok_.column = static_cast<int>(pos_);
      fail("unterminated jet index", "',' or '}'");
    }
  }

  RationalFunction expression() {
    RationalFunction value = product();
    while (tok_.kind == Tok::Plus || tok_.kind == Tok::Minus) {
      const bool minus = tok_.kind == Tok::Minus;
      advance();
      const RationalFunction rhs = product();
      if (minus) value -= rhs;
      else value += rhs;
    }
    return value;
  }

  RationalFunction product() {
    RationalFunction value = signed_factor();
    while (tok_.kind == Tok::Star || tok_.kind == Tok::Slash) {
      const bool divide = tok_.kind == Tok::Slash;
      const Token op = tok_;
      advance();
      const Token rhs_tok = tok_;
      const RationalFunction rhs = signed_factor();
      if (divide) {
        if (rhs.is_zero()) {
          tok_ = rhs_tok;
          fail("division by zero", "nonzero divisor");
        }
        value /= rhs;
      } else {
        value *= rhs;
      }
    }
    return value;
  }

  RationalFunction signed_factor() {
    if (tok_.kind == Tok::Minus) {
      advance();
      return -signed_factor();
    }
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (tok_.kind != Tok::Caret) return base;
    advance();
    if (tok_.kind != Tok::Number) fail("bad exponent '" + tok_.text + "'", "nonnegative integer exponent");
    if (tok_.text.size() > 4) fail("exponent too large", "exponent below 10000");
    const auto exponent = static_cast<unsigned>(std::stoul(tok_.text));
    advance();
    return base.pow(exponent);
  }

  RationalFunction atom() {
    switch (tok_.kind) {
      case Tok::Number: {
        const Rational value = Rational::parse(tok_.text);
        advance();
        return RationalFunction(value);
      }
      case Tok::Ident: {
        RationalFunction value = name(tok_.text);
        advance();
        return value;
      }
      case Tok::Jet: {
        if (!scope_.functions.count(tok_.text)) fail("'" + tok_.text + "' is not a declared function symbol", "function symbol");
        Scalar f = Scalar::function(tok_.text);
        for (const auto& c : tok_.jet) f = f.differentiate(coordinate_index(c));
        advance();
        return RationalFunction(f);
      }
      case Tok::LParen: {
        advance();
        RationalFunction value = expression();
        if (tok_.kind != Tok::RParen) fail("unexpected '" + tok_.text + "'", "')'");
        advance();
        return value;
      }
      default:
        fail("unexpected '" + tok_.text + "'", "number, name, '-' or '('");
    }
  }

  std::size_t coordinate_index(const std::string& n) const {
    const auto& c = scope_.coordinates;
    const auto it = std::find(c.begin(), c.end(), n);
    if (it == c.end()) fail("'" + n + "' is not a declared coordinate", "coordinate name");
    return static_cast<std::size_t>(it - c.begin());
  }

  RationalFunction name(const std::string& n) const {
    const auto& c = scope_.coordinates;
    if (const auto it = std::find(c.begin(), c.end(), n); it != c.end()) {
      return RationalFunction(Scalar::coordinate(static_cast<std::size_t>(it - c.begin())));
    }
    if (scope_.parameters.count(n)) return RationalFunction(Scalar::parameter(n));
    if (scope_.functions.count(n)) return RationalFunction(Scalar::function(n));
    fail("undeclared name '" + n + "'", "declared coordinate, parameter or function symbol");
  }

  const std::string& text_;
  const SymbolScope& scope_;
  int line_;
  int column0_;
  std::size_t pos_ = 0;
  Token tok_{Tok::End, "", {}, 0};
};

}  // namespace

RationalFunction parse_expression(const std::string& text, const SymbolScope& scope, int line, int column) {
  return Parser(text, scope, line, column).parse();
}

Scalar parse_polynomial(const std::string& text, const SymbolScope& scope, int line, int column) {
  const RationalFunction value = parse_expression(text, scope, line, column);
  if (!value.is_polynomial()) throw SyntaxError("expression is not a polynomial", line, column);
  return value.numerator();
}

}  // namespace courant
