// Copyright 2026 The Kindi Authors.
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

#ifndef KINDI_LEXER_HPP_
#define KINDI_LEXER_HPP_

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "kindi/error.hpp"

namespace kindi {

enum class TokenKind { Ident, Number, Keyword, Operator, Punct, Eof };

enum class Radix { Binary, Decimal, Hex };

struct Token {
  TokenKind kind = TokenKind::Eof;
  std::string text;
  int line = 1;  // 1-based, first character of the token
  int col = 1;
  // Number payload.
  uint64_t value = 0;
  std::optional<int> width;  // from a width prefix such as 8'd63
  Radix radix = Radix::Decimal;

  bool is(TokenKind k) const { return kind == k; }
  bool is(TokenKind k, std::string_view t) const {
    return kind == k && text == t;
  }
};

inline const std::unordered_set<std::string>& keywords() {
  static const std::unordered_set<std::string> kw = {
      "module", "endmodule", "input",  "output",   "reg",     "logic",
      "wire",   "assign",    "always_ff", "posedge", "begin", "end",
      "if",     "else",      "assert", "assume",   "property"};
  return kw;
}

// Splits source text into tokens. Whitespace, `//` line comments and
// `/* */` block comments are skipped; everything else must form a token.
inline std::vector<Token> tokenize(std::string_view source) {
  std::vector<Token> out;
  size_t i = 0;
  int line = 1, col = 1;

  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k) {
      if (source[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };

  auto is_ident_start = [](char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
  };
  auto is_ident_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
  };

  auto digit_value = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };

  // Reads digits (with optional `_` separators) in the given base.
  auto read_digits = [&](int base, int tline, int tcol) -> uint64_t {
    uint64_t v = 0;
    bool any = false;
    while (i < source.size()) {
      char c = source[i];
      if (c == '_') {
        advance(1);
        continue;
      }
      int d = digit_value(c);
      if (d < 0 || d >= base) break;
      v = v * base + static_cast<uint64_t>(d);
      advance(1);
      any = true;
    }
    if (!any) throw LexError(tline, tcol, "malformed number literal");
    return v;
  };

  while (i < source.size()) {
    char c = source[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < source.size() && source[i + 1] == '/') {
      while (i < source.size() && source[i] != '\n') advance(1);
      continue;
    }
    if (c == '/' && i + 1 < source.size() && source[i + 1] == '*') {
      int cline = line, ccol = col;
      advance(2);
      bool closed = false;
      while (i + 1 < source.size()) {
        if (source[i] == '*' && source[i + 1] == '/') {
          advance(2);
          closed = true;
          break;
        }
        advance(1);
      }
      if (!closed) throw LexError(cline, ccol, "unterminated block comment");
      continue;
    }

    Token tok;
    tok.line = line;
    tok.col = col;

    if (is_ident_start(c)) {
      size_t start = i;
      while (i < source.size() && is_ident_char(source[i])) advance(1);
      tok.text.assign(source.substr(start, i - start));
      tok.kind = keywords().count(tok.text) ? TokenKind::Keyword
                                            : TokenKind::Ident;
      out.push_back(std::move(tok));
      continue;
    }

    if (std::isdigit(static_cast<unsigned char>(c)) || c == '\'') {
      size_t start = i;
      std::optional<int> width;
      if (c != '\'') {
        uint64_t first = read_digits(10, tok.line, tok.col);
        if (i >= source.size() || source[i] != '\'') {
          // Plain unsized decimal literal.
          tok.kind = TokenKind::Number;
          tok.value = first;
          tok.radix = Radix::Decimal;
          tok.text.assign(source.substr(start, i - start));
          out.push_back(std::move(tok));
          continue;
        }
        if (first == 0 || first > 64)
          throw LexError(tok.line, tok.col, "literal width must be 1..64");
        width = static_cast<int>(first);
      }
      // At a base designator: 'd / 'h / 'b.
      advance(1);  // consume '
      if (i >= source.size())
        throw LexError(tok.line, tok.col, "unterminated number literal");
      char basec = source[i];
      int base;
      switch (basec) {
        case 'd':
        case 'D':
          base = 10;
          tok.radix = Radix::Decimal;
          break;
        case 'h':
        case 'H':
          base = 16;
          tok.radix = Radix::Hex;
          break;
        case 'b':
        case 'B':
          base = 2;
          tok.radix = Radix::Binary;
          break;
        default:
          throw LexError(tok.line, tok.col, "unknown number base");
      }
      advance(1);
      uint64_t v = read_digits(base, tok.line, tok.col);
      if (width && *width < 64 && (v >> *width) != 0)
        throw LexError(tok.line, tok.col, "literal value exceeds its width");
      tok.kind = TokenKind::Number;
      tok.value = v;
      tok.width = width;
      tok.text.assign(source.substr(start, i - start));
      out.push_back(std::move(tok));
      continue;
    }

    // Operators and punctuation. Two-character operators first.
    auto two = (i + 1 < source.size()) ? source.substr(i, 2) : std::string_view{};
    static constexpr std::string_view two_ops[] = {"<=", ">=", "==", "!="};
    bool matched = false;
    for (auto op : two_ops) {
      if (two == op) {
        tok.kind = TokenKind::Operator;
        tok.text.assign(op);
        advance(2);
        out.push_back(std::move(tok));
        matched = true;
        break;
      }
    }
    if (matched) continue;

    static const std::string one_ops = "+-&|^~!?:=<>{}[]";
    static const std::string puncts = ";,()@";
    if (one_ops.find(c) != std::string::npos) {
      tok.kind = TokenKind::Operator;
      tok.text.assign(1, c);
      advance(1);
      out.push_back(std::move(tok));
      continue;
    }
    if (puncts.find(c) != std::string::npos) {
      tok.kind = TokenKind::Punct;
      tok.text.assign(1, c);
      advance(1);
      out.push_back(std::move(tok));
      continue;
    }
    throw LexError(line, col, std::string("illegal character '") + c + "'");
  }

  Token eof;
  eof.kind = TokenKind::Eof;
  eof.line = line;
  eof.col = col;
  out.push_back(std::move(eof));
  return out;
}

}  // namespace kindi

#endif  // KINDI_LEXER_HPP_
