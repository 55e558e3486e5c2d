// Copyright 2026 The Netstate Authors.
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


#ifndef NETSTATE_SQL_LEXER_H_
#define NETSTATE_SQL_LEXER_H_

#include <string>
#include <string_view>
#include <vector>

namespace netstate::sql {

struct Token {
  enum class Kind {
    kWord,       // identifier or keyword, text as written
    kNumber,     // decimal literal, optional leading '-'
    kString,     // quoted literal, text unescaped
    kLParen,
    kRParen,
    kComma,
    kStar,
    kSemicolon,
    kOperator,   // = < > <= >= <> !=
    kOther,      // + - / % . || : arithmetic and qualified names
    kEnd,
  };

  Kind kind;
  std::string text;
  size_t offset;  // byte offset of the first character
  size_t end;     // one past the last character
};

// Tokenizes the whole input; throws SqlError(kLexical) on a bad character,
// an unterminated string or an over-precise number.
std::vector<Token> Lex(std::string_view text);

// Like Lex but stops quietly at the first lexical error. The returned
// tokens never include kEnd.
std::vector<Token> LexPrefix(std::string_view text);

}  // namespace netstate::sql

#endif  // NETSTATE_SQL_LEXER_H_
