#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace carma {

enum class TokenKind : std::uint8_t {
  End,
  Ident,
  Integer,
  Real,
  LParen,
  RParen,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  Less,
  Greater,
  LessEq,
  GreaterEq,
  EqEq,
  NotEq,
  Assign,      // =
  ColonEq,     // :=
  Plus,
  Minus,
  Star,
  Slash,
  Percent,
  Bang,
  AndAnd,
  OrOr,
  Bar,
  Comma,
  Semicolon,
  Colon,
  Dot,
  At,
};

const char* tokenKindName(TokenKind k);

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  std::uint64_t integer = 0;  // magnitude of an Integer token
  double real = 0.0;
  int line = 1;
  int column = 1;
};

/// Splits model text into tokens; `#` starts a comment up to the end of the
/// line. Throws ParseError on characters outside the language and on
/// integer literals that do not fit in 64 bits.
class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}
  Token next();

 private:
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0'; }
  void advance();
  void skipSpace();
  Token number(Token t);

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace carma
