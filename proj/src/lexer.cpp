#include "carma/lexer.hpp"

#include <cctype>
#include <charconv>

#include "carma/parser.hpp"

namespace carma {

const char* tokenKindName(TokenKind k) {
  switch (k) {
    case TokenKind::End: return "end of input";
    case TokenKind::Ident: return "identifier";
    case TokenKind::Integer: return "integer";
    case TokenKind::Real: return "real";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::Less: return "'<'";
    case TokenKind::Greater: return "'>'";
    case TokenKind::LessEq: return "'<='";
    case TokenKind::GreaterEq: return "'>='";
    case TokenKind::EqEq: return "'=='";
    case TokenKind::NotEq: return "'!='";
    case TokenKind::Assign: return "'='";
    case TokenKind::ColonEq: return "':='";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Slash: return "'/'";
    case TokenKind::Percent: return "'%'";
    case TokenKind::Bang: return "'!'";
    case TokenKind::AndAnd: return "'&&'";
    case TokenKind::OrOr: return "'||'";
    case TokenKind::Bar: return "'|'";
    case TokenKind::Comma: return "','";
    case TokenKind::Semicolon: return "';'";
    case TokenKind::Colon: return "':'";
    case TokenKind::Dot: return "'.'";
    case TokenKind::At: return "'@'";
  }
  return "?";
}

void Lexer::advance() {
  if (pos_ < src_.size() && src_[pos_] == '\n') {
    ++line_;
    column_ = 1;
  } else {
    ++column_;
  }
  ++pos_;
}

void Lexer::skipSpace() {
  while (pos_ < src_.size()) {
    char c = src_[pos_];
    if (c == '#') {
      while (pos_ < src_.size() && src_[pos_] != '\n') advance();
    } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance();
    } else {
      break;
    }
  }
}

namespace {

bool isDigit(char c) { return c >= '0' && c <= '9'; }
bool isIdentStart(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool isIdentChar(char c) { return isIdentStart(c) || isDigit(c); }

}  // namespace

Token Lexer::number(Token t) {
  std::size_t start = pos_;
  while (isDigit(peek())) advance();
  bool real = false;
  if (peek() == '.' && isDigit(peek(1))) {
    real = true;
    advance();
    while (isDigit(peek())) advance();
  }
  if ((peek() == 'e' || peek() == 'E') &&
      (isDigit(peek(1)) || ((peek(1) == '+' || peek(1) == '-') && isDigit(peek(2))))) {
    real = true;
    advance();
    if (peek() == '+' || peek() == '-') advance();
    while (isDigit(peek())) advance();
  }
  t.text = std::string(src_.substr(start, pos_ - start));
  const char* b = t.text.data();
  const char* e = b + t.text.size();
  if (real) {
    t.kind = TokenKind::Real;
    auto [p, ec] = std::from_chars(b, e, t.real);
    if (ec != std::errc() || p != e) throw ParseError(t.line, t.column, "real literal out of range");
  } else {
    t.kind = TokenKind::Integer;
    auto [p, ec] = std::from_chars(b, e, t.integer);
    if (ec != std::errc() || p != e) throw ParseError(t.line, t.column, "integer literal out of range");
  }
  if (isIdentStart(peek())) throw ParseError(line_, column_, "unexpected character after number");
  return t;
}

Token Lexer::next() {
  skipSpace();
  Token t;
  t.line = line_;
  t.column = column_;
  if (pos_ >= src_.size()) return t;
  char c = peek();
  if (isDigit(c)) return number(std::move(t));
  if (isIdentStart(c)) {
    std::size_t start = pos_;
    while (isIdentChar(peek())) advance();
    t.kind = TokenKind::Ident;
    t.text = std::string(src_.substr(start, pos_ - start));
    return t;
  }
  auto two = [&](char second, TokenKind yes, TokenKind no) {
    advance();
    if (peek() == second) {
      advance();
      return yes;
    }
    return no;
  };
  switch (c) {
    case '(': advance(); t.kind = TokenKind::LParen; break;
    case ')': advance(); t.kind = TokenKind::RParen; break;
    case '[': advance(); t.kind = TokenKind::LBracket; break;
    case ']': advance(); t.kind = TokenKind::RBracket; break;
    case '{': advance(); t.kind = TokenKind::LBrace; break;
    case '}': advance(); t.kind = TokenKind::RBrace; break;
    case '+': advance(); t.kind = TokenKind::Plus; break;
    case '-': advance(); t.kind = TokenKind::Minus; break;
    case '*': advance(); t.kind = TokenKind::Star; break;
    case '/': advance(); t.kind = TokenKind::Slash; break;
    case '%': advance(); t.kind = TokenKind::Percent; break;
    case ',': advance(); t.kind = TokenKind::Comma; break;
    case ';': advance(); t.kind = TokenKind::Semicolon; break;
    case '.': advance(); t.kind = TokenKind::Dot; break;
    case '@': advance(); t.kind = TokenKind::At; break;
    case '<': t.kind = two('=', TokenKind::LessEq, TokenKind::Less); break;
    case '>': t.kind = two('=', TokenKind::GreaterEq, TokenKind::Greater); break;
    case '=': t.kind = two('=', TokenKind::EqEq, TokenKind::Assign); break;
    case '!': t.kind = two('=', TokenKind::NotEq, TokenKind::Bang); break;
    case ':': t.kind = two('=', TokenKind::ColonEq, TokenKind::Colon); break;
    case '|': t.kind = two('|', TokenKind::OrOr, TokenKind::Bar); break;
    case '&':
      advance();
      if (peek() != '&') throw ParseError(t.line, t.column, "unexpected character '&'", {"'&&'"});
      advance();
      t.kind = TokenKind::AndAnd;
      break;
    default: {
      unsigned char u = static_cast<unsigned char>(c);
      std::string shown = std::isprint(u) ? std::string("'") + c + "'" : "byte " + std::to_string(u);
      throw ParseError(t.line, t.column, "unexpected character " + shown);
    }
  }
  return t;
}

}  // namespace carma
