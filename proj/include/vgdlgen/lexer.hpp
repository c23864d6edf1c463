// vgdlgen/lexer.hpp - Indentation-sensitive tokenizer for game descriptions.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vgdlgen/expected.hpp"

namespace vgdlgen {

enum class TokenKind { Identifier, Char, Gt, Equals, Literal, Newline, Indent, Dedent, Eof };

std::string_view token_kind_name(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::Eof;
  std::string text;
  int line = 0;  // 1-based
  int col = 0;   // 1-based
};

enum class ErrorCategory { Keyword, Syntax };

/// A single parse failure. Keyword means the stream was structurally valid
/// but a position requiring a reserved word (a block header or the game
/// class) held an unknown word; every other failure is Syntax.
struct ParseError {
  ErrorCategory category = ErrorCategory::Syntax;
  std::string message;
  int line = 0;
  int col = 0;
};

struct LexOptions {
  int tab_width = 4;  // columns per tab when computing indentation
};

/// Splits text into tokens with layout handling: indentation changes emit
/// Indent/Dedent, '#' starts a comment consumed to end of line, and blank or
/// comment-only lines emit nothing. Indent/Dedent are balanced in any stream
/// that lexes without error. Fails when a line dedents to a column that was
/// never on the indentation stack.
Expected<std::vector<Token>, ParseError> tokenize(std::string_view text,
                                                  const LexOptions& opts = {});

}  // namespace vgdlgen
