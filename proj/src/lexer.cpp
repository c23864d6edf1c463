// vgdlgen/lexer.cpp
#include "vgdlgen/lexer.hpp"

#include <cctype>

namespace vgdlgen {

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      if (pos < text.size()) lines.push_back(text.substr(pos));
      break;
    }
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  return lines;
}

}  // namespace

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::Identifier: return "IDENTIFIER";
    case TokenKind::Char: return "CHAR";
    case TokenKind::Gt: return "GT";
    case TokenKind::Equals: return "EQUALS";
    case TokenKind::Literal: return "LITERAL";
    case TokenKind::Newline: return "NEWLINE";
    case TokenKind::Indent: return "INDENT";
    case TokenKind::Dedent: return "DEDENT";
    case TokenKind::Eof: return "EOF";
  }
  return "?";
}

Expected<std::vector<Token>, ParseError> tokenize(std::string_view text, const LexOptions& opts) {
  std::vector<Token> out;
  std::vector<int> indent_stack{0};
  const auto lines = split_lines(text);
  int line_no = 0;

  for (std::string_view line : lines) {
    ++line_no;

    // Leading whitespace, tabs counting as opts.tab_width columns.
    int indent = 0;
    size_t i = 0;
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
      indent += line[i] == '\t' ? opts.tab_width : 1;
      ++i;
    }
    if (i >= line.size() || line[i] == '#') continue;  // blank or comment-only

    if (indent > indent_stack.back()) {
      indent_stack.push_back(indent);
      out.push_back({TokenKind::Indent, "", line_no, 1});
    } else {
      while (indent < indent_stack.back()) {
        indent_stack.pop_back();
        out.push_back({TokenKind::Dedent, "", line_no, 1});
      }
      if (indent != indent_stack.back()) {
        return ParseError{ErrorCategory::Syntax,
                          "inconsistent dedent: column " + std::to_string(indent) +
                              " was never on the indentation stack",
                          line_no, static_cast<int>(i) + 1};
      }
    }

    while (i < line.size()) {
      char c = line[i];
      if (c == ' ' || c == '\t') {
        ++i;
        continue;
      }
      if (c == '#') break;  // comment to end of line
      int col = static_cast<int>(i) + 1;
      if (is_ident_start(c)) {
        size_t start = i;
        while (i < line.size() && is_ident_char(line[i])) ++i;
        out.push_back({TokenKind::Identifier, std::string(line.substr(start, i - start)),
                       line_no, col});
      } else if (is_digit(c) ||
                 ((c == '-' || c == '+') && i + 1 < line.size() && is_digit(line[i + 1]))) {
        size_t start = i;
        if (c == '-' || c == '+') ++i;
        while (i < line.size() && is_digit(line[i])) ++i;
        if (i + 1 < line.size() && line[i] == '.' && is_digit(line[i + 1])) {
          ++i;
          while (i < line.size() && is_digit(line[i])) ++i;
        }
        out.push_back({TokenKind::Literal, std::string(line.substr(start, i - start)),
                       line_no, col});
      } else if (c == '>') {
        out.push_back({TokenKind::Gt, ">", line_no, col});
        ++i;
      } else if (c == '=') {
        out.push_back({TokenKind::Equals, "=", line_no, col});
        ++i;
      } else {
        out.push_back({TokenKind::Char, std::string(1, c), line_no, col});
        ++i;
      }
    }
    out.push_back({TokenKind::Newline, "", line_no, static_cast<int>(line.size()) + 1});
  }

  while (indent_stack.size() > 1) {
    indent_stack.pop_back();
    out.push_back({TokenKind::Dedent, "", line_no + 1, 1});
  }
  out.push_back({TokenKind::Eof, "", line_no + 1, 1});
  return out;
}

}  // namespace vgdlgen
