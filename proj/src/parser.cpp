// vgdlgen/parser.cpp
#include "vgdlgen/parser.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace vgdlgen {

namespace {

const std::map<std::string, BlockKind, std::less<>>& block_headers() {
  static const std::map<std::string, BlockKind, std::less<>> headers = {
      {"LevelMapping", BlockKind::LevelMapping},
      {"SpriteSet", BlockKind::SpriteSet},
      {"InteractionSet", BlockKind::InteractionSet},
      {"TerminationSet", BlockKind::TerminationSet},
  };
  return headers;
}

int canonical_index(BlockKind kind) {
  switch (kind) {
    case BlockKind::LevelMapping: return 0;
    case BlockKind::SpriteSet: return 1;
    case BlockKind::InteractionSet: return 2;
    case BlockKind::TerminationSet: return 3;
  }
  return -1;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const ParseOptions& opts)
      : tokens_(std::move(tokens)), opts_(opts) {}

  Expected<GameSpec, ParseError> run() {
    GameSpec spec;

    // Game class line: a single identifier followed by end of line.
    if (cur().kind != TokenKind::Identifier) {
      return fail("expected a game class identifier");
    }
    std::string game_class = cur().text;
    const Token& class_token = cur();
    advance();
    if (cur().kind != TokenKind::Newline) {
      return fail("unexpected token after game class");
    }
    if (!known_game_class(game_class)) {
      return ParseError{ErrorCategory::Keyword, "unknown game class '" + game_class + "'",
                        class_token.line, class_token.col};
    }
    spec.game_class = std::move(game_class);
    advance();  // newline

    if (cur().kind != TokenKind::Indent) {
      return fail("expected an indented game body");
    }
    advance();

    while (cur().kind != TokenKind::Dedent) {
      // A block header is a lone identifier on its own line. A known word
      // opens the block; an unknown lone word is a Keyword error; anything
      // else is malformed structure.
      if (cur().kind != TokenKind::Identifier) {
        return fail("expected a block header");
      }
      if (peek().kind != TokenKind::Newline) {
        return fail("expected end of line after block header");
      }
      auto it = block_headers().find(cur().text);
      if (it == block_headers().end()) {
        return ParseError{ErrorCategory::Keyword, "unknown block header '" + cur().text + "'",
                          cur().line, cur().col};
      }
      BlockKind kind = it->second;
      const Token& header = cur();
      if (std::find(spec.block_order.begin(), spec.block_order.end(), kind) !=
          spec.block_order.end()) {
        return ParseError{ErrorCategory::Syntax,
                          "duplicate block '" + std::string(block_name(kind)) + "'", header.line,
                          header.col};
      }
      if (opts_.strict_block_order && !spec.block_order.empty() &&
          canonical_index(kind) < canonical_index(spec.block_order.back())) {
        return ParseError{ErrorCategory::Syntax,
                          "block '" + std::string(block_name(kind)) +
                              "' out of canonical order (LevelMapping, SpriteSet, "
                              "InteractionSet, TerminationSet)",
                          header.line, header.col};
      }
      spec.block_order.push_back(kind);
      advance();  // header
      advance();  // newline

      if (error_) return *error_;
      bool has_body = cur().kind == TokenKind::Indent;
      if (has_body) advance();
      switch (kind) {
        case BlockKind::SpriteSet:
          if (has_body) spec.sprite_roots = parse_sprites();
          break;
        case BlockKind::LevelMapping:
          if (has_body) spec.level_mapping = parse_mapping();
          break;
        case BlockKind::InteractionSet:
          if (has_body) spec.interactions = parse_interactions();
          break;
        case BlockKind::TerminationSet:
          if (has_body) spec.terminations = parse_terminations();
          break;
      }
      if (error_) return *error_;
      if (has_body) {
        if (cur().kind != TokenKind::Dedent) return fail("expected end of block");
        advance();
      }
    }
    advance();  // dedent closing the game body

    if (cur().kind != TokenKind::Eof) {
      return fail("unexpected content after game description");
    }

    if (auto err = check_sprite_names(spec)) return *err;
    return spec;
  }

 private:
  const Token& cur() const { return tokens_[index_]; }
  const Token& peek() const {
    return index_ + 1 < tokens_.size() ? tokens_[index_ + 1] : tokens_.back();
  }
  void advance() {
    if (index_ + 1 < tokens_.size()) ++index_;
  }

  ParseError fail(std::string message) {
    ParseError err{ErrorCategory::Syntax, std::move(message), cur().line, cur().col};
    error_ = err;
    return err;
  }

  bool known_game_class(const std::string& name) const {
    return std::find(opts_.known_game_classes.begin(), opts_.known_game_classes.end(), name) !=
           opts_.known_game_classes.end();
  }

  // key=value pairs; the caller decides what a bare identifier means.
  std::vector<Option> parse_options(const char* context) {
    std::vector<Option> options;
    while (cur().kind == TokenKind::Identifier && peek().kind == TokenKind::Equals) {
      std::string key = cur().text;
      if (std::any_of(options.begin(), options.end(),
                      [&](const Option& o) { return o.key == key; })) {
        fail("duplicate option '" + key + "' in " + context);
        return options;
      }
      advance();  // key
      advance();  // '='
      if (cur().kind != TokenKind::Identifier && cur().kind != TokenKind::Literal) {
        fail("expected an option value");
        return options;
      }
      options.push_back({std::move(key), make_value(cur().text)});
      advance();
    }
    return options;
  }

  bool expect_newline(const char* what) {
    if (cur().kind != TokenKind::Newline) {
      fail(std::string("unexpected token in ") + what);
      return false;
    }
    advance();
    return true;
  }

  std::vector<SpriteDef> parse_sprites() {
    std::vector<SpriteDef> defs;
    while (!error_ && cur().kind != TokenKind::Dedent && cur().kind != TokenKind::Eof) {
      if (cur().kind != TokenKind::Identifier) {
        fail("expected a sprite definition");
        break;
      }
      SpriteDef def;
      def.stype = cur().text;
      advance();
      if (cur().kind != TokenKind::Gt) {
        fail("expected '>' after sprite type '" + def.stype + "'");
        break;
      }
      advance();
      if (cur().kind == TokenKind::Identifier && peek().kind != TokenKind::Equals) {
        def.sprite_class = cur().text;
        advance();
      }
      def.options = parse_options("sprite definition");
      if (error_) break;
      if (cur().kind == TokenKind::Identifier) {
        fail("expected key=value option, got bare identifier '" + cur().text + "'");
        break;
      }
      if (!expect_newline("sprite definition")) break;
      if (cur().kind == TokenKind::Indent) {
        advance();
        def.children = parse_sprites();
        if (error_) break;
        if (cur().kind != TokenKind::Dedent) {
          fail("expected end of nested sprite definitions");
          break;
        }
        advance();
      }
      defs.push_back(std::move(def));
    }
    return defs;
  }

  std::vector<CharMap> parse_mapping() {
    std::vector<CharMap> maps;
    while (!error_ && cur().kind != TokenKind::Dedent && cur().kind != TokenKind::Eof) {
      if (cur().kind != TokenKind::Identifier && cur().kind != TokenKind::Literal &&
          cur().kind != TokenKind::Char) {
        fail("expected a level mapping entry");
        break;
      }
      if (cur().text.size() != 1) {
        fail("level character must be a single character, got '" + cur().text + "'");
        break;
      }
      CharMap map;
      map.ch = cur().text[0];
      if (map.ch == '#') {  // unreachable through the lexer; kept as a guard
        fail("level character '#' is prohibited");
        break;
      }
      if (std::any_of(maps.begin(), maps.end(),
                      [&](const CharMap& m) { return m.ch == map.ch; })) {
        fail(std::string("duplicate level character '") + map.ch + "'");
        break;
      }
      advance();
      if (cur().kind != TokenKind::Gt) {
        fail("expected '>' after level character");
        break;
      }
      advance();
      while (cur().kind == TokenKind::Identifier) {
        map.stypes.push_back(cur().text);
        advance();
      }
      if (map.stypes.empty()) {
        fail("expected at least one sprite type in level mapping entry");
        break;
      }
      if (!expect_newline("level mapping entry")) break;
      maps.push_back(std::move(map));
    }
    return maps;
  }

  std::vector<InteractionDef> parse_interactions() {
    std::vector<InteractionDef> defs;
    while (!error_ && cur().kind != TokenKind::Dedent && cur().kind != TokenKind::Eof) {
      if (cur().kind != TokenKind::Identifier) {
        fail("expected an interaction definition");
        break;
      }
      InteractionDef def;
      def.subject = cur().text;
      advance();
      if (cur().kind != TokenKind::Identifier) {
        fail("expected a second sprite type in interaction");
        break;
      }
      def.object = cur().text;
      advance();
      if (cur().kind != TokenKind::Gt) {
        fail("expected '>' in interaction definition");
        break;
      }
      advance();
      if (cur().kind != TokenKind::Identifier) {
        fail("expected an interaction method");
        break;
      }
      def.method = cur().text;
      advance();
      while (!error_ && cur().kind == TokenKind::Identifier) {
        if (peek().kind == TokenKind::Equals) {
          auto opts = parse_options("interaction definition");
          def.options.insert(def.options.end(), opts.begin(), opts.end());
        } else if (opts_.allow_trailing_interaction_args) {
          def.trailing_args.push_back(cur().text);
          advance();
        } else {
          fail("trailing identifier '" + cur().text +
               "' after interaction method (options must be key=value)");
        }
      }
      if (error_) break;
      if (!expect_newline("interaction definition")) break;
      defs.push_back(std::move(def));
    }
    return defs;
  }

  std::vector<TerminationDef> parse_terminations() {
    std::vector<TerminationDef> defs;
    while (!error_ && cur().kind != TokenKind::Dedent && cur().kind != TokenKind::Eof) {
      if (cur().kind != TokenKind::Identifier) {
        fail("expected a termination definition");
        break;
      }
      TerminationDef def;
      def.termination_class = cur().text;
      advance();
      def.options = parse_options("termination definition");
      if (error_) break;
      if (cur().kind == TokenKind::Identifier) {
        fail("expected key=value option, got bare identifier '" + cur().text + "'");
        break;
      }
      if (!expect_newline("termination definition")) break;
      defs.push_back(std::move(def));
    }
    return defs;
  }

  // Sprite type names must be unique across the whole tree.
  std::optional<ParseError> check_sprite_names(const GameSpec& spec) {
    std::set<std::string> seen;
    std::optional<ParseError> dup;
    auto walk = [&](auto&& self, const std::vector<SpriteDef>& defs) -> void {
      for (const auto& def : defs) {
        if (!seen.insert(def.stype).second && !dup) {
          dup = ParseError{ErrorCategory::Syntax, "duplicate sprite type '" + def.stype + "'", 0,
                           0};
        }
        self(self, def.children);
      }
    };
    walk(walk, spec.sprite_roots);
    return dup;
  }

  std::vector<Token> tokens_;
  size_t index_ = 0;
  ParseOptions opts_;
  std::optional<ParseError> error_;
};

}  // namespace

Expected<GameSpec, ParseError> parse_game(std::string_view text, const ParseOptions& opts) {
  auto tokens = tokenize(text, opts.lex);
  if (!tokens.ok()) return tokens.error();
  return Parser(std::move(tokens.value()), opts).run();
}

Expected<LevelGrid, ParseError> parse_level(std::string_view text, char background) {
  std::vector<std::string> rows;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    std::string_view line =
        end == std::string_view::npos ? text.substr(pos) : text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    rows.emplace_back(line);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  auto is_blank = [](const std::string& row) {
    return row.find_first_not_of(" \t") == std::string::npos;
  };
  while (!rows.empty() && is_blank(rows.back())) rows.pop_back();
  size_t first = 0;
  while (first < rows.size() && is_blank(rows[first])) ++first;
  rows.erase(rows.begin(), rows.begin() + static_cast<long>(first));
  if (rows.empty()) {
    return ParseError{ErrorCategory::Syntax, "empty level text", 1, 1};
  }
  size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.size());
  for (auto& row : rows) row.resize(width, background);
  return LevelGrid{std::move(rows)};
}

}  // namespace vgdlgen
