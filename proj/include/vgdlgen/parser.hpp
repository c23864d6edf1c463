// vgdlgen/parser.hpp - Game-description and level-text parsing.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vgdlgen/ast.hpp"
#include "vgdlgen/expected.hpp"
#include "vgdlgen/lexer.hpp"

namespace vgdlgen {

struct ParseOptions {
  LexOptions lex;

  /// When set, the four blocks must appear in grammar order (LevelMapping,
  /// SpriteSet, InteractionSet, TerminationSet). Off by default: generated
  /// descriptions routinely permute blocks and still run fine.
  bool strict_block_order = false;

  /// When set, bare identifiers after an interaction method (e.g.
  /// "avatar goal > removeSprite goal") are collected into
  /// InteractionDef::trailing_args instead of failing. Off by default: the
  /// grammar only allows key=value options there.
  bool allow_trailing_interaction_args = false;

  /// Game classes accepted at the top of a description. A structurally valid
  /// first line holding an identifier outside this set is a Keyword error.
  std::vector<std::string> known_game_classes = {"BasicGame"};
};

/// Parses a full game description. Returns the spec or exactly one error;
/// recovery and multi-error reporting are out of scope.
Expected<GameSpec, ParseError> parse_game(std::string_view text, const ParseOptions& opts = {});

/// Parses level text into a rectangular grid. Trailing blank lines are
/// dropped, leading blank lines are skipped, and ragged rows are
/// right-padded with the background character. Empty input is an error.
Expected<LevelGrid, ParseError> parse_level(std::string_view text, char background = ' ');

}  // namespace vgdlgen
