// vgdlgen/ast.hpp - Game-description AST: the sprite tree, level mapping,
// interaction and termination rules, plus the rectangular level grid.
//
// All values here are plain immutable data after construction; they can be
// shared freely between threads.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vgdlgen {

/// Kind inferred from an option value's lexeme. Values keep their raw source
/// text; consumers coerce on use.
enum class ValueKind { Integer, Float, Boolean, Identifier };

struct OptionValue {
  std::string text;
  ValueKind kind = ValueKind::Identifier;
  bool operator==(const OptionValue&) const = default;
};

/// Builds an OptionValue, inferring the kind from the lexeme.
OptionValue make_value(std::string text);

/// One `key=value` pair attached to a sprite, interaction or termination.
struct Option {
  std::string key;
  OptionValue value;
  bool operator==(const Option&) const = default;
};

/// A node of the SpriteSet tree. A definition without a class inherits the
/// nearest ancestor class; classes are an open identifier set at this level.
struct SpriteDef {
  std::string stype;
  std::optional<std::string> sprite_class;
  std::vector<Option> options;
  std::vector<SpriteDef> children;
  bool operator==(const SpriteDef&) const = default;
};

/// One LevelMapping entry: a single character instantiating one or more
/// sprite types.
struct CharMap {
  char ch = ' ';
  std::vector<std::string> stypes;
  bool operator==(const CharMap&) const = default;
};

struct InteractionDef {
  std::string subject;  // first position
  std::string object;   // second position
  std::string method;
  std::vector<Option> options;
  /// Bare identifiers after the method, only populated when the parser runs
  /// with allow_trailing_interaction_args.
  std::vector<std::string> trailing_args;
  bool operator==(const InteractionDef&) const = default;
};

struct TerminationDef {
  std::string termination_class;
  std::vector<Option> options;
  bool operator==(const TerminationDef&) const = default;

  /// Raw text of the named option, if present.
  const OptionValue* option(std::string_view key) const;
};

enum class BlockKind { LevelMapping, SpriteSet, InteractionSet, TerminationSet };

std::string_view block_name(BlockKind kind);

/// A parsed game description. Up to four blocks, each at most once; the
/// source order of blocks is preserved in block_order.
struct GameSpec {
  std::string game_class;
  std::vector<SpriteDef> sprite_roots;
  std::vector<CharMap> level_mapping;
  std::vector<InteractionDef> interactions;
  std::vector<TerminationDef> terminations;
  std::vector<BlockKind> block_order;

  bool has_block(BlockKind kind) const;
  const CharMap* mapping_for(char ch) const;
  const SpriteDef* find_sprite(std::string_view stype) const;

  /// Structural equality: compares the game class, block presence and block
  /// contents. Source block order is ignored so that a pretty-printed and
  /// reparsed spec compares equal to the original.
  bool operator==(const GameSpec& other) const;
};

/// Rectangular character grid. Rows are equal length; ragged input is
/// right-padded with the background character at parse time.
struct LevelGrid {
  std::vector<std::string> rows;

  int width() const { return rows.empty() ? 0 : static_cast<int>(rows.front().size()); }
  int height() const { return static_cast<int>(rows.size()); }
  char at(int x, int y) const { return rows[static_cast<size_t>(y)][static_cast<size_t>(x)]; }
  bool operator==(const LevelGrid&) const = default;
};

/// Nearest sprite class on the path from `stype` up to the sprite tree root.
/// Absent when the type is undefined or no ancestor declares a class; absent
/// is a value, not an error.
std::optional<std::string> resolve_sprite_class(const GameSpec& spec, std::string_view stype);

/// The type itself plus all transitive child types, in declaration order.
/// nullopt when the type is not defined in the sprite tree.
std::optional<std::vector<std::string>> descendant_types(const GameSpec& spec,
                                                         std::string_view stype);

/// Like descendant_types, but an undefined type yields just {stype}.
/// Validation checks need undefined names to still participate in set tests.
std::vector<std::string> descendant_types_or_self(const GameSpec& spec, std::string_view stype);

/// Canonical text form: blocks in grammar order (LevelMapping, SpriteSet,
/// InteractionSet, TerminationSet), four-space indentation, single spaces.
/// Reparsing the output yields a spec structurally equal to the input.
std::string pretty_print(const GameSpec& spec);

}  // namespace vgdlgen
