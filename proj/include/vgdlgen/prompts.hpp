// vgdlgen/prompts.hpp - Prompt assembly from context blocks: instruction,
// level notation, grammar (base plus one constraint set), and example.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vgdlgen/expected.hpp"

namespace vgdlgen {

enum class PresetId { P1, P2, P3, P4, P5, P6, P7 };

std::string_view preset_name(PresetId id);
std::optional<PresetId> preset_from_string(std::string_view name);  // "p1".."p7", any case

enum class Constraint { None, C1, C2 };

/// The grammar block ships in two spellings: Faithful keeps the source
/// listing's " textgreater " typesetting artifact byte for byte; Normalized
/// replaces it with ">".
enum class GrammarStyle { Faithful, Normalized };

struct PromptConfig {
  std::string game_name;
  bool include_level = false;
  bool include_grammar_base = false;
  Constraint constraint = Constraint::None;
  bool include_example = false;
  /// Free-form mechanism description for self-defined games; slots directly
  /// after the instruction.
  std::optional<std::string> mechanics;
  GrammarStyle grammar_style = GrammarStyle::Faithful;
};

struct PromptText {
  std::string text;
  std::vector<std::string> blocks;  // block identifiers in order
};

struct ConfigError {
  std::string message;
};

/// Concatenates the selected block texts, separated by blank lines, with
/// <Game> in the instruction replaced by the configured name. Output is
/// deterministic byte for byte. A constraint without the grammar base is a
/// configuration error.
Expected<PromptText, ConfigError> build(const PromptConfig& config);

/// The seven stock presets: P1 instruction only; P2 adds level notation;
/// P3 adds the base grammar; P4/P5 add constraint C1/C2; P6/P7 add the
/// example on top of C1/C2.
PromptConfig preset(PresetId id, std::string game_name);

// Raw block texts (no trailing newline).
std::string_view instruction_template();  // contains the <Game> placeholder
std::string_view level_block();
std::string grammar_base_block(GrammarStyle style = GrammarStyle::Faithful);
std::string_view c1_block();
std::string_view c2_block();
std::string_view example_block();

/// The game-description template embedded in the example block, without the
/// surrounding fence.
std::string_view aliens_template();

}  // namespace vgdlgen
