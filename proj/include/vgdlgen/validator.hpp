// vgdlgen/validator.hpp - Rule-based checks over parsed game descriptions and
// their levels: parsable, logical, mappable, plus the outcome classification.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vgdlgen/ast.hpp"
#include "vgdlgen/extract.hpp"
#include "vgdlgen/parser.hpp"

namespace vgdlgen {

enum class ErrorFamily { Unparsable, Illogical, Unmappable };

enum class ErrorCode {
  Keyword,
  Syntax,
  Component,
  Interaction,
  Termination,
  NoLevel,
  Place,
  Mapping,
  Sprite,
};

ErrorFamily family_of(ErrorCode code);

/// Stable serialized form, e.g. "unparsable.syntax" or "illogical.component".
std::string_view code_string(ErrorCode code);

struct ValidationError {
  ErrorCode code = ErrorCode::Syntax;
  std::string detail;
  int line = 0;  // 0 when not applicable
  int col = 0;

  ErrorFamily family() const { return family_of(code); }
};

/// Outcome classes: rule and level both correct / rule only / level only /
/// neither.
enum class Outcome { G, R, L, W };

char outcome_letter(Outcome outcome);

struct ValidationReport {
  bool parsable = false;
  bool logical = false;
  bool mappable = false;
  bool correct = false;
  std::vector<ValidationError> errors;
  Outcome outcome = Outcome::W;
};

/// Sprite types filling the avatar/wall/goal roles. Missing entries defer to
/// the corresponding Component or Termination checks.
struct Roles {
  std::optional<std::string> avatar;
  std::optional<std::string> wall;
  std::optional<std::string> goal;
};

struct ValidateOptions {
  ParseOptions parse;
  /// Characters exempt from mapping coverage; either may also be mapped
  /// explicitly.
  std::string background_chars = " .";
  char wall_char = 'W';
  /// Alphabet a level is judged against when no parsable rules exist.
  std::string default_level_alphabet = "WAG";
};

/// All four blocks present, a controllable avatar exists, every sprite root
/// carries a resolvable class.
std::vector<ValidationError> check_components(const GameSpec& spec);

/// avatar := the sprite whose class resolves to MovingAvatar; wall := the
/// type mapped from the wall character, else one named "wall"; goal := the
/// type counted by the win termination, else one named "goal". Ties broken
/// by declaration order.
Roles resolve_roles(const GameSpec& spec, const ValidateOptions& opts = {});

/// Interaction completion: an avatar-wall stepBack pairing exists, an
/// avatar-goal pairing exists, and that pairing actually removes the goal
/// (killSprite removes the first position, removeSprite the second).
std::vector<ValidationError> check_interactions(const GameSpec& spec, const Roles& roles);

/// Termination completion: a win condition exists, no counter is already
/// satisfied at the initial state, and the win counter counts a type some
/// interaction can remove.
std::vector<ValidationError> check_termination(const GameSpec& spec, const LevelGrid* level,
                                               const ValidateOptions& opts = {});

/// Mapping coverage and required sprites for the instantiated level.
std::vector<ValidationError> check_mappable(const GameSpec& spec, const LevelGrid* level,
                                            LevelPlacement placement,
                                            const ValidateOptions& opts = {});

/// Level correctness against the default alphabet, used when the rules are
/// not parsable: every character in {W, A, G} plus background, exactly one
/// avatar, at least one goal.
bool level_correct_default(std::string_view level_text, const ValidateOptions& opts = {});

/// Instance counts per sprite type for a level under the spec's mapping.
std::map<std::string, int> instantiate_counts(const GameSpec& spec, const LevelGrid& level);

/// Runs the parser and all checks, producing a total report. When the rules
/// are unparsable the report carries that single error, logical checks are
/// skipped, and the level is judged against the default alphabet.
ValidationReport validate(std::string_view rules_text,
                          const std::optional<std::string>& level_text,
                          LevelPlacement placement = LevelPlacement::Separate,
                          const ValidateOptions& opts = {});

/// Stable byte-for-byte JSON serialization of a report.
std::string report_to_json(const ValidationReport& report);

}  // namespace vgdlgen
