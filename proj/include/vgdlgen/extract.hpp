// vgdlgen/extract.hpp - Locating game-description and level candidates inside
// free-form model responses.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vgdlgen {

/// Where the level grid was found relative to the rules text.
enum class LevelPlacement { Separate, Inline, Absent };

std::string_view placement_name(LevelPlacement placement);

struct CandidatePair {
  std::string rules_text;
  std::optional<std::string> level_text;
  LevelPlacement placement = LevelPlacement::Absent;
};

struct Extraction {
  std::vector<CandidatePair> pairs;
  /// Level-shaped blocks that were not paired with any rules candidate.
  std::vector<std::string> orphan_levels;

  bool no_rules() const { return pairs.empty(); }
};

struct ExtractOptions {
  std::vector<std::string> known_game_classes = {"BasicGame"};
};

/// Scans fenced code blocks in order. A block whose first token is a known
/// game class is a rules candidate; blocks that start with a bare block
/// header (responses often fence each block separately, or leave the game
/// class in the surrounding prose) are stitched together under a synthesized
/// game-class line. A block of grid-like lines is a level candidate; each
/// rules candidate pairs with the nearest following level candidate. A grid
/// trailing inside a rules block becomes an Inline level. Without fences,
/// falls back to scanning raw lines for a game-class header and an adjacent
/// grid.
Extraction extract_candidates(std::string_view response, const ExtractOptions& opts = {});

}  // namespace vgdlgen
