// vgdlgen/extract.cpp
#include "vgdlgen/extract.hpp"

#include <algorithm>
#include <cctype>

namespace vgdlgen {

namespace {

const char* const kBlockHeaders[] = {"SpriteSet", "LevelMapping", "InteractionSet",
                                     "TerminationSet"};

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    std::string_view line =
        end == std::string_view::npos ? text.substr(pos) : text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return lines;
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

std::string_view lstrip(std::string_view line) {
  size_t i = line.find_first_not_of(" \t");
  return i == std::string_view::npos ? std::string_view{} : line.substr(i);
}

std::string first_word(std::string_view line) {
  std::string_view s = lstrip(line);
  size_t i = 0;
  while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
  return std::string(s.substr(0, i));
}

// Markdown headers and bullets at column zero mark a block as prose, not
// rules. Indented '#' lines stay valid: they are ordinary comments.
bool looks_like_prose(const std::vector<std::string>& lines) {
  for (const auto& line : lines) {
    if (line.rfind("#", 0) == 0) {
      size_t hashes = line.find_first_not_of('#');
      if (hashes != std::string::npos && hashes <= 6 && line[hashes] == ' ') return true;
    }
    if ((line.rfind("- ", 0) == 0) || (line.rfind("* ", 0) == 0)) return true;
  }
  return false;
}

// Level rows are drawn from uppercase letters, digits, '#', '.' and spaces.
bool is_grid_line(std::string_view line) {
  bool seen = false;
  for (char c : line) {
    if (c == ' ') continue;
    if ((c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '#' || c == '.') {
      seen = true;
      continue;
    }
    return false;
  }
  return seen;
}

// The largest boundary-trimmed run of grid lines covering the whole block,
// or nullopt. Label lines like "Level" fail the grid test and are trimmed.
std::optional<std::string> trim_to_grid(const std::vector<std::string>& lines) {
  size_t first = 0;
  size_t last = lines.size();
  while (first < last && !is_grid_line(lines[first])) ++first;
  while (last > first && !is_grid_line(lines[last - 1])) --last;
  if (last - first < 2) return std::nullopt;
  std::string out;
  for (size_t i = first; i < last; ++i) {
    if (!is_grid_line(lines[i])) return std::nullopt;
    out += lines[i];
    out += '\n';
  }
  return out;
}

std::string join(const std::vector<std::string>& lines, size_t first, size_t last) {
  std::string out;
  for (size_t i = first; i < last; ++i) {
    out += lines[i];
    out += '\n';
  }
  return out;
}

// Splits a grid region off the tail of a rules block: at least two grid
// lines at the end, separated from the rules by a blank line.
std::pair<std::string, std::optional<std::string>> split_inline_level(
    const std::vector<std::string>& lines) {
  size_t end = lines.size();
  while (end > 0 && is_blank(lines[end - 1])) --end;
  size_t start = end;
  while (start > 0 && is_grid_line(lines[start - 1])) --start;
  if (end - start >= 2 && start > 0 && is_blank(lines[start - 1])) {
    return {join(lines, 0, start), join(lines, start, end)};
  }
  return {join(lines, 0, lines.size()), std::nullopt};
}

struct Block {
  std::vector<std::string> lines;
  size_t index = 0;  // order of appearance
};

std::vector<Block> fenced_blocks(const std::vector<std::string>& lines) {
  std::vector<Block> blocks;
  bool open = false;
  Block current;
  size_t index = 0;
  for (const auto& line : lines) {
    if (lstrip(line).rfind("```", 0) == 0) {
      if (open) {
        current.index = index++;
        blocks.push_back(std::move(current));
        current = Block{};
      }
      open = !open;
      continue;
    }
    if (open) current.lines.push_back(line);
  }
  if (open && !current.lines.empty()) {
    current.index = index;
    blocks.push_back(std::move(current));
  }
  return blocks;
}

bool is_known(const std::vector<std::string>& names, const std::string& word) {
  return std::find(names.begin(), names.end(), word) != names.end();
}

bool is_block_header(const std::string& word) {
  for (const char* header : kBlockHeaders) {
    if (word == header) return true;
  }
  return false;
}

std::string first_content_word(const std::vector<std::string>& lines) {
  for (const auto& line : lines) {
    if (!is_blank(line)) return first_word(line);
  }
  return "";
}

struct RulesCandidate {
  std::string text;
  size_t index = 0;
  // Unfenced responses put rules and grid side by side; a grid split off the
  // tail there is an ordinary separate level, not a misplaced one.
  bool unfenced = false;
};

}  // namespace

std::string_view placement_name(LevelPlacement placement) {
  switch (placement) {
    case LevelPlacement::Separate: return "separate";
    case LevelPlacement::Inline: return "inline";
    case LevelPlacement::Absent: return "absent";
  }
  return "?";
}

Extraction extract_candidates(std::string_view response, const ExtractOptions& opts) {
  Extraction result;
  const auto lines = split_lines(response);
  const auto blocks = fenced_blocks(lines);

  std::vector<RulesCandidate> rules;
  std::vector<std::pair<std::string, size_t>> levels;  // text, block index
  std::vector<const Block*> fragments;

  if (!blocks.empty()) {
    for (const auto& block : blocks) {
      const std::string word = first_content_word(block.lines);
      const bool prose = looks_like_prose(block.lines);
      if (!prose && is_known(opts.known_game_classes, word)) {
        rules.push_back({join(block.lines, 0, block.lines.size()), block.index});
        continue;
      }
      if (!prose && is_block_header(word)) {
        fragments.push_back(&block);
        continue;
      }
      if (auto grid = trim_to_grid(block.lines)) {
        levels.emplace_back(std::move(*grid), block.index);
      }
    }
    // Responses without a complete rules block often fence each block on its
    // own, with the game class left in the prose. Stitch the fragments
    // together under a synthesized game-class line.
    if (rules.empty() && !fragments.empty()) {
      std::string text = opts.known_game_classes.empty() ? std::string("BasicGame")
                                                         : opts.known_game_classes.front();
      text += '\n';
      for (const Block* fragment : fragments) {
        for (const auto& line : fragment->lines) {
          if (is_blank(line)) {
            text += '\n';
          } else {
            text += "    " + line + '\n';
          }
        }
      }
      rules.push_back({std::move(text), fragments.back()->index});
    }
  } else {
    // No fences at all: look for a game-class header in the raw text, with
    // any trailing grid taken as the level.
    for (size_t i = 0; i < lines.size(); ++i) {
      if (is_known(opts.known_game_classes, first_word(lines[i])) &&
          lstrip(lines[i]).find('>') == std::string_view::npos) {
        rules.push_back({join(lines, i, lines.size()), 0, true});
        break;
      }
    }
  }

  std::vector<bool> level_used(levels.size(), false);
  for (auto& candidate : rules) {
    auto parts = split_inline_level(split_lines(candidate.text));
    CandidatePair pair;
    pair.rules_text = std::move(parts.first);

    size_t chosen = levels.size();
    for (size_t i = 0; i < levels.size(); ++i) {
      if (!level_used[i] && levels[i].second > candidate.index) {
        chosen = i;
        break;
      }
    }
    if (chosen < levels.size()) {
      level_used[chosen] = true;
      pair.level_text = levels[chosen].first;
      pair.placement = LevelPlacement::Separate;
    } else if (parts.second) {
      pair.level_text = std::move(parts.second);
      pair.placement = candidate.unfenced ? LevelPlacement::Separate : LevelPlacement::Inline;
    } else {
      pair.placement = LevelPlacement::Absent;
    }
    result.pairs.push_back(std::move(pair));
  }

  for (size_t i = 0; i < levels.size(); ++i) {
    if (!level_used[i]) result.orphan_levels.push_back(levels[i].first);
  }
  return result;
}

}  // namespace vgdlgen
