// vgdlgen/ast.cpp
#include "vgdlgen/ast.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

namespace vgdlgen {

namespace {

bool is_integer_lexeme(std::string_view s) {
  size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i >= s.size()) return false;
  return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

bool is_float_lexeme(std::string_view s) {
  size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  bool digits = false;
  bool dot = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits = true;
    } else if (s[i] == '.' && !dot) {
      dot = true;
    } else {
      return false;
    }
  }
  return digits && dot;
}

const SpriteDef* find_in(const std::vector<SpriteDef>& defs, std::string_view stype) {
  for (const auto& def : defs) {
    if (def.stype == stype) return &def;
    if (const SpriteDef* hit = find_in(def.children, stype)) return hit;
  }
  return nullptr;
}

// Collects the root-to-node path of the named sprite; returns true on hit.
bool path_to(const std::vector<SpriteDef>& defs, std::string_view stype,
             std::vector<const SpriteDef*>& path) {
  for (const auto& def : defs) {
    path.push_back(&def);
    if (def.stype == stype) return true;
    if (path_to(def.children, stype, path)) return true;
    path.pop_back();
  }
  return false;
}

void collect_types(const SpriteDef& def, std::vector<std::string>& out) {
  out.push_back(def.stype);
  for (const auto& child : def.children) collect_types(child, out);
}

void print_sprite(std::ostringstream& out, const SpriteDef& def, int depth) {
  out << std::string(static_cast<size_t>(depth) * 4, ' ') << def.stype << " >";
  if (def.sprite_class) out << ' ' << *def.sprite_class;
  for (const auto& opt : def.options) out << ' ' << opt.key << '=' << opt.value.text;
  out << '\n';
  for (const auto& child : def.children) print_sprite(out, child, depth + 1);
}

}  // namespace

OptionValue make_value(std::string text) {
  ValueKind kind = ValueKind::Identifier;
  if (is_integer_lexeme(text)) {
    kind = ValueKind::Integer;
  } else if (is_float_lexeme(text)) {
    kind = ValueKind::Float;
  } else if (text == "True" || text == "False") {
    kind = ValueKind::Boolean;
  }
  return OptionValue{std::move(text), kind};
}

const OptionValue* TerminationDef::option(std::string_view key) const {
  for (const auto& opt : options) {
    if (opt.key == key) return &opt.value;
  }
  return nullptr;
}

std::string_view block_name(BlockKind kind) {
  switch (kind) {
    case BlockKind::LevelMapping: return "LevelMapping";
    case BlockKind::SpriteSet: return "SpriteSet";
    case BlockKind::InteractionSet: return "InteractionSet";
    case BlockKind::TerminationSet: return "TerminationSet";
  }
  return "?";
}

bool GameSpec::has_block(BlockKind kind) const {
  return std::find(block_order.begin(), block_order.end(), kind) != block_order.end();
}

const CharMap* GameSpec::mapping_for(char ch) const {
  for (const auto& map : level_mapping) {
    if (map.ch == ch) return &map;
  }
  return nullptr;
}

const SpriteDef* GameSpec::find_sprite(std::string_view stype) const {
  return find_in(sprite_roots, stype);
}

bool GameSpec::operator==(const GameSpec& other) const {
  auto presence = [](const GameSpec& g) {
    std::array<bool, 4> p{};
    for (BlockKind k : g.block_order) p[static_cast<size_t>(k)] = true;
    return p;
  };
  return game_class == other.game_class && presence(*this) == presence(other) &&
         sprite_roots == other.sprite_roots && level_mapping == other.level_mapping &&
         interactions == other.interactions && terminations == other.terminations;
}

std::optional<std::string> resolve_sprite_class(const GameSpec& spec, std::string_view stype) {
  std::vector<const SpriteDef*> path;
  if (!path_to(spec.sprite_roots, stype, path)) return std::nullopt;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    if ((*it)->sprite_class) return (*it)->sprite_class;
  }
  return std::nullopt;
}

std::optional<std::vector<std::string>> descendant_types(const GameSpec& spec,
                                                         std::string_view stype) {
  const SpriteDef* def = spec.find_sprite(stype);
  if (!def) return std::nullopt;
  std::vector<std::string> out;
  collect_types(*def, out);
  return out;
}

std::vector<std::string> descendant_types_or_self(const GameSpec& spec, std::string_view stype) {
  if (auto types = descendant_types(spec, stype)) return *types;
  return {std::string(stype)};
}

std::string pretty_print(const GameSpec& spec) {
  std::ostringstream out;
  out << spec.game_class << '\n';
  if (spec.has_block(BlockKind::LevelMapping)) {
    out << "    LevelMapping\n";
    for (const auto& map : spec.level_mapping) {
      out << "        " << map.ch << " >";
      for (const auto& st : map.stypes) out << ' ' << st;
      out << '\n';
    }
  }
  if (spec.has_block(BlockKind::SpriteSet)) {
    out << "    SpriteSet\n";
    for (const auto& root : spec.sprite_roots) print_sprite(out, root, 2);
  }
  if (spec.has_block(BlockKind::InteractionSet)) {
    out << "    InteractionSet\n";
    for (const auto& def : spec.interactions) {
      out << "        " << def.subject << ' ' << def.object << " > " << def.method;
      for (const auto& arg : def.trailing_args) out << ' ' << arg;
      for (const auto& opt : def.options) out << ' ' << opt.key << '=' << opt.value.text;
      out << '\n';
    }
  }
  if (spec.has_block(BlockKind::TerminationSet)) {
    out << "    TerminationSet\n";
    for (const auto& def : spec.terminations) {
      out << "        " << def.termination_class;
      for (const auto& opt : def.options) out << ' ' << opt.key << '=' << opt.value.text;
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace vgdlgen
