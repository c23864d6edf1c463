// vgdlgen/validator.cpp
#include "vgdlgen/validator.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace vgdlgen {

namespace {

constexpr const char* kAvatarClass = "MovingAvatar";

bool intersects(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  for (const auto& x : a) {
    if (std::find(b.begin(), b.end(), x) != b.end()) return true;
  }
  return false;
}

// Whether the definition pairs the two role closures, in either order.
bool pairs(const GameSpec& spec, const InteractionDef& def, const std::vector<std::string>& a,
           const std::vector<std::string>& b) {
  const auto subj = descendant_types_or_self(spec, def.subject);
  const auto obj = descendant_types_or_self(spec, def.object);
  return (intersects(subj, a) && intersects(obj, b)) ||
         (intersects(subj, b) && intersects(obj, a));
}

// Types removed when the definition fires: killSprite removes the first
// position, removeSprite the second. Other methods remove nothing.
std::vector<std::string> removal_closure(const GameSpec& spec, const InteractionDef& def) {
  if (def.method == "killSprite") return descendant_types_or_self(spec, def.subject);
  if (def.method == "removeSprite") return descendant_types_or_self(spec, def.object);
  return {};
}

struct SpriteCounterFields {
  std::string stype;
  long limit = 0;
  bool win = false;
};

// SpriteCounter needs stype, a non-negative integer limit and a boolean win.
Expected<SpriteCounterFields, std::string> sprite_counter_fields(const TerminationDef& def) {
  SpriteCounterFields fields;
  const OptionValue* stype = def.option("stype");
  if (!stype || stype->kind != ValueKind::Identifier) {
    return std::string("SpriteCounter requires stype=<sprite type>");
  }
  fields.stype = stype->text;
  const OptionValue* limit = def.option("limit");
  if (!limit || limit->kind != ValueKind::Integer) {
    return std::string("SpriteCounter requires an integer limit");
  }
  fields.limit = std::stol(limit->text);
  if (fields.limit < 0) {
    return std::string("SpriteCounter limit must be non-negative");
  }
  const OptionValue* win = def.option("win");
  if (!win || win->kind != ValueKind::Boolean) {
    return std::string("SpriteCounter requires win=True or win=False");
  }
  fields.win = win->text == "True";
  return fields;
}

bool has_win_true(const TerminationDef& def) {
  const OptionValue* win = def.option("win");
  return win && win->text == "True";
}

int role_instance_count(const GameSpec& spec, const std::map<std::string, int>& counts,
                        const std::string& role_type) {
  int total = 0;
  for (const auto& type : descendant_types_or_self(spec, role_type)) {
    auto it = counts.find(type);
    if (it != counts.end()) total += it->second;
  }
  return total;
}

bool is_background(char c, const ValidateOptions& opts) {
  return opts.background_chars.find(c) != std::string::npos;
}

}  // namespace

ErrorFamily family_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::Keyword:
    case ErrorCode::Syntax: return ErrorFamily::Unparsable;
    case ErrorCode::Component:
    case ErrorCode::Interaction:
    case ErrorCode::Termination: return ErrorFamily::Illogical;
    case ErrorCode::NoLevel:
    case ErrorCode::Place:
    case ErrorCode::Mapping:
    case ErrorCode::Sprite: return ErrorFamily::Unmappable;
  }
  return ErrorFamily::Unparsable;
}

std::string_view code_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Keyword: return "unparsable.keyword";
    case ErrorCode::Syntax: return "unparsable.syntax";
    case ErrorCode::Component: return "illogical.component";
    case ErrorCode::Interaction: return "illogical.interaction";
    case ErrorCode::Termination: return "illogical.termination";
    case ErrorCode::NoLevel: return "unmappable.no_level";
    case ErrorCode::Place: return "unmappable.place";
    case ErrorCode::Mapping: return "unmappable.mapping";
    case ErrorCode::Sprite: return "unmappable.sprite";
  }
  return "?";
}

char outcome_letter(Outcome outcome) {
  switch (outcome) {
    case Outcome::G: return 'G';
    case Outcome::R: return 'R';
    case Outcome::L: return 'L';
    case Outcome::W: return 'W';
  }
  return '?';
}

std::vector<ValidationError> check_components(const GameSpec& spec) {
  std::vector<ValidationError> errors;
  for (BlockKind kind : {BlockKind::SpriteSet, BlockKind::LevelMapping,
                         BlockKind::InteractionSet, BlockKind::TerminationSet}) {
    if (!spec.has_block(kind)) {
      errors.push_back(
          {ErrorCode::Component, "missing block " + std::string(block_name(kind))});
    }
  }
  if (spec.has_block(BlockKind::SpriteSet)) {
    bool has_avatar = false;
    auto walk = [&](auto&& self, const std::vector<SpriteDef>& defs) -> void {
      for (const auto& def : defs) {
        if (resolve_sprite_class(spec, def.stype) == kAvatarClass) has_avatar = true;
        self(self, def.children);
      }
    };
    walk(walk, spec.sprite_roots);
    if (!has_avatar) {
      errors.push_back({ErrorCode::Component, "no sprite resolves to class MovingAvatar"});
    }
    for (const auto& root : spec.sprite_roots) {
      if (!resolve_sprite_class(spec, root.stype)) {
        errors.push_back(
            {ErrorCode::Component, "sprite '" + root.stype + "' has no resolvable class"});
      }
    }
  }
  return errors;
}

Roles resolve_roles(const GameSpec& spec, const ValidateOptions& opts) {
  Roles roles;

  auto walk = [&](auto&& self, const std::vector<SpriteDef>& defs) -> void {
    for (const auto& def : defs) {
      if (!roles.avatar && resolve_sprite_class(spec, def.stype) == kAvatarClass) {
        roles.avatar = def.stype;
      }
      self(self, def.children);
    }
  };
  walk(walk, spec.sprite_roots);

  if (const CharMap* map = spec.mapping_for(opts.wall_char); map && !map->stypes.empty()) {
    roles.wall = map->stypes.front();
  } else if (spec.find_sprite("wall")) {
    roles.wall = "wall";
  }

  for (const auto& def : spec.terminations) {
    if (!has_win_true(def)) continue;
    if (const OptionValue* stype = def.option("stype");
        stype && stype->kind == ValueKind::Identifier) {
      roles.goal = stype->text;
      break;
    }
  }
  if (!roles.goal) {
    bool mapped_goal = std::any_of(spec.level_mapping.begin(), spec.level_mapping.end(),
                                   [](const CharMap& m) {
                                     return std::find(m.stypes.begin(), m.stypes.end(), "goal") !=
                                            m.stypes.end();
                                   });
    if (spec.find_sprite("goal") || mapped_goal) roles.goal = "goal";
  }
  return roles;
}

std::vector<ValidationError> check_interactions(const GameSpec& spec, const Roles& roles) {
  std::vector<ValidationError> errors;
  if (!roles.avatar) return errors;  // deferred to the Component check
  const auto avatar = descendant_types_or_self(spec, *roles.avatar);

  bool wall_ok = false;
  if (roles.wall) {
    const auto wall = descendant_types_or_self(spec, *roles.wall);
    for (const auto& def : spec.interactions) {
      if (def.method == "stepBack" && pairs(spec, def, avatar, wall)) {
        wall_ok = true;
        break;
      }
    }
  }
  if (!wall_ok) {
    errors.push_back({ErrorCode::Interaction, "no avatar-wall stepBack interaction"});
  }

  if (roles.goal) {
    const auto goal = descendant_types_or_self(spec, *roles.goal);
    bool paired = false;
    bool removes_goal = false;
    for (const auto& def : spec.interactions) {
      if (!pairs(spec, def, avatar, goal)) continue;
      paired = true;
      if (intersects(removal_closure(spec, def), goal)) removes_goal = true;
    }
    if (!paired) {
      errors.push_back({ErrorCode::Interaction, "no avatar-goal interaction"});
    } else if (!removes_goal) {
      errors.push_back({ErrorCode::Interaction,
                        "avatar-goal interaction does not remove the goal (killSprite removes "
                        "the first sprite, removeSprite the second)"});
    }
  }
  return errors;
}

std::vector<ValidationError> check_termination(const GameSpec& spec, const LevelGrid* level,
                                               const ValidateOptions& opts) {
  std::vector<ValidationError> errors;

  bool has_win = std::any_of(spec.terminations.begin(), spec.terminations.end(), has_win_true);
  if (!has_win) {
    errors.push_back({ErrorCode::Termination, "no win condition (win=True) defined"});
  }

  std::map<std::string, int> counts;
  if (level) counts = instantiate_counts(spec, *level);

  std::vector<std::string> removable;
  for (const auto& def : spec.interactions) {
    for (auto& type : removal_closure(spec, def)) removable.push_back(std::move(type));
  }

  for (const auto& def : spec.terminations) {
    if (def.termination_class != "SpriteCounter") continue;
    auto fields = sprite_counter_fields(def);
    if (!fields.ok()) {
      errors.push_back({ErrorCode::Termination, fields.error()});
      continue;
    }
    if (level) {
      int count = role_instance_count(spec, counts, fields.value().stype);
      if (count <= fields.value().limit) {
        errors.push_back({ErrorCode::Termination,
                          "terminates at the beginning: count of '" + fields.value().stype +
                              "' is " + std::to_string(count) + " with limit " +
                              std::to_string(fields.value().limit)});
      }
    }
    if (fields.value().win &&
        !intersects(removable, descendant_types_or_self(spec, fields.value().stype))) {
      errors.push_back({ErrorCode::Termination,
                        "win unreachable: no interaction removes '" + fields.value().stype + "'"});
    }
  }
  return errors;
}

std::map<std::string, int> instantiate_counts(const GameSpec& spec, const LevelGrid& level) {
  std::map<std::string, int> counts;
  for (const auto& row : level.rows) {
    for (char c : row) {
      if (const CharMap* map = spec.mapping_for(c)) {
        for (const auto& stype : map->stypes) ++counts[stype];
      }
    }
  }
  return counts;
}

std::vector<ValidationError> check_mappable(const GameSpec& spec, const LevelGrid* level,
                                            LevelPlacement placement,
                                            const ValidateOptions& opts) {
  std::vector<ValidationError> errors;
  if (!level) {
    errors.push_back({ErrorCode::NoLevel, "no level found"});
    return errors;
  }
  if (placement == LevelPlacement::Inline) {
    errors.push_back({ErrorCode::Place, "level grid embedded inside the rules text"});
  }

  for (const auto& map : spec.level_mapping) {
    if (map.ch == '#') {
      errors.push_back({ErrorCode::Mapping, "mapping uses prohibited character '#'"});
    }
  }

  std::set<char> seen;
  for (const auto& row : level.rows) {
    for (char c : row) {
      if (!seen.insert(c).second) continue;
      if (spec.mapping_for(c)) continue;
      if (c == '#') {
        errors.push_back({ErrorCode::Mapping, "level uses prohibited character '#'"});
      } else if (!is_background(c, opts)) {
        errors.push_back(
            {ErrorCode::Mapping, std::string("level character '") + c + "' has no mapping"});
      }
    }
  }

  const Roles roles = resolve_roles(spec, opts);
  const auto counts = instantiate_counts(spec, *level);
  if (roles.avatar) {
    int avatars = role_instance_count(spec, counts, *roles.avatar);
    if (avatars == 0) {
      errors.push_back({ErrorCode::Sprite, "no avatar instance in the level"});
    } else if (avatars > 1) {
      errors.push_back({ErrorCode::Mapping, "avatar sprite '" + *roles.avatar +
                                                "' instantiated " + std::to_string(avatars) +
                                                " times; expected exactly one"});
    }
  }
  if (roles.goal && role_instance_count(spec, counts, *roles.goal) == 0) {
    errors.push_back({ErrorCode::Sprite, "no goal instance in the level"});
  }
  return errors;
}

bool level_correct_default(std::string_view level_text, const ValidateOptions& opts) {
  auto grid = parse_level(level_text);
  if (!grid.ok()) return false;
  int avatars = 0;
  int goals = 0;
  for (const auto& row : grid.value().rows) {
    for (char c : row) {
      if (is_background(c, opts)) continue;
      if (opts.default_level_alphabet.find(c) == std::string::npos) return false;
      if (c == 'A') ++avatars;
      if (c == 'G') ++goals;
    }
  }
  return avatars == 1 && goals >= 1;
}

ValidationReport validate(std::string_view rules_text,
                          const std::optional<std::string>& level_text,
                          LevelPlacement placement, const ValidateOptions& opts) {
  ValidationReport report;

  std::optional<LevelGrid> grid;
  if (level_text) {
    if (auto parsed = parse_level(*level_text); parsed.ok()) grid = std::move(parsed.value());
  }

  auto parsed = parse_game(rules_text, opts.parse);
  if (!parsed.ok()) {
    const ParseError& err = parsed.error();
    ErrorCode code =
        err.category == ErrorCategory::Keyword ? ErrorCode::Keyword : ErrorCode::Syntax;
    report.parsable = false;
    report.logical = false;
    report.errors.push_back({code, err.message, err.line, err.col});
    report.mappable = level_text ? level_correct_default(*level_text, opts) : false;
  } else {
    const GameSpec& spec = parsed.value();
    report.parsable = true;

    const Roles roles = resolve_roles(spec, opts);
    std::vector<ValidationError> logical = check_components(spec);
    for (auto& err : check_interactions(spec, roles)) logical.push_back(std::move(err));
    for (auto& err : check_termination(spec, grid ? &*grid : nullptr, opts)) {
      logical.push_back(std::move(err));
    }
    std::vector<ValidationError> mapping =
        check_mappable(spec, grid ? &*grid : nullptr, placement, opts);

    report.logical = logical.empty();
    report.mappable = mapping.empty();
    report.errors = std::move(logical);
    for (auto& err : mapping) report.errors.push_back(std::move(err));
  }

  report.correct = report.parsable && report.logical && report.mappable;
  const bool rule_correct = report.parsable && report.logical;
  const bool level_correct = report.mappable;
  if (rule_correct && level_correct) {
    report.outcome = Outcome::G;
  } else if (rule_correct) {
    report.outcome = Outcome::R;
  } else if (level_correct) {
    report.outcome = Outcome::L;
  } else {
    report.outcome = Outcome::W;
  }
  return report;
}

std::string report_to_json(const ValidationReport& report) {
  nlohmann::json doc;
  doc["parsable"] = report.parsable;
  doc["logical"] = report.logical;
  doc["mappable"] = report.mappable;
  doc["correct"] = report.correct;
  doc["outcome"] = std::string(1, outcome_letter(report.outcome));
  nlohmann::json errors = nlohmann::json::array();
  for (const auto& err : report.errors) {
    nlohmann::json entry;
    entry["code"] = std::string(code_string(err.code));
    entry["detail"] = err.detail;
    if (err.line > 0) {
      entry["line"] = err.line;
      entry["col"] = err.col;
    }
    errors.push_back(std::move(entry));
  }
  doc["errors"] = std::move(errors);
  return doc.dump();
}

}  // namespace vgdlgen
