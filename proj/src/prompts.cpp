// vgdlgen/prompts.cpp
#include "vgdlgen/prompts.hpp"

#include <array>
#include <cctype>

namespace vgdlgen {

namespace {

constexpr std::string_view kInstruction =
    "Please create a VGDL representation for <Game>. Please create a game level as well.";

constexpr std::string_view kLevel =
    R"(Use "W" to represent walls, "A" for the avatar, and "G" for the goal.)";

constexpr std::string_view kGrammarBase =
    R"(A game is defined by two separate components, the level description, which essentially describes the positions of all objects and the layout of the game in 2D (i.e., the initial conditions), and the game description proper, which describes the dynamics and potential interactions of all the objects in the game.
The level description is simply a text string/file with a number of equal-length lines, where each character maps to (read: instantiates) one or more objects at the corresponding location of the rectangular grid.

The game description is composed of four blocks of instructions.

The LevelMapping describes how to translate the characters in the level description into (one or more) objects, to generate the initial game state. For example, each "1" spawns an object of the "monster" class.
The SpriteSet defines the classes of objects used, all of which are defined in the ontology, and derive from an abstract VGDLSprite class. Object classes are organized in a tree (using nested indentations), where a child class will inherit the properties of its ancestors. For example, there are two subclasses of avatars, one where Link possesses the key and one where he does not. Furthermore, all class definitions can be augmented by keyword options. For example, the "key" and "goal" classes differ only by their color and how they interact.

The InteractionSet defines the potential events that happen when two objects collide. Each such interaction maps two object classes to an event method (defined in the ontology), possibly augmented by keyword options. For example, swords kill monsters, monsters kill the avatar (both subclasses), nobody is allowed to pass through walls, and when Link finds a "key" object, the avatar class is transformed.

The TerminationSet defines different ways by which the game can end, each line is a termination criterion, different criteria are available through the ontology and can be further specialized with keyword options. Here, it is sufficient to capture the goal (bring the sprite counter of the "goal" class to zero) to win.
What permits the descriptions to be so concise is an underlying ontology which defines many high-level building blocks for games, including the types of physics used (continuous, or grid based, friction, gravity, etc.), movement dynamics of objects (straight or random motion, player-control, etc.) and interaction effects upon object collisions (bouncing, destruction, spawning, transformation, etc.).

Here is the grammar:

<game> ::= game_class <eol> INDENT <level-block> <sprite-block> <interaction-block> <termination-block>

<level-block> ::= LevelMapping <eol> INDENT { <char-map> NEWLINE } DEDENT

<sprite-block> ::= SpriteSet <eol> INDENT { <sprite-def> NEWLINE } DEDENT

<interaction-block> ::= InteractionSet <eol> INDENT { <interaction-def> <eol> } DEDENT

<termination-block> ::= TerminationSet <eol> INDENT { <termination-def> <eol> } DEDENT

<char-map> ::= CHAR " textgreater " <sprite-type> { " " <sprite-type> }

<sprite-def> ::= <sprite-simple> [ <eol> INDENT { <sprite-def> <eol> } DEDENT ]

<sprite-simple> ::= <sprite-type> " textgreater " [ sprite class ] { " " <option> }

<interaction-def> ::= <sprite-type> <sprite-type> " textgreater " interaction method { " " <option> }

<termination-def> ::= termination class { " " <option> }

<eol> ::= { " " } [ "#" { CHAR | " " } ] NEWLINE

<option> ::= IDENTIFIER "=" ( <sprite-type> | evaluable )

<sprite-type> ::= IDENTIFIER | "avatar" | "wall" | "EOS")";

constexpr std::string_view kC1 =
    R"(In the grammar, the sprite classes you can choose are 'MovingAvatar', 'Immovable'.
The interaction methods you can choose are 'killSprite', 'stepBack'. When using 'killSprite', follow the format '<Sprite To Be Killed> <Sprite Not To Be Killed> > killSprite'
The termination classes you can choose are 'SpriteCounter'. When using 'SpriteCounter', follow the format 'SpriteCounter stype=<Your Sprite Type> limit=<The number of your sprite type> win=<True/False>'.)";

constexpr std::string_view kC2 =
    R"(In the grammar, the sprite classes you can choose are 'MovingAvatar', 'Immovable'.
The interaction methods you can choose are 'removeSprite', 'stepBack'. When using 'removeSprite', follow the format '<Sprite Not To Be Removed> <Sprite To Be Removed> > removeSprite'.
The termination classes you can choose are 'SpriteCounter'. When using 'SpriteCounter', follow the format 'SpriteCounter stype=<Your Sprite Type> limit=<The number of your sprite type> win=<True/False>'.)";

constexpr std::string_view kAliensTemplate =
    R"(BasicGame
    SpriteSet
        background > Immovable
        base    > Immovable    color=WHITE
        avatar  > FlakAvatar   stype=sam
        missile > Missile
            sam  > orientation=UP    color=BLUE singleton=True
            bomb > orientation=DOWN  color=RED  speed=0.5
        alien   > Bomber       stype=bomb   prob=0.01  cooldown=3 speed=0.8
            alienGreen > speed=0.8
            alienBlue > speed=0.8
        portal  > invisible=True
            portalSlow  > SpawnPoint   stype=alienBlue  cooldown=16   total=20
            portalFast  > SpawnPoint   stype=alienGreen  cooldown=12   total=20

    LevelMapping
        . > background
        0 > background base
        1 > background portalSlow
        2 > background portalFast
        A > background avatar

    TerminationSet
        SpriteCounter      stype=avatar               limit=0 win=False
        MultiSpriteCounter stype1=portal stype2=alien limit=0 win=True

    InteractionSet
        avatar  EOS  > stepBack
        alien   EOS  > turnAround
        missile EOS  > killSprite

        base bomb > killBoth
        base sam > killBoth scoreChange=1

        base   alien > killSprite
        avatar alien > killSprite scoreChange=-1
        avatar bomb  > killSprite scoreChange=-1
        alien  sam   > killSprite scoreChange=2)";

const std::string kExample = std::string("I am going to provide a template for your output.\n"
                                         "The template is based on the game Aliens.\n```\n") +
                             std::string(kAliensTemplate) + "\n```";

std::string replace_all(std::string text, std::string_view needle, std::string_view repl) {
  size_t pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    text.replace(pos, needle.size(), repl);
    pos += repl.size();
  }
  return text;
}

}  // namespace

std::string_view preset_name(PresetId id) {
  static constexpr std::array<std::string_view, 7> names = {"P1", "P2", "P3", "P4",
                                                            "P5", "P6", "P7"};
  return names[static_cast<size_t>(id)];
}

std::optional<PresetId> preset_from_string(std::string_view name) {
  if (name.size() != 2 || (name[0] != 'p' && name[0] != 'P')) return std::nullopt;
  if (name[1] < '1' || name[1] > '7') return std::nullopt;
  return static_cast<PresetId>(name[1] - '1');
}

std::string_view instruction_template() { return kInstruction; }
std::string_view level_block() { return kLevel; }

std::string grammar_base_block(GrammarStyle style) {
  std::string text(kGrammarBase);
  if (style == GrammarStyle::Normalized) {
    text = replace_all(std::move(text), "\" textgreater \"", "\">\"");
  }
  return text;
}

std::string_view c1_block() { return kC1; }
std::string_view c2_block() { return kC2; }
std::string_view example_block() { return kExample; }
std::string_view aliens_template() { return kAliensTemplate; }

Expected<PromptText, ConfigError> build(const PromptConfig& config) {
  if (config.constraint != Constraint::None && !config.include_grammar_base) {
    return ConfigError{"constraint C1/C2 requires the grammar base block"};
  }
  PromptText prompt;
  std::vector<std::string> parts;

  parts.push_back(replace_all(std::string(kInstruction), "<Game>", config.game_name));
  prompt.blocks.push_back("instruction");
  if (config.mechanics) {
    parts.push_back(*config.mechanics);
    prompt.blocks.push_back("mechanics");
  }
  if (config.include_level) {
    parts.emplace_back(kLevel);
    prompt.blocks.push_back("level");
  }
  if (config.include_grammar_base) {
    parts.push_back(grammar_base_block(config.grammar_style));
    prompt.blocks.push_back("grammar_base");
  }
  if (config.constraint == Constraint::C1) {
    parts.emplace_back(kC1);
    prompt.blocks.push_back("c1");
  } else if (config.constraint == Constraint::C2) {
    parts.emplace_back(kC2);
    prompt.blocks.push_back("c2");
  }
  if (config.include_example) {
    parts.push_back(kExample);
    prompt.blocks.push_back("example");
  }

  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) prompt.text += "\n\n";
    prompt.text += parts[i];
  }
  prompt.text += '\n';
  return prompt;
}

PromptConfig preset(PresetId id, std::string game_name) {
  PromptConfig config;
  config.game_name = std::move(game_name);
  switch (id) {
    case PresetId::P1: break;
    case PresetId::P2:
      config.include_level = true;
      break;
    case PresetId::P3:
      config.include_level = true;
      config.include_grammar_base = true;
      break;
    case PresetId::P4:
      config.include_level = true;
      config.include_grammar_base = true;
      config.constraint = Constraint::C1;
      break;
    case PresetId::P5:
      config.include_level = true;
      config.include_grammar_base = true;
      config.constraint = Constraint::C2;
      break;
    case PresetId::P6:
      config.include_level = true;
      config.include_grammar_base = true;
      config.constraint = Constraint::C1;
      config.include_example = true;
      break;
    case PresetId::P7:
      config.include_level = true;
      config.include_grammar_base = true;
      config.constraint = Constraint::C2;
      config.include_example = true;
      break;
  }
  return config;
}

}  // namespace vgdlgen
