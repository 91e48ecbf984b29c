#include "minecollab/command.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace minecollab {

std::size_t CommandSpec::min_args() const {
  std::size_t n = 0;
  for (const auto& p : params) n += p.optional ? 0 : 1;
  return n;
}

void CommandRegistry::add(CommandSpec spec) {
  if (find(spec.name)) throw Error(ErrorCode::kInvalidArgument, "duplicate command " + spec.name);
  entries_.push_back(std::move(spec));
}

const CommandSpec* CommandRegistry::find(const std::string& name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

const CommandRegistry& CommandRegistry::standard() {
  static const CommandRegistry reg = [] {
    using P = ParamType;
    CommandRegistry r;
    auto q = [&](std::string n, std::string d, std::vector<ParamDoc> p = {}) {
      r.add({std::move(n), std::move(d), std::move(p), true});
    };
    auto a = [&](std::string n, std::string d, std::vector<ParamDoc> p = {}) {
      r.add({std::move(n), std::move(d), std::move(p), false});
    };
    q("stats", "Get your bot's location, health, hunger, and time of day.");
    q("inventory", "Get your bot's inventory.");
    q("nearbyBlocks", "Get the blocks near the bot.");
    q("craftable", "Get the craftable items with the bot's inventory.");
    q("entities", "Get the nearby players and entities.");
    q("savedPlaces", "List all saved locations.");
    q("getCraftingPlan",
      "Provides a comprehensive crafting plan for a specified item. This includes a breakdown of required "
      "ingredients, the exact quantities needed, and an analysis of missing ingredients or extra items needed "
      "based on the bot's current inventory.",
      {{"targetItem", P::kString, "The item that we are trying to craft"},
       {"quantity", P::kNumber, "The quantity of the item that we are trying to craft"}});
    q("help", "Lists all available commands and their descriptions.");
    a("stop", "Force stop all actions and commands that are currently executing.");
    a("goToPlayer", "Go to the given player.",
      {{"player_name", P::kString, "The name of the player to go to."},
       {"closeness", P::kNumber, "How close to get to the player."}});
    a("goToCoordinates", "Go to the given x, y, z location.",
      {{"x", P::kNumber, "The x coordinate."},
       {"y", P::kNumber, "The y coordinate."},
       {"z", P::kNumber, "The z coordinate."},
       {"closeness", P::kNumber, "How close to get to the location."}});
    a("searchForBlock", "Find and go to the nearest block of a given type in a given range.",
      {{"type", P::kString, "The block type to go to."},
       {"search_range", P::kNumber, "The range to search for the block."}});
    a("rememberHere", "Save the current location with a given name.",
      {{"name", P::kString, "The name to remember the location as."}});
    a("goToRememberedPlace", "Go to a saved location.",
      {{"name", P::kString, "The name of the location to go to."}});
    a("givePlayer", "Give the specified item to the given player.",
      {{"player_name", P::kString, "The name of the player to give the item to."},
       {"item_name", P::kString, "The name of the item to give."},
       {"num", P::kNumber, "The number of items to give."}});
    a("putInChest", "Put the given item in the nearest chest.",
      {{"item_name", P::kString, "The name of the item to put in the chest."},
       {"num", P::kNumber, "The number of items to put in the chest."}});
    a("takeFromChest", "Take the given items from the nearest chest.",
      {{"item_name", P::kString, "The name of the item to take."},
       {"num", P::kNumber, "The number of items to take."}});
    q("viewChest", "View the items/counts of the nearest chest.");
    a("discard", "Discard the given item from the inventory.",
      {{"item_name", P::kString, "The name of the item to discard."},
       {"num", P::kNumber, "The number of items to discard."}});
    a("collectBlocks", "Collect the nearest blocks of a given type.",
      {{"type", P::kString, "The block type to collect."},
       {"num", P::kNumber, "The number of blocks to collect."}});
    a("craftRecipe", "Craft the given recipe a given number of times.",
      {{"recipe_name", P::kString, "The name of the output item to craft."},
       {"num", P::kNumber,
        "The number of times to craft the recipe. This is NOT the number of output items, as it may craft many "
        "more items depending on the recipe."}});
    a("smeltItem", "Smelt the given item the given number of times.",
      {{"item_name", P::kString, "The name of the input item to smelt."},
       {"num", P::kNumber, "The number of times to smelt the item."}});
    a("clearFurnace", "Take all items out of the nearest furnace.");
    a("placeHere",
      "Place a given block in the current location. Do NOT use to build structures, only use for single "
      "blocks/torches.",
      {{"type", P::kString, "The block type to place."}});
    a("attack", "Attack and kill the nearest entity of a given type.",
      {{"type", P::kString, "The type of entity to attack."}});
    q("startConversation", "Start a conversation with a player. Use for bots only.",
      {{"player_name", P::kString, "The name of the player to send the message to."},
       {"message", P::kString, "The message to send."}});
    q("endConversation", "End the conversation with the given player.",
      {{"player_name", P::kString, "The name of the player to end the conversation with."},
       {"message", P::kString, "A closing message for the player.", true}});
    q("checkBlueprintLevel",
      "Check if the level is complete and what blocks still need to be placed for the blueprint",
      {{"levelNum", P::kNumber, "The level number to check."}});
    q("checkBlueprint", "Check what blocks still need to be placed for the blueprint");
    q("getBlueprint", "Get the blueprint for the building");
    q("getBlueprintLevel", "Get the blueprint for the building",
      {{"levelNum", P::kNumber, "The level number to check."}});
    return r;
  }();
  return reg;
}

namespace {

std::string type_name(ParamType t) {
  switch (t) {
    case ParamType::kString: return "string";
    case ParamType::kNumber: return "number";
    case ParamType::kBool: return "bool";
  }
  return "string";
}

std::string render_number(double v) {
  if (std::isfinite(v) && v == std::floor(v) && std::fabs(v) < 1e15) {
    return std::to_string(static_cast<long long>(v));
  }
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

std::string render_command_docs(const CommandRegistry& registry) {
  if (registry.empty()) return {};
  std::string out =
      "\n*COMMAND DOCS\n You can use the following commands to perform actions and get information about the "
      "world. \n    Use the commands with the syntax: !commandName or !commandName(\"arg1\", 1.2, ...) if the "
      "command takes arguments.\n\n    Do not use codeblocks. Use double quotes for strings. Only use one command "
      "in each response, trailing commands and comments will be ignored.\n";
  for (const auto& e : registry.entries()) {
    out += "!" + e.name + ": " + e.description + "\n";
    if (!e.params.empty()) {
      out += "Params:\n";
      for (const auto& p : e.params) {
        out += p.name + ": (" + type_name(p.type) + ") " + p.description + (p.optional ? " (optional)" : "") + "\n";
      }
    }
  }
  return out + "*\n";
}

std::string render_command(const Command& cmd) {
  std::string out = "!" + cmd.name;
  if (cmd.args.empty()) return out;
  out += "(";
  for (std::size_t i = 0; i < cmd.args.size(); ++i) {
    if (i) out += ", ";
    const auto& a = cmd.args[i];
    if (const auto* s = std::get_if<std::string>(&a)) {
      out += "\"";
      for (char c : *s) {
        if (c == '"' || c == '\\') out += '\\';
        if (c == '\n') {
          out += "\\n";
          continue;
        }
        out += c;
      }
      out += "\"";
    } else if (const auto* d = std::get_if<double>(&a)) {
      out += render_number(*d);
    } else {
      out += std::get<bool>(a) ? "true" : "false";
    }
  }
  return out + ")";
}

ParseResult parse_first_command(const std::string& text, const CommandRegistry& registry) {
  ParseResult res;
  std::size_t i = 0;
  for (;;) {
    i = text.find('!', i);
    if (i == std::string::npos) return res;
    if (i + 1 < text.size() && ident_start(text[i + 1])) break;
    ++i;
  }
  res.offset = i;
  std::size_t j = i + 1;
  while (j < text.size() && ident_char(text[j])) ++j;
  Command cmd;
  cmd.name = text.substr(i + 1, j - i - 1);
  const CommandSpec* spec = registry.find(cmd.name);
  if (!spec) {
    res.status = ParseResult::Status::kUnknownCommand;
    res.message = "Command !" + cmd.name + " does not exist. Use !help to see all commands.";
    return res;
  }
  auto syntax = [&](const std::string& why) {
    res.status = ParseResult::Status::kSyntaxError;
    res.message = "Command is incorrectly formatted: " + why + ".";
    return res;
  };
  std::size_t k = j;
  if (k < text.size() && text[k] == '(') {
    ++k;
    auto skip_ws = [&] {
      while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
    };
    skip_ws();
    if (k < text.size() && text[k] == ')') {
      ++k;
    } else {
      for (;;) {
        skip_ws();
        if (k >= text.size()) return syntax("missing closing parenthesis");
        if (text[k] == '"') {
          std::string s;
          ++k;
          bool closed = false;
          while (k < text.size()) {
            char c = text[k++];
            if (c == '\\') {
              if (k >= text.size()) break;
              char e = text[k++];
              s += e == 'n' ? '\n' : e;
            } else if (c == '"') {
              closed = true;
              break;
            } else {
              s += c;
            }
          }
          if (!closed) return syntax("unterminated string");
          cmd.args.emplace_back(std::move(s));
        } else if (text.compare(k, 4, "true") == 0 || text.compare(k, 5, "false") == 0) {
          const bool v = text[k] == 't';
          k += v ? 4 : 5;
          cmd.args.emplace_back(v);
        } else {
          std::size_t start = k;
          while (k < text.size() && (std::isdigit(static_cast<unsigned char>(text[k])) || text[k] == '-' ||
                                     text[k] == '+' || text[k] == '.' || text[k] == 'e' || text[k] == 'E')) {
            ++k;
          }
          const std::string tok = text.substr(start, k - start);
          if (tok.empty()) return syntax("unexpected character '" + std::string(1, text[k]) + "'");
          double v = 0;
          try {
            std::size_t used = 0;
            v = std::stod(tok, &used);
            if (used != tok.size()) return syntax("bad number " + tok);
          } catch (const std::exception&) {
            return syntax("bad number " + tok);
          }
          cmd.args.emplace_back(v);
        }
        skip_ws();
        if (k >= text.size()) return syntax("missing closing parenthesis");
        if (text[k] == ',') {
          ++k;
          continue;
        }
        if (text[k] == ')') {
          ++k;
          break;
        }
        return syntax("expected ',' or ')'");
      }
    }
  }
  if (cmd.args.size() < spec->min_args() || cmd.args.size() > spec->params.size()) {
    res.status = ParseResult::Status::kArityMismatch;
    res.message = "Command !" + cmd.name + " was given " + std::to_string(cmd.args.size()) + " args, but requires " +
                  std::to_string(spec->min_args()) + " args.";
    return res;
  }
  for (std::size_t a = 0; a < cmd.args.size(); ++a) {
    const ParamType want = spec->params[a].type;
    const bool ok = (want == ParamType::kString && std::holds_alternative<std::string>(cmd.args[a])) ||
                    (want == ParamType::kNumber && std::holds_alternative<double>(cmd.args[a])) ||
                    (want == ParamType::kBool && std::holds_alternative<bool>(cmd.args[a]));
    if (!ok) {
      res.status = ParseResult::Status::kArityMismatch;
      res.message = "Error: Param '" + spec->params[a].name + "' must be of type " + type_name(want) + ".";
      return res;
    }
  }
  res.status = ParseResult::Status::kOk;
  res.command = std::move(cmd);
  return res;
}

std::string present(const CommandSpec& spec, const CommandResult& result) {
  if (spec.query) return result.message;
  return present_completion(result);
}

std::string present_completion(const CommandResult& result) { return "Code output:\n" + result.message + "\n"; }

}  // namespace minecollab
