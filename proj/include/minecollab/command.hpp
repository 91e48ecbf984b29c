#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "minecollab/conversation.hpp"
#include "minecollab/recipes.hpp"
#include "minecollab/task.hpp"
#include "minecollab/world.hpp"

namespace minecollab {

using ArgValue = std::variant<std::string, double, bool>;

struct Command {
  std::string name;
  std::vector<ArgValue> args;

  const std::string& str(std::size_t i) const { return std::get<std::string>(args.at(i)); }
  double num(std::size_t i) const { return std::get<double>(args.at(i)); }
  bool operator==(const Command&) const = default;
};

enum class ParamType { kString, kNumber, kBool };

struct ParamDoc {
  std::string name;
  ParamType type = ParamType::kString;
  std::string description;
  bool optional = false;
};

struct CommandSpec {
  std::string name;
  std::string description;
  std::vector<ParamDoc> params;
  /// Observation queries return their text as-is; actions are shown as "Code output:".
  bool query = false;

  std::size_t min_args() const;
};

class CommandRegistry {
 public:
  void add(CommandSpec spec);
  const CommandSpec* find(const std::string& name) const;
  const std::vector<CommandSpec>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// The in-scope command set, in documentation order.
  static const CommandRegistry& standard();

 private:
  std::vector<CommandSpec> entries_;
};

std::string render_command_docs(const CommandRegistry& registry);
/// `!name("text", 4)`; parsing the result gives back the same command.
std::string render_command(const Command& cmd);

struct ParseResult {
  enum class Status { kNone, kOk, kSyntaxError, kUnknownCommand, kArityMismatch };

  Status status = Status::kNone;
  Command command;
  std::string message;  // error text for the agent
  /// Where the "!name" starts in the text; npos when no command was found.
  std::size_t offset = std::string::npos;

  bool ok() const { return status == Status::kOk; }
};

/// Finds the first `!name(...)` in agent text. Plain chat gives kNone.
ParseResult parse_first_command(const std::string& text, const CommandRegistry& registry);

struct CommandContext {
  WorldState& world;
  const RecipeBook& book;
  ConversationManager& conversations;
  const TaskSpec* task = nullptr;
  /// Notices produced by conversation commands, for the caller to deliver.
  std::vector<Delivery>* notices = nullptr;
};

/// Radius used by nearbyBlocks, entities and chest lookups.
inline constexpr int kSearchRadius = 32;

CommandResult execute(CommandContext& ctx, const AgentId& actor, const Command& cmd);

/// Text the agent sees for a command result.
std::string present(const CommandSpec& spec, const CommandResult& result);
std::string present_completion(const CommandResult& result);

}  // namespace minecollab
