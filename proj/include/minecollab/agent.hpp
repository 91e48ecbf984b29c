#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "minecollab/core.hpp"
#include "minecollab/task.hpp"

namespace minecollab {

/// One entry of an agent's context. Roles: system, user, assistant.
struct ChatMessage {
  std::string role;
  std::string content;

  bool operator==(const ChatMessage&) const = default;
};

/// What an agent is told before the first tick.
struct AgentBrief {
  AgentId name;
  std::string task_type;
  std::string goal;
  Inventory initial_inventory;
  std::vector<AgentId> agents;  // every agent of the task, in task order
  std::vector<std::pair<ItemId, int>> targets;
  std::string command_docs;
  /// First system message of the agent's context.
  std::string system_prompt;
  std::uint64_t seed = 0;

  nlohmann::json to_json() const;
  static AgentBrief from_json(const nlohmann::json& j);
};

AgentBrief make_brief(const TaskSpec& task, const AgentId& agent, std::uint64_t seed);

/// "You have been provided with: 1 wooden_pickaxe." style note.
std::string inventory_note(const Inventory& inv);

/// Anything that can play an agent: a scripted oracle, a replay, or a remote connection.
class AgentEndpoint {
 public:
  virtual ~AgentEndpoint() = default;
  virtual void begin(const AgentBrief& brief) = 0;
  /// A system or user message appended to this agent's context.
  virtual void observe(const ChatMessage& message, Tick tick) = 0;
  /// Next response; empty means the agent stays silent this poll.
  virtual std::string poll(Tick tick) = 0;
  virtual void finish(const std::string& end_reason, double score) {
    (void)end_reason;
    (void)score;
  }
};

}  // namespace minecollab
