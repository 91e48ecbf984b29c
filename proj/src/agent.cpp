#include "minecollab/agent.hpp"

#include "minecollab/command.hpp"

namespace minecollab {

std::string inventory_note(const Inventory& inv) {
  if (inv.empty()) return "You have been provided with: nothing.";
  std::string s;
  for (const auto& [item, n] : inv) s += (s.empty() ? "" : ", ") + std::to_string(n) + " " + item;
  return "You have been provided with: " + s + ".";
}

AgentBrief make_brief(const TaskSpec& task, const AgentId& agent, std::uint64_t seed) {
  AgentBrief b;
  b.name = agent;
  b.task_type = task.task_type;
  b.goal = task.goal_for(agent);
  auto inv = task.initial_inventories.find(agent);
  if (inv != task.initial_inventories.end()) b.initial_inventory = inv->second;
  b.agents = task.agent_names;
  b.targets = task.target_items;
  b.command_docs = render_command_docs(CommandRegistry::standard());
  b.seed = seed;
  b.system_prompt = "You are a task-focused Minecraft bot named " + agent +
                    ". You have to collaborate with other agents in the world to complete the current task.\n"
                    "YOUR CURRENT ASSIGNED GOAL: \"" + b.goal + "\"\n\n" + inventory_note(b.initial_inventory) +
                    "\n" + b.command_docs;
  return b;
}

nlohmann::json AgentBrief::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["task_type"] = task_type;
  j["goal"] = goal;
  j["initial_inventory"] = initial_inventory.stacks();
  j["agents"] = agents;
  auto& t = j["targets"] = nlohmann::json::array();
  for (const auto& [item, n] : targets) t.push_back({{"item", item}, {"count", n}});
  j["command_docs"] = command_docs;
  j["system_prompt"] = system_prompt;
  j["seed"] = seed;
  return j;
}

AgentBrief AgentBrief::from_json(const nlohmann::json& j) {
  AgentBrief b;
  b.name = j.at("name").get<std::string>();
  b.task_type = j.value("task_type", "");
  b.goal = j.value("goal", "");
  if (j.contains("initial_inventory")) {
    for (const auto& [item, n] : j["initial_inventory"].items()) b.initial_inventory.add(item, n.get<int>());
  }
  b.agents = j.value("agents", std::vector<AgentId>{});
  if (j.contains("targets")) {
    for (const auto& t : j["targets"]) b.targets.emplace_back(t.at("item").get<std::string>(), t.at("count").get<int>());
  }
  b.command_docs = j.value("command_docs", "");
  b.system_prompt = j.value("system_prompt", "");
  b.seed = j.value("seed", std::uint64_t{0});
  return b;
}

}  // namespace minecollab
