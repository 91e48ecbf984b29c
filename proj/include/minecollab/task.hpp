#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "minecollab/blueprint.hpp"
#include "minecollab/core.hpp"
#include "minecollab/recipes.hpp"
#include "minecollab/world.hpp"

namespace minecollab {

enum class PlanBlocked { kNone, kOne, kBoth };

std::string to_string(PlanBlocked p);
PlanBlocked parse_plan_blocked(const std::string& s);

struct TaskSpec {
  std::string task_name;
  std::string task_type;  // cooking | crafting | construction | techtree
  std::string goal;
  /// Goal text shown to one agent when it differs from `goal` (recipe steps, Hell's Kitchen hand-outs).
  std::map<AgentId, std::string> agent_goals;
  std::vector<AgentId> agent_names;
  std::map<AgentId, Inventory> initial_inventories;
  std::vector<std::pair<ItemId, int>> target_items;
  std::map<AgentId, bool> plan_access;  // may call getCraftingPlan
  bool hells_kitchen = false;
  /// Hell's Kitchen: indices into target_items each agent must produce.
  std::map<AgentId, std::vector<int>> assignments;
  std::map<AgentId, std::set<std::string>> capabilities;  // empty = universal
  std::optional<Blueprint> blueprint;
  int timeout_seconds = 300;
  WorldProvision world;
  std::uint64_t seed = 0;
  bool cheats = false;
  // grouping keys for suite reports
  PlanBlocked plan_blocked = PlanBlocked::kNone;
  int blocked_agents = 0;

  int agent_count() const { return static_cast<int>(agent_names.size()); }
  Tick max_ticks() const { return static_cast<Tick>(timeout_seconds) * kTicksPerSecond; }
  const std::string& goal_for(const AgentId& agent) const;
  bool can_plan(const AgentId& agent) const;

  nlohmann::json to_json() const;
  static TaskSpec from_json(const nlohmann::json& j);
  /// A task file, or a directory holding task.json.
  static TaskSpec load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;
};

/// Andy_0, Bob_0, Sally_0, Jack_0, Emma_0, truncated to `count`.
std::vector<AgentId> default_agent_names(int count);

// ---------------------------------------------------------------------------
// Cooking

const std::vector<ItemId>& cooking_train_items();
const std::vector<ItemId>& cooking_test_items();

/// Ingredients a cooking world must offer for `item`, expanded until chest-stocked items or raw items.
Inventory cooking_requirement(const RecipeBook& book, const ItemId& item, int quantity);

/// Step-by-step instructions for one cooking item ("Step 1: Go to the farm and collect 1 potato.").
std::string cooking_recipe_text(const RecipeBook& book, const ItemId& item);

struct CookingOptions {
  int agent_count = 2;
  int item_count = 1;
  bool hells_kitchen = false;
  int blocked_agents = 0;
  std::string split = "train";  // train | test
  std::vector<ItemId> items;    // explicit targets; sampled from the split when empty
};

TaskSpec generate_cooking_task(const RecipeBook& book, const CookingOptions& opts, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Crafting

const std::vector<ItemId>& crafting_train_targets();
const std::vector<ItemId>& crafting_test_targets();

TaskSpec generate_crafting_task(const RecipeBook& book, int agent_count, const ItemId& target,
                                PlanBlocked blocked, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Construction

TaskSpec generate_construction_task(const BlueprintConfig& config, std::uint64_t seed, int agent_count = 2);

// ---------------------------------------------------------------------------
// Splits

struct SplitSizes {
  int train = 0;
  int test = 0;
};

SplitSizes default_split_sizes(const std::string& domain);

/// Deterministic train and test task lists for a domain; zero sizes mean the defaults.
std::pair<std::vector<TaskSpec>, std::vector<TaskSpec>> split_train_test(const RecipeBook& book,
                                                                         const std::string& domain,
                                                                         std::uint64_t seed,
                                                                         SplitSizes sizes = {});

}  // namespace minecollab
