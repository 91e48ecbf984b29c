#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "minecollab/core.hpp"
#include "minecollab/world.hpp"

namespace minecollab {

enum class RecipeStation { kNone, kCraftingTable, kFurnace };
enum class RecipeKind { kCraft, kSmelt };

struct Recipe {
  ItemId output;
  int count = 1;
  std::vector<std::pair<ItemId, int>> inputs;  // in the order the recipe lists them
  RecipeStation station = RecipeStation::kNone;
  RecipeKind kind = RecipeKind::kCraft;

  /// "brown_mushroom: 1, red_mushroom: 1, bowl: 1" with every count scaled by `times`.
  std::string requirement_text(int times = 1) const;
};

/// One recipe per output item; validated acyclic at load time.
class RecipeBook {
 public:
  static RecipeBook from_json(const nlohmann::json& doc);
  static RecipeBook load(const std::filesystem::path& path);
  /// The recipe book shipped in data/recipes.json, compiled into the library.
  static const RecipeBook& standard();

  int version() const { return version_; }
  const Recipe* find(const ItemId& output) const;
  const Recipe* smelt_for_input(const ItemId& input) const;
  bool is_raw(const ItemId& item) const { return raw_items_.count(item) > 0; }
  bool known(const ItemId& item) const { return find(item) != nullptr || is_raw(item); }
  const std::set<ItemId>& raw_items() const { return raw_items_; }
  const std::vector<Recipe>& recipes() const { return ordered_; }
  /// Longest chain of recipe applications from raw items to `item` (raw items are depth 0).
  int depth(const ItemId& item) const;
  /// Raw items consumed to make `quantity` of `item` from nothing, batch rounding included.
  Inventory raw_requirement(const ItemId& item, int quantity) const;

 private:
  int version_ = 0;
  std::vector<Recipe> ordered_;
  std::map<ItemId, std::size_t> by_output_;
  std::set<ItemId> raw_items_;
};

struct PlanStep {
  RecipeKind kind = RecipeKind::kCraft;
  std::vector<std::pair<ItemId, int>> inputs;  // already multiplied by batches
  ItemId output;
  int output_count = 0;
  int batches = 0;

  std::string text() const;  // "Craft 3 paper + 1 leather -> 1 book"
};

struct CraftingPlan {
  std::vector<std::pair<ItemId, int>> missing;  // raw items, in discovery order
  std::vector<PlanStep> steps;                  // bottom-up

  Inventory missing_inventory() const;
  std::string render(const ItemId& target, int quantity) const;
};

CraftingPlan compute_crafting_plan(const RecipeBook& book, const ItemId& target, int quantity,
                                   const Inventory& inventory);

std::vector<ItemId> craftable(const RecipeBook& book, const Inventory& inventory);

CommandResult craft(const RecipeBook& book, WorldState& world, const AgentId& actor,
                    const ItemId& output_item, int times);

CommandResult smelt(const RecipeBook& book, WorldState& world, const AgentId& actor,
                    const ItemId& input_item, int times);

/// Nearest block of the station material within reach of `from`, if any.
std::optional<BlockPos> nearest_station(const WorldState& world, const BlockPos& from,
                                        std::initializer_list<StationKind> kinds, double radius);

}  // namespace minecollab
