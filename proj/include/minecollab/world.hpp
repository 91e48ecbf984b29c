#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "minecollab/core.hpp"

namespace minecollab {

// ---------------------------------------------------------------------------
// Materials

enum class StationKind { kNone, kCraftingTable, kFurnace, kSmoker, kChest };

StationKind station_kind(const std::string& material);
/// Agents walk through passable blocks (air, doors, carpets, plants); everything else is solid.
bool is_passable_material(const std::string& material);
/// Item obtained when a block of this material is collected ("stone" yields "cobblestone").
ItemId block_drop(const std::string& material);
/// Coarse class used for construction capabilities ("oak_planks" -> "wood", "red_carpet" -> "carpet").
std::string material_class(const std::string& material);
/// Livestock kind -> raw item dropped when killed.
const std::map<std::string, ItemId>& livestock_drops();

enum class SourceKind { kBlock, kLivestock, kChest };

struct ItemSource {
  SourceKind kind = SourceKind::kChest;
  std::string origin;  // block material or livestock kind; empty for chests
};

/// Where a provisioned world keeps a raw item.
ItemSource source_of(const ItemId& item);

// ---------------------------------------------------------------------------
// State

struct CommandResult {
  enum class Status { kOk, kError };

  Status status = Status::kOk;
  std::string message;
  std::string world_delta;
  /// Set when the command started a multi-tick action; the message arrives on completion.
  bool deferred = false;

  bool ok() const { return status == Status::kOk; }
  static CommandResult success(std::string msg, std::string delta = {}) {
    return {Status::kOk, std::move(msg), std::move(delta), false};
  }
  static CommandResult failure(std::string msg) { return {Status::kError, std::move(msg), {}, false}; }
};

struct WorldState;

struct PendingAction {
  std::string name;
  std::vector<BlockPos> path;  // positions visited after the start cell
  int elapsed = 0;
  int duration = 0;
  std::function<CommandResult(WorldState&, const AgentId&)> on_complete;

  int remaining() const { return duration - elapsed; }
};

struct AgentBody {
  AgentId name;
  BlockPos pos;
  Inventory inventory;
  std::set<std::string> capabilities{"*"};
  std::optional<PendingAction> action;
  std::map<std::string, BlockPos> saved_places;
  bool removed = false;

  bool busy() const { return action.has_value(); }
  bool can_handle(const std::string& material) const;
};

enum class EntityKind { kLivestock, kDroppedItem };

struct Entity {
  int id = 0;
  EntityKind kind = EntityKind::kLivestock;
  std::string name;  // livestock kind, or the dropped item id
  BlockPos pos;
  int count = 0;     // payload size for dropped items
};

struct WorldState {
  std::string spec_kind;
  Bounds bounds;
  int ground_y = kGroundY;
  std::map<BlockPos, std::string> grid;  // explicit non-air blocks
  std::map<AgentId, AgentBody> agents;
  std::vector<Entity> entities;
  std::map<BlockPos, Inventory> chests;
  std::map<BlockPos, int> furnace_fuel;
  Tick tick = 0;
  std::uint64_t rng_seed = 0;
  int next_entity_id = 1;
  /// Net items minted into the world (provisioning, harvests, recipes); the census must match it.
  std::map<ItemId, long> ledger;

  std::string material_at(const BlockPos& p) const;
  bool solid(const BlockPos& p) const;
  bool passable(const BlockPos& p) const;
  /// Passable cell an agent can occupy: resting on a solid block or braced against one.
  bool standable(const BlockPos& p) const;

  AgentBody& agent(const AgentId& id);
  const AgentBody& agent(const AgentId& id) const;
};

struct Completion {
  AgentId agent;
  CommandResult result;
};

// ---------------------------------------------------------------------------
// Provisioning

struct WorldProvision {
  std::string kind = "construction-superflat";  // crafting-forest | cooking-farm | construction-superflat
  Inventory resources;                          // raw items the world must offer
  int half_extent = 0;                          // 0 = kind default

  bool operator==(const WorldProvision&) const = default;
};

WorldState spawn_world_from_spec(const WorldProvision& spec, std::uint64_t seed);

/// Adds an agent at a free standable cell near the origin chosen from the world's seed.
void add_agent(WorldState& world, const AgentId& name, const Inventory& inventory,
               std::set<std::string> capabilities, std::uint64_t spawn_seed);

// ---------------------------------------------------------------------------
// Operations

std::vector<Completion> advance_tick(WorldState& world);

CommandResult set_block(WorldState& world, const BlockPos& pos, const std::string& material,
                        const AgentId& actor);

/// Breadth-first path over standable cells; empty vector when already at a goal.
std::optional<std::vector<BlockPos>> find_path(const WorldState& world, const BlockPos& from,
                                               const std::function<bool(const BlockPos&)>& goal,
                                               int max_steps = 1 << 20);

/// Starts a multi-tick action; if the duration is zero the completion runs immediately.
CommandResult start_action(WorldState& world, const AgentId& actor, std::string name,
                           std::vector<BlockPos> path, int extra_ticks,
                           std::function<CommandResult(WorldState&, const AgentId&)> on_complete);

int travel_ticks(std::size_t steps);

CommandResult move_agent_toward(WorldState& world, const AgentId& actor, const BlockPos& target,
                                double closeness);

/// Cancels the in-flight action, leaving the agent where it currently stands.
bool cancel_action(WorldState& world, const AgentId& actor);

struct NearbyEntry {
  double distance = 0;
  std::string name;
  BlockPos pos;
};

struct NearbyScan {
  std::vector<NearbyEntry> blocks;
  std::vector<NearbyEntry> agents;
  std::vector<NearbyEntry> entities;
};

NearbyScan scan_nearby(const WorldState& world, const AgentId& actor, int radius);

/// Moves dropped items within reach into the agent's inventory; returns the number picked up.
int pick_up_nearby(WorldState& world, const AgentId& actor);
void drop_items(WorldState& world, const BlockPos& pos, const ItemId& item, int count);
/// Moves an agent out of a solid cell to the closest standable one.
void displace_agent(WorldState& world, AgentBody& body);

// ---------------------------------------------------------------------------
// Bookkeeping

/// Items held across inventories, chests, dropped entities and placed blocks.
std::map<ItemId, long> census(const WorldState& world);
void ledger_add(WorldState& world, const ItemId& item, long n);

nlohmann::json serialize(const WorldState& world);
std::string world_hash(const WorldState& world);

}  // namespace minecollab
