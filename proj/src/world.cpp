#include "minecollab/world.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace minecollab {

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool contains_word(const std::string& s, const std::string& w) { return s.find(w) != std::string::npos; }

struct PosHash {
  std::size_t operator()(const BlockPos& p) const noexcept {
    auto h = static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.x));
    h = h * 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint32_t>(p.y);
    h = h * 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint32_t>(p.z);
    return static_cast<std::size_t>(h);
  }
};

constexpr int kHorizontal[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

std::string paren(const BlockPos& p) { return "(" + p.str() + ")"; }

BlockPos spawn_anchor(const WorldState& world) {
  if (world.spec_kind == "construction-superflat") return {-6, world.ground_y, -6};
  return {0, world.ground_y, 0};
}

}  // namespace

// ---------------------------------------------------------------------------
// Materials

StationKind station_kind(const std::string& material) {
  if (material == "crafting_table") return StationKind::kCraftingTable;
  if (material == "furnace") return StationKind::kFurnace;
  if (material == "smoker") return StationKind::kSmoker;
  if (material == "chest") return StationKind::kChest;
  return StationKind::kNone;
}

bool is_passable_material(const std::string& material) {
  static const std::set<std::string> plants = {
      "wheat",     "potatoes",  "carrots",     "beetroots", "brown_mushroom", "red_mushroom",
      "sugar_cane", "dandelion", "poppy",      "short_grass", "torch"};
  return material == "air" || ends_with(material, "_door") || ends_with(material, "_carpet") ||
         plants.count(material) > 0;
}

ItemId block_drop(const std::string& material) {
  static const std::map<std::string, ItemId> drops = {
      {"stone", "cobblestone"}, {"grass_block", "dirt"}, {"potatoes", "potato"},
      {"carrots", "carrot"},    {"beetroots", "beetroot"}};
  auto it = drops.find(material);
  return it == drops.end() ? material : it->second;
}

std::string material_class(const std::string& material) {
  if (ends_with(material, "_carpet")) return "carpet";
  if (ends_with(material, "_door")) return "door";
  if (contains_word(material, "glass")) return "glass";
  if (contains_word(material, "terracotta")) return "terracotta";
  if (contains_word(material, "sandstone")) return "sandstone";
  if (material == "bricks" || (ends_with(material, "_bricks") && !contains_word(material, "stone"))) {
    return "brick";
  }
  if (contains_word(material, "stone")) return "stone";
  if (ends_with(material, "_planks") || ends_with(material, "_log") || ends_with(material, "_stairs")) {
    return "wood";
  }
  return material;
}

const std::map<std::string, ItemId>& livestock_drops() {
  static const std::map<std::string, ItemId> drops = {{"chicken", "chicken"},
                                                      {"cow", "beef"},
                                                      {"pig", "porkchop"},
                                                      {"rabbit", "raw_rabbit"},
                                                      {"sheep", "mutton"}};
  return drops;
}

ItemSource source_of(const ItemId& item) {
  static const std::map<ItemId, std::string> blocks = {
      {"wheat", "wheat"},         {"potato", "potatoes"},
      {"carrot", "carrots"},      {"beetroot", "beetroots"},
      {"pumpkin", "pumpkin"},     {"sugar_cane", "sugar_cane"},
      {"brown_mushroom", "brown_mushroom"}, {"red_mushroom", "red_mushroom"},
      {"oak_log", "oak_log"},     {"cobblestone", "stone"},
      {"dandelion", "dandelion"}};
  if (auto it = blocks.find(item); it != blocks.end()) return {SourceKind::kBlock, it->second};
  for (const auto& [kind, drop] : livestock_drops()) {
    if (drop == item) return {SourceKind::kLivestock, kind};
  }
  return {SourceKind::kChest, {}};
}

bool AgentBody::can_handle(const std::string& material) const {
  return capabilities.count("*") > 0 || capabilities.count(material_class(material)) > 0;
}

// ---------------------------------------------------------------------------
// WorldState

std::string WorldState::material_at(const BlockPos& p) const {
  if (p.y < ground_y) return "grass_block";
  auto it = grid.find(p);
  return it == grid.end() ? "air" : it->second;
}

bool WorldState::solid(const BlockPos& p) const {
  if (p.y < ground_y) return true;
  auto it = grid.find(p);
  return it != grid.end() && !is_passable_material(it->second);
}

bool WorldState::passable(const BlockPos& p) const { return !solid(p); }

bool WorldState::standable(const BlockPos& p) const {
  if (!bounds.contains(p) || solid(p)) return false;
  if (solid(p.offset(0, -1, 0))) return true;
  for (const auto& d : kHorizontal) {
    if (solid(p.offset(d[0], 0, d[1]))) return true;
  }
  return false;
}

AgentBody& WorldState::agent(const AgentId& id) {
  auto it = agents.find(id);
  if (it == agents.end()) throw Error(ErrorCode::kUnknownAgent, "Unknown agent " + id);
  return it->second;
}

const AgentBody& WorldState::agent(const AgentId& id) const {
  auto it = agents.find(id);
  if (it == agents.end()) throw Error(ErrorCode::kUnknownAgent, "Unknown agent " + id);
  return it->second;
}

void ledger_add(WorldState& world, const ItemId& item, long n) {
  auto& v = world.ledger[item];
  v += n;
  if (v == 0) world.ledger.erase(item);
}

// ---------------------------------------------------------------------------
// Provisioning

namespace {

void place_natural(WorldState& world, const BlockPos& p, const std::string& material) {
  world.grid[p] = material;
  ledger_add(world, material, 1);
}

void spawn_livestock(WorldState& world, const std::string& kind, const BlockPos& p) {
  world.entities.push_back({world.next_entity_id++, EntityKind::kLivestock, kind, p, 0});
}

std::vector<BlockPos> region_cells(int x0, int x1, int z0, int z1, int y, int step) {
  std::vector<BlockPos> out;
  for (int x = x0; x <= x1; x += step) {
    for (int z = z0; z <= z1; z += step) out.push_back({x, y, z});
  }
  return out;
}

void place_station(WorldState& world, const BlockPos& p, const std::string& material) {
  place_natural(world, p, material);
  switch (station_kind(material)) {
    case StationKind::kChest: world.chests[p]; break;
    case StationKind::kFurnace:
    case StationKind::kSmoker: world.furnace_fuel[p] = kFullFuel; break;
    default: break;
  }
}

/// Requested counts topped up to a baseline so every provisioned world looks the same.
Inventory with_baseline(const Inventory& requested, const Inventory& baseline) {
  Inventory out = requested;
  for (const auto& [item, n] : baseline) {
    if (out.count(item) < n) out.add(item, n - out.count(item));
  }
  return out;
}

void provision_resources(WorldState& world, Rng& rng, const Inventory& resources,
                         std::vector<BlockPos> field, std::vector<BlockPos> pasture,
                         const BlockPos& chest_pos) {
  rng.shuffle(field);
  rng.shuffle(pasture);
  std::size_t field_i = 0;
  std::size_t pasture_i = 0;
  const int g = world.ground_y;
  for (const auto& [item, n] : resources) {
    const ItemSource src = source_of(item);
    switch (src.kind) {
      case SourceKind::kBlock: {
        if (src.origin == "oak_log") {
          // trees: columns of three logs
          for (int placed = 0; placed < n;) {
            if (field_i >= field.size()) throw Error(ErrorCode::kInvalidSpec, "world too small for resources");
            BlockPos base = field[field_i++];
            for (int h = 0; h < 3 && placed < n; ++h, ++placed) place_natural(world, base.offset(0, h, 0), "oak_log");
          }
          break;
        }
        // plants that only drop one item per block; stone-like blocks likewise
        for (int k = 0; k < n; ++k) {
          if (field_i >= field.size()) throw Error(ErrorCode::kInvalidSpec, "world too small for resources");
          BlockPos p = field[field_i++];
          p.y = g;
          place_natural(world, p, src.origin);
        }
        break;
      }
      case SourceKind::kLivestock:
        for (int k = 0; k < n; ++k) {
          if (pasture_i >= pasture.size()) throw Error(ErrorCode::kInvalidSpec, "pasture too small");
          spawn_livestock(world, src.origin, pasture[pasture_i++]);
        }
        break;
      case SourceKind::kChest:
        world.chests[chest_pos].add(item, n);
        ledger_add(world, item, n);
        break;
    }
  }
}

}  // namespace

WorldState spawn_world_from_spec(const WorldProvision& spec, std::uint64_t seed) {
  WorldState world;
  world.spec_kind = spec.kind;
  world.rng_seed = seed;
  world.ground_y = kGroundY;
  const int g = kGroundY;
  Rng rng(mix_seed(seed, fnv1a(spec.kind)));

  if (spec.kind == "construction-superflat") {
    const int h = spec.half_extent > 0 ? spec.half_extent : 24;
    world.bounds = {{-h, g, -h}, {h, g + 16, h}};
    if (!spec.resources.empty()) {
      const BlockPos chest{-3, g, -10};
      place_station(world, chest, "chest");
      for (const auto& [item, n] : spec.resources) {
        world.chests[chest].add(item, n);
        ledger_add(world, item, n);
      }
    }
    return world;
  }

  if (spec.kind == "cooking-farm") {
    const int h = spec.half_extent > 0 ? spec.half_extent : 20;
    world.bounds = {{-h, g, -h}, {h, g + 5, h}};
    const BlockPos chest{-2, g, 3};
    place_station(world, {2, g, 3}, "crafting_table");
    place_station(world, {4, g, 3}, "furnace");
    place_station(world, {6, g, 3}, "smoker");
    place_station(world, chest, "chest");
    static const Inventory baseline = {
        {"wheat", 3},        {"potato", 1},       {"carrot", 1},        {"beetroot", 1},
        {"brown_mushroom", 1}, {"red_mushroom", 1}, {"sugar_cane", 1},  {"pumpkin", 1},
        {"beef", 1},         {"chicken", 1},      {"porkchop", 1},      {"raw_rabbit", 1},
        {"mutton", 1},       {"milk_bucket", 3},  {"gold_ingot", 8},    {"egg", 1},
        {"bowl", 1},         {"apple", 1}};
    provision_resources(world, rng, with_baseline(spec.resources, baseline),
                        region_cells(4, 16, -14, -3, g, 1), region_cells(-16, -4, -14, -3, g, 2), chest);
    return world;
  }

  if (spec.kind == "crafting-forest") {
    const int h = spec.half_extent > 0 ? spec.half_extent : 20;
    world.bounds = {{-h, g, -h}, {h, g + 6, h}};
    const BlockPos chest{-2, g, 3};
    place_station(world, {2, g, 3}, "crafting_table");
    place_station(world, chest, "chest");
    static const Inventory baseline = {{"oak_log", 6}, {"cobblestone", 4}};
    // trees are spaced two apart so every trunk stays reachable
    provision_resources(world, rng, with_baseline(spec.resources, baseline),
                        region_cells(-14, 14, -14, -4, g, 2), region_cells(-14, 14, 6, 14, g, 2), chest);
    return world;
  }

  throw Error(ErrorCode::kInvalidSpec, "Unknown world spec: " + spec.kind);
}

void add_agent(WorldState& world, const AgentId& name, const Inventory& inventory,
               std::set<std::string> capabilities, std::uint64_t spawn_seed) {
  if (world.agents.count(name)) throw Error(ErrorCode::kInvalidArgument, "duplicate agent " + name);
  Rng rng(mix_seed(spawn_seed, fnv1a(name)));
  const BlockPos anchor = spawn_anchor(world);
  std::vector<BlockPos> candidates;
  for (int dx = -4; dx <= 4; ++dx) {
    for (int dz = -4; dz <= 4; ++dz) {
      BlockPos p = anchor.offset(dx, 0, dz);
      if (!world.standable(p)) continue;
      bool taken = false;
      for (const auto& [other, body] : world.agents) taken = taken || body.pos == p;
      if (!taken) candidates.push_back(p);
    }
  }
  if (candidates.empty()) throw Error(ErrorCode::kInvalidSpec, "no spawn position for " + name);
  AgentBody body;
  body.name = name;
  body.pos = rng.pick(candidates);
  body.inventory = inventory;
  body.capabilities = capabilities.empty() ? std::set<std::string>{"*"} : std::move(capabilities);
  for (const auto& [item, n] : inventory) ledger_add(world, item, n);
  world.agents.emplace(name, std::move(body));
}

// ---------------------------------------------------------------------------
// Movement and actions

int travel_ticks(std::size_t steps) {
  return static_cast<int>((steps + kMoveSpeed - 1) / kMoveSpeed);
}

std::optional<std::vector<BlockPos>> find_path(const WorldState& world, const BlockPos& from,
                                               const std::function<bool(const BlockPos&)>& goal,
                                               int max_steps) {
  if (goal(from)) return std::vector<BlockPos>{};
  std::unordered_map<BlockPos, BlockPos, PosHash> parent;
  std::deque<std::pair<BlockPos, int>> frontier;
  parent.emplace(from, from);
  frontier.emplace_back(from, 0);
  auto unwind = [&](BlockPos p) {
    std::vector<BlockPos> path;
    while (!(p == from)) {
      path.push_back(p);
      p = parent.at(p);
    }
    std::reverse(path.begin(), path.end());
    return path;
  };
  while (!frontier.empty()) {
    auto [cur, depth] = frontier.front();
    frontier.pop_front();
    if (depth >= max_steps) continue;
    auto visit = [&](const BlockPos& next) -> bool {
      if (parent.count(next) || !world.standable(next)) return false;
      parent.emplace(next, cur);
      if (goal(next)) return true;
      frontier.emplace_back(next, depth + 1);
      return false;
    };
    for (int dy : {0, 1, -1}) {
      for (const auto& d : kHorizontal) {
        BlockPos next = cur.offset(d[0], dy, d[1]);
        if (visit(next)) return unwind(next);
      }
    }
    for (int dy : {1, -1}) {
      BlockPos next = cur.offset(0, dy, 0);
      if (visit(next)) return unwind(next);
    }
  }
  return std::nullopt;
}

CommandResult start_action(WorldState& world, const AgentId& actor, std::string name,
                           std::vector<BlockPos> path, int extra_ticks,
                           std::function<CommandResult(WorldState&, const AgentId&)> on_complete) {
  AgentBody& body = world.agent(actor);
  if (body.busy()) {
    return CommandResult::failure("You are already busy with " + body.action->name + ".");
  }
  const int duration = travel_ticks(path.size()) + extra_ticks;
  if (duration == 0) {
    if (!path.empty()) body.pos = path.back();
    return on_complete(world, actor);
  }
  body.action = PendingAction{std::move(name), std::move(path), 0, duration, std::move(on_complete)};
  CommandResult r;
  r.deferred = true;
  return r;
}

std::vector<Completion> advance_tick(WorldState& world) {
  ++world.tick;
  std::vector<Completion> done;
  for (auto& [id, body] : world.agents) {
    if (!body.action) continue;
    PendingAction& act = *body.action;
    ++act.elapsed;
    if (!act.path.empty()) {
      const auto reached = std::min<std::size_t>(static_cast<std::size_t>(act.elapsed) * kMoveSpeed, act.path.size());
      body.pos = act.path[reached - 1];
    }
    if (act.elapsed >= act.duration) {
      PendingAction finished = std::move(*body.action);
      body.action.reset();
      if (!finished.path.empty()) body.pos = finished.path.back();
      done.push_back({id, finished.on_complete(world, id)});
    }
  }
  return done;
}

CommandResult move_agent_toward(WorldState& world, const AgentId& actor, const BlockPos& target,
                                double closeness) {
  AgentBody& body = world.agent(actor);
  if (body.busy()) return CommandResult::failure("You are already busy with " + body.action->name + ".");
  if (!world.bounds.contains(target)) {
    return CommandResult::failure("Target " + target.str() + " is outside the world.");
  }
  auto path = find_path(world, body.pos, [&](const BlockPos& p) {
    return p.distance_to(target) <= closeness + 1e-9 && world.standable(p);
  });
  if (!path) return CommandResult::failure("Could not find a path to " + target.str() + ".");
  return start_action(world, actor, "goToCoordinates", std::move(*path), 0,
                      [](WorldState& w, const AgentId& a) {
                        pick_up_nearby(w, a);
                        return CommandResult::success("You have reached at " + w.agent(a).pos.str() + ".");
                      });
}

bool cancel_action(WorldState& world, const AgentId& actor) {
  AgentBody& body = world.agent(actor);
  if (!body.action) return false;
  body.action.reset();
  return true;
}

// ---------------------------------------------------------------------------
// Blocks and items

void drop_items(WorldState& world, const BlockPos& pos, const ItemId& item, int count) {
  if (count <= 0) return;
  world.entities.push_back({world.next_entity_id++, EntityKind::kDroppedItem, item, pos, count});
}

int pick_up_nearby(WorldState& world, const AgentId& actor) {
  AgentBody& body = world.agent(actor);
  int picked = 0;
  auto keep = std::stable_partition(world.entities.begin(), world.entities.end(), [&](const Entity& e) {
    return !(e.kind == EntityKind::kDroppedItem && e.pos.distance_to(body.pos) <= kInteractionRadius);
  });
  for (auto it = keep; it != world.entities.end(); ++it) {
    body.inventory.add(it->name, it->count);
    picked += it->count;
  }
  world.entities.erase(keep, world.entities.end());
  return picked;
}

void displace_agent(WorldState& world, AgentBody& body) {
  if (!world.solid(body.pos)) return;
  std::deque<BlockPos> frontier{body.pos};
  std::unordered_set<BlockPos, PosHash> seen{body.pos};
  static constexpr int kDirs[6][3] = {{0, 1, 0}, {1, 0, 0}, {-1, 0, 0}, {0, 0, 1}, {0, 0, -1}, {0, -1, 0}};
  while (!frontier.empty()) {
    BlockPos cur = frontier.front();
    frontier.pop_front();
    if (world.standable(cur)) {
      body.pos = cur;
      return;
    }
    for (const auto& d : kDirs) {
      BlockPos next = cur.offset(d[0], d[1], d[2]);
      if (!world.bounds.contains(next) || !seen.insert(next).second) continue;
      frontier.push_back(next);
    }
  }
}

CommandResult set_block(WorldState& world, const BlockPos& pos, const std::string& material,
                        const AgentId& actor) {
  AgentBody& body = world.agent(actor);
  if (!world.bounds.contains(pos)) return CommandResult::failure("Position " + paren(pos) + " is outside the world.");
  if (body.pos.distance_to(pos) > kInteractionRadius) {
    return CommandResult::failure("Position " + paren(pos) + " is out of reach.");
  }
  const std::string current = world.material_at(pos);
  if (material == "air") {
    if (current == "air") return CommandResult::failure("There is no block at " + paren(pos) + " to remove.");
    if (!body.can_handle(current)) {
      return CommandResult::failure("You are not able to work with " + material_class(current) + " blocks.");
    }
    world.grid.erase(pos);
    if (auto chest = world.chests.find(pos); chest != world.chests.end()) {
      for (const auto& [item, n] : chest->second) drop_items(world, pos, item, n);
      world.chests.erase(chest);
    }
    world.furnace_fuel.erase(pos);
    drop_items(world, pos, current, 1);
    return CommandResult::success("Removed " + current + " at " + paren(pos) + ".", "remove " + current);
  }
  if (body.inventory.count(material) < 1) {
    return CommandResult::failure("You do not have any " + material + " to place.");
  }
  if (!body.can_handle(material)) {
    return CommandResult::failure("You are not able to work with " + material_class(material) + " blocks.");
  }
  if (current != "air") {
    return CommandResult::failure("There is already " + current + " at " + paren(pos) + ".");
  }
  body.inventory.remove(material, 1);
  world.grid[pos] = material;
  switch (station_kind(material)) {
    case StationKind::kChest: world.chests[pos]; break;
    case StationKind::kFurnace:
    case StationKind::kSmoker: world.furnace_fuel[pos] = 0; break;
    default: break;
  }
  if (!is_passable_material(material)) {
    for (auto& [id, other] : world.agents) {
      if (other.pos == pos) displace_agent(world, other);
    }
  }
  return CommandResult::success("Placed " + material + " at " + paren(pos) + ".", "place " + material);
}

// ---------------------------------------------------------------------------
// Observation

NearbyScan scan_nearby(const WorldState& world, const AgentId& actor, int radius) {
  const AgentBody& body = world.agent(actor);
  NearbyScan scan;
  const double r = radius + 1e-9;
  const auto by_distance = [](const NearbyEntry& a, const NearbyEntry& b) {
    if (a.distance != b.distance) return a.distance < b.distance;
    if (a.name != b.name) return a.name < b.name;
    return a.pos < b.pos;
  };
  scan.blocks.push_back({0.0, world.material_at(body.pos), body.pos});
  for (const auto& [pos, material] : world.grid) {
    if (pos == body.pos) continue;
    const double d = pos.distance_to(body.pos);
    if (d <= r) scan.blocks.push_back({d, material, pos});
  }
  for (const auto& [id, other] : world.agents) {
    if (id == actor || other.removed) continue;
    const double d = other.pos.distance_to(body.pos);
    if (d <= r) scan.agents.push_back({d, id, other.pos});
  }
  for (const auto& e : world.entities) {
    const double d = e.pos.distance_to(body.pos);
    if (d <= r) scan.entities.push_back({d, e.name, e.pos});
  }
  std::sort(scan.blocks.begin(), scan.blocks.end(), by_distance);
  std::sort(scan.agents.begin(), scan.agents.end(), by_distance);
  std::sort(scan.entities.begin(), scan.entities.end(), by_distance);
  return scan;
}

// ---------------------------------------------------------------------------
// Bookkeeping

std::map<ItemId, long> census(const WorldState& world) {
  std::map<ItemId, long> total;
  for (const auto& [id, body] : world.agents) {
    for (const auto& [item, n] : body.inventory) total[item] += n;
  }
  for (const auto& [pos, inv] : world.chests) {
    for (const auto& [item, n] : inv) total[item] += n;
  }
  for (const auto& e : world.entities) {
    if (e.kind == EntityKind::kDroppedItem) total[e.name] += e.count;
  }
  for (const auto& [pos, material] : world.grid) total[material] += 1;
  return total;
}

namespace {

nlohmann::json pos_json(const BlockPos& p) { return nlohmann::json::array({p.x, p.y, p.z}); }

nlohmann::json inv_json(const Inventory& inv) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [item, n] : inv) j[item] = n;
  return j;
}

}  // namespace

nlohmann::json serialize(const WorldState& world) {
  nlohmann::json j;
  j["spec_kind"] = world.spec_kind;
  j["bounds"] = {pos_json(world.bounds.min), pos_json(world.bounds.max)};
  j["ground_y"] = world.ground_y;
  j["tick"] = world.tick;
  j["rng_seed"] = world.rng_seed;
  j["next_entity_id"] = world.next_entity_id;
  auto& grid = j["grid"] = nlohmann::json::array();
  for (const auto& [pos, material] : world.grid) grid.push_back({pos.x, pos.y, pos.z, material});
  auto& agents = j["agents"] = nlohmann::json::object();
  for (const auto& [id, body] : world.agents) {
    nlohmann::json a;
    a["pos"] = pos_json(body.pos);
    a["inventory"] = inv_json(body.inventory);
    a["capabilities"] = body.capabilities;
    a["removed"] = body.removed;
    auto& places = a["saved_places"] = nlohmann::json::object();
    for (const auto& [name, p] : body.saved_places) places[name] = pos_json(p);
    if (body.action) {
      nlohmann::json path = nlohmann::json::array();
      for (const auto& p : body.action->path) path.push_back(pos_json(p));
      a["action"] = {{"name", body.action->name},
                     {"elapsed", body.action->elapsed},
                     {"duration", body.action->duration},
                     {"path", path}};
    } else {
      a["action"] = nullptr;
    }
    agents[id] = std::move(a);
  }
  auto& entities = j["entities"] = nlohmann::json::array();
  for (const auto& e : world.entities) {
    entities.push_back({{"id", e.id},
                        {"kind", e.kind == EntityKind::kLivestock ? "livestock" : "dropped_item"},
                        {"name", e.name},
                        {"pos", pos_json(e.pos)},
                        {"count", e.count}});
  }
  auto& chests = j["chests"] = nlohmann::json::array();
  for (const auto& [pos, inv] : world.chests) chests.push_back({pos_json(pos), inv_json(inv)});
  auto& fuel = j["furnace_fuel"] = nlohmann::json::array();
  for (const auto& [pos, n] : world.furnace_fuel) fuel.push_back({pos_json(pos), n});
  j["ledger"] = world.ledger;
  return j;
}

std::string world_hash(const WorldState& world) { return hex64(fnv1a(serialize(world).dump())); }

}  // namespace minecollab
