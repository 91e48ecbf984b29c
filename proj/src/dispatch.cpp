// Command handlers: one function per in-scope command.

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "minecollab/command.hpp"
#include "minecollab/evaluator.hpp"

namespace minecollab {

namespace {

using Handler = CommandResult (*)(CommandContext&, const AgentId&, const Command&);

std::string paren(const BlockPos& p) { return "(" + p.str() + ")"; }

int as_count(double v) { return static_cast<int>(std::floor(v)); }

std::string int_text(double v) {
  if (v == std::floor(v)) return std::to_string(static_cast<long long>(v));
  return std::to_string(v);
}

/// Cells from which any target is within `reach`.
std::set<BlockPos> reach_cells(const std::vector<BlockPos>& targets, double reach) {
  std::set<BlockPos> cells;
  const int r = static_cast<int>(std::ceil(reach));
  for (const auto& t : targets) {
    for (int dx = -r; dx <= r; ++dx) {
      for (int dy = -r; dy <= r; ++dy) {
        for (int dz = -r; dz <= r; ++dz) {
          BlockPos p = t.offset(dx, dy, dz);
          if (p.distance_to(t) <= reach + 1e-9) cells.insert(p);
        }
      }
    }
  }
  return cells;
}

std::optional<std::vector<BlockPos>> path_within_reach(const WorldState& world, const BlockPos& from,
                                                       const std::vector<BlockPos>& targets, double reach) {
  if (targets.empty()) return std::nullopt;
  const auto cells = reach_cells(targets, reach);
  return find_path(world, from, [&](const BlockPos& p) { return cells.count(p) > 0; });
}

BlockPos nearest_of(const std::vector<BlockPos>& targets, const BlockPos& from) {
  BlockPos best = targets.front();
  for (const auto& t : targets) {
    const double d = t.distance_to(from);
    const double bd = best.distance_to(from);
    if (d < bd || (d == bd && t < best)) best = t;
  }
  return best;
}

std::optional<BlockPos> nearest_chest(const WorldState& world, const BlockPos& from) {
  std::optional<BlockPos> best;
  for (const auto& [pos, inv] : world.chests) {
    const double d = pos.distance_to(from);
    if (d > kSearchRadius) continue;
    if (!best || d < best->distance_to(from)) best = pos;
  }
  return best;
}

CommandResult needs_positive(int n) {
  return CommandResult::failure("The number must be at least 1, got " + std::to_string(n) + ".");
}

// ---------------------------------------------------------------------------
// Queries

CommandResult cmd_stats(CommandContext& ctx, const AgentId& actor, const Command&) {
  const AgentBody& b = ctx.world.agent(actor);
  std::string s = "\nSTATS\n- Position: x: " + std::to_string(b.pos.x) + ", y: " + std::to_string(b.pos.y) +
                  ", z: " + std::to_string(b.pos.z) + "\n- Health: 20 / 20\n- Hunger: 20 / 20\n- Biome: " +
                  ctx.world.spec_kind + "\n- Time: tick " + std::to_string(ctx.world.tick) + "\n- Current Action: " +
                  (b.action ? b.action->name : std::string("Idle")) + "\n";
  std::string others;
  for (const auto& [id, other] : ctx.world.agents) {
    if (id != actor && !other.removed) others += (others.empty() ? "" : ", ") + id;
  }
  s += "- Other Players: " + (others.empty() ? std::string("none") : others) + "\n";
  return CommandResult::success(s);
}

CommandResult cmd_inventory(CommandContext& ctx, const AgentId& actor, const Command&) {
  const Inventory& inv = ctx.world.agent(actor).inventory;
  if (inv.empty()) return CommandResult::success("\nINVENTORY: Nothing\nWEARING: Nothing\n");
  std::string s = "\nINVENTORY\n";
  for (const auto& [item, n] : inv) s += "- " + item + ": " + std::to_string(n) + "\n";
  return CommandResult::success(s + "WEARING: Nothing\n");
}

CommandResult cmd_nearby_blocks(CommandContext& ctx, const AgentId& actor, const Command&) {
  const NearbyScan scan = scan_nearby(ctx.world, actor, kSearchRadius);
  std::set<std::string> seen;
  std::string s;
  for (const auto& e : scan.blocks) {
    if (e.name == "air" || !seen.insert(e.name).second) continue;
    s += "- " + e.name;
    const ItemId drop = block_drop(e.name);
    if (drop != e.name) s += " (drops " + drop + ")";
    s += "\n";
  }
  if (s.empty()) return CommandResult::success("NEARBY_BLOCKS: none");
  return CommandResult::success("NEARBY_BLOCKS\n" + s);
}

CommandResult cmd_entities(CommandContext& ctx, const AgentId& actor, const Command&) {
  const NearbyScan scan = scan_nearby(ctx.world, actor, kSearchRadius);
  std::string s;
  for (const auto& e : scan.agents) s += "- player: " + e.name + "\n";
  std::set<std::string> seen;
  for (const auto& e : scan.entities) {
    if (!seen.insert(e.name).second) continue;
    auto drop = livestock_drops().find(e.name);
    if (drop != livestock_drops().end()) {
      s += "- " + e.name + " (drops " + drop->second + ")\n";
    } else {
      s += "- item: " + e.name + "\n";
    }
  }
  if (s.empty()) return CommandResult::success("NEARBY_ENTITIES: none");
  return CommandResult::success("NEARBY_ENTITIES\n" + s);
}

CommandResult cmd_craftable(CommandContext& ctx, const AgentId& actor, const Command&) {
  const auto items = craftable(ctx.book, ctx.world.agent(actor).inventory);
  if (items.empty()) return CommandResult::success("CRAFTABLE_ITEMS: none");
  std::string s = "CRAFTABLE_ITEMS\n";
  for (const auto& i : items) s += "- " + i + "\n";
  return CommandResult::success(s);
}

CommandResult cmd_saved_places(CommandContext& ctx, const AgentId& actor, const Command&) {
  const auto& places = ctx.world.agent(actor).saved_places;
  if (places.empty()) return CommandResult::success("Saved place names: none");
  std::string s;
  for (const auto& [name, pos] : places) s += (s.empty() ? "" : ", ") + name;
  return CommandResult::success("Saved place names: " + s);
}

CommandResult cmd_crafting_plan(CommandContext& ctx, const AgentId& actor, const Command& cmd) {
  if (ctx.task && !ctx.task->can_plan(actor)) {
    return CommandResult::failure("You do not have access to crafting plans in this task.");
  }
  const std::string& target = cmd.str(0);
  const int qty = as_count(cmd.num(1));
  if (qty < 1) return needs_positive(qty);
  try {
    const CraftingPlan plan = compute_crafting_plan(ctx.book, target, qty, ctx.world.agent(actor).inventory);
    return CommandResult::success(plan.render(target, qty));
  } catch (const Error& e) {
    return CommandResult::failure(std::string(e.what()) + ".");
  }
}

CommandResult cmd_help(CommandContext&, const AgentId&, const Command&) {
  return CommandResult::success(render_command_docs(CommandRegistry::standard()));
}

CommandResult cmd_view_chest(CommandContext& ctx, const AgentId& actor, const Command&) {
  auto chest = nearest_chest(ctx.world, ctx.world.agent(actor).pos);
  if (!chest) return CommandResult::failure("Could not find a chest nearby.");
  const Inventory& inv = ctx.world.chests.at(*chest);
  if (inv.empty()) return CommandResult::success("CHEST at " + paren(*chest) + " is empty.");
  std::string s = "CHEST at " + paren(*chest) + "\n";
  for (const auto& [item, n] : inv) s += "- " + item + ": " + std::to_string(n) + "\n";
  return CommandResult::success(s);
}

// ---------------------------------------------------------------------------
// Movement

CommandResult cmd_go_to_coordinates(CommandContext& ctx, const AgentId& actor, const Command& cmd) {
  const BlockPos target{static_cast<int>(std::floor(cmd.num(0))), static_cast<int>(std::floor(cmd.num(1))),
                        static_cast<int>(std::floor(cmd.num(2)))};
  return move_agent_toward(ctx.world, actor, target, std::max(0.0, cmd.num(3)));
}

CommandResult cmd_go_to_player(CommandContext& ctx, const AgentId& actor, const Command& cmd) {
  const std::string& name = cmd.str(0);
  auto it = ctx.world.agents.find(name);
  if (it == ctx.world.agents.end() || it->second.removed) return CommandResult::failure(name + " is not a player.");
  if (name == actor) return CommandResult::failure("You cannot go to yourself.");
  const BlockPos target = it->second.pos;
  const double closeness = std::max(1.0, cmd.num(1));
  auto path = find_path(ctx.world, ctx.world.agent(actor).pos,
                        [&](const BlockPos& p) { return p.distance_to(target) <= closeness + 1e-9; });
  if (!path) return CommandResult::failure("Could not find a path to " + name + ".");
  return start_action(ctx.world, actor, "goToPlayer", std::move(*path), 0, [name](WorldState& w, const AgentId& a) {
    pick_up_nearby(w, a);
    return CommandResult::success("You have reached " + name + ".");
  });
}

CommandResult cmd_search_for_block(CommandContext& ctx, const AgentId& actor, const Command& cmd) {
  const std::string& type = cmd.str(0);
  const double range = cmd.num(1);
  const BlockPos from = ctx.world.agent(actor).pos;
  std::vector<BlockPos> found;
  for (const auto& [pos, m] : ctx.world.grid) {
    if (m == type && pos.distance_to(from) <= range + 1e-9) found.push_back(pos);
  }
  if (found.empty()) {
    return CommandResult::failure("Could not find any " + type + " in " + int_text(range) + " blocks.");
  }
  auto path = path_within_reach(ctx.world, from, found, kInteractionRadius);
  if (!path) return CommandResult::failure("Could not find a path to " + type + ".");
  const BlockPos end = path->empty() ? from : path->back();
  const BlockPos block = nearest_of(found, end);
  return start_action(ctx.world, actor, "searchForBlock", std::move(*path), 0,
                      [type, block](WorldState& w, const AgentId& a) {
                        pick_up_nearby(w, a);
                        return CommandResult::success("Found " + type + " at " + paren(block) +
                                                      ".\nYou have reached at " + w.agent(a).pos.str() + ".");
                      });
}

CommandResult cmd_remember_here(CommandContext& ctx, const AgentId& actor, const Command& cmd) {
  AgentBody& b = ctx.world.agent(actor);
  b.saved_places[cmd.str(0)] = b.pos;
  return CommandResult::success("Location saved as \"" + cmd.str(0) + "\".");
}

CommandResult cmd_go_to_remembered(CommandContext& ctx, const AgentId& actor, const Command& cmd) {
  const auto& places = ctx.world.agent(actor).saved_places;
  auto it = places.find(cmd.str(0));
  if (it == places.end()) return CommandResult::failure("No location named \"" + cmd.str(0) + "\" saved.");
  return move_agent_toward(ctx.world, actor, it->second, 0);
}

CommandResult cmd_stop(CommandContext& ctx, const AgentId& actor, const Command&) {
  cancel_action(ctx.world, actor);
  return CommandResult::success("Agent stopped.");
}

// ---------------------------------------------------------------------------
// Items

CommandResult cmd_give_player(CommandContext& ctx, const AgentId& actor, const Command& cmd) {
  const std::string receiver = cmd.str(0);
  const std::string item = cmd.str(1);
  const int n = as_count(cmd.num(2));
  if (n < 1) return needs_positive(n);
  auto it = ctx.world.agents.find(receiver);
  if (it == ctx.world.agents.end() || it->second.removed) return CommandResult::failure(receiver + " is not a player.");
  if (receiver == actor) return CommandResult::failure("You cannot give items to yourself.");
  if (ctx.world.agent(actor).inventory.count(item) < n) {
    return CommandResult::failure("You do not have " + std::to_string(n) + " " + item + " to give.");
  }
  auto path = path_within_reach(ctx.world, ctx.world.agent(actor).pos, {it->second.pos}, kInteractionRadius);
  if (!path) return CommandResult::failure("Could not find a path to " + receiver + ".");
  return start_action(ctx.world, actor, "givePlayer", std::move(*path), 0,
                      [receiver, item, n](WorldState& w, const AgentId& a) {
                        AgentBody& sender = w.agent(a);
                        std::string msg = "You have reached " + receiver + ".\n";
                        const int have = std::min(n, sender.inventory.count(item));
                        sender.inventory.remove(item, have);
                        msg += "Discarded " + std::to_string(have) + " " + item + ".\n";
                        auto r = w.agents.find(receiver);
                        if (r != w.agents.end() && !r->second.removed &&
                            r->second.pos.distance_to(sender.pos) <= kInteractionRadius) {
                          r->second.inventory.add(item, have);
                          return CommandResult::success(msg + receiver + " received " + item + ".",
                                                        "give " + item);
                        }
                        drop_items(w, sender.pos, item, have);
                        return CommandResult::success(
                            msg + "Failed to give " + item + " to " + receiver + ", it was never received.",
                            "drop " + item);
                      });
}

CommandResult cmd_put_in_chest(CommandContext& ctx, const AgentId& actor, const Command& cmd) {
  const std::string item = cmd.str(0);
  const int n = as_count(cmd.num(1));
  if (n < 1) return needs_positive(n);
  const AgentBody& b = ctx.world.agent(actor);
  if (b.inventory.count(item) < n) {
    return CommandResult::failure("You do not have " + std::to_string(n) + " " + item + " to put in the chest.");
  }
  auto chest = nearest_chest(ctx.world, b.pos);
  if (!chest) return CommandResult::failure("Could not find a chest nearby.");
  auto path = path_within_reach(ctx.world, b.pos, {*chest}, kInteractionRadius);
  if (!path) return CommandResult::failure("Could not find a path to the chest.");
  const BlockPos at = *chest;
  return start_action(ctx.world, actor, "putInChest", std::move(*path), 0, [item, n, at](WorldState& w, const AgentId& a) {
    pick_up_nearby(w, a);
    auto c = w.chests.find(at);
    AgentBody& body = w.agent(a);
    if (c == w.chests.end()) return CommandResult::failure("The chest at " + paren(at) + " is gone.");
    const int k = std::min(n, body.inventory.count(item));
    body.inventory.remove(item, k);
    c->second.add(item, k);
    return CommandResult::success("Successfully put " + std::to_string(k) + " " + item + " in the chest.", "chest");
  });
}

CommandResult cmd_take_from_chest(CommandContext& ctx, const AgentId& actor, const Command& cmd) {
  const std::string item = cmd.str(0);
  const int n = as_count(cmd.num(1));
  if (n < 1) return needs_positive(n);
  const AgentBody& b = ctx.world.agent(actor);
  auto chest = nearest_chest(ctx.world, b.pos);
  if (!chest) return CommandResult::failure("Could not find a chest nearby.");
  if (ctx.world.chests.at(*chest).count(item) < 1) {
    return CommandResult::failure("The chest does not have any " + item + ".");
  }
  auto path = path_within_reach(ctx.world, b.pos, {*chest}, kInteractionRadius);
  if (!path) return CommandResult::failure("Could not find a path to the chest.");
  const BlockPos at = *chest;
  return start_action(ctx.world, actor, "takeFromChest", std::move(*path), 0,
                      [item, n, at](WorldState& w, const AgentId& a) {
                        pick_up_nearby(w, a);
                        auto c = w.chests.find(at);
                        if (c == w.chests.end()) return CommandResult::failure("The chest at " + paren(at) + " is gone.");
                        const int k = std::min(n, c->second.count(item));
                        if (k == 0) return CommandResult::failure("The chest does not have any " + item + ".");
                        c->second.remove(item, k);
                        w.agent(a).inventory.add(item, k);
                        return CommandResult::success(
                            "Successfully took " + std::to_string(k) + " " + item + " from the chest.", "chest");
                      });
}

CommandResult cmd_discard(CommandContext& ctx, const AgentId& actor, const Command& cmd) {
  const std::string& item = cmd.str(0);
  const int n = as_count(cmd.num(1));
  if (n < 1) return needs_positive(n);
  AgentBody& b = ctx.world.agent(actor);
  if (b.inventory.count(item) < n) {
    return CommandResult::failure("You do not have " + std::to_string(n) + " " + item + " to discard.");
  }
  b.inventory.remove(item, n);
  drop_items(ctx.world, b.pos, item, n);
  return CommandResult::success("Discarded " + std::to_string(n) + " " + item + ".", "drop " + item);
}

CommandResult cmd_collect_blocks(CommandContext& ctx, const AgentId& actor, const Command& cmd) {
  const std::string type = cmd.str(0);
  const int n = as_count(cmd.num(1));
  if (n < 1) return needs_positive(n);
  if (station_kind(type) != StationKind::kNone) return CommandResult::failure("Cannot collect " + type + ".");
  const AgentBody& b = ctx.world.agent(actor);
  if (!b.can_handle(type)) {
    return CommandResult::failure("You are not able to work with " + material_class(type) + " blocks.");
  }
  std::vector<BlockPos> remaining;
  for (const auto& [pos, m] : ctx.world.grid) {
    if (m == type && pos.distance_to(b.pos) <= kSearchRadius) remaining.push_back(pos);
  }
  if (remaining.empty()) return CommandResult::failure("No " + type + " nearby to collect.");
  // greedy tour: walk to the closest reachable block, then the next one from there
  std::vector<BlockPos> path;
  std::vector<BlockPos> chosen;
  BlockPos at = b.pos;
  while (static_cast<int>(chosen.size()) < n && !remaining.empty()) {
    auto leg = path_within_reach(ctx.world, at, remaining, kInteractionRadius);
    if (!leg) break;
    path.insert(path.end(), leg->begin(), leg->end());
    if (!leg->empty()) at = leg->back();
    std::vector<BlockPos> in_reach;
    for (const auto& p : remaining) {
      if (p.distance_to(at) <= kInteractionRadius + 1e-9) in_reach.push_back(p);
    }
    const BlockPos pick = nearest_of(in_reach, at);
    chosen.push_back(pick);
    remaining.erase(std::find(remaining.begin(), remaining.end(), pick));
  }
  if (chosen.empty()) return CommandResult::failure("Could not find a path to " + type + ".");
  const int ticks = static_cast<int>(chosen.size());
  return start_action(ctx.world, actor, "collectBlocks", std::move(path), ticks,
                      [type, chosen](WorldState& w, const AgentId& a) {
                        AgentBody& body = w.agent(a);
                        int got = 0;
                        for (const auto& p : chosen) {
                          auto cell = w.grid.find(p);
                          if (cell == w.grid.end() || cell->second != type) continue;
                          w.grid.erase(cell);
                          const ItemId drop = block_drop(type);
                          ledger_add(w, type, -1);
                          ledger_add(w, drop, 1);
                          body.inventory.add(drop, 1);
                          ++got;
                        }
                        for (auto& [id, other] : w.agents) {
                          if (!w.standable(other.pos)) displace_agent(w, other);
                        }
                        const int loose = pick_up_nearby(w, a);
                        std::string msg = "You have reached at " + body.pos.str() + ".\n";
                        if (got + loose > 0) msg += "Picked up " + std::to_string(got + loose) + " items.\n";
                        return CommandResult::success(msg + "Collected " + std::to_string(got) + " " + type + ".",
                                                      "collect " + type);
                      });
}

CommandResult cmd_craft(CommandContext& ctx, const AgentId& actor, const Command& cmd) {
  return craft(ctx.book, ctx.world, actor, cmd.str(0), as_count(cmd.num(1)));
}

CommandResult cmd_smelt(CommandContext& ctx, const AgentId& actor, const Command& cmd) {
  return smelt(ctx.book, ctx.world, actor, cmd.str(0), as_count(cmd.num(1)));
}

CommandResult cmd_clear_furnace(CommandContext& ctx, const AgentId& actor, const Command&) {
  auto f = nearest_station(ctx.world, ctx.world.agent(actor).pos, {StationKind::kFurnace, StationKind::kSmoker},
                           kInteractionRadius);
  if (!f) return CommandResult::failure("There is no furnace nearby.");
  return CommandResult::success("The " + ctx.world.material_at(*f) + " is already empty.");
}

CommandResult cmd_place_here(CommandContext& ctx, const AgentId& actor, const Command& cmd) {
  const std::string type = cmd.str(0);
  const AgentBody& b = ctx.world.agent(actor);
  const BlockPos at = b.pos;
  if (b.inventory.count(type) < 1) return CommandResult::failure("You do not have any " + type + " to place.");
  if (!b.can_handle(type)) {
    return CommandResult::failure("You are not able to work with " + material_class(type) + " blocks.");
  }
  if (type == "air") return CommandResult::failure("Cannot place air.");
  const std::string current = ctx.world.material_at(at);
  if (current != "air") return CommandResult::failure("There is already " + current + " at " + paren(at) + ".");
  return start_action(ctx.world, actor, "placeHere", {}, 1,
                      [type, at](WorldState& w, const AgentId& a) { return set_block(w, at, type, a); });
}

CommandResult cmd_attack(CommandContext& ctx, const AgentId& actor, const Command& cmd) {
  const std::string type = cmd.str(0);
  auto drop = livestock_drops().find(type);
  if (drop == livestock_drops().end()) return CommandResult::failure("You cannot attack " + type + ".");
  std::vector<BlockPos> herd;
  for (const auto& e : ctx.world.entities) {
    if (e.kind == EntityKind::kLivestock && e.name == type) herd.push_back(e.pos);
  }
  if (herd.empty()) return CommandResult::failure("Could not find any " + type + " to attack.");
  const BlockPos from = ctx.world.agent(actor).pos;
  auto path = path_within_reach(ctx.world, from, herd, kInteractionRadius);
  if (!path) return CommandResult::failure("Could not find a path to " + type + ".");
  const BlockPos end = path->empty() ? from : path->back();
  const BlockPos target = nearest_of(herd, end);
  const ItemId item = drop->second;
  return start_action(ctx.world, actor, "attack", std::move(*path), 1, [type, target, item](WorldState& w, const AgentId& a) {
    auto it = std::find_if(w.entities.begin(), w.entities.end(), [&](const Entity& e) {
      return e.kind == EntityKind::kLivestock && e.name == type && e.pos == target;
    });
    if (it == w.entities.end()) return CommandResult::failure("The " + type + " is gone.");
    w.entities.erase(it);
    ledger_add(w, item, 1);
    drop_items(w, target, item, 1);
    const int got = pick_up_nearby(w, a);
    return CommandResult::success("Successfully killed " + type + ".\nPicked up " + std::to_string(got) + " items.",
                                  "kill " + type);
  });
}

// ---------------------------------------------------------------------------
// Conversation

CommandResult cmd_start_conversation(CommandContext& ctx, const AgentId& actor, const Command& cmd) {
  try {
    auto r = ctx.conversations.start(actor, cmd.str(0), cmd.str(1), ctx.world.tick);
    if (ctx.notices) ctx.notices->insert(ctx.notices->end(), r.deliveries.begin(), r.deliveries.end());
    return CommandResult::success(r.reply);
  } catch (const Error& e) {
    return CommandResult::failure(e.what());
  }
}

CommandResult cmd_end_conversation(CommandContext& ctx, const AgentId& actor, const Command& cmd) {
  std::optional<std::string> message;
  if (cmd.args.size() > 1) message = cmd.str(1);
  try {
    auto d = ctx.conversations.end(actor, cmd.str(0), message, ctx.world.tick);
    if (ctx.notices) ctx.notices->insert(ctx.notices->end(), d.begin(), d.end());
    return CommandResult::success("");
  } catch (const Error& e) {
    return CommandResult::failure(e.what());
  }
}

// ---------------------------------------------------------------------------
// Blueprints

const Blueprint* task_blueprint(const CommandContext& ctx) {
  return ctx.task && ctx.task->blueprint ? &*ctx.task->blueprint : nullptr;
}

CommandResult no_blueprint() { return CommandResult::failure("There is no blueprint for this task."); }

std::optional<int> level_arg(const Blueprint& bp, double v) {
  const int l = as_count(v);
  if (l < 0 || l >= bp.level_count() || l != v) return std::nullopt;
  return l;
}

CommandResult bad_level(double v) {
  return CommandResult::failure("Level " + int_text(v) + " does not exist in the blueprint.");
}

CommandResult cmd_check_blueprint(CommandContext& ctx, const AgentId&, const Command&) {
  const Blueprint* bp = task_blueprint(ctx);
  if (!bp) return no_blueprint();
  return CommandResult::success(blueprint_diff(ctx.world, *bp));
}

CommandResult cmd_check_blueprint_level(CommandContext& ctx, const AgentId&, const Command& cmd) {
  const Blueprint* bp = task_blueprint(ctx);
  if (!bp) return no_blueprint();
  auto l = level_arg(*bp, cmd.num(0));
  if (!l) return bad_level(cmd.num(0));
  return CommandResult::success(blueprint_diff(ctx.world, *bp, *l));
}

std::string render_level(const Blueprint& bp, int l) {
  std::string s = "Level " + std::to_string(l) + " (y = " + std::to_string(bp.origin.y + l) + "):\n";
  for (int z = 0; z < bp.depth; ++z) {
    for (int x = 0; x < bp.width; ++x) s += (x ? " " : "") + bp.at(l, z, x);
    s += "\n";
  }
  return s;
}

CommandResult cmd_get_blueprint(CommandContext& ctx, const AgentId&, const Command&) {
  const Blueprint* bp = task_blueprint(ctx);
  if (!bp) return no_blueprint();
  std::string s = "Blueprint " + bp->config.name() + " with origin " + paren(bp->origin) +
                  ", rows run along x and advance along z:\n";
  for (int l = 0; l < bp->level_count(); ++l) s += render_level(*bp, l);
  return CommandResult::success(s);
}

CommandResult cmd_get_blueprint_level(CommandContext& ctx, const AgentId&, const Command& cmd) {
  const Blueprint* bp = task_blueprint(ctx);
  if (!bp) return no_blueprint();
  auto l = level_arg(*bp, cmd.num(0));
  if (!l) return bad_level(cmd.num(0));
  return CommandResult::success(render_level(*bp, *l));
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"stats", cmd_stats},
      {"inventory", cmd_inventory},
      {"nearbyBlocks", cmd_nearby_blocks},
      {"craftable", cmd_craftable},
      {"entities", cmd_entities},
      {"savedPlaces", cmd_saved_places},
      {"getCraftingPlan", cmd_crafting_plan},
      {"help", cmd_help},
      {"stop", cmd_stop},
      {"goToPlayer", cmd_go_to_player},
      {"goToCoordinates", cmd_go_to_coordinates},
      {"searchForBlock", cmd_search_for_block},
      {"rememberHere", cmd_remember_here},
      {"goToRememberedPlace", cmd_go_to_remembered},
      {"givePlayer", cmd_give_player},
      {"putInChest", cmd_put_in_chest},
      {"takeFromChest", cmd_take_from_chest},
      {"viewChest", cmd_view_chest},
      {"discard", cmd_discard},
      {"collectBlocks", cmd_collect_blocks},
      {"craftRecipe", cmd_craft},
      {"smeltItem", cmd_smelt},
      {"clearFurnace", cmd_clear_furnace},
      {"placeHere", cmd_place_here},
      {"attack", cmd_attack},
      {"startConversation", cmd_start_conversation},
      {"endConversation", cmd_end_conversation},
      {"checkBlueprintLevel", cmd_check_blueprint_level},
      {"checkBlueprint", cmd_check_blueprint},
      {"getBlueprint", cmd_get_blueprint},
      {"getBlueprintLevel", cmd_get_blueprint_level},
  };
  return table;
}

}  // namespace

CommandResult execute(CommandContext& ctx, const AgentId& actor, const Command& cmd) {
  auto it = ctx.world.agents.find(actor);
  if (it == ctx.world.agents.end()) throw Error(ErrorCode::kUnknownAgent, "Unknown agent " + actor);
  if (it->second.removed) return CommandResult::failure("The task is over.");
  const CommandSpec* spec = CommandRegistry::standard().find(cmd.name);
  auto h = handlers().find(cmd.name);
  if (!spec || h == handlers().end()) {
    return CommandResult::failure("Command !" + cmd.name + " does not exist. Use !help to see all commands.");
  }
  if (!spec->query && it->second.busy() && cmd.name != "stop") {
    return CommandResult::failure("You are already busy with " + it->second.action->name + ".");
  }
  return h->second(ctx, actor, cmd);
}

}  // namespace minecollab
