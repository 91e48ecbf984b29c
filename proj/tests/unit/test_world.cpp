#include <gtest/gtest.h>

#include <cstdlib>

#include "minecollab/world.hpp"

using namespace minecollab;

namespace {

WorldState flat_world_with(const AgentId& name, const Inventory& inv) {
  WorldState w = spawn_world_from_spec({"construction-superflat", {}, 0}, 1);
  add_agent(w, name, inv, {"*"}, 1);
  return w;
}

std::map<ItemId, long> nonzero(const std::map<ItemId, long>& m) {
  std::map<ItemId, long> out;
  for (const auto& [k, v] : m) {
    if (v != 0) out[k] = v;
  }
  return out;
}

}  // namespace

TEST(Inventory, KeepsOnlyPositiveStacks) {
  Inventory inv;
  inv.add("stick", 2);
  EXPECT_FALSE(inv.remove("stick", 3));
  EXPECT_EQ(inv.count("stick"), 2);
  EXPECT_TRUE(inv.remove("stick", 2));
  EXPECT_TRUE(inv.empty());
  EXPECT_EQ(inv.count("stick"), 0);
}

TEST(World, IdleTickOnlyAdvancesTheClock) {
  WorldState w = flat_world_with("Andy_0", {});
  w.tick = 5;
  auto before = serialize(w);
  EXPECT_TRUE(advance_tick(w).empty());
  EXPECT_EQ(w.tick, 6);
  auto after = serialize(w);
  before.erase("tick");
  after.erase("tick");
  EXPECT_EQ(before, after);
}

TEST(World, MovementProgressesOneTickAtATime) {
  WorldState w = flat_world_with("Andy_0", {});
  const BlockPos start = w.agent("Andy_0").pos;
  const BlockPos target = start.offset(6, 0, 0);
  ASSERT_TRUE(move_agent_toward(w, "Andy_0", target, 0).deferred);
  const auto& action = *w.agent("Andy_0").action;
  // open superflat: the shortest path is the straight line
  EXPECT_EQ(action.path.size(), 6u);
  EXPECT_EQ(action.duration, 3);
  for (std::size_t i = 0; i + 1 < action.path.size(); ++i) {
    const auto& a = action.path[i];
    const auto& b = action.path[i + 1];
    EXPECT_EQ(std::abs(a.x - b.x) + std::abs(a.z - b.z), 1);
    EXPECT_TRUE(w.standable(b));
  }
  advance_tick(w);
  EXPECT_EQ(w.agent("Andy_0").action->remaining(), 2);
  EXPECT_NE(w.agent("Andy_0").pos, start);
  advance_tick(w);
  const auto done = advance_tick(w);
  ASSERT_EQ(done.size(), 1u);
  EXPECT_EQ(done[0].result.message, "You have reached at " + target.str() + ".");
  EXPECT_EQ(w.agent("Andy_0").pos, target);
  EXPECT_FALSE(w.agent("Andy_0").busy());
}

TEST(World, TravelTicksUseTwoBlocksPerTick) {
  EXPECT_EQ(travel_ticks(0), 0);
  EXPECT_EQ(travel_ticks(1), 1);
  EXPECT_EQ(travel_ticks(2), 1);
  EXPECT_EQ(travel_ticks(5), 3);
}

TEST(World, SetBlockPlacesAndConsumes) {
  WorldState w = flat_world_with("Andy_0", {{"terracotta", 18}});
  const BlockPos p = w.agent("Andy_0").pos.offset(1, 0, 0);
  const auto r = set_block(w, p, "terracotta", "Andy_0");
  ASSERT_TRUE(r.ok()) << r.message;
  EXPECT_EQ(r.message, "Placed terracotta at (" + p.str() + ").");
  EXPECT_EQ(w.material_at(p), "terracotta");
  EXPECT_EQ(w.agent("Andy_0").inventory.count("terracotta"), 17);
}

TEST(World, SetBlockErrors) {
  WorldState w = flat_world_with("Andy_0", {{"oak_planks", 1}});
  const BlockPos here = w.agent("Andy_0").pos;
  auto r = set_block(w, here.offset(1, 0, 0), "stone", "Andy_0");
  EXPECT_FALSE(r.ok());
  EXPECT_NE(r.message.find("stone"), std::string::npos);
  r = set_block(w, here.offset(10, 0, 0), "oak_planks", "Andy_0");
  EXPECT_FALSE(r.ok());
  w.agent("Andy_0").capabilities = {"stone"};
  r = set_block(w, here.offset(1, 0, 0), "oak_planks", "Andy_0");
  EXPECT_FALSE(r.ok());
  EXPECT_NE(r.message.find("wood"), std::string::npos);
}

TEST(World, RemovingABlockDropsIt) {
  WorldState w = flat_world_with("Andy_0", {});
  const BlockPos p = w.agent("Andy_0").pos.offset(1, 0, 0);
  w.grid[p] = "terracotta";
  ledger_add(w, "terracotta", 1);
  const auto entities = w.entities.size();
  ASSERT_TRUE(set_block(w, p, "air", "Andy_0").ok());
  EXPECT_EQ(w.material_at(p), "air");
  ASSERT_EQ(w.entities.size(), entities + 1);
  EXPECT_EQ(w.entities.back().name, "terracotta");
  EXPECT_EQ(nonzero(census(w)), nonzero(w.ledger));
}

TEST(World, ProvisionedWorldsBalanceTheLedger) {
  for (const std::string kind : {"crafting-forest", "cooking-farm", "construction-superflat"}) {
    WorldProvision spec;
    spec.kind = kind;
    spec.resources = {{"potato", 2}, {"milk_bucket", 1}, {"oak_log", 3}};
    WorldState w = spawn_world_from_spec(spec, 9);
    add_agent(w, "Andy_0", {{"stick", 2}}, {"*"}, 3);
    EXPECT_EQ(nonzero(census(w)), nonzero(w.ledger)) << kind;
  }
}

TEST(World, SameSeedSameWorld) {
  WorldProvision spec{"cooking-farm", {{"potato", 2}, {"beef", 1}}, 0};
  EXPECT_EQ(world_hash(spawn_world_from_spec(spec, 4)), world_hash(spawn_world_from_spec(spec, 4)));
  EXPECT_NE(world_hash(spawn_world_from_spec(spec, 4)), world_hash(spawn_world_from_spec(spec, 5)));
}

TEST(Materials, Classification) {
  EXPECT_EQ(block_drop("stone"), "cobblestone");
  EXPECT_EQ(material_class("oak_planks"), "wood");
  EXPECT_EQ(material_class("red_carpet"), "carpet");
  EXPECT_TRUE(is_passable_material("oak_door"));
  EXPECT_FALSE(is_passable_material("stone"));
  EXPECT_EQ(livestock_drops().at("sheep"), "mutton");
}
