#include <gtest/gtest.h>

#include "minecollab/recipes.hpp"

using namespace minecollab;

namespace {

const RecipeBook& book() { return RecipeBook::standard(); }

WorldState forest_with(const Inventory& inv) {
  WorldState w = spawn_world_from_spec({"crafting-forest", {}, 0}, 2);
  add_agent(w, "Andy_0", inv, {"*"}, 2);
  return w;
}

void walk_to_table(WorldState& w) {
  auto table = std::find_if(w.grid.begin(), w.grid.end(), [](const auto& kv) { return kv.second == "crafting_table"; });
  ASSERT_NE(table, w.grid.end());
  ASSERT_TRUE(move_agent_toward(w, "Andy_0", table->first, 2).ok());
  while (w.agent("Andy_0").busy()) advance_tick(w);
}

}  // namespace

TEST(Recipes, RequirementText) {
  const Recipe* r = book().find("mushroom_stew");
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->requirement_text(), "brown_mushroom: 1, red_mushroom: 1, bowl: 1");
}

TEST(Recipes, DepthAndRawRequirement) {
  EXPECT_EQ(book().depth("oak_log"), 0);
  EXPECT_EQ(book().depth("oak_planks"), 1);
  EXPECT_GT(book().depth("stone_pickaxe"), book().depth("stick"));
  const Inventory raw = book().raw_requirement("stone_pickaxe", 1);
  EXPECT_EQ(raw.count("cobblestone"), 3);
  EXPECT_EQ(raw.count("oak_log"), 1);
}

TEST(Recipes, CraftWithoutResourcesNamesTheRequirement) {
  WorldState w = forest_with({});
  const auto r = craft(book(), w, "Andy_0", "mushroom_stew", 1);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.message,
            "You do not have the resources to craft a mushroom_stew. It requires: brown_mushroom: 1, red_mushroom: 1, "
            "bowl: 1.");
}

TEST(Recipes, CraftPlanksAnywhereAndSticks) {
  WorldState w = forest_with({{"oak_log", 1}});
  auto r = craft(book(), w, "Andy_0", "oak_planks", 1);
  ASSERT_TRUE(r.ok()) << r.message;
  EXPECT_EQ(r.message, "Successfully crafted oak_planks, you now have 4 oak_planks.");
  r = craft(book(), w, "Andy_0", "stick", 1);
  ASSERT_TRUE(r.ok()) << r.message;
  EXPECT_EQ(w.agent("Andy_0").inventory.count("stick"), 4);
  EXPECT_EQ(w.agent("Andy_0").inventory.count("oak_planks"), 2);
}

TEST(Recipes, TableRecipesNeedATable) {
  WorldState w = forest_with({{"cobblestone", 3}, {"stick", 2}});
  w.agent("Andy_0").pos = {-12, kGroundY, -12};
  ASSERT_TRUE(w.standable(w.agent("Andy_0").pos));
  auto r = craft(book(), w, "Andy_0", "stone_pickaxe", 1);
  EXPECT_FALSE(r.ok());
  EXPECT_NE(r.message.find("crafting_table"), std::string::npos);
  walk_to_table(w);
  r = craft(book(), w, "Andy_0", "stone_pickaxe", 1);
  ASSERT_TRUE(r.ok()) << r.message;
  EXPECT_EQ(w.agent("Andy_0").inventory, (Inventory{{"stone_pickaxe", 1}}));
}

TEST(Recipes, UnknownAndSmeltOnlyItems) {
  WorldState w = forest_with({});
  EXPECT_EQ(craft(book(), w, "Andy_0", "diamond_banana", 1).message, "Could not find a recipe for diamond_banana.");
  EXPECT_EQ(craft(book(), w, "Andy_0", "baked_potato", 1).message,
            "baked_potato is made by smelting, not crafting. Use !smeltItem.");
}

TEST(Recipes, SmeltNeedsAFurnace) {
  WorldState w = forest_with({{"potato", 1}});
  EXPECT_EQ(smelt(book(), w, "Andy_0", "potato", 1).message, "There is no furnace nearby.");
}

TEST(Recipes, SmeltInCookingFarm) {
  WorldState w = spawn_world_from_spec({"cooking-farm", {{"potato", 1}}, 0}, 2);
  add_agent(w, "Andy_0", {{"potato", 2}}, {"*"}, 2);
  auto furnace = std::find_if(w.grid.begin(), w.grid.end(), [](const auto& kv) { return kv.second == "furnace"; });
  ASSERT_NE(furnace, w.grid.end());
  ASSERT_TRUE(move_agent_toward(w, "Andy_0", furnace->first, 2).ok());
  while (w.agent("Andy_0").busy()) advance_tick(w);
  auto r = smelt(book(), w, "Andy_0", "potato", 2);
  while (w.agent("Andy_0").busy()) {
    for (auto& c : advance_tick(w)) r = c.result;
  }
  ASSERT_TRUE(r.ok()) << r.message;
  EXPECT_EQ(w.agent("Andy_0").inventory.count("baked_potato"), 2);
  EXPECT_EQ(w.agent("Andy_0").inventory.count("potato"), 0);
}

TEST(Recipes, PlanForStonePickaxe) {
  const auto plan = compute_crafting_plan(book(), "stone_pickaxe", 1, {{"wooden_pickaxe", 1}});
  EXPECT_EQ(plan.missing_inventory(), (Inventory{{"cobblestone", 3}, {"oak_log", 1}}));
  ASSERT_EQ(plan.steps.size(), 3u);
  EXPECT_EQ(plan.steps.back().text(), "Craft 3 cobblestone + 2 stick -> 1 stone_pickaxe");
  const std::string text = plan.render("stone_pickaxe", 1);
  EXPECT_NE(text.find("You are missing the following items:\n- 3 cobblestone\n- 1 oak_log\n"), std::string::npos);
  EXPECT_NE(text.find("Craft 1 oak_log -> 4 oak_planks\n"), std::string::npos);
}

TEST(Recipes, PlanWhenAlreadyHeld) {
  const auto plan = compute_crafting_plan(book(), "stick", 2, {{"stick", 2}});
  EXPECT_TRUE(plan.steps.empty());
  EXPECT_EQ(plan.render("stick", 2), "You already have 2 stick.");
}

TEST(Recipes, PlanUsesHeldIntermediates) {
  const auto plan = compute_crafting_plan(book(), "stone_pickaxe", 1, {{"stick", 2}, {"cobblestone", 3}});
  EXPECT_TRUE(plan.missing.empty());
  ASSERT_EQ(plan.steps.size(), 1u);
}

TEST(Recipes, Craftable) {
  const auto items = craftable(book(), {{"oak_log", 1}});
  EXPECT_NE(std::find(items.begin(), items.end(), "oak_planks"), items.end());
  EXPECT_EQ(std::find(items.begin(), items.end(), "stone_pickaxe"), items.end());
}
