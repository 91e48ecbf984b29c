#include <gtest/gtest.h>

#include "minecollab/command.hpp"

using namespace minecollab;

namespace {
const CommandRegistry& reg() { return CommandRegistry::standard(); }
}  // namespace

TEST(CommandParser, PlainTextIsNotACommand) {
  const auto r = parse_first_command("hello there", reg());
  EXPECT_EQ(r.status, ParseResult::Status::kNone);
  EXPECT_EQ(r.offset, std::string::npos);
}

TEST(CommandParser, ParsesArgumentsAndOffset) {
  const std::string text = "Sure, coming. !goToCoordinates(155, -59, -168, 0.5)";
  const auto r = parse_first_command(text, reg());
  ASSERT_TRUE(r.ok()) << r.message;
  EXPECT_EQ(r.command.name, "goToCoordinates");
  ASSERT_EQ(r.command.args.size(), 4u);
  EXPECT_EQ(r.command.num(1), -59);
  EXPECT_EQ(r.command.num(3), 0.5);
  EXPECT_EQ(r.offset, text.find('!'));
}

TEST(CommandParser, QuotedStringsKeepCommasAndParens) {
  const auto r = parse_first_command("!startConversation(\"Bob_0\", \"a, b (c)\")", reg());
  ASSERT_TRUE(r.ok()) << r.message;
  EXPECT_EQ(r.command.str(1), "a, b (c)");
}

TEST(CommandParser, NoArgumentCommands) {
  EXPECT_TRUE(parse_first_command("!inventory", reg()).ok());
  EXPECT_TRUE(parse_first_command("!stats()", reg()).ok());
}

TEST(CommandParser, Errors) {
  EXPECT_EQ(parse_first_command("!fly()", reg()).status, ParseResult::Status::kUnknownCommand);
  EXPECT_EQ(parse_first_command("!craftRecipe(\"stick\")", reg()).status, ParseResult::Status::kArityMismatch);
  EXPECT_EQ(parse_first_command("!craftRecipe(\"stick\", 1", reg()).status, ParseResult::Status::kSyntaxError);
}

TEST(CommandParser, RenderRoundTrips) {
  const Command c{"givePlayer", {std::string("Bob_0"), std::string("oak_log"), 4.0}};
  const std::string text = render_command(c);
  EXPECT_EQ(text, "!givePlayer(\"Bob_0\", \"oak_log\", 4)");
  const auto back = parse_first_command(text, reg());
  ASSERT_TRUE(back.ok());
  EXPECT_EQ(back.command, c);
}

TEST(CommandRegistry, InScopeSet) {
  const std::vector<std::string> names = {
      "stats",        "inventory",        "nearbyBlocks",        "craftable",      "entities",       "help",
      "getCraftingPlan", "goToCoordinates", "goToPlayer",        "searchForBlock", "collectBlocks",  "craftRecipe",
      "smeltItem",    "clearFurnace",     "placeHere",           "givePlayer",     "putInChest",     "takeFromChest",
      "viewChest",    "discard",          "attack",              "rememberHere",   "goToRememberedPlace",
      "savedPlaces",  "startConversation", "endConversation",    "stop",           "checkBlueprint",
      "checkBlueprintLevel", "getBlueprint", "getBlueprintLevel"};
  EXPECT_EQ(reg().entries().size(), names.size());
  for (const auto& n : names) EXPECT_NE(reg().find(n), nullptr) << n;
  EXPECT_EQ(reg().find("newAction"), nullptr);
  const std::string docs = render_command_docs(reg());
  EXPECT_NE(docs.find("!placeHere"), std::string::npos);
}

TEST(CommandPresentation, ActionsAreWrapped) {
  const auto* collect = reg().find("collectBlocks");
  const auto* inv = reg().find("inventory");
  EXPECT_EQ(present(*collect, CommandResult::success("Collected 1 stone.")), "Code output:\nCollected 1 stone.\n");
  EXPECT_EQ(present(*inv, CommandResult::success("\nINVENTORY: Nothing\n")), "\nINVENTORY: Nothing\n");
}
