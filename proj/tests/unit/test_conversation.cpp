#include <gtest/gtest.h>

#include "minecollab/conversation.hpp"

using namespace minecollab;

namespace {
auto idle = [](const AgentId&) { return false; };
}

TEST(Conversation, TagsOnce) {
  EXPECT_EQ(tag_message("Bob_0", "hi"), "Bob_0: (FROM OTHER BOT)hi");
  EXPECT_EQ(tag_message("Bob_0", "Bob_0: (FROM OTHER BOT)hi"), "Bob_0: (FROM OTHER BOT)hi");
}

TEST(Conversation, AlreadyInConversation) {
  ConversationManager cm({"Andy_0", "Bob_0"});
  EXPECT_TRUE(cm.start("Bob_0", "Andy_0", "hello", 0).reply.empty());
  EXPECT_EQ(cm.start("Bob_0", "Andy_0", "again", 1).reply,
            "You are already in conversation with Andy_0. Don't use this command to talk to them.");
  EXPECT_EQ(cm.start("Andy_0", "Bob_0", "x", 1).reply,
            "You are already in conversation with Bob_0. Don't use this command to talk to them.");
}

TEST(Conversation, Errors) {
  ConversationManager cm({"Andy_0", "Bob_0"});
  try {
    cm.start("Andy_0", "Andy_0", "x", 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSelfConversation);
  }
  try {
    cm.end("Andy_0", "Bob_0", std::nullopt, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoSuchConversation);
  }
  EXPECT_THROW(cm.start("Andy_0", "Zed", "x", 0), Error);
  EXPECT_FALSE(cm.send("Andy_0", "nobody listens", 0));
}

TEST(Conversation, ThrottleIntervals) {
  ConversationManager cm({"Andy_0", "Bob_0"});
  cm.start("Andy_0", "Bob_0", "m0", 0);
  cm.send("Andy_0", "m1", 0);
  cm.send("Andy_0", "m2", 0);
  std::vector<Tick> idle_ticks;
  for (Tick t = 0; t < 25; ++t) {
    for (const auto& d : cm.pump(idle, t)) idle_ticks.push_back(d.tick);
  }
  EXPECT_EQ(idle_ticks, (std::vector<Tick>{0, kMinInterval, 2 * kMinInterval}));

  cm.send("Andy_0", "m3", 25);
  cm.send("Andy_0", "m4", 25);
  auto andy_busy = [](const AgentId& a) { return a == "Andy_0"; };
  std::vector<Tick> slow;
  for (Tick t = 25; t < 120; ++t) {
    for (const auto& d : cm.pump(andy_busy, t)) {
      slow.push_back(d.tick);
      EXPECT_EQ(d.status, SessionStatus::kSlowed);
    }
  }
  EXPECT_EQ(slow, (std::vector<Tick>{50, 80}));
}

TEST(Conversation, PausedWhenBothBusy) {
  ConversationManager cm({"Andy_0", "Bob_0"});
  cm.start("Andy_0", "Bob_0", "m0", 0);
  for (Tick t = 0; t < 100; ++t) EXPECT_TRUE(cm.pump([](const AgentId&) { return true; }, t).empty());
  EXPECT_EQ(cm.sessions().front().status, SessionStatus::kPaused);
  EXPECT_EQ(cm.pump(idle, 100).size(), 1u);
}

TEST(Conversation, StartingAnotherSessionEndsTheOldOne) {
  ConversationManager cm({"Andy_0", "Bob_0", "Sally_0"});
  cm.start("Andy_0", "Bob_0", "hi Bob", 0);
  const auto r = cm.start("Andy_0", "Sally_0", "hi Sally", 1);
  ASSERT_EQ(r.deliveries.size(), 1u);
  EXPECT_EQ(r.deliveries[0].to, "Bob_0");
  EXPECT_EQ(r.deliveries[0].content, "Conversation with Andy_0 ended.");
  EXPECT_EQ(cm.partner("Andy_0"), "Sally_0");
  EXPECT_FALSE(cm.partner("Bob_0").has_value());
  // the old queue still drains
  std::vector<std::string> bodies;
  for (Tick t = 1; t < 30; ++t) {
    for (const auto& d : cm.pump(idle, t)) bodies.push_back(d.content);
  }
  EXPECT_EQ(bodies.size(), 2u);
}

TEST(Conversation, EndNotifiesWithMessage) {
  ConversationManager cm({"Andy_0", "Bob_0"});
  cm.start("Andy_0", "Bob_0", "hi", 0);
  const auto d = cm.end("Bob_0", "Andy_0", std::string("bye"), 3);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].to, "Andy_0");
  EXPECT_EQ(d[0].content, "Conversation with Bob_0 ended with message: bye");
  EXPECT_TRUE(d[0].notice);
}

TEST(Conversation, CloseAllReturnsUndelivered) {
  ConversationManager cm({"Andy_0", "Bob_0"});
  cm.start("Andy_0", "Bob_0", "a", 0);
  cm.send("Bob_0", "b", 0);
  const auto left = cm.close_all();
  ASSERT_EQ(left.size(), 2u);
  EXPECT_EQ(left[0].body, "a");
  EXPECT_EQ(left[1].body, "b");
}
