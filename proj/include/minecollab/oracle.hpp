#pragma once

#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "minecollab/agent.hpp"
#include "minecollab/core.hpp"

namespace minecollab {

// ---------------------------------------------------------------------------
// Readers for command output. Oracles see the world only through these texts.

Inventory parse_item_list(const std::string& text);  // "- item: n" lines
/// nearbyBlocks lines: block name and the item it drops.
std::vector<std::pair<std::string, ItemId>> parse_nearby_blocks(const std::string& text);
/// entities lines for livestock: kind and drop.
std::vector<std::pair<std::string, ItemId>> parse_livestock(const std::string& text);
/// "you now have N item" from a craft or smelt message.
std::optional<int> parse_now_have(const std::string& text, const ItemId& item);
/// "It requires: a: 1, b: 2." from a failed craft.
std::vector<std::pair<ItemId, int>> parse_requirements(const std::string& text);
/// "Recipe for X:" blocks, item -> step lines without the "Step k: " prefix.
std::map<ItemId, std::vector<std::string>> parse_recipes(const std::string& text);
std::optional<BlockPos> parse_reached(const std::string& text);
std::optional<BlockPos> parse_stats_position(const std::string& text);

struct ParsedPlan {
  std::vector<std::pair<ItemId, int>> missing;
  struct Step {
    bool smelt = false;
    std::vector<std::pair<ItemId, int>> inputs;
    ItemId output;
    int count = 0;
  };
  std::vector<Step> steps;
};
ParsedPlan parse_plan(const std::string& text);

struct BlueprintFix {
  bool place = true;
  std::string material;
  BlockPos pos;
};
std::vector<BlueprintFix> parse_blueprint_fixes(const std::string& text);
/// getBlueprint output -> non-air cells.
std::map<BlockPos, std::string> parse_blueprint_cells(const std::string& text);

/// "Name: (FROM OTHER BOT)body" -> (Name, body).
std::optional<std::pair<AgentId, std::string>> split_chat(const std::string& content);

// ---------------------------------------------------------------------------
// Scripted agent

class OracleAgent;

/// One resumable routine on an oracle's stack.
class OracleProc {
 public:
  struct Step {
    enum class Kind { kEmit, kWait, kDone, kPush, kFail };
    Kind kind = Kind::kWait;
    std::string text;
    std::unique_ptr<OracleProc> child;
  };

  virtual ~OracleProc() = default;
  virtual Step step(OracleAgent& self) = 0;

  static Step emit(std::string text) { return {Step::Kind::kEmit, std::move(text), nullptr}; }
  static Step wait() { return {Step::Kind::kWait, {}, nullptr}; }
  static Step done() { return {Step::Kind::kDone, {}, nullptr}; }
  static Step fail(std::string why) { return {Step::Kind::kFail, std::move(why), nullptr}; }
  static Step push(std::unique_ptr<OracleProc> p) { return {Step::Kind::kPush, {}, std::move(p)}; }
};

/// Deterministic scripted player for cooking, crafting and construction tasks.
class OracleAgent : public AgentEndpoint {
 public:
  void begin(const AgentBrief& brief) override;
  void observe(const ChatMessage& message, Tick tick) override;
  std::string poll(Tick tick) override;

  const AgentBrief& brief() const { return brief_; }
  std::string role() const { return role_; }
  bool stuck() const { return stuck_; }
  const std::string& stuck_reason() const { return stuck_reason_; }

  // used by routines
  std::string result();  // output of the routine's previous command
  const std::map<ItemId, std::vector<std::string>>& recipes() const { return recipes_; }
  /// Chat bodies received from `from`, oldest first.
  const std::vector<std::string>& heard(const AgentId& from) const;
  bool heard_contains(const AgentId& from, const std::string& needle) const;
  std::vector<AgentId> teammates() const;
  std::optional<BlockPos> position;

 private:
  enum class Owner { kNone, kMain, kBackground };

  std::string run(std::vector<std::unique_ptr<OracleProc>>& stack, Owner owner);
  void on_chat(const AgentId& from, const std::string& body);

  AgentBrief brief_;
  std::string role_;
  std::vector<std::unique_ptr<OracleProc>> main_;
  std::vector<std::unique_ptr<OracleProc>> background_;
  std::deque<std::unique_ptr<OracleProc>> bg_queue_;
  Owner last_emitter_ = Owner::kNone;
  std::vector<std::string> pending_output_;
  std::optional<std::string> main_result_;
  std::optional<std::string> bg_result_;
  const std::optional<std::string>* reading_ = nullptr;
  std::map<ItemId, std::vector<std::string>> recipes_;
  std::map<ItemId, std::string> recipe_text_;
  std::map<AgentId, std::vector<std::string>> heard_;
  bool stuck_ = false;
  bool stop_sent_ = false;
  std::string stuck_reason_;
};

std::shared_ptr<AgentEndpoint> make_oracle();

}  // namespace minecollab
