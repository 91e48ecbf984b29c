// Scripted oracle players. They act only through commands and chat, like any other agent.

#include "minecollab/oracle.hpp"

#include <algorithm>
#include <regex>

#include "minecollab/command.hpp"
#include "minecollab/world.hpp"

namespace minecollab {

namespace {

using Step = OracleProc::Step;
using ProcPtr = std::unique_ptr<OracleProc>;

std::string cmd(const std::string& name, std::vector<ArgValue> args = {}) {
  return render_command(Command{name, std::move(args)});
}

ArgValue num(int n) { return static_cast<double>(n); }

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

bool is_station(const std::string& block) {
  return block == "crafting_table" || block == "furnace" || block == "smoker" || block == "chest";
}

// ---------------------------------------------------------------------------
// Generic routines

class Sequence : public OracleProc {
 public:
  Sequence() = default;
  explicit Sequence(std::vector<ProcPtr> procs) {
    for (auto& p : procs) queue_.push_back(std::move(p));
  }
  void add(ProcPtr p) { queue_.push_back(std::move(p)); }

  Step step(OracleAgent&) override {
    if (queue_.empty()) return done();
    ProcPtr next = std::move(queue_.front());
    queue_.pop_front();
    return push(std::move(next));
  }

 private:
  std::deque<ProcPtr> queue_;
};

/// Sends one chat message, opening a conversation when needed.
class Say : public OracleProc {
 public:
  Say(AgentId to, std::string text) : to_(std::move(to)), text_(std::move(text)) {}

  Step step(OracleAgent& self) override {
    switch (stage_) {
      case 0:
        stage_ = 1;
        return emit(cmd("startConversation", {to_, text_}));
      case 1:
        if (has(self.result(), "You are already in conversation with " + to_ + ".")) {
          stage_ = 2;
          return emit(text_);
        }
        return done();
      default: return done();
    }
  }

 private:
  AgentId to_;
  std::string text_;
  int stage_ = 0;
};

class WaitPolls : public OracleProc {
 public:
  explicit WaitPolls(int n) : left_(n) {}
  Step step(OracleAgent&) override { return left_-- > 0 ? wait() : done(); }

 private:
  int left_;
};

class GoToBlock : public OracleProc {
 public:
  explicit GoToBlock(std::string block) : block_(std::move(block)) {}
  Step step(OracleAgent&) override {
    if (sent_) return done();
    sent_ = true;
    return emit(cmd("searchForBlock", {block_, num(kSearchRadius)}));
  }

 private:
  std::string block_;
  bool sent_ = false;
};

/// Brings the held count of `item` up to `target` from blocks, livestock or the chest.
class Gather : public OracleProc {
 public:
  Gather(ItemId item, int target) : item_(std::move(item)), target_(target) {}

  Step step(OracleAgent& self) override {
    switch (stage_) {
      case 0:
        stage_ = 1;
        return emit("!inventory");
      case 1: {
        const int held = parse_item_list(self.result()).count(item_);
        if (held >= target_) return done();
        need_ = target_ - held;
        if (++actions_ > 4 * target_ + 12) return fail("could not gather " + item_);
        stage_ = 2;
        return emit("!nearbyBlocks");
      }
      case 2:
        for (const auto& [block, drop] : parse_nearby_blocks(self.result())) {
          if (drop == item_ && !is_station(block)) {
            stage_ = 0;
            return emit(cmd("collectBlocks", {block, num(need_)}));
          }
        }
        stage_ = 3;
        return emit("!entities");
      case 3:
        for (const auto& [kind, drop] : parse_livestock(self.result())) {
          if (drop == item_) {
            stage_ = 0;
            return emit(cmd("attack", {kind}));
          }
        }
        stage_ = 4;
        return emit("!viewChest");
      case 4:
        if (parse_item_list(self.result()).count(item_) > 0) {
          stage_ = 0;
          return emit(cmd("takeFromChest", {item_, num(need_)}));
        }
        if (++rounds_ > 3) return fail("no source of " + item_);
        // someone may still bring it; look again later
        stage_ = 0;
        return push(std::make_unique<WaitPolls>(50));
      default: return done();
    }
  }

 private:
  ItemId item_;
  int target_;
  int need_ = 0;
  int stage_ = 0;
  int actions_ = 0;
  int rounds_ = 0;
};

/// Crafts `times` batches of a recipe from a cooking recipe line.
class Craft : public OracleProc {
 public:
  Craft(ItemId output, int times) : output_(std::move(output)), times_(times) {}

  Step step(OracleAgent& self) override {
    if (stage_ == 1) {
      const std::string r = self.result();
      if (has(r, "Successfully crafted")) return done();
      if (has(r, "no crafting_table nearby") && tries_ < 3) {
        stage_ = 0;
        return push(std::make_unique<GoToBlock>("crafting_table"));
      }
      return fail("craft failed: " + r);
    }
    ++tries_;
    stage_ = 1;
    return emit(cmd("craftRecipe", {output_, num(times_)}));
  }

 private:
  ItemId output_;
  int times_;
  int stage_ = 0;
  int tries_ = 0;
};

class Smelt : public OracleProc {
 public:
  Smelt(ItemId input, int times) : input_(std::move(input)), times_(times) {}

  Step step(OracleAgent& self) override {
    switch (stage_) {
      case 0:
        stage_ = 1;
        return push(std::make_unique<GoToBlock>("furnace"));
      case 1:
        stage_ = 2;
        ++tries_;
        return emit(cmd("smeltItem", {input_, num(times_)}));
      default: {
        const std::string r = self.result();
        if (has(r, "Successfully smelted")) return done();
        if (tries_ < 3 && has(r, "no furnace nearby")) {
          stage_ = 0;
          return wait();
        }
        return fail("smelt failed: " + r);
      }
    }
  }

 private:
  ItemId input_;
  int times_;
  int stage_ = 0;
  int tries_ = 0;
};

/// Makes sure `target` of an item is held, learning recipes from failed crafts.
class Obtain : public OracleProc {
 public:
  Obtain(ItemId item, int target, int depth = 0) : item_(std::move(item)), target_(target), depth_(depth) {}

  Step step(OracleAgent& self) override {
    switch (stage_) {
      case 0:
        stage_ = 1;
        return emit("!inventory");
      case 1:
        if (parse_item_list(self.result()).count(item_) >= target_) return done();
        if (++tries_ > 16 || depth_ > 8) return fail("could not obtain " + item_);
        stage_ = 2;
        return emit(cmd("craftRecipe", {item_, num(1)}));
      case 2: {
        const std::string r = self.result();
        stage_ = 0;
        if (has(r, "Successfully crafted")) {
          if (auto n = parse_now_have(r, item_); n && *n >= target_) return done();
          return wait();
        }
        if (has(r, "Could not find a recipe for")) {
          stage_ = 3;
          return push(std::make_unique<Gather>(item_, target_));
        }
        if (has(r, "no crafting_table nearby")) return push(std::make_unique<GoToBlock>("crafting_table"));
        if (has(r, "do not have the resources")) {
          auto seq = std::make_unique<Sequence>();
          for (const auto& [input, k] : parse_requirements(r)) {
            seq->add(std::make_unique<Obtain>(input, k, depth_ + 1));
          }
          return push(std::move(seq));
        }
        return fail("cannot make " + item_ + ": " + r);
      }
      default: return done();
    }
  }

 private:
  ItemId item_;
  int target_;
  int depth_;
  int stage_ = 0;
  int tries_ = 0;
};

/// One step of a crafting plan: craft until `count` more of the output exist.
class PlanStep : public OracleProc {
 public:
  explicit PlanStep(ParsedPlan::Step s) : s_(std::move(s)) {}

  Step step(OracleAgent& self) override {
    switch (stage_) {
      case 0:
        stage_ = 1;
        return emit("!inventory");
      case 1:
        goal_ = parse_item_list(self.result()).count(s_.output) + s_.count;
        if (s_.smelt) {
          stage_ = 3;
          auto seq = std::make_unique<Sequence>();
          seq->add(std::make_unique<Smelt>(s_.inputs.front().first, s_.inputs.front().second));
          return push(std::move(seq));
        }
        stage_ = 2;
        return emit(cmd("craftRecipe", {s_.output, num(1)}));
      case 2: {
        const std::string r = self.result();
        auto n = parse_now_have(r, s_.output);
        if (n && *n >= goal_) return done();
        if (n && ++crafts_ < 64) return emit(cmd("craftRecipe", {s_.output, num(1)}));
        stage_ = 3;
        return push(std::make_unique<Obtain>(s_.output, goal_));
      }
      default: return done();
    }
  }

 private:
  ParsedPlan::Step s_;
  int stage_ = 0;
  int goal_ = 0;
  int crafts_ = 0;
};

/// Asks for the crafting plan, gathers what it lists as missing and runs its steps.
class PlanCraft : public OracleProc {
 public:
  PlanCraft(ItemId target, int count) : target_(std::move(target)), count_(count) {}

  Step step(OracleAgent& self) override {
    switch (stage_) {
      case 0:
        stage_ = 1;
        return emit("!inventory");
      case 1:
        held_ = parse_item_list(self.result());
        stage_ = 2;
        return emit(cmd("getCraftingPlan", {target_, num(count_)}));
      case 2: {
        const std::string r = self.result();
        stage_ = 3;
        if (has(r, "do not have access") || !has(r, "crafting plan")) {
          return push(std::make_unique<Obtain>(target_, count_));
        }
        const ParsedPlan plan = parse_plan(r);
        auto seq = std::make_unique<Sequence>();
        for (const auto& [item, n] : plan.missing) seq->add(std::make_unique<Gather>(item, held_.count(item) + n));
        if (!plan.steps.empty()) seq->add(std::make_unique<GoToBlock>("crafting_table"));
        for (const auto& s : plan.steps) seq->add(std::make_unique<PlanStep>(s));
        seq->add(std::make_unique<Obtain>(target_, count_));
        return push(std::move(seq));
      }
      default: return done();
    }
  }

 private:
  ItemId target_;
  int count_;
  Inventory held_;
  int stage_ = 0;
};

// ---------------------------------------------------------------------------
// Cooking

ProcPtr recipe_routine(const std::vector<std::string>& lines) {
  static const std::regex collect(R"(^Go to the (farm|chest) and collect (.*)\.$)");
  static const std::regex kill(R"(^Kill (\d+) (\w+) and pick up (\d+) (\w+)\.$)");
  static const std::regex smelt(R"(^Go to the furnace and smelt (\d+) (\w+) into (\w+)\.$)");
  static const std::regex table(R"(^Go to the crafting table and craft (\d+) (\w+)\.$)");
  static const std::regex plain(R"(^Craft (\d+) (\w+)\.$)");
  static const std::regex count_item(R"((\d+) (\w+))");
  auto seq = std::make_unique<Sequence>();
  for (const auto& line : lines) {
    std::smatch m;
    if (std::regex_match(line, m, collect)) {
      const std::string list = m[2].str();
      for (auto it = std::sregex_iterator(list.begin(), list.end(), count_item); it != std::sregex_iterator(); ++it) {
        seq->add(std::make_unique<Gather>((*it)[2].str(), std::stoi((*it)[1].str())));
      }
    } else if (std::regex_match(line, m, kill)) {
      seq->add(std::make_unique<Gather>(m[4].str(), std::stoi(m[3].str())));
    } else if (std::regex_match(line, m, smelt)) {
      seq->add(std::make_unique<Smelt>(m[2].str(), std::stoi(m[1].str())));
    } else if (std::regex_match(line, m, table)) {
      seq->add(std::make_unique<GoToBlock>("crafting_table"));
      seq->add(std::make_unique<Craft>(m[2].str(), std::stoi(m[1].str())));
    } else if (std::regex_match(line, m, plain)) {
      seq->add(std::make_unique<Craft>(m[2].str(), std::stoi(m[1].str())));
    }
  }
  return seq;
}

std::string recipe_request(const ItemId& item) { return "Can you send me the recipe for " + item + "?"; }
std::string recipe_denial(const ItemId& item) { return "I do not have the recipe for " + item + "."; }

/// Asks teammates in turn until someone shares the recipe.
class RequestRecipe : public OracleProc {
 public:
  explicit RequestRecipe(ItemId item) : item_(std::move(item)) {}

  Step step(OracleAgent& self) override {
    if (self.recipes().count(item_)) return done();
    const auto mates = self.teammates();
    if (mates.empty()) return fail("nobody to ask for the recipe of " + item_);
    if (!asked_) {
      if (idx_ >= mates.size()) {
        idx_ = 0;
        if (++rounds_ > 3) return fail("no teammate shared the recipe of " + item_);
      }
      asked_ = true;
      waited_ = 0;
      seen_ = self.heard(mates[idx_]).size();
      return push(std::make_unique<Say>(mates[idx_], recipe_request(item_)));
    }
    const auto& heard = self.heard(mates[idx_]);
    for (std::size_t i = seen_; i < heard.size(); ++i) {
      if (has(heard[i], recipe_denial(item_))) {
        asked_ = false;
        ++idx_;
        return wait();
      }
    }
    if (++waited_ > 400) {
      asked_ = false;
      ++idx_;
    }
    return wait();
  }

 private:
  ItemId item_;
  std::size_t idx_ = 0;
  std::size_t seen_ = 0;
  bool asked_ = false;
  int waited_ = 0;
  int rounds_ = 0;
};

class MakeFood : public OracleProc {
 public:
  explicit MakeFood(ItemId item) : item_(std::move(item)) {}

  Step step(OracleAgent& self) override {
    if (stage_ == 2) return done();
    auto it = self.recipes().find(item_);
    if (it == self.recipes().end()) {
      if (stage_ == 1) return fail("recipe for " + item_ + " never arrived");
      stage_ = 1;
      return push(std::make_unique<RequestRecipe>(item_));
    }
    stage_ = 2;
    return push(recipe_routine(it->second));
  }

 private:
  ItemId item_;
  int stage_ = 0;
};

const char* kReady = "I am ready to receive the food.";

class DeliverFood : public OracleProc {
 public:
  DeliverFood(AgentId receiver, std::vector<ItemId> items) : receiver_(std::move(receiver)), items_(std::move(items)) {}

  Step step(OracleAgent& self) override {
    if (stage_ == 0) {
      if (!self.heard_contains(receiver_, kReady)) return wait();
      stage_ = 1;
    }
    if (stage_ == 2) {
      const std::string r = self.result();
      if (!has(r, receiver_ + " received")) return fail("hand-over failed: " + r);
      ++next_;
      stage_ = 1;
    }
    if (next_ < items_.size()) {
      stage_ = 2;
      return emit(cmd("givePlayer", {receiver_, items_[next_], num(1)}));
    }
    if (stage_ == 1) {
      stage_ = 3;
      return push(std::make_unique<Say>(receiver_, "I gave you all my food."));
    }
    return done();
  }

 private:
  AgentId receiver_;
  std::vector<ItemId> items_;
  std::size_t next_ = 0;
  int stage_ = 0;
};

// ---------------------------------------------------------------------------
// Crafting

const char* kGiveRequest = "Please give me everything in your inventory.";
const char* kGaveAll = "I have given you everything.";

class GiveAll : public OracleProc {
 public:
  explicit GiveAll(AgentId to) : to_(std::move(to)) {}

  Step step(OracleAgent& self) override {
    switch (stage_) {
      case 0:
        stage_ = 1;
        return emit("!inventory");
      case 1:
        for (const auto& [item, n] : parse_item_list(self.result())) items_.emplace_back(item, n);
        stage_ = 2;
        [[fallthrough]];
      case 2:
        if (next_ < items_.size()) {
          const auto& [item, n] = items_[next_++];
          return emit(cmd("givePlayer", {to_, item, num(n)}));
        }
        stage_ = 3;
        return push(std::make_unique<Say>(to_, kGaveAll));
      default: return done();
    }
  }

 private:
  AgentId to_;
  std::vector<std::pair<ItemId, int>> items_;
  std::size_t next_ = 0;
  int stage_ = 0;
};

class AnswerGiveRequest : public OracleProc {
 public:
  Step step(OracleAgent& self) override {
    if (started_) return done();
    for (const auto& mate : self.teammates()) {
      if (self.heard_contains(mate, kGiveRequest)) {
        started_ = true;
        return push(std::make_unique<GiveAll>(mate));
      }
    }
    return wait();
  }

 private:
  bool started_ = false;
};

class CollectFromTeam : public OracleProc {
 public:
  Step step(OracleAgent& self) override {
    const auto mates = self.teammates();
    bool all = true;
    for (const auto& m : mates) all = all && self.heard_contains(m, kGaveAll);
    if (all) return done();
    if (waited_++ % 600 == 0) {
      auto seq = std::make_unique<Sequence>();
      for (const auto& m : mates) {
        if (!self.heard_contains(m, kGaveAll)) seq->add(std::make_unique<Say>(m, kGiveRequest));
      }
      return push(std::move(seq));
    }
    if (waited_ > 3000) return fail("teammates never handed over their items");
    return wait();
  }

 private:
  int waited_ = 0;
};

// ---------------------------------------------------------------------------
// Construction

class Build : public OracleProc {
 public:
  Step step(OracleAgent& self) override {
    switch (stage_) {
      case 0:
        stage_ = 1;
        return emit("!stats");
      case 1:
        if (auto p = parse_stats_position(self.result())) self.position = p;
        stage_ = 2;
        return emit("!getBlueprint");
      case 2:
        cells_ = parse_blueprint_cells(self.result());
        stage_ = 3;
        [[fallthrough]];
      case 3:
        stage_ = 4;
        return emit("!checkBlueprint");
      case 4: {
        pending_.clear();
        for (const auto& f : parse_blueprint_fixes(self.result())) {
          if (f.place) pending_[f.pos] = f.material;
        }
        if (pending_.empty()) return done();
        stage_ = 5;
        return emit("!inventory");
      }
      case 5:
        held_ = parse_item_list(self.result());
        skipped_.clear();
        stage_ = 6;
        [[fallthrough]];
      case 6: return choose(self);
      case 7: {
        const auto reached = parse_reached(self.result());
        if (reached) self.position = reached;
        if (reached && *reached == target_) {
          stage_ = 8;
          return emit(cmd("placeHere", {pending_.at(target_)}));
        }
        skipped_.insert(target_);
        stage_ = 6;
        return choose(self);
      }
      case 8: {
        if (has(self.result(), "Placed ")) {
          held_.remove(pending_.at(target_), 1);
          pending_.erase(target_);
          misses_ = 0;
        } else {
          skipped_.insert(target_);
        }
        stage_ = 6;
        return choose(self);
      }
      default: return done();
    }
  }

 private:
  bool solid_at(const BlockPos& p) const {
    if (p.y < kGroundY) return true;
    auto it = cells_.find(p);
    if (it == cells_.end() || pending_.count(p)) return false;
    return !is_passable_material(it->second);
  }

  bool likely_standable(const BlockPos& p) const {
    if (solid_at(p.offset(0, -1, 0))) return true;
    return solid_at(p.offset(1, 0, 0)) || solid_at(p.offset(-1, 0, 0)) || solid_at(p.offset(0, 0, 1)) ||
           solid_at(p.offset(0, 0, -1));
  }

  Step choose(OracleAgent& self) {
    std::optional<BlockPos> best;
    std::tuple<int, int, double> best_key{};
    std::set<std::string> lacking;
    for (const auto& [pos, material] : pending_) {
      if (held_.count(material) < 1) {
        lacking.insert(material);
        continue;
      }
      if (skipped_.count(pos)) continue;
      const double d = self.position ? self.position->distance_to(pos) : 0.0;
      const std::tuple<int, int, double> key{likely_standable(pos) ? 0 : 1, pos.y, d};
      if (!best || key < best_key) {
        best = pos;
        best_key = key;
      }
    }
    if (best) {
      target_ = *best;
      stage_ = 7;
      return emit(cmd("goToCoordinates", {num(target_.x), num(target_.y), num(target_.z), num(0)}));
    }
    if (++misses_ > 200) return fail("blueprint cannot be finished");
    stage_ = 3;
    if (!lacking.empty() && !asked_ && !self.teammates().empty()) {
      asked_ = true;
      std::string list;
      for (const auto& m : lacking) list += (list.empty() ? "" : ", ") + m;
      auto seq = std::make_unique<Sequence>();
      seq->add(std::make_unique<Say>(self.teammates().front(), "I cannot place " + list + ". Can you place those?"));
      seq->add(std::make_unique<WaitPolls>(20));
      return push(std::move(seq));
    }
    return push(std::make_unique<WaitPolls>(20));
  }

  std::map<BlockPos, std::string> cells_;
  std::map<BlockPos, std::string> pending_;
  std::set<BlockPos> skipped_;
  Inventory held_;
  BlockPos target_;
  int stage_ = 0;
  int misses_ = 0;
  bool asked_ = false;
};

std::vector<ItemId> split_items(const std::string& list) {
  std::vector<ItemId> out;
  static const std::regex word(R"([A-Za-z0-9_]+)");
  for (auto it = std::sregex_iterator(list.begin(), list.end(), word); it != std::sregex_iterator(); ++it) {
    out.push_back(it->str());
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// OracleAgent

void OracleAgent::begin(const AgentBrief& brief) {
  brief_ = brief;
  main_.clear();
  background_.clear();
  bg_queue_.clear();
  for (const auto& [item, steps] : parse_recipes(brief.goal)) recipes_[item] = steps;
  static const std::regex recipe_block(R"(Recipe for [A-Za-z0-9_]+:\n(?:Step \d+: [^\n]*\n?)+)");
  for (auto it = std::sregex_iterator(brief.goal.begin(), brief.goal.end(), recipe_block);
       it != std::sregex_iterator(); ++it) {
    const std::string block = it->str();
    for (const auto& [item, steps] : parse_recipes(block)) recipe_text_[item] = block;
  }

  auto seq = std::make_unique<Sequence>();
  const auto& agents = brief.agents;
  const auto me = std::find(agents.begin(), agents.end(), brief.name) - agents.begin();
  const bool first = me == 0;

  if (brief.task_type == "cooking") {
    std::vector<ItemId> mine;
    std::smatch m;
    static const std::regex must(R"(You must make: ([^.]*)\.)");
    static const std::regex receiver_re(R"(whose name starts with ([A-Za-z0-9_]+))");
    if (std::regex_search(brief.goal, m, must)) {
      mine = split_items(m[1].str());
    } else if (!std::regex_search(brief.goal, receiver_re)) {
      mine.clear();
    } else {
      for (std::size_t i = 0; i < brief.targets.size(); ++i) {
        if (static_cast<long>(i % agents.size()) == me) mine.push_back(brief.targets[i].first);
      }
    }
    for (const auto& item : mine) seq->add(std::make_unique<MakeFood>(item));
    if (std::regex_search(brief.goal, m, receiver_re)) {
      const AgentId receiver = m[1].str();
      if (receiver == brief.name) {
        role_ = "leader";
        for (const auto& mate : teammates()) seq->add(std::make_unique<Say>(mate, kReady));
      } else {
        role_ = "follower";
        if (!mine.empty()) seq->add(std::make_unique<DeliverFood>(receiver, mine));
      }
    } else {
      role_ = mine.empty() ? "follower" : "leader";
    }
  } else if (brief.task_type == "crafting" || brief.task_type == "techtree") {
    if (first) {
      role_ = "leader";
      seq->add(std::make_unique<CollectFromTeam>());
      for (const auto& [item, n] : brief.targets) seq->add(std::make_unique<PlanCraft>(item, n));
    } else {
      role_ = "follower";
      seq->add(std::make_unique<AnswerGiveRequest>());
    }
  } else if (brief.task_type == "construction") {
    role_ = first ? "leader" : "follower";
    seq->add(std::make_unique<Build>());
  }
  main_.push_back(std::move(seq));
}

void OracleAgent::observe(const ChatMessage& message, Tick) {
  if (message.role == "user") {
    if (auto chat = split_chat(message.content)) on_chat(chat->first, chat->second);
    return;
  }
  if (message.role != "system") return;
  const std::string& c = message.content;
  if (c.rfind("Conversation with ", 0) == 0 && (has(c, " ended.") || has(c, " ended with message"))) return;
  if (auto p = parse_reached(c)) position = p;
  pending_output_.push_back(c);
}

void OracleAgent::on_chat(const AgentId& from, const std::string& body) {
  heard_[from].push_back(body);
  for (const auto& [item, steps] : parse_recipes(body)) {
    if (!steps.empty()) {
      recipes_[item] = steps;
      if (!recipe_text_.count(item)) recipe_text_[item] = body;
    }
  }
  static const std::regex ask(R"(recipe for ([A-Za-z0-9_]+)\?)");
  std::smatch m;
  if (std::regex_search(body, m, ask)) {
    const ItemId item = m[1].str();
    auto it = recipe_text_.find(item);
    const std::string reply = it != recipe_text_.end() ? it->second : recipe_denial(item);
    bg_queue_.push_back(std::make_unique<Say>(from, reply));
  }
}

std::string OracleAgent::result() { return reading_ && *reading_ ? **reading_ : std::string(); }

const std::vector<std::string>& OracleAgent::heard(const AgentId& from) const {
  static const std::vector<std::string> none;
  auto it = heard_.find(from);
  return it == heard_.end() ? none : it->second;
}

bool OracleAgent::heard_contains(const AgentId& from, const std::string& needle) const {
  for (const auto& h : heard(from)) {
    if (has(h, needle)) return true;
  }
  return false;
}

std::vector<AgentId> OracleAgent::teammates() const {
  std::vector<AgentId> out;
  for (const auto& a : brief_.agents) {
    if (a != brief_.name) out.push_back(a);
  }
  return out;
}

std::string OracleAgent::run(std::vector<std::unique_ptr<OracleProc>>& stack, Owner owner) {
  auto& slot = owner == Owner::kMain ? main_result_ : bg_result_;
  for (int guard = 0; guard < 512 && !stack.empty(); ++guard) {
    reading_ = &slot;
    Step s = stack.back()->step(*this);
    reading_ = nullptr;
    switch (s.kind) {
      case Step::Kind::kEmit:
        slot.reset();
        last_emitter_ = owner;
        return s.text;
      case Step::Kind::kWait: return {};
      case Step::Kind::kDone: stack.pop_back(); break;
      case Step::Kind::kPush: stack.push_back(std::move(s.child)); break;
      case Step::Kind::kFail:
        stack.clear();
        if (owner == Owner::kMain) {
          stuck_ = true;
          stuck_reason_ = s.text;
          if (!stop_sent_) {
            stop_sent_ = true;
            last_emitter_ = owner;
            return "!stop";
          }
        }
        return {};
    }
  }
  return {};
}

std::string OracleAgent::poll(Tick) {
  if (last_emitter_ != Owner::kNone) {
    std::string joined;
    for (const auto& o : pending_output_) joined += (joined.empty() ? "" : "\n") + o;
    (last_emitter_ == Owner::kMain ? main_result_ : bg_result_) = joined;
  }
  pending_output_.clear();
  last_emitter_ = Owner::kNone;

  if (background_.empty() && !bg_queue_.empty()) {
    background_.push_back(std::move(bg_queue_.front()));
    bg_queue_.pop_front();
  }
  if (!background_.empty()) {
    std::string text = run(background_, Owner::kBackground);
    if (!text.empty()) return text;
  }
  if (stuck_) return {};
  return run(main_, Owner::kMain);
}

std::shared_ptr<AgentEndpoint> make_oracle() { return std::make_shared<OracleAgent>(); }

}  // namespace minecollab
