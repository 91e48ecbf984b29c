#include "minecollab/task.hpp"

#include <algorithm>
#include <fstream>
#include <functional>

namespace minecollab {

namespace {

/// Intermediates the farm chest stocks directly, so cooking plans stop expanding at them.
const std::set<ItemId>& farm_chest_stock() {
  static const std::set<ItemId> stock = {"bowl", "gold_ingot"};
  return stock;
}

struct Expansion {
  std::vector<std::pair<ItemId, int>> leaves;  // discovery order
  std::vector<PlanStep> steps;                 // bottom-up
};

Expansion expand(const RecipeBook& book, const ItemId& item, int quantity,
                 const std::function<bool(const ItemId&)>& leaf) {
  Expansion out;
  Inventory spare;
  std::function<void(const ItemId&, int)> go = [&](const ItemId& it, int qty) {
    const int take = std::min(spare.count(it), qty);
    spare.remove(it, take);
    const int need = qty - take;
    if (need == 0) return;
    const Recipe* r = book.find(it);
    if (!r || leaf(it)) {
      auto found = std::find_if(out.leaves.begin(), out.leaves.end(), [&](const auto& l) { return l.first == it; });
      if (found == out.leaves.end()) {
        out.leaves.emplace_back(it, need);
      } else {
        found->second += need;
      }
      return;
    }
    const int batches = (need + r->count - 1) / r->count;
    PlanStep step;
    step.kind = r->kind;
    step.output = it;
    step.batches = batches;
    step.output_count = batches * r->count;
    for (const auto& [in, n] : r->inputs) {
      go(in, n * batches);
      step.inputs.emplace_back(in, n * batches);
    }
    out.steps.push_back(std::move(step));
    spare.add(it, batches * r->count - need);
  };
  go(item, quantity);
  return out;
}

bool cooking_leaf(const ItemId& item) { return farm_chest_stock().count(item) > 0; }

/// Smelted goods are handed out ready-made in crafting tasks; the forest has no furnace.
bool crafting_leaf(const RecipeBook& book, const ItemId& item) {
  const Recipe* r = book.find(item);
  return r && r->kind == RecipeKind::kSmelt;
}

std::string join_counts(const std::vector<std::pair<ItemId, int>>& items) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(items[i].second) + " " + items[i].first;
  }
  return s;
}

std::string item_list(const std::vector<std::pair<ItemId, int>>& targets) { return join_counts(targets); }

std::string teammates_sentence(const std::vector<AgentId>& names, const AgentId& self) {
  std::string others;
  for (const auto& n : names) {
    if (n == self) continue;
    if (!others.empty()) others += ", ";
    others += n;
  }
  return "You have to collaborate with other agents/bots, namely " + others +
         " to complete the task as soon as possible by dividing the work among yourselves.";
}

nlohmann::json inventory_json(const Inventory& inv) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [item, n] : inv) j[item] = n;
  return j;
}

Inventory inventory_from_json(const nlohmann::json& j) {
  Inventory inv;
  for (const auto& [item, n] : j.items()) inv.add(item, n.get<int>());
  return inv;
}

}  // namespace

std::string to_string(PlanBlocked p) {
  switch (p) {
    case PlanBlocked::kNone: return "none";
    case PlanBlocked::kOne: return "one";
    case PlanBlocked::kBoth: return "both";
  }
  return "none";
}

PlanBlocked parse_plan_blocked(const std::string& s) {
  if (s == "none") return PlanBlocked::kNone;
  if (s == "one") return PlanBlocked::kOne;
  if (s == "both") return PlanBlocked::kBoth;
  throw Error(ErrorCode::kInvalidArgument, "plan_blocked must be none, one or both: " + s);
}

const std::string& TaskSpec::goal_for(const AgentId& agent) const {
  auto it = agent_goals.find(agent);
  return it == agent_goals.end() ? goal : it->second;
}

bool TaskSpec::can_plan(const AgentId& agent) const {
  auto it = plan_access.find(agent);
  return it == plan_access.end() || it->second;
}

nlohmann::json TaskSpec::to_json() const {
  nlohmann::json j;
  j["task_name"] = task_name;
  j["task_type"] = task_type;
  j["goal"] = goal;
  if (!agent_goals.empty()) j["agent_goals"] = agent_goals;
  j["agent_names"] = agent_names;
  j["agent_count"] = agent_count();
  nlohmann::json inv = nlohmann::json::object();
  for (const auto& name : agent_names) {
    auto it = initial_inventories.find(name);
    inv[name] = inventory_json(it == initial_inventories.end() ? Inventory{} : it->second);
  }
  j["initial_inventory"] = inv;
  nlohmann::json targets = nlohmann::json::array();
  for (const auto& [item, n] : target_items) targets.push_back({item, n});
  j["target_items"] = targets;
  j["plan_access"] = plan_access;
  j["hells_kitchen"] = hells_kitchen;
  if (!assignments.empty()) j["assignments"] = assignments;
  if (!capabilities.empty()) j["capabilities"] = capabilities;
  if (blueprint) j["blueprint"] = blueprint->to_json();
  j["timeout"] = timeout_seconds;
  j["world"] = {{"kind", world.kind}, {"resources", inventory_json(world.resources)}};
  if (world.half_extent) j["world"]["half_extent"] = world.half_extent;
  j["seed"] = seed;
  j["cheats"] = cheats;
  j["plan_blocked"] = to_string(plan_blocked);
  j["blocked_agents"] = blocked_agents;
  return j;
}

TaskSpec TaskSpec::from_json(const nlohmann::json& j) {
  TaskSpec t;
  t.task_name = j.at("task_name").get<std::string>();
  t.task_type = j.at("task_type").get<std::string>();
  t.goal = j.value("goal", "");
  if (j.contains("agent_goals")) t.agent_goals = j["agent_goals"].get<std::map<AgentId, std::string>>();
  t.agent_names = j.at("agent_names").get<std::vector<AgentId>>();
  if (j.contains("agent_count") && j["agent_count"].get<int>() != t.agent_count()) {
    throw Error(ErrorCode::kInvalidSpec, "agent_count does not match agent_names");
  }
  if (t.agent_names.empty()) throw Error(ErrorCode::kInvalidSpec, "task has no agents");
  if (j.contains("initial_inventory")) {
    for (const auto& [name, inv] : j["initial_inventory"].items()) t.initial_inventories[name] = inventory_from_json(inv);
  }
  if (j.contains("target_items")) {
    for (const auto& e : j["target_items"]) t.target_items.emplace_back(e.at(0).get<std::string>(), e.at(1).get<int>());
  } else if (j.contains("target")) {
    t.target_items.emplace_back(j["target"].get<std::string>(), j.value("number_of_target", 1));
  }
  if (j.contains("plan_access")) t.plan_access = j["plan_access"].get<std::map<AgentId, bool>>();
  t.hells_kitchen = j.value("hells_kitchen", false);
  if (j.contains("assignments")) t.assignments = j["assignments"].get<std::map<AgentId, std::vector<int>>>();
  if (j.contains("capabilities")) {
    t.capabilities = j["capabilities"].get<std::map<AgentId, std::set<std::string>>>();
  }
  if (j.contains("blueprint")) t.blueprint = Blueprint::from_json(j["blueprint"]);
  t.timeout_seconds = j.value("timeout", 300);
  if (t.timeout_seconds <= 0) throw Error(ErrorCode::kInvalidSpec, "timeout must be positive");
  if (j.contains("world")) {
    t.world.kind = j["world"].value("kind", "construction-superflat");
    if (j["world"].contains("resources")) t.world.resources = inventory_from_json(j["world"]["resources"]);
    t.world.half_extent = j["world"].value("half_extent", 0);
  }
  t.seed = j.value("seed", std::uint64_t{0});
  t.cheats = j.value("cheats", false);
  t.plan_blocked = parse_plan_blocked(j.value("plan_blocked", "none"));
  t.blocked_agents = j.value("blocked_agents", 0);
  if (t.task_type == "construction" && !t.blueprint) throw Error(ErrorCode::kInvalidSpec, "construction task without blueprint");
  return t;
}

TaskSpec TaskSpec::load(const std::filesystem::path& where) {
  const auto path = std::filesystem::is_directory(where) ? where / "task.json" : where;
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open task file " + path.string());
  try {
    return from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
  }
}

void TaskSpec::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write task file " + path.string());
  out << to_json().dump(2) << "\n";
}

std::vector<AgentId> default_agent_names(int count) {
  static const std::vector<AgentId> names = {"Andy_0", "Bob_0", "Sally_0", "Jack_0", "Emma_0"};
  if (count < 1 || count > static_cast<int>(names.size())) {
    throw Error(ErrorCode::kInvalidArgument, "agent count must be within 1-5");
  }
  return {names.begin(), names.begin() + count};
}

// ---------------------------------------------------------------------------
// Cooking

const std::vector<ItemId>& cooking_train_items() {
  static const std::vector<ItemId> items = {"cooked_beef",  "cooked_porkchop", "cooked_chicken", "cooked_rabbit",
                                            "beetroot_soup", "rabbit_stew",    "suspicious_stew", "cookie",
                                            "pumpkin_pie",  "golden_apple"};
  return items;
}

const std::vector<ItemId>& cooking_test_items() {
  static const std::vector<ItemId> items = {"cooked_mutton", "baked_potato",  "cake",
                                            "golden_carrot", "mushroom_stew", "bread"};
  return items;
}

Inventory cooking_requirement(const RecipeBook& book, const ItemId& item, int quantity) {
  Inventory inv;
  for (const auto& [leaf, n] : expand(book, item, quantity, cooking_leaf).leaves) inv.add(leaf, n);
  return inv;
}

std::string cooking_recipe_text(const RecipeBook& book, const ItemId& item) {
  const Expansion ex = expand(book, item, 1, cooking_leaf);
  std::vector<std::pair<ItemId, int>> farm;
  std::vector<std::pair<ItemId, int>> chest;
  std::vector<std::string> lines;
  for (const auto& [leaf, n] : ex.leaves) {
    const ItemSource src = source_of(leaf);
    if (src.kind == SourceKind::kBlock) farm.emplace_back(leaf, n);
    if (src.kind == SourceKind::kChest) chest.emplace_back(leaf, n);
  }
  if (!farm.empty()) lines.push_back("Go to the farm and collect " + join_counts(farm) + ".");
  if (!chest.empty()) lines.push_back("Go to the chest and collect " + join_counts(chest) + ".");
  for (const auto& [leaf, n] : ex.leaves) {
    const ItemSource src = source_of(leaf);
    if (src.kind != SourceKind::kLivestock) continue;
    lines.push_back("Kill " + std::to_string(n) + " " + src.origin + " and pick up " + std::to_string(n) + " " +
                    leaf + ".");
  }
  for (const auto& step : ex.steps) {
    const Recipe* r = book.find(step.output);
    if (step.kind == RecipeKind::kSmelt) {
      lines.push_back("Go to the furnace and smelt " + std::to_string(step.batches) + " " + step.inputs[0].first +
                      " into " + step.output + ".");
    } else if (r && r->station == RecipeStation::kCraftingTable) {
      lines.push_back("Go to the crafting table and craft " + std::to_string(step.batches) + " " + step.output + ".");
    } else {
      lines.push_back("Craft " + std::to_string(step.batches) + " " + step.output + ".");
    }
  }
  std::string text = "Recipe for " + item + ":\n";
  for (std::size_t i = 0; i < lines.size(); ++i) text += "Step " + std::to_string(i + 1) + ": " + lines[i] + "\n";
  return text;
}

TaskSpec generate_cooking_task(const RecipeBook& book, const CookingOptions& opts, std::uint64_t seed) {
  if (opts.agent_count < 2 || opts.agent_count > 5) throw Error(ErrorCode::kInvalidArgument, "agent count must be 2-5");
  if (opts.blocked_agents < 0 || opts.blocked_agents > 2 || opts.blocked_agents >= opts.agent_count) {
    throw Error(ErrorCode::kInvalidArgument, "blocked_agents must be within 0-2");
  }
  Rng rng(mix_seed(seed, fnv1a("cooking")));
  std::vector<ItemId> items = opts.items;
  if (items.empty()) {
    if (opts.item_count < 1 || opts.item_count > 4) throw Error(ErrorCode::kInvalidArgument, "item count must be 1-4");
    std::vector<ItemId> pool = opts.split == "test" ? cooking_test_items() : cooking_train_items();
    if (static_cast<int>(pool.size()) < opts.item_count) {
      throw Error(ErrorCode::kInsufficientPool, "not enough cooking items in the " + opts.split + " split");
    }
    rng.shuffle(pool);
    items.assign(pool.begin(), pool.begin() + opts.item_count);
  }
  for (const auto& it : items) {
    if (!book.find(it)) throw Error(ErrorCode::kUnknownTarget, "Unknown item: " + it);
  }

  TaskSpec t;
  t.task_type = "cooking";
  t.agent_names = default_agent_names(opts.agent_count);
  for (const auto& it : items) t.target_items.emplace_back(it, 1);
  t.hells_kitchen = opts.hells_kitchen;
  t.blocked_agents = opts.blocked_agents;
  t.seed = seed;
  t.timeout_seconds = 300 + 120 * static_cast<int>(items.size());
  t.world.kind = "cooking-farm";
  for (const auto& [item, n] : t.target_items) {
    for (const auto& [leaf, k] : cooking_requirement(book, item, n)) t.world.resources.add(leaf, k);
  }
  for (const auto& [leaf, k] : Inventory(t.world.resources)) t.world.resources.add(leaf, 1);  // one spare each

  t.task_name = std::string(opts.hells_kitchen ? "multiagent_cooking_hells_kitchen_" : "multiagent_cooking_") +
                std::to_string(opts.agent_count) + "_agents";
  for (const auto& it : items) t.task_name += "_" + it;
  if (opts.blocked_agents) t.task_name += "_blocked_" + std::to_string(opts.blocked_agents);

  const std::string header = "Collaborate with agents around you to make " + item_list(t.target_items) + ".";
  const std::string receiver = t.agent_names.front();
  if (!opts.hells_kitchen) {
    std::string recipes;
    for (const auto& it : items) recipes += "\n" + cooking_recipe_text(book, it);
    const std::string tail = "In the end, all the food items should be given to one single bot whose name starts with " +
                             receiver + ". ";
    t.goal = header + " \n\n" + tail;
    const int n = opts.agent_count;
    for (int i = 0; i < n; ++i) {
      const AgentId& a = t.agent_names[static_cast<std::size_t>(i)];
      t.plan_access[a] = true;
      // the last agents lose the recipe text; the receiver keeps it
      const bool blocked = i >= n - opts.blocked_agents && i > 0;
      t.agent_goals[a] = header + " \n" + (blocked ? std::string() : recipes) + tail + teammates_sentence(t.agent_names, a);
    }
    t.goal += teammates_sentence(t.agent_names, "");
  } else {
    const int n = opts.agent_count;
    std::map<AgentId, std::string> recipes;
    for (int i = 0; i < static_cast<int>(items.size()); ++i) {
      const AgentId& holder = t.agent_names[static_cast<std::size_t>(i % n)];
      const AgentId& maker = t.agent_names[static_cast<std::size_t>((i + 1) % n)];
      recipes[holder] += "\n" + cooking_recipe_text(book, items[static_cast<std::size_t>(i)]);
      t.assignments[maker].push_back(i);
    }
    t.goal = header;
    for (const auto& a : t.agent_names) {
      t.plan_access[a] = false;
      std::string mine;
      for (int idx : t.assignments[a]) {
        if (!mine.empty()) mine += ", ";
        mine += items[static_cast<std::size_t>(idx)];
      }
      std::string g = header + " \n" + recipes[a] + "\n";
      if (!mine.empty()) {
        g += "You must make: " + mine + ". You were not given the recipe for it; ask your teammates for it. ";
      }
      g += "Share the recipes you were given with anyone who asks. " + teammates_sentence(t.agent_names, a);
      t.agent_goals[a] = g;
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Crafting

const std::vector<ItemId>& crafting_train_targets() {
  static const std::vector<ItemId> items = {"wooden_pickaxe", "wooden_axe", "wooden_shovel", "stone_axe",
                                            "stone_shovel",   "iron_pickaxe", "chest",       "ladder",
                                            "book",           "torch",       "white_carpet", "oak_door"};
  return items;
}

const std::vector<ItemId>& crafting_test_targets() {
  static const std::vector<ItemId> items = {"stone_pickaxe", "bookshelf", "compass",    "campfire",
                                            "white_bed",     "fishing_rod", "clock",    "carrot_on_a_stick"};
  return items;
}

TaskSpec generate_crafting_task(const RecipeBook& book, int agent_count, const ItemId& target, PlanBlocked blocked,
                                std::uint64_t seed) {
  if (agent_count < 2 || agent_count > 5) throw Error(ErrorCode::kInvalidArgument, "agent count must be 2-5");
  const Recipe* r = book.find(target);
  if (!r || r->kind != RecipeKind::kCraft) throw Error(ErrorCode::kUnknownTarget, "Unknown item: " + target);
  Rng rng(mix_seed(seed, fnv1a("crafting:" + target)));

  const Expansion ex = expand(book, target, 1, [&](const ItemId& it) { return crafting_leaf(book, it); });
  std::vector<ItemId> units;
  for (const auto& [item, n] : ex.leaves) units.insert(units.end(), static_cast<std::size_t>(n), item);
  if (static_cast<int>(units.size()) < agent_count) {
    // cheap targets (one log makes a wooden_shovel) are dealt as their direct ingredients instead
    units.clear();
    for (const auto& [item, n] : r->inputs) units.insert(units.end(), static_cast<std::size_t>(n), item);
  }
  if (static_cast<int>(units.size()) < agent_count) {
    throw Error(ErrorCode::kInvalidArgument, target + " needs too few items to split across agents");
  }
  std::vector<AgentId> names = default_agent_names(agent_count);
  std::map<AgentId, Inventory> inv;
  // every agent gets at least one unit and misses at least one, so nobody can finish alone
  rng.shuffle(units);
  for (std::size_t i = 0; i < units.size(); ++i) inv[names[i % names.size()]].add(units[i], 1);

  TaskSpec t;
  t.task_type = "crafting";
  t.task_name = "multiagent_crafting_" + std::to_string(agent_count) + "_" + target;
  if (blocked != PlanBlocked::kNone) t.task_name += "_blocked_" + to_string(blocked);
  t.agent_names = names;
  t.initial_inventories = inv;
  t.target_items = {{target, 1}};
  t.plan_blocked = blocked;
  t.blocked_agents = blocked == PlanBlocked::kNone ? 0 : (blocked == PlanBlocked::kOne ? 1 : agent_count);
  for (int i = 0; i < agent_count; ++i) {
    const bool no_plan = blocked == PlanBlocked::kBoth || (blocked == PlanBlocked::kOne && i == agent_count - 1);
    t.plan_access[names[static_cast<std::size_t>(i)]] = !no_plan;
  }
  t.goal = "Collaborate with other agents to build a " + target + ".";
  for (const auto& a : names) t.agent_goals[a] = t.goal + " " + teammates_sentence(names, a);
  t.timeout_seconds = 300;
  t.world.kind = "crafting-forest";
  t.seed = seed;
  return t;
}

// ---------------------------------------------------------------------------
// Construction

TaskSpec generate_construction_task(const BlueprintConfig& config, std::uint64_t seed, int agent_count) {
  if (agent_count < 2 || agent_count > 5) throw Error(ErrorCode::kInvalidArgument, "agent count must be 2-5");
  Blueprint bp = generate_blueprint(config, seed);
  Rng rng(mix_seed(seed, fnv1a("construction")));

  // deal material classes round-robin; each agent places and holds only its own classes
  std::map<std::string, std::vector<std::string>> by_class;
  for (const auto& m : bp.materials_used()) by_class[material_class(m)].push_back(m);
  std::vector<std::string> classes;
  for (const auto& [cls, mats] : by_class) classes.push_back(cls);
  rng.shuffle(classes);
  const std::vector<AgentId> names = default_agent_names(agent_count);
  const Inventory bill = bp.bill_of_materials();

  TaskSpec t;
  t.task_type = "construction";
  t.task_name = "construction_" + config.name();
  t.agent_names = names;
  const std::size_t slots = std::max(classes.size(), names.size());
  for (std::size_t i = 0; i < slots; ++i) {
    const std::string& cls = classes[i % classes.size()];
    const AgentId& a = names[i % names.size()];
    t.capabilities[a].insert(cls);
  }
  for (const auto& cls : classes) {
    std::vector<AgentId> owners;
    for (const auto& a : names) {
      if (t.capabilities[a].count(cls)) owners.push_back(a);
    }
    for (const auto& m : by_class[cls]) {
      const int total = bill.count(m);
      for (std::size_t k = 0; k < owners.size(); ++k) {
        const int share = total / static_cast<int>(owners.size()) + (static_cast<int>(k) < total % static_cast<int>(owners.size()) ? 1 : 0);
        if (share > 0) t.initial_inventories[owners[k]].add(m, share);
      }
    }
  }
  t.goal = "Build the structure in the blueprint " + config.name() +
           ". Use !checkBlueprint to see what is still missing and !checkBlueprintLevel to inspect one level.";
  for (const auto& a : names) {
    std::string caps;
    for (const auto& c : t.capabilities[a]) caps += (caps.empty() ? "" : ", ") + c;
    t.agent_goals[a] = t.goal + " You can only place " + caps + " blocks. " + teammates_sentence(names, a);
  }
  for (const auto& a : names) t.plan_access[a] = true;
  t.timeout_seconds = 600 + 300 * config.rooms;
  t.world.kind = "construction-superflat";
  t.seed = seed;
  t.blueprint = std::move(bp);
  return t;
}

// ---------------------------------------------------------------------------
// Splits

SplitSizes default_split_sizes(const std::string& domain) {
  if (domain == "cooking") return {280, 90};
  if (domain == "crafting") return {1200, 100};
  if (domain == "construction") return {2000, 30};
  throw Error(ErrorCode::kInvalidArgument, "unknown domain " + domain);
}

namespace {

std::vector<TaskSpec> cooking_split(const RecipeBook& book, const std::string& split, int count, std::uint64_t seed) {
  std::vector<TaskSpec> out;
  Rng rng(mix_seed(seed, fnv1a("cooking-split:" + split)));
  for (int i = 0; i < count; ++i) {
    CookingOptions o;
    o.split = split;
    o.agent_count = rng.uniform(2, 5);
    o.item_count = rng.uniform(1, std::min(4, o.agent_count + 1));
    o.hells_kitchen = o.agent_count == 2 && rng.uniform(0, 3) == 0;
    o.blocked_agents = o.hells_kitchen ? 0 : rng.uniform(0, std::min(2, o.agent_count - 1));
    TaskSpec t = generate_cooking_task(book, o, mix_seed(seed, static_cast<std::uint64_t>(i) * 2 + (split == "test")));
    t.task_name += "_" + split + "_" + std::to_string(i);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<TaskSpec> crafting_split(const RecipeBook& book, const std::string& split, int count, std::uint64_t seed) {
  std::vector<TaskSpec> out;
  const auto& pool = split == "test" ? crafting_test_targets() : crafting_train_targets();
  Rng rng(mix_seed(seed, fnv1a("crafting-split:" + split)));
  for (int i = 0; i < count; ++i) {
    const ItemId& target = pool[static_cast<std::size_t>(i) % pool.size()];
    const int agents = rng.uniform(2, 5);
    const auto blocked = static_cast<PlanBlocked>(rng.uniform(0, 2));
    std::uint64_t s = mix_seed(seed, static_cast<std::uint64_t>(i) * 2 + (split == "test"));
    TaskSpec t = [&] {
      for (int a = agents;; --a) {
        try {
          return generate_crafting_task(book, a, target, blocked, s);
        } catch (const Error&) {
          if (a == 2) throw;
        }
      }
    }();
    t.task_name += "_" + split + "_" + std::to_string(i);
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

std::pair<std::vector<TaskSpec>, std::vector<TaskSpec>> split_train_test(const RecipeBook& book,
                                                                         const std::string& domain,
                                                                         std::uint64_t seed, SplitSizes sizes) {
  const SplitSizes d = default_split_sizes(domain);
  if (sizes.train == 0 && sizes.test == 0) sizes = d;
  if (domain == "cooking") return {cooking_split(book, "train", sizes.train, seed), cooking_split(book, "test", sizes.test, seed)};
  if (domain == "crafting") {
    return {crafting_split(book, "train", sizes.train, seed), crafting_split(book, "test", sizes.test, seed)};
  }
  // construction: train seeds count up from the base, test seeds from a disjoint high range;
  // any blueprint already seen in either split is regenerated with the next seed
  std::pair<std::vector<TaskSpec>, std::vector<TaskSpec>> out;
  std::set<std::string> seen;
  auto fill = [&](std::vector<TaskSpec>& dst, int count, std::uint64_t base, const std::string& split) {
    std::uint64_t next = base;
    for (int i = 0; i < count; ++i) {
      BlueprintConfig c;
      c.materials = i % 3;
      c.rooms = (i / 3) % 3;
      c.windows = (i / 9) % 3;
      c.carpets = (i / 27) % 3;
      c.variant = i / 81;
      for (;;) {
        TaskSpec t = generate_construction_task(c, mix_seed(seed, next++));
        if (!seen.insert(t.blueprint->hash()).second) continue;
        t.task_name += "_" + split;
        dst.push_back(std::move(t));
        break;
      }
    }
  };
  fill(out.first, sizes.train, 0, "train");
  fill(out.second, sizes.test, std::uint64_t{1} << 32, "test");
  return out;
}

}  // namespace minecollab
