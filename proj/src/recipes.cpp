#include "minecollab/recipes.hpp"

#include <algorithm>
#include <fstream>
#include <functional>

#include "minecollab/recipes_data.hpp"

namespace minecollab {

namespace {

RecipeStation parse_station(const std::string& s) {
  if (s == "none") return RecipeStation::kNone;
  if (s == "crafting_table") return RecipeStation::kCraftingTable;
  if (s == "furnace") return RecipeStation::kFurnace;
  throw Error(ErrorCode::kInvalidSpec, "unknown station '" + s + "'");
}

RecipeKind parse_kind(const std::string& s) {
  if (s == "craft") return RecipeKind::kCraft;
  if (s == "smelt") return RecipeKind::kSmelt;
  throw Error(ErrorCode::kInvalidSpec, "unknown recipe kind '" + s + "'");
}

}  // namespace

std::string Recipe::requirement_text(int times) const {
  std::string out;
  for (const auto& [item, n] : inputs) {
    if (!out.empty()) out += ", ";
    out += item + ": " + std::to_string(n * times);
  }
  return out;
}

RecipeBook RecipeBook::from_json(const nlohmann::json& doc) {
  RecipeBook book;
  book.version_ = doc.value("version", 0);
  if (book.version_ != 1) throw Error(ErrorCode::kInvalidSpec, "unsupported recipe book version");
  for (const auto& entry : doc.at("recipes")) {
    Recipe r;
    r.output = entry.at("output").get<std::string>();
    r.count = entry.value("count", 1);
    for (const auto& in : entry.at("inputs")) r.inputs.emplace_back(in.at(0).get<std::string>(), in.at(1).get<int>());
    r.station = parse_station(entry.value("station", "none"));
    r.kind = parse_kind(entry.value("kind", "craft"));
    if (r.inputs.empty() || r.count < 1) throw Error(ErrorCode::kInvalidSpec, "malformed recipe for " + r.output);
    for (const auto& [item, n] : r.inputs) {
      if (n < 1) throw Error(ErrorCode::kInvalidSpec, "non-positive input count in " + r.output);
    }
    if (r.kind == RecipeKind::kSmelt && (r.inputs.size() != 1 || r.inputs[0].second != 1)) {
      throw Error(ErrorCode::kInvalidSpec, "smelt recipe " + r.output + " must take exactly one item");
    }
    if (book.by_output_.count(r.output)) throw Error(ErrorCode::kInvalidSpec, "duplicate recipe for " + r.output);
    book.by_output_[r.output] = book.ordered_.size();
    book.ordered_.push_back(std::move(r));
  }
  for (const auto& r : book.ordered_) {
    for (const auto& [item, n] : r.inputs) {
      if (!book.by_output_.count(item)) book.raw_items_.insert(item);
    }
  }
  // cycle check: depth() recurses and detects back edges
  std::map<ItemId, int> state;
  std::function<void(const ItemId&)> visit = [&](const ItemId& item) {
    int& s = state[item];
    if (s == 2) return;
    if (s == 1) throw Error(ErrorCode::kInvalidSpec, "recipe cycle through " + item);
    s = 1;
    if (const Recipe* r = book.find(item)) {
      for (const auto& [in, n] : r->inputs) visit(in);
    }
    state[item] = 2;
  };
  for (const auto& r : book.ordered_) visit(r.output);
  return book;
}

RecipeBook RecipeBook::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open recipe book " + path.string());
  return from_json(nlohmann::json::parse(in));
}

const RecipeBook& RecipeBook::standard() {
  static const RecipeBook book = from_json(nlohmann::json::parse(kStandardRecipesJson));
  return book;
}

const Recipe* RecipeBook::find(const ItemId& output) const {
  auto it = by_output_.find(output);
  return it == by_output_.end() ? nullptr : &ordered_[it->second];
}

const Recipe* RecipeBook::smelt_for_input(const ItemId& input) const {
  for (const auto& r : ordered_) {
    if (r.kind == RecipeKind::kSmelt && r.inputs.front().first == input) return &r;
  }
  return nullptr;
}

int RecipeBook::depth(const ItemId& item) const {
  const Recipe* r = find(item);
  if (!r) return 0;
  int d = 0;
  for (const auto& [in, n] : r->inputs) d = std::max(d, depth(in));
  return d + 1;
}

Inventory RecipeBook::raw_requirement(const ItemId& item, int quantity) const {
  return compute_crafting_plan(*this, item, quantity, {}).missing_inventory();
}

std::string PlanStep::text() const {
  std::string s = kind == RecipeKind::kCraft ? "Craft " : "Smelt ";
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (i) s += " + ";
    s += std::to_string(inputs[i].second) + " " + inputs[i].first;
  }
  return s + " -> " + std::to_string(output_count) + " " + output;
}

Inventory CraftingPlan::missing_inventory() const {
  Inventory inv;
  for (const auto& [item, n] : missing) inv.add(item, n);
  return inv;
}

std::string CraftingPlan::render(const ItemId& target, int quantity) const {
  if (missing.empty() && steps.empty()) {
    return "You already have " + std::to_string(quantity) + " " + target + ".";
  }
  std::string s;
  if (!missing.empty()) {
    s += "\nYou are missing the following items:\n";
    for (const auto& [item, n] : missing) s += "- " + std::to_string(n) + " " + item + "\n";
    s += "\nOnce you have these items, here's your crafting plan:\n\n";
  } else {
    s += "\nYou have all items required to craft this item!\nHere's your crafting plan:\n\n";
  }
  for (const auto& step : steps) s += step.text() + "\n";
  return s;
}

CraftingPlan compute_crafting_plan(const RecipeBook& book, const ItemId& target, int quantity,
                                   const Inventory& inventory) {
  if (quantity < 1) throw Error(ErrorCode::kInvalidArgument, "quantity must be positive");
  if (!book.known(target)) throw Error(ErrorCode::kUnknownTarget, "Unknown item: " + target);
  CraftingPlan plan;
  Inventory available = inventory;
  std::function<void(const ItemId&, int)> expand = [&](const ItemId& item, int qty) {
    const int take = std::min(available.count(item), qty);
    available.remove(item, take);
    const int need = qty - take;
    if (need == 0) return;
    const Recipe* r = book.find(item);
    if (!r) {
      auto it = std::find_if(plan.missing.begin(), plan.missing.end(),
                             [&](const auto& m) { return m.first == item; });
      if (it == plan.missing.end()) {
        plan.missing.emplace_back(item, need);
      } else {
        it->second += need;
      }
      return;
    }
    const int batches = (need + r->count - 1) / r->count;
    PlanStep step;
    step.kind = r->kind;
    step.output = item;
    step.batches = batches;
    step.output_count = batches * r->count;
    for (const auto& [in, n] : r->inputs) {
      expand(in, n * batches);
      step.inputs.emplace_back(in, n * batches);
    }
    plan.steps.push_back(std::move(step));
    available.add(item, batches * r->count - need);
  };
  expand(target, quantity);
  return plan;
}

std::vector<ItemId> craftable(const RecipeBook& book, const Inventory& inventory) {
  std::vector<ItemId> out;
  for (const auto& r : book.recipes()) {
    if (r.kind != RecipeKind::kCraft) continue;
    bool ok = true;
    for (const auto& [item, n] : r.inputs) ok = ok && inventory.count(item) >= n;
    if (ok) out.push_back(r.output);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<BlockPos> nearest_station(const WorldState& world, const BlockPos& from,
                                        std::initializer_list<StationKind> kinds, double radius) {
  std::optional<BlockPos> best;
  double best_d = 0;
  for (const auto& [pos, material] : world.grid) {
    const StationKind k = station_kind(material);
    if (std::find(kinds.begin(), kinds.end(), k) == kinds.end()) continue;
    const double d = pos.distance_to(from);
    if (d > radius + 1e-9) continue;
    if (!best || d < best_d) {
      best = pos;
      best_d = d;
    }
  }
  return best;
}

CommandResult craft(const RecipeBook& book, WorldState& world, const AgentId& actor,
                    const ItemId& output_item, int times) {
  AgentBody& body = world.agent(actor);
  const Recipe* r = book.find(output_item);
  if (!r) return CommandResult::failure("Could not find a recipe for " + output_item + ".");
  if (r->kind == RecipeKind::kSmelt) {
    return CommandResult::failure(output_item + " is made by smelting, not crafting. Use !smeltItem.");
  }
  if (times < 1) return CommandResult::failure("The number of crafts must be at least 1.");
  for (const auto& [item, n] : r->inputs) {
    if (body.inventory.count(item) < n * times) {
      return CommandResult::failure("You do not have the resources to craft a " + output_item +
                                    ". It requires: " + r->requirement_text(times) + ".");
    }
  }
  if (r->station == RecipeStation::kCraftingTable &&
      !nearest_station(world, body.pos, {StationKind::kCraftingTable}, kInteractionRadius)) {
    return CommandResult::failure("There is no crafting_table nearby. Go to a crafting_table to craft " +
                                  output_item + ".");
  }
  for (const auto& [item, n] : r->inputs) {
    body.inventory.remove(item, n * times);
    ledger_add(world, item, -static_cast<long>(n) * times);
  }
  body.inventory.add(output_item, r->count * times);
  ledger_add(world, output_item, static_cast<long>(r->count) * times);
  return CommandResult::success("Successfully crafted " + output_item + ", you now have " +
                                    std::to_string(body.inventory.count(output_item)) + " " + output_item + ".",
                                "craft " + output_item);
}

CommandResult smelt(const RecipeBook& book, WorldState& world, const AgentId& actor,
                    const ItemId& input_item, int times) {
  AgentBody& body = world.agent(actor);
  const Recipe* r = book.smelt_for_input(input_item);
  if (!r) return CommandResult::failure("Cannot smelt " + input_item + ".");
  if (times < 1) return CommandResult::failure("The number of smelts must be at least 1.");
  auto furnace = nearest_station(world, body.pos, {StationKind::kFurnace, StationKind::kSmoker}, kInteractionRadius);
  if (!furnace) return CommandResult::failure("There is no furnace nearby.");
  if (body.inventory.count(input_item) < times) {
    return CommandResult::failure("You do not have enough " + input_item + " to smelt.");
  }
  int& fuel = world.furnace_fuel[*furnace];
  if (fuel < times) return CommandResult::failure("The " + world.material_at(*furnace) + " is out of fuel.");
  fuel -= times;
  body.inventory.remove(input_item, times);
  ledger_add(world, input_item, -times);
  body.inventory.add(r->output, r->count * times);
  ledger_add(world, r->output, static_cast<long>(r->count) * times);
  return CommandResult::success("Successfully smelted " + input_item + ", got " +
                                    std::to_string(r->count * times) + " " + r->output + ".",
                                "smelt " + input_item);
}

}  // namespace minecollab
