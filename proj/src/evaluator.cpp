#include "minecollab/evaluator.hpp"

#include <fstream>

namespace minecollab {

ProgressStore::ProgressStore(std::filesystem::path path) : path_(std::move(path)) {}

bool ProgressStore::mark(const AgentId& agent, int index) {
  if (done(agent, index)) return false;
  if (path_) {
    std::ofstream out(*path_, std::ios::app);
    if (!out) throw Error(ErrorCode::kIo, "cannot write progress file " + path_->string());
    out << nlohmann::json{{"agent", agent}, {"index", index}}.dump() << "\n";
    out.flush();
  }
  done_[agent].insert(index);
  return true;
}

bool ProgressStore::done(const AgentId& agent, int index) const {
  auto it = done_.find(agent);
  return it != done_.end() && it->second.count(index) > 0;
}

const std::set<int>& ProgressStore::completed(const AgentId& agent) const {
  static const std::set<int> none;
  auto it = done_.find(agent);
  return it == done_.end() ? none : it->second;
}

ProgressStore ProgressStore::load(const std::filesystem::path& path) {
  ProgressStore store(path);
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line);
    store.done_[j.at("agent").get<std::string>()].insert(j.at("index").get<int>());
  }
  return store;
}

namespace {

bool holds_all(const Inventory& inv, const std::vector<std::pair<ItemId, int>>& targets) {
  for (const auto& [item, n] : targets) {
    if (inv.count(item) < n) return false;
  }
  return true;
}

std::string coords(const BlockPos& p) {
  return "coordinates X: " + std::to_string(p.x) + ", Y: " + std::to_string(p.y) + ", Z: " + std::to_string(p.z);
}

}  // namespace

Score score_cooking(const WorldState& world, const TaskSpec& task, ProgressStore& progress) {
  Score s;
  s.kind = Score::Kind::kBinary;
  if (!task.hells_kitchen) {
    for (const auto& name : task.agent_names) {
      auto it = world.agents.find(name);
      if (it == world.agents.end()) continue;
      if (holds_all(it->second.inventory, task.target_items)) {
        s.value = 1;
        s.detail["holder"] = name;
        break;
      }
    }
    return s;
  }
  bool all = true;
  for (const auto& [agent, indices] : task.assignments) {
    auto it = world.agents.find(agent);
    for (int idx : indices) {
      const auto& [item, n] = task.target_items.at(static_cast<std::size_t>(idx));
      if (it != world.agents.end() && it->second.inventory.count(item) >= n) progress.mark(agent, idx);
      all = all && progress.done(agent, idx);
    }
    s.detail["completed"][agent] = progress.completed(agent);
  }
  s.value = all ? 1 : 0;
  return s;
}

Score score_crafting(const WorldState& world, const TaskSpec& task) {
  Score s;
  s.kind = Score::Kind::kBinary;
  for (const auto& name : task.agent_names) {
    auto it = world.agents.find(name);
    if (it != world.agents.end() && holds_all(it->second.inventory, task.target_items)) {
      s.value = 1;
      s.detail["holder"] = name;
      break;
    }
  }
  return s;
}

Score score_blueprint(const WorldState& world, const Blueprint& bp) {
  Score s;
  s.kind = Score::Kind::kEditDistance;
  long matched = 0;
  long total = 0;
  nlohmann::json levels = nlohmann::json::array();
  for (int l = 0; l < bp.level_count(); ++l) {
    long lm = 0;
    long lt = 0;
    for (int z = 0; z < bp.depth; ++z) {
      for (int x = 0; x < bp.width; ++x) {
        const auto& want = bp.at(l, z, x);
        if (want == "air") continue;
        ++lt;
        if (world.material_at(bp.world_pos(l, z, x)) == want) ++lm;
      }
    }
    levels.push_back({{"level", l}, {"matched", lm}, {"total", lt}});
    matched += lm;
    total += lt;
  }
  s.value = total == 0 ? 1.0 : static_cast<double>(matched) / static_cast<double>(total);
  s.detail["matched"] = matched;
  s.detail["total"] = total;
  s.detail["levels"] = levels;
  return s;
}

Score score_task(const WorldState& world, const TaskSpec& task, ProgressStore& progress) {
  if (task.task_type == "cooking") return score_cooking(world, task, progress);
  if (task.task_type == "construction") return score_blueprint(world, *task.blueprint);
  return score_crafting(world, task);
}

std::string blueprint_diff(const WorldState& world, const Blueprint& bp, std::optional<int> level) {
  if (level && (*level < 0 || *level >= bp.level_count())) {
    throw Error(ErrorCode::kInvalidLevel, "Level " + std::to_string(*level) + " does not exist in the blueprint.");
  }
  std::string out;
  const int lo = level ? *level : 0;
  const int hi = level ? *level : bp.level_count() - 1;
  for (int l = lo; l <= hi; ++l) {
    std::string fixes;
    for (int z = 0; z < bp.depth; ++z) {
      for (int x = 0; x < bp.width; ++x) {
        const BlockPos p = bp.world_pos(l, z, x);
        const auto& want = bp.at(l, z, x);
        const std::string have = world.material_at(p);
        if (have == want) continue;
        if (have != "air") fixes += "Remove the " + have + " at " + coords(p) + "\n";
        if (want != "air") fixes += "Place " + want + " at " + coords(p) + "\n";
      }
    }
    if (!out.empty()) out += "\n";
    if (fixes.empty()) {
      out += "Level " + std::to_string(l) + " is complete";
    } else {
      fixes.pop_back();
      out += "Level " + std::to_string(l) + " requires the following fixes:\n" + fixes;
    }
  }
  return out;
}

}  // namespace minecollab
