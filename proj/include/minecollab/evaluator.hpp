#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "minecollab/blueprint.hpp"
#include "minecollab/task.hpp"
#include "minecollab/world.hpp"

namespace minecollab {

struct Score {
  enum class Kind { kBinary, kEditDistance };

  double value = 0;
  Kind kind = Kind::kBinary;
  nlohmann::json detail = nlohmann::json::object();

  std::string kind_name() const { return kind == Kind::kBinary ? "binary" : "edit_distance"; }
};

/// Hell's Kitchen progress shared by all agents of an episode. Every mark is appended to the
/// backing file before it becomes visible, so a reloaded store sees the same state.
class ProgressStore {
 public:
  ProgressStore() = default;
  explicit ProgressStore(std::filesystem::path path);

  /// Returns true if the index was newly marked.
  bool mark(const AgentId& agent, int index);
  bool done(const AgentId& agent, int index) const;
  const std::set<int>& completed(const AgentId& agent) const;
  const std::map<AgentId, std::set<int>>& all() const { return done_; }

  static ProgressStore load(const std::filesystem::path& path);

 private:
  std::optional<std::filesystem::path> path_;
  std::map<AgentId, std::set<int>> done_;
};

Score score_cooking(const WorldState& world, const TaskSpec& task, ProgressStore& progress);
Score score_crafting(const WorldState& world, const TaskSpec& task);
Score score_blueprint(const WorldState& world, const Blueprint& bp);
/// Dispatches on task type.
Score score_task(const WorldState& world, const TaskSpec& task, ProgressStore& progress);

/// Fix lines for one level, or for every level when `level` is empty.
std::string blueprint_diff(const WorldState& world, const Blueprint& bp, std::optional<int> level = std::nullopt);

}  // namespace minecollab
