#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "minecollab/agent.hpp"
#include "minecollab/evaluator.hpp"
#include "minecollab/task.hpp"
#include "minecollab/world.hpp"

namespace minecollab {

struct EpisodeConfig {
  TaskSpec task;
  std::map<AgentId, std::shared_ptr<AgentEndpoint>> endpoints;
  std::uint64_t seed = 0;
  /// Hell's Kitchen progress file; in-memory when empty.
  std::filesystem::path progress_path;

  Tick max_ticks() const { return task.max_ticks(); }
};

enum class EndReason { kCompleted, kTimeout, kAgentError };

std::string to_string(EndReason r);
EndReason parse_end_reason(const std::string& s);

/// One assistant turn with everything that agent had seen before it.
struct Transition {
  AgentId agent;
  std::vector<ChatMessage> context;
  std::string response;
  Tick tick = 0;
};

/// Ordered event records. Types: header, message, command, chat, score, end.
struct EpisodeLog {
  std::vector<nlohmann::json> events;

  const nlohmann::json& header() const;
  const nlohmann::json& end() const;
  double final_score() const;
  EndReason end_reason() const;
  Tick end_tick() const;
  std::string task_type() const;

  std::vector<Transition> transitions() const;
  std::size_t assistant_turns() const;

  std::string to_jsonl() const;
  static EpisodeLog from_jsonl(const std::string& text);
  static EpisodeLog load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;
};

/// Fresh world for the task: provisioning, initial inventories and seeded spawn points.
WorldState reset(const TaskSpec& task, std::uint64_t seed);
/// Same as above, reusing an existing world object.
void reset(WorldState& world, const TaskSpec& task, std::uint64_t seed);

EpisodeLog run_episode(const EpisodeConfig& cfg);

/// Endpoint that repeats the assistant turns recorded for one agent.
class ReplayEndpoint : public AgentEndpoint {
 public:
  ReplayEndpoint(const EpisodeLog& log, const AgentId& agent);
  void begin(const AgentBrief&) override {}
  void observe(const ChatMessage&, Tick) override {}
  std::string poll(Tick tick) override;

 private:
  std::map<Tick, std::string> turns_;
};

/// Runs the recorded command stream again against a fresh world.
EpisodeLog replay(const EpisodeLog& log);

// ---------------------------------------------------------------------------
// Suites

struct SuiteEntry {
  TaskSpec task;
  std::vector<std::string> agent_kinds;  // "oracle" per agent
  std::uint64_t seed = 0;
};

struct SuiteResult {
  std::string task_name;
  nlohmann::json keys;  // grouping keys
  double score = 0;
  std::string end_reason;
  Tick end_tick = 0;
  std::string error;
};

struct SuiteReport {
  std::vector<SuiteResult> results;
  /// Mean score per grouping key combination.
  nlohmann::json groups = nlohmann::json::array();

  nlohmann::json to_json() const;
};

/// Grouping keys of a task: task_type, agent_count, plan_blocked, m, r.
nlohmann::json grouping_keys(const TaskSpec& task);

using EndpointFactory =
    std::function<std::shared_ptr<AgentEndpoint>(const std::string& kind, const TaskSpec& task, const AgentId& agent)>;

/// Runs every entry; errors are recorded per entry. Logs go to `log_dir` when set.
SuiteReport run_suite(const std::vector<SuiteEntry>& entries, const EndpointFactory& factory,
                      const std::optional<std::filesystem::path>& log_dir = std::nullopt);

/// Means grouped by the keys above; pure arithmetic over results.
nlohmann::json aggregate(const std::vector<SuiteResult>& results);

}  // namespace minecollab
