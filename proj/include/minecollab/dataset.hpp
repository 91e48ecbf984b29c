#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "minecollab/episode.hpp"

namespace minecollab {

struct FilterPolicy {
  enum class Mode { kSuccessOnly, kTopFraction };
  Mode mode = Mode::kSuccessOnly;
  double fraction = 0.25;

  /// "success" or "top25" (any "topNN").
  static FilterPolicy parse(const std::string& s);
};

/// cooking, crafting or construction; techtree counts as crafting.
std::string log_domain(const EpisodeLog& log);

/// Indices of the kept scores. Ties at the top-fraction threshold are kept.
std::vector<std::size_t> filter_scores(const std::vector<double>& scores, const FilterPolicy& policy);
std::vector<EpisodeLog> filter_runs(const std::vector<EpisodeLog>& logs, const FilterPolicy& policy);

std::vector<Transition> emit_transitions(const EpisodeLog& run);
/// {memory, turns, task, score}; the last turn is the assistant target.
nlohmann::json transition_example(const EpisodeLog& run, const Transition& t);

struct DatasetStats {
  std::string domain;
  int train = 0;
  int test = 0;
  int trials = 0;
  int successes = 0;
  int kept_runs = 0;
  std::size_t transitions = 0;
  double avg_trajectory_length = 0;
};

DatasetStats dataset_stats(const std::vector<EpisodeLog>& all, const std::vector<EpisodeLog>& kept);
/// Tab-separated table with the columns Task, Train, Test, Trials, Success, Transitions, Avg Traj. Len.
std::string render_stats(const std::vector<DatasetStats>& rows);

std::vector<EpisodeLog> load_logs(const std::filesystem::path& dir);

}  // namespace minecollab
