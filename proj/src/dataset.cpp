#include "minecollab/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

namespace minecollab {

FilterPolicy FilterPolicy::parse(const std::string& s) {
  FilterPolicy p;
  if (s == "success" || s == "success_only") return p;
  if (s.rfind("top", 0) == 0 && s.size() > 3) {
    int pct = 0;
    try {
      pct = std::stoi(s.substr(3));
    } catch (const std::exception&) {
      pct = 0;
    }
    if (pct > 0 && pct <= 100) {
      p.mode = Mode::kTopFraction;
      p.fraction = pct / 100.0;
      return p;
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown filter policy: " + s);
}

std::string log_domain(const EpisodeLog& log) {
  const std::string t = log.task_type();
  return t == "techtree" ? "crafting" : t;
}

std::vector<std::size_t> filter_scores(const std::vector<double>& scores, const FilterPolicy& policy) {
  std::vector<std::size_t> kept;
  if (policy.mode == FilterPolicy::Mode::kSuccessOnly) {
    for (std::size_t i = 0; i < scores.size(); ++i) {
      if (scores[i] >= 1.0) kept.push_back(i);
    }
    return kept;
  }
  if (scores.empty()) return kept;
  if (!(policy.fraction > 0 && policy.fraction <= 1)) {
    throw Error(ErrorCode::kInvalidArgument, "fraction must be in (0, 1]");
  }
  std::vector<double> sorted = scores;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  // small epsilon so 0.25 * 8 stays 2 rather than 2.0000000001 -> 3
  auto k = static_cast<std::size_t>(std::ceil(policy.fraction * static_cast<double>(sorted.size()) - 1e-9));
  k = std::clamp<std::size_t>(k, 1, sorted.size());
  const double threshold = sorted[k - 1];
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (scores[i] >= threshold) kept.push_back(i);
  }
  return kept;
}

std::vector<EpisodeLog> filter_runs(const std::vector<EpisodeLog>& logs, const FilterPolicy& policy) {
  if (logs.empty()) throw Error(ErrorCode::kEmptyInput, "no episode logs to filter");
  const std::string domain = log_domain(logs.front());
  std::vector<double> scores;
  for (const auto& log : logs) {
    if (log_domain(log) != domain) {
      throw Error(ErrorCode::kInvalidArgument, "mixed domains: " + domain + " and " + log_domain(log));
    }
    scores.push_back(log.final_score());
  }
  std::vector<EpisodeLog> kept;
  for (auto i : filter_scores(scores, policy)) kept.push_back(logs[i]);
  return kept;
}

std::vector<Transition> emit_transitions(const EpisodeLog& run) { return run.transitions(); }

nlohmann::json transition_example(const EpisodeLog& run, const Transition& t) {
  nlohmann::json turns = nlohmann::json::array();
  for (const auto& m : t.context) turns.push_back({{"role", m.role}, {"content", m.content}});
  turns.push_back({{"role", "assistant"}, {"content", t.response}});
  return {{"memory", ""},
          {"turns", std::move(turns)},
          {"task", run.header().at("task").at("task_name")},
          {"score", run.final_score()}};
}

DatasetStats dataset_stats(const std::vector<EpisodeLog>& all, const std::vector<EpisodeLog>& kept) {
  DatasetStats s;
  if (!all.empty()) s.domain = log_domain(all.front());
  std::set<std::string> tasks;
  for (const auto& log : all) {
    tasks.insert(log.header().at("task").at("task_name").get<std::string>());
    ++s.trials;
    if (log.final_score() >= 1.0) ++s.successes;
  }
  s.train = static_cast<int>(tasks.size());
  s.kept_runs = static_cast<int>(kept.size());
  for (const auto& log : kept) s.transitions += log.assistant_turns();
  if (s.kept_runs > 0) s.avg_trajectory_length = static_cast<double>(s.transitions) / s.kept_runs;
  return s;
}

std::string render_stats(const std::vector<DatasetStats>& rows) {
  std::ostringstream out;
  out << "Task\tTrain\tTest\tTrials\tSuccess\tTransitions\tAvg Traj. Len.\n";
  for (const auto& r : rows) {
    out << r.domain << '\t' << r.train << '\t' << r.test << '\t' << r.trials << '\t' << r.successes << '\t'
        << r.transitions << '\t' << std::fixed << std::setprecision(1) << r.avg_trajectory_length << '\n';
  }
  return out.str();
}

std::vector<EpisodeLog> load_logs(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  if (!std::filesystem::is_directory(dir)) throw Error(ErrorCode::kIo, "not a directory: " + dir.string());
  for (const auto& entry : std::filesystem::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".jsonl") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<EpisodeLog> logs;
  for (const auto& f : files) logs.push_back(EpisodeLog::load(f));
  return logs;
}

}  // namespace minecollab
