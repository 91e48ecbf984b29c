#include <gtest/gtest.h>

#include "minecollab/dataset.hpp"

using namespace minecollab;

namespace {

EpisodeLog log_with(const std::string& type, double score, int turns) {
  EpisodeLog log;
  TaskSpec t;
  t.task_name = "t_" + type;
  t.task_type = type;
  log.events.push_back({{"type", "header"}, {"task", t.to_json()}});
  log.events.push_back({{"type", "message"}, {"tick", 0}, {"agent", "A"}, {"role", "system"}, {"content", "sys"}});
  for (int i = 0; i < turns; ++i) {
    log.events.push_back(
        {{"type", "message"}, {"tick", i}, {"agent", "A"}, {"role", "assistant"}, {"content", "t" + std::to_string(i)}});
    log.events.push_back({{"type", "message"}, {"tick", i}, {"agent", "A"}, {"role", "user"}, {"content", "u"}});
  }
  log.events.push_back({{"type", "end"}, {"tick", turns}, {"reason", "timeout"}, {"score", {{"value", score}}}});
  return log;
}

}  // namespace

TEST(Dataset, SuccessOnly) {
  std::vector<EpisodeLog> logs;
  for (double s : {1.0, 0.0, 0.0, 1.0}) logs.push_back(log_with("cooking", s, 1));
  EXPECT_EQ(filter_runs(logs, FilterPolicy::parse("success")).size(), 2u);
  std::vector<EpisodeLog> zeros(3, log_with("cooking", 0, 1));
  EXPECT_TRUE(filter_runs(zeros, FilterPolicy::parse("success")).empty());
}

TEST(Dataset, TopQuarterKeepsTies) {
  EXPECT_EQ(filter_scores({0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0}, FilterPolicy::parse("top25")),
            (std::vector<std::size_t>{7, 8, 9}));
  EXPECT_EQ(filter_scores({0.5, 0.5, 0.5, 0.5}, FilterPolicy::parse("top25")).size(), 4u);
  EXPECT_EQ(filter_scores({0.1, 0.9, 0.3, 0.9, 0.2, 0.4, 0.5, 0.6}, FilterPolicy::parse("top25")),
            (std::vector<std::size_t>{1, 3}));
}

TEST(Dataset, Errors) {
  EXPECT_THROW(filter_runs({}, FilterPolicy::parse("success")), Error);
  EXPECT_THROW(FilterPolicy::parse("best"), Error);
  EXPECT_THROW(filter_runs({log_with("cooking", 1, 1), log_with("construction", 1, 1)}, FilterPolicy::parse("success")),
               Error);
}

TEST(Dataset, TransitionsAreAssistantTurnsWithPrefixContext) {
  const EpisodeLog run = log_with("crafting", 1, 29);
  const auto ts = emit_transitions(run);
  ASSERT_EQ(ts.size(), 29u);
  EXPECT_TRUE(emit_transitions(log_with("crafting", 1, 0)).empty());
  // context of turn k is the full dialogue before it
  for (std::size_t k = 0; k < ts.size(); ++k) {
    ASSERT_EQ(ts[k].context.size(), 1 + 2 * k);
    EXPECT_EQ(ts[k].response, "t" + std::to_string(k));
  }
  // the last context plus its target, plus the trailing user turn, is the whole dialogue
  auto dialogue = ts.back().context;
  dialogue.push_back({"assistant", ts.back().response});
  EXPECT_EQ(dialogue.size() + 1, 1 + 2 * 29u);
  const auto ex = transition_example(run, ts[3]);
  EXPECT_EQ(ex.at("task"), "t_crafting");
  EXPECT_EQ(ex.at("turns").back().at("role"), "assistant");
  EXPECT_EQ(ex.at("turns").size(), ts[3].context.size() + 1);
  EXPECT_TRUE(ex.contains("memory"));
  EXPECT_EQ(ex.at("score"), 1.0);
}

TEST(Dataset, Stats) {
  std::vector<EpisodeLog> runs(10, log_with("crafting", 1, 5));
  runs.push_back(log_with("crafting", 0, 9));
  const auto kept = filter_runs(runs, FilterPolicy::parse("success"));
  const DatasetStats s = dataset_stats(runs, kept);
  EXPECT_EQ(s.trials, 11);
  EXPECT_EQ(s.successes, 10);
  EXPECT_EQ(s.kept_runs, 10);
  EXPECT_EQ(s.transitions, 50u);
  EXPECT_DOUBLE_EQ(s.avg_trajectory_length, 5.0);
  const DatasetStats one = dataset_stats({log_with("cooking", 1, 7)}, {log_with("cooking", 1, 7)});
  EXPECT_DOUBLE_EQ(one.avg_trajectory_length, 7.0);
  const std::string table = render_stats({s});
  EXPECT_EQ(table.substr(0, table.find('\n')), "Task\tTrain\tTest\tTrials\tSuccess\tTransitions\tAvg Traj. Len.");
  EXPECT_NE(table.find("crafting\t1\t0\t11\t10\t50\t5.0"), std::string::npos);
}
