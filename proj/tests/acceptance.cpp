// Acceptance checks. One PASS/FAIL line per criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "minecollab/command.hpp"
#include "minecollab/conversation.hpp"
#include "minecollab/dataset.hpp"
#include "minecollab/episode.hpp"
#include "minecollab/evaluator.hpp"
#include "minecollab/oracle.hpp"
#include "minecollab/task.hpp"

using namespace minecollab;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

int g_failures = 0;

void report(const std::string& name, const Outcome& o) {
  std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
  if (!o.pass) ++g_failures;
}

EpisodeLog run_oracles(const TaskSpec& task, std::uint64_t seed) {
  EpisodeConfig cfg;
  cfg.task = task;
  cfg.seed = seed;
  for (const auto& a : task.agent_names) cfg.endpoints[a] = make_oracle();
  return run_episode(cfg);
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------

Outcome determinism() {
  const fs::path dir = fs::temp_directory_path() / "minecollab_acceptance";
  fs::create_directories(dir);
  const std::string cli = MINECOLLAB_CLI;
  const std::string fixture = std::string(MINECOLLAB_SOURCE_DIR) + "/fixtures/stone_pickaxe";
  std::vector<std::string> logs;
  const auto t0 = Clock::now();
  for (int i = 0; i < 2; ++i) {
    const fs::path log = dir / ("golden_" + std::to_string(i) + ".jsonl");
    fs::remove(log);
    const std::string cmd =
        cli + " run --task " + fixture + " --agents oracle,oracle --seed 7 --log " + log.string() + " > /dev/null";
    if (std::system(cmd.c_str()) != 0) return {false, "cli run failed"};
    logs.push_back(read_file(log));
  }
  const double secs = seconds_since(t0);
  const bool same = !logs[0].empty() && logs[0] == logs[1];
  const double score = EpisodeLog::from_jsonl(logs[0]).final_score();
  std::ostringstream d;
  d << (same ? "byte-identical" : "logs differ") << ", " << logs[0].size() << " bytes, score " << score << ", "
    << secs << " s for both runs";
  return {same && secs < 10.0, d.str()};
}

Outcome crafting_completeness() {
  const auto& book = RecipeBook::standard();
  const auto& targets = crafting_test_targets();
  const auto t0 = Clock::now();
  int ok = 0;
  std::string first_fail;
  for (int i = 0; i < 100; ++i) {
    TaskSpec t = generate_crafting_task(book, 2, targets[i % targets.size()], PlanBlocked::kNone,
                                        mix_seed(2024, static_cast<std::uint64_t>(i)));
    const EpisodeLog log = run_oracles(t, static_cast<std::uint64_t>(i));
    if (log.final_score() >= 1.0 && log.end_tick() <= t.max_ticks()) {
      ++ok;
    } else if (first_fail.empty()) {
      first_fail = t.task_name + " (" + to_string(log.end_reason()) + ")";
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << ok << "/100 scored 1.0 within timeout in " << secs << " s";
  if (!first_fail.empty()) d << "; first failure " << first_fail;
  return {ok >= 95 && secs < 300.0, d.str()};
}

Outcome cooking_oracle() {
  const auto& book = RecipeBook::standard();
  const std::vector<ItemId> items = {"cooked_mutton", "baked_potato", "cake", "golden_carrot", "mushroom_stew", "bread"};
  std::vector<std::vector<ItemId>> sets;
  for (const auto& it : items) sets.push_back({it});
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size(); ++j) sets.push_back({items[i], items[j]});
  }
  int ok = 0;
  int runs = 0;
  std::string failed;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    CookingOptions o;
    o.agent_count = 2;
    o.items = sets[k];
    o.item_count = static_cast<int>(sets[k].size());
    o.split = "test";
    for (std::uint64_t seed : {11ull, 12ull}) {
      const TaskSpec t = generate_cooking_task(book, o, mix_seed(seed, k));
      ++runs;
      if (run_oracles(t, seed).final_score() >= 1.0) {
        ++ok;
      } else if (failed.empty()) {
        failed = t.task_name;
      }
    }
  }
  // Hell's Kitchen
  CookingOptions hk;
  hk.agent_count = 2;
  hk.hells_kitchen = true;
  hk.items = {"baked_potato", "cake"};
  hk.item_count = 2;
  hk.split = "test";
  int hk_ok = 0;
  int hk_requests = 0;
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    const TaskSpec t = generate_cooking_task(book, hk, seed);
    const EpisodeLog log = run_oracles(t, seed);
    if (log.final_score() >= 1.0) ++hk_ok;
    for (const auto& e : log.events) {
      if (e.at("type") == "chat" && e.at("body").get<std::string>().find("send me the recipe for") != std::string::npos) {
        ++hk_requests;
        break;
      }
    }
  }
  std::ostringstream d;
  d << ok << "/" << runs << " single and pair runs scored 1.0; Hell's Kitchen " << hk_ok
    << "/3 scored 1.0, recipe request present in " << hk_requests << "/3";
  if (!failed.empty()) d << "; first failure " << failed;
  return {ok == runs && hk_ok == 3 && hk_requests == 3, d.str()};
}

BlueprintConfig config_for(int i) {
  BlueprintConfig c;
  c.materials = i % 3;
  c.rooms = (i / 3) % 3;
  c.windows = (i / 9) % 3;
  c.carpets = (i / 2) % 3;
  c.variant = i;
  return c;
}

/// Independent cell counter over the raw level grids.
std::pair<int, int> count_matches(const WorldState& w, const Blueprint& bp) {
  int total = 0;
  int match = 0;
  for (int l = 0; l < bp.level_count(); ++l) {
    for (int z = 0; z < bp.depth; ++z) {
      for (int x = 0; x < bp.width; ++x) {
        const std::string& m = bp.levels[l][z][x];
        if (m == "air") continue;
        ++total;
        auto it = w.grid.find(bp.origin.offset(x, l, z));
        if (it != w.grid.end() && it->second == m) ++match;
      }
    }
  }
  return {match, total};
}

Outcome blueprint_fix_closure() {
  static const std::regex place(R"(^Place ([a-z_]+) at coordinates X: (-?\d+), Y: (-?\d+), Z: (-?\d+)$)");
  static const std::regex remove(R"(^Remove the ([a-z_]+) at coordinates X: (-?\d+), Y: (-?\d+), Z: (-?\d+)$)");
  int closed = 0;
  int halves = 0;
  std::set<std::pair<int, int>> mr;
  std::string problem;
  for (int i = 0; i < 30; ++i) {
    const BlueprintConfig c = config_for(i);
    mr.insert({c.materials, c.rooms});
    const TaskSpec task = generate_construction_task(c, static_cast<std::uint64_t>(100 + i));
    const Blueprint& bp = *task.blueprint;
    WorldState w = spawn_world_from_spec(task.world, 5);
    std::istringstream diff(blueprint_diff(w, bp));
    std::string line;
    int applied = 0;
    while (std::getline(diff, line)) {
      std::smatch m;
      if (std::regex_match(line, m, place)) {
        w.grid[{std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4])}] = m[1];
        ++applied;
      } else if (std::regex_match(line, m, remove)) {
        w.grid.erase({std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4])});
        ++applied;
      }
    }
    const double s = score_blueprint(w, bp).value;
    const auto [match, total] = count_matches(w, bp);
    if (s == 1.0 && match == total && applied >= total) {
      ++closed;
    } else if (problem.empty()) {
      problem = c.name() + " scored " + std::to_string(s);
    }

    // exactly half of the cells, chosen at random
    WorldState half = spawn_world_from_spec(task.world, 5);
    auto cells = bp.cells();
    Rng rng(static_cast<std::uint64_t>(7000 + i));
    rng.shuffle(cells);
    const std::size_t k = cells.size() / 2;
    for (std::size_t j = 0; j < k; ++j) half.grid[cells[j].pos] = cells[j].material;
    const double hs = score_blueprint(half, bp).value;
    const auto [hm, ht] = count_matches(half, bp);
    const double tol = 1.0 / (2.0 * ht);
    if (std::abs(hs - 0.5) <= tol + 1e-12 && std::abs(hs - static_cast<double>(hm) / ht) < 1e-12) {
      ++halves;
    } else if (problem.empty()) {
      problem = c.name() + " half-built scored " + std::to_string(hs);
    }
  }
  std::ostringstream d;
  d << closed << "/30 closed to 1.000, " << halves << "/30 half-built within 1/(2N) of 0.5, " << mr.size()
    << "/9 (m,r) levels covered";
  if (!problem.empty()) d << "; " << problem;
  return {closed == 30 && halves == 30 && mr.size() == 9, d.str()};
}

Outcome timeout_formula() {
  int ok = 0;
  int n = 0;
  for (int r = 0; r <= 2; ++r) {
    for (int m = 0; m <= 2; ++m) {
      for (std::uint64_t seed = 0; seed < 4; ++seed) {
        BlueprintConfig c{m, r, static_cast<int>(seed % 3), static_cast<int>((seed + 1) % 3), static_cast<int>(seed)};
        const TaskSpec t = generate_construction_task(c, seed);
        ++n;
        if (t.timeout_seconds == 600 + 300 * r) ++ok;
      }
    }
  }
  return {ok == n, std::to_string(ok) + "/" + std::to_string(n) + " tasks with timeout_seconds = 600 + 300r"};
}

Outcome complexity_monotonicity() {
  double mat[3] = {0, 0, 0};
  double rooms[3] = {0, 0, 0};
  for (int level = 0; level <= 2; ++level) {
    for (int s = 0; s < 30; ++s) {
      BlueprintConfig a{level, s % 3, (s / 3) % 3, (s / 9) % 3, s};
      mat[level] += static_cast<double>(generate_blueprint(a, static_cast<std::uint64_t>(s)).materials_used().size()) / 30;
      BlueprintConfig b{s % 3, level, (s / 3) % 3, (s / 9) % 3, s};
      rooms[level] += static_cast<double>(generate_blueprint(b, static_cast<std::uint64_t>(s)).room_count) / 30;
    }
  }
  std::ostringstream d;
  d << "mean unique materials " << mat[0] << " < " << mat[1] << " < " << mat[2] << "; mean rooms " << rooms[0]
    << " < " << rooms[1] << " < " << rooms[2];
  return {mat[0] < mat[1] && mat[1] < mat[2] && rooms[0] < rooms[1] && rooms[1] < rooms[2], d.str()};
}

Outcome split_hygiene() {
  const auto& book = RecipeBook::standard();
  const std::set<ItemId> published_train = {"cooked_beef",   "cooked_porkchop", "cooked_chicken", "cooked_rabbit",
                                        "beetroot_soup", "rabbit_stew",     "suspicious_stew", "cookie",
                                        "pumpkin_pie",   "golden_apple"};
  const std::set<ItemId> published_test = {"cooked_mutton", "baked_potato", "cake", "golden_carrot", "mushroom_stew", "bread"};
  auto [ctrain, ctest] = split_train_test(book, "cooking", 99);
  std::set<ItemId> train_items;
  std::set<ItemId> test_items;
  for (const auto& t : ctrain) {
    for (const auto& [it, n] : t.target_items) train_items.insert(it);
  }
  for (const auto& t : ctest) {
    for (const auto& [it, n] : t.target_items) test_items.insert(it);
  }
  std::set<ItemId> overlap;
  std::set_intersection(train_items.begin(), train_items.end(), test_items.begin(), test_items.end(),
                        std::inserter(overlap, overlap.begin()));
  const bool cooking_ok = train_items == published_train && test_items == published_test && overlap.empty() &&
                          cooking_train_items().size() == 10 && cooking_test_items().size() == 6;

  auto [btrain, btest] = split_train_test(book, "construction", 99);
  std::set<std::string> htrain;
  std::set<std::string> htest;
  for (const auto& t : btrain) htrain.insert(t.blueprint->hash());
  for (const auto& t : btest) htest.insert(t.blueprint->hash());
  std::size_t shared = 0;
  for (const auto& h : htest) shared += htrain.count(h);
  const bool construction_ok = btrain.size() == 2000 && btest.size() == 30 && shared == 0;

  std::ostringstream d;
  d << "cooking goal items " << train_items.size() << " train / " << test_items.size() << " test, overlap "
    << overlap.size() << (cooking_ok ? ", lists match" : ", lists differ") << "; construction " << btrain.size()
    << "/" << btest.size() << " tasks, " << htrain.size() << "/" << htest.size() << " distinct hashes, " << shared
    << " shared";
  return {cooking_ok && construction_ok, d.str()};
}

// synthetic log: header, `turns` assistant messages for one agent, end score
EpisodeLog synthetic_log(const std::string& task_type, double score, int turns) {
  EpisodeLog log;
  TaskSpec t;
  t.task_name = "synthetic_" + task_type;
  t.task_type = task_type;
  t.agent_names = {"Andy_0"};
  log.events.push_back({{"type", "header"}, {"task", t.to_json()}, {"seed", 0}, {"agents", t.agent_names}});
  log.events.push_back(
      {{"type", "message"}, {"tick", 0}, {"agent", "Andy_0"}, {"role", "system"}, {"content", "prompt"}});
  for (int i = 0; i < turns; ++i) {
    log.events.push_back(
        {{"type", "message"}, {"tick", i + 1}, {"agent", "Andy_0"}, {"role", "assistant"}, {"content", "!stats"}});
    log.events.push_back(
        {{"type", "message"}, {"tick", i + 1}, {"agent", "Andy_0"}, {"role", "system"}, {"content", "ok"}});
  }
  log.events.push_back({{"type", "end"},
                        {"tick", turns + 1},
                        {"reason", score >= 1 ? "completed" : "timeout"},
                        {"score", {{"value", score}, {"kind", "binary"}, {"detail", nlohmann::json::object()}}}});
  return log;
}

/// Top quarter by sorting: the ceil(n/4)-th best score is the threshold, ties kept.
std::set<int> sorting_oracle_top_quarter(const std::vector<double>& scores) {
  std::vector<double> sorted = scores;
  std::sort(sorted.rbegin(), sorted.rend());
  const std::size_t k = (sorted.size() + 3) / 4;
  const double thr = sorted[k - 1];
  std::set<int> kept;
  for (int i = 0; i < static_cast<int>(scores.size()); ++i) {
    if (scores[static_cast<std::size_t>(i)] >= thr) kept.insert(i);
  }
  return kept;
}

Outcome dataset_pipeline() {
  Rng rng(31337);
  int filter_ok = 0;
  const int trials = 200;
  for (int trial = 0; trial < trials; ++trial) {
    const int n = rng.uniform(1, 40);
    std::vector<EpisodeLog> bin;
    std::vector<EpisodeLog> cons;
    std::vector<double> bscores;
    std::vector<double> cscores;
    for (int i = 0; i < n; ++i) {
      const double b = rng.uniform(0, 1);
      const double c = rng.uniform(0, 10) / 10.0;  // coarse, so ties are common
      bscores.push_back(b);
      cscores.push_back(c);
      bin.push_back(synthetic_log("cooking", b, i + 1));
      cons.push_back(synthetic_log("construction", c, i + 1));
    }
    // kept runs are identified by their (unique) turn count
    std::multiset<std::size_t> got_b;
    std::multiset<std::size_t> want_b;
    for (const auto& l : filter_runs(bin, FilterPolicy::parse("success"))) got_b.insert(l.assistant_turns());
    for (int i = 0; i < n; ++i) {
      if (bscores[static_cast<std::size_t>(i)] == 1.0) want_b.insert(static_cast<std::size_t>(i + 1));
    }
    std::multiset<std::size_t> got_c;
    std::multiset<std::size_t> want_c;
    for (const auto& l : filter_runs(cons, FilterPolicy::parse("top25"))) got_c.insert(l.assistant_turns());
    for (int i : sorting_oracle_top_quarter(cscores)) want_c.insert(static_cast<std::size_t>(i + 1));
    if (got_b == want_b && got_c == want_c) ++filter_ok;
  }
  // spec examples
  std::vector<EpisodeLog> ten;
  for (int i = 1; i <= 10; ++i) ten.push_back(synthetic_log("construction", i / 10.0, 1));
  const bool ten_ok = filter_runs(ten, FilterPolicy::parse("top25")).size() == 3;

  // transition counts against hand counts
  bool counts_ok = true;
  for (int turns : {0, 1, 5, 29}) {
    const EpisodeLog l = synthetic_log("cooking", 1, turns);
    counts_ok = counts_ok && emit_transitions(l).size() == static_cast<std::size_t>(turns);
  }
  std::vector<EpisodeLog> synth;
  for (int i = 0; i < 10; ++i) synth.push_back(synthetic_log("crafting", 1, 5));
  const DatasetStats s10 = dataset_stats(synth, synth);
  counts_ok = counts_ok && s10.transitions == 50 && s10.avg_trajectory_length == 5.0;

  const std::string header = render_stats({}).substr(0, render_stats({}).find('\n'));
  const bool schema_ok = header == "Task\tTrain\tTest\tTrials\tSuccess\tTransitions\tAvg Traj. Len.";

  // bundled oracle corpus
  const fs::path corpus = fs::path(MINECOLLAB_SOURCE_DIR) / "data" / "corpus";
  const std::map<std::string, double> published = {{"cooking", 29.7}, {"crafting", 19.2}, {"construction", 111.5}};
  std::map<std::string, std::vector<EpisodeLog>> by_domain;
  for (const auto& log : load_logs(corpus)) by_domain[log_domain(log)].push_back(log);
  bool band_ok = by_domain.size() == 3;
  std::ostringstream bands;
  for (const auto& [domain, logs] : by_domain) {
    const auto kept = filter_runs(logs, FilterPolicy::parse(domain == "construction" ? "top25" : "success"));
    const DatasetStats st = dataset_stats(logs, kept);
    const double ref = published.at(domain);
    const bool in = st.avg_trajectory_length >= ref / std::sqrt(10.0) && st.avg_trajectory_length <= ref * std::sqrt(10.0);
    band_ok = band_ok && in;
    bands << " " << domain << " " << st.avg_trajectory_length << " over " << st.kept_runs << " runs (published " << ref
          << (in ? ", in band)" : ", outside band)") << ";";
  }

  std::ostringstream d;
  d << filter_ok << "/" << trials << " random filter trials match the sorting oracle; ten-run top25 kept "
    << filter_runs(ten, FilterPolicy::parse("top25")).size() << "; transition counts "
    << (counts_ok ? "match" : "differ") << "; schema " << (schema_ok ? "ok" : "wrong") << "; corpus:" << bands.str();
  return {filter_ok == trials && ten_ok && counts_ok && schema_ok && band_ok, d.str()};
}

// ---------------------------------------------------------------------------

struct Bench {
  WorldState world;
  ConversationManager conv;
  TaskSpec task;
  std::vector<Delivery> notices;

  CommandResult run(const AgentId& actor, const std::string& text) {
    auto parsed = parse_first_command(text, CommandRegistry::standard());
    if (!parsed.ok()) return CommandResult::failure(parsed.message);
    CommandContext ctx{world, RecipeBook::standard(), conv, &task, &notices};
    CommandResult r = execute(ctx, actor, parsed.command);
    while (r.deferred) {
      for (auto& c : advance_tick(world)) {
        if (c.agent == actor) return c.result;
      }
    }
    return r;
  }
};

Bench make_bench(const TaskSpec& task) {
  Bench b;
  b.task = task;
  b.world = reset(task, 3);
  b.conv = ConversationManager(task.agent_names);
  return b;
}

Outcome command_goldens() {
  const auto& book = RecipeBook::standard();
  int ok = 0;
  int n = 0;
  std::set<std::string> commands;
  std::string first_bad;
  auto check = [&](const std::string& cmd, const std::string& got, const std::string& want) {
    ++n;
    commands.insert(cmd.substr(0, cmd.find('(')));
    if (got == want) {
      ++ok;
    } else if (first_bad.empty()) {
      first_bad = cmd + " gave \"" + got + "\"";
    }
  };
  auto check_prefix = [&](const std::string& cmd, const std::string& got, const std::string& want) {
    check(cmd, got.substr(0, want.size()), want);
  };

  TaskSpec craft = generate_crafting_task(book, 2, "bookshelf", PlanBlocked::kBoth, 4);
  Bench b = make_bench(craft);
  const AgentId a0 = craft.agent_names[0];
  const AgentId a1 = craft.agent_names[1];
  b.world.agent(a0).inventory.clear();
  b.world.agent(a1).inventory.clear();

  check("!craftRecipe", b.run(a0, "!craftRecipe(\"mushroom_stew\", 1)").message,
        "You do not have the resources to craft a mushroom_stew. It requires: brown_mushroom: 1, red_mushroom: 1, "
        "bowl: 1.");
  check("!searchForBlock", b.run(a0, "!searchForBlock(\"sugar_cane\", 64)").message,
        "Could not find any sugar_cane in 64 blocks.");
  b.run(a1, "!startConversation(\"" + a0 + "\", \"hi\")");
  check("!startConversation", b.run(a1, "!startConversation(\"" + a0 + "\", \"again\")").message,
        "You are already in conversation with " + a0 + ". Don't use this command to talk to them.");
  check("!inventory", b.run(a0, "!inventory").message, "\nINVENTORY: Nothing\nWEARING: Nothing\n");
  b.world.agent(a0).inventory.add("oak_planks", 1);
  b.world.agent(a0).inventory.add("string", 1);
  check("!inventory", b.run(a0, "!inventory").message, "\nINVENTORY\n- oak_planks: 1\n- string: 1\nWEARING: Nothing\n");
  check("!getCraftingPlan", b.run(a0, "!getCraftingPlan(\"bookshelf\", 1)").message,
        "You do not have access to crafting plans in this task.");
  check("!craftRecipe", b.run(a0, "!craftRecipe(\"diamond_banana\", 1)").message,
        "Could not find a recipe for diamond_banana.");
  check("!smeltItem", b.run(a0, "!smeltItem(\"raw_iron\", 1)").message, "There is no furnace nearby.");
  check("!discard", b.run(a0, "!discard(\"string\", 1)").message, "Discarded 1 string.");
  const BlockPos target = b.world.agent(a0).pos.offset(2, 0, 1);
  check("!goToCoordinates",
        b.run(a0, "!goToCoordinates(" + std::to_string(target.x) + ", " + std::to_string(target.y) + ", " +
                      std::to_string(target.z) + ", 0)")
            .message,
        "You have reached at " + target.str() + ".");
  b.world.agent(a0).inventory.add("oak_log", 1);
  b.run(a0, "!searchForBlock(\"crafting_table\", 32)");
  check("!craftRecipe", b.run(a0, "!craftRecipe(\"oak_planks\", 1)").message,
        "Successfully crafted oak_planks, you now have 5 oak_planks.");
  check_prefix("!givePlayer", b.run(a0, "!givePlayer(\"" + a1 + "\", \"oak_planks\", 2)").message,
               "You have reached " + a1 + ".\nDiscarded 2 oak_planks.\n" + a1 + " received oak_planks.");
  check("!nonsense", b.run(a0, "!fly()").message, "Command !fly does not exist. Use !help to see all commands.");
  check("!getBlueprint", b.run(a0, "!getBlueprint").message, "There is no blueprint for this task.");

  TaskSpec build = generate_construction_task({0, 0, 0, 0, 0}, 8);
  Bench c = make_bench(build);
  const AgentId c0 = build.agent_names[0];
  const Blueprint& bp = *build.blueprint;
  for (const auto& cell : bp.cells(0)) c.world.grid[cell.pos] = cell.material;
  check("!checkBlueprintLevel", c.run(c0, "!checkBlueprintLevel(0)").message, "Level 0 is complete");
  const auto missing = bp.cells(1).front();
  check_prefix("!checkBlueprint", c.run(c0, "!checkBlueprint").message,
               "Level 0 is complete\nLevel 1 requires the following fixes:\nPlace " + missing.material + " at coordinates X: " +
                   std::to_string(missing.pos.x) + ", Y: " + std::to_string(missing.pos.y) +
                   ", Z: " + std::to_string(missing.pos.z));
  // terracotta placement, as in the construction transcript
  AgentBody& body = c.world.agent(c0);
  body.capabilities = {"*"};
  body.inventory.add("terracotta", 18);
  BlockPos spot = body.pos;
  check("!placeHere", c.run(c0, "!placeHere(\"terracotta\")").message, "Placed terracotta at (" + spot.str() + ").");
  check("!inventory", std::to_string(c.world.agent(c0).inventory.count("terracotta")), "17");

  std::ostringstream d;
  d << ok << "/" << n << " templates byte-exact across " << commands.size() << " commands";
  if (!first_bad.empty()) d << "; first mismatch " << first_bad;
  return {ok == n && commands.size() >= 12, d.str()};
}

std::string body_of(const std::string& content) {
  const std::string tag = kOtherBotTag;
  const auto at = content.find(tag);
  return at == std::string::npos ? content : content.substr(at + tag.size());
}

Outcome conversation_invariants() {
  Rng rng(777);
  int bad_trials = 0;
  std::string why;
  long deliveries = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = rng.uniform(3, 5);
    std::vector<AgentId> agents;
    for (int i = 0; i < n; ++i) agents.push_back("A" + std::to_string(i));
    ConversationManager cm(agents);
    std::map<std::pair<AgentId, AgentId>, std::vector<std::string>> sent;
    std::map<std::pair<AgentId, AgentId>, std::vector<std::string>> got;
    int next = 0;
    bool bad = false;
    auto fail = [&](const std::string& w) {
      if (!bad && why.empty()) why = "trial " + std::to_string(trial) + ": " + w;
      bad = true;
    };
    std::map<AgentId, bool> busy;
    for (Tick t = 0; t < 300; ++t) {
      for (const auto& a : agents) {
        if (rng.uniform(0, 9) == 0) busy[a] = !busy[a];
      }
      const int op = rng.uniform(0, 9);
      const AgentId x = rng.pick(agents);
      const AgentId y = rng.pick(agents);
      if (op == 0 && x != y) {
        const std::string m = "m" + std::to_string(next++);
        const auto r = cm.start(x, y, m, t);
        if (r.reply.empty()) sent[{x, y}].push_back(m);
      } else if (op == 1 && cm.partner(x)) {
        cm.end(x, *cm.partner(x), std::nullopt, t);
      } else if (op <= 5) {
        const std::string m = "m" + std::to_string(next++);
        const auto p = cm.partner(x);
        if (cm.send(x, m, t)) sent[{x, *p}].push_back(m);
      }
      // pairwise exclusivity
      std::map<AgentId, int> open;
      for (const auto& s : cm.sessions()) {
        if (s.status != SessionStatus::kEnded) {
          ++open[s.a];
          ++open[s.b];
        }
      }
      for (const auto& [a, k] : open) {
        if (k > 1) fail(a + " in " + std::to_string(k) + " open sessions");
      }
      for (const auto& d : cm.pump([&](const AgentId& a) { return busy[a]; }, t)) {
        if (d.notice) continue;
        ++deliveries;
        if (busy[d.from] && busy[d.to]) fail("delivery while both busy");
        got[{d.from, d.to}].push_back(body_of(d.content));
      }
    }
    // drain with everyone idle, then collect what is left
    for (Tick t = 300; t < 300 + 20000; ++t) {
      for (const auto& d : cm.pump([](const AgentId&) { return false; }, t)) {
        if (!d.notice) got[{d.from, d.to}].push_back(body_of(d.content));
      }
    }
    for (const auto& m : cm.close_all()) got[{m.from, m.to}].push_back(m.body);
    if (got != sent) fail("delivered sequence differs from sent sequence");
    if (bad) ++bad_trials;
  }
  std::ostringstream d;
  d << 1000 - bad_trials << "/1000 trials keep exclusivity, FIFO exactly-once and no both-busy delivery (" << deliveries
    << " deliveries checked)";
  if (!why.empty()) d << "; " << why;
  return {bad_trials == 0, d.str()};
}

Outcome conservation_fuzz() {
  const auto& book = RecipeBook::standard();
  CookingOptions o;
  o.agent_count = 3;
  o.items = {"cake", "mushroom_stew", "cooked_mutton"};
  o.item_count = 3;
  const TaskSpec task = generate_cooking_task(book, o, 42);
  const WorldState base = reset(task, 42);
  const std::vector<std::string> items = {"potato",  "wheat",        "oak_log",     "egg",       "milk_bucket", "sugar",
                                          "bowl",    "red_mushroom", "oak_planks",  "stick",     "bread",       "mutton",
                                          "beef",    "sugar_cane",   "carrot",      "gold_nugget", "cake",      "coal"};
  const std::vector<std::string> blocks = {"potatoes", "wheat",  "carrots",   "sugar_cane", "stone",
                                           "oak_log",  "grass_block", "red_mushroom", "chest", "furnace"};
  const std::vector<std::string> mobs = {"sheep", "cow", "pig", "chicken", "rabbit"};
  const auto& agents = task.agent_names;

  auto violation = [](const WorldState& w) -> std::string {
    auto c = census(w);
    for (const auto& [item, n] : c) {
      if (n < 0) return "negative census for " + item;
    }
    for (const auto& [a, body] : w.agents) {
      for (const auto& [item, n] : body.inventory) {
        if (n <= 0) return "non-positive stack in " + a;
      }
    }
    for (const auto& [p, inv] : w.chests) {
      for (const auto& [item, n] : inv) {
        if (n <= 0) return "non-positive chest stack";
      }
    }
    for (const auto& e : w.entities) {
      if (e.kind == EntityKind::kDroppedItem && e.count <= 0) return "empty dropped item";
    }
    std::map<ItemId, long> want;
    for (const auto& [item, n] : w.ledger) {
      if (n != 0) want[item] = n;
    }
    std::map<ItemId, long> have;
    for (const auto& [item, n] : c) {
      if (n != 0) have[item] = n;
    }
    if (want != have) return "census differs from ledger";
    return {};
  };

  Rng rng(99);
  int bad = 0;
  long commands = 0;
  long accepted = 0;
  std::string why;
  const auto t0 = Clock::now();
  for (int seq = 0; seq < 10000; ++seq) {
    WorldState w = base;
    ConversationManager conv(agents);
    std::vector<Delivery> notices;
    CommandContext ctx{w, book, conv, &task, &notices};
    std::string err;
    const int len = rng.uniform(3, 12);
    for (int k = 0; k < len && err.empty(); ++k) {
      const AgentId& a = rng.pick(agents);
      const std::string item = rng.pick(items);
      const double qty = rng.uniform(-1, 6);
      Command cmd;
      switch (rng.uniform(0, 13)) {
        case 0: cmd = {"collectBlocks", {rng.pick(blocks), qty}}; break;
        case 1: cmd = {"attack", {rng.pick(mobs)}}; break;
        case 2: cmd = {"craftRecipe", {item, qty}}; break;
        case 3: cmd = {"smeltItem", {item, qty}}; break;
        case 4: cmd = {"givePlayer", {rng.pick(agents), item, qty}}; break;
        case 5: cmd = {"putInChest", {item, qty}}; break;
        case 6: cmd = {"takeFromChest", {item, qty}}; break;
        case 7: cmd = {"discard", {item, qty}}; break;
        case 8: cmd = {"placeHere", {item}}; break;
        case 9: cmd = {"searchForBlock", {rng.pick(blocks), 32.0}}; break;
        case 10: cmd = {"goToPlayer", {rng.pick(agents), 3.0}}; break;
        case 11: cmd = {"stop", {}}; break;
        case 12: cmd = {"goToCoordinates", {double(rng.uniform(-15, 15)), double(kGroundY), double(rng.uniform(-15, 15)), 1.0}}; break;
        default: cmd = {"inventory", {}}; break;
      }
      try {
        if (execute(ctx, a, cmd).ok()) ++accepted;
      } catch (const Error&) {
        // rejected arguments are fine; only state matters here
      }
      ++commands;
      err = violation(w);
      const int ticks = rng.uniform(0, 25);
      for (int t = 0; t < ticks && err.empty(); ++t) {
        advance_tick(w);
        err = violation(w);
      }
    }
    if (!err.empty()) {
      ++bad;
      if (why.empty()) why = "sequence " + std::to_string(seq) + ": " + err;
    }
  }
  std::ostringstream d;
  d << 10000 - bad << "/10000 sequences (" << commands << " commands, " << accepted << " accepted) kept conservation and non-negative counts in "
    << seconds_since(t0) << " s";
  if (!why.empty()) d << "; " << why;
  return {bad == 0, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<std::string> only;
  for (int i = 1; i < argc; ++i) only.insert(argv[i]);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"determinism_golden", determinism},
      {"oracle_crafting_completeness", crafting_completeness},
      {"oracle_cooking", cooking_oracle},
      {"blueprint_fix_closure", blueprint_fix_closure},
      {"timeout_formula", timeout_formula},
      {"complexity_monotonicity", complexity_monotonicity},
      {"split_hygiene", split_hygiene},
      {"dataset_pipeline", dataset_pipeline},
      {"command_golden_suite", command_goldens},
      {"conversation_invariants", conversation_invariants},
      {"conservation_fuzz", conservation_fuzz},
  };
  for (const auto& [name, fn] : criteria) {
    if (!only.empty() && !only.count(name)) continue;
    try {
      report(name, fn());
    } catch (const std::exception& e) {
      report(name, {false, std::string("exception: ") + e.what()});
    }
  }
  return g_failures == 0 ? 0 : 1;
}
