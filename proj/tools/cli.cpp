// minecollab command line: task generation, episodes, suites and datasets.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "minecollab/dataset.hpp"
#include "minecollab/episode.hpp"
#include "minecollab/gateway.hpp"
#include "minecollab/oracle.hpp"
#include "minecollab/task.hpp"

using namespace minecollab;

namespace {

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::shared_ptr<AgentEndpoint> make_endpoint(const std::string& kind) {
  if (kind == "oracle") return make_oracle();
  throw Error(ErrorCode::kInvalidArgument, "unknown agent kind: " + kind);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  out << text;
}

struct GenerateArgs {
  std::string domain = "cooking";
  std::string split = "train";
  int count = 10;
  std::uint64_t seed = 0;
  std::string out = "tasks";
  int agents = 0;
  std::string plan_blocked;
  std::string items;
  bool hells_kitchen = false;
};

int cmd_generate(const GenerateArgs& a) {
  const auto& book = RecipeBook::standard();
  if (a.split != "train" && a.split != "test") throw Error(ErrorCode::kInvalidArgument, "split must be train or test");
  std::vector<TaskSpec> tasks;
  if (a.domain == "cooking" && (!a.items.empty() || a.hells_kitchen || a.agents > 0)) {
    // every task gets the same explicit item list (sampled per task when --items is empty)
    CookingOptions opts;
    opts.agent_count = a.agents > 0 ? a.agents : 2;
    opts.hells_kitchen = a.hells_kitchen;
    opts.split = a.split;
    opts.items = split_csv(a.items);
    opts.item_count = opts.items.empty() ? 1 : static_cast<int>(opts.items.size());
    for (int i = 0; i < a.count; ++i) {
      auto t = generate_cooking_task(book, opts, mix_seed(a.seed, static_cast<std::uint64_t>(i)));
      t.task_name += "_" + a.split + "_" + std::to_string(i);
      tasks.push_back(std::move(t));
    }
  } else if (a.domain == "crafting" && (a.agents > 0 || !a.plan_blocked.empty())) {
    // fixed agent count / blocking, targets cycle through the split
    const auto& targets = a.split == "train" ? crafting_train_targets() : crafting_test_targets();
    const PlanBlocked blocked = a.plan_blocked.empty() ? PlanBlocked::kNone : parse_plan_blocked(a.plan_blocked);
    for (int i = 0; i < a.count; ++i) {
      auto t = generate_crafting_task(book, a.agents > 0 ? a.agents : 2, targets[i % targets.size()], blocked,
                                      mix_seed(a.seed, static_cast<std::uint64_t>(i)));
      t.task_name += "_" + a.split + "_" + std::to_string(i);
      tasks.push_back(std::move(t));
    }
  } else {
    SplitSizes sizes = default_split_sizes(a.domain);
    (a.split == "train" ? sizes.train : sizes.test) = a.count;
    auto [train, test] = split_train_test(book, a.domain, a.seed, sizes);
    tasks = a.split == "train" ? std::move(train) : std::move(test);
  }
  std::filesystem::create_directories(a.out);
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    std::ostringstream name;
    name << std::setw(4) << std::setfill('0') << i << "_" << tasks[i].task_name << ".json";
    tasks[i].save(std::filesystem::path(a.out) / name.str());
  }
  std::cout << "wrote " << tasks.size() << " " << a.domain << " " << a.split << " tasks to " << a.out << "\n";
  return 0;
}

int cmd_generate_blueprint(const BlueprintConfig& c, std::uint64_t seed, const std::string& out) {
  if (!c.valid()) throw Error(ErrorCode::kInvalidSpec, "complexity levels must be 0..2");
  write_text(out, generate_blueprint(c, seed).to_json().dump(2) + "\n");
  return 0;
}

std::pair<std::string, std::uint16_t> split_address(const std::string& addr) {
  const auto colon = addr.rfind(':');
  if (colon == std::string::npos) throw Error(ErrorCode::kInvalidArgument, "address must be host:port");
  return {addr.substr(0, colon), static_cast<std::uint16_t>(std::stoi(addr.substr(colon + 1)))};
}

struct RunArgs {
  std::string task;
  std::string agents = "oracle";
  std::uint64_t seed = 0;
  std::string log;
  std::string listen = "127.0.0.1:7878";
  int poll_timeout_ms = 30000;
};

int cmd_run(const RunArgs& a) {
  EpisodeConfig cfg;
  cfg.task = TaskSpec::load(a.task);
  cfg.seed = a.seed;
  const auto kinds = split_csv(a.agents);
  std::set<AgentId> remote;
  for (std::size_t i = 0; i < cfg.task.agent_names.size(); ++i) {
    const std::string kind = kinds.empty() ? "oracle" : kinds[std::min(i, kinds.size() - 1)];
    if (kind == "remote") {
      remote.insert(cfg.task.agent_names[i]);
    } else {
      cfg.endpoints[cfg.task.agent_names[i]] = make_endpoint(kind);
    }
  }
  std::unique_ptr<Gateway> gateway;
  if (!remote.empty()) {
    const auto [host, port] = split_address(a.listen);
    gateway = std::make_unique<Gateway>(host, port);
    gateway->poll_timeout = std::chrono::milliseconds(a.poll_timeout_ms);
    gateway->episode_id = cfg.task.task_name + "-" + std::to_string(a.seed);
    std::cerr << "waiting for " << remote.size() << " agent(s) on " << host << ":" << gateway->port() << "\n";
    while (cfg.endpoints.size() < cfg.task.agent_names.size()) {
      auto ep = gateway->accept(std::chrono::minutes(10));
      if (!remote.count(ep->agent()) || cfg.endpoints.count(ep->agent())) {
        throw Error(ErrorCode::kUnknownAgent, "unexpected agent " + ep->agent());
      }
      cfg.endpoints[ep->agent()] = ep;
    }
  }
  const EpisodeLog log = run_episode(cfg);
  if (!a.log.empty()) log.save(a.log);
  std::cout << cfg.task.task_name << " score=" << log.final_score() << " reason=" << to_string(log.end_reason())
            << " ticks=" << log.end_tick() << " turns=" << log.assistant_turns() << "\n";
  return 0;
}

// Manifest: {"tasks": [paths or dirs], "agents": ["oracle", ...], "seeds": [..], "log_dir": "..."}
int cmd_run_suite(const std::string& manifest_path, const std::string& out) {
  std::ifstream in(manifest_path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + manifest_path);
  nlohmann::json m;
  try {
    m = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("bad manifest: ") + e.what());
  }
  const auto base = std::filesystem::path(manifest_path).parent_path();
  auto resolve = [&](const std::string& p) {
    std::filesystem::path path(p);
    return path.is_absolute() ? path : base / path;
  };
  std::vector<std::filesystem::path> task_files;
  for (const auto& t : m.at("tasks")) {
    const auto p = resolve(t.get<std::string>());
    if (std::filesystem::is_directory(p) && !std::filesystem::exists(p / "task.json")) {
      std::vector<std::filesystem::path> found;
      for (const auto& e : std::filesystem::directory_iterator(p)) {
        if (e.path().extension() == ".json") found.push_back(e.path());
      }
      std::sort(found.begin(), found.end());
      task_files.insert(task_files.end(), found.begin(), found.end());
    } else {
      task_files.push_back(p);
    }
  }
  const auto kinds = m.value("agents", std::vector<std::string>{"oracle"});
  const auto seeds = m.value("seeds", std::vector<std::uint64_t>{0});
  std::vector<SuiteEntry> entries;
  for (const auto& f : task_files) {
    const TaskSpec task = TaskSpec::load(f);
    for (auto s : seeds) entries.push_back({task, kinds, s});
  }
  std::optional<std::filesystem::path> log_dir;
  if (m.contains("log_dir")) log_dir = resolve(m["log_dir"].get<std::string>());
  const auto report = run_suite(
      entries, [](const std::string& kind, const TaskSpec&, const AgentId&) { return make_endpoint(kind); },
      log_dir);
  write_text(out, report.to_json().dump(2) + "\n");
  return 0;
}

int cmd_dataset(const std::string& in_dir, const std::string& policy_name, const std::string& out,
                const std::string& stats_path, int test_tasks) {
  const auto policy = FilterPolicy::parse(policy_name);
  const auto logs = load_logs(in_dir);
  if (logs.empty()) throw Error(ErrorCode::kEmptyInput, "no .jsonl logs in " + in_dir);
  std::map<std::string, std::vector<EpisodeLog>> by_domain;
  for (const auto& log : logs) by_domain[log_domain(log)].push_back(log);
  std::ofstream dst(out);
  if (!dst) throw Error(ErrorCode::kIo, "cannot write " + out);
  std::vector<DatasetStats> rows;
  for (const auto& [domain, group] : by_domain) {
    const auto kept = filter_runs(group, policy);
    for (const auto& run : kept) {
      for (const auto& t : emit_transitions(run)) dst << transition_example(run, t).dump() << "\n";
    }
    rows.push_back(dataset_stats(group, kept));
    rows.back().test = test_tasks;
  }
  const std::string table = render_stats(rows);
  std::cout << table;
  if (!stats_path.empty()) write_text(stats_path, table);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MineCollab simulator"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Generate task files");
  g->add_option("--domain", gen.domain, "cooking | crafting | construction")->required();
  g->add_option("--split", gen.split, "train | test");
  g->add_option("--count", gen.count);
  g->add_option("--seed", gen.seed);
  g->add_option("--out", gen.out, "output directory");
  g->add_option("--agents", gen.agents, "cooking/crafting: fixed agent count");
  g->add_option("--plan-blocked", gen.plan_blocked, "crafting: none | one | both");
  g->add_option("--items", gen.items, "cooking: comma separated target items");
  g->add_flag("--hells-kitchen", gen.hells_kitchen, "cooking: Hell's Kitchen variant");

  BlueprintConfig bc;
  std::uint64_t bp_seed = 0;
  std::string bp_out;
  auto* gb = app.add_subcommand("generate-blueprint", "Print a generated blueprint as JSON");
  gb->add_option("--m", bc.materials);
  gb->add_option("--r", bc.rooms);
  gb->add_option("--w", bc.windows);
  gb->add_option("--c", bc.carpets);
  gb->add_option("--variant", bc.variant);
  gb->add_option("--seed", bp_seed);
  gb->add_option("--out", bp_out);

  RunArgs run;
  auto* r = app.add_subcommand("run", "Run one episode");
  r->add_option("--task", run.task, "task file or fixture directory")->required();
  r->add_option("--agents", run.agents, "comma separated agent kinds: oracle | remote");
  r->add_option("--seed", run.seed);
  r->add_option("--log", run.log, "episode log output (JSONL)");
  r->add_option("--listen", run.listen, "gateway address for remote agents");
  r->add_option("--poll-timeout-ms", run.poll_timeout_ms, "wall-clock limit per remote poll");

  std::string echo_addr = "127.0.0.1:7878", echo_name;
  auto* ea = app.add_subcommand("echo-agent", "Connect to a gateway and answer every poll with empty text");
  ea->add_option("--connect", echo_addr);
  ea->add_option("--name", echo_name)->required();

  std::string manifest, suite_out;
  auto* rs = app.add_subcommand("run-suite", "Run every task of a manifest");
  rs->add_option("--manifest", manifest)->required();
  rs->add_option("--out", suite_out, "report file; stdout when omitted");

  std::string ds_in, ds_policy = "success", ds_out, ds_stats;
  int ds_test = 0;
  auto* ds = app.add_subcommand("dataset", "Filter logs into an SFT dataset");
  ds->add_option("--in", ds_in)->required();
  ds->add_option("--policy", ds_policy, "success | top25");
  ds->add_option("--out", ds_out)->required();
  ds->add_option("--stats", ds_stats, "write the stats table here as well");
  ds->add_option("--test-tasks", ds_test, "value for the Test column");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*g) return cmd_generate(gen);
    if (*gb) return cmd_generate_blueprint(bc, bp_seed, bp_out);
    if (*r) return cmd_run(run);
    if (*ea) {
      const auto [host, port] = split_address(echo_addr);
      std::cout << run_echo_agent(host, port, echo_name).dump() << "\n";
      return 0;
    }
    if (*rs) return cmd_run_suite(manifest, suite_out);
    if (*ds) return cmd_dataset(ds_in, ds_policy, ds_out, ds_stats, ds_test);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
