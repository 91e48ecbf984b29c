#include "minecollab/episode.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "minecollab/command.hpp"
#include "minecollab/conversation.hpp"
#include "minecollab/recipes.hpp"

namespace minecollab {

std::string to_string(EndReason r) {
  switch (r) {
    case EndReason::kCompleted: return "completed";
    case EndReason::kTimeout: return "timeout";
    case EndReason::kAgentError: return "agent_error";
  }
  return "timeout";
}

EndReason parse_end_reason(const std::string& s) {
  if (s == "completed") return EndReason::kCompleted;
  if (s == "timeout") return EndReason::kTimeout;
  if (s == "agent_error") return EndReason::kAgentError;
  throw Error(ErrorCode::kParse, "unknown end reason " + s);
}

// ---------------------------------------------------------------------------
// Log

const nlohmann::json& EpisodeLog::header() const {
  for (const auto& e : events) {
    if (e.at("type") == "header") return e;
  }
  throw Error(ErrorCode::kParse, "episode log has no header");
}

const nlohmann::json& EpisodeLog::end() const {
  for (auto it = events.rbegin(); it != events.rend(); ++it) {
    if (it->at("type") == "end") return *it;
  }
  throw Error(ErrorCode::kParse, "episode log has no end record");
}

double EpisodeLog::final_score() const { return end().at("score").at("value").get<double>(); }
EndReason EpisodeLog::end_reason() const { return parse_end_reason(end().at("reason").get<std::string>()); }
Tick EpisodeLog::end_tick() const { return end().at("tick").get<Tick>(); }
std::string EpisodeLog::task_type() const { return header().at("task").at("task_type").get<std::string>(); }

std::vector<Transition> EpisodeLog::transitions() const {
  std::vector<Transition> out;
  std::map<AgentId, std::vector<ChatMessage>> context;
  for (const auto& e : events) {
    if (e.at("type") != "message") continue;
    const AgentId agent = e.at("agent").get<std::string>();
    ChatMessage m{e.at("role").get<std::string>(), e.at("content").get<std::string>()};
    auto& ctx = context[agent];
    if (m.role == "assistant") out.push_back({agent, ctx, m.content, e.at("tick").get<Tick>()});
    ctx.push_back(std::move(m));
  }
  return out;
}

std::size_t EpisodeLog::assistant_turns() const {
  return static_cast<std::size_t>(std::count_if(events.begin(), events.end(), [](const nlohmann::json& e) {
    return e.at("type") == "message" && e.at("role") == "assistant";
  }));
}

std::string EpisodeLog::to_jsonl() const {
  std::string out;
  for (const auto& e : events) out += e.dump() + "\n";
  return out;
}

EpisodeLog EpisodeLog::from_jsonl(const std::string& text) {
  EpisodeLog log;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      log.events.push_back(nlohmann::json::parse(line));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kParse, std::string("bad episode log line: ") + e.what());
    }
  }
  return log;
}

EpisodeLog EpisodeLog::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return from_jsonl(ss.str());
}

void EpisodeLog::save(const std::filesystem::path& path) const {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << to_jsonl();
}

// ---------------------------------------------------------------------------
// Reset

void reset(WorldState& world, const TaskSpec& task, std::uint64_t seed) {
  world = spawn_world_from_spec(task.world, seed);
  for (std::size_t i = 0; i < task.agent_names.size(); ++i) {
    const AgentId& name = task.agent_names[i];
    Inventory inv;
    if (auto it = task.initial_inventories.find(name); it != task.initial_inventories.end()) inv = it->second;
    std::set<std::string> caps;
    if (auto it = task.capabilities.find(name); it != task.capabilities.end()) caps = it->second;
    add_agent(world, name, inv, caps, mix_seed(seed, i + 1));
  }
}

WorldState reset(const TaskSpec& task, std::uint64_t seed) {
  WorldState w;
  reset(w, task, seed);
  return w;
}

// ---------------------------------------------------------------------------
// Runner

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

class Runner {
 public:
  explicit Runner(const EpisodeConfig& cfg)
      : cfg_(cfg),
        conv_(cfg.task.agent_names),
        progress_(cfg.progress_path.empty() ? ProgressStore() : ProgressStore(cfg.progress_path)) {}

  EpisodeLog run() {
    const TaskSpec& task = cfg_.task;
    for (const auto& a : task.agent_names) {
      if (!cfg_.endpoints.count(a) || !cfg_.endpoints.at(a)) {
        throw Error(ErrorCode::kInvalidSpec, "no endpoint for agent " + a);
      }
    }
    order_ = task.agent_names;
    std::sort(order_.begin(), order_.end());
    reset(world_, task, cfg_.seed);

    nlohmann::json header = {{"type", "header"},
                             {"task", task.to_json()},
                             {"seed", cfg_.seed},
                             {"agents", task.agent_names},
                             {"max_ticks", task.max_ticks()}};
    log_.events.push_back(header);

    EndReason reason = EndReason::kTimeout;
    Score score;
    try {
      for (const auto& a : task.agent_names) {
        AgentBrief brief = make_brief(task, a, cfg_.seed);
        cfg_.endpoints.at(a)->begin(brief);
        message(a, "system", brief.system_prompt);
      }
      score = check_score(true);
      while (world_.tick < task.max_ticks()) {
        for (auto& c : advance_tick(world_)) message(c.agent, "system", present_completion(c.result));
        auto busy = [&](const AgentId& a) { return world_.agent(a).busy(); };
        for (const auto& d : conv_.pump(busy, world_.tick)) deliver(d);
        for (const auto& a : order_) {
          if (!world_.agent(a).busy()) poll(a);
        }
        score = check_score(false);
        if (score.value >= 1.0) {
          reason = EndReason::kCompleted;
          break;
        }
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kProtocolViolation && e.code() != ErrorCode::kIo) throw;
      reason = EndReason::kAgentError;
      log_.events.push_back({{"type", "error"}, {"tick", world_.tick}, {"message", e.what()}});
      score = check_score(false);
    }

    // agents leave the world; nothing they send afterwards is accepted
    for (auto& [name, body] : world_.agents) {
      cancel_action(world_, name);
      body.removed = true;
    }
    conv_.close_all();
    log_.events.push_back({{"type", "end"},
                           {"tick", world_.tick},
                           {"reason", to_string(reason)},
                           {"score", {{"value", score.value}, {"kind", score.kind_name()}, {"detail", score.detail}}},
                           {"world_hash", world_hash(world_)}});
    for (const auto& a : task.agent_names) {
      try {
        cfg_.endpoints.at(a)->finish(to_string(reason), score.value);
      } catch (const Error&) {
        // a vanished endpoint cannot be told the result
      }
    }
    return std::move(log_);
  }

 private:
  void message(const AgentId& agent, const std::string& role, const std::string& content) {
    log_.events.push_back(
        {{"type", "message"}, {"tick", world_.tick}, {"agent", agent}, {"role", role}, {"content", content}});
    if (role != "assistant") cfg_.endpoints.at(agent)->observe({role, content}, world_.tick);
  }

  void deliver(const Delivery& d) {
    if (!d.notice) {
      log_.events.push_back({{"type", "chat"},
                             {"tick", d.tick},
                             {"from", d.from},
                             {"to", d.to},
                             {"status", to_string(d.status)},
                             {"body", d.content}});
    }
    message(d.to, d.notice ? "system" : "user", d.content);
  }

  void poll(const AgentId& agent) {
    std::string text = cfg_.endpoints.at(agent)->poll(world_.tick);
    if (text.empty()) return;
    message(agent, "assistant", text);
    const ParseResult pr = parse_first_command(text, CommandRegistry::standard());
    const bool conversation_cmd =
        pr.ok() && (pr.command.name == "startConversation" || pr.command.name == "endConversation");
    if (!conversation_cmd) {
      // prose before the command goes to the current partner
      const std::string chat = trim(text.substr(0, std::min(pr.offset, text.size())));
      if (!chat.empty()) conv_.send(agent, chat, world_.tick);
    }
    if (pr.status == ParseResult::Status::kNone) return;
    if (!pr.ok()) {
      log_.events.push_back({{"type", "command"},
                             {"tick", world_.tick},
                             {"agent", agent},
                             {"command", text.substr(pr.offset)},
                             {"status", "rejected"}});
      message(agent, "system", pr.message);
      return;
    }
    std::vector<Delivery> notices;
    CommandContext ctx{world_, RecipeBook::standard(), conv_, &cfg_.task, &notices};
    CommandResult result;
    try {
      result = execute(ctx, agent, pr.command);
    } catch (const Error& e) {
      result = CommandResult::failure(e.what());
    }
    std::string status = result.deferred ? "started" : result.ok() ? "ok" : "error";
    log_.events.push_back({{"type", "command"},
                           {"tick", world_.tick},
                           {"agent", agent},
                           {"command", render_command(pr.command)},
                           {"status", status}});
    if (!result.deferred && !result.message.empty()) {
      message(agent, "system", present(*CommandRegistry::standard().find(pr.command.name), result));
    }
    for (const auto& d : notices) deliver(d);
  }

  Score check_score(bool force_log) {
    Score s = score_task(world_, cfg_.task, progress_);
    if (force_log || !last_score_ || *last_score_ != s.value) {
      log_.events.push_back({{"type", "score"}, {"tick", world_.tick}, {"value", s.value}});
      last_score_ = s.value;
    }
    return s;
  }

  const EpisodeConfig& cfg_;
  EpisodeLog log_;
  WorldState world_;
  ConversationManager conv_;
  ProgressStore progress_;
  std::vector<AgentId> order_;
  std::optional<double> last_score_;
};

}  // namespace

EpisodeLog run_episode(const EpisodeConfig& cfg) { return Runner(cfg).run(); }

// ---------------------------------------------------------------------------
// Replay

ReplayEndpoint::ReplayEndpoint(const EpisodeLog& log, const AgentId& agent) {
  for (const auto& e : log.events) {
    if (e.at("type") == "message" && e.at("role") == "assistant" && e.at("agent") == agent) {
      turns_[e.at("tick").get<Tick>()] = e.at("content").get<std::string>();
    }
  }
}

std::string ReplayEndpoint::poll(Tick tick) {
  auto it = turns_.find(tick);
  return it == turns_.end() ? std::string() : it->second;
}

EpisodeLog replay(const EpisodeLog& log) {
  const auto& h = log.header();
  EpisodeConfig cfg;
  cfg.task = TaskSpec::from_json(h.at("task"));
  cfg.seed = h.at("seed").get<std::uint64_t>();
  for (const auto& a : cfg.task.agent_names) cfg.endpoints[a] = std::make_shared<ReplayEndpoint>(log, a);
  return run_episode(cfg);
}

// ---------------------------------------------------------------------------
// Suites

nlohmann::json grouping_keys(const TaskSpec& task) {
  nlohmann::json k;
  k["task_type"] = task.task_type;
  k["agent_count"] = task.agent_count();
  k["plan_blocked"] = to_string(task.plan_blocked);
  k["m"] = task.blueprint ? nlohmann::json(task.blueprint->config.materials) : nlohmann::json();
  k["r"] = task.blueprint ? nlohmann::json(task.blueprint->config.rooms) : nlohmann::json();
  return k;
}

nlohmann::json aggregate(const std::vector<SuiteResult>& results) {
  std::map<std::string, std::pair<nlohmann::json, std::vector<double>>> groups;
  for (const auto& r : results) {
    if (!r.error.empty()) continue;
    auto& g = groups[r.keys.dump()];
    g.first = r.keys;
    g.second.push_back(r.score);
  }
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [key, g] : groups) {
    double sum = 0;
    for (double v : g.second) sum += v;
    out.push_back({{"keys", g.first},
                   {"runs", g.second.size()},
                   {"mean_score", sum / static_cast<double>(g.second.size())}});
  }
  return out;
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json j;
  auto& rs = j["results"] = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json e = {{"task_name", r.task_name}, {"keys", r.keys},         {"score", r.score},
                        {"end_reason", r.end_reason}, {"end_tick", r.end_tick}};
    if (!r.error.empty()) e["error"] = r.error;
    rs.push_back(e);
  }
  j["groups"] = groups;
  return j;
}

SuiteReport run_suite(const std::vector<SuiteEntry>& entries, const EndpointFactory& factory,
                      const std::optional<std::filesystem::path>& log_dir) {
  SuiteReport report;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const SuiteEntry& entry = entries[i];
    SuiteResult r;
    r.task_name = entry.task.task_name;
    r.keys = grouping_keys(entry.task);
    try {
      EpisodeConfig cfg;
      cfg.task = entry.task;
      cfg.seed = entry.seed;
      for (std::size_t k = 0; k < entry.task.agent_names.size(); ++k) {
        const std::string& kind = entry.agent_kinds.empty() ? std::string("oracle")
                                  : k < entry.agent_kinds.size() ? entry.agent_kinds[k]
                                                                  : entry.agent_kinds.back();
        cfg.endpoints[entry.task.agent_names[k]] = factory(kind, entry.task, entry.task.agent_names[k]);
      }
      EpisodeLog log = run_episode(cfg);
      r.score = log.final_score();
      r.end_reason = to_string(log.end_reason());
      r.end_tick = log.end_tick();
      if (log_dir) {
        std::string idx = std::to_string(i);
        idx.insert(0, idx.size() < 4 ? 4 - idx.size() : 0, '0');
        const std::string name = entry.task.task_name.empty() ? entry.task.task_type : entry.task.task_name;
        log.save(*log_dir / (idx + "_" + name + ".jsonl"));
      }
    } catch (const std::exception& e) {
      r.error = e.what();
    }
    report.results.push_back(std::move(r));
  }
  report.groups = aggregate(report.results);
  return report;
}

}  // namespace minecollab
