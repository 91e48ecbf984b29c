// Parsers for the command output the oracles read.

#include <regex>
#include <sstream>

#include "minecollab/conversation.hpp"
#include "minecollab/oracle.hpp"

namespace minecollab {

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

BlockPos pos_from(const std::smatch& m, std::size_t first) {
  return {std::stoi(m[first].str()), std::stoi(m[first + 1].str()), std::stoi(m[first + 2].str())};
}

}  // namespace

Inventory parse_item_list(const std::string& text) {
  static const std::regex re(R"(^- ([A-Za-z0-9_]+): (\d+)$)");
  Inventory inv;
  for (const auto& line : lines_of(text)) {
    std::smatch m;
    if (std::regex_match(line, m, re)) inv.add(m[1].str(), std::stoi(m[2].str()));
  }
  return inv;
}

std::vector<std::pair<std::string, ItemId>> parse_nearby_blocks(const std::string& text) {
  static const std::regex re(R"(^- ([A-Za-z0-9_]+)(?: \(drops ([A-Za-z0-9_]+)\))?$)");
  std::vector<std::pair<std::string, ItemId>> out;
  for (const auto& line : lines_of(text)) {
    std::smatch m;
    if (std::regex_match(line, m, re)) out.emplace_back(m[1].str(), m[2].matched ? m[2].str() : m[1].str());
  }
  return out;
}

std::vector<std::pair<std::string, ItemId>> parse_livestock(const std::string& text) {
  static const std::regex re(R"(^- ([A-Za-z0-9_]+) \(drops ([A-Za-z0-9_]+)\)$)");
  std::vector<std::pair<std::string, ItemId>> out;
  for (const auto& line : lines_of(text)) {
    std::smatch m;
    if (std::regex_match(line, m, re)) out.emplace_back(m[1].str(), m[2].str());
  }
  return out;
}

std::optional<int> parse_now_have(const std::string& text, const ItemId& item) {
  const std::regex re("you now have (\\d+) " + item + "\\b");
  std::smatch m;
  if (std::regex_search(text, m, re)) return std::stoi(m[1].str());
  return std::nullopt;
}

std::vector<std::pair<ItemId, int>> parse_requirements(const std::string& text) {
  std::vector<std::pair<ItemId, int>> out;
  const auto at = text.find("It requires: ");
  if (at == std::string::npos) return out;
  auto end = text.find(".\n", at);
  if (end == std::string::npos) end = text.rfind('.');
  const std::string list = text.substr(at + 13, end == std::string::npos ? std::string::npos : end - at - 13);
  static const std::regex re(R"(([A-Za-z0-9_]+): (\d+))");
  for (auto it = std::sregex_iterator(list.begin(), list.end(), re); it != std::sregex_iterator(); ++it) {
    out.emplace_back((*it)[1].str(), std::stoi((*it)[2].str()));
  }
  return out;
}

std::map<ItemId, std::vector<std::string>> parse_recipes(const std::string& text) {
  static const std::regex head(R"(Recipe for ([A-Za-z0-9_]+):)");
  static const std::regex step(R"(^Step \d+: (.*)$)");
  std::map<ItemId, std::vector<std::string>> out;
  std::optional<ItemId> current;
  for (const auto& line : lines_of(text)) {
    std::smatch m;
    if (std::regex_search(line, m, head)) {
      current = m[1].str();
      out[*current];
      continue;
    }
    if (current && std::regex_match(line, m, step)) {
      out[*current].push_back(m[1].str());
      continue;
    }
    current.reset();
  }
  return out;
}

std::optional<BlockPos> parse_reached(const std::string& text) {
  static const std::regex re(R"(You have reached at (-?\d+), (-?\d+), (-?\d+)\.)");
  std::smatch m;
  if (!std::regex_search(text, m, re)) return std::nullopt;
  return pos_from(m, 1);
}

std::optional<BlockPos> parse_stats_position(const std::string& text) {
  static const std::regex re(R"(Position: x: (-?\d+), y: (-?\d+), z: (-?\d+))");
  std::smatch m;
  if (!std::regex_search(text, m, re)) return std::nullopt;
  return pos_from(m, 1);
}

ParsedPlan parse_plan(const std::string& text) {
  static const std::regex missing(R"(^- (\d+) ([A-Za-z0-9_]+)$)");
  static const std::regex step(R"(^(Craft|Smelt) (.+) -> (\d+) ([A-Za-z0-9_]+)$)");
  static const std::regex input(R"((\d+) ([A-Za-z0-9_]+))");
  ParsedPlan plan;
  for (const auto& line : lines_of(text)) {
    std::smatch m;
    if (std::regex_match(line, m, missing)) {
      plan.missing.emplace_back(m[2].str(), std::stoi(m[1].str()));
    } else if (std::regex_match(line, m, step)) {
      ParsedPlan::Step s;
      s.smelt = m[1].str() == "Smelt";
      const std::string ins = m[2].str();
      for (auto it = std::sregex_iterator(ins.begin(), ins.end(), input); it != std::sregex_iterator(); ++it) {
        s.inputs.emplace_back((*it)[2].str(), std::stoi((*it)[1].str()));
      }
      s.count = std::stoi(m[3].str());
      s.output = m[4].str();
      plan.steps.push_back(std::move(s));
    }
  }
  return plan;
}

std::vector<BlueprintFix> parse_blueprint_fixes(const std::string& text) {
  static const std::regex re(
      R"(^(Place|Remove the) ([A-Za-z0-9_]+) at coordinates X: (-?\d+), Y: (-?\d+), Z: (-?\d+)$)");
  std::vector<BlueprintFix> out;
  for (const auto& line : lines_of(text)) {
    std::smatch m;
    if (std::regex_match(line, m, re)) out.push_back({m[1].str() == "Place", m[2].str(), pos_from(m, 3)});
  }
  return out;
}

std::map<BlockPos, std::string> parse_blueprint_cells(const std::string& text) {
  static const std::regex origin(R"(origin \((-?\d+), (-?\d+), (-?\d+)\))");
  static const std::regex level(R"(^Level (\d+) \(y = (-?\d+)\):$)");
  std::map<BlockPos, std::string> cells;
  std::smatch m;
  if (!std::regex_search(text, m, origin)) return cells;
  const BlockPos o = pos_from(m, 1);
  std::optional<int> y;
  int z = 0;
  for (const auto& line : lines_of(text)) {
    if (std::regex_match(line, m, level)) {
      y = std::stoi(m[2].str());
      z = 0;
      continue;
    }
    if (!y || line.empty()) continue;
    std::istringstream row(line);
    std::string token;
    int x = 0;
    while (row >> token) {
      if (token != "air") cells[{o.x + x, *y, o.z + z}] = token;
      ++x;
    }
    ++z;
  }
  return cells;
}

std::optional<std::pair<AgentId, std::string>> split_chat(const std::string& content) {
  const std::string tag = std::string(": ") + kOtherBotTag;
  const auto at = content.find(tag);
  if (at == std::string::npos) return std::nullopt;
  return std::make_pair(content.substr(0, at), content.substr(at + tag.size()));
}

}  // namespace minecollab
