#include "minecollab/blueprint.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <regex>

namespace minecollab {

namespace {

constexpr int kWallHeight = 3;               // wall rings per story; the fourth level is ceiling or roof
constexpr int kLevelsPerStory = kWallHeight + 1;
constexpr int kMinInterior = 3;

const std::vector<std::string>& structural_pool() {
  static const std::vector<std::string> pool = {"stone",        "oak_planks",   "terracotta",
                                                "cobblestone",  "spruce_planks", "stone_bricks",
                                                "bricks",       "sandstone",    "birch_planks"};
  return pool;
}

const std::vector<std::string>& carpet_pool() {
  static const std::vector<std::string> pool = {"red_carpet",  "light_blue_carpet", "cyan_carpet",
                                                "lime_carpet", "yellow_carpet",     "white_carpet"};
  return pool;
}

struct Room {
  int x0, x1, z0, z1;  // outer wall coordinates, inclusive

  int area() const { return (x1 - x0 + 1) * (z1 - z0 + 1); }
  bool on_boundary(int x, int z) const {
    const bool inside = x >= x0 && x <= x1 && z >= z0 && z <= z1;
    return inside && (x == x0 || x == x1 || z == z0 || z == z1);
  }
  bool interior(int x, int z) const { return x > x0 && x < x1 && z > z0 && z < z1; }
  bool corner(int x, int z) const { return (x == x0 || x == x1) && (z == z0 || z == z1); }
  int side(int x, int z) const {
    if (z == z0) return 0;
    if (x == x1) return 1;
    if (z == z1) return 2;
    return 3;
  }
};

bool split_room(std::vector<Room>& rooms, Rng& rng) {
  const int span = 2 * (kMinInterior + 1);
  int best = -1;
  for (int i = 0; i < static_cast<int>(rooms.size()); ++i) {
    const Room& r = rooms[i];
    if (r.x1 - r.x0 < span && r.z1 - r.z0 < span) continue;
    if (best < 0 || r.area() > rooms[best].area()) best = i;
  }
  if (best < 0) return false;
  Room r = rooms[best];
  const bool along_x = (r.x1 - r.x0 >= r.z1 - r.z0) ? (r.x1 - r.x0 >= span) : !(r.z1 - r.z0 >= span);
  if (along_x) {
    const int s = rng.uniform(r.x0 + kMinInterior + 1, r.x1 - kMinInterior - 1);
    rooms[best] = {r.x0, s, r.z0, r.z1};
    rooms.push_back({s, r.x1, r.z0, r.z1});
  } else {
    const int s = rng.uniform(r.z0 + kMinInterior + 1, r.z1 - kMinInterior - 1);
    rooms[best] = {r.x0, r.x1, r.z0, s};
    rooms.push_back({r.x0, r.x1, s, r.z1});
  }
  return true;
}

struct Cell {
  int x, z;
  auto operator<=>(const Cell&) const = default;
};

/// Door cells on the wall shared by two rooms, excluding every room corner.
std::vector<Cell> shared_wall_cells(const Room& a, const Room& b, const std::vector<Room>& all) {
  std::vector<Cell> out;
  auto is_corner = [&](int x, int z) {
    return std::any_of(all.begin(), all.end(), [&](const Room& r) { return r.corner(x, z); });
  };
  if (a.x1 == b.x0 || a.x0 == b.x1) {
    const int x = a.x1 == b.x0 ? a.x1 : a.x0;
    for (int z = std::max(a.z0, b.z0) + 1; z < std::min(a.z1, b.z1); ++z) {
      if (!is_corner(x, z)) out.push_back({x, z});
    }
  } else if (a.z1 == b.z0 || a.z0 == b.z1) {
    const int z = a.z1 == b.z0 ? a.z1 : a.z0;
    for (int x = std::max(a.x0, b.x0) + 1; x < std::min(a.x1, b.x1); ++x) {
      if (!is_corner(x, z)) out.push_back({x, z});
    }
  }
  return out;
}

struct StoryLayout {
  std::vector<Room> rooms;
  std::set<Cell> doors;
};

/// Room holding the staircase: the one with the widest interior along x.
std::size_t stair_room(const std::vector<Room>& rooms) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < rooms.size(); ++i) {
    if (rooms[i].x1 - rooms[i].x0 > rooms[best].x1 - rooms[best].x0) best = i;
  }
  return best;
}

/// Rooms for one story plus a door spanning tree and one exterior door; nullopt if the
/// footprint cannot hold `count` rooms.
std::optional<StoryLayout> layout_story(int width, int depth, int count, bool stairs, Rng& rng) {
  StoryLayout s;
  s.rooms.push_back({0, width - 1, 0, depth - 1});
  while (static_cast<int>(s.rooms.size()) < count) {
    if (!split_room(s.rooms, rng)) return std::nullopt;
  }
  // steps lean on the wall behind them, so that stretch of wall stays solid
  std::set<Cell> no_door;
  if (stairs) {
    const Room& r = s.rooms[stair_room(s.rooms)];
    for (int k = 1; k <= kWallHeight; ++k) no_door.insert({r.x0 + k, r.z0});
  }
  auto allowed = [&](std::vector<Cell> cells) {
    std::erase_if(cells, [&](const Cell& c) { return no_door.count(c) > 0; });
    return cells;
  };
  const int n = static_cast<int>(s.rooms.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      if (seen[static_cast<std::size_t>(j)]) continue;
      auto cells = allowed(
          shared_wall_cells(s.rooms[static_cast<std::size_t>(i)], s.rooms[static_cast<std::size_t>(j)], s.rooms));
      if (cells.empty()) continue;
      s.doors.insert(rng.pick(cells));
      seen[static_cast<std::size_t>(j)] = true;
      queue.push_back(j);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) return std::nullopt;
  // front door on the z = 0 side of room 0
  const Room& r0 = s.rooms[0];
  std::vector<Cell> front;
  for (int x = r0.x0 + 1; x < r0.x1; ++x) {
    bool corner = std::any_of(s.rooms.begin(), s.rooms.end(), [&](const Room& r) { return r.corner(x, 0); });
    if (!corner) front.push_back({x, 0});
  }
  front = allowed(std::move(front));
  if (front.empty()) return std::nullopt;
  s.doors.insert(rng.pick(front));
  return s;
}

std::vector<std::string> split_row(const std::string& row) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= row.size()) {
    auto end = row.find(' ', start);
    if (end == std::string::npos) end = row.size();
    if (end > start) out.push_back(row.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

}  // namespace

bool BlueprintConfig::valid() const {
  auto in = [](int v) { return v >= 0 && v <= 2; };
  return in(materials) && in(rooms) && in(windows) && in(carpets) && variant >= 0;
}

std::string BlueprintConfig::name() const {
  return "materials_" + std::to_string(materials) + "_rooms_" + std::to_string(rooms) + "_window_" +
         std::to_string(windows) + "_carpet_" + std::to_string(carpets) + "_variant_" + std::to_string(variant);
}

BlueprintConfig BlueprintConfig::parse_name(const std::string& name) {
  static const std::regex re(R"(materials_(\d+)_rooms_(\d+)_window_(\d+)_carpet_(\d+)_variant_(\d+))");
  std::smatch m;
  if (!std::regex_search(name, m, re)) throw Error(ErrorCode::kParse, "not a blueprint name: " + name);
  BlueprintConfig c{std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4]), std::stoi(m[5])};
  if (!c.valid()) throw Error(ErrorCode::kInvalidArgument, "complexity levels must be within 0-2: " + name);
  return c;
}

std::vector<BlueprintCell> Blueprint::cells(int level) const {
  std::vector<BlueprintCell> out;
  const int lo = level < 0 ? 0 : level;
  const int hi = level < 0 ? level_count() - 1 : level;
  for (int l = lo; l <= hi; ++l) {
    for (int z = 0; z < depth; ++z) {
      for (int x = 0; x < width; ++x) {
        const auto& m = at(l, z, x);
        if (m != "air") out.push_back({world_pos(l, z, x), l, m});
      }
    }
  }
  return out;
}

std::set<std::string> Blueprint::materials_used() const {
  std::set<std::string> out;
  for (const auto& c : cells()) out.insert(c.material);
  return out;
}

Inventory Blueprint::bill_of_materials() const {
  Inventory bill;
  for (const auto& c : cells()) bill.add(c.material, 1);
  return bill;
}

int Blueprint::non_air_count() const { return static_cast<int>(cells().size()); }

int Blueprint::door_partner_level(int level, int z, int x) const {
  const auto& m = at(level, z, x);
  if (m.size() < 5 || m.compare(m.size() - 5, 5, "_door") != 0) return -1;
  if (level + 1 < level_count() && at(level + 1, z, x) == m) {
    // a door's lower half sits on a non-door cell
    if (level == 0 || at(level - 1, z, x) != m) return level + 1;
  }
  if (level > 0 && at(level - 1, z, x) == m) return level - 1;
  return -1;
}

bool Blueprint::is_door_cell(int level, int z, int x) const { return door_partner_level(level, z, x) >= 0; }

nlohmann::json Blueprint::to_json() const {
  nlohmann::json j;
  j["name"] = config.name();
  j["config"] = {{"m", config.materials}, {"r", config.rooms}, {"w", config.windows},
                 {"c", config.carpets},   {"v", config.variant}};
  j["origin"] = {origin.x, origin.y, origin.z};
  j["stories"] = stories;
  j["rooms"] = room_count;
  auto& lv = j["levels"] = nlohmann::json::array();
  for (const auto& level : levels) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : level) {
      std::string s;
      for (std::size_t i = 0; i < row.size(); ++i) s += (i ? " " : "") + row[i];
      rows.push_back(s);
    }
    lv.push_back(rows);
  }
  return j;
}

Blueprint Blueprint::from_json(const nlohmann::json& j) {
  Blueprint bp;
  const auto& c = j.at("config");
  bp.config = {c.at("m").get<int>(), c.at("r").get<int>(), c.at("w").get<int>(), c.at("c").get<int>(),
               c.at("v").get<int>()};
  const auto& o = j.at("origin");
  bp.origin = {o.at(0).get<int>(), o.at(1).get<int>(), o.at(2).get<int>()};
  bp.stories = j.value("stories", 1);
  bp.room_count = j.value("rooms", 1);
  for (const auto& level : j.at("levels")) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : level) rows.push_back(split_row(row.get<std::string>()));
    bp.levels.push_back(std::move(rows));
  }
  if (bp.levels.empty() || bp.levels[0].empty()) throw Error(ErrorCode::kParse, "empty blueprint");
  bp.depth = static_cast<int>(bp.levels[0].size());
  bp.width = static_cast<int>(bp.levels[0][0].size());
  for (const auto& level : bp.levels) {
    if (static_cast<int>(level.size()) != bp.depth) throw Error(ErrorCode::kParse, "ragged blueprint");
    for (const auto& row : level) {
      if (static_cast<int>(row.size()) != bp.width) throw Error(ErrorCode::kParse, "ragged blueprint");
    }
  }
  return bp;
}

std::string Blueprint::hash() const {
  nlohmann::json j = to_json();
  j.erase("name");
  j.erase("config");
  return hex64(fnv1a(j.dump()));
}

Blueprint generate_blueprint(const BlueprintConfig& config, std::uint64_t seed) {
  if (!config.valid()) throw Error(ErrorCode::kInvalidArgument, "invalid blueprint config " + config.name());
  Rng rng(mix_seed(seed, fnv1a(config.name())));

  Blueprint bp;
  bp.config = config;
  bp.origin = {0, kGroundY, 0};
  switch (config.rooms) {
    case 0: bp.stories = 1; bp.room_count = rng.uniform(1, 2); break;
    case 1: bp.stories = rng.uniform(1, 2); bp.room_count = rng.uniform(3, 4); break;
    default: bp.stories = rng.uniform(2, 3); bp.room_count = rng.uniform(5, 6); break;
  }
  std::vector<int> per_story(static_cast<std::size_t>(bp.stories), bp.room_count / bp.stories);
  for (int i = 0; i < bp.room_count % bp.stories; ++i) ++per_story[static_cast<std::size_t>(i)];

  int material_count = 1;
  if (config.materials == 1) material_count = rng.uniform(2, 3);
  if (config.materials == 2) material_count = rng.uniform(4, 5);
  std::vector<std::string> pool = structural_pool();
  rng.shuffle(pool);
  const std::vector<std::string> mats(pool.begin(), pool.begin() + material_count);
  static const std::vector<std::string> door_kinds = {"oak_door", "dark_oak_door", "spruce_door"};
  const std::string door = rng.pick(door_kinds);

  std::vector<std::string> carpets = carpet_pool();
  rng.shuffle(carpets);

  // Grow the footprint until every story's rooms fit.
  const int widest = per_story.front();
  int width = (kMinInterior + 1) * widest + 1 + rng.uniform(0, 2);
  int depth = kMinInterior + 2 + (widest > 2 ? rng.uniform(0, 2) : 0);
  std::vector<StoryLayout> layouts;
  for (int attempt = 0;; ++attempt) {
    layouts.clear();
    bool ok = true;
    for (int s = 0; s < bp.stories && ok; ++s) {
      auto layout = layout_story(width, depth, per_story[static_cast<std::size_t>(s)], s + 1 < bp.stories, rng);
      if (!layout) {
        ok = false;
      } else {
        layouts.push_back(std::move(*layout));
      }
    }
    if (ok) break;
    if (attempt > 64) throw Error(ErrorCode::kInvalidSpec, "blueprint layout failed");
    if (attempt % 2 == 0) {
      depth += 2;
    } else {
      width += 2;
    }
  }
  bp.width = width;
  bp.depth = depth;
  bp.levels.assign(static_cast<std::size_t>(bp.stories * kLevelsPerStory),
                   std::vector<std::vector<std::string>>(static_cast<std::size_t>(depth),
                                                         std::vector<std::string>(static_cast<std::size_t>(width), "air")));
  auto set = [&](int level, int z, int x, const std::string& m) {
    bp.levels[static_cast<std::size_t>(level)][static_cast<std::size_t>(z)][static_cast<std::size_t>(x)] = m;
  };

  for (int s = 0; s < bp.stories; ++s) {
    const StoryLayout& story = layouts[static_cast<std::size_t>(s)];
    const int base = s * kLevelsPerStory;
    auto room_corner = [&](int x, int z) {
      return std::any_of(story.rooms.begin(), story.rooms.end(), [&](const Room& r) { return r.corner(x, z); });
    };
    // walls
    for (int l = 0; l < kWallHeight; ++l) {
      for (int z = 0; z < depth; ++z) {
        for (int x = 0; x < width; ++x) {
          for (std::size_t i = 0; i < story.rooms.size(); ++i) {
            const Room& r = story.rooms[i];
            if (!r.on_boundary(x, z)) continue;
            const auto idx = (i + static_cast<std::size_t>(l) + static_cast<std::size_t>(r.side(x, z))) % mats.size();
            set(base + l, z, x, mats[idx]);
            break;
          }
        }
      }
    }
    // windows on the exterior ring at eye level
    if (config.windows > 0) {
      auto eligible = [&](int x, int z) {
        const bool exterior = x == 0 || z == 0 || x == width - 1 || z == depth - 1;
        return exterior && !room_corner(x, z) && !story.doors.count({x, z});
      };
      std::vector<std::vector<Cell>> sides(4);
      for (int x = 0; x < width; ++x) {
        if (eligible(x, 0)) sides[0].push_back({x, 0});
        if (eligible(x, depth - 1)) sides[2].push_back({x, depth - 1});
      }
      for (int z = 0; z < depth; ++z) {
        if (eligible(width - 1, z)) sides[1].push_back({width - 1, z});
        if (eligible(0, z)) sides[3].push_back({0, z});
      }
      for (const auto& side : sides) {
        if (side.empty()) continue;
        if (config.windows == 1) {
          const Cell c = side[side.size() / 2];
          set(base + 1, c.z, c.x, "glass");
        } else {
          for (const auto& c : side) set(base + 1, c.z, c.x, "glass");
        }
      }
    }
    for (const auto& d : story.doors) {
      set(base, d.z, d.x, door);
      set(base + 1, d.z, d.x, door);
    }
    // staircase up to the next story inside the room with the widest interior
    std::set<Cell> stair_cells;
    std::optional<Cell> hole;
    if (s + 1 < bp.stories) {
      const Room& r = story.rooms[stair_room(story.rooms)];
      for (int k = 0; k < kWallHeight; ++k) {
        const Cell c{r.x0 + 1 + k, r.z0 + 1};
        stair_cells.insert(c);
        set(base + k, c.z, c.x, mats.front());
      }
      hole = Cell{r.x0 + kWallHeight, r.z0 + 1};
    }
    if (config.carpets > 0) {
      for (std::size_t i = 0; i < story.rooms.size(); ++i) {
        const Room& r = story.rooms[i];
        for (int z = r.z0 + 1; z < r.z1; ++z) {
          for (int x = r.x0 + 1; x < r.x1; ++x) {
            if (stair_cells.count({x, z})) continue;
            const std::string& color =
                config.carpets == 1 ? carpets[0] : carpets[static_cast<std::size_t>(x + z + static_cast<int>(i)) % 3];
            set(base, z, x, color);
          }
        }
      }
    }
    // ceiling, or roof on the top story
    for (int z = 0; z < depth; ++z) {
      for (int x = 0; x < width; ++x) {
        if (hole && hole->x == x && hole->z == z) continue;
        set(base + kWallHeight, z, x, mats.front());
      }
    }
  }
  return bp;
}

}  // namespace minecollab
