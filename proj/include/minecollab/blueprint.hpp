#pragma once

#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "minecollab/core.hpp"

namespace minecollab {

/// Complexity levels 0..2 for materials, rooms, windows and carpets, plus a variant index.
struct BlueprintConfig {
  int materials = 0;
  int rooms = 0;
  int windows = 0;
  int carpets = 0;
  int variant = 0;

  bool valid() const;
  /// "materials_1_rooms_1_window_1_carpet_1_variant_3"
  std::string name() const;
  static BlueprintConfig parse_name(const std::string& name);

  bool operator==(const BlueprintConfig&) const = default;
};

struct BlueprintCell {
  BlockPos pos;
  int level = 0;
  std::string material;
};

class Blueprint {
 public:
  BlueprintConfig config;
  BlockPos origin;
  int width = 0;  // x extent
  int depth = 0;  // z extent
  int stories = 0;
  int room_count = 0;
  /// levels[level][z][x], bottom-up; "air" for empty cells.
  std::vector<std::vector<std::vector<std::string>>> levels;

  int level_count() const { return static_cast<int>(levels.size()); }
  const std::string& at(int level, int z, int x) const { return levels[level][z][x]; }
  BlockPos world_pos(int level, int z, int x) const { return origin.offset(x, level, z); }

  /// Non-air cells, level by level, rows by z then x.
  std::vector<BlueprintCell> cells(int level = -1) const;
  std::set<std::string> materials_used() const;
  Inventory bill_of_materials() const;
  int non_air_count() const;
  /// True when the cell is one half of a two-high door.
  bool is_door_cell(int level, int z, int x) const;
  /// Level of the other half of a door cell, or -1.
  int door_partner_level(int level, int z, int x) const;

  nlohmann::json to_json() const;
  static Blueprint from_json(const nlohmann::json& j);
  /// Content hash over origin and levels.
  std::string hash() const;
};

Blueprint generate_blueprint(const BlueprintConfig& config, std::uint64_t seed);

}  // namespace minecollab
