#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace minecollab {

using ItemId = std::string;
using AgentId = std::string;
using Tick = std::int64_t;

/// Simulated time base: one tick is 100 ms.
inline constexpr int kTicksPerSecond = 10;
/// Blocks an agent travels per tick.
inline constexpr int kMoveSpeed = 2;
/// Reach for placing, collecting, handing over items and using stations.
inline constexpr double kInteractionRadius = 3.0;
/// Smelt charges in a "fully fueled" furnace or smoker.
inline constexpr int kFullFuel = 64;
/// Standing level of every provisioned world; cells below are bedrock-like ground.
inline constexpr int kGroundY = -60;

enum class ErrorCode {
  kInvalidSpec,
  kInvalidArgument,
  kUnknownAgent,
  kUnknownTarget,
  kUnknownRecipe,
  kInsufficientPool,
  kInvalidLevel,
  kNoSuchConversation,
  kSelfConversation,
  kEmptyInput,
  kParse,
  kProtocolViolation,
  kBindFailure,
  kIo,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct BlockPos {
  int x = 0;
  int y = 0;
  int z = 0;

  auto operator<=>(const BlockPos&) const = default;

  BlockPos offset(int dx, int dy, int dz) const { return {x + dx, y + dy, z + dz}; }
  double distance_to(const BlockPos& o) const;
  std::string str() const;  // "x, y, z"
};

struct Bounds {
  BlockPos min;
  BlockPos max;

  bool contains(const BlockPos& p) const {
    return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y && p.z >= min.z &&
           p.z <= max.z;
  }
};

/// Item counts with strictly positive entries, iterated in identifier order.
class Inventory {
 public:
  Inventory() = default;
  Inventory(std::initializer_list<std::pair<const ItemId, int>> init);

  int count(const ItemId& item) const;
  void add(const ItemId& item, int n);
  /// Removes n items; returns false (and leaves the inventory unchanged) if fewer are held.
  bool remove(const ItemId& item, int n);
  bool contains(const Inventory& other) const;
  bool empty() const { return stacks_.empty(); }
  void clear() { stacks_.clear(); }
  int total() const;

  const std::map<ItemId, int>& stacks() const { return stacks_; }
  auto begin() const { return stacks_.begin(); }
  auto end() const { return stacks_.end(); }

  bool operator==(const Inventory&) const = default;

 private:
  std::map<ItemId, int> stacks_;
};

Inventory merged(const Inventory& a, const Inventory& b);

/// Portable seeded RNG; the standard distributions are implementation-defined, these helpers are not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi);
  double unit();
  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v.at(static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1)));
  }
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, static_cast<int>(i) - 1))]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);
std::uint64_t fnv1a(const std::string& bytes);
std::string hex64(std::uint64_t v);

}  // namespace minecollab
