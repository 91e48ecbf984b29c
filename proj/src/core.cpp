#include "minecollab/core.hpp"

#include <cmath>

namespace minecollab {

double BlockPos::distance_to(const BlockPos& o) const {
  const double dx = x - o.x;
  const double dy = y - o.y;
  const double dz = z - o.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

std::string BlockPos::str() const {
  return std::to_string(x) + ", " + std::to_string(y) + ", " + std::to_string(z);
}

Inventory::Inventory(std::initializer_list<std::pair<const ItemId, int>> init) {
  for (const auto& [item, n] : init) add(item, n);
}

int Inventory::count(const ItemId& item) const {
  auto it = stacks_.find(item);
  return it == stacks_.end() ? 0 : it->second;
}

void Inventory::add(const ItemId& item, int n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative add of " + item);
  if (n == 0) return;
  stacks_[item] += n;
}

bool Inventory::remove(const ItemId& item, int n) {
  if (n < 0) return false;
  if (n == 0) return true;
  auto it = stacks_.find(item);
  if (it == stacks_.end() || it->second < n) return false;
  it->second -= n;
  if (it->second == 0) stacks_.erase(it);
  return true;
}

bool Inventory::contains(const Inventory& other) const {
  for (const auto& [item, n] : other) {
    if (count(item) < n) return false;
  }
  return true;
}

int Inventory::total() const {
  int t = 0;
  for (const auto& [item, n] : stacks_) t += n;
  return t;
}

Inventory merged(const Inventory& a, const Inventory& b) {
  Inventory out = a;
  for (const auto& [item, n] : b) out.add(item, n);
  return out;
}

int Rng::uniform(int lo, int hi) {
  if (hi <= lo) return lo;
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  // splitmix64 finalizer over the combined words
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL + (b << 6) + (b >> 2);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

}  // namespace minecollab
