#include <random>
#include <set>
#include <string>

#include "vtsp/harness.hpp"

namespace vtsp {

namespace {

// Uniform in [0, bound) by rejection; independent of the standard library's
// distribution implementation.
Coord draw_below(std::mt19937_64& rng, Coord bound) {
  const auto b = static_cast<std::uint64_t>(bound);
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % b;
  std::uint64_t r;
  do r = rng();
  while (r >= limit);
  return static_cast<Coord>(r % b);
}

}  // namespace

Instance generate(std::size_t n, Coord width, Coord height, std::uint64_t seed) {
  if (width <= 0 || height <= 0) throw InvalidArgument("generate: width and height must be positive");
  if (n == 0) throw InvalidArgument("generate: need at least one city");
  if (static_cast<std::uint64_t>(n) > static_cast<std::uint64_t>(width * height))
    throw InvalidArgument("generate: " + std::to_string(n) + " distinct cities do not fit in " +
                          std::to_string(width) + "x" + std::to_string(height));
  std::mt19937_64 rng(seed);
  Instance inst;
  std::set<Position> used;
  while (inst.cities.size() < n) {
    const Coord x = draw_below(rng, width);
    const Coord y = draw_below(rng, height);
    const Position p{{x, y}};
    if (used.insert(p).second) inst.cities.push_back(p);
  }
  inst.start = 0;
  return inst;
}

}  // namespace vtsp
