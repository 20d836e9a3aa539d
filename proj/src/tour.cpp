#include "vtsp/tour.hpp"

#include <cmath>
#include <string>

namespace vtsp {

Tour Tour::closed(std::size_t start, std::span<const std::size_t> interior) {
  Tour t;
  t.order.reserve(interior.size() + 2);
  t.order.push_back(start);
  t.order.insert(t.order.end(), interior.begin(), interior.end());
  t.order.push_back(start);
  return t;
}

void Tour::validate(const Instance& inst) const {
  const std::size_t n = inst.cities.size();
  if (order.size() != n + 1)
    throw InvalidArgument("tour has " + std::to_string(order.size()) + " entries, expected " +
                          std::to_string(n + 1));
  if (order.front() != inst.start || order.back() != inst.start)
    throw InvalidArgument("tour must start and end at the start city");
  std::vector<bool> seen(n, false);
  for (std::size_t i = 1; i + 1 < order.size(); ++i) {
    const std::size_t c = order[i];
    if (c >= n) throw InvalidArgument("tour index " + std::to_string(c) + " out of range");
    if (c == inst.start) throw InvalidArgument("start city repeated inside the tour");
    if (seen[c]) throw InvalidArgument("city " + std::to_string(c) + " repeated in the tour");
    seen[c] = true;
  }
}

std::vector<Position> Tour::interior_cities(const Instance& inst) const {
  std::vector<Position> out;
  for (std::size_t i = 1; i + 1 < order.size(); ++i) out.push_back(inst.cities[order[i]]);
  return out;
}

double Tour::euclidean_length(const Instance& inst) const {
  double len = 0;
  for (std::size_t i = 1; i < order.size(); ++i) {
    const Vec2 d = inst.cities[order[i]] - inst.cities[order[i - 1]];
    len += std::sqrt(static_cast<double>(norm2(d)));
  }
  return len;
}

}  // namespace vtsp
