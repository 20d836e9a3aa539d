#pragma once

#include <cstdint>

#include "vtsp/configspace.hpp"

namespace vtsp::detail {

// Packs (configuration, auxiliary counter) into 64 bits relative to a box.
// Key order matches lexicographic (pos, vel, aux).
class StateCodec {
 public:
  explicit StateCodec(const SearchBox& box) : lo_(box.lo) {
    if (box.extent(0) > 0xFFFF || box.extent(1) > 0xFFFF)
      throw InvalidArgument("search box too large to index");
    if (box.max_speed[0] > 127 || box.max_speed[1] > 127)
      throw InvalidArgument("search box speed bound too large to index");
  }

  std::uint64_t encode(const Configuration& c, std::uint64_t aux) const {
    return (std::uint64_t(c.pos[0] - lo_[0]) << 48) | (std::uint64_t(c.pos[1] - lo_[1]) << 32) |
           (std::uint64_t(c.vel[0] + 128) << 24) | (std::uint64_t(c.vel[1] + 128) << 16) |
           (aux & 0xFFFF);
  }

  Configuration config(std::uint64_t key) const {
    Configuration c;
    c.pos[0] = Coord((key >> 48) & 0xFFFF) + lo_[0];
    c.pos[1] = Coord((key >> 32) & 0xFFFF) + lo_[1];
    c.vel[0] = Coord((key >> 24) & 0xFF) - 128;
    c.vel[1] = Coord((key >> 16) & 0xFF) - 128;
    return c;
  }

  static std::uint64_t aux(std::uint64_t key) { return key & 0xFFFF; }

 private:
  Position lo_;
};

}  // namespace vtsp::detail
