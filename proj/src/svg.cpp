#include <algorithm>
#include <sstream>

#include "vtsp/harness.hpp"

namespace vtsp {

namespace {
constexpr double kScale = 20.0;
constexpr double kPad = 1.5;
}  // namespace

std::string render_svg_string(const Instance& inst, const Trajectory& t) {
  Position lo = inst.cities.front();
  Position hi = lo;
  auto extend = [&](const Position& p) {
    for (std::size_t d = 0; d < 2; ++d) {
      lo[d] = std::min(lo[d], p[d]);
      hi[d] = std::max(hi[d], p[d]);
    }
  };
  for (const auto& p : inst.cities) extend(p);
  for (const auto& c : t.configurations) extend(c.pos);

  // Lattice y grows upwards; SVG y grows downwards.
  auto sx = [&](Coord x) { return (static_cast<double>(x - lo[0]) + kPad) * kScale; };
  auto sy = [&](Coord y) { return (static_cast<double>(hi[1] - y) + kPad) * kScale; };
  const double w = (static_cast<double>(hi[0] - lo[0]) + 2 * kPad) * kScale;
  const double h = (static_cast<double>(hi[1] - lo[1]) + 2 * kPad) * kScale;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "  <g stroke-width=\"3\" stroke-linecap=\"round\">\n";
  for (std::size_t i = 1; i < t.configurations.size(); ++i) {
    const Position& a = t.configurations[i - 1].pos;
    const Position& b = t.configurations[i].pos;
    out << "    <line class=\"vector\" x1=\"" << sx(a[0]) << "\" y1=\"" << sy(a[1]) << "\" x2=\""
        << sx(b[0]) << "\" y2=\"" << sy(b[1]) << "\" stroke=\"" << (i % 2 ? "red" : "blue")
        << "\"/>\n";
  }
  out << "  </g>\n";
  for (std::size_t i = 0; i < inst.cities.size(); ++i) {
    const Position& p = inst.cities[i];
    const bool start = i == inst.start;
    out << "  <circle class=\"" << (start ? "city start" : "city") << "\" cx=\"" << sx(p[0])
        << "\" cy=\"" << sy(p[1]) << "\" r=\"6\" fill=\"" << (start ? "red" : "white")
        << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void render_svg(const Instance& inst, const Trajectory& t, const std::filesystem::path& path) {
  write_file(path, render_svg_string(inst, t));
}

}  // namespace vtsp
