#pragma once

// Instance generation, interchange formats, rendering and the experiment
// runner.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vtsp/configspace.hpp"
#include "vtsp/kinematics.hpp"
#include "vtsp/reduce.hpp"
#include "vtsp/search.hpp"

namespace vtsp {

// n distinct lattice points uniform in [0, width) x [0, height), start 0,
// default visit parameters. Deterministic in `seed`.
Instance generate(std::size_t n, Coord width, Coord height, std::uint64_t seed);

// --- JSON -----------------------------------------------------------------

// {"dim":2,"model":"succ9"|"succ5","cities":[[x,y],...],"start":i,
//  "nu":null|int,"alpha":int,"beta":bool}
std::string instance_to_json(const Instance& inst);
Instance instance_from_json(std::string_view text);

// {"cost":int,"configurations":[[x,y,dx,dy],...]}
std::string trajectory_to_json(const Trajectory& t);
Trajectory trajectory_from_json(std::string_view text);

std::string report_to_json(const SolveReport& r);
std::string gtsp_to_json(const GtspInstance& g);
std::string atsp_to_json(const AtspInstance& a);
std::string stsp_to_json(const StspInstance& s);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

// --- Rendering ------------------------------------------------------------

// Cities as circles (start filled red), one <line class="vector"> per vector
// in alternating red and blue.
std::string render_svg_string(const Instance& inst, const Trajectory& t);
void render_svg(const Instance& inst, const Trajectory& t, const std::filesystem::path& path);

// --- Experiments ----------------------------------------------------------

struct ExperimentConfig {
  std::vector<std::size_t> n_values;
  Coord width = 100;
  Coord height = 100;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  // When set, each point uses a square of side round(sqrt(n * density)),
  // i.e. one city per `density` square units.
  std::optional<Coord> density;
  std::optional<double> prefilter = 0.15;
  std::size_t window = 5;

  void validate() const;
};

ExperimentConfig experiment_config_from_json(std::string_view text);

struct ExperimentRow {
  std::size_t n = 0;
  Coord width = 0;
  Coord height = 0;
  std::uint64_t seed = 0;
  double etsp_cost = 0;
  std::size_t racetrack_etsp_cost = 0;
  std::size_t flipvtsp_cost = 0;
  std::size_t flips = 0;
  bool improved = false;
  friend bool operator==(const ExperimentRow&, const ExperimentRow&) = default;
};

// Seed of trial `trial` at the point (n, width, height).
std::uint64_t trial_seed(std::uint64_t base, std::size_t n, Coord width, Coord height,
                         std::size_t trial);

// One trial: Held-Karp order, full-view racetrack of it, then flip_vtsp from
// it with the limited view and prefilter; the final tour is re-priced with
// the full view.
ExperimentRow run_trial(std::size_t n, Coord width, Coord height, std::uint64_t seed,
                        const ExperimentConfig& cfg);

// Rows ordered by (point, trial). `progress` is called after every row.
std::vector<ExperimentRow> run_experiment(
    const ExperimentConfig& cfg,
    const std::function<void(const ExperimentRow&)>& progress = nullptr);

inline constexpr std::string_view kCsvHeader =
    "n,width,height,seed,etsp_cost,racetrack_etsp_cost,flipvtsp_cost,flips,improved";

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);
std::vector<ExperimentRow> parse_csv(std::istream& in);

}  // namespace vtsp
