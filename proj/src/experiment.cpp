#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "vtsp/harness.hpp"
#include "vtsp/intmath.hpp"
#include "vtsp/oracle.hpp"

namespace vtsp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Side of the square holding n cities at one city per `density` units^2.
Coord density_side(std::size_t n, Coord density) {
  const Coord area = static_cast<Coord>(n) * density;
  const Coord r = isqrt(area);
  // Round to nearest: r or r + 1, whichever square is closer.
  return (area - r * r) <= ((r + 1) * (r + 1) - area) ? r : r + 1;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (n_values.empty()) throw InvalidArgument("experiment: no n values");
  if (trials < 1) throw InvalidArgument("experiment: trials must be at least 1");
  if (width <= 0 || height <= 0) throw InvalidArgument("experiment: area must be positive");
  if (density && *density <= 0) throw InvalidArgument("experiment: density must be positive");
  if (prefilter && *prefilter < 0) throw InvalidArgument("experiment: prefilter must be >= 0");
  if (window < 2) throw InvalidArgument("experiment: window must be at least 2");
}

ExperimentConfig experiment_config_from_json(std::string_view text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
  ExperimentConfig cfg;
  try {
    if (j.contains("n")) {
      const json& n = j.at("n");
      if (n.is_array()) {
        cfg.n_values = n.get<std::vector<std::size_t>>();
      } else {
        cfg.n_values = {n.get<std::size_t>()};
      }
    }
    if (j.contains("width")) cfg.width = j.at("width").get<Coord>();
    if (j.contains("height")) cfg.height = j.at("height").get<Coord>();
    if (j.contains("trials")) cfg.trials = j.at("trials").get<std::size_t>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("density") && !j.at("density").is_null()) cfg.density = j.at("density").get<Coord>();
    if (j.contains("prefilter")) {
      if (j.at("prefilter").is_null()) {
        cfg.prefilter.reset();
      } else {
        cfg.prefilter = j.at("prefilter").get<double>();
      }
    }
    if (j.contains("window")) cfg.window = j.at("window").get<std::size_t>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("bad experiment config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

std::uint64_t trial_seed(std::uint64_t base, std::size_t n, Coord width, Coord height,
                         std::size_t trial) {
  std::uint64_t h = splitmix64(base);
  h = splitmix64(h ^ n);
  h = splitmix64(h ^ static_cast<std::uint64_t>(width));
  h = splitmix64(h ^ static_cast<std::uint64_t>(height));
  return splitmix64(h ^ trial);
}

ExperimentRow run_trial(std::size_t n, Coord width, Coord height, std::uint64_t seed,
                        const ExperimentConfig& cfg) {
  const Instance inst = generate(n, width, height, seed);
  const SearchBox box = make_search_box(inst);
  const EtspResult etsp = held_karp_etsp(inst.cities, inst.start);

  ExperimentRow row;
  row.n = n;
  row.width = width;
  row.height = height;
  row.seed = seed;
  row.etsp_cost = etsp.length;
  row.racetrack_etsp_cost = multipoint_astar(inst, etsp.tour, box).cost();

  FlipOptions opts;
  opts.mode = OracleMode::limited(cfg.window);
  opts.prefilter = cfg.prefilter;
  opts.initial = etsp.tour;
  const SolveReport report = flip_vtsp(inst, box, opts);
  row.flips = report.flips_applied;
  std::size_t certified = row.racetrack_etsp_cost;
  if (report.flips_applied > 0) certified = multipoint_astar(inst, report.final_tour, box).cost();
  // A flip accepted on limited-view costs may not survive full-view pricing;
  // the ETSP order remains the incumbent then.
  row.flipvtsp_cost = std::min(certified, row.racetrack_etsp_cost);
  row.improved = row.flipvtsp_cost < row.racetrack_etsp_cost;
  return row;
}

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg,
                                          const std::function<void(const ExperimentRow&)>& progress) {
  cfg.validate();
  std::vector<ExperimentRow> rows;
  for (std::size_t n : cfg.n_values) {
    const Coord w = cfg.density ? density_side(n, *cfg.density) : cfg.width;
    const Coord h = cfg.density ? w : cfg.height;
    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
      rows.push_back(run_trial(n, w, h, trial_seed(cfg.seed, n, w, h, trial), cfg));
      if (progress) progress(rows.back());
    }
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << kCsvHeader << '\n';
  char cost[64];
  for (const auto& r : rows) {
    std::snprintf(cost, sizeof cost, "%.6f", r.etsp_cost);
    out << r.n << ',' << r.width << ',' << r.height << ',' << r.seed << ',' << cost << ','
        << r.racetrack_etsp_cost << ',' << r.flipvtsp_cost << ',' << r.flips << ','
        << (r.improved ? 1 : 0) << '\n';
  }
}

std::vector<ExperimentRow> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw InvalidArgument("CSV header mismatch");
  std::vector<ExperimentRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    if (cells.size() != 9) throw InvalidArgument("CSV row has " + std::to_string(cells.size()) + " columns");
    try {
      ExperimentRow r;
      r.n = std::stoull(cells[0]);
      r.width = std::stoll(cells[1]);
      r.height = std::stoll(cells[2]);
      r.seed = std::stoull(cells[3]);
      r.etsp_cost = std::stod(cells[4]);
      r.racetrack_etsp_cost = std::stoull(cells[5]);
      r.flipvtsp_cost = std::stoull(cells[6]);
      r.flips = std::stoull(cells[7]);
      if (cells[8] != "0" && cells[8] != "1") throw InvalidArgument("improved must be 0 or 1");
      r.improved = cells[8] == "1";
      rows.push_back(r);
    } catch (const std::logic_error& e) {
      throw InvalidArgument("bad CSV row \"" + line + "\": " + e.what());
    }
  }
  return rows;
}

}  // namespace vtsp
