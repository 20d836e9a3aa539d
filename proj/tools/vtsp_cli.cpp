// Command-line front end.
//
// Exit codes: 0 success, 2 invalid input, 3 guard refusal, 4 search not found.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vtsp/configspace.hpp"
#include "vtsp/estimate.hpp"
#include "vtsp/harness.hpp"
#include "vtsp/oracle.hpp"
#include "vtsp/reduce.hpp"
#include "vtsp/search.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 2;
constexpr int kGuard = 3;
constexpr int kNotFound = 4;

vtsp::Tour parse_order(const std::string& text, const vtsp::Instance& inst) {
  std::vector<std::size_t> order;
  std::stringstream ss(text);
  for (std::string cell; std::getline(ss, cell, ',');) {
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(cell, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != cell.size() || v < 0) throw vtsp::InvalidArgument("bad city index \"" + cell + "\"");
    order.push_back(static_cast<std::size_t>(v));
  }
  if (order.empty() || order.front() != inst.start)
    throw vtsp::InvalidArgument("--order must begin with the start city " + std::to_string(inst.start));
  if (order.size() != inst.size() + 1 || order.back() != inst.start) order.push_back(inst.start);
  vtsp::Tour tour{order};
  tour.validate(inst);
  return tour;
}

vtsp::OracleMode parse_view(const std::string& view) {
  if (view == "full") return vtsp::OracleMode::full();
  std::size_t used = 0;
  unsigned long w = 0;
  try {
    w = std::stoul(view, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != view.size() || w < 2)
    throw vtsp::InvalidArgument("--view must be \"full\" or a window of at least 2");
  return vtsp::OracleMode::limited(w);
}

vtsp::SearchBox box_for(const vtsp::Instance& inst, int margin) {
  return vtsp::make_search_box(inst, margin < 0 ? std::nullopt : std::optional<vtsp::Coord>(margin));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"VectorTSP solver toolkit"};
  app.require_subcommand(1);

  int margin = -1;
  auto add_margin = [&](CLI::App* cmd) {
    cmd->add_option("--margin", margin, "Search box margin around the cities (default: automatic)");
  };

  // generate
  auto* gen = app.add_subcommand("generate", "Random instance in the default setting");
  std::size_t gen_n = 10;
  vtsp::Coord gen_w = 100, gen_h = 100;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  gen->add_option("--n", gen_n, "Number of cities")->required();
  gen->add_option("--width", gen_w, "Area width")->required();
  gen->add_option("--height", gen_h, "Area height")->required();
  gen->add_option("--seed", gen_seed, "Generator seed")->required();
  gen->add_option("--out", gen_out, "Output instance JSON")->required();

  // solve
  auto* solve = app.add_subcommand("solve", "FlipVTSP local search");
  std::string inst_path, view = "full", svg_path, report_path;
  std::optional<double> prefilter;
  bool from_etsp = false;
  solve->add_option("instance", inst_path, "Instance JSON")->required();
  solve->add_option("--view", view, "Oracle view: full or a window size");
  solve->add_option("--prefilter", prefilter, "Euclidean prefilter fraction");
  solve->add_option("--svg", svg_path, "Write the final trajectory as SVG");
  solve->add_option("--report", report_path, "Write the solve report as JSON");
  solve->add_flag("--from-etsp", from_etsp, "Start from the Held-Karp order instead of the walk");
  add_margin(solve);

  // trajectory
  auto* traj = app.add_subcommand("trajectory", "Optimal trajectory for a visit order");
  std::string order_text;
  traj->add_option("instance", inst_path, "Instance JSON")->required();
  traj->add_option("--order", order_text, "Comma-separated city indices")->required();
  traj->add_option("--view", view, "Oracle view: full or a window size");
  traj->add_option("--svg", svg_path, "Write the trajectory as SVG");
  add_margin(traj);

  // estimate
  auto* est = app.add_subcommand("estimate", "Lower-bound estimate for a visit order");
  est->add_option("instance", inst_path, "Instance JSON")->required();
  est->add_option("--order", order_text, "Comma-separated city indices")->required();

  // brute
  auto* brute = app.add_subcommand("brute", "Exact optimum over all visit orders");
  std::size_t guard = 8;
  brute->add_option("instance", inst_path, "Instance JSON")->required();
  brute->add_option("--guard", guard, "Maximum number of cities");
  brute->add_option("--svg", svg_path, "Write the trajectory as SVG");
  add_margin(brute);

  // reduce
  auto* red = app.add_subcommand("reduce", "Emit the GTSP / ATSP / STSP reduction");
  std::string target, out_path;
  red->add_option("instance", inst_path, "Instance JSON")->required();
  red->add_option("--to", target, "gtsp, atsp or stsp")
      ->required()
      ->check(CLI::IsMember({"gtsp", "atsp", "stsp"}));
  red->add_option("--out", out_path, "Output JSON")->required();
  add_margin(red);

  // experiment
  auto* exp = app.add_subcommand("experiment", "Run the ETSP vs VTSP experiment");
  std::string config_path, csv_path;
  bool quiet = false;
  exp->add_option("--config", config_path, "Experiment config JSON")->required();
  exp->add_option("--csv", csv_path, "Output CSV")->required();
  exp->add_flag("--quiet", quiet, "No per-trial progress on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*gen) {
      vtsp::write_file(gen_out, vtsp::instance_to_json(vtsp::generate(gen_n, gen_w, gen_h, gen_seed)));
      return kOk;
    }
    if (*exp) {
      const auto cfg = vtsp::experiment_config_from_json(vtsp::read_file(config_path));
      const auto rows = vtsp::run_experiment(cfg, [&](const vtsp::ExperimentRow& r) {
        if (!quiet)
          std::fprintf(stderr, "n=%zu seed=%llu racetrack=%zu flipvtsp=%zu flips=%zu\n", r.n,
                       static_cast<unsigned long long>(r.seed), r.racetrack_etsp_cost,
                       r.flipvtsp_cost, r.flips);
      });
      std::ofstream out(csv_path, std::ios::binary);
      if (!out) throw vtsp::InvalidArgument("cannot write " + csv_path);
      vtsp::write_csv(out, rows);
      return kOk;
    }

    const vtsp::Instance inst = vtsp::instance_from_json(vtsp::read_file(inst_path));
    if (*solve) {
      vtsp::FlipOptions opts;
      opts.mode = parse_view(view);
      opts.prefilter = prefilter;
      if (from_etsp) opts.initial = vtsp::held_karp_etsp(inst.cities, inst.start).tour;
      const auto report = vtsp::flip_vtsp(inst, box_for(inst, margin), opts);
      std::cout << vtsp::trajectory_to_json(report.final_trajectory);
      std::fprintf(stderr, "initial cost %zu, final cost %zu, flips %zu, oracle calls %zu\n",
                   report.initial_trajectory.cost(), report.final_trajectory.cost(),
                   report.flips_applied, report.oracle_calls);
      if (!report_path.empty()) vtsp::write_file(report_path, vtsp::report_to_json(report));
      if (!svg_path.empty()) vtsp::render_svg(inst, report.final_trajectory, svg_path);
    } else if (*traj) {
      const vtsp::Tour tour = parse_order(order_text, inst);
      const auto t = vtsp::racetrack(inst, tour, box_for(inst, margin), parse_view(view));
      std::cout << vtsp::trajectory_to_json(t);
      if (!svg_path.empty()) vtsp::render_svg(inst, t, svg_path);
    } else if (*est) {
      const vtsp::Tour tour = parse_order(order_text, inst);
      std::vector<vtsp::Position> suffix = tour.interior_cities(inst);
      suffix.push_back(inst.start_city());
      std::cout << vtsp::estimate_remaining(vtsp::at_rest(inst.start_city()), suffix, inst.params)
                << '\n';
    } else if (*brute) {
      const auto r = vtsp::brute_force_vtsp(inst, box_for(inst, margin), guard);
      std::cout << "{\"tour\":[";
      for (std::size_t i = 0; i < r.tour.order.size(); ++i)
        std::cout << (i ? "," : "") << r.tour.order[i];
      std::cout << "],\"trajectory\":" << vtsp::trajectory_to_json(r.trajectory) << "}\n";
      if (!svg_path.empty()) vtsp::render_svg(inst, r.trajectory, svg_path);
    } else if (*red) {
      const auto g = vtsp::to_gtsp(inst, box_for(inst, margin));
      if (target == "gtsp") {
        vtsp::write_file(out_path, vtsp::gtsp_to_json(g));
      } else if (target == "atsp") {
        vtsp::write_file(out_path, vtsp::atsp_to_json(vtsp::noon_bean(g)));
      } else {
        vtsp::write_file(out_path, vtsp::stsp_to_json(vtsp::atsp_to_stsp(vtsp::noon_bean(g))));
      }
    }
    return kOk;
  } catch (const vtsp::InvalidArgument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const vtsp::GuardRefused& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kGuard;
  } catch (const vtsp::NotFound& e) {
    std::cerr << "not found: " << e.what() << '\n';
    return kNotFound;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
