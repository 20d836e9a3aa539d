#include <fstream>
#include <sstream>

#include "json.hpp"
#include "vtsp/harness.hpp"

namespace vtsp {

namespace {

using nlohmann::json;

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
}

Coord integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidArgument(std::string(what) + " must be an integer");
  return j.get<Coord>();
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InvalidArgument(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

json matrix_json(const ArcMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) {
      const auto& w = m.at(i, j);
      row.push_back(w ? json(*w) : json(nullptr));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json configuration_json(const Configuration& c) {
  return json::array({c.pos[0], c.pos[1], c.vel[0], c.vel[1]});
}

}  // namespace

std::string instance_to_json(const Instance& inst) {
  json j;
  j["dim"] = 2;
  j["model"] = inst.model == SuccessorModel::NineSuccessor ? "succ9" : "succ5";
  json cities = json::array();
  for (const auto& p : inst.cities) cities.push_back(json::array({p[0], p[1]}));
  j["cities"] = std::move(cities);
  j["start"] = inst.start;
  j["nu"] = inst.params.nu ? json(*inst.params.nu) : json(nullptr);
  j["alpha"] = inst.params.alpha;
  j["beta"] = inst.params.beta;
  return j.dump() + "\n";
}

Instance instance_from_json(std::string_view text) {
  const json j = parse(text);
  if (integer(field(j, "dim"), "dim") != 2) throw InvalidArgument("only dim 2 is supported");
  Instance inst;
  const json& model = field(j, "model");
  if (model == "succ9") {
    inst.model = SuccessorModel::NineSuccessor;
  } else if (model == "succ5") {
    inst.model = SuccessorModel::FiveSuccessor;
  } else {
    throw InvalidArgument("model must be \"succ9\" or \"succ5\"");
  }
  const json& cities = field(j, "cities");
  if (!cities.is_array()) throw InvalidArgument("cities must be an array");
  for (const auto& c : cities) {
    if (!c.is_array() || c.size() != 2) throw InvalidArgument("each city must be [x, y]");
    inst.cities.push_back(Position{{integer(c[0], "city x"), integer(c[1], "city y")}});
  }
  const Coord start = integer(field(j, "start"), "start");
  if (start < 0) throw InvalidArgument("start must be non-negative");
  inst.start = static_cast<std::size_t>(start);
  const json& nu = field(j, "nu");
  if (!nu.is_null()) inst.params.nu = integer(nu, "nu");
  inst.params.alpha = integer(field(j, "alpha"), "alpha");
  const json& beta = field(j, "beta");
  if (!beta.is_boolean()) throw InvalidArgument("beta must be a boolean");
  inst.params.beta = beta.get<bool>();
  inst.validate();
  return inst;
}

std::string trajectory_to_json(const Trajectory& t) {
  json j;
  j["cost"] = t.cost();
  json cs = json::array();
  for (const auto& c : t.configurations) cs.push_back(configuration_json(c));
  j["configurations"] = std::move(cs);
  return j.dump() + "\n";
}

Trajectory trajectory_from_json(std::string_view text) {
  const json j = parse(text);
  Trajectory t;
  const json& cs = field(j, "configurations");
  if (!cs.is_array()) throw InvalidArgument("configurations must be an array");
  for (const auto& c : cs) {
    if (!c.is_array() || c.size() != 4) throw InvalidArgument("each configuration must be [x, y, dx, dy]");
    t.configurations.push_back({Position{{integer(c[0], "x"), integer(c[1], "y")}},
                                Velocity{{integer(c[2], "dx"), integer(c[3], "dy")}}});
  }
  if (static_cast<std::size_t>(integer(field(j, "cost"), "cost")) != t.cost())
    throw InvalidArgument("cost does not match the configuration count");
  return t;
}

std::string report_to_json(const SolveReport& r) {
  json j;
  j["initial_tour"] = r.initial_tour.order;
  j["final_tour"] = r.final_tour.order;
  j["initial_cost"] = r.initial_trajectory.cost();
  j["final_cost"] = r.final_trajectory.cost();
  j["flips_applied"] = r.flips_applied;
  j["oracle_calls"] = r.oracle_calls;
  j["prefiltered"] = r.prefiltered;
  j["etsp_cost"] = r.etsp_cost ? json(*r.etsp_cost) : json(nullptr);
  json cs = json::array();
  for (const auto& c : r.final_trajectory.configurations) cs.push_back(configuration_json(c));
  j["final_trajectory"] = std::move(cs);
  return j.dump(2) + "\n";
}

std::string gtsp_to_json(const GtspInstance& g) {
  json j;
  j["kind"] = "gtsp";
  json nodes = json::array();
  for (const auto& c : g.nodes) nodes.push_back(configuration_json(c));
  j["nodes"] = std::move(nodes);
  j["node_city"] = g.node_city;
  j["groups"] = g.groups;
  j["start_group"] = g.start_group;
  j["weights"] = matrix_json(g.weights);
  return j.dump() + "\n";
}

std::string atsp_to_json(const AtspInstance& a) {
  json j;
  j["kind"] = "atsp";
  j["nodes"] = a.weights.size();
  j["offset"] = a.offset;
  j["weights"] = matrix_json(a.weights);
  return j.dump() + "\n";
}

std::string stsp_to_json(const StspInstance& s) {
  json j;
  j["kind"] = "stsp";
  j["nodes"] = s.weights.size();
  j["offset"] = s.offset;
  j["weights"] = matrix_json(s.weights);
  return j.dump() + "\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace vtsp
