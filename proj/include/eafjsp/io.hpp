#pragma once

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "eafjsp/decoder.hpp"
#include "eafjsp/evolution.hpp"
#include "eafjsp/metrics.hpp"
#include "eafjsp/oracle.hpp"

namespace eafjsp {

using json = nlohmann::ordered_json;

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shortest round-trip decimal form, locale independent.
inline std::string fmt_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot write " + path);
  out << content;
}

inline json objectives_to_json(const ObjectiveVector& o) {
  return json::array({o.makespan, o.energy_cost, o.emissions, o.peak_workers});
}

inline ObjectiveVector objectives_from_json(const json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>(),
          j.at(3).get<double>()};
}

inline json genotype_to_json(const Genotype& g) {
  return json{{"sequence", g.sequence},
              {"machine_choice", g.machine_choice},
              {"max_cost", g.max_cost},
              {"max_emission", g.max_emission}};
}

inline Genotype genotype_from_json(const json& j) {
  Genotype g;
  g.sequence = j.at("sequence").get<std::vector<int>>();
  g.machine_choice = j.at("machine_choice").get<std::vector<int>>();
  g.max_cost = j.at("max_cost").get<std::vector<double>>();
  g.max_emission = j.at("max_emission").get<std::vector<double>>();
  return g;
}

inline json config_to_json(const EvolutionConfig& cfg) {
  return json{{"population_size", cfg.population_size},
              {"generations", cfg.generations},
              {"mutation_rate", cfg.mutation_rate},
              {"crossover_rate", cfg.crossover_rate},
              {"refine", to_string(cfg.refine)},
              {"selection", to_string(cfg.selection)},
              {"theta", cfg.theta},
              {"hype_samples", cfg.hype_samples},
              {"seed", cfg.seed},
              {"threads", cfg.threads}};
}

inline EvolutionConfig config_from_json(const json& j) {
  EvolutionConfig cfg;
  cfg.population_size = j.at("population_size").get<int>();
  cfg.generations = j.at("generations").get<int>();
  cfg.mutation_rate = j.at("mutation_rate").get<double>();
  cfg.crossover_rate = j.at("crossover_rate").get<double>();
  cfg.refine = refine_policy_from_string(j.at("refine").get<std::string>());
  cfg.selection = selection_from_string(j.at("selection").get<std::string>());
  cfg.theta = j.at("theta").get<double>();
  cfg.hype_samples = j.at("hype_samples").get<int>();
  cfg.seed = j.at("seed").get<std::uint64_t>();
  cfg.threads = j.at("threads").get<int>();
  return cfg;
}

// Timing is emitted only on request: deterministic exports must stay
// byte-identical across replays.
inline json run_result_to_json(const RunResult& r, const std::string& instance_name,
                               const std::string& fingerprint,
                               bool include_timing = false) {
  json gens = json::array();
  for (const auto& g : r.fronts) {
    json front = json::array();
    for (const auto& o : g.points) front.push_back(objectives_to_json(o));
    gens.push_back(json{{"generation", g.generation}, {"front", front}});
  }
  json final_front = json::array();
  for (const auto& ind : r.final_front)
    final_front.push_back(json{{"objectives", objectives_to_json(ind.objectives)},
                               {"genotype", genotype_to_json(ind.genotype)}});
  json out{{"schema", "eafjsp.run_result/1"},
           {"instance", instance_name},
           {"fingerprint", fingerprint},
           {"config", config_to_json(r.config)},
           {"generations", gens},
           {"final_front", final_front}};
  if (include_timing) out["wall_seconds"] = r.wall_seconds;
  return out;
}

struct StoredRun {
  std::string instance;
  std::string fingerprint;
  EvolutionConfig config;
  std::vector<std::pair<int, std::vector<ObjectiveVector>>> fronts;
  std::vector<ObjectiveVector> final_front;
};

inline StoredRun run_result_from_json(const json& j) {
  StoredRun r;
  r.instance = j.at("instance").get<std::string>();
  r.fingerprint = j.at("fingerprint").get<std::string>();
  r.config = config_from_json(j.at("config"));
  for (const auto& g : j.at("generations")) {
    std::vector<ObjectiveVector> pts;
    for (const auto& p : g.at("front")) pts.push_back(objectives_from_json(p));
    r.fronts.push_back({g.at("generation").get<int>(), std::move(pts)});
  }
  for (const auto& f : j.at("final_front"))
    r.final_front.push_back(objectives_from_json(f.at("objectives")));
  return r;
}

inline json reference_to_json(const ReferenceSet& r) {
  json pts = json::array();
  for (const auto& p : r.points)
    pts.push_back(json{{"objectives", objectives_to_json(p.objectives)},
                       {"gap", p.gap}});
  return json{{"schema", "eafjsp.reference_set/1"},
              {"fingerprint", r.fingerprint},
              {"gap_max", r.gap_max},
              {"points", pts}};
}

inline ReferenceSet reference_from_json(const json& j) {
  ReferenceSet r;
  r.fingerprint = j.at("fingerprint").get<std::string>();
  r.gap_max = j.at("gap_max").get<double>();
  for (const auto& p : j.at("points"))
    r.points.push_back({objectives_from_json(p.at("objectives")),
                        p.at("gap").get<double>()});
  return r;
}

inline json schedule_to_json(const Schedule& s, const Instance& inst) {
  json ops = json::array();
  for (int f = 0; f < static_cast<int>(s.ops.size()); ++f) {
    const auto [job, k] = inst.job_op(f);
    ops.push_back(json{{"job", job + 1},
                       {"op", k + 1},
                       {"machine", s.ops[f].machine + 1},
                       {"start", s.ops[f].start},
                       {"end", s.ops[f].end}});
  }
  return json{{"schema", "eafjsp.schedule/1"},
              {"instance", inst.name()},
              {"operations", ops},
              {"worker_load", s.worker_load},
              {"objectives", objectives_to_json(s.objectives)}};
}

inline std::string front_to_csv(const std::vector<ObjectiveVector>& front) {
  std::ostringstream out;
  out << "makespan,energy_cost,emissions,peak_workers\n";
  for (const auto& o : front)
    out << fmt_double(o.makespan) << ',' << fmt_double(o.energy_cost) << ','
        << fmt_double(o.emissions) << ',' << fmt_double(o.peak_workers) << '\n';
  return out.str();
}

// Flat key-value configuration with [section] headers; keys are flattened
// to "section.key". '#' starts a comment.
inline std::map<std::string, std::string> parse_kv_config(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line, section;
  int line_no = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    const auto e = s.find_last_not_of(" \t\r\n");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw io_error("line " + std::to_string(line_no) + ": unterminated section");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw io_error("line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    out[section.empty() ? key : section + "." + key] = val;
  }
  return out;
}

}  // namespace eafjsp
