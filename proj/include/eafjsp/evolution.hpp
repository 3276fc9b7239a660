#pragma once

#include <chrono>
#include <cstdint>
#include <utility>
#include <vector>

#include "eafjsp/decoder.hpp"
#include "eafjsp/directions.hpp"
#include "eafjsp/genotype.hpp"
#include "eafjsp/operators.hpp"
#include "eafjsp/parallel.hpp"
#include "eafjsp/refine.hpp"
#include "eafjsp/selection.hpp"

namespace eafjsp {

enum class RefinePolicy { none, front0, all };

inline const char* to_string(RefinePolicy p) {
  switch (p) {
    case RefinePolicy::none: return "none";
    case RefinePolicy::front0: return "front0";
    case RefinePolicy::all: return "all";
  }
  return "?";
}

inline RefinePolicy refine_policy_from_string(const std::string& s) {
  if (s == "none") return RefinePolicy::none;
  if (s == "front0") return RefinePolicy::front0;
  if (s == "all") return RefinePolicy::all;
  throw config_error("unknown refinement policy '" + s + "'");
}

struct EvolutionConfig {
  int population_size = 1000;
  int generations = 700;
  double mutation_rate = 0.1;
  double crossover_rate = 0.9;
  RefinePolicy refine = RefinePolicy::front0;
  SelectionStrategy selection = SelectionStrategy::nsga3;
  double theta = 5.0;
  int hype_samples = 0;  // 0: use population_size
  std::uint64_t seed = 0;
  int threads = 1;

  void validate() const {
    if (population_size < 4 || population_size % 2 != 0)
      throw config_error("population_size must be even and >= 4");
    if (generations < 0) throw config_error("generations must be >= 0");
    if (mutation_rate < 0.0 || mutation_rate > 1.0)
      throw config_error("mutation_rate must be in [0,1]");
    if (crossover_rate < 0.0 || crossover_rate > 1.0)
      throw config_error("crossover_rate must be in [0,1]");
    if (theta < 0.0) throw config_error("theta must be >= 0");
    if (hype_samples < 0) throw config_error("hype_samples must be >= 0");
    if (threads < 1) throw config_error("threads must be >= 1");
  }
};

struct Individual {
  Genotype genotype;
  ObjectiveVector objectives;
  friend bool operator==(const Individual&, const Individual&) = default;
};

struct Population {
  std::vector<Individual> individuals;
  int generation = 0;
};

struct GenerationFront {
  int generation = 0;
  std::vector<ObjectiveVector> points;
};

struct RunResult {
  EvolutionConfig config;
  std::vector<GenerationFront> fronts;  // one per generation, including 0
  std::vector<Individual> final_front;
  Population final_population;
  double wall_seconds = 0.0;
};

namespace detail {

// Stream tags for seed derivation (documented splitting rule: every stream
// is derive_seed(master, tag, index...)).
inline constexpr std::uint64_t kInitStream = 1;
inline constexpr std::uint64_t kVariationStream = 2;
inline constexpr std::uint64_t kSelectionStream = 3;

inline std::vector<std::array<double, 4>> objective_matrix(
    const std::vector<Individual>& pop) {
  std::vector<std::array<double, 4>> objs(pop.size());
  for (std::size_t i = 0; i < pop.size(); ++i) objs[i] = pop[i].objectives.to_array();
  return objs;
}

inline std::vector<ObjectiveVector> front_points(const std::vector<Individual>& pop) {
  const auto idx = nondominated_indices(objective_matrix(pop));
  std::vector<ObjectiveVector> points;
  points.reserve(idx.size());
  for (int i : idx) points.push_back(pop[i].objectives);
  return points;
}

}  // namespace detail

// One full memetic run: initialize, evaluate, then per generation apply
// variation, merge parents and offspring, refine the selected individuals
// (energy first, then workforce) and hand the merged population to the
// environmental-selection strategy. Fully reproducible from config.seed.
inline RunResult run(const Instance& inst, const MarketSeries& market,
                     const EvolutionConfig& cfg) {
  cfg.validate();
  if (market.size() < inst.horizon())
    throw config_error("market series shorter than instance horizon");
  const auto t_begin = std::chrono::steady_clock::now();

  const int n = cfg.population_size;
  const auto dirs =
      das_dennis(4, default_direction_layers(4, n));
  SelectionConfig sel;
  sel.strategy = cfg.selection;
  sel.theta = cfg.theta;
  sel.hype_samples = cfg.hype_samples > 0 ? cfg.hype_samples : n;
  sel.directions = &dirs;

  RunResult result;
  result.config = cfg;

  Population pop;
  pop.individuals.resize(n);
  parallel_for(n, cfg.threads, [&](std::size_t i) {
    Rng rng(derive_seed(cfg.seed, detail::kInitStream, static_cast<std::uint64_t>(i)));
    auto& ind = pop.individuals[i];
    ind.genotype = random_genotype(inst, market, rng);
    ind.objectives = decode(ind.genotype, inst, market).objectives;
  });
  result.fronts.push_back({0, detail::front_points(pop.individuals)});

  for (int gen = 1; gen <= cfg.generations; ++gen) {
    // Variation: binary tournament on Pareto rank, POX + uniform crossover,
    // then mutation. Sequential by design; the RNG stream is per generation.
    const auto parent_objs = detail::objective_matrix(pop.individuals);
    const auto parent_fronts = nondominated_sort(parent_objs);
    std::vector<int> rank(parent_objs.size(), 0);
    for (std::size_t fidx = 0; fidx < parent_fronts.size(); ++fidx)
      for (int i : parent_fronts[fidx]) rank[i] = static_cast<int>(fidx);

    Rng var_rng(derive_seed(cfg.seed, detail::kVariationStream,
                            static_cast<std::uint64_t>(gen)));
    auto tournament = [&]() {
      const int a = static_cast<int>(var_rng.below(n));
      const int b = static_cast<int>(var_rng.below(n));
      if (rank[a] != rank[b]) return rank[a] < rank[b] ? a : b;
      return var_rng.bernoulli(0.5) ? a : b;
    };

    std::vector<Individual> offspring(n);
    for (int i = 0; i < n; i += 2) {
      const auto& pa = pop.individuals[tournament()].genotype;
      const auto& pb = pop.individuals[tournament()].genotype;
      Genotype c1, c2;
      if (var_rng.bernoulli(cfg.crossover_rate)) {
        std::tie(c1, c2) = crossover(pa, pb, inst, var_rng);
      } else {
        c1 = pa;
        c2 = pb;
      }
      offspring[i].genotype = mutate(c1, cfg.mutation_rate, inst, market, var_rng);
      offspring[i + 1].genotype = mutate(c2, cfg.mutation_rate, inst, market, var_rng);
    }
    parallel_for(n, cfg.threads, [&](std::size_t i) {
      offspring[i].objectives =
          decode(offspring[i].genotype, inst, market).objectives;
    });

    std::vector<Individual> merged;
    merged.reserve(2 * n);
    merged.insert(merged.end(), pop.individuals.begin(), pop.individuals.end());
    merged.insert(merged.end(), offspring.begin(), offspring.end());

    if (cfg.refine != RefinePolicy::none) {
      std::vector<int> targets;
      if (cfg.refine == RefinePolicy::all) {
        targets.resize(merged.size());
        for (std::size_t i = 0; i < merged.size(); ++i) targets[i] = static_cast<int>(i);
      } else {
        targets = nondominated_sort(detail::objective_matrix(merged)).front();
      }
      parallel_for(targets.size(), cfg.threads, [&](std::size_t k) {
        auto& ind = merged[targets[k]];
        Genotype refined = refine_energy(ind.genotype, inst, market);
        refined = refine_workers(refined, inst, market);
        if (!(refined == ind.genotype)) {
          ind.genotype = std::move(refined);
          ind.objectives = decode(ind.genotype, inst, market).objectives;
        }
      });
    }

    Rng sel_rng(derive_seed(cfg.seed, detail::kSelectionStream,
                            static_cast<std::uint64_t>(gen)));
    const auto survivors =
        environmental_select(detail::objective_matrix(merged), n, sel, sel_rng);
    std::vector<Individual> next;
    next.reserve(survivors.size());
    for (int i : survivors) next.push_back(merged[i]);
    pop.individuals = std::move(next);
    pop.generation = gen;
    result.fronts.push_back({gen, detail::front_points(pop.individuals)});
  }

  const auto front_idx = nondominated_indices(detail::objective_matrix(pop.individuals));
  for (int i : front_idx) result.final_front.push_back(pop.individuals[i]);
  result.final_population = std::move(pop);
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_begin).count();
  return result;
}

}  // namespace eafjsp
