#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "eafjsp/directions.hpp"
#include "eafjsp/dominance.hpp"
#include "eafjsp/normalization.hpp"
#include "eafjsp/rng.hpp"

namespace eafjsp {

enum class SelectionStrategy { nsga3, theta_dea, hype };

inline const char* to_string(SelectionStrategy s) {
  switch (s) {
    case SelectionStrategy::nsga3: return "mnsga3";
    case SelectionStrategy::theta_dea: return "mtheta";
    case SelectionStrategy::hype: return "mhype";
  }
  return "?";
}

inline SelectionStrategy selection_from_string(const std::string& s) {
  if (s == "mnsga3" || s == "nsga3") return SelectionStrategy::nsga3;
  if (s == "mtheta" || s == "theta" || s == "theta_dea") return SelectionStrategy::theta_dea;
  if (s == "mhype" || s == "hype") return SelectionStrategy::hype;
  throw config_error("unknown selection strategy '" + s + "'");
}

namespace detail {

inline std::vector<int> all_indices(int n) {
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  return idx;
}

}  // namespace detail

// NSGA-III style survivor selection. Whole fronts are admitted while they
// fit; the splitting front is filled by niching: repeatedly take the
// direction with the lowest niche count (ties broken by seeded draw) and
// admit its candidate with the smallest perpendicular distance.
inline std::vector<int> nsga3_select(const std::vector<std::array<double, 4>>& objs,
                                     int target,
                                     const std::vector<std::vector<double>>& dirs,
                                     Rng& rng) {
  const int n = static_cast<int>(objs.size());
  if (target >= n) return detail::all_indices(n);

  const auto fronts = nondominated_sort(objs);
  std::vector<int> chosen;
  std::size_t level = 0;
  while (level < fronts.size() &&
         chosen.size() + fronts[level].size() <= static_cast<std::size_t>(target)) {
    chosen.insert(chosen.end(), fronts[level].begin(), fronts[level].end());
    ++level;
  }
  if (chosen.size() == static_cast<std::size_t>(target)) return chosen;
  const auto& split = fronts[level];

  const auto norm = NormalizationState::compute(objs, fronts[0]);
  const int ndirs = static_cast<int>(dirs.size());

  auto associate = [&](int i, double& dist) {
    const auto f = norm.normalize(objs[i]);
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (int j = 0; j < ndirs; ++j) {
      const double d = perpendicular_distance(f, dirs[j]);
      if (d < best_d - 1e-15) {
        best_d = d;
        best = j;
      }
    }
    dist = best_d;
    return best;
  };

  std::vector<int> niche_count(ndirs, 0);
  for (int i : chosen) {
    double d;
    ++niche_count[associate(i, d)];
  }
  std::vector<std::vector<std::pair<double, int>>> candidates(ndirs);
  for (int i : split) {
    double d;
    const int j = associate(i, d);
    candidates[j].push_back({d, i});
  }
  for (auto& c : candidates)
    std::sort(c.begin(), c.end());

  std::vector<bool> active(ndirs, true);
  while (chosen.size() < static_cast<std::size_t>(target)) {
    int min_count = std::numeric_limits<int>::max();
    for (int j = 0; j < ndirs; ++j)
      if (active[j]) min_count = std::min(min_count, niche_count[j]);
    std::vector<int> tied;
    for (int j = 0; j < ndirs; ++j)
      if (active[j] && niche_count[j] == min_count) tied.push_back(j);
    const int j = tied[rng.below(tied.size())];
    if (candidates[j].empty()) {
      active[j] = false;
      continue;
    }
    chosen.push_back(candidates[j].front().second);
    candidates[j].erase(candidates[j].begin());
    ++niche_count[j];
  }
  return chosen;
}

namespace detail {

struct ThetaScore {
  int cluster = 0;
  double d1 = 0.0, d2 = 0.0, score = 0.0;
};

inline ThetaScore theta_score(const std::array<double, 4>& normalized,
                              const std::vector<std::vector<double>>& dirs,
                              double theta) {
  ThetaScore best;
  double best_d2 = std::numeric_limits<double>::infinity();
  for (int j = 0; j < static_cast<int>(dirs.size()); ++j) {
    double d1, d2;
    project_to_direction(normalized, dirs[j], d1, d2);
    if (d2 < best_d2 - 1e-15) {
      best_d2 = d2;
      best = {j, d1, d2, d1 + theta * d2};
    }
  }
  return best;
}

}  // namespace detail

// Theta-dominance selection: every solution joins the cluster of the
// direction minimizing its perpendicular distance; within a cluster,
// solutions are ordered by d1 + theta*d2, and distinct score levels form the
// theta-fronts. Fronts fill the next generation in order; the splitting
// front is cut by a seeded random sample.
inline std::vector<int> theta_select(const std::vector<std::array<double, 4>>& objs,
                                     int target,
                                     const std::vector<std::vector<double>>& dirs,
                                     double theta, Rng& rng) {
  const int n = static_cast<int>(objs.size());
  if (target >= n) return detail::all_indices(n);

  const auto fronts = nondominated_sort(objs);
  const auto norm = NormalizationState::compute(objs, fronts[0]);

  std::vector<std::vector<std::pair<double, int>>> clusters(dirs.size());
  for (int i = 0; i < n; ++i) {
    const auto sc = detail::theta_score(norm.normalize(objs[i]), dirs, theta);
    clusters[sc.cluster].push_back({sc.score, i});
  }
  // Theta-front index of a member = number of strictly smaller scores in its
  // cluster's sorted order; equal scores share a front.
  std::vector<std::vector<int>> theta_fronts;
  for (auto& members : clusters) {
    std::sort(members.begin(), members.end());
    int front = -1;
    double prev = -std::numeric_limits<double>::infinity();
    for (const auto& [score, idx] : members) {
      if (score > prev) {
        ++front;
        prev = score;
      }
      if (front >= static_cast<int>(theta_fronts.size()))
        theta_fronts.resize(front + 1);
      theta_fronts[front].push_back(idx);
    }
  }

  std::vector<int> chosen;
  for (const auto& front : theta_fronts) {
    if (chosen.size() + front.size() <= static_cast<std::size_t>(target)) {
      chosen.insert(chosen.end(), front.begin(), front.end());
      if (chosen.size() == static_cast<std::size_t>(target)) break;
    } else {
      std::vector<int> pool = front;
      rng.shuffle(pool);
      pool.resize(target - chosen.size());
      chosen.insert(chosen.end(), pool.begin(), pool.end());
      break;
    }
  }
  return chosen;
}

struct HypeFitness {
  std::vector<double> values;
  bool degenerate = false;  // sampling box had zero volume
};

// Monte Carlo HypE fitness for pruning a front down to n_keep members.
// Samples are drawn uniformly in the box [lower, upper]; a sample dominated
// by exactly c members hands each of them volume * alpha_c / (c * samples),
// with alpha_1 = 1 and alpha_c = alpha_{c-1} * (K - c + 1) / (|P| - c + 1)
// for the K = |P| - n_keep members about to be removed.
inline HypeFitness hype_fitness(const std::vector<std::vector<double>>& points,
                                int n_keep, const std::vector<double>& lower,
                                const std::vector<double>& upper, int samples,
                                Rng& rng) {
  const int n = static_cast<int>(points.size());
  const int dim = static_cast<int>(lower.size());
  HypeFitness out;
  out.values.assign(n, 0.0);
  double volume = 1.0;
  for (int d = 0; d < dim; ++d) volume *= upper[d] - lower[d];
  if (!(volume > 0.0) || dim == 0) {
    out.degenerate = true;
    return out;
  }
  const int removals = std::max(1, n - n_keep);
  std::vector<double> alpha(n + 1, 0.0);
  alpha[1] = 1.0;
  for (int c = 2; c <= removals; ++c)
    alpha[c] = alpha[c - 1] * static_cast<double>(removals - c + 1) / (n - c + 1);

  std::vector<double> z(dim);
  std::vector<int> dominators;
  dominators.reserve(n);
  for (int s = 0; s < samples; ++s) {
    for (int d = 0; d < dim; ++d) z[d] = rng.uniform_real(lower[d], upper[d]);
    dominators.clear();
    for (int i = 0; i < n; ++i) {
      bool dom = true;
      for (int d = 0; d < dim && dom; ++d) dom = points[i][d] <= z[d];
      if (dom) dominators.push_back(i);
    }
    const int c = static_cast<int>(dominators.size());
    if (c >= 1 && c <= removals) {
      const double share = volume * alpha[c] / (c * static_cast<double>(samples));
      for (int i : dominators) out.values[i] += share;
    }
  }
  return out;
}

// Indicator-based selection: whole Pareto fronts are admitted while they
// fit; the splitting front loses its lowest-HypE-fitness member one at a
// time, re-estimating after each removal.
inline std::vector<int> hype_select(const std::vector<std::array<double, 4>>& objs,
                                    int target, int samples, Rng& rng) {
  const int n = static_cast<int>(objs.size());
  if (target >= n) return detail::all_indices(n);

  const auto fronts = nondominated_sort(objs);
  std::vector<int> chosen;
  std::size_t level = 0;
  while (level < fronts.size() &&
         chosen.size() + fronts[level].size() <= static_cast<std::size_t>(target)) {
    chosen.insert(chosen.end(), fronts[level].begin(), fronts[level].end());
    ++level;
  }
  if (chosen.size() == static_cast<std::size_t>(target)) return chosen;

  const auto norm = NormalizationState::compute(objs, fronts[0]);
  std::vector<int> dims;
  for (int d = 0; d < 4; ++d)
    if (norm.active[d]) dims.push_back(d);

  std::vector<int> pool = fronts[level];
  const int slots = target - static_cast<int>(chosen.size());

  if (dims.empty()) {
    // Every retained objective collapsed; prune by seeded draw.
    rng.shuffle(pool);
    pool.resize(slots);
    chosen.insert(chosen.end(), pool.begin(), pool.end());
    return chosen;
  }

  auto reduced = [&](int i) {
    std::vector<double> p(dims.size());
    const auto f = norm.normalize(objs[i]);
    for (std::size_t d = 0; d < dims.size(); ++d) p[d] = f[dims[d]];
    return p;
  };

  while (static_cast<int>(pool.size()) > slots) {
    std::vector<std::vector<double>> points(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) points[i] = reduced(pool[i]);
    std::vector<double> lower(dims.size()), upper(dims.size(), 1.1);
    for (std::size_t d = 0; d < dims.size(); ++d) {
      lower[d] = points[0][d];
      for (const auto& p : points) lower[d] = std::min(lower[d], p[d]);
    }
    const auto fit = hype_fitness(points, slots, lower, upper, samples, rng);
    int worst = 0;
    for (std::size_t i = 1; i < pool.size(); ++i)
      if (fit.values[i] < fit.values[worst]) worst = static_cast<int>(i);
    pool.erase(pool.begin() + worst);
  }
  chosen.insert(chosen.end(), pool.begin(), pool.end());
  return chosen;
}

struct SelectionConfig {
  SelectionStrategy strategy = SelectionStrategy::nsga3;
  double theta = 5.0;
  int hype_samples = 100;
  const std::vector<std::vector<double>>* directions = nullptr;
};

inline std::vector<int> environmental_select(
    const std::vector<std::array<double, 4>>& objs, int target,
    const SelectionConfig& cfg, Rng& rng) {
  switch (cfg.strategy) {
    case SelectionStrategy::nsga3:
      return nsga3_select(objs, target, *cfg.directions, rng);
    case SelectionStrategy::theta_dea:
      return theta_select(objs, target, *cfg.directions, cfg.theta, rng);
    case SelectionStrategy::hype:
      return hype_select(objs, target, cfg.hype_samples, rng);
  }
  return {};
}

}  // namespace eafjsp
