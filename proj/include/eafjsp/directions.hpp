#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace eafjsp {

struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DirectionLayer {
  int partitions = 1;
  double shrink = 1.0;  // 1 = boundary layer, 0.5 = halfway to the centroid
};

namespace detail {

inline void simplex_lattice(int dim, int partitions, int pos, int left,
                            std::vector<double>& work,
                            std::vector<std::vector<double>>& out) {
  if (pos == dim - 1) {
    work[pos] = static_cast<double>(left) / partitions;
    out.push_back(work);
    return;
  }
  for (int k = 0; k <= left; ++k) {
    work[pos] = static_cast<double>(k) / partitions;
    simplex_lattice(dim, partitions, pos + 1, left - k, work, out);
  }
}

}  // namespace detail

// Simplex-lattice reference directions (unit-sum, non-negative). Each layer
// contributes C(partitions + dim - 1, dim - 1) points; shrink < 1 pulls a
// layer toward the centroid, the usual two-layer construction for many
// objectives. Duplicate directions across layers are removed.
inline std::vector<std::vector<double>> das_dennis(
    int objectives, const std::vector<DirectionLayer>& layers) {
  std::vector<std::vector<double>> dirs;
  for (const auto& layer : layers) {
    if (layer.partitions < 1) continue;
    std::vector<std::vector<double>> raw;
    std::vector<double> work(objectives, 0.0);
    detail::simplex_lattice(objectives, layer.partitions, 0, layer.partitions, work,
                            raw);
    const double centroid = 1.0 / objectives;
    for (auto& d : raw) {
      if (layer.shrink != 1.0)
        for (double& x : d) x = layer.shrink * x + (1.0 - layer.shrink) * centroid;
      bool dup = false;
      for (const auto& prev : dirs) {
        double diff = 0.0;
        for (int i = 0; i < objectives; ++i) diff += std::abs(prev[i] - d[i]);
        if (diff < 1e-12) {
          dup = true;
          break;
        }
      }
      if (!dup) dirs.push_back(d);
    }
  }
  if (dirs.empty()) throw config_error("reference direction set is empty");
  return dirs;
}

// Largest two-layer set not exceeding the population size, pairing an outer
// boundary layer of p partitions with an inner layer of p-2 shrunk halfway
// to the centroid. When no such pair fits, the largest single layer is used
// (ultimately the axes).
inline std::vector<DirectionLayer> default_direction_layers(int objectives,
                                                            int population) {
  auto layer_count = [&](int p) {
    // C(p + objectives - 1, objectives - 1)
    long long c = 1;
    for (int i = 1; i <= objectives - 1; ++i) c = c * (p + i) / i;
    return c;
  };
  std::vector<DirectionLayer> best;
  long long best_total = 0;
  for (int p = 3; p < 40; ++p) {
    const long long two = layer_count(p) + layer_count(p - 2);
    if (two <= population && two > best_total) {
      best = {{p, 1.0}, {p - 2, 0.5}};
      best_total = two;
    }
  }
  if (!best.empty()) return best;
  for (int p = 1; p < 40; ++p) {
    const long long single = layer_count(p);
    if (p == 1 || single <= population) {
      best = {{p, 1.0}};
      best_total = single;
    }
  }
  return best;
}

// Projection of `point` onto the ray through the origin along `dir`:
// d1 is the length along the ray, d2 the perpendicular distance.
inline void project_to_direction(std::span<const double> point,
                                 std::span<const double> dir, double& d1,
                                 double& d2) {
  double dot = 0.0, dnorm2 = 0.0, pnorm2 = 0.0;
  for (std::size_t i = 0; i < point.size(); ++i) {
    dot += point[i] * dir[i];
    dnorm2 += dir[i] * dir[i];
    pnorm2 += point[i] * point[i];
  }
  const double dnorm = std::sqrt(dnorm2);
  d1 = dnorm > 0.0 ? dot / dnorm : 0.0;
  d2 = std::sqrt(std::max(pnorm2 - d1 * d1, 0.0));
}

inline double perpendicular_distance(std::span<const double> point,
                                     std::span<const double> dir) {
  double d1, d2;
  project_to_direction(point, dir, d1, d2);
  return d2;
}

}  // namespace eafjsp
