#pragma once

#include <array>
#include <vector>

namespace eafjsp {

// Translation by the ideal point (per-objective minima of the merged
// population) and scaling by the first-front nadir estimate. Objective
// dimensions whose spread collapses are dropped for the generation and
// contribute zero to all distances.
struct NormalizationState {
  std::array<double, 4> ideal{};
  std::array<double, 4> nadir{};
  std::array<bool, 4> active{};

  static NormalizationState compute(const std::vector<std::array<double, 4>>& objs,
                                    const std::vector<int>& first_front) {
    NormalizationState n;
    for (int d = 0; d < 4; ++d) {
      n.ideal[d] = objs[0][d];
      for (const auto& o : objs) n.ideal[d] = std::min(n.ideal[d], o[d]);
      n.nadir[d] = objs[first_front[0]][d];
      for (int i : first_front) n.nadir[d] = std::max(n.nadir[d], objs[i][d]);
      n.active[d] = n.nadir[d] - n.ideal[d] > 1e-12;
    }
    return n;
  }

  std::array<double, 4> normalize(const std::array<double, 4>& o) const {
    std::array<double, 4> f{};
    for (int d = 0; d < 4; ++d)
      f[d] = active[d] ? (o[d] - ideal[d]) / (nadir[d] - ideal[d]) : 0.0;
    return f;
  }
};

}  // namespace eafjsp
