#pragma once

#include <array>
#include <vector>

#include "eafjsp/objectives.hpp"

namespace eafjsp {

// Fast non-dominated sort (dominance counts plus dominated lists). Front 0
// is the non-dominated set; front k is non-dominated once fronts < k are
// removed. All objectives are minimized.
inline std::vector<std::vector<int>> nondominated_sort(
    const std::vector<std::array<double, 4>>& objs) {
  const int n = static_cast<int>(objs.size());
  std::vector<std::vector<int>> dominated(n);
  std::vector<int> count(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (dominates(objs[i], objs[j])) {
        dominated[i].push_back(j);
        ++count[j];
      } else if (dominates(objs[j], objs[i])) {
        dominated[j].push_back(i);
        ++count[i];
      }
    }
  }
  std::vector<std::vector<int>> fronts;
  std::vector<int> current;
  for (int i = 0; i < n; ++i)
    if (count[i] == 0) current.push_back(i);
  while (!current.empty()) {
    fronts.push_back(current);
    std::vector<int> next;
    for (int i : fronts.back())
      for (int j : dominated[i])
        if (--count[j] == 0) next.push_back(j);
    current = std::move(next);
  }
  return fronts;
}

// Indices of the non-dominated members, in input order.
inline std::vector<int> nondominated_indices(
    const std::vector<std::array<double, 4>>& objs) {
  const int n = static_cast<int>(objs.size());
  std::vector<int> keep;
  for (int i = 0; i < n; ++i) {
    bool dom = false;
    for (int j = 0; j < n && !dom; ++j)
      if (j != i && dominates(objs[j], objs[i])) dom = true;
    if (!dom) keep.push_back(i);
  }
  return keep;
}

}  // namespace eafjsp
