#pragma once

#include <array>

namespace eafjsp {

// The four minimized quantities of a schedule.
struct ObjectiveVector {
  double makespan = 0.0;      // completion time of the last operation
  double energy_cost = 0.0;   // sum of per-step demand * price
  double emissions = 0.0;     // sum of per-step demand * emission factor
  double peak_workers = 0.0;  // maximum concurrent worker demand

  std::array<double, 4> to_array() const {
    return {makespan, energy_cost, emissions, peak_workers};
  }
  static ObjectiveVector from_array(const std::array<double, 4>& a) {
    return {a[0], a[1], a[2], a[3]};
  }
  friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;
};

// a dominates b: no worse everywhere, strictly better somewhere.
inline bool dominates(const std::array<double, 4>& a, const std::array<double, 4>& b) {
  bool strict = false;
  for (int i = 0; i < 4; ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) strict = true;
  }
  return strict;
}

inline bool weakly_dominates(const std::array<double, 4>& a,
                             const std::array<double, 4>& b) {
  for (int i = 0; i < 4; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  return dominates(a.to_array(), b.to_array());
}
inline bool weakly_dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  return weakly_dominates(a.to_array(), b.to_array());
}

}  // namespace eafjsp
