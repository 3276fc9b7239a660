#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eafjsp/decoder.hpp"
#include "eafjsp/instance.hpp"
#include "eafjsp/market.hpp"
#include "eafjsp/objectives.hpp"

namespace eafjsp {

struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Guard rails for exhaustive enumeration; the state estimate is checked
// before any search starts.
struct TinyInstanceLimit {
  int max_total_ops = 8;
  int max_horizon = 24;
  int max_machines = 4;
  double max_states = 5e8;
};

struct ReferencePoint {
  ObjectiveVector objectives;
  double gap = 0.0;
  friend bool operator==(const ReferencePoint&, const ReferencePoint&) = default;
};

struct ReferenceSet {
  std::vector<ReferencePoint> points;
  double gap_max = 0.0;
  std::string fingerprint;
};

inline std::string instance_fingerprint(const Instance& inst,
                                        const MarketSeries& market) {
  std::uint64_t h = 0x9d2c5680u;
  auto mix = [&h](double v) {
    std::uint64_t bits;
    static_assert(sizeof(bits) == sizeof(v));
    std::memcpy(&bits, &v, sizeof(bits));
    h = splitmix64(h ^ bits);
  };
  h = splitmix64(h ^ static_cast<std::uint64_t>(inst.machine_count()));
  h = splitmix64(h ^ static_cast<std::uint64_t>(inst.horizon()));
  for (const auto& job : inst.jobs()) {
    h = splitmix64(h ^ job.ops.size());
    for (const auto& op : job.ops) {
      for (const auto& e : op.eligible) {
        h = splitmix64(h ^ static_cast<std::uint64_t>(e.machine));
        h = splitmix64(h ^ static_cast<std::uint64_t>(e.time));
      }
      mix(op.energy_demand);
      h = splitmix64(h ^ static_cast<std::uint64_t>(op.worker_demand));
    }
  }
  for (int t = 0; t < market.size(); ++t) {
    mix(market.price(t));
    mix(market.emission(t));
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline double estimate_states(const Instance& inst) {
  double states = 1.0;
  for (int f = 0; f < inst.total_ops(); ++f) {
    const auto& op = inst.op(f);
    const double starts = inst.horizon() - op.min_time() + 1;
    states *= static_cast<double>(op.eligible.size()) * std::max(1.0, starts);
  }
  return states;
}

namespace detail {

struct EnumerationState {
  const Instance& inst;
  const MarketSeries& market;
  std::vector<std::vector<std::pair<int, int>>> machine_busy;  // (start, end)
  std::vector<int> worker_load;
  std::vector<int> placed_end;
  double cost = 0.0, emissions = 0.0;
  int makespan = 0;
  std::vector<ReferencePoint> archive;

  EnumerationState(const Instance& i, const MarketSeries& m)
      : inst(i), market(m), machine_busy(i.machine_count()),
        worker_load(i.horizon(), 0), placed_end(i.total_ops(), 0) {}

  // Keeps the archive mutually non-dominated and free of duplicates.
  void insert_archive(const ObjectiveVector& o) {
    for (const auto& p : archive)
      if (weakly_dominates(p.objectives, o)) return;
    std::erase_if(archive,
                  [&](const ReferencePoint& p) { return dominates(o, p.objectives); });
    archive.push_back({o, 0.0});
  }

  void recurse(int flat) {
    if (flat == inst.total_ops()) {
      int peak = 0;
      for (int w : worker_load) peak = std::max(peak, w);
      insert_archive({static_cast<double>(makespan), cost, emissions,
                      static_cast<double>(peak)});
      return;
    }
    const auto [job, k] = inst.job_op(flat);
    // Job-major flat order guarantees the job predecessor is already placed.
    const int pred_end = k > 0 ? placed_end[inst.flat_index(job, k - 1)] : 0;
    const auto& op = inst.op(flat);
    for (const auto& alt : op.eligible) {
      for (int start = pred_end; start + alt.time <= inst.horizon(); ++start) {
        bool overlap = false;
        for (const auto& [bs, be] : machine_busy[alt.machine])
          if (start < be && bs < start + alt.time) {
            overlap = true;
            break;
          }
        if (overlap) continue;
        const int end = start + alt.time;
        machine_busy[alt.machine].push_back({start, end});
        placed_end[flat] = end;
        double dc = 0.0, de = 0.0;
        for (int t = start; t < end; ++t) {
          worker_load[t] += op.worker_demand;
          dc += op.energy_demand * market.price(t);
          de += op.energy_demand * market.emission(t);
        }
        cost += dc;
        emissions += de;
        const int saved_makespan = makespan;
        makespan = std::max(makespan, end);

        recurse(flat + 1);

        makespan = saved_makespan;
        cost -= dc;
        emissions -= de;
        for (int t = start; t < end; ++t) worker_load[t] -= op.worker_demand;
        machine_busy[alt.machine].pop_back();
      }
    }
  }
};

}  // namespace detail

// Exhaustive exact Pareto front over every (machine assignment, start time)
// combination satisfying precedence, machine exclusivity and the horizon.
// Every returned point has optimality gap zero.
inline ReferenceSet exact_front(const Instance& inst, const MarketSeries& market,
                                const TinyInstanceLimit& limit = {}) {
  if (inst.total_ops() > limit.max_total_ops)
    throw budget_error("instance has " + std::to_string(inst.total_ops()) +
                       " operations, limit " + std::to_string(limit.max_total_ops));
  if (inst.horizon() > limit.max_horizon)
    throw budget_error("horizon " + std::to_string(inst.horizon()) + " above limit " +
                       std::to_string(limit.max_horizon));
  if (inst.machine_count() > limit.max_machines)
    throw budget_error("machine count above limit");
  const double states = estimate_states(inst);
  if (states > limit.max_states)
    throw budget_error("estimated state count " + std::to_string(states) +
                       " exceeds budget " + std::to_string(limit.max_states));
  if (market.size() < inst.horizon())
    throw budget_error("market series shorter than horizon");

  detail::EnumerationState st(inst, market);
  st.recurse(0);

  ReferenceSet out;
  out.points = std::move(st.archive);
  std::sort(out.points.begin(), out.points.end(),
            [](const ReferencePoint& a, const ReferencePoint& b) {
              return a.objectives.to_array() < b.objectives.to_array();
            });
  out.gap_max = 0.0;
  out.fingerprint = instance_fingerprint(inst, market);
  return out;
}

// Epsilon-grid bookkeeping over a reference front: one of the three
// non-makespan objectives stays free and is minimized; the makespan and the
// other two are bounded at four equally spaced levels each, giving
// 3 * 4 * 4 * 4 = 192 cells.
struct EpsilonCell {
  int free_objective = 1;          // index into the objective vector
  double makespan_limit = 0.0;
  double limit_a = 0.0, limit_b = 0.0;  // the two constrained objectives
  bool feasible = false;
  ObjectiveVector minimizer;
};

struct EpsilonGrid {
  int total_cells = 0;
  int feasible_cells = 0;
  std::vector<EpsilonCell> cells;
};

inline EpsilonGrid epsilon_grid(const ReferenceSet& front) {
  if (front.points.empty())
    throw std::invalid_argument("epsilon grid needs a non-empty front");

  std::array<double, 4> lo = front.points[0].objectives.to_array();
  std::array<double, 4> hi = lo;
  for (const auto& p : front.points) {
    const auto a = p.objectives.to_array();
    for (int d = 0; d < 4; ++d) {
      lo[d] = std::min(lo[d], a[d]);
      hi[d] = std::max(hi[d], a[d]);
    }
  }
  auto level = [&](int d, int step) {
    return lo[d] + (hi[d] - lo[d]) * static_cast<double>(step) / 3.0;
  };

  EpsilonGrid grid;
  for (int free_obj = 1; free_obj <= 3; ++free_obj) {
    std::array<int, 2> constrained{};
    int c = 0;
    for (int d = 1; d <= 3; ++d)
      if (d != free_obj) constrained[c++] = d;
    for (int sm = 0; sm < 4; ++sm) {
      for (int sa = 0; sa < 4; ++sa) {
        for (int sb = 0; sb < 4; ++sb) {
          EpsilonCell cell;
          cell.free_objective = free_obj;
          cell.makespan_limit = level(0, sm);
          cell.limit_a = level(constrained[0], sa);
          cell.limit_b = level(constrained[1], sb);
          const double eps = 1e-9;
          for (const auto& p : front.points) {
            const auto a = p.objectives.to_array();
            if (a[0] > cell.makespan_limit + eps) continue;
            if (a[constrained[0]] > cell.limit_a + eps) continue;
            if (a[constrained[1]] > cell.limit_b + eps) continue;
            if (!cell.feasible || a[free_obj] < cell.minimizer.to_array()[free_obj] ||
                (a[free_obj] == cell.minimizer.to_array()[free_obj] &&
                 a < cell.minimizer.to_array())) {
              cell.feasible = true;
              cell.minimizer = p.objectives;
            }
          }
          if (cell.feasible) ++grid.feasible_cells;
          grid.cells.push_back(cell);
        }
      }
    }
  }
  grid.total_cells = static_cast<int>(grid.cells.size());
  return grid;
}

}  // namespace eafjsp
