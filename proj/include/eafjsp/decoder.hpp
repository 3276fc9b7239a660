#pragma once

#include <algorithm>
#include <vector>

#include "eafjsp/genotype.hpp"
#include "eafjsp/instance.hpp"
#include "eafjsp/market.hpp"
#include "eafjsp/objectives.hpp"

namespace eafjsp {

struct OpPlacement {
  int machine = -1;
  int start = 0;
  int end = 0;  // start + processing time on the assigned machine
};

// Decoded phenotype. `ops` is indexed by flat operation index; worker_load
// holds the per-step sum of worker demands of running operations.
struct Schedule {
  std::vector<OpPlacement> ops;
  std::vector<int> worker_load;
  ObjectiveVector objectives;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

// Recomputes the objective vector from the raw placements. Pure.
inline ObjectiveVector evaluate(const Schedule& s, const Instance& inst,
                                const MarketSeries& market) {
  ObjectiveVector o;
  for (int f = 0; f < static_cast<int>(s.ops.size()); ++f) {
    const auto& pl = s.ops[f];
    if (pl.machine < 0) continue;
    o.makespan = std::max(o.makespan, static_cast<double>(pl.end));
    const double demand = inst.op(f).energy_demand;
    for (int t = pl.start; t < pl.end; ++t) {
      o.energy_cost += demand * market.price(t);
      o.emissions += demand * market.emission(t);
    }
  }
  for (int w : s.worker_load)
    o.peak_workers = std::max(o.peak_workers, static_cast<double>(w));
  return o;
}

namespace detail {

// Earliest t >= t0 such that every step of [t, t+tau) satisfies both
// thresholds and t+tau <= limit; -1 when no such window exists.
inline int earliest_threshold_window(const MarketSeries& market, int t0, int tau,
                                     double max_cost, double max_emission,
                                     int limit) {
  int run = 0;
  for (int u = t0; u < limit; ++u) {
    const bool ok = market.price(u) <= max_cost && market.emission(u) <= max_emission;
    run = ok ? run + 1 : 0;
    if (run >= tau) return u - tau + 1;
  }
  return -1;
}

}  // namespace detail

// Places operations in sequence-gene order, each on its machine gene, at the
// earliest step where (a) the job predecessor has finished, (b) the machine
// is free (append-only per machine), and (c) price and emission stay at or
// below the threshold genes across the whole window. When no window
// satisfies (c), the operation is placed at the earliest step satisfying
// (a)+(b) alone, which keeps decoding total.
//
// Threshold windows may not end later than horizon minus the worst-case
// processing time of the operations still unplaced. That reserve guarantees
// the fallback placement of every later operation also fits the horizon, so
// worker_load and the market series always cover each running step.
inline Schedule decode(const Genotype& g, const Instance& inst,
                       const MarketSeries& market) {
  const int horizon = inst.horizon();
  Schedule s;
  s.ops.resize(inst.total_ops());
  s.worker_load.assign(horizon, 0);

  std::vector<int> machine_free(inst.machine_count(), 0);
  std::vector<int> job_ready(inst.job_count(), 0);
  std::vector<int> next_op(inst.job_count(), 0);

  int reserve = 0;
  for (int f = 0; f < inst.total_ops(); ++f) reserve += inst.op(f).max_time();

  for (int job : g.sequence) {
    const int k = next_op[job]++;
    const int f = inst.flat_index(job, k);
    const auto& op = inst.op(f);
    const auto& alt = op.eligible[g.machine_choice[f]];
    reserve -= op.max_time();
    const int t0 = std::max(job_ready[job], machine_free[alt.machine]);
    int start = detail::earliest_threshold_window(market, t0, alt.time, g.max_cost[f],
                                                  g.max_emission[f], horizon - reserve);
    if (start < 0) start = t0;
    const int end = start + alt.time;
    s.ops[f] = {alt.machine, start, end};
    machine_free[alt.machine] = end;
    job_ready[job] = end;
    for (int t = start; t < end; ++t) s.worker_load[t] += op.worker_demand;
  }
  s.objectives = evaluate(s, inst, market);
  return s;
}

}  // namespace eafjsp
