#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "eafjsp/decoder.hpp"
#include "eafjsp/genotype.hpp"

namespace eafjsp {

namespace detail {

// Slack window [lo, hi) of one operation inside a schedule: bounded by the
// job predecessor/successor, the machine predecessor/successor (append-only
// machine order is preserved), and a cap that keeps the makespan from
// growing.
struct SlackWindow {
  int lo = 0;
  int hi = 0;
};

struct ScheduleView {
  std::vector<int> machine_pred;  // flat index of the previous op on the machine, -1
  std::vector<int> machine_succ;
  std::vector<int> time_order;    // flat indices sorted by (start, flat)

  ScheduleView(const Schedule& s, const Instance& inst) {
    const int total = inst.total_ops();
    machine_pred.assign(total, -1);
    machine_succ.assign(total, -1);
    time_order.resize(total);
    for (int f = 0; f < total; ++f) time_order[f] = f;
    std::sort(time_order.begin(), time_order.end(), [&](int a, int b) {
      if (s.ops[a].start != s.ops[b].start) return s.ops[a].start < s.ops[b].start;
      return a < b;
    });
    std::vector<int> last_on(inst.machine_count(), -1);
    for (int f : time_order) {
      const int m = s.ops[f].machine;
      if (last_on[m] >= 0) {
        machine_pred[f] = last_on[m];
        machine_succ[last_on[m]] = f;
      }
      last_on[m] = f;
    }
  }
};

inline SlackWindow slack_window(const Schedule& s, const Instance& inst,
                                const ScheduleView& view, int f, int cmax_cap) {
  const auto [job, k] = inst.job_op(f);
  SlackWindow w;
  w.lo = 0;
  if (k > 0) w.lo = std::max(w.lo, s.ops[inst.flat_index(job, k - 1)].end);
  if (view.machine_pred[f] >= 0)
    w.lo = std::max(w.lo, s.ops[view.machine_pred[f]].end);
  w.hi = cmax_cap;
  if (k + 1 < inst.ops_in_job(job))
    w.hi = std::min(w.hi, s.ops[inst.flat_index(job, k + 1)].start);
  if (view.machine_succ[f] >= 0)
    w.hi = std::min(w.hi, s.ops[view.machine_succ[f]].start);
  return w;
}

inline void tighten_thresholds(Genotype& g, const MarketSeries& market, int f,
                               int start, int end) {
  double pmax = 0.0, emax = 0.0;
  for (int t = start; t < end; ++t) {
    pmax = std::max(pmax, market.price(t));
    emax = std::max(emax, market.emission(t));
  }
  g.max_cost[f] = pmax;
  g.max_emission[f] = emax;
}

}  // namespace detail

// Greedy energy refinement: walk the decoded operations in time order and
// move each within its slack to the cheapest window; write the result back
// by tightening the moved operations' threshold genes. The rewritten
// genotype is kept only if its decode confirms that neither makespan nor
// energy cost grew, so the returned genotype never decodes worse on either.
inline Genotype refine_energy(const Genotype& g, const Instance& inst,
                              const MarketSeries& market) {
  Schedule s = decode(g, inst, market);
  const double base_cmax = s.objectives.makespan;
  const double base_cost = s.objectives.energy_cost;
  const int cmax_cap = static_cast<int>(base_cmax);

  detail::ScheduleView view(s, inst);
  Genotype candidate = g;
  bool moved = false;
  for (int f : view.time_order) {
    auto& pl = s.ops[f];
    const int tau = pl.end - pl.start;
    const auto w = detail::slack_window(s, inst, view, f, cmax_cap);
    if (w.hi - w.lo < tau) continue;
    auto window_cost = [&](int u) {
      double c = 0.0;
      for (int t = u; t < u + tau; ++t) c += market.price(t);
      return c;
    };
    int best_u = pl.start;
    double best_c = window_cost(pl.start);
    for (int u = w.lo; u + tau <= w.hi; ++u) {
      const double c = window_cost(u);
      if (c < best_c - 1e-12) {
        best_c = c;
        best_u = u;
      }
    }
    if (best_u != pl.start) {
      pl.start = best_u;
      pl.end = best_u + tau;
      detail::tighten_thresholds(candidate, market, f, pl.start, pl.end);
      moved = true;
    }
  }
  if (!moved) return g;

  const Schedule check = decode(candidate, inst, market);
  if (check.objectives.makespan <= base_cmax &&
      check.objectives.energy_cost <= base_cost)
    return candidate;
  return g;
}

// Workforce refinement: find the peak load step, try to shift one of the
// operations running there into a slack window that avoids the step, and
// keep the shift when the re-decoded genotype strictly lowers the peak
// without raising the makespan. Repeats until no shift helps.
inline Genotype refine_workers(const Genotype& g0, const Instance& inst,
                               const MarketSeries& market) {
  Genotype g = g0;
  Schedule s = decode(g, inst, market);
  const double cmax0 = s.objectives.makespan;
  const int cmax_cap = static_cast<int>(cmax0);

  for (;;) {
    const double peak = s.objectives.peak_workers;
    if (peak <= 0.0) break;
    int t_star = 0;
    for (int t = 0; t < static_cast<int>(s.worker_load.size()); ++t)
      if (s.worker_load[t] == static_cast<int>(peak)) {
        t_star = t;
        break;
      }

    detail::ScheduleView view(s, inst);
    bool improved = false;
    for (int f = 0; f < inst.total_ops() && !improved; ++f) {
      const auto& pl = s.ops[f];
      if (!(pl.start <= t_star && t_star < pl.end)) continue;
      const int tau = pl.end - pl.start;
      const auto w = detail::slack_window(s, inst, view, f, cmax_cap);
      const int omega = inst.op(f).worker_demand;
      for (int u = w.lo; u + tau <= w.hi; ++u) {
        if (u <= t_star && t_star < u + tau) continue;  // window must avoid t*
        // Simulated peak after the shift.
        int new_peak = 0;
        for (int t = 0; t < static_cast<int>(s.worker_load.size()); ++t) {
          int load = s.worker_load[t];
          if (pl.start <= t && t < pl.end) load -= omega;
          if (u <= t && t < u + tau) load += omega;
          new_peak = std::max(new_peak, load);
        }
        if (new_peak >= static_cast<int>(peak)) continue;
        Genotype candidate = g;
        detail::tighten_thresholds(candidate, market, f, u, u + tau);
        const Schedule check = decode(candidate, inst, market);
        if (check.objectives.peak_workers < peak &&
            check.objectives.makespan <= cmax0) {
          g = std::move(candidate);
          s = check;
          improved = true;
        }
        break;  // first simulated improvement per operation, verified or not
      }
    }
    if (!improved) break;
  }
  return g;
}

}  // namespace eafjsp
