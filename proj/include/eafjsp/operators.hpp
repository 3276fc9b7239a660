#pragma once

#include <utility>
#include <vector>

#include "eafjsp/genotype.hpp"
#include "eafjsp/instance.hpp"
#include "eafjsp/market.hpp"
#include "eafjsp/rng.hpp"

namespace eafjsp {

// Precedence-preserving order crossover on the sequence string: positions of
// jobs in `keep` stay as in `primary`; the remaining slots are filled with
// the other jobs in `donor` order. Occurrence counts are preserved, so the
// child is always a valid sequence.
inline std::vector<int> pox_sequence(const std::vector<int>& primary,
                                     const std::vector<int>& donor,
                                     const std::vector<bool>& keep) {
  std::vector<int> child(primary.size(), -1);
  for (std::size_t p = 0; p < primary.size(); ++p)
    if (keep[primary[p]]) child[p] = primary[p];
  std::size_t fill = 0;
  for (int job : donor) {
    if (keep[job]) continue;
    while (child[fill] != -1) ++fill;
    child[fill] = job;
  }
  return child;
}

// POX on the sequence strings plus uniform crossover on the machine and
// threshold strings. The kept-job subset is drawn uniformly among non-empty
// proper subsets (single-job instances degenerate to copies).
inline std::pair<Genotype, Genotype> crossover(const Genotype& a, const Genotype& b,
                                               const Instance& inst, Rng& rng) {
  const int jobs = inst.job_count();
  std::vector<bool> keep(jobs, false);
  if (jobs > 1) {
    for (;;) {
      int kept = 0;
      for (int i = 0; i < jobs; ++i) {
        keep[i] = rng.bernoulli(0.5);
        kept += keep[i];
      }
      if (kept > 0 && kept < jobs) break;
    }
  } else if (jobs == 1) {
    keep[0] = true;
  }

  Genotype c1 = a, c2 = b;
  c1.sequence = pox_sequence(a.sequence, b.sequence, keep);
  c2.sequence = pox_sequence(b.sequence, a.sequence, keep);
  for (std::size_t f = 0; f < a.machine_choice.size(); ++f) {
    if (rng.bernoulli(0.5)) std::swap(c1.machine_choice[f], c2.machine_choice[f]);
    if (rng.bernoulli(0.5)) std::swap(c1.max_cost[f], c2.max_cost[f]);
    if (rng.bernoulli(0.5)) std::swap(c1.max_emission[f], c2.max_emission[f]);
  }
  return {std::move(c1), std::move(c2)};
}

// Per gene group, with probability `rate`: swap two sequence positions of
// different jobs, reassign one machine gene, re-sample one cost threshold,
// re-sample one emission threshold.
inline Genotype mutate(const Genotype& g, double rate, const Instance& inst,
                       const MarketSeries& market, Rng& rng) {
  Genotype out = g;
  const int total = inst.total_ops();
  if (total == 0) return out;

  if (rng.bernoulli(rate) && total > 1) {
    const int p1 = static_cast<int>(rng.below(total));
    bool swappable = false;
    for (int p = 0; p < total; ++p)
      if (out.sequence[p] != out.sequence[p1]) {
        swappable = true;
        break;
      }
    if (swappable) {
      int p2;
      do {
        p2 = static_cast<int>(rng.below(total));
      } while (out.sequence[p2] == out.sequence[p1]);
      std::swap(out.sequence[p1], out.sequence[p2]);
    }
  }
  if (rng.bernoulli(rate)) {
    const int f = static_cast<int>(rng.below(total));
    out.machine_choice[f] = static_cast<int>(rng.below(inst.op(f).eligible.size()));
  }
  if (rng.bernoulli(rate)) {
    const int f = static_cast<int>(rng.below(total));
    out.max_cost[f] = rng.uniform_real(market.min_price(), market.max_price());
  }
  if (rng.bernoulli(rate)) {
    const int f = static_cast<int>(rng.below(total));
    out.max_emission[f] = rng.uniform_real(market.min_emission(), market.max_emission());
  }
  return out;
}

}  // namespace eafjsp
