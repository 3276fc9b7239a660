#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "eafjsp/instance.hpp"
#include "eafjsp/market.hpp"
#include "eafjsp/rng.hpp"

namespace eafjsp {

// Quadripartite gene string. The sequence lists job ids; the k-th occurrence
// of job i stands for operation (i,k). The remaining three strings are
// indexed by flat operation index: the chosen entry of the operation's
// eligible list, and the highest price / emission factor the operation
// accepts at every step it spans.
struct Genotype {
  std::vector<int> sequence;
  std::vector<int> machine_choice;
  std::vector<double> max_cost;
  std::vector<double> max_emission;

  friend bool operator==(const Genotype&, const Genotype&) = default;
};

inline void validate(const Genotype& g, const Instance& inst) {
  const int total = inst.total_ops();
  if (static_cast<int>(g.sequence.size()) != total)
    throw std::invalid_argument("sequence length != total operations");
  std::vector<int> counts(inst.job_count(), 0);
  for (int job : g.sequence) {
    if (job < 0 || job >= inst.job_count())
      throw std::invalid_argument("sequence references unknown job " +
                                  std::to_string(job));
    ++counts[job];
  }
  for (int i = 0; i < inst.job_count(); ++i)
    if (counts[i] != inst.ops_in_job(i))
      throw std::invalid_argument("job " + std::to_string(i) + " occurs " +
                                  std::to_string(counts[i]) + " times, expected " +
                                  std::to_string(inst.ops_in_job(i)));
  if (static_cast<int>(g.machine_choice.size()) != total ||
      static_cast<int>(g.max_cost.size()) != total ||
      static_cast<int>(g.max_emission.size()) != total)
    throw std::invalid_argument("gene string length != total operations");
  for (int f = 0; f < total; ++f) {
    if (g.machine_choice[f] < 0 ||
        g.machine_choice[f] >= static_cast<int>(inst.op(f).eligible.size()))
      throw std::invalid_argument("machine gene out of range at op " +
                                  std::to_string(f));
    if (g.max_cost[f] < 0.0 || g.max_emission[f] < 0.0)
      throw std::invalid_argument("negative threshold gene at op " + std::to_string(f));
  }
}

inline bool is_valid(const Genotype& g, const Instance& inst) {
  try {
    validate(g, inst);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

// Sequence: uniform permutation respecting occurrence counts. Machines:
// uniform over eligible. Thresholds: uniform over the observed market range,
// which yields a mix of binding and non-binding genes.
inline Genotype random_genotype(const Instance& inst, const MarketSeries& market,
                                Rng& rng) {
  Genotype g;
  g.sequence.reserve(inst.total_ops());
  for (int i = 0; i < inst.job_count(); ++i)
    for (int k = 0; k < inst.ops_in_job(i); ++k) g.sequence.push_back(i);
  rng.shuffle(g.sequence);

  const int total = inst.total_ops();
  g.machine_choice.resize(total);
  g.max_cost.resize(total);
  g.max_emission.resize(total);
  const double plo = market.min_price(), phi = market.max_price();
  const double elo = market.min_emission(), ehi = market.max_emission();
  for (int f = 0; f < total; ++f) {
    g.machine_choice[f] =
        static_cast<int>(rng.below(inst.op(f).eligible.size()));
    g.max_cost[f] = rng.uniform_real(plo, phi);
    g.max_emission[f] = rng.uniform_real(elo, ehi);
  }
  return g;
}

}  // namespace eafjsp
