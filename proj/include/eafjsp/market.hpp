#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "eafjsp/instance.hpp"
#include "eafjsp/rng.hpp"

namespace eafjsp {

struct load_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Per-time-step energy price and emission factor, piecewise constant over
// unit steps. Both series always have the same length.
class MarketSeries {
 public:
  MarketSeries(std::vector<double> price, std::vector<double> emission)
      : price_(std::move(price)), emission_(std::move(emission)) {
    if (price_.empty() || emission_.empty())
      throw load_error("market series must be non-empty");
    if (price_.size() != emission_.size())
      throw load_error("price and emission series differ in length");
    for (double v : price_)
      if (!(v >= 0.0)) throw load_error("negative or non-finite price");
    for (double v : emission_)
      if (!(v >= 0.0)) throw load_error("negative or non-finite emission factor");
  }

  int size() const { return static_cast<int>(price_.size()); }
  double price(int t) const { return price_[t]; }
  double emission(int t) const { return emission_[t]; }
  const std::vector<double>& prices() const { return price_; }
  const std::vector<double>& emissions() const { return emission_; }

  double min_price() const { return *std::min_element(price_.begin(), price_.end()); }
  double max_price() const { return *std::max_element(price_.begin(), price_.end()); }
  double min_emission() const {
    return *std::min_element(emission_.begin(), emission_.end());
  }
  double max_emission() const {
    return *std::max_element(emission_.begin(), emission_.end());
  }

  // Cyclic extension (or truncation) to exactly `horizon` steps.
  MarketSeries fit(int horizon) const {
    std::vector<double> p(horizon), e(horizon);
    const int n = size();
    for (int t = 0; t < horizon; ++t) {
      p[t] = price_[t % n];
      e[t] = emission_[t % n];
    }
    return MarketSeries(std::move(p), std::move(e));
  }

  friend bool operator==(const MarketSeries&, const MarketSeries&) = default;

 private:
  std::vector<double> price_;
  std::vector<double> emission_;
};

// Ranges for the deterministic stand-in data: market series blocks and
// per-operation energy demands. Read from a key-value file via
// parse_enrichment_config.
struct EnrichmentConfig {
  std::uint64_t seed = 1;
  double price_lo = 0.5, price_hi = 5.0;
  double emission_lo = 0.1, emission_hi = 1.0;
  double energy_lo = 1.0, energy_hi = 5.0;
  int block = 4;  // steps per constant market block
};

// CSV with header "t,price,emission"; t must count up from 0. The series is
// repeated cyclically when shorter than the horizon and truncated when
// longer, so the result always has exactly `horizon` steps.
inline MarketSeries load_market(const std::string& csv, int horizon) {
  if (horizon < 1) throw load_error("horizon must be >= 1");
  std::istringstream in(csv);
  std::string line;
  int line_no = 0;

  auto strip = [](std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == '\n')) s.pop_back();
    return s;
  };

  if (!std::getline(in, line)) throw load_error("empty market CSV");
  ++line_no;
  if (strip(line) != "t,price,emission")
    throw load_error("line 1: expected header 't,price,emission'");

  std::vector<double> price, emission;
  long long expected_t = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip(line);
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    double vals[3];
    for (int c = 0; c < 3; ++c) {
      if (!std::getline(row, cell, ','))
        throw load_error("line " + std::to_string(line_no) + ": missing column " +
                         std::to_string(c + 1));
      try {
        std::size_t pos = 0;
        vals[c] = std::stod(cell, &pos);
        if (pos != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw load_error("line " + std::to_string(line_no) + ": non-numeric cell '" +
                         cell + "'");
      }
    }
    if (std::getline(row, cell, ','))
      throw load_error("line " + std::to_string(line_no) + ": too many columns");
    if (static_cast<long long>(vals[0]) != expected_t)
      throw load_error("line " + std::to_string(line_no) + ": expected t=" +
                       std::to_string(expected_t));
    if (vals[1] < 0.0 || vals[2] < 0.0)
      throw load_error("line " + std::to_string(line_no) + ": negative value");
    price.push_back(vals[1]);
    emission.push_back(vals[2]);
    ++expected_t;
  }
  if (price.empty()) throw load_error("market CSV has no data rows");
  return MarketSeries(std::move(price), std::move(emission)).fit(horizon);
}

// Reproducible piecewise-constant series: one price/emission level per block
// of cfg.block steps, levels uniform in the configured ranges.
inline MarketSeries synth_market(int horizon, std::uint64_t seed,
                                 const EnrichmentConfig& cfg = {}) {
  if (horizon < 1) throw load_error("horizon must be >= 1");
  const int block = std::max(1, cfg.block);
  std::vector<double> price(horizon), emission(horizon);
  for (int b = 0; b * block < horizon; ++b) {
    Rng pr(derive_seed(seed, 0x5052ULL, static_cast<std::uint64_t>(b)));
    Rng er(derive_seed(seed, 0x454dULL, static_cast<std::uint64_t>(b)));
    const double pv = pr.uniform_real(cfg.price_lo, cfg.price_hi);
    const double ev = er.uniform_real(cfg.emission_lo, cfg.emission_hi);
    for (int t = b * block; t < std::min(horizon, (b + 1) * block); ++t) {
      price[t] = pv;
      emission[t] = ev;
    }
  }
  return MarketSeries(std::move(price), std::move(emission));
}

// Re-derives every operation's energy demand from (job, op, slowest time)
// under the configured range. Pure; returns a new instance.
inline Instance enrich_energy(const Instance& inst, const EnrichmentConfig& cfg) {
  std::vector<Job> jobs = inst.jobs();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    for (std::size_t j = 0; j < jobs[i].ops.size(); ++j) {
      auto& op = jobs[i].ops[j];
      const std::uint64_t h = derive_seed(
          cfg.seed, 0x656eULL, static_cast<std::uint64_t>(i + 1),
          static_cast<std::uint64_t>(j + 1), static_cast<std::uint64_t>(op.max_time()));
      const double frac = static_cast<double>(h >> 11) * 0x1.0p-53;
      op.energy_demand = cfg.energy_lo + (cfg.energy_hi - cfg.energy_lo) * frac;
    }
  }
  return inst.with_jobs(std::move(jobs));
}

// Flat key-value text: one "key = value" per line, '#' comments. Keys:
// seed, price_lo, price_hi, emission_lo, emission_hi, energy_lo, energy_hi,
// block.
inline EnrichmentConfig parse_enrichment_config(const std::string& text) {
  EnrichmentConfig cfg;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      if (line.find_first_not_of(" \t\r\n") != std::string::npos)
        throw load_error("line " + std::to_string(line_no) + ": expected key = value");
      continue;
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r\n");
      const auto e = s.find_last_not_of(" \t\r\n");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    try {
      if (key == "seed") cfg.seed = std::stoull(val);
      else if (key == "price_lo") cfg.price_lo = std::stod(val);
      else if (key == "price_hi") cfg.price_hi = std::stod(val);
      else if (key == "emission_lo") cfg.emission_lo = std::stod(val);
      else if (key == "emission_hi") cfg.emission_hi = std::stod(val);
      else if (key == "energy_lo") cfg.energy_lo = std::stod(val);
      else if (key == "energy_hi") cfg.energy_hi = std::stod(val);
      else if (key == "block") cfg.block = std::stoi(val);
      else throw load_error("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    } catch (const load_error&) {
      throw;
    } catch (const std::exception&) {
      throw load_error("line " + std::to_string(line_no) + ": bad value '" + val + "'");
    }
  }
  return cfg;
}

}  // namespace eafjsp
