#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eafjsp/rng.hpp"

namespace eafjsp {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MachineOption {
  int machine = 0;  // 0-based machine id
  int time = 1;     // whole time steps, >= 1
  friend bool operator==(const MachineOption&, const MachineOption&) = default;
};

struct Operation {
  int job = 0;    // 0-based job id
  int index = 0;  // 0-based position within the job
  std::vector<MachineOption> eligible;
  double energy_demand = 1.0;  // energy drawn per time step while running
  int worker_demand = 1;       // workers occupied while running, >= 1

  int max_time() const {
    int m = 1;
    for (const auto& e : eligible) m = std::max(m, e.time);
    return m;
  }
  int min_time() const {
    int m = eligible.empty() ? 1 : eligible.front().time;
    for (const auto& e : eligible) m = std::min(m, e.time);
    return m;
  }
  friend bool operator==(const Operation&, const Operation&) = default;
};

struct Job {
  std::vector<Operation> ops;
  friend bool operator==(const Job&, const Job&) = default;
};

// Immutable problem instance. Time is discretized into unit steps; the
// horizon is at least the sum of worst-case processing times so that any
// sequence of operations can be scheduled back to back (decoding totality).
class Instance {
 public:
  Instance(std::string name, std::vector<Job> jobs, int machines, int horizon = 0)
      : name_(std::move(name)), jobs_(std::move(jobs)), machines_(machines) {
    if (machines_ < 1) throw parse_error("instance needs at least one machine");
    int bound = 0;
    int flat = 0;
    for (std::size_t i = 0; i < jobs_.size(); ++i) {
      auto& job = jobs_[i];
      if (job.ops.empty())
        throw parse_error("job " + std::to_string(i + 1) + " has no operations");
      offsets_.push_back(flat);
      for (std::size_t j = 0; j < job.ops.size(); ++j) {
        auto& op = job.ops[j];
        op.job = static_cast<int>(i);
        op.index = static_cast<int>(j);
        if (op.eligible.empty())
          throw parse_error("operation (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ") has no eligible machine");
        for (const auto& e : op.eligible) {
          if (e.machine < 0 || e.machine >= machines_)
            throw parse_error("operation (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + ") references machine " +
                              std::to_string(e.machine + 1) + " > " +
                              std::to_string(machines_));
          if (e.time < 1)
            throw parse_error("operation (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + ") has processing time < 1");
        }
        if (op.worker_demand < 1)
          throw parse_error("operation (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ") has worker demand < 1");
        if (op.energy_demand < 0.0)
          throw parse_error("operation (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ") has negative energy demand");
        bound += op.max_time();
        flat_.emplace_back(static_cast<int>(i), static_cast<int>(j));
        ++flat;
      }
    }
    min_horizon_ = std::max(1, bound);
    horizon_ = horizon == 0 ? min_horizon_ : horizon;
    if (horizon_ < min_horizon_)
      throw parse_error("horizon " + std::to_string(horizon_) +
                        " below decoding totality bound " +
                        std::to_string(min_horizon_));
  }

  const std::string& name() const { return name_; }
  const std::vector<Job>& jobs() const { return jobs_; }
  int job_count() const { return static_cast<int>(jobs_.size()); }
  int machine_count() const { return machines_; }
  int horizon() const { return horizon_; }
  int min_horizon() const { return min_horizon_; }
  int total_ops() const { return static_cast<int>(flat_.size()); }

  int flat_index(int job, int op) const { return offsets_[job] + op; }
  std::pair<int, int> job_op(int flat) const { return flat_[flat]; }
  const Operation& op(int flat) const {
    const auto [j, k] = flat_[flat];
    return jobs_[j].ops[k];
  }
  int ops_in_job(int job) const { return static_cast<int>(jobs_[job].ops.size()); }

  Instance with_jobs(std::vector<Job> jobs) const {
    return Instance(name_, std::move(jobs), machines_, horizon_);
  }
  Instance with_horizon(int horizon) const {
    return Instance(name_, jobs_, machines_, horizon);
  }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.jobs_ == b.jobs_ && a.machines_ == b.machines_ &&
           a.horizon_ == b.horizon_;
  }

 private:
  std::string name_;
  std::vector<Job> jobs_;
  int machines_ = 1;
  int horizon_ = 1;
  int min_horizon_ = 1;
  std::vector<int> offsets_;
  std::vector<std::pair<int, int>> flat_;
};

namespace detail {

// Default per-operation energy demand, derived from (job, op, slowest time)
// so that parsing the same file always yields the same enrichment.
inline double default_energy_demand(int job1, int op1, int max_time) {
  const std::uint64_t h =
      derive_seed(0x656e6572ULL, static_cast<std::uint64_t>(job1),
                  static_cast<std::uint64_t>(op1),
                  static_cast<std::uint64_t>(max_time));
  const double frac = static_cast<double>(h >> 11) * 0x1.0p-53;
  return 1.0 + 4.0 * frac;  // [1, 5)
}

struct TokenReader {
  std::istringstream in;
  int line;
  explicit TokenReader(const std::string& s, int line) : in(s), line(line) {}

  bool next_int(long long& out) { return static_cast<bool>(in >> out); }

  long long require_int(const char* what) {
    long long v;
    if (!(in >> v))
      throw parse_error("line " + std::to_string(line) + ": missing " +
                        std::string(what));
    return v;
  }

  bool exhausted() {
    long long v;
    return !(in >> v);
  }
};

}  // namespace detail

// Brandimarte flexible job shop layout: a header line "n m" (a third token,
// the average flexibility, is tolerated and ignored), then one line per job:
// the operation count, followed per operation by the number of eligible
// machines and that many (machine, time) pairs. Machines are 1-based in the
// file and 0-based internally.
inline Instance parse_fjs(const std::string& text, const std::string& name = "") {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_line()) throw parse_error("line 1: empty input");
  long long n = 0, m = 0;
  {
    std::istringstream hdr(line);
    if (!(hdr >> n >> m) || n < 1 || m < 1)
      throw parse_error("line " + std::to_string(line_no) +
                        ": malformed header, expected job and machine counts");
  }

  std::vector<Job> jobs;
  jobs.reserve(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) {
    if (!next_line())
      throw parse_error("line " + std::to_string(line_no + 1) + ": expected job " +
                        std::to_string(i + 1) + ", got end of input");
    detail::TokenReader tr(line, line_no);
    const long long nops = tr.require_int("operation count");
    if (nops < 1)
      throw parse_error("line " + std::to_string(line_no) + ": job " +
                        std::to_string(i + 1) + " declares no operations");
    Job job;
    for (long long j = 0; j < nops; ++j) {
      long long alternatives;
      if (!tr.next_int(alternatives))
        throw parse_error("line " + std::to_string(line_no) + ": job declares " +
                          std::to_string(nops) + " operations but provides " +
                          std::to_string(j));
      if (alternatives < 1)
        throw parse_error("line " + std::to_string(line_no) + ": operation " +
                          std::to_string(j + 1) + " has no eligible machine");
      Operation op;
      for (long long a = 0; a < alternatives; ++a) {
        const long long mach = tr.require_int("machine id");
        const long long time = tr.require_int("processing time");
        if (mach < 1 || mach > m)
          throw parse_error("line " + std::to_string(line_no) + ": operation " +
                            std::to_string(j + 1) + " references machine " +
                            std::to_string(mach) + " > " + std::to_string(m));
        if (time < 1)
          throw parse_error("line " + std::to_string(line_no) + ": operation " +
                            std::to_string(j + 1) + " has processing time < 1");
        op.eligible.push_back({static_cast<int>(mach) - 1, static_cast<int>(time)});
      }
      op.energy_demand = detail::default_energy_demand(
          static_cast<int>(i) + 1, static_cast<int>(j) + 1, op.max_time());
      job.ops.push_back(std::move(op));
    }
    if (!tr.exhausted())
      throw parse_error("line " + std::to_string(line_no) +
                        ": trailing tokens after last operation");
    jobs.push_back(std::move(job));
  }
  return Instance(name, std::move(jobs), static_cast<int>(m));
}

inline std::string serialize_fjs(const Instance& inst) {
  std::ostringstream out;
  out << inst.job_count() << ' ' << inst.machine_count() << '\n';
  for (const auto& job : inst.jobs()) {
    out << job.ops.size();
    for (const auto& op : job.ops) {
      out << ' ' << op.eligible.size();
      for (const auto& e : op.eligible) out << ' ' << e.machine + 1 << ' ' << e.time;
    }
    out << '\n';
  }
  return out.str();
}

// Worker demands from the 1-based job index i and operation index j:
// w = j mod (i mod 4 + 1) + 1, which always lands in [1, 4].
inline Instance assign_worker_demands(const Instance& inst) {
  std::vector<Job> jobs = inst.jobs();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    for (std::size_t j = 0; j < jobs[i].ops.size(); ++j) {
      const int i1 = static_cast<int>(i) + 1;
      const int j1 = static_cast<int>(j) + 1;
      jobs[i].ops[j].worker_demand = j1 % (i1 % 4 + 1) + 1;
    }
  }
  return inst.with_jobs(std::move(jobs));
}

}  // namespace eafjsp
