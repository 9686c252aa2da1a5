#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "seqsched/error.hpp"
#include "seqsched/rational.hpp"

// Jobs and machines are 0-based in code (job j is printed as J{j+1},
// machine i as M{i+1}).
namespace seqsched {

inline constexpr int kUnassigned = -1;

// Unrelated-machines instance: time(i, j) is the processing time of job j on
// machine i, plus a starting load per machine.
class Instance {
 public:
  Instance() = default;

  // rows[i][j] = time of job j on machine i.
  explicit Instance(std::vector<std::vector<Rational>> rows,
                    std::vector<Rational> initial_loads = {})
      : times_(std::move(rows)), initial_(std::move(initial_loads)) {
    if (times_.empty()) throw std::invalid_argument("instance needs m >= 1");
    jobs_ = static_cast<int>(times_.front().size());
    for (const auto& row : times_) {
      if (static_cast<int>(row.size()) != jobs_) {
        throw std::invalid_argument("ragged processing-time matrix");
      }
      for (const auto& p : row) {
        if (p.sign() < 0) throw std::invalid_argument("negative processing time");
      }
    }
    if (initial_.empty()) initial_.assign(times_.size(), Rational(0));
    if (initial_.size() != times_.size()) {
      throw std::invalid_argument("initial_loads length must equal m");
    }
    for (const auto& l : initial_) {
      if (l.sign() < 0) throw std::invalid_argument("negative initial load");
    }
  }

  int machines() const { return static_cast<int>(times_.size()); }
  int jobs() const { return jobs_; }

  const Rational& time(int machine, int job) const { return times_[machine][job]; }
  const std::vector<std::vector<Rational>>& rows() const { return times_; }
  const std::vector<Rational>& initial_loads() const { return initial_; }

  bool has_initial_loads() const {
    return std::any_of(initial_.begin(), initial_.end(),
                       [](const Rational& r) { return !r.is_zero(); });
  }

  // Every processing time and initial load multiplied by factor (> 0).
  Instance scaled(const Rational& factor) const {
    auto rows = times_;
    for (auto& row : rows)
      for (auto& p : row) p *= factor;
    auto init = initial_;
    for (auto& l : init) l *= factor;
    return Instance(std::move(rows), std::move(init));
  }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<std::vector<Rational>> times_;
  std::vector<Rational> initial_;
  int jobs_ = 0;
};

// Complete assignment: schedule[j] is the machine of job j.
using Schedule = std::vector<int>;
using LoadVector = std::vector<Rational>;

// Assignment of a subset of the jobs.
class PartialSchedule {
 public:
  PartialSchedule() = default;
  explicit PartialSchedule(int jobs) : slots_(jobs, kUnassigned) {}
  static PartialSchedule from(const Schedule& s) {
    PartialSchedule p;
    p.slots_ = s;
    return p;
  }

  int jobs() const { return static_cast<int>(slots_.size()); }
  int machine_of(int job) const { return slots_[job]; }
  bool assigned(int job) const { return slots_[job] != kUnassigned; }

  void assign(int job, int machine) {
    if (slots_[job] != kUnassigned) {
      throw std::invalid_argument("job " + std::to_string(job + 1) +
                                  " assigned twice");
    }
    slots_[job] = machine;
  }
  void unassign(int job) { slots_[job] = kUnassigned; }

  PartialSchedule with(int job, int machine) const {
    PartialSchedule copy = *this;
    copy.assign(job, machine);
    return copy;
  }

  int assigned_count() const {
    return static_cast<int>(std::count_if(slots_.begin(), slots_.end(),
                                          [](int s) { return s != kUnassigned; }));
  }
  bool complete() const { return assigned_count() == jobs(); }
  const std::vector<int>& slots() const { return slots_; }

  friend bool operator==(const PartialSchedule&, const PartialSchedule&) = default;
  friend auto operator<=>(const PartialSchedule&, const PartialSchedule&) = default;

 private:
  std::vector<int> slots_;
};

namespace detail {
inline void check_machine(const Instance& inst, int machine) {
  if (machine < 0 || machine >= inst.machines()) {
    throw std::out_of_range("machine index " + std::to_string(machine + 1) +
                            " out of range [1, " +
                            std::to_string(inst.machines()) + "]");
  }
}
}  // namespace detail

inline LoadVector loads(const Instance& inst, const PartialSchedule& sched) {
  if (sched.jobs() != inst.jobs()) {
    throw std::invalid_argument("schedule covers " + std::to_string(sched.jobs()) +
                                " jobs, instance has " + std::to_string(inst.jobs()));
  }
  LoadVector out = inst.initial_loads();
  for (int j = 0; j < sched.jobs(); ++j) {
    const int i = sched.machine_of(j);
    if (i == kUnassigned) continue;
    detail::check_machine(inst, i);
    out[i] += inst.time(i, j);
  }
  return out;
}

inline LoadVector loads(const Instance& inst, const Schedule& sched) {
  return loads(inst, PartialSchedule::from(sched));
}

inline Rational max_load(const LoadVector& l) {
  return *std::max_element(l.begin(), l.end());
}

inline Rational makespan(const Instance& inst, const Schedule& sched) {
  if (static_cast<int>(sched.size()) != inst.jobs()) {
    throw std::invalid_argument("makespan needs a complete schedule");
  }
  for (int i : sched) {
    if (i == kUnassigned) throw std::invalid_argument("makespan needs a complete schedule");
  }
  return max_load(loads(inst, sched));
}

// Leaf evaluations allowed for exhaustive searches unless overridden.
inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

// base^exp, saturating at UINT64_MAX.
inline std::uint64_t saturating_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int e = 0; e < exp; ++e) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r *= base;
  }
  return r;
}

struct OptResult {
  Rational makespan;
  Schedule schedule;
};

// Minimum makespan over all completions of `fixed`. Among all minimizers the
// witness is the lexicographically smallest assignment vector. Depth-first
// search visits completions in that order and only accepts strict
// improvements, so pruning on (partial makespan >= best) keeps the witness
// canonical.
inline OptResult constrained_opt(const Instance& inst, const PartialSchedule& fixed,
                                 std::uint64_t budget = kDefaultSearchBudget) {
  const int m = inst.machines();
  const int n = inst.jobs();
  LoadVector load = loads(inst, fixed);

  std::vector<int> free_jobs;
  for (int j = 0; j < n; ++j)
    if (!fixed.assigned(j)) free_jobs.push_back(j);

  if (saturating_pow(static_cast<std::uint64_t>(m), static_cast<int>(free_jobs.size())) >
      budget) {
    throw BudgetExceeded("instance too large for exact search: " +
                         std::to_string(m) + "^" + std::to_string(free_jobs.size()) +
                         " completions exceed budget " + std::to_string(budget));
  }

  Schedule current = fixed.slots();
  OptResult best;
  bool found = false;

  auto recurse = [&](auto&& self, std::size_t depth, const Rational& partial) -> void {
    if (found && partial >= best.makespan) return;
    if (depth == free_jobs.size()) {
      best.makespan = partial;
      best.schedule = current;
      found = true;
      return;
    }
    const int j = free_jobs[depth];
    for (int i = 0; i < m; ++i) {
      load[i] += inst.time(i, j);
      current[j] = i;
      self(self, depth + 1, std::max(partial, load[i]));
      load[i] -= inst.time(i, j);
    }
    current[j] = kUnassigned;
  };
  recurse(recurse, 0, max_load(load));
  return best;
}

inline OptResult opt(const Instance& inst, std::uint64_t budget = kDefaultSearchBudget) {
  return constrained_opt(inst, PartialSchedule(inst.jobs()), budget);
}

// Two-machine subset enumeration; must agree with constrained_opt.
inline OptResult opt_two_machines(const Instance& inst) {
  if (inst.machines() != 2) throw std::invalid_argument("opt_two_machines needs m = 2");
  const int n = inst.jobs();
  if (n > 30) throw BudgetExceeded("instance too large for exact search");
  OptResult best;
  bool found = false;
  // mask bit (n-1-j) set <=> job j on M2, so ascending masks are
  // lexicographically ascending schedules.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Rational l0 = inst.initial_loads()[0];
    Rational l1 = inst.initial_loads()[1];
    for (int j = 0; j < n; ++j) {
      if ((mask >> (n - 1 - j)) & 1U) {
        l1 += inst.time(1, j);
      } else {
        l0 += inst.time(0, j);
      }
    }
    const Rational mk = std::max(l0, l1);
    if (!found || mk < best.makespan) {
      found = true;
      best.makespan = mk;
      best.schedule.assign(n, 0);
      for (int j = 0; j < n; ++j) best.schedule[j] = static_cast<int>((mask >> (n - 1 - j)) & 1U);
    }
  }
  return best;
}

// Base-m code of a complete schedule with job 0 as the most significant
// digit: numeric order of codes is lexicographic order of schedules.
inline std::uint64_t schedule_code(const Schedule& s, int machines) {
  std::uint64_t code = 0;
  for (int i : s) code = code * static_cast<std::uint64_t>(machines) + static_cast<std::uint64_t>(i);
  return code;
}

inline Schedule schedule_from_code(std::uint64_t code, int jobs, int machines) {
  Schedule s(jobs);
  for (int j = jobs - 1; j >= 0; --j) {
    s[j] = static_cast<int>(code % static_cast<std::uint64_t>(machines));
    code /= static_cast<std::uint64_t>(machines);
  }
  return s;
}

// "(M1,M2,M1)"
inline std::string format_schedule(const Schedule& s) {
  std::string out = "(";
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (j) out += ',';
    out += s[j] == kUnassigned ? std::string("-") : "M" + std::to_string(s[j] + 1);
  }
  return out + ")";
}

inline std::string format_loads(const LoadVector& l) {
  std::string out = "(";
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i) out += ',';
    out += l[i].to_string();
  }
  return out + ")";
}

}  // namespace seqsched
