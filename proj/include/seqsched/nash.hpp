#pragma once

#include <cstdint>
#include <vector>

#include "seqsched/core.hpp"

namespace seqsched {

// No job can strictly lower its load by moving alone (the move adds its own
// time on the target machine).
inline bool is_pure_nash(const Instance& inst, const Schedule& s) {
  const LoadVector l = loads(inst, s);
  for (int j = 0; j < inst.jobs(); ++j) {
    const Rational& cost = l[s[j]];
    for (int i = 0; i < inst.machines(); ++i) {
      if (i != s[j] && l[i] + inst.time(i, j) < cost) return false;
    }
  }
  return true;
}

// Calls fn(schedule) for all m^n schedules in lexicographic order.
template <typename Fn>
void for_each_schedule(int jobs, int machines, Fn&& fn) {
  Schedule s(jobs, 0);
  while (true) {
    fn(static_cast<const Schedule&>(s));
    int j = jobs - 1;
    while (j >= 0 && s[j] == machines - 1) s[j--] = 0;
    if (j < 0) return;
    ++s[j];
  }
}

// All pure Nash equilibria, lexicographically sorted.
inline std::vector<Schedule> pure_nash(const Instance& inst,
                                       std::uint64_t budget = kDefaultSearchBudget) {
  if (saturating_pow(inst.machines(), inst.jobs()) > budget) {
    throw BudgetExceeded("instance too large for exact search: m^n schedules exceed budget");
  }
  std::vector<Schedule> out;
  for_each_schedule(inst.jobs(), inst.machines(), [&](const Schedule& s) {
    if (is_pure_nash(inst, s)) out.push_back(s);
  });
  return out;
}

}  // namespace seqsched
