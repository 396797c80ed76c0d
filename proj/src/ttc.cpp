#include "dtcrank/ttc.hpp"

#include <algorithm>

#include "dtcrank/rng.hpp"

namespace dtcrank {

namespace {

void require_bijective(const Outcome& out, const char* who) {
  if (!out.bijective())
    throw std::invalid_argument(std::string(who) + ": every college must be assigned");
}

// Cycles of the one-out-degree pointer graph over the colleges still on the
// market, each rotated to start at the college whose seated student has the
// lowest index, listed by lowest member college.
std::vector<std::vector<CollegeId>> pointer_cycles(const std::vector<CollegeId>& remaining,
                                                   const std::vector<int>& next) {
  std::vector<std::vector<CollegeId>> cycles;
  std::vector<int> state(next.size(), 0);  // 0 untouched, 1 on walk, 2 settled
  for (CollegeId start : remaining) {
    if (state[start] != 0) continue;
    std::vector<CollegeId> walk;
    CollegeId c = start;
    while (state[c] == 0) {
      state[c] = 1;
      walk.push_back(c);
      c = next[c];
    }
    if (state[c] == 1) {  // closed a new cycle; cut the tail leading into it
      auto it = std::find(walk.begin(), walk.end(), c);
      cycles.emplace_back(it, walk.end());
    }
    for (CollegeId w : walk) state[w] = 2;
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const auto& a, const auto& b) {
              return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
            });
  return cycles;
}

void rotate_to_lowest_student(std::vector<CollegeId>& cycle, const Outcome& out) {
  size_t best = 0;
  for (size_t k = 1; k < cycle.size(); ++k)
    if (out.college_student[cycle[k]] < out.college_student[cycle[best]]) best = k;
  std::rotate(cycle.begin(), cycle.begin() + best, cycle.end());
}

}  // namespace

TtcResult ttc_run(const Instance& inst, const Outcome& out, CyclePolicy policy, uint64_t seed) {
  require_bijective(out, "ttc_run");
  const int m = inst.num_colleges();
  TtcResult result;
  result.assignment.student_college.assign(inst.num_students(), -1);
  result.assignment.college_student.assign(m, -1);
  result.college_step.assign(m, 0);

  std::vector<char> on_market(m, 1);
  std::vector<CollegeId> remaining(m);
  for (int c = 0; c < m; ++c) remaining[c] = c;
  std::vector<int> next(m, -1);
  Rng rng(seed);

  int step = 0;
  while (!remaining.empty()) {
    for (CollegeId c : remaining) next[c] = fav_masked(inst, out.college_student[c], on_market);
    auto cycles = pointer_cycles(remaining, next);

    std::vector<std::vector<CollegeId>> chosen;
    switch (policy) {
      case CyclePolicy::AllCycles: chosen = std::move(cycles); break;
      case CyclePolicy::LexMinOne: chosen.push_back(cycles.front()); break;
      case CyclePolicy::RandomOne:
        chosen.push_back(cycles[static_cast<size_t>(rng.below(cycles.size()))]);
        break;
    }

    ++step;
    for (auto& cyc : chosen) {
      rotate_to_lowest_student(cyc, out);
      const size_t n = cyc.size();
      for (size_t k = 0; k < n; ++k) {
        StudentId i = out.college_student[cyc[k]];
        CollegeId target = cyc[(k + 1) % n];
        result.assignment.student_college[i] = target;
        result.assignment.college_student[target] = i;
        result.college_step[cyc[k]] = step;
        on_market[cyc[k]] = 0;
      }
      result.cycles.push_back({std::move(cyc), step});
    }
    remaining.erase(std::remove_if(remaining.begin(), remaining.end(),
                                   [&](CollegeId c) { return !on_market[c]; }),
                    remaining.end());
  }
  return result;
}

TtcRankingCheck is_ttc_ranking(const Instance& inst, const Outcome& out, const Ranking& rank) {
  require_bijective(out, "is_ttc_ranking");
  const int m = inst.num_colleges();
  std::vector<char> suffix(m, 0);
  std::vector<int> next(m, -1);

  // Work bottom-up so `suffix` holds the tier plus everything below it.
  std::vector<int> verdict_tier(rank.num_tiers(), 1);
  for (int k = rank.num_tiers() - 1; k >= 0; --k) {
    for (CollegeId c : rank.tiers[k]) suffix[c] = 1;
    for (int c = 0; c < m; ++c)
      if (suffix[c]) next[c] = fav_masked(inst, out.college_student[c], suffix);

    for (CollegeId c : rank.tiers[k]) {
      // c must lie on a pointer cycle staying inside its own tier
      CollegeId walker = c;
      bool ok = false;
      for (int hops = 0; hops < m; ++hops) {
        walker = next[walker];
        if (rank.tier_of[walker] != k) break;
        if (walker == c) { ok = true; break; }
      }
      if (!ok) { verdict_tier[k] = 0; break; }
    }
  }
  for (int k = 0; k < rank.num_tiers(); ++k)
    if (!verdict_tier[k]) return {false, k + 1};
  return {true, 0};
}

bool pareto_efficient(const Instance& inst, const Outcome& out) {
  TtcResult t = ttc_run(inst, out);
  return t.assignment.student_college == out.student_college;
}

}  // namespace dtcrank
