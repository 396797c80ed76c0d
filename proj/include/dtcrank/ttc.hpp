#pragma once

#include <cstdint>
#include <vector>

#include "dtcrank/model.hpp"

namespace dtcrank {

// How many of the currently existing trading cycles are cleared per round.
// The final assignment is the same under all policies; only the recorded
// step indices differ.
enum class CyclePolicy {
  AllCycles,   // clear every cycle present in the round
  LexMinOne,   // clear only the cycle containing the lowest-indexed college
  RandomOne,   // clear one cycle chosen uniformly (seeded)
};

// Trading cycle (c_1, ..., c_n): the student seated at c_k points to c_{k+1}
// (indices mod n) as their favorite college still on the market. Rotated so
// it starts at the college whose seated student has the lowest index.
struct Cycle {
  std::vector<CollegeId> colleges;
  int step = 0;  // 1-based removal round
};

struct TtcResult {
  Outcome assignment;              // where everyone ends up after trading
  std::vector<Cycle> cycles;       // in removal order
  std::vector<int> college_step;   // college -> 1-based removal round
};

// Top trading cycles from the endowment `out`. Requires a bijective outcome.
TtcResult ttc_run(const Instance& inst, const Outcome& out,
                  CyclePolicy policy = CyclePolicy::AllCycles, uint64_t seed = 0);

// A ranking is a trading decomposition if every tier splits into trading
// cycles of the market formed by that tier and everything below it.
struct TtcRankingCheck {
  bool ok = false;
  int bad_tier = 0;  // 1-based tier that fails, 0 when ok
};
TtcRankingCheck is_ttc_ranking(const Instance& inst, const Outcome& out, const Ranking& rank);

// No reshuffle of seats can make a student better off without hurting
// another: equivalent to trading reaching a fixed point immediately.
bool pareto_efficient(const Instance& inst, const Outcome& out);

}  // namespace dtcrank
