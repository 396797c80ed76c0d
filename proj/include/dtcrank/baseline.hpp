#pragma once

#include <vector>

#include "dtcrank/model.hpp"

namespace dtcrank {

// Student-proposing deferred acceptance. Needs priorities and an equal
// number of students and colleges; the result is stable.
Outcome deferred_acceptance(const Instance& inst);

struct StabilityCheck {
  bool stable = false;
  std::vector<std::pair<StudentId, CollegeId>> blocking;  // sorted (student, college)
};
StabilityCheck check_stable(const Instance& inst, const Outcome& out);

// Which colleges admitted each student. The assigned college must be among
// them; beyond that the sets are free-form observational data.
struct AdmissionsData {
  std::vector<std::vector<CollegeId>> admitted;  // per student, sorted
};

// Revealed-preference scoreboard: a student's chosen college beats every
// other college that admitted them; score = total wins; rank by score with
// ties sharing a tier.
struct ScoredRanking {
  std::vector<int> score;  // per college
  Ranking ranking;
};
ScoredRanking rp_ranking(const Instance& inst, const Outcome& out, const AdmissionsData& adm);

// Correlation of two tier rankings over the same colleges, tie-aware,
// in [-1, 1]. Pairs tied in both rankings are ignored; if either ranking
// ties everything the statistic is undefined and reported as 0.
double kendall_tau_b(const Ranking& a, const Ranking& b);

}  // namespace dtcrank
