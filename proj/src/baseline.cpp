#include "dtcrank/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

namespace dtcrank {

Outcome deferred_acceptance(const Instance& inst) {
  if (!inst.has_priorities())
    throw std::invalid_argument("deferred_acceptance: priorities required");
  if (inst.num_students() != inst.num_colleges())
    throw std::invalid_argument("deferred_acceptance: equal-sized market required");

  const int n = inst.num_students();
  std::vector<int> next_choice(n, 0);
  std::vector<StudentId> held(n, -1);
  std::deque<StudentId> free;
  for (StudentId i = 0; i < n; ++i) free.push_back(i);

  while (!free.empty()) {
    StudentId i = free.front();
    free.pop_front();
    CollegeId c = inst.prefs[i][next_choice[i]++];
    if (held[c] < 0) {
      held[c] = i;
    } else if (inst.priority_over(c, i, held[c])) {
      free.push_back(held[c]);
      held[c] = i;
    } else {
      free.push_back(i);
    }
  }

  std::vector<CollegeId> seats(n, -1);
  for (CollegeId c = 0; c < n; ++c) seats[held[c]] = c;
  return Outcome::make(inst, seats);
}

StabilityCheck check_stable(const Instance& inst, const Outcome& out) {
  if (!inst.has_priorities())
    throw std::invalid_argument("check_stable: priorities required");
  StabilityCheck result;
  for (StudentId i = 0; i < inst.num_students(); ++i) {
    CollegeId seat = out.student_college[i];
    for (CollegeId c : inst.prefs[i]) {
      if (c == seat) break;  // i only blocks with colleges they'd rather attend
      StudentId holder = out.college_student[c];
      if (holder < 0 || inst.priority_over(c, i, holder)) result.blocking.emplace_back(i, c);
    }
  }
  std::sort(result.blocking.begin(), result.blocking.end());
  result.stable = result.blocking.empty();
  return result;
}

ScoredRanking rp_ranking(const Instance& inst, const Outcome& out, const AdmissionsData& adm) {
  if (static_cast<int>(adm.admitted.size()) != inst.num_students())
    throw std::invalid_argument("rp_ranking: admissions data required for every student");

  ScoredRanking result;
  result.score.assign(inst.num_colleges(), 0);
  for (StudentId i = 0; i < inst.num_students(); ++i) {
    CollegeId chosen = out.student_college[i];
    bool member = false;
    for (CollegeId c : adm.admitted[i]) {
      if (c == chosen) member = true;
      else result.score[chosen] += 1;  // chosen beats every other admitting college
    }
    if (!member)
      throw std::invalid_argument("rp_ranking: " + inst.students[i] +
                                  " attends a college outside their admission set");
  }

  // order colleges by score, ties share a tier
  std::vector<CollegeId> order(inst.num_colleges());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](CollegeId a, CollegeId b) { return result.score[a] > result.score[b]; });
  std::vector<std::vector<CollegeId>> tiers;
  for (CollegeId c : order) {
    if (tiers.empty() || result.score[tiers.back().front()] != result.score[c])
      tiers.push_back({c});
    else
      tiers.back().push_back(c);
  }
  result.ranking = make_ranking(inst, std::move(tiers));
  return result;
}

double kendall_tau_b(const Ranking& a, const Ranking& b) {
  if (a.num_colleges() != b.num_colleges())
    throw std::invalid_argument("kendall_tau_b: rankings cover different college sets");
  const int m = a.num_colleges();
  long concordant = 0, discordant = 0, ties_a = 0, ties_b = 0;
  for (int x = 0; x < m; ++x) {
    for (int y = x + 1; y < m; ++y) {
      int da = a.tier_of[x] - a.tier_of[y];
      int db = b.tier_of[x] - b.tier_of[y];
      int sa = (da > 0) - (da < 0);
      int sb = (db > 0) - (db < 0);
      if (sa == 0 && sb == 0) continue;  // tied in both: uninformative
      if (sa == 0) ++ties_a;
      else if (sb == 0) ++ties_b;
      else if (sa == sb) ++concordant;
      else ++discordant;
    }
  }
  double denom = std::sqrt(static_cast<double>(concordant + discordant + ties_a) *
                           static_cast<double>(concordant + discordant + ties_b));
  if (denom == 0.0) return 0.0;
  return static_cast<double>(concordant - discordant) / denom;
}

}  // namespace dtcrank
