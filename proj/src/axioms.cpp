#include "dtcrank/axioms.hpp"

#include <algorithm>

namespace dtcrank {

bool desires(const Instance& inst, const Outcome& out, StudentId i, CollegeId a) {
  return inst.pref_rank[i][a] < inst.pref_rank[i][out.student_college[i]];
}

bool strongly_desires(const Instance& inst, const Outcome& out, const Ranking& rank,
                      StudentId i, CollegeId a) {
  // a must beat the whole tier of i's seat, the seat included.
  CollegeId tier_best = fav(inst, i, rank.tiers[rank.tier_of[out.student_college[i]]]);
  return inst.pref_rank[i][a] < inst.pref_rank[i][tier_best];
}

AxiomReport check_sad(const Instance& inst, const Outcome& out, const Ranking& rank) {
  AxiomReport report{"sad", true, {}};
  for (StudentId i = 0; i < inst.num_students(); ++i) {
    CollegeId seat = out.student_college[i];
    int seat_tier = rank.tier_of[seat];
    for (CollegeId a : inst.prefs[i]) {
      if (a == seat) break;  // everything after the seat is worse
      if (rank.tier_of[a] >= seat_tier)
        report.violations.push_back({"desired-not-higher", i, a, rank.tier_of[a] + 1, -1});
    }
  }
  report.holds = report.violations.empty();
  return report;
}

namespace {

AxiomReport wad_direct(const Instance& inst, const Outcome& out, const Ranking& rank) {
  AxiomReport report{"wad", true, {}};
  for (StudentId i = 0; i < inst.num_students(); ++i) {
    CollegeId seat = out.student_college[i];
    int seat_tier = rank.tier_of[seat];
    CollegeId tier_best = fav(inst, i, rank.tiers[seat_tier]);
    for (CollegeId a : inst.prefs[i]) {
      if (a == tier_best) break;  // from here on nothing beats the whole tier
      if (rank.tier_of[a] >= seat_tier)
        report.violations.push_back({"strongly-desired-not-higher", i, a, rank.tier_of[a] + 1, -1});
    }
  }
  report.holds = report.violations.empty();
  return report;
}

// Tier favorite must beat every college ranked below the student's tier.
AxiomReport wad_tier_favorite(const Instance& inst, const Outcome& out, const Ranking& rank) {
  AxiomReport report{"wad", true, {}};
  for (StudentId i = 0; i < inst.num_students(); ++i) {
    int k = rank.tier_of[out.student_college[i]];
    CollegeId best = fav(inst, i, rank.tiers[k]);
    for (int lower = k + 1; lower < rank.num_tiers(); ++lower)
      for (CollegeId c : rank.tiers[lower])
        if (!inst.prefers(i, best, c))
          report.violations.push_back({"lower-college-beats-tier-favorite", i, c, lower + 1, -1});
  }
  report.holds = report.violations.empty();
  return report;
}

// Favorite within the tier must equal the favorite over the tier plus
// everything below it, college by college.
AxiomReport wad_suffix_favorite(const Instance& inst, const Outcome& out, const Ranking& rank) {
  AxiomReport report{"wad", true, {}};
  std::vector<CollegeId> suffix;
  for (int k = rank.num_tiers() - 1; k >= 0; --k) {
    suffix.insert(suffix.end(), rank.tiers[k].begin(), rank.tiers[k].end());
    for (CollegeId c : rank.tiers[k]) {
      StudentId i = out.college_student[c];
      if (i < 0) continue;
      if (fav(inst, i, rank.tiers[k]) != fav(inst, i, suffix))
        report.violations.push_back({"tier-favorite-not-suffix-favorite", i, c, k + 1, -1});
    }
  }
  report.holds = report.violations.empty();
  if (!report.holds) {
    // suffix sweep runs bottom-up; keep witnesses in tier order
    std::stable_sort(report.violations.begin(), report.violations.end(),
                     [](const AxiomWitness& a, const AxiomWitness& b) { return a.tier < b.tier; });
  }
  return report;
}

}  // namespace

AxiomReport check_wad(const Instance& inst, const Outcome& out, const Ranking& rank, int form) {
  switch (form) {
    case 1: return wad_direct(inst, out, rank);
    case 2: return wad_tier_favorite(inst, out, rank);
    case 3: return wad_suffix_favorite(inst, out, rank);
    default: throw std::invalid_argument("check_wad: form must be 1, 2 or 3");
  }
}

DemandCount demand_counts(const Instance& inst, const Outcome& out, const Ranking& rank,
                          int tier_index) {
  if (tier_index < 0 || tier_index >= rank.num_tiers())
    throw std::invalid_argument("demand_counts: tier index out of range");
  const auto& tier = rank.tiers[tier_index];
  std::vector<int> demand(inst.num_colleges(), 0);
  for (CollegeId c : tier) {
    StudentId i = out.college_student[c];
    if (i < 0)
      throw std::invalid_argument("demand_counts: tier college " + inst.colleges[c] +
                                  " has no assigned student");
    demand[fav(inst, i, tier)] += 1;
  }
  DemandCount dc;
  dc.tier = tier_index + 1;
  for (CollegeId c : tier) dc.counts.emplace_back(c, demand[c]);
  return dc;
}

AxiomReport check_balanced(const Instance& inst, const Outcome& out, const Ranking& rank) {
  AxiomReport report{"balanced", true, {}};
  for (int k = 0; k < rank.num_tiers(); ++k) {
    const auto& tier = rank.tiers[k];
    std::vector<int> demand(inst.num_colleges(), 0);
    int residents = 0;
    for (CollegeId c : tier) {
      StudentId i = out.college_student[c];
      if (i < 0) continue;
      ++residents;
      demand[fav(inst, i, tier)] += 1;
    }
    if (residents == 0) {
      report.violations.push_back({"empty-tier", -1, -1, k + 1, -1});
      continue;
    }
    for (CollegeId c : tier) {
      if (demand[c] > 1)
        report.violations.push_back({"overdemanded", -1, c, k + 1, demand[c]});
      else if (demand[c] == 0)
        report.violations.push_back({"underdemanded", -1, c, k + 1, 0});
    }
  }
  report.holds = report.violations.empty();
  return report;
}

AxiomReport check_justified(const Instance& inst, const Outcome& out, const Ranking& rank) {
  AxiomReport report{"justified", true, {}};
  const int K = rank.num_tiers();
  std::vector<char> justified(inst.num_colleges(), 0);
  for (CollegeId c : rank.tiers[K - 1]) justified[c] = 1;  // lowest tier stands on its own

  // Monotone rules, so keep sweeping until nothing new lights up.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = K - 2; k >= 0; --k) {
      for (CollegeId c : rank.tiers[k]) {
        if (justified[c]) continue;
        bool ok = false;
        // pinned from the tier below: its student strictly prefers c to that whole tier
        for (CollegeId anchor : rank.tiers[k + 1]) {
          if (!justified[anchor]) continue;
          StudentId s = out.college_student[anchor];
          if (s < 0) continue;
          CollegeId below_best = fav(inst, s, rank.tiers[k + 1]);
          if (inst.pref_rank[s][c] < inst.pref_rank[s][below_best]) { ok = true; break; }
        }
        // pinned from inside the tier: a justified neighbor's student weakly
        // prefers c to the whole tier, i.e. c is that student's tier favorite
        if (!ok) {
          for (CollegeId anchor : rank.tiers[k]) {
            if (!justified[anchor] || anchor == c) continue;
            StudentId s = out.college_student[anchor];
            if (s < 0) continue;
            if (fav(inst, s, rank.tiers[k]) == c) { ok = true; break; }
          }
        }
        if (ok) { justified[c] = 1; changed = true; }
      }
    }
  }

  for (int k = 0; k < K; ++k)
    for (CollegeId c : rank.tiers[k])
      if (!justified[c]) report.violations.push_back({"unjustified", -1, c, k + 1, -1});
  report.holds = report.violations.empty();
  return report;
}

AxiomReport is_desirable(const Instance& inst, const Outcome& out, const Ranking& rank) {
  AxiomReport report{"desirable", true, {}};
  for (const AxiomReport& part : {check_wad(inst, out, rank, 1), check_balanced(inst, out, rank),
                                  check_justified(inst, out, rank)}) {
    report.violations.insert(report.violations.end(), part.violations.begin(),
                             part.violations.end());
  }
  report.holds = report.violations.empty();
  return report;
}

}  // namespace dtcrank
