#pragma once

#include <string>
#include <vector>

#include "dtcrank/model.hpp"

namespace dtcrank {

// One concrete violation of an axiom. Fields that do not apply to the rule
// are left at their defaults (-1 / 0).
struct AxiomWitness {
  std::string rule;       // e.g. "desired-not-higher", "overdemanded", "unjustified"
  StudentId student = -1;
  CollegeId college = -1;
  int tier = 0;   // 1-based tier index, 0 when not applicable
  int count = -1; // demand count, where applicable
};

struct AxiomReport {
  std::string axiom;
  bool holds = false;
  std::vector<AxiomWitness> violations;  // holds == violations.empty()
};

// i would rather attend a than their own college.
bool desires(const Instance& inst, const Outcome& out, StudentId i, CollegeId a);

// a beats every college in i's own tier, including i's assigned seat.
bool strongly_desires(const Instance& inst, const Outcome& out, const Ranking& rank,
                      StudentId i, CollegeId a);

// Every desired college must sit in a strictly higher tier.
AxiomReport check_sad(const Instance& inst, const Outcome& out, const Ranking& rank);

// Every strongly desired college must sit in a strictly higher tier.
// The three forms are logically equivalent restatements kept as independent
// implementations; tests compare them against each other.
//   1: direct quantification over strongly desired colleges
//   2: each student's tier favorite beats every lower-tier college
//   3: each tier favorite is also the favorite over that tier plus all lower tiers
AxiomReport check_wad(const Instance& inst, const Outcome& out, const Ranking& rank,
                      int form = 1);

// Demand within tier k (0-based): how many students assigned in the tier
// point to each tier college as their favorite tier member. Requires every
// college of that tier to be occupied.
struct DemandCount {
  int tier = 0;  // 1-based, for reporting
  std::vector<std::pair<CollegeId, int>> counts;
};
DemandCount demand_counts(const Instance& inst, const Outcome& out, const Ranking& rank,
                          int tier_index);

// Each tier must be demanded exactly to capacity: every tier college claimed
// by exactly one resident student's tier-favorite pointer. Tiers with no
// resident students at all get a single "empty-tier" witness.
AxiomReport check_balanced(const Instance& inst, const Outcome& out, const Ranking& rank);

// Least fixed point of the justification rules: the lowest tier stands on
// its own; a college is justified if a justified college's student pins it
// down from the tier below (strict preference over that whole tier) or from
// inside its own tier (weak preference over the whole tier).
AxiomReport check_justified(const Instance& inst, const Outcome& out, const Ranking& rank);

// Conjunction of WAD, balanced and justified; witnesses aggregated.
AxiomReport is_desirable(const Instance& inst, const Outcome& out, const Ranking& rank);

}  // namespace dtcrank
