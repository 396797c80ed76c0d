#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "dtcrank/model.hpp"
#include "dtcrank/rng.hpp"

namespace dtcrank {

// Caps for the exhaustive searches. Ordered-partition counts explode
// (1, 3, 13, 75, 541, 4683 for 1..6 colleges), so everything here is meant
// for desk-scale markets only.
struct EnumerationBudget {
  int max_colleges = 6;       // for plain ranking enumeration
  int max_colleges_ttc = 5;   // for trading-decomposition enumeration
  long max_count = 200000;    // hard stop on generated rankings
};

// Every ordered partition of the colleges, tiers generated in restricted-
// growth-string order with all block orders. `fn` returns false to stop.
void for_each_ranking(const Instance& inst, const EnumerationBudget& budget,
                      const std::function<bool(const Ranking&)>& fn);
std::vector<Ranking> enumerate_rankings(const Instance& inst,
                                        EnumerationBudget budget = {});

// All rankings passing is_desirable. The characterization says there is
// exactly one per bijective market; callers assert, this just searches.
std::vector<Ranking> find_desirable(const Instance& inst, const Outcome& out,
                                    EnumerationBudget budget = {});

// All rankings whose tiers decompose into suffix-market trading cycles.
// Computed twice: by filtering the full enumeration and by recursively
// choosing cycle sets to remove. Throws if the two routes disagree.
std::vector<Ranking> enumerate_ttc_rankings(const Instance& inst, const Outcome& out,
                                            EnumerationBudget budget = {});

// Set equality between {WAD and balanced} and the trading decompositions.
struct EquivalenceCheck {
  bool ok = false;
  std::vector<Ranking> only_axioms;  // pass WAD+balanced but not a decomposition
  std::vector<Ranking> only_ttc;     // decompositions failing WAD+balanced
};
EquivalenceCheck check_theorem2(const Instance& inst, const Outcome& out,
                                EnumerationBudget budget = {});

struct SadSearch {
  bool exists = false;
  std::optional<Ranking> witness;
};
SadSearch exists_sad_ranking(const Instance& inst, const Outcome& out,
                             EnumerationBudget budget = {});

// Random bijective market: uniform preference and priority permutations.
enum class MuMode { Random, Stable };
struct RandomMarket {
  Instance instance;
  Outcome outcome;
};
RandomMarket random_market(int n, Rng& rng, MuMode mu = MuMode::Random);

}  // namespace dtcrank
