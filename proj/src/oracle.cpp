#include "dtcrank/oracle.hpp"

#include <algorithm>
#include <set>

#include "dtcrank/axioms.hpp"
#include "dtcrank/baseline.hpp"
#include "dtcrank/ttc.hpp"

namespace dtcrank {

namespace {

// Ordered partitions come from restricted growth strings (one set partition
// each, blocks keyed by first appearance) crossed with every block order.
class RgsEnumerator {
 public:
  explicit RgsEnumerator(int m) : m_(m), rgs_(m, 0) {}

  // Calls fn for every ordered partition; fn returns false to stop early.
  void run(long max_count, const std::function<bool(const Ranking&)>& fn) {
    long produced = 0;
    for (;;) {
      int blocks = 1 + *std::max_element(rgs_.begin(), rgs_.end());
      std::vector<std::vector<CollegeId>> block(blocks);
      for (int i = 0; i < m_; ++i) block[rgs_[i]].push_back(i);

      std::vector<int> order(blocks);
      for (int j = 0; j < blocks; ++j) order[j] = j;
      do {
        if (++produced > max_count)
          throw std::invalid_argument("ranking enumeration exceeded the count budget");
        Ranking rank;
        rank.tier_of.assign(m_, -1);
        rank.tiers.resize(blocks);
        for (int t = 0; t < blocks; ++t) {
          rank.tiers[t] = block[order[t]];
          for (CollegeId c : rank.tiers[t]) rank.tier_of[c] = t;
        }
        if (!fn(rank)) return;
      } while (std::next_permutation(order.begin(), order.end()));

      if (!advance()) return;
    }
  }

 private:
  bool advance() {  // next restricted growth string, lexicographic
    std::vector<int> prefix_max(m_, 0);
    for (int i = 1; i < m_; ++i) prefix_max[i] = std::max(prefix_max[i - 1], rgs_[i]);
    for (int i = m_ - 1; i >= 1; --i) {
      if (rgs_[i] <= prefix_max[i - 1]) {
        ++rgs_[i];
        std::fill(rgs_.begin() + i + 1, rgs_.end(), 0);
        return true;
      }
    }
    return false;
  }

  int m_;
  std::vector<int> rgs_;
};

// Independent cycle decomposition for the constructive route (the filter
// route goes through is_ttc_ranking instead).
std::vector<std::vector<CollegeId>> market_cycles(const Instance& inst, const Outcome& out,
                                                  const std::vector<CollegeId>& remaining) {
  std::vector<char> member(inst.num_colleges(), 0);
  for (CollegeId c : remaining) member[c] = 1;
  std::vector<int> next(inst.num_colleges(), -1);
  for (CollegeId c : remaining) next[c] = fav_masked(inst, out.college_student[c], member);

  std::vector<std::vector<CollegeId>> cycles;
  std::vector<int> state(inst.num_colleges(), 0);
  for (CollegeId start : remaining) {
    if (state[start] != 0) continue;
    std::vector<CollegeId> walk;
    CollegeId c = start;
    while (state[c] == 0) {
      state[c] = 1;
      walk.push_back(c);
      c = next[c];
    }
    if (state[c] == 1) {
      auto it = std::find(walk.begin(), walk.end(), c);
      cycles.emplace_back(it, walk.end());
    }
    for (CollegeId w : walk) state[w] = 2;
  }
  return cycles;
}

void removal_sequences(const Instance& inst, const Outcome& out,
                       std::vector<CollegeId> remaining,
                       std::vector<std::vector<CollegeId>>& tiers_so_far,
                       std::set<Ranking>& found) {
  if (remaining.empty()) {
    auto tiers = tiers_so_far;
    found.insert(make_ranking(inst, std::move(tiers)));
    return;
  }
  auto cycles = market_cycles(inst, out, remaining);
  const size_t r = cycles.size();
  for (uint64_t pick = 1; pick < (uint64_t{1} << r); ++pick) {
    std::vector<CollegeId> tier;
    std::vector<char> removed(inst.num_colleges(), 0);
    for (size_t x = 0; x < r; ++x) {
      if (!(pick >> x & 1)) continue;
      for (CollegeId c : cycles[x]) {
        tier.push_back(c);
        removed[c] = 1;
      }
    }
    std::vector<CollegeId> rest;
    for (CollegeId c : remaining)
      if (!removed[c]) rest.push_back(c);
    tiers_so_far.push_back(std::move(tier));
    removal_sequences(inst, out, std::move(rest), tiers_so_far, found);
    tiers_so_far.pop_back();
  }
}

}  // namespace

void for_each_ranking(const Instance& inst, const EnumerationBudget& budget,
                      const std::function<bool(const Ranking&)>& fn) {
  if (inst.num_colleges() > budget.max_colleges)
    throw std::invalid_argument("ranking enumeration beyond the college budget");
  RgsEnumerator(inst.num_colleges()).run(budget.max_count, fn);
}

std::vector<Ranking> enumerate_rankings(const Instance& inst, EnumerationBudget budget) {
  std::vector<Ranking> all;
  for_each_ranking(inst, budget, [&](const Ranking& r) {
    all.push_back(r);
    return true;
  });
  return all;
}

std::vector<Ranking> find_desirable(const Instance& inst, const Outcome& out,
                                    EnumerationBudget budget) {
  std::vector<Ranking> hits;
  for_each_ranking(inst, budget, [&](const Ranking& r) {
    if (is_desirable(inst, out, r).holds) hits.push_back(r);
    return true;
  });
  return hits;
}

std::vector<Ranking> enumerate_ttc_rankings(const Instance& inst, const Outcome& out,
                                            EnumerationBudget budget) {
  if (inst.num_colleges() > budget.max_colleges_ttc)
    throw std::invalid_argument("trading-decomposition enumeration beyond the college budget");
  if (!out.bijective())
    throw std::invalid_argument("enumerate_ttc_rankings: every college must be assigned");

  EnumerationBudget filter_budget = budget;
  filter_budget.max_colleges = budget.max_colleges_ttc;
  std::vector<Ranking> filtered;
  for_each_ranking(inst, filter_budget, [&](const Ranking& r) {
    if (is_ttc_ranking(inst, out, r).ok) filtered.push_back(r);
    return true;
  });

  std::set<Ranking> constructed;
  std::vector<CollegeId> all(inst.num_colleges());
  for (int c = 0; c < inst.num_colleges(); ++c) all[c] = c;
  std::vector<std::vector<CollegeId>> tiers;
  removal_sequences(inst, out, std::move(all), tiers, constructed);

  std::set<Ranking> filtered_set(filtered.begin(), filtered.end());
  if (filtered_set != constructed)
    throw std::logic_error(
        "enumerate_ttc_rankings: filter and removal-sequence routes disagree");
  return filtered;
}

EquivalenceCheck check_theorem2(const Instance& inst, const Outcome& out,
                                EnumerationBudget budget) {
  EnumerationBudget axiom_budget = budget;
  axiom_budget.max_colleges = budget.max_colleges_ttc;
  std::vector<Ranking> via_axioms;
  for_each_ranking(inst, axiom_budget, [&](const Ranking& r) {
    if (check_wad(inst, out, r, 1).holds && check_balanced(inst, out, r).holds)
      via_axioms.push_back(r);
    return true;
  });
  std::vector<Ranking> via_ttc = enumerate_ttc_rankings(inst, out, budget);

  std::set<Ranking> a(via_axioms.begin(), via_axioms.end());
  std::set<Ranking> t(via_ttc.begin(), via_ttc.end());
  EquivalenceCheck result;
  std::set_difference(a.begin(), a.end(), t.begin(), t.end(),
                      std::back_inserter(result.only_axioms));
  std::set_difference(t.begin(), t.end(), a.begin(), a.end(),
                      std::back_inserter(result.only_ttc));
  result.ok = result.only_axioms.empty() && result.only_ttc.empty();
  return result;
}

SadSearch exists_sad_ranking(const Instance& inst, const Outcome& out,
                             EnumerationBudget budget) {
  SadSearch search;
  for_each_ranking(inst, budget, [&](const Ranking& r) {
    if (check_sad(inst, out, r).holds) {
      search.exists = true;
      search.witness = r;
      return false;
    }
    return true;
  });
  return search;
}

RandomMarket random_market(int n, Rng& rng, MuMode mu) {
  std::vector<std::string> students(n), colleges(n);
  for (int k = 0; k < n; ++k) {
    students[k] = "s" + std::to_string(k + 1);
    colleges[k] = "c" + std::to_string(k + 1);
  }
  std::vector<std::vector<CollegeId>> prefs(n);
  for (int i = 0; i < n; ++i) prefs[i] = rng.permutation(n);
  std::vector<std::vector<StudentId>> priorities(n);
  for (int c = 0; c < n; ++c) priorities[c] = rng.permutation(n);

  RandomMarket market;
  market.instance = Instance::make(std::move(students), std::move(colleges), std::move(prefs),
                                   std::move(priorities));
  if (mu == MuMode::Random) {
    market.outcome = Outcome::make(market.instance, rng.permutation(n));
  } else {
    market.outcome = deferred_acceptance(market.instance);
  }
  return market;
}

}  // namespace dtcrank
