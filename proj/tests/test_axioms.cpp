#include <set>
#include <stdexcept>

#include "doctest.h"
#include "dtcrank/axioms.hpp"
#include "dtcrank/oracle.hpp"
#include "dtcrank/rng.hpp"
#include "helpers.hpp"

using namespace dtcrank;
using testutil::load_fixture;
using testutil::one_student_abc;

namespace {

// Random ordered partition: shuffle, then cut at a random subset of gaps.
// Not uniform over partitions, but reaches all of them.
Ranking random_ranking(const Instance& inst, Rng& rng) {
  std::vector<CollegeId> order(inst.num_colleges());
  for (int c = 0; c < inst.num_colleges(); ++c) order[c] = c;
  rng.shuffle(order);
  std::vector<std::vector<CollegeId>> tiers(1);
  for (size_t k = 0; k < order.size(); ++k) {
    if (k > 0 && rng.below(2)) tiers.emplace_back();
    tiers.back().push_back(order[k]);
  }
  return make_ranking(inst, std::move(tiers));
}

bool witness_pair(const AxiomReport& report, StudentId i, CollegeId c) {
  for (const AxiomWitness& w : report.violations)
    if (w.student == i && w.college == c) return true;
  return false;
}

}  // namespace

TEST_CASE("desire compares a college against the held seat") {
  auto state = load_fixture("fix_state.json");
  // i sits at Agood and ranks Bgood first
  CHECK(desires(state.instance, *state.outcome, 0, 2));
  CHECK_FALSE(desires(state.instance, *state.outcome, 0, 0));  // own seat
  CHECK_FALSE(desires(state.instance, *state.outcome, 0, 1));  // Abad is worse

  auto chain = load_fixture("fix_chain3.json");
  CHECK(desires(chain.instance, *chain.outcome, 2, 1));        // i3 at c wants b
  CHECK_FALSE(desires(chain.instance, *chain.outcome, 0, 1));  // i1 holds its favorite
}

TEST_CASE("strong desire must beat the student's whole tier") {
  auto state = load_fixture("fix_state.json");
  Ranking two = make_ranking(state.instance, {{0, 2}, {1, 3}});
  // Bbad is desired by i but loses to Bgood, which shares i's tier
  CHECK(desires(state.instance, *state.outcome, 0, 3));
  CHECK_FALSE(strongly_desires(state.instance, *state.outcome, two, 0, 3));
  // a college never strongly beats itself, so same-tier favorites don't count
  CHECK_FALSE(strongly_desires(state.instance, *state.outcome, two, 0, 2));
  CHECK_FALSE(strongly_desires(state.instance, *state.outcome, two, 0, 0));

  auto chain = load_fixture("fix_chain3.json");
  Ranking chain_rank = make_ranking(chain.instance, {{0}, {1}, {2}});
  CHECK(strongly_desires(chain.instance, *chain.outcome, chain_rank, 1, 0));
}

TEST_CASE("strict axiom flags desired colleges not ranked strictly higher") {
  auto state = load_fixture("fix_state.json");
  Ranking two = make_ranking(state.instance, {{0, 2}, {1, 3}});
  AxiomReport sad = check_sad(state.instance, *state.outcome, two);
  CHECK_FALSE(sad.holds);
  CHECK(sad.violations.size() == 4);
  CHECK(witness_pair(sad, 0, 2));  // i desires Bgood, same tier
  CHECK(witness_pair(sad, 0, 3));  // i desires Bbad, lower tier
  CHECK(witness_pair(sad, 1, 0));  // j desires Agood
  CHECK(witness_pair(sad, 1, 1));  // j desires Abad

  auto chain = load_fixture("fix_chain3.json");
  CHECK(check_sad(chain.instance, *chain.outcome,
                  make_ranking(chain.instance, {{0}, {1}, {2}}))
            .holds);

  // nobody desires anything, so any ranking passes
  Instance happy = Instance::make({"i", "j"}, {"a", "b"}, {{0, 1}, {1, 0}});
  Outcome happy_out = Outcome::make(happy, {0, 1});
  CHECK(check_sad(happy, happy_out, make_ranking(happy, {{1}, {0}})).holds);
}

TEST_CASE("single-student tier scenarios reproduce the documented verdicts") {
  Instance inst = one_student_abc();
  struct Scenario {
    CollegeId seat;
    std::vector<std::vector<CollegeId>> tiers;
    bool wad_holds;
  };
  // P_i: a > b > c throughout; seat and tiers vary
  std::vector<Scenario> table = {
      {1, {{0}, {1}, {2}}, true},   // ranking agrees with preferences
      {0, {{1}, {2}, {0}}, true},   // top seat, nothing desired, vacuous
      {2, {{0, 2}, {1}}, true},     // b desired below, but a shares the tier
      {2, {{0}, {2}, {1}}, false},  // b strongly desired yet ranked lower
  };
  for (size_t s = 0; s < table.size(); ++s) {
    CAPTURE(s);
    Outcome out = Outcome::make(inst, {table[s].seat});
    Ranking rank = make_ranking(inst, table[s].tiers);
    for (int form = 1; form <= 3; ++form) {
      CAPTURE(form);
      CHECK(check_wad(inst, out, rank, form).holds == table[s].wad_holds);
    }
  }

  // the failing scenario names the offending pair
  Outcome out4 = Outcome::make(inst, {2});
  Ranking rank4 = make_ranking(inst, {{0}, {2}, {1}});
  AxiomReport wad = check_wad(inst, out4, rank4);
  REQUIRE(wad.violations.size() == 1);
  CHECK(wad.violations[0].student == 0);
  CHECK(wad.violations[0].college == 1);

  // scenario 3 separates plain desire from strong desire
  Outcome out3 = Outcome::make(inst, {2});
  Ranking rank3 = make_ranking(inst, {{0, 2}, {1}});
  CHECK(desires(inst, out3, 0, 1));
  CHECK_FALSE(strongly_desires(inst, out3, rank3, 0, 1));
}

TEST_CASE("weak axiom catches a strongly desired college ranked below") {
  auto chain = load_fixture("fix_chain3.json");
  Ranking bad = make_ranking(chain.instance, {{1}, {0}, {2}});
  AxiomReport wad = check_wad(chain.instance, *chain.outcome, bad);
  CHECK_FALSE(wad.holds);
  CHECK(witness_pair(wad, 1, 0));  // i2 at b strongly desires a, one tier down

  Ranking trivial = make_ranking(chain.instance, {{0, 1, 2}});
  CHECK(check_wad(chain.instance, *chain.outcome, trivial).holds);

  CHECK_THROWS_AS(check_wad(chain.instance, *chain.outcome, bad, 4), std::invalid_argument);
}

TEST_CASE("the three weak-axiom formulations agree everywhere") {
  // partial market: all 75 ordered partitions of four colleges
  auto state = load_fixture("fix_state.json");
  auto all = enumerate_rankings(state.instance);
  CHECK(all.size() == 75);
  for (const Ranking& rank : all) {
    bool w1 = check_wad(state.instance, *state.outcome, rank, 1).holds;
    bool w2 = check_wad(state.instance, *state.outcome, rank, 2).holds;
    bool w3 = check_wad(state.instance, *state.outcome, rank, 3).holds;
    CHECK(w1 == w2);
    CHECK(w2 == w3);
    if (check_sad(state.instance, *state.outcome, rank).holds) CHECK(w1);
  }

  // randomized sweep, ten thousand market/ranking samples
  Rng rng(2024);
  int samples = 0;
  for (int n = 2; n <= 6; ++n) {
    for (int t = 0; t < 400; ++t) {
      RandomMarket market = random_market(n, rng);
      for (int r = 0; r < 5; ++r) {
        Ranking rank = random_ranking(market.instance, rng);
        bool w1 = check_wad(market.instance, market.outcome, rank, 1).holds;
        bool w2 = check_wad(market.instance, market.outcome, rank, 2).holds;
        bool w3 = check_wad(market.instance, market.outcome, rank, 3).holds;
        REQUIRE(w1 == w2);
        REQUIRE(w2 == w3);
        if (check_sad(market.instance, market.outcome, rank).holds) REQUIRE(w1);
        ++samples;
      }
    }
  }
  CHECK(samples == 10000);
}

TEST_CASE("strong desire implies plain desire on random markets") {
  Rng rng(77);
  for (int t = 0; t < 200; ++t) {
    RandomMarket market = random_market(4, rng);
    Ranking rank = random_ranking(market.instance, rng);
    for (StudentId i = 0; i < 4; ++i)
      for (CollegeId a = 0; a < 4; ++a)
        if (strongly_desires(market.instance, market.outcome, rank, i, a))
          CHECK(desires(market.instance, market.outcome, i, a));
  }
}

TEST_CASE("demand counts tally within-tier favorites") {
  auto e2 = load_fixture("fix_e2.json");
  Ranking one = make_ranking(e2.instance, {{0, 1}});
  DemandCount dc = demand_counts(e2.instance, *e2.outcome, one, 0);
  CHECK(dc.tier == 1);
  CHECK(dc.counts == std::vector<std::pair<CollegeId, int>>{{0, 1}, {1, 1}});

  auto chain = load_fixture("fix_chain3.json");
  DemandCount flat = demand_counts(chain.instance, *chain.outcome,
                                   make_ranking(chain.instance, {{0, 1, 2}}), 0);
  CHECK(flat.counts == std::vector<std::pair<CollegeId, int>>{{0, 2}, {1, 1}, {2, 0}});

  // counts over a tier add up to the number of resident students
  int total = 0;
  for (auto& [c, d] : flat.counts) total += d;
  CHECK(total == 3);

  CHECK_THROWS_AS(demand_counts(chain.instance, *chain.outcome,
                                make_ranking(chain.instance, {{0, 1, 2}}), 1),
                  std::invalid_argument);
  // unoccupied tier college
  auto state = load_fixture("fix_state.json");
  CHECK_THROWS_AS(demand_counts(state.instance, *state.outcome,
                                make_ranking(state.instance, {{0, 2}, {1, 3}}), 1),
                  std::invalid_argument);
}

TEST_CASE("balancedness wants every tier college claimed exactly once") {
  auto chain = load_fixture("fix_chain3.json");
  CHECK(check_balanced(chain.instance, *chain.outcome,
                       make_ranking(chain.instance, {{0}, {1}, {2}}))
            .holds);

  AxiomReport flat =
      check_balanced(chain.instance, *chain.outcome, make_ranking(chain.instance, {{0, 1, 2}}));
  CHECK_FALSE(flat.holds);
  REQUIRE(flat.violations.size() == 2);
  CHECK(flat.violations[0].rule == "overdemanded");
  CHECK(flat.violations[0].college == 0);
  CHECK(flat.violations[0].count == 2);
  CHECK(flat.violations[1].rule == "underdemanded");
  CHECK(flat.violations[1].college == 2);

  auto swap3 = load_fixture("fix_swap3.json");
  CHECK(check_balanced(swap3.instance, *swap3.outcome,
                       make_ranking(swap3.instance, {{0, 1, 2}}))
            .holds);

  // a tier of entirely unassigned colleges is surfaced, not decided
  auto state = load_fixture("fix_state.json");
  AxiomReport partial = check_balanced(state.instance, *state.outcome,
                                       make_ranking(state.instance, {{0, 2}, {1, 3}}));
  CHECK_FALSE(partial.holds);
  REQUIRE(partial.violations.size() == 1);
  CHECK(partial.violations[0].rule == "empty-tier");
  CHECK(partial.violations[0].tier == 2);
}

TEST_CASE("justification chains anchor at the lowest tier") {
  auto chain = load_fixture("fix_chain3.json");
  CHECK(check_justified(chain.instance, *chain.outcome,
                        make_ranking(chain.instance, {{0}, {1}, {2}}))
            .holds);
  CHECK(check_justified(chain.instance, *chain.outcome,
                        make_ranking(chain.instance, {{0, 1, 2}}))
            .holds);  // single tier is its own anchor

  AxiomReport bad = check_justified(chain.instance, *chain.outcome,
                                    make_ranking(chain.instance, {{1}, {0}, {2}}));
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0].rule == "unjustified");
  CHECK(bad.violations[0].college == 1);  // nobody pins b at the top

  auto state = load_fixture("fix_state.json");
  AxiomReport partial = check_justified(state.instance, *state.outcome,
                                        make_ranking(state.instance, {{0, 2}, {1, 3}}));
  CHECK_FALSE(partial.holds);
  CHECK(partial.violations.size() == 2);  // Agood and Bgood hang unsupported
}

TEST_CASE("the desirability bundle is the conjunction of its parts") {
  auto chain = load_fixture("fix_chain3.json");
  CHECK(is_desirable(chain.instance, *chain.outcome,
                     make_ranking(chain.instance, {{0}, {1}, {2}}))
            .holds);
  CHECK_FALSE(is_desirable(chain.instance, *chain.outcome,
                           make_ranking(chain.instance, {{0, 1, 2}}))
                  .holds);

  auto swap3 = load_fixture("fix_swap3.json");
  CHECK(is_desirable(swap3.instance, *swap3.outcome,
                     make_ranking(swap3.instance, {{0, 1, 2}}))
            .holds);

  // agreement with the three separate checkers on random data
  Rng rng(5150);
  for (int t = 0; t < 300; ++t) {
    RandomMarket market = random_market(4, rng);
    Ranking rank = random_ranking(market.instance, rng);
    bool parts = check_wad(market.instance, market.outcome, rank).holds &&
                 check_balanced(market.instance, market.outcome, rank).holds &&
                 check_justified(market.instance, market.outcome, rank).holds;
    CHECK(is_desirable(market.instance, market.outcome, rank).holds == parts);
  }
}

TEST_CASE("wasteful assignments never admit a strict-axiom ranking") {
  Rng rng(31337);
  int improvable_seen = 0;
  for (int t = 0; t < 150; ++t) {
    int n = 2 + static_cast<int>(rng.below(4));  // up to 5
    RandomMarket market = random_market(n, rng);
    if (!testutil::brute_pareto_improvable(market.instance, market.outcome)) continue;
    ++improvable_seen;
    CHECK_FALSE(exists_sad_ranking(market.instance, market.outcome).exists);
  }
  CHECK(improvable_seen > 30);  // the sweep actually exercised the property
}
