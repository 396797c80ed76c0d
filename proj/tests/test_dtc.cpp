#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "dtcrank/axioms.hpp"
#include "dtcrank/dtc.hpp"
#include "dtcrank/oracle.hpp"
#include "dtcrank/rng.hpp"
#include "helpers.hpp"

using namespace dtcrank;
using testutil::load_fixture;

namespace {

std::vector<CollegeId> to_orig(const Market& market, std::vector<CollegeId> local) {
  for (CollegeId& c : local) c = market.college_orig[c];
  std::sort(local.begin(), local.end());
  return local;
}

}  // namespace

TEST_CASE("isolation plus perfection, checked pointwise") {
  auto e2 = load_fixture("fix_e2.json");
  IpCheck both = is_ip_set(e2.instance, *e2.outcome, {0, 1});
  CHECK(both.ok);
  // the certificate reseats each inside student on their favorite
  CHECK(both.certificate ==
        std::vector<std::pair<StudentId, CollegeId>>{{0, 0}, {1, 1}});
  CHECK_FALSE(is_ip_set(e2.instance, *e2.outcome, {0}).ok);  // i wants in
  CHECK_FALSE(is_ip_set(e2.instance, *e2.outcome, {1}).ok);  // j wants in
  CHECK(is_ip_set(e2.instance, *e2.outcome, {}).ok);         // vacuous

  auto chain = load_fixture("fix_chain3.json");
  CHECK_FALSE(is_ip_set(chain.instance, *chain.outcome, {1}).ok);  // i3 desires b
  CHECK(is_ip_set(chain.instance, *chain.outcome, {2}).ok);
  // two students share a favorite inside: isolated but not perfect
  CHECK_FALSE(is_ip_set(chain.instance, *chain.outcome, {0, 1, 2}).ok);
}

TEST_CASE("subset enumeration finds the exact maximum") {
  auto e2 = load_fixture("fix_e2.json");
  CHECK(max_ip_set_bruteforce(e2.instance, *e2.outcome).colleges ==
        std::vector<CollegeId>{0, 1});

  auto chain = load_fixture("fix_chain3.json");
  CHECK(max_ip_set_bruteforce(chain.instance, *chain.outcome).colleges ==
        std::vector<CollegeId>{2});

  Rng rng(12);
  RandomMarket big = random_market(13, rng);
  CHECK_THROWS_AS(max_ip_set_bruteforce(big.instance, big.outcome), std::invalid_argument);
  CHECK_NOTHROW(max_ip_set_bruteforce(big.instance, big.outcome, 13));
}

TEST_CASE("the cycle graph records desires across removal rounds") {
  auto chain = load_fixture("fix_chain3.json");
  TtcResult ttc = ttc_run(chain.instance, *chain.outcome);
  CycleGraph g = build_cycle_graph(chain.instance, ttc);
  REQUIRE(g.cycles.size() == 3);
  CHECK(g.edges[0].empty());
  CHECK(g.edges[1] == std::vector<int>{0});
  CHECK(g.edges[2] == std::vector<int>{0, 1});
  CHECK(g.college_cycle == std::vector<int>{0, 1, 2});

  auto e2 = load_fixture("fix_e2.json");
  CycleGraph ge2 = build_cycle_graph(e2.instance, ttc_run(e2.instance, *e2.outcome));
  REQUIRE(ge2.cycles.size() == 1);
  CHECK(ge2.edges[0].empty());

  // everyone already seated at their favorite: no desires anywhere
  Instance happy = Instance::make({"i", "j"}, {"a", "b"}, {{0, 1}, {1, 0}});
  Outcome happy_out = Outcome::make(happy, {0, 1});
  CycleGraph gh = build_cycle_graph(happy, ttc_run(happy, happy_out));
  REQUIRE(gh.cycles.size() == 2);
  CHECK(gh.edges[0].empty());
  CHECK(gh.edges[1].empty());
}

TEST_CASE("unpointed cycles form the strip layer") {
  auto chain = load_fixture("fix_chain3.json");
  CycleGraph g = build_cycle_graph(chain.instance, ttc_run(chain.instance, *chain.outcome));
  CHECK(max_ip_set_fast(g, {0, 1, 2}) == std::vector<CollegeId>{2});
  CHECK(max_ip_set_fast(g, {0, 1}) == std::vector<CollegeId>{1});
  CHECK(max_ip_set_fast(g, {0}) == std::vector<CollegeId>{0});
  CHECK_THROWS_AS(max_ip_set_fast(g, {}), std::invalid_argument);

  Instance happy = Instance::make({"i", "j"}, {"a", "b"}, {{0, 1}, {1, 0}});
  Outcome happy_out = Outcome::make(happy, {0, 1});
  CycleGraph gh = build_cycle_graph(happy, ttc_run(happy, happy_out));
  CHECK(max_ip_set_fast(gh, {0, 1}) == std::vector<CollegeId>{0, 1});
}

TEST_CASE("full pipeline on the fixtures") {
  auto chain = load_fixture("fix_chain3.json");
  DtcResult dtc = dtc_rank(chain.instance, *chain.outcome);
  REQUIRE(dtc.layers.layers.size() == 3);
  CHECK(dtc.layers.layers[0] == std::vector<CollegeId>{2});
  CHECK(dtc.layers.layers[1] == std::vector<CollegeId>{1});
  CHECK(dtc.layers.layers[2] == std::vector<CollegeId>{0});
  CHECK(dtc.layers.layer_of_cycle == std::vector<int>{2, 1, 0});
  CHECK(dtc.ranking == make_ranking(chain.instance, {{0}, {1}, {2}}));

  auto e2 = load_fixture("fix_e2.json");
  DtcResult de2 = dtc_rank(e2.instance, *e2.outcome);
  REQUIRE(de2.layers.layers.size() == 1);
  CHECK(de2.ranking == make_ranking(e2.instance, {{0, 1}}));

  auto swap3 = load_fixture("fix_swap3.json");
  DtcResult ds = dtc_rank(swap3.instance, *swap3.outcome);
  REQUIRE(ds.layers.layers.size() == 1);
  CHECK(ds.ranking == make_ranking(swap3.instance, {{0, 1, 2}}));
}

TEST_CASE("pipeline output satisfies the axioms and decomposes into cycles") {
  Rng rng(31400);
  for (int t = 0; t < 250; ++t) {
    int n = 2 + static_cast<int>(rng.below(5));  // up to 6
    RandomMarket market = random_market(n, rng);
    DtcResult dtc = dtc_rank(market.instance, market.outcome);
    REQUIRE(is_desirable(market.instance, market.outcome, dtc.ranking).holds);
    REQUIRE(is_ttc_ranking(market.instance, market.outcome, dtc.ranking).ok);
    // tiers mirror the layers in reverse
    REQUIRE(dtc.ranking.tiers.size() == dtc.layers.layers.size());
    size_t last = dtc.layers.layers.size() - 1;
    for (size_t l = 0; l < dtc.layers.layers.size(); ++l)
      REQUIRE(dtc.ranking.tiers[last - l] == dtc.layers.layers[l]);
  }
}

TEST_CASE("each layer is isolated-perfect in its residual market") {
  Rng rng(2718);
  for (int t = 0; t < 120; ++t) {
    int n = 2 + static_cast<int>(rng.below(5));
    RandomMarket market = random_market(n, rng);
    DtcResult dtc = dtc_rank(market.instance, market.outcome);

    std::set<CollegeId> remaining;
    for (CollegeId c = 0; c < n; ++c) remaining.insert(c);
    for (const std::vector<CollegeId>& layer : dtc.layers.layers) {
      std::vector<CollegeId> keep(remaining.begin(), remaining.end());
      Market sub = restrict_market(market.instance, dtc.ttc.assignment, keep);
      std::vector<CollegeId> local;
      for (size_t c = 0; c < sub.college_orig.size(); ++c)
        if (std::binary_search(layer.begin(), layer.end(), sub.college_orig[c]))
          local.push_back(static_cast<CollegeId>(c));
      REQUIRE(local.size() == layer.size());
      REQUIRE(is_ip_set(sub.instance, sub.outcome, local).ok);
      // and it sits inside the true maximum of the residual market
      IpSet brute = max_ip_set_bruteforce(sub.instance, sub.outcome);
      for (CollegeId c : local)
        REQUIRE(std::binary_search(brute.colleges.begin(), brute.colleges.end(), c));
      for (CollegeId c : layer) remaining.erase(c);
    }
  }
}

TEST_CASE("residual markets replay the remaining trades") {
  Rng rng(5081);
  for (int t = 0; t < 120; ++t) {
    int n = 2 + static_cast<int>(rng.below(5));
    RandomMarket market = random_market(n, rng);
    DtcResult dtc = dtc_rank(market.instance, market.outcome);

    std::set<CollegeId> remaining;
    for (CollegeId c = 0; c < n; ++c) remaining.insert(c);
    for (size_t l = 0; l < dtc.layers.layers.size(); ++l) {
      std::vector<CollegeId> keep(remaining.begin(), remaining.end());
      // restrict the original endowment, not the traded outcome
      Market sub = restrict_market(market.instance, market.outcome, keep);
      TtcResult sub_ttc = ttc_run(sub.instance, sub.outcome);

      std::set<std::vector<CollegeId>> sub_cycles;
      for (const Cycle& x : sub_ttc.cycles) sub_cycles.insert(to_orig(sub, x.colleges));
      std::set<std::vector<CollegeId>> expected;
      for (size_t x = 0; x < dtc.graph.cycles.size(); ++x) {
        if (dtc.layers.layer_of_cycle[x] < static_cast<int>(l)) continue;
        std::vector<CollegeId> cols = dtc.graph.cycles[x].colleges;
        std::sort(cols.begin(), cols.end());
        expected.insert(cols);
      }
      REQUIRE(sub_cycles == expected);

      for (StudentId s = 0; s < sub.instance.num_students(); ++s) {
        CollegeId seat = sub.college_orig[sub_ttc.assignment.college_of(s)];
        REQUIRE(seat == dtc.ttc.assignment.college_of(sub.student_orig[s]));
      }
      for (CollegeId c : dtc.layers.layers[l]) remaining.erase(c);
    }
  }
}

// Market where the outright maximum isolated-perfect set straddles a traded
// cycle. Peeling it would break the weak desire axiom, so the pipeline must
// stay on whole cycles. Kept as a regression pin for that boundary.
TEST_CASE("a maximum that splits a cycle is correctly left alone") {
  Instance inst = Instance::make({"s1", "s2", "s3"}, {"c1", "c2", "c3"},
                                 {{2, 1, 0}, {2, 0, 1}, {1, 0, 2}});
  Outcome mu = Outcome::make(inst, {1, 0, 2});

  TtcResult ttc = ttc_run(inst, mu);
  CHECK(ttc.assignment.student_college == std::vector<CollegeId>{2, 0, 1});
  REQUIRE(ttc.cycles.size() == 2);
  CHECK(ttc.cycles[0].colleges == std::vector<CollegeId>{1, 2});
  CHECK(ttc.cycles[0].step == 1);
  CHECK(ttc.cycles[1].colleges == std::vector<CollegeId>{0});
  CHECK(ttc.cycles[1].step == 2);

  // c2 alone is isolated-perfect after trading, despite being half a cycle
  CHECK(is_ip_set(inst, ttc.assignment, {1}).ok);
  CHECK(max_ip_set_bruteforce(inst, ttc.assignment).colleges ==
        std::vector<CollegeId>{0, 1});

  // the pipeline peels only the whole untouched cycle
  DtcResult dtc = dtc_rank(inst, mu);
  REQUIRE(dtc.layers.layers.size() == 2);
  CHECK(dtc.layers.layers[0] == std::vector<CollegeId>{0});
  CHECK(dtc.layers.layers[1] == std::vector<CollegeId>{1, 2});
  CHECK(dtc.ranking == make_ranking(inst, {{1, 2}, {0}}));

  // and that ranking is the unique one passing all three axioms
  auto found = find_desirable(inst, mu);
  REQUIRE(found.size() == 1);
  CHECK(found[0] == dtc.ranking);

  // whereas peeling the larger set would produce a ranking that fails
  Ranking greedy = make_ranking(inst, {{2}, {0, 1}});
  CHECK_FALSE(is_desirable(inst, mu, greedy).holds);
  TtcRankingCheck decomp = is_ttc_ranking(inst, mu, greedy);
  CHECK_FALSE(decomp.ok);
  CHECK(decomp.bad_tier == 1);
}

TEST_CASE("the pipeline needs a fully seated market") {
  auto state = load_fixture("fix_state.json");
  CHECK_THROWS_AS(dtc_rank(state.instance, *state.outcome), std::invalid_argument);
}
