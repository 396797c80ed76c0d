#include <stdexcept>

#include "doctest.h"
#include "dtcrank/baseline.hpp"
#include "helpers.hpp"

using namespace dtcrank;
using testutil::load_fixture;

TEST_CASE("proposals settle on the student-optimal stable matching") {
  auto e2 = load_fixture("fix_e2.json");
  Outcome da = deferred_acceptance(e2.instance);
  CHECK(da.student_college == std::vector<CollegeId>{0, 1});  // both get their first pick
  CHECK(check_stable(e2.instance, da).stable);
  // the fixture seats everyone at their second pick: also stable
  CHECK(check_stable(e2.instance, *e2.outcome).stable);

  auto chain = load_fixture("fix_chain3.json");
  da = deferred_acceptance(chain.instance);
  CHECK(da.student_college == std::vector<CollegeId>{0, 1, 2});
  CHECK(check_stable(chain.instance, da).stable);
}

TEST_CASE("identical preference and priority orders sort assortatively") {
  const int n = 6;
  std::vector<std::string> students, colleges;
  std::vector<CollegeId> order;
  std::vector<StudentId> sorder;
  for (int k = 0; k < n; ++k) {
    students.push_back("s" + std::to_string(k));
    colleges.push_back("c" + std::to_string(k));
    order.push_back(k);
    sorder.push_back(k);
  }
  Instance inst = Instance::make(students, colleges,
                                 std::vector<std::vector<CollegeId>>(n, order),
                                 std::vector<std::vector<StudentId>>(n, sorder));
  Outcome da = deferred_acceptance(inst);
  CHECK(da.student_college == order);
  CHECK(check_stable(inst, da).stable);
}

TEST_CASE("blocking pairs are reported sorted") {
  auto e2 = load_fixture("fix_e2.json");
  // flip both priority lists so each student and college prefer each other
  Instance flipped = Instance::make(e2.instance.students, e2.instance.colleges,
                                    e2.instance.prefs, {{0, 1}, {1, 0}});
  StabilityCheck check = check_stable(flipped, *e2.outcome);
  CHECK_FALSE(check.stable);
  CHECK(check.blocking ==
        std::vector<std::pair<StudentId, CollegeId>>{{0, 0}, {1, 1}});

  Instance bare = Instance::make(e2.instance.students, e2.instance.colleges,
                                 e2.instance.prefs);
  CHECK_THROWS_AS(deferred_acceptance(bare), std::invalid_argument);
  CHECK_THROWS_AS(check_stable(bare, *e2.outcome), std::invalid_argument);
}

TEST_CASE("choices score a win over every declined admission") {
  auto fx = load_fixture("fix_e2_admissions.json");
  REQUIRE(fx.admissions.has_value());
  ScoredRanking rp = rp_ranking(fx.instance, *fx.outcome, *fx.admissions);
  CHECK(rp.score == std::vector<int>{0, 1});  // i declined c in favor of cp
  CHECK(rp.ranking == make_ranking(fx.instance, {{1}, {0}}));

  // with the admission sets shrunk to the bare choice nothing is revealed
  AdmissionsData bare{{{1}, {0}}};
  rp = rp_ranking(fx.instance, *fx.outcome, bare);
  CHECK(rp.score == std::vector<int>{0, 0});
  CHECK(rp.ranking == make_ranking(fx.instance, {{0, 1}}));

  // total wins equal total declined admissions
  AdmissionsData rich{{{0, 1}, {0, 1}}};
  rp = rp_ranking(fx.instance, *fx.outcome, rich);
  CHECK(rp.score[0] + rp.score[1] == 2);

  AdmissionsData missing{{{0}, {0}}};  // i chose cp without being admitted
  CHECK_THROWS_AS(rp_ranking(fx.instance, *fx.outcome, missing), std::invalid_argument);
}

TEST_CASE("rank correlation spans agreement to reversal") {
  Instance inst = Instance::make({"s0", "s1", "s2"}, {"a", "b", "c"},
                                 {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}});
  Ranking abc = make_ranking(inst, {{0}, {1}, {2}});
  Ranking cba = make_ranking(inst, {{2}, {1}, {0}});
  Ranking a_bc = make_ranking(inst, {{0}, {1, 2}});
  Ranking flat = make_ranking(inst, {{0, 1, 2}});

  CHECK(kendall_tau_b(abc, abc) == doctest::Approx(1.0));
  CHECK(kendall_tau_b(abc, cba) == doctest::Approx(-1.0));
  CHECK(kendall_tau_b(abc, a_bc) == doctest::Approx(0.81649658).epsilon(0.001));
  CHECK(kendall_tau_b(a_bc, abc) == doctest::Approx(kendall_tau_b(abc, a_bc)));
  // every pair tied on both sides: undefined, reported as zero
  CHECK(kendall_tau_b(flat, flat) == doctest::Approx(0.0));
  CHECK(kendall_tau_b(flat, abc) == doctest::Approx(0.0));

  Instance other = Instance::make({"s"}, {"x"}, {{0}});
  CHECK_THROWS_AS(kendall_tau_b(abc, make_ranking(other, {{0}})), std::invalid_argument);
}
