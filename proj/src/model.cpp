#include "dtcrank/model.hpp"

#include <algorithm>
#include <unordered_set>

namespace dtcrank {

namespace {

void fail(ValidationReport& report, const std::string& what) {
  throw ValidationError(what, report);
}

}  // namespace

Instance Instance::make(std::vector<std::string> students, std::vector<std::string> colleges,
                        std::vector<std::vector<CollegeId>> prefs,
                        std::vector<std::vector<StudentId>> priorities) {
  ValidationReport report;
  const int n = static_cast<int>(students.size());
  const int m = static_cast<int>(colleges.size());
  if (n == 0) report.add("empty", "students", "at least one student required");
  if (m == 0) report.add("empty", "colleges", "at least one college required");
  if (static_cast<int>(prefs.size()) != n)
    report.add("bad-size", "prefs", "one preference list per student required");
  if (!priorities.empty() && static_cast<int>(priorities.size()) != m)
    report.add("bad-size", "priorities", "when given, one priority list per college required");
  if (!report.ok()) fail(report, report.issues.front().message);

  auto check_perm = [&](const std::vector<int>& list, int size, const std::string& where,
                        const char* kind) {
    if (static_cast<int>(list.size()) != size) {
      report.add("incomplete-list", where, std::string("list must rank every ") + kind);
      return;
    }
    std::vector<char> seen(size, 0);
    for (int v : list) {
      if (v < 0 || v >= size) {
        report.add("bad-index", where, std::string("unknown ") + kind + " index");
        return;
      }
      if (seen[v]) {
        report.add("duplicate", where, std::string("repeated ") + kind + " in list");
        return;
      }
      seen[v] = 1;
    }
  };

  for (int i = 0; i < n; ++i) check_perm(prefs[i], m, "prefs." + students[i], "college");
  for (size_t c = 0; c < priorities.size(); ++c)
    check_perm(priorities[c], n, "priorities." + colleges[c], "student");
  if (!report.ok()) fail(report, report.issues.front().message);

  Instance inst;
  inst.students = std::move(students);
  inst.colleges = std::move(colleges);
  inst.prefs = std::move(prefs);
  inst.priorities = std::move(priorities);

  inst.pref_rank.assign(n, std::vector<int>(m, -1));
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < m; ++r) inst.pref_rank[i][inst.prefs[i][r]] = r;
  if (!inst.priorities.empty()) {
    inst.prio_rank.assign(m, std::vector<int>(n, -1));
    for (int c = 0; c < m; ++c)
      for (int r = 0; r < n; ++r) inst.prio_rank[c][inst.priorities[c][r]] = r;
  }
  return inst;
}

Outcome Outcome::make(const Instance& inst, const std::vector<CollegeId>& student_college) {
  ValidationReport report;
  const int n = inst.num_students();
  const int m = inst.num_colleges();
  if (static_cast<int>(student_college.size()) != n)
    report.add("bad-size", "assignment", "every student needs a seat");
  if (!report.ok()) fail(report, report.issues.front().message);

  Outcome out;
  out.student_college = student_college;
  out.college_student.assign(m, -1);
  for (int i = 0; i < n; ++i) {
    CollegeId c = student_college[i];
    if (c < 0 || c >= m) {
      report.add("bad-index", "assignment." + inst.students[i], "unknown college");
      continue;
    }
    if (out.college_student[c] >= 0) {
      report.add("duplicate-seat", "assignment." + inst.students[i],
                 "college " + inst.colleges[c] + " assigned twice");
      continue;
    }
    out.college_student[c] = i;
  }
  if (!report.ok()) fail(report, report.issues.front().message);
  return out;
}

Ranking make_ranking(const Instance& inst, std::vector<std::vector<CollegeId>> tiers) {
  ValidationReport report;
  const int m = inst.num_colleges();
  Ranking rank;
  rank.tier_of.assign(m, -1);
  if (tiers.empty()) report.add("empty", "tiers", "at least one tier required");
  for (size_t t = 0; t < tiers.size(); ++t) {
    if (tiers[t].empty()) {
      report.add("empty-tier", "tiers[" + std::to_string(t + 1) + "]", "tier must be nonempty");
      continue;
    }
    for (CollegeId c : tiers[t]) {
      if (c < 0 || c >= m) {
        report.add("bad-index", "tiers[" + std::to_string(t + 1) + "]", "unknown college");
        continue;
      }
      if (rank.tier_of[c] >= 0) {
        report.add("duplicate", "tiers[" + std::to_string(t + 1) + "]",
                   "college " + inst.colleges[c] + " appears twice");
        continue;
      }
      rank.tier_of[c] = static_cast<int>(t);
    }
  }
  for (int c = 0; c < m && report.ok(); ++c)
    if (rank.tier_of[c] < 0)
      report.add("missing", "tiers", "college " + inst.colleges[c] + " not placed in any tier");
  if (!report.ok()) fail(report, report.issues.front().message);

  for (auto& tier : tiers) std::sort(tier.begin(), tier.end());
  rank.tiers = std::move(tiers);
  return rank;
}

CollegeId fav(const Instance& inst, StudentId i, const std::vector<CollegeId>& subset) {
  if (subset.empty()) throw std::invalid_argument("fav: empty college subset");
  CollegeId best = subset[0];
  for (CollegeId c : subset)
    if (inst.pref_rank[i][c] < inst.pref_rank[i][best]) best = c;
  return best;
}

CollegeId fav_masked(const Instance& inst, StudentId i, const std::vector<char>& member) {
  for (CollegeId c : inst.prefs[i])
    if (member[c]) return c;
  throw std::invalid_argument("fav_masked: empty college subset");
}

Market restrict_market(const Instance& inst, const Outcome& out,
                       const std::vector<CollegeId>& keep_colleges) {
  const int m = inst.num_colleges();
  std::vector<int> new_college(m, -1);
  Market mk;
  mk.college_orig = keep_colleges;
  std::sort(mk.college_orig.begin(), mk.college_orig.end());
  for (size_t k = 0; k < mk.college_orig.size(); ++k) new_college[mk.college_orig[k]] = static_cast<int>(k);

  std::vector<int> new_student(inst.num_students(), -1);
  for (StudentId i = 0; i < inst.num_students(); ++i) {
    CollegeId c = out.student_college[i];
    if (new_college[c] >= 0) {
      new_student[i] = static_cast<int>(mk.student_orig.size());
      mk.student_orig.push_back(i);
    }
  }

  std::vector<std::string> students, colleges;
  for (StudentId i : mk.student_orig) students.push_back(inst.students[i]);
  for (CollegeId c : mk.college_orig) colleges.push_back(inst.colleges[c]);

  std::vector<std::vector<CollegeId>> prefs(mk.student_orig.size());
  for (size_t k = 0; k < mk.student_orig.size(); ++k)
    for (CollegeId c : inst.prefs[mk.student_orig[k]])
      if (new_college[c] >= 0) prefs[k].push_back(new_college[c]);

  std::vector<std::vector<StudentId>> priorities;
  if (inst.has_priorities()) {
    priorities.resize(mk.college_orig.size());
    for (size_t k = 0; k < mk.college_orig.size(); ++k)
      for (StudentId i : inst.priorities[mk.college_orig[k]])
        if (new_student[i] >= 0) priorities[k].push_back(new_student[i]);
  }

  mk.instance = Instance::make(std::move(students), std::move(colleges), std::move(prefs),
                               std::move(priorities));
  std::vector<CollegeId> seats(mk.student_orig.size());
  for (size_t k = 0; k < mk.student_orig.size(); ++k)
    seats[k] = new_college[out.student_college[mk.student_orig[k]]];
  mk.outcome = Outcome::make(mk.instance, seats);
  return mk;
}

}  // namespace dtcrank
