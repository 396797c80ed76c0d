#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dtcrank {

using StudentId = int;
using CollegeId = int;

// Thrown when input data violates the format or the market invariants.
// `issues` carries one entry per problem so a CLI can print them all.
struct Issue {
  std::string code;     // short machine tag, e.g. "unknown-key"
  std::string subject;  // offending location, e.g. "prefs.i1"
  std::string message;
};

struct ValidationReport {
  std::vector<Issue> issues;
  bool ok() const { return issues.empty(); }
  void add(std::string code, std::string subject, std::string message) {
    issues.push_back({std::move(code), std::move(subject), std::move(message)});
  }
};

class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string what, ValidationReport report)
      : std::runtime_error(std::move(what)), report(std::move(report)) {}
  ValidationReport report;
};

// One-seat college admissions market. Students and colleges are referred to
// by dense indices into `students` / `colleges`; every student ranks every
// college (strict, complete). Priorities are optional and only needed by the
// deferred-acceptance and stability routines.
struct Instance {
  std::vector<std::string> students;
  std::vector<std::string> colleges;
  std::vector<std::vector<CollegeId>> prefs;       // prefs[i], best first
  std::vector<std::vector<StudentId>> priorities;  // priorities[c], best first; empty if absent

  // derived lookup tables, filled by make()
  std::vector<std::vector<int>> pref_rank;  // pref_rank[i][c]: position of c in prefs[i]
  std::vector<std::vector<int>> prio_rank;  // prio_rank[c][i]; empty if no priorities

  int num_students() const { return static_cast<int>(students.size()); }
  int num_colleges() const { return static_cast<int>(colleges.size()); }
  bool has_priorities() const { return !priorities.empty(); }

  // a P_i b
  bool prefers(StudentId i, CollegeId a, CollegeId b) const {
    return pref_rank[i][a] < pref_rank[i][b];
  }
  // i >_c j
  bool priority_over(CollegeId c, StudentId i, StudentId j) const {
    return prio_rank[c][i] < prio_rank[c][j];
  }

  // Validates and builds the derived tables. Throws ValidationError.
  static Instance make(std::vector<std::string> students, std::vector<std::string> colleges,
                       std::vector<std::vector<CollegeId>> prefs,
                       std::vector<std::vector<StudentId>> priorities = {});
};

// Assignment of students to seats. Every student holds exactly one college;
// a college holds at most one student. When |I| < |C| some colleges are
// empty, which the axiom checkers accept but the trading routines reject.
struct Outcome {
  std::vector<CollegeId> student_college;  // size N, always >= 0
  std::vector<StudentId> college_student;  // size M, -1 when empty

  CollegeId college_of(StudentId i) const { return student_college[i]; }
  StudentId student_of(CollegeId c) const { return college_student[c]; }
  bool bijective() const {
    for (StudentId i : college_student)
      if (i < 0) return false;
    return true;
  }

  static Outcome make(const Instance& inst, const std::vector<CollegeId>& student_college);
};

// Ordered partition of the colleges into tiers; tier 0 is the highest.
// Tiers are kept sorted by college index so equal rankings compare equal.
struct Ranking {
  std::vector<std::vector<CollegeId>> tiers;
  std::vector<int> tier_of;  // tier_of[c], 0-based

  int num_tiers() const { return static_cast<int>(tiers.size()); }
  int num_colleges() const { return static_cast<int>(tier_of.size()); }

  bool operator==(const Ranking& o) const { return tiers == o.tiers; }
  bool operator<(const Ranking& o) const { return tiers < o.tiers; }
};

Ranking make_ranking(const Instance& inst, std::vector<std::vector<CollegeId>> tiers);

// Most-preferred college of student i within a nonempty subset.
CollegeId fav(const Instance& inst, StudentId i, const std::vector<CollegeId>& subset);
// Same, subset given as a membership mask over all colleges.
CollegeId fav_masked(const Instance& inst, StudentId i, const std::vector<char>& member);

// Sub-market induced by a subset of colleges: keeps the students assigned
// inside the subset, drops everyone else, and filters preference lists.
// Priorities are filtered too when present.
struct Market {
  Instance instance;
  Outcome outcome;
  std::vector<StudentId> student_orig;  // new index -> original student
  std::vector<CollegeId> college_orig;  // new index -> original college
};
Market restrict_market(const Instance& inst, const Outcome& out,
                       const std::vector<CollegeId>& keep_colleges);

}  // namespace dtcrank
