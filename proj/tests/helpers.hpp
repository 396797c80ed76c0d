#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dtcrank/io.hpp"

namespace testutil {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string fixture_path(const std::string& name) {
  return std::string(FIXTURES_DIR) + "/" + name;
}

inline dtcrank::ParsedInstance load_fixture(const std::string& name) {
  return dtcrank::parse_instance(read_file(fixture_path(name)));
}

// Single student i with preferences a > b > c, seated wherever a scenario
// needs. Used by the per-tier ranking scenarios.
inline dtcrank::Instance one_student_abc() {
  return dtcrank::Instance::make({"i"}, {"a", "b", "c"}, {{0, 1, 2}});
}

// Exhaustive search for a reassignment that makes someone better off and
// nobody worse off. Factorial in the market size; keep n small.
inline bool brute_pareto_improvable(const dtcrank::Instance& inst, const dtcrank::Outcome& out) {
  const int n = inst.num_students();
  std::vector<dtcrank::CollegeId> perm(n);
  for (int c = 0; c < n; ++c) perm[c] = c;
  do {
    bool weakly_better = true, strictly = false;
    for (dtcrank::StudentId i = 0; i < n && weakly_better; ++i) {
      int now = inst.pref_rank[i][out.student_college[i]];
      int alt = inst.pref_rank[i][perm[i]];
      if (alt > now) weakly_better = false;
      if (alt < now) strictly = true;
    }
    if (weakly_better && strictly) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace testutil
