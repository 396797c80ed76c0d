#include "dtcrank/dtc.hpp"

#include <algorithm>

namespace dtcrank {

IpCheck is_ip_set(const Instance& inst, const Outcome& out, const std::vector<CollegeId>& set) {
  std::vector<char> member(inst.num_colleges(), 0);
  for (CollegeId c : set) member[c] = 1;

  IpCheck check;
  std::vector<char> taken(inst.num_colleges(), 0);
  for (StudentId i = 0; i < inst.num_students(); ++i) {
    CollegeId seat = out.student_college[i];
    if (member[seat]) {
      CollegeId want = fav_masked(inst, i, member);
      if (taken[want]) return {false, {}};  // two insiders fight over one seat
      taken[want] = 1;
      check.certificate.emplace_back(i, want);
    } else {
      for (CollegeId c : inst.prefs[i]) {
        if (c == seat) break;
        if (member[c]) return {false, {}};  // outsider wants in
      }
    }
  }
  check.ok = true;
  return check;
}

IpSet max_ip_set_bruteforce(const Instance& inst, const Outcome& out, int max_colleges) {
  const int m = inst.num_colleges();
  if (m > max_colleges)
    throw std::invalid_argument("max_ip_set_bruteforce: market exceeds size bound");

  uint64_t union_mask = 0;
  std::vector<CollegeId> subset;
  for (uint64_t mask = 1; mask < (uint64_t{1} << m); ++mask) {
    if ((mask | union_mask) == union_mask) continue;  // can't add anything new
    subset.clear();
    for (int c = 0; c < m; ++c)
      if (mask >> c & 1) subset.push_back(c);
    if (is_ip_set(inst, out, subset).ok) union_mask |= mask;
  }

  IpSet result;
  for (int c = 0; c < m; ++c)
    if (union_mask >> c & 1) result.colleges.push_back(c);
  IpCheck check = is_ip_set(inst, out, result.colleges);
  if (!check.ok && union_mask != 0)
    throw std::logic_error("max_ip_set_bruteforce: union of passing sets is not itself passing");
  result.certificate = std::move(check.certificate);
  return result;
}

CycleGraph build_cycle_graph(const Instance& inst, const TtcResult& ttc) {
  CycleGraph g;
  g.cycles = ttc.cycles;
  g.college_cycle.assign(inst.num_colleges(), -1);
  for (size_t x = 0; x < g.cycles.size(); ++x)
    for (CollegeId c : g.cycles[x].colleges) g.college_cycle[c] = static_cast<int>(x);

  std::vector<std::vector<char>> adj(g.cycles.size(), std::vector<char>(g.cycles.size(), 0));
  for (StudentId i = 0; i < inst.num_students(); ++i) {
    CollegeId seat = ttc.assignment.student_college[i];
    int x = g.college_cycle[seat];
    for (CollegeId c : inst.prefs[i]) {
      if (c == seat) break;
      int y = g.college_cycle[c];
      if (y != x) adj[x][y] = 1;
    }
  }
  g.edges.resize(g.cycles.size());
  for (size_t x = 0; x < g.cycles.size(); ++x)
    for (size_t y = 0; y < g.cycles.size(); ++y)
      if (adj[x][y]) g.edges[x].push_back(static_cast<int>(y));
  return g;
}

std::vector<CollegeId> max_ip_set_fast(const CycleGraph& graph, const std::vector<int>& active) {
  if (active.empty()) throw std::invalid_argument("max_ip_set_fast: no active cycles");
  std::vector<char> is_active(graph.cycles.size(), 0);
  for (int x : active) is_active[x] = 1;
  std::vector<int> indeg(graph.cycles.size(), 0);
  for (int x : active)
    for (int y : graph.edges[x])
      if (is_active[y]) ++indeg[y];

  std::vector<CollegeId> result;
  for (int x : active)
    if (indeg[x] == 0)
      result.insert(result.end(), graph.cycles[x].colleges.begin(), graph.cycles[x].colleges.end());
  std::sort(result.begin(), result.end());
  return result;
}

DtcResult dtc_rank(const Instance& inst, const Outcome& out) {
  DtcResult r;
  r.ttc = ttc_run(inst, out);
  r.graph = build_cycle_graph(inst, r.ttc);

  r.layers.layer_of_cycle.assign(r.graph.cycles.size(), -1);
  std::vector<int> active(r.graph.cycles.size());
  for (size_t x = 0; x < active.size(); ++x) active[x] = static_cast<int>(x);

  while (!active.empty()) {
    std::vector<CollegeId> layer = max_ip_set_fast(r.graph, active);
    if (layer.empty()) throw std::logic_error("dtc_rank: no unpointed cycle among active ones");
    int index = static_cast<int>(r.layers.layers.size());
    std::vector<int> still_active;
    for (int x : active) {
      CollegeId probe = r.graph.cycles[x].colleges.front();
      if (std::binary_search(layer.begin(), layer.end(), probe))
        r.layers.layer_of_cycle[x] = index;
      else
        still_active.push_back(x);
    }
    r.layers.layers.push_back(std::move(layer));
    active = std::move(still_active);
  }

  std::vector<std::vector<CollegeId>> tiers(r.layers.layers.rbegin(), r.layers.layers.rend());
  r.ranking = make_ranking(inst, std::move(tiers));
  return r;
}

}  // namespace dtcrank
