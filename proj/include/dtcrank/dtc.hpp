#pragma once

#include <vector>

#include "dtcrank/model.hpp"
#include "dtcrank/ttc.hpp"

namespace dtcrank {

// Isolated and perfect college set: nobody outside wants in, and the
// students seated inside can be reseated on their favorites within the set
// without collisions. `certificate` records that reseating.
struct IpCheck {
  bool ok = false;
  std::vector<std::pair<StudentId, CollegeId>> certificate;  // (student, favorite in set)
};
IpCheck is_ip_set(const Instance& inst, const Outcome& out, const std::vector<CollegeId>& set);

struct IpSet {
  std::vector<CollegeId> colleges;  // sorted
  std::vector<std::pair<StudentId, CollegeId>> certificate;
};

// Exact maximum isolated-perfect set by subset enumeration; the union of all
// passing subsets. Refuses markets above `max_colleges`.
IpSet max_ip_set_bruteforce(const Instance& inst, const Outcome& out, int max_colleges = 12);

// One node per trading cycle; an edge x -> y says some student who ended up
// in cycle x would rather hold a seat in cycle y. Edges can only point to
// cycles removed strictly earlier.
struct CycleGraph {
  std::vector<Cycle> cycles;
  std::vector<std::vector<int>> edges;  // edges[x]: sorted targets of x
  std::vector<int> college_cycle;       // college -> node index
};
CycleGraph build_cycle_graph(const Instance& inst, const TtcResult& ttc);

// Union of the colleges of active cycles that no other active cycle points
// to. This is the largest isolated-perfect set that is a union of whole
// active cycles. Beware: the unrestricted maximum (max_ip_set_bruteforce)
// can be strictly bigger, because after trading a proper slice of a pointed
// cycle may be isolated-perfect on its own. Peeling must stay cycle-aligned
// or the final ranking loses the weak desire axiom.
std::vector<CollegeId> max_ip_set_fast(const CycleGraph& graph, const std::vector<int>& active);

struct DtcLayers {
  // layers[0] is stripped first and becomes the lowest tier.
  std::vector<std::vector<CollegeId>> layers;
  std::vector<int> layer_of_cycle;  // cycle node -> 0-based layer
};

struct DtcResult {
  TtcResult ttc;
  CycleGraph graph;
  DtcLayers layers;
  Ranking ranking;
};

// Full pipeline: trade, build the desire graph over cycles, peel unpointed
// cycles layer by layer, then rank the layers last-peeled-first.
DtcResult dtc_rank(const Instance& inst, const Outcome& out);

}  // namespace dtcrank
