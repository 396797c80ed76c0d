#pragma once

#include <optional>
#include <string>

#include "dtcrank/axioms.hpp"
#include "dtcrank/baseline.hpp"
#include "dtcrank/dtc.hpp"
#include "dtcrank/model.hpp"
#include "dtcrank/simgen.hpp"

namespace dtcrank {

// Market file: a UTF-8 JSON object with keys
//   students, colleges            required string arrays
//   prefs                         required map student -> full college list
//   priorities                    optional map college -> full student list
//   capacities                    optional map college -> 1
//   assignment                    optional map student -> college (injective,
//                                 total on students)
//   admissions                    optional map student -> college list
// Anything else is rejected. Parse problems throw ValidationError with one
// issue per offense.
struct ParsedInstance {
  Instance instance;
  std::optional<Outcome> outcome;
  std::optional<AdmissionsData> admissions;
};
ParsedInstance parse_instance(const std::string& text);

// Ranking file: JSON object with a "tiers" key, a list of college-name
// lists, highest tier first. Extra keys are ignored so a rank report can be
// fed back in directly.
Ranking parse_ranking(const std::string& text, const Instance& inst);

// JSON renderings of the result types (stable key order, 2-space indent).
std::string instance_to_json(const Instance& inst, const Outcome* out = nullptr,
                             const AdmissionsData* adm = nullptr);
std::string ranking_to_json(const Instance& inst, const Ranking& rank);
std::string tiers_json_fragment(const Instance& inst, const Ranking& rank);
std::string axiom_report_to_json(const Instance& inst, const AxiomReport& report);

// Graphviz view of the cycle desire graph: one node per trading cycle
// labeled with its colleges and layer, first-stripped layer flagged.
std::string export_dot(const Instance& inst, const DtcResult& dtc);

// Human-readable names, joined tiers etc. Used by CLI and tests.
std::string tier_to_string(const Instance& inst, const std::vector<CollegeId>& tier);
std::string ranking_to_string(const Instance& inst, const Ranking& rank);

}  // namespace dtcrank
