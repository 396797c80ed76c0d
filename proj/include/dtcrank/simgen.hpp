#pragma once

#include <cstdint>
#include <vector>

#include "dtcrank/baseline.hpp"
#include "dtcrank/model.hpp"
#include "dtcrank/oracle.hpp"

namespace dtcrank {

// Synthetic market model: colleges carry common qualities n..1, students
// see quality plus lambda-scaled idiosyncratic uniform noise; priorities
// come from a common student score perturbed the same way. lambda = 0 with
// stable seats makes every ranking method land on the quality order.
struct SimConfig {
  int n = 10;
  double lambda = 1.0;
  double priority_noise = 1.0;
  int trials = 100;
  uint64_t seed = 1;
  MuMode mu_mode = MuMode::Stable;
};

struct TrialData {
  Instance instance;
  Outcome outcome;
  Ranking truth;             // singleton tiers in true quality order
  AdmissionsData admissions; // colleges that would (or do) hold the student
};
TrialData gen_instance(const SimConfig& cfg, int trial);

struct SimReport {
  SimConfig config;
  std::vector<double> tau_dtc;  // per trial, ranking vs quality order
  std::vector<double> tau_rp;
  double mean_tau_dtc = 0.0;
  double mean_tau_rp = 0.0;
};
SimReport run_experiment(const SimConfig& cfg);

}  // namespace dtcrank
