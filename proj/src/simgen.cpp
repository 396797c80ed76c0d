#include "dtcrank/simgen.hpp"

#include <algorithm>
#include <numeric>

#include "dtcrank/dtc.hpp"
#include "dtcrank/rng.hpp"

namespace dtcrank {

namespace {

// Order 0..n-1 by descending score; exact ties force a redraw of the whole
// score vector, so the order is always strict.
std::vector<int> noisy_order(int n, double base_step_top, double noise, Rng& rng) {
  for (;;) {
    std::vector<double> score(n);
    for (int k = 0; k < n; ++k) score[k] = (base_step_top - k) + noise * rng.unit();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return score[a] > score[b]; });
    bool tied = false;
    for (int k = 0; k + 1 < n && !tied; ++k) tied = score[order[k]] == score[order[k + 1]];
    if (!tied) return order;
  }
}

}  // namespace

TrialData gen_instance(const SimConfig& cfg, int trial) {
  const int n = cfg.n;
  Rng rng = Rng::for_trial(cfg.seed, static_cast<uint64_t>(trial));

  std::vector<std::string> students(n), colleges(n);
  for (int k = 0; k < n; ++k) {
    students[k] = "s" + std::to_string(k + 1);
    colleges[k] = "c" + std::to_string(k + 1);  // c1 has the top quality n
  }

  // students first, then colleges, then the seat draw: fixed stream order
  std::vector<std::vector<CollegeId>> prefs(n);
  for (int i = 0; i < n; ++i) prefs[i] = noisy_order(n, n, cfg.lambda, rng);
  std::vector<std::vector<StudentId>> priorities(n);
  for (int c = 0; c < n; ++c) priorities[c] = noisy_order(n, n, cfg.priority_noise, rng);

  TrialData trial_data;
  trial_data.instance = Instance::make(std::move(students), std::move(colleges),
                                       std::move(prefs), std::move(priorities));
  if (cfg.mu_mode == MuMode::Random)
    trial_data.outcome = Outcome::make(trial_data.instance, rng.permutation(n));
  else
    trial_data.outcome = deferred_acceptance(trial_data.instance);

  std::vector<std::vector<CollegeId>> truth_tiers(n);
  for (int c = 0; c < n; ++c) truth_tiers[c] = {c};
  trial_data.truth = make_ranking(trial_data.instance, std::move(truth_tiers));

  // a college admits the student it holds plus anyone it likes better
  trial_data.admissions.admitted.resize(n);
  for (StudentId i = 0; i < n; ++i) {
    for (CollegeId c = 0; c < n; ++c) {
      StudentId holder = trial_data.outcome.college_student[c];
      if (holder == i || trial_data.instance.priority_over(c, i, holder))
        trial_data.admissions.admitted[i].push_back(c);
    }
  }
  return trial_data;
}

SimReport run_experiment(const SimConfig& cfg) {
  SimReport report;
  report.config = cfg;
  for (int t = 0; t < cfg.trials; ++t) {
    TrialData trial = gen_instance(cfg, t);
    DtcResult dtc = dtc_rank(trial.instance, trial.outcome);
    ScoredRanking rp = rp_ranking(trial.instance, trial.outcome, trial.admissions);
    report.tau_dtc.push_back(kendall_tau_b(dtc.ranking, trial.truth));
    report.tau_rp.push_back(kendall_tau_b(rp.ranking, trial.truth));
  }
  auto mean = [](const std::vector<double>& v) {
    return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  };
  report.mean_tau_dtc = mean(report.tau_dtc);
  report.mean_tau_rp = mean(report.tau_rp);
  return report;
}

}  // namespace dtcrank
