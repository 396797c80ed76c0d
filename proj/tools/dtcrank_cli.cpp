#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dtcrank/axioms.hpp"
#include "dtcrank/baseline.hpp"
#include "dtcrank/dtc.hpp"
#include "dtcrank/io.hpp"
#include "dtcrank/oracle.hpp"
#include "dtcrank/simgen.hpp"
#include "dtcrank/ttc.hpp"
#include "json.hpp"

using namespace dtcrank;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAxiomFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInternalError = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fixed6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

ParsedInstance load_market(const std::string& path) { return parse_instance(slurp(path)); }

const Outcome& need_outcome(const ParsedInstance& parsed) {
  if (!parsed.outcome) throw std::invalid_argument("market file carries no assignment");
  return *parsed.outcome;
}

const Outcome& need_bijective(const ParsedInstance& parsed) {
  const Outcome& out = need_outcome(parsed);
  if (!out.bijective())
    throw std::invalid_argument("every college must be assigned for this command");
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + out_path);
  out << text;
}

std::string witness_line(const Instance& inst, const AxiomWitness& w) {
  std::string s = "  " + w.rule + ":";
  if (w.student >= 0) s += " student " + inst.students[w.student];
  if (w.college >= 0) s += std::string(w.student >= 0 ? "," : "") + " college " + inst.colleges[w.college];
  if (w.tier > 0) s += " (tier " + std::to_string(w.tier) + ")";
  if (w.count >= 0) s += " demand=" + std::to_string(w.count);
  return s + "\n";
}

int cmd_rank(const std::string& path, const std::string& out_path, const std::string& format) {
  ParsedInstance parsed = load_market(path);
  const Outcome& out = need_bijective(parsed);
  DtcResult dtc = dtc_rank(parsed.instance, out);

  // bug trap: the produced ranking must survive its own checkers
  if (!is_desirable(parsed.instance, out, dtc.ranking).holds ||
      !is_ttc_ranking(parsed.instance, out, dtc.ranking).ok) {
    std::cerr << "self-check failed: produced ranking does not verify\n";
    return kExitInternalError;
  }

  std::string text;
  if (format == "doc") {
    ojson doc;
    doc["tiers"] = ojson::parse(tiers_json_fragment(parsed.instance, dtc.ranking));
    ojson layers = ojson::array();
    for (const auto& layer : dtc.layers.layers) {
      ojson l = ojson::array();
      for (CollegeId c : layer) l.push_back(parsed.instance.colleges[c]);
      layers.push_back(std::move(l));
    }
    doc["layers"] = std::move(layers);
    doc["desirable"] = true;
    text = doc.dump(2) + "\n";
  } else {
    text += "tiers (highest first):\n";
    for (int t = 0; t < dtc.ranking.num_tiers(); ++t)
      text += "  " + std::to_string(t + 1) + ": " +
              tier_to_string(parsed.instance, dtc.ranking.tiers[t]) + "\n";
    text += "layers (stripped first):";
    for (const auto& layer : dtc.layers.layers)
      text += " [" + tier_to_string(parsed.instance, layer) + "]";
    text += "\nself-check: desirable, decomposes into trading cycles\n";
  }
  emit(text, out_path);
  return kExitOk;
}

int cmd_ttc(const std::string& path, const std::string& policy_name, uint64_t seed,
            const std::string& format) {
  ParsedInstance parsed = load_market(path);
  const Outcome& out = need_bijective(parsed);
  CyclePolicy policy = CyclePolicy::AllCycles;
  if (policy_name == "lex") policy = CyclePolicy::LexMinOne;
  if (policy_name == "random") policy = CyclePolicy::RandomOne;
  TtcResult ttc = ttc_run(parsed.instance, out, policy, seed);

  std::string text;
  if (format == "doc") {
    ojson doc;
    ojson assignment;
    for (int i = 0; i < parsed.instance.num_students(); ++i)
      assignment[parsed.instance.students[i]] =
          parsed.instance.colleges[ttc.assignment.student_college[i]];
    doc["assignment"] = std::move(assignment);
    ojson cycles = ojson::array();
    for (const Cycle& cyc : ttc.cycles) {
      ojson c;
      c["step"] = cyc.step;
      ojson members = ojson::array();
      for (CollegeId id : cyc.colleges) members.push_back(parsed.instance.colleges[id]);
      c["colleges"] = std::move(members);
      cycles.push_back(std::move(c));
    }
    doc["cycles"] = std::move(cycles);
    text = doc.dump(2) + "\n";
  } else {
    text += "assignment:\n";
    for (int i = 0; i < parsed.instance.num_students(); ++i)
      text += "  " + parsed.instance.students[i] + " -> " +
              parsed.instance.colleges[ttc.assignment.student_college[i]] + "\n";
    text += "cycles:\n";
    for (const Cycle& cyc : ttc.cycles)
      text += "  step " + std::to_string(cyc.step) + ": (" +
              tier_to_string(parsed.instance, cyc.colleges) + ")\n";
  }
  std::cout << text;
  return kExitOk;
}

int cmd_check(const std::string& path, const std::string& ranking_path,
              const std::string& format) {
  ParsedInstance parsed = load_market(path);
  const Outcome& out = need_outcome(parsed);
  Ranking rank = parse_ranking(slurp(ranking_path), parsed.instance);

  AxiomReport sad = check_sad(parsed.instance, out, rank);
  AxiomReport wad1 = check_wad(parsed.instance, out, rank, 1);
  AxiomReport wad2 = check_wad(parsed.instance, out, rank, 2);
  AxiomReport wad3 = check_wad(parsed.instance, out, rank, 3);
  if (wad1.holds != wad2.holds || wad1.holds != wad3.holds) {
    std::cerr << "self-check failed: the three forms of the weak axiom disagree\n";
    return kExitInternalError;
  }
  AxiomReport balanced = check_balanced(parsed.instance, out, rank);
  AxiomReport justified = check_justified(parsed.instance, out, rank);
  AxiomReport desirable = is_desirable(parsed.instance, out, rank);

  if (format == "doc") {
    ojson doc;
    for (const AxiomReport* r : {&sad, &wad1, &balanced, &justified, &desirable})
      doc[r->axiom] = ojson::parse(axiom_report_to_json(parsed.instance, *r));
    std::cout << doc.dump(2) << "\n";
  } else {
    std::string text;
    for (const AxiomReport* r : {&sad, &wad1, &balanced, &justified, &desirable}) {
      text += r->axiom + ": " + (r->holds ? "holds" : "violated") + "\n";
      for (const AxiomWitness& w : r->violations) text += witness_line(parsed.instance, w);
    }
    std::cout << text;
  }
  return desirable.holds ? kExitOk : kExitAxiomFailure;
}

struct OracleCheck {
  std::string name;
  long runs = 0;
  long failures = 0;
  std::string first_counterexample;  // market file text, reproducible

  void tally(bool ok, const Instance& inst, const Outcome& out, const std::string& detail) {
    ++runs;
    if (ok) return;
    ++failures;
    if (first_counterexample.empty())
      first_counterexample = detail + "\n" + instance_to_json(inst, &out);
  }
};

int cmd_oracle(int trials, int nmin, int nmax, uint64_t seed, const std::string& mu_name,
               const std::string& format) {
  if (nmin < 2 || nmax > 6 || nmin > nmax)
    throw std::invalid_argument("college counts must satisfy 2 <= nmin <= nmax <= 6");
  MuMode mu = mu_name == "stable" ? MuMode::Stable : MuMode::Random;

  OracleCheck unique_desirable{"unique-desirable-vs-dtc"};
  OracleCheck axioms_vs_decomp{"axioms-vs-decompositions"};
  OracleCheck union_closure{"ip-union-closure"};
  OracleCheck max_contains{"ip-max-contains-all"};
  OracleCheck nontrivial{"first-layer-nonempty"};
  OracleCheck policy_invariant{"policy-invariance"};
  OracleCheck individually_rational{"trade-never-hurts"};
  OracleCheck layer_cycle_brute{"layer-vs-cycle-unions"};
  OracleCheck layer_in_max{"layer-inside-brute-max"};

  Rng rng(seed);
  for (int n = nmin; n <= nmax; ++n) {
    for (int t = 0; t < trials; ++t) {
      RandomMarket market = random_market(n, rng, mu);
      const Instance& inst = market.instance;
      const Outcome& out = market.outcome;

      DtcResult dtc = dtc_rank(inst, out);
      auto desirable = find_desirable(inst, out);
      unique_desirable.tally(desirable.size() == 1 && desirable[0] == dtc.ranking, inst, out,
                             "desirable rankings found: " + std::to_string(desirable.size()));

      if (n <= 5) {
        EquivalenceCheck eq = check_theorem2(inst, out);
        axioms_vs_decomp.tally(eq.ok, inst, out, "axiom and decomposition sets differ");
      }

      // isolation+perfection closure under union, via full subset enumeration
      {
        std::vector<std::vector<CollegeId>> ip_sets;
        for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
          std::vector<CollegeId> s;
          for (int c = 0; c < n; ++c)
            if (mask >> c & 1) s.push_back(c);
          if (is_ip_set(inst, out, s).ok) ip_sets.push_back(std::move(s));
        }
        bool closed = true;
        for (size_t x = 0; x < ip_sets.size() && closed; ++x)
          for (size_t y = x + 1; y < ip_sets.size() && closed; ++y) {
            std::vector<CollegeId> u = ip_sets[x];
            u.insert(u.end(), ip_sets[y].begin(), ip_sets[y].end());
            std::sort(u.begin(), u.end());
            u.erase(std::unique(u.begin(), u.end()), u.end());
            closed = is_ip_set(inst, out, u).ok;
          }
        union_closure.tally(closed, inst, out, "union of two passing sets fails");

        IpSet max_set = max_ip_set_bruteforce(inst, out);
        bool contains = true;
        std::vector<char> in_max(n, 0);
        for (CollegeId c : max_set.colleges) in_max[c] = 1;
        for (const auto& s : ip_sets)
          for (CollegeId c : s)
            if (!in_max[c]) contains = false;
        max_contains.tally(contains, inst, out, "maximum misses a passing set");
      }

      nontrivial.tally(!dtc.layers.layers.empty() && !dtc.layers.layers[0].empty(), inst, out,
                       "no first layer");

      TtcResult lex = ttc_run(inst, out, CyclePolicy::LexMinOne);
      TtcResult rnd = ttc_run(inst, out, CyclePolicy::RandomOne, rng.next_u64());
      policy_invariant.tally(
          lex.assignment.student_college == dtc.ttc.assignment.student_college &&
              rnd.assignment.student_college == dtc.ttc.assignment.student_college,
          inst, out, "cycle policies disagree on the final assignment");
      bool rational = true;
      for (StudentId i = 0; i < inst.num_students(); ++i)
        if (inst.pref_rank[i][dtc.ttc.assignment.student_college[i]] >
            inst.pref_rank[i][out.student_college[i]])
          rational = false;
      individually_rational.tally(rational, inst, out, "trading made someone worse off");

      // each stripped layer must be the largest isolated-perfect union of the
      // cycles still standing, and must sit inside the unrestricted brute
      // maximum of the shrunk market (which may be strictly bigger: a slice
      // of a pointed cycle can be isolated-perfect on its own)
      {
        bool cycle_agree = true;
        bool contained = true;
        const int num_cycles = static_cast<int>(dtc.graph.cycles.size());
        std::vector<CollegeId> remaining(n);
        for (int c = 0; c < n; ++c) remaining[c] = c;
        const int num_layers = static_cast<int>(dtc.layers.layers.size());
        for (int l = 0; l < num_layers && cycle_agree && contained; ++l) {
          const auto& layer = dtc.layers.layers[l];
          Market sub = restrict_market(inst, dtc.ttc.assignment, remaining);
          std::vector<int> local(n, -1);
          for (size_t k = 0; k < sub.college_orig.size(); ++k)
            local[sub.college_orig[k]] = static_cast<int>(k);

          std::vector<int> active;
          for (int x = 0; x < num_cycles; ++x)
            if (dtc.layers.layer_of_cycle[x] >= l) active.push_back(x);

          std::vector<CollegeId> best;
          for (uint64_t mask = 1; mask < (uint64_t{1} << active.size()); ++mask) {
            std::vector<CollegeId> s;
            for (size_t k = 0; k < active.size(); ++k)
              if (mask >> k & 1)
                for (CollegeId c : dtc.graph.cycles[active[k]].colleges)
                  s.push_back(local[c]);
            std::sort(s.begin(), s.end());
            if (is_ip_set(sub.instance, sub.outcome, s).ok) {
              best.insert(best.end(), s.begin(), s.end());
              std::sort(best.begin(), best.end());
              best.erase(std::unique(best.begin(), best.end()), best.end());
            }
          }
          std::vector<CollegeId> best_orig;
          for (CollegeId c : best) best_orig.push_back(sub.college_orig[c]);
          if (best_orig != layer) cycle_agree = false;

          IpSet brute = max_ip_set_bruteforce(sub.instance, sub.outcome);
          std::vector<char> in_brute(sub.college_orig.size(), 0);
          for (CollegeId c : brute.colleges) in_brute[c] = 1;
          for (CollegeId c : layer)
            if (!in_brute[local[c]]) contained = false;

          std::vector<CollegeId> rest;
          for (CollegeId c : remaining)
            if (!std::binary_search(layer.begin(), layer.end(), c)) rest.push_back(c);
          remaining = std::move(rest);
        }
        layer_cycle_brute.tally(cycle_agree, inst, out,
                                "graph layer differs from the best cycle union");
        layer_in_max.tally(contained, inst, out, "graph layer escapes the brute maximum");
      }
    }
  }

  std::vector<const OracleCheck*> checks = {&unique_desirable, &axioms_vs_decomp,
                                            &union_closure,    &max_contains,
                                            &nontrivial,       &policy_invariant,
                                            &individually_rational, &layer_cycle_brute,
                                            &layer_in_max};
  long total_failures = 0;
  for (const OracleCheck* c : checks) total_failures += c->failures;

  if (format == "doc") {
    ojson doc;
    doc["seed"] = seed;
    doc["mu"] = mu_name;
    doc["trials_per_n"] = trials;
    doc["nmin"] = nmin;
    doc["nmax"] = nmax;
    ojson list = ojson::array();
    for (const OracleCheck* c : checks) {
      ojson entry;
      entry["name"] = c->name;
      entry["runs"] = c->runs;
      entry["failures"] = c->failures;
      if (!c->first_counterexample.empty()) entry["first_counterexample"] = c->first_counterexample;
      list.push_back(std::move(entry));
    }
    doc["checks"] = std::move(list);
    doc["ok"] = total_failures == 0;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "oracle seed=" << seed << " mu=" << mu_name << " trials=" << trials << " n="
              << nmin << ".." << nmax << "\n";
    for (const OracleCheck* c : checks) {
      std::cout << "  " << c->name << ": " << (c->runs - c->failures) << "/" << c->runs
                << " pass\n";
      if (!c->first_counterexample.empty())
        std::cout << "  first counterexample:\n" << c->first_counterexample << "\n";
    }
    std::cout << (total_failures == 0 ? "all checks passed\n" : "counterexamples found\n");
  }
  return total_failures == 0 ? kExitOk : kExitAxiomFailure;
}

int cmd_compare(const std::string& path, const std::string& format) {
  ParsedInstance parsed = load_market(path);
  const Outcome& out = need_bijective(parsed);
  if (!parsed.admissions) throw std::invalid_argument("market file carries no admissions data");

  DtcResult dtc = dtc_rank(parsed.instance, out);
  ScoredRanking rp = rp_ranking(parsed.instance, out, *parsed.admissions);
  double tau = kendall_tau_b(dtc.ranking, rp.ranking);

  if (format == "doc") {
    ojson doc;
    doc["trading"] = ojson::parse(tiers_json_fragment(parsed.instance, dtc.ranking));
    doc["revealed_preference"] = ojson::parse(tiers_json_fragment(parsed.instance, rp.ranking));
    ojson scores;
    for (int c = 0; c < parsed.instance.num_colleges(); ++c)
      scores[parsed.instance.colleges[c]] = rp.score[c];
    doc["scores"] = std::move(scores);
    doc["kendall_tau_b"] = fixed6(tau);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "trading ranking: " << ranking_to_string(parsed.instance, dtc.ranking) << "\n";
    std::cout << "revealed-preference ranking: "
              << ranking_to_string(parsed.instance, rp.ranking) << "\n";
    std::cout << "scores:";
    for (int c = 0; c < parsed.instance.num_colleges(); ++c)
      std::cout << " " << parsed.instance.colleges[c] << "=" << rp.score[c];
    std::cout << "\nkendall tau-b: " << fixed6(tau) << "\n";
  }
  return kExitOk;
}

int cmd_simulate(const SimConfig& cfg, const std::string& mu_name, const std::string& format) {
  SimReport report = run_experiment(cfg);
  if (format == "doc") {
    ojson doc;
    doc["n"] = cfg.n;
    doc["lambda"] = fixed6(cfg.lambda);
    doc["priority_noise"] = fixed6(cfg.priority_noise);
    doc["trials"] = cfg.trials;
    doc["seed"] = cfg.seed;
    doc["mu"] = mu_name;
    ojson dtc = ojson::array(), rp = ojson::array();
    for (double v : report.tau_dtc) dtc.push_back(fixed6(v));
    for (double v : report.tau_rp) rp.push_back(fixed6(v));
    doc["tau_dtc"] = std::move(dtc);
    doc["tau_rp"] = std::move(rp);
    doc["mean_tau_dtc"] = fixed6(report.mean_tau_dtc);
    doc["mean_tau_rp"] = fixed6(report.mean_tau_rp);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "simulate n=" << cfg.n << " lambda=" << fixed6(cfg.lambda)
              << " priority-noise=" << fixed6(cfg.priority_noise) << " trials=" << cfg.trials
              << " seed=" << cfg.seed << " mu=" << mu_name << "\n";
    for (size_t t = 0; t < report.tau_dtc.size(); ++t)
      std::cout << "trial " << (t + 1) << ": dtc-tau=" << fixed6(report.tau_dtc[t])
                << " rp-tau=" << fixed6(report.tau_rp[t]) << "\n";
    std::cout << "mean: dtc-tau=" << fixed6(report.mean_tau_dtc)
              << " rp-tau=" << fixed6(report.mean_tau_rp) << "\n";
  }
  return kExitOk;
}

int cmd_export_dot(const std::string& path) {
  ParsedInstance parsed = load_market(path);
  const Outcome& out = need_bijective(parsed);
  DtcResult dtc = dtc_rank(parsed.instance, out);
  std::cout << export_dot(parsed.instance, dtc);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tier rankings of colleges from assignments, by delayed trading cycles"};
  app.require_subcommand(1);

  std::string path, out_path, ranking_path;
  std::string format = "text";
  std::string policy = "all";
  std::string mu_name = "random";
  uint64_t seed = 0;
  int trials = 50, nmin = 2, nmax = 5;
  SimConfig sim;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "text or doc")
        ->check(CLI::IsMember({"text", "doc"}));
  };

  auto* rank = app.add_subcommand("rank", "tier ranking of the given market");
  rank->add_option("file", path, "market file")->required();
  rank->add_option("--out", out_path, "write the report to this file");
  add_format(rank);

  auto* ttc = app.add_subcommand("ttc", "run top trading cycles from the assignment");
  ttc->add_option("file", path, "market file")->required();
  ttc->add_option("--policy", policy, "all, lex or random")
      ->check(CLI::IsMember({"all", "lex", "random"}));
  ttc->add_option("--seed", seed, "seed for the random policy");
  add_format(ttc);

  auto* check = app.add_subcommand("check", "verify a ranking against the axioms");
  check->add_option("file", path, "market file")->required();
  check->add_option("--ranking", ranking_path, "ranking file")->required();
  add_format(check);

  auto* oracle = app.add_subcommand("oracle", "randomized desk-scale theorem checks");
  oracle->add_option("--trials", trials, "markets per size");
  oracle->add_option("--nmin", nmin, "smallest market size");
  oracle->add_option("--nmax", nmax, "largest market size");
  oracle->add_option("--seed", seed, "generator seed");
  oracle->add_option("--mu", mu_name, "random or stable assignments")
      ->check(CLI::IsMember({"random", "stable"}));
  add_format(oracle);

  auto* compare = app.add_subcommand("compare", "trading ranking vs revealed preference");
  compare->add_option("file", path, "market file with admissions")->required();
  add_format(compare);

  auto* simulate = app.add_subcommand("simulate", "synthetic quality-recovery experiment");
  simulate->add_option("--n", sim.n, "market size");
  simulate->add_option("--lambda", sim.lambda, "idiosyncratic preference noise");
  simulate->add_option("--priority-noise", sim.priority_noise, "priority noise");
  simulate->add_option("--trials", sim.trials, "number of trials");
  simulate->add_option("--seed", sim.seed, "generator seed");
  std::string sim_mu = "stable";
  simulate->add_option("--mu", sim_mu, "stable or random assignments")
      ->check(CLI::IsMember({"random", "stable"}));
  add_format(simulate);

  auto* dot = app.add_subcommand("export-dot", "cycle desire graph in graphviz form");
  dot->add_option("file", path, "market file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (app.got_subcommand(rank)) return cmd_rank(path, out_path, format);
    if (app.got_subcommand(ttc)) return cmd_ttc(path, policy, seed, format);
    if (app.got_subcommand(check)) return cmd_check(path, ranking_path, format);
    if (app.got_subcommand(oracle))
      return cmd_oracle(trials, nmin, nmax, seed, mu_name, format);
    if (app.got_subcommand(compare)) return cmd_compare(path, format);
    if (app.got_subcommand(simulate)) {
      sim.mu_mode = sim_mu == "stable" ? MuMode::Stable : MuMode::Random;
      return cmd_simulate(sim, sim_mu, format);
    }
    if (app.got_subcommand(dot)) return cmd_export_dot(path);
  } catch (const ValidationError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    for (const Issue& issue : e.report.issues)
      std::cerr << "  [" << issue.code << "] " << issue.subject << ": " << issue.message << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
  return kExitInputError;
}
