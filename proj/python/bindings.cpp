#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dtcrank/axioms.hpp"
#include "dtcrank/baseline.hpp"
#include "dtcrank/dtc.hpp"
#include "dtcrank/io.hpp"
#include "dtcrank/oracle.hpp"
#include "dtcrank/simgen.hpp"
#include "dtcrank/ttc.hpp"

namespace py = pybind11;
using namespace dtcrank;

PYBIND11_MODULE(_core, m) {
  m.doc() = "tier rankings of colleges from assignment data via delayed trading cycles";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

  py::class_<Instance>(m, "Instance")
      .def(py::init(&Instance::make), py::arg("students"), py::arg("colleges"), py::arg("prefs"),
           py::arg("priorities") = std::vector<std::vector<StudentId>>{})
      .def_readonly("students", &Instance::students)
      .def_readonly("colleges", &Instance::colleges)
      .def_readonly("prefs", &Instance::prefs)
      .def_readonly("priorities", &Instance::priorities)
      .def("num_students", &Instance::num_students)
      .def("num_colleges", &Instance::num_colleges)
      .def("prefers", &Instance::prefers);

  py::class_<Outcome>(m, "Outcome")
      .def(py::init(&Outcome::make), py::arg("instance"), py::arg("student_college"))
      .def_readonly("student_college", &Outcome::student_college)
      .def_readonly("college_student", &Outcome::college_student)
      .def("bijective", &Outcome::bijective);

  py::class_<Ranking>(m, "Ranking")
      .def_readonly("tiers", &Ranking::tiers)
      .def_readonly("tier_of", &Ranking::tier_of)
      .def("num_tiers", &Ranking::num_tiers)
      .def("__eq__", [](const Ranking& a, const Ranking& b) { return a == b; })
      .def("__repr__", [](const Ranking& r) {
        std::string s = "Ranking(";
        for (size_t t = 0; t < r.tiers.size(); ++t) {
          if (t) s += " > ";
          s += "{";
          for (size_t k = 0; k < r.tiers[t].size(); ++k)
            s += (k ? "," : "") + std::to_string(r.tiers[t][k]);
          s += "}";
        }
        return s + ")";
      });

  m.def("make_ranking", &make_ranking, py::arg("instance"), py::arg("tiers"));
  m.def("fav", &fav, py::arg("instance"), py::arg("student"), py::arg("subset"));

  py::class_<AxiomWitness>(m, "AxiomWitness")
      .def_readonly("rule", &AxiomWitness::rule)
      .def_readonly("student", &AxiomWitness::student)
      .def_readonly("college", &AxiomWitness::college)
      .def_readonly("tier", &AxiomWitness::tier)
      .def_readonly("count", &AxiomWitness::count);
  py::class_<AxiomReport>(m, "AxiomReport")
      .def_readonly("axiom", &AxiomReport::axiom)
      .def_readonly("holds", &AxiomReport::holds)
      .def_readonly("violations", &AxiomReport::violations);

  m.def("desires", &desires);
  m.def("strongly_desires", &strongly_desires);
  m.def("check_sad", &check_sad);
  m.def("check_wad", &check_wad, py::arg("instance"), py::arg("outcome"), py::arg("ranking"),
        py::arg("form") = 1);
  py::class_<DemandCount>(m, "DemandCount")
      .def_readonly("tier", &DemandCount::tier)
      .def_readonly("counts", &DemandCount::counts);
  m.def("demand_counts", &demand_counts);
  m.def("check_balanced", &check_balanced);
  m.def("check_justified", &check_justified);
  m.def("is_desirable", &is_desirable);

  py::enum_<CyclePolicy>(m, "CyclePolicy")
      .value("ALL_CYCLES", CyclePolicy::AllCycles)
      .value("LEX_MIN_ONE", CyclePolicy::LexMinOne)
      .value("RANDOM_ONE", CyclePolicy::RandomOne);
  py::class_<Cycle>(m, "Cycle")
      .def_readonly("colleges", &Cycle::colleges)
      .def_readonly("step", &Cycle::step);
  py::class_<TtcResult>(m, "TtcResult")
      .def_readonly("assignment", &TtcResult::assignment)
      .def_readonly("cycles", &TtcResult::cycles)
      .def_readonly("college_step", &TtcResult::college_step);
  m.def("ttc_run", &ttc_run, py::arg("instance"), py::arg("outcome"),
        py::arg("policy") = CyclePolicy::AllCycles, py::arg("seed") = 0);
  py::class_<TtcRankingCheck>(m, "TtcRankingCheck")
      .def_readonly("ok", &TtcRankingCheck::ok)
      .def_readonly("bad_tier", &TtcRankingCheck::bad_tier);
  m.def("is_ttc_ranking", &is_ttc_ranking);
  m.def("pareto_efficient", &pareto_efficient);

  py::class_<IpCheck>(m, "IpCheck")
      .def_readonly("ok", &IpCheck::ok)
      .def_readonly("certificate", &IpCheck::certificate);
  py::class_<IpSet>(m, "IpSet")
      .def_readonly("colleges", &IpSet::colleges)
      .def_readonly("certificate", &IpSet::certificate);
  m.def("is_ip_set", &is_ip_set);
  m.def("max_ip_set_bruteforce", &max_ip_set_bruteforce, py::arg("instance"), py::arg("outcome"),
        py::arg("max_colleges") = 12);
  py::class_<CycleGraph>(m, "CycleGraph")
      .def_readonly("cycles", &CycleGraph::cycles)
      .def_readonly("edges", &CycleGraph::edges)
      .def_readonly("college_cycle", &CycleGraph::college_cycle);
  m.def("build_cycle_graph", &build_cycle_graph);
  m.def("max_ip_set_fast", &max_ip_set_fast);
  py::class_<DtcLayers>(m, "DtcLayers")
      .def_readonly("layers", &DtcLayers::layers)
      .def_readonly("layer_of_cycle", &DtcLayers::layer_of_cycle);
  py::class_<DtcResult>(m, "DtcResult")
      .def_readonly("ttc", &DtcResult::ttc)
      .def_readonly("graph", &DtcResult::graph)
      .def_readonly("layers", &DtcResult::layers)
      .def_readonly("ranking", &DtcResult::ranking);
  m.def("dtc_rank", &dtc_rank);

  py::class_<EnumerationBudget>(m, "EnumerationBudget")
      .def(py::init<>())
      .def_readwrite("max_colleges", &EnumerationBudget::max_colleges)
      .def_readwrite("max_colleges_ttc", &EnumerationBudget::max_colleges_ttc)
      .def_readwrite("max_count", &EnumerationBudget::max_count);
  m.def("enumerate_rankings", &enumerate_rankings, py::arg("instance"),
        py::arg("budget") = EnumerationBudget{});
  m.def("find_desirable", &find_desirable, py::arg("instance"), py::arg("outcome"),
        py::arg("budget") = EnumerationBudget{});
  m.def("enumerate_ttc_rankings", &enumerate_ttc_rankings, py::arg("instance"),
        py::arg("outcome"), py::arg("budget") = EnumerationBudget{});
  py::class_<EquivalenceCheck>(m, "EquivalenceCheck")
      .def_readonly("ok", &EquivalenceCheck::ok)
      .def_readonly("only_axioms", &EquivalenceCheck::only_axioms)
      .def_readonly("only_ttc", &EquivalenceCheck::only_ttc);
  m.def("check_theorem2", &check_theorem2, py::arg("instance"), py::arg("outcome"),
        py::arg("budget") = EnumerationBudget{});
  py::class_<SadSearch>(m, "SadSearch")
      .def_readonly("exists", &SadSearch::exists)
      .def_readonly("witness", &SadSearch::witness);
  m.def("exists_sad_ranking", &exists_sad_ranking, py::arg("instance"), py::arg("outcome"),
        py::arg("budget") = EnumerationBudget{});

  py::enum_<MuMode>(m, "MuMode")
      .value("RANDOM", MuMode::Random)
      .value("STABLE", MuMode::Stable);
  py::class_<Rng>(m, "Rng")
      .def(py::init<uint64_t>(), py::arg("seed"))
      .def_static("for_trial", &Rng::for_trial);
  py::class_<RandomMarket>(m, "RandomMarket")
      .def_readonly("instance", &RandomMarket::instance)
      .def_readonly("outcome", &RandomMarket::outcome);
  m.def("random_market", &random_market, py::arg("n"), py::arg("rng"),
        py::arg("mu") = MuMode::Random);

  m.def("deferred_acceptance", &deferred_acceptance);
  py::class_<StabilityCheck>(m, "StabilityCheck")
      .def_readonly("stable", &StabilityCheck::stable)
      .def_readonly("blocking", &StabilityCheck::blocking);
  m.def("check_stable", &check_stable);
  py::class_<AdmissionsData>(m, "AdmissionsData")
      .def(py::init([](std::vector<std::vector<CollegeId>> admitted) {
             return AdmissionsData{std::move(admitted)};
           }),
           py::arg("admitted"))
      .def_readonly("admitted", &AdmissionsData::admitted);
  py::class_<ScoredRanking>(m, "ScoredRanking")
      .def_readonly("score", &ScoredRanking::score)
      .def_readonly("ranking", &ScoredRanking::ranking);
  m.def("rp_ranking", &rp_ranking);
  m.def("kendall_tau_b", &kendall_tau_b);

  py::class_<SimConfig>(m, "SimConfig")
      .def(py::init<>())
      .def_readwrite("n", &SimConfig::n)
      .def_readwrite("lambda_", &SimConfig::lambda)
      .def_readwrite("priority_noise", &SimConfig::priority_noise)
      .def_readwrite("trials", &SimConfig::trials)
      .def_readwrite("seed", &SimConfig::seed)
      .def_readwrite("mu_mode", &SimConfig::mu_mode);
  py::class_<TrialData>(m, "TrialData")
      .def_readonly("instance", &TrialData::instance)
      .def_readonly("outcome", &TrialData::outcome)
      .def_readonly("truth", &TrialData::truth)
      .def_readonly("admissions", &TrialData::admissions);
  m.def("gen_instance", &gen_instance);
  py::class_<SimReport>(m, "SimReport")
      .def_readonly("config", &SimReport::config)
      .def_readonly("tau_dtc", &SimReport::tau_dtc)
      .def_readonly("tau_rp", &SimReport::tau_rp)
      .def_readonly("mean_tau_dtc", &SimReport::mean_tau_dtc)
      .def_readonly("mean_tau_rp", &SimReport::mean_tau_rp);
  m.def("run_experiment", &run_experiment);

  py::class_<ParsedInstance>(m, "ParsedInstance")
      .def_readonly("instance", &ParsedInstance::instance)
      .def_readonly("outcome", &ParsedInstance::outcome)
      .def_readonly("admissions", &ParsedInstance::admissions);
  m.def("parse_instance", &parse_instance);
  m.def("parse_ranking", &parse_ranking);
  m.def("instance_to_json",
        [](const Instance& inst, const std::optional<Outcome>& out) {
          return instance_to_json(inst, out ? &*out : nullptr);
        },
        py::arg("instance"), py::arg("outcome") = std::nullopt);
  m.def("ranking_to_json", &ranking_to_json);
  m.def("export_dot", &export_dot);
}
