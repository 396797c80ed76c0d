#include "dtcrank/io.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"

namespace dtcrank {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

std::map<std::string, int> index_names(const json& arr, const char* what,
                                       ValidationReport& report) {
  std::map<std::string, int> ids;
  if (!arr.is_array() || arr.empty()) {
    report.add("bad-type", what, std::string(what) + " must be a nonempty array of names");
    return ids;
  }
  for (size_t k = 0; k < arr.size(); ++k) {
    if (!arr[k].is_string()) {
      report.add("bad-type", what, "names must be strings");
      return ids;
    }
    std::string name = arr[k].get<std::string>();
    if (!ids.emplace(name, static_cast<int>(k)).second)
      report.add("duplicate", std::string(what) + "." + name, "name repeats");
  }
  return ids;
}

// Resolve an array of names to ids, complaining per unknown or repeated one.
std::vector<int> resolve_list(const json& arr, const std::map<std::string, int>& ids,
                              const std::string& where, ValidationReport& report) {
  std::vector<int> out;
  if (!arr.is_array()) {
    report.add("bad-type", where, "expected an array of names");
    return out;
  }
  std::set<int> seen;
  for (const auto& v : arr) {
    if (!v.is_string()) {
      report.add("bad-type", where, "expected an array of names");
      return out;
    }
    auto it = ids.find(v.get<std::string>());
    if (it == ids.end()) {
      report.add("unknown-name", where, "unknown name " + v.get<std::string>());
      continue;
    }
    if (!seen.insert(it->second).second)
      report.add("duplicate", where, "name " + v.get<std::string>() + " repeats");
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

ParsedInstance parse_instance(const std::string& text) {
  ValidationReport report;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    report.add("syntax", "document", e.what());
    throw ValidationError("market file is not valid JSON", report);
  }
  if (!doc.is_object()) {
    report.add("bad-type", "document", "top level must be an object");
    throw ValidationError("market file must hold a JSON object", report);
  }

  static const std::set<std::string> known = {"students",   "colleges",   "prefs",
                                              "priorities", "capacities", "assignment",
                                              "admissions"};
  for (const auto& item : doc.items())
    if (!known.count(item.key()))
      report.add("unknown-key", item.key(), "unrecognized top-level key");
  for (const char* required : {"students", "colleges", "prefs"})
    if (!doc.contains(required))
      report.add("missing-key", required, std::string("required key ") + required + " absent");
  if (!report.ok()) throw ValidationError(report.issues.front().message, report);

  auto student_ids = index_names(doc["students"], "students", report);
  auto college_ids = index_names(doc["colleges"], "colleges", report);
  if (!report.ok()) throw ValidationError(report.issues.front().message, report);
  const int n = static_cast<int>(student_ids.size());
  const int m = static_cast<int>(college_ids.size());

  auto parse_map = [&](const json& obj, const std::map<std::string, int>& keys,
                       const char* where) {
    std::vector<const json*> values(keys.size(), nullptr);
    if (!obj.is_object()) {
      report.add("bad-type", where, "expected an object");
      return values;
    }
    for (const auto& item : obj.items()) {
      auto it = keys.find(item.key());
      if (it == keys.end())
        report.add("unknown-name", std::string(where) + "." + item.key(), "unknown name");
      else
        values[it->second] = &item.value();
    }
    return values;
  };

  std::vector<std::vector<CollegeId>> prefs(n);
  {
    auto values = parse_map(doc["prefs"], student_ids, "prefs");
    for (const auto& [name, i] : student_ids) {
      std::string where = "prefs." + name;
      if (!values[i]) {
        report.add("missing", where, "no preference list for " + name);
        continue;
      }
      prefs[i] = resolve_list(*values[i], college_ids, where, report);
      if (static_cast<int>(prefs[i].size()) != m)
        report.add("incomplete-list", where, "preference list must rank every college");
    }
  }

  std::vector<std::vector<StudentId>> priorities;
  if (doc.contains("priorities")) {
    priorities.resize(m);
    auto values = parse_map(doc["priorities"], college_ids, "priorities");
    for (const auto& [name, c] : college_ids) {
      std::string where = "priorities." + name;
      if (!values[c]) {
        report.add("missing", where, "no priority list for " + name);
        continue;
      }
      priorities[c] = resolve_list(*values[c], student_ids, where, report);
      if (static_cast<int>(priorities[c].size()) != n)
        report.add("incomplete-list", where, "priority list must rank every student");
    }
  }

  if (doc.contains("capacities")) {
    auto values = parse_map(doc["capacities"], college_ids, "capacities");
    for (const auto& [name, c] : college_ids) {
      if (!values[c]) continue;  // absent means one seat
      if (!values[c]->is_number_integer() || values[c]->get<int>() != 1)
        report.add("unsupported-capacity", "capacities." + name,
                   "only single-seat colleges are supported");
    }
  }

  std::vector<CollegeId> seats;
  if (doc.contains("assignment")) {
    auto values = parse_map(doc["assignment"], student_ids, "assignment");
    seats.assign(n, -1);
    for (const auto& [name, i] : student_ids) {
      std::string where = "assignment." + name;
      if (!values[i]) {
        report.add("missing", where, "every student needs a seat");
        continue;
      }
      if (!values[i]->is_string()) {
        report.add("bad-type", where, "expected a college name");
        continue;
      }
      auto it = college_ids.find(values[i]->get<std::string>());
      if (it == college_ids.end()) {
        report.add("unknown-name", where, "unknown college " + values[i]->get<std::string>());
        continue;
      }
      seats[i] = it->second;
    }
    std::vector<StudentId> holder(m, -1);
    for (const auto& [name, i] : student_ids) {
      if (seats[i] < 0) continue;
      if (holder[seats[i]] >= 0)
        report.add("duplicate-seat", "assignment." + name, "college assigned twice");
      holder[seats[i]] = i;
    }
  }

  std::vector<std::vector<CollegeId>> admitted;
  if (doc.contains("admissions")) {
    if (!doc.contains("assignment"))
      report.add("missing-key", "admissions", "admissions data needs an assignment");
    admitted.resize(n);
    auto values = parse_map(doc["admissions"], student_ids, "admissions");
    for (const auto& [name, i] : student_ids) {
      std::string where = "admissions." + name;
      if (!values[i]) {
        report.add("missing", where, "no admission set for " + name);
        continue;
      }
      admitted[i] = resolve_list(*values[i], college_ids, where, report);
      std::sort(admitted[i].begin(), admitted[i].end());
      if (!seats.empty() && seats[i] >= 0 &&
          !std::binary_search(admitted[i].begin(), admitted[i].end(), seats[i]))
        report.add("choice-outside-set", where, name + " attends a college not in their set");
    }
  }

  if (!report.ok()) throw ValidationError(report.issues.front().message, report);

  ParsedInstance parsed;
  std::vector<std::string> students(n), colleges(m);
  for (const auto& [name, i] : student_ids) students[i] = name;
  for (const auto& [name, c] : college_ids) colleges[c] = name;
  try {
    parsed.instance = Instance::make(std::move(students), std::move(colleges), std::move(prefs),
                                     std::move(priorities));
    if (!seats.empty()) parsed.outcome = Outcome::make(parsed.instance, seats);
  } catch (const ValidationError& e) {
    for (const Issue& issue : e.report.issues) report.issues.push_back(issue);
    throw ValidationError(e.what(), report);
  }
  if (!admitted.empty()) parsed.admissions = AdmissionsData{std::move(admitted)};
  return parsed;
}

Ranking parse_ranking(const std::string& text, const Instance& inst) {
  ValidationReport report;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    report.add("syntax", "document", e.what());
    throw ValidationError("ranking file is not valid JSON", report);
  }
  if (!doc.is_object() || !doc.contains("tiers") || !doc["tiers"].is_array()) {
    report.add("missing-key", "tiers", "ranking file needs a tiers array");
    throw ValidationError("ranking file needs a tiers array", report);
  }
  std::map<std::string, int> college_ids;
  for (int c = 0; c < inst.num_colleges(); ++c) college_ids[inst.colleges[c]] = c;

  std::vector<std::vector<CollegeId>> tiers;
  for (size_t t = 0; t < doc["tiers"].size(); ++t)
    tiers.push_back(resolve_list(doc["tiers"][t], college_ids,
                                 "tiers[" + std::to_string(t + 1) + "]", report));
  if (!report.ok()) throw ValidationError(report.issues.front().message, report);
  return make_ranking(inst, std::move(tiers));
}

std::string instance_to_json(const Instance& inst, const Outcome* out,
                             const AdmissionsData* adm) {
  ojson doc;
  doc["students"] = inst.students;
  doc["colleges"] = inst.colleges;
  ojson prefs;
  for (int i = 0; i < inst.num_students(); ++i) {
    ojson list = ojson::array();
    for (CollegeId c : inst.prefs[i]) list.push_back(inst.colleges[c]);
    prefs[inst.students[i]] = std::move(list);
  }
  doc["prefs"] = std::move(prefs);
  if (inst.has_priorities()) {
    ojson prio;
    for (int c = 0; c < inst.num_colleges(); ++c) {
      ojson list = ojson::array();
      for (StudentId i : inst.priorities[c]) list.push_back(inst.students[i]);
      prio[inst.colleges[c]] = std::move(list);
    }
    doc["priorities"] = std::move(prio);
  }
  if (out) {
    ojson assignment;
    for (int i = 0; i < inst.num_students(); ++i)
      assignment[inst.students[i]] = inst.colleges[out->student_college[i]];
    doc["assignment"] = std::move(assignment);
  }
  if (adm) {
    ojson admissions;
    for (int i = 0; i < inst.num_students(); ++i) {
      ojson list = ojson::array();
      for (CollegeId c : adm->admitted[i]) list.push_back(inst.colleges[c]);
      admissions[inst.students[i]] = std::move(list);
    }
    doc["admissions"] = std::move(admissions);
  }
  return doc.dump(2);
}

namespace {

ojson tiers_value(const Instance& inst, const Ranking& rank) {
  ojson tiers = ojson::array();
  for (const auto& tier : rank.tiers) {
    ojson t = ojson::array();
    for (CollegeId c : tier) t.push_back(inst.colleges[c]);
    tiers.push_back(std::move(t));
  }
  return tiers;
}

}  // namespace

std::string ranking_to_json(const Instance& inst, const Ranking& rank) {
  ojson doc;
  doc["tiers"] = tiers_value(inst, rank);
  return doc.dump(2);
}

std::string tiers_json_fragment(const Instance& inst, const Ranking& rank) {
  return tiers_value(inst, rank).dump();
}

std::string axiom_report_to_json(const Instance& inst, const AxiomReport& report) {
  ojson doc;
  doc["axiom"] = report.axiom;
  doc["holds"] = report.holds;
  ojson violations = ojson::array();
  for (const AxiomWitness& w : report.violations) {
    ojson v;
    v["rule"] = w.rule;
    if (w.student >= 0) v["student"] = inst.students[w.student];
    if (w.college >= 0) v["college"] = inst.colleges[w.college];
    if (w.tier > 0) v["tier"] = w.tier;
    if (w.count >= 0) v["count"] = w.count;
    violations.push_back(std::move(v));
  }
  doc["violations"] = std::move(violations);
  return doc.dump(2);
}

std::string tier_to_string(const Instance& inst, const std::vector<CollegeId>& tier) {
  std::string s;
  for (size_t k = 0; k < tier.size(); ++k) {
    if (k) s += ",";
    s += inst.colleges[tier[k]];
  }
  return s;
}

std::string ranking_to_string(const Instance& inst, const Ranking& rank) {
  std::string s;
  for (int t = 0; t < rank.num_tiers(); ++t) {
    if (t) s += " > ";
    s += "[" + tier_to_string(inst, rank.tiers[t]) + "]";
  }
  return s;
}

std::string export_dot(const Instance& inst, const DtcResult& dtc) {
  std::string out = "digraph cycles {\n  node [shape=box];\n";
  for (size_t x = 0; x < dtc.graph.cycles.size(); ++x) {
    int layer = dtc.layers.layer_of_cycle[x] + 1;
    out += "  n" + std::to_string(x) + " [label=\"(" +
           tier_to_string(inst, dtc.graph.cycles[x].colleges) + ")\\nM" + std::to_string(layer) +
           "\"";
    if (layer == 1) out += ", style=filled, fillcolor=lightsalmon";
    out += "];\n";
  }
  for (size_t x = 0; x < dtc.graph.cycles.size(); ++x)
    for (int y : dtc.graph.edges[x])
      out += "  n" + std::to_string(x) + " -> n" + std::to_string(y) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace dtcrank
