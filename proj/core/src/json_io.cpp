#include "cayley/json_io.hpp"

#include <json.hpp>

namespace cayley {

namespace {

using nlohmann::json;

json rule_json(const WeakPeriodicRule& rule) {
  json table = json::array();
  for (const auto& [p, v] : rule.table_pairs())
    table.push_back({{"parent", p}, {"vertex", v}, {"spin", rule.spin(p, v)}});
  return json{
      {"subgroup",
       {{"kind", rule.subgroup().kind == SubgroupKind::IndexTwo ? "index2" : "index4"},
        {"A", rule.subgroup().members}}},
      {"k", rule.order()},
      {"table", table},
  };
}

json coupling_json(const Coupling& j) {
  return json{{"j1", j.j1.str()}, {"j2", j.j2.str()}};
}

json report_json(const VerificationReport& r) {
  json classes = json::array();
  for (const auto& [cls, count] : r.classes_seen)
    classes.push_back({{"class", cls}, {"count", count}});
  json coverage = json::array();
  for (const auto& t : r.case_coverage)
    coverage.push_back({{"parent", t.parent_class},
                        {"center", t.center_class},
                        {"parent_spin", t.parent_spin}});
  json out{
      {"is_ground_state", r.is_ground_state},
      {"classes_seen", classes},
      {"case_coverage", coverage},
      {"radius_used", r.radius_used},
      {"witness", nullptr},
  };
  if (r.witness)
    out["witness"] = json{{"center", r.witness->center.str()},
                          {"class", r.witness->ball_class},
                          {"energy", r.witness->energy.str()}};
  return out;
}

json theorem_json(const TheoremReport& r) {
  return json{
      {"parameters",
       {{"k", r.order}, {"A", r.a}, {"j1", r.j.j1.str()}, {"j2", r.j.j2.str()},
        {"radius", r.radius}}},
      {"predicted", r.predicted},
      {"observed", r.observed},
      {"agrees", r.agrees},
      {"strictly_weak_periodic_members", r.strictly_weak_periodic_members},
      {"ground_states", r.ground_states},
  };
}

json census_json(const CensusTable& t) {
  return json{
      {"k", t.order},
      {"total", t.total},
      {"counts", t.counts},
      {"expected", t.expected},
      {"counts_match", t.counts_match},
      {"energies_match", t.energies_match},
  };
}

json region_json(const RegionLabel& label) {
  json detail{{"type", to_string(label.detail)}};
  if (label.detail == RegionDetail::Interior) detail["m"] = label.detail_index;
  if (label.detail == RegionDetail::BoundarySegment) detail["i"] = label.detail_index;
  return json{{"members", label.members}, {"detail", detail}};
}

json descriptor_json(const GroundStateDescriptor& d) {
  json out{{"case", to_string(d.kind)}};
  if (d.kind == GroundStateCase::Pair || d.kind == GroundStateCase::BoundaryFamily)
    out["i"] = d.index;
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string rule_to_json(const WeakPeriodicRule& rule) { return dump(rule_json(rule)); }

WeakPeriodicRule rule_from_json(const std::string& text) {
  json j = json::parse(text);
  std::string kind = j.at("subgroup").at("kind").get<std::string>();
  std::vector<int> a = j.at("subgroup").at("A").get<std::vector<int>>();
  int k = j.at("k").get<int>();
  bool index2 = kind == "index2";
  if (!index2 && kind != "index4")
    throw std::invalid_argument("rule_from_json: kind must be index2 or index4");

  auto probe = index2 ? WeakPeriodicRule::index2(a, k, {1, 1, 1, 1})
                      : WeakPeriodicRule::index4(a, k, {1, 1, 1, 1, 1, 1, 1, 1});
  auto pairs = probe.table_pairs();
  std::vector<int> spins(pairs.size(), 0);
  for (const auto& row : j.at("table")) {
    int p = row.at("parent").get<int>();
    int v = row.at("vertex").get<int>();
    int s = row.at("spin").get<int>();
    bool matched = false;
    for (std::size_t q = 0; q < pairs.size(); ++q)
      if (pairs[q] == std::make_pair(p, v)) {
        spins[q] = s;
        matched = true;
      }
    if (!matched)
      throw std::invalid_argument("rule_from_json: table pair not realizable by an edge");
  }
  for (int s : spins)
    if (s != 1 && s != -1)
      throw std::invalid_argument("rule_from_json: table must cover every class pair");

  if (index2) {
    std::array<int, 4> arr;
    std::copy(spins.begin(), spins.end(), arr.begin());
    return WeakPeriodicRule::index2(a, k, arr);
  }
  std::array<int, 8> arr;
  std::copy(spins.begin(), spins.end(), arr.begin());
  return WeakPeriodicRule::index4(a, k, arr);
}

std::string report_to_json(const VerificationReport& report) {
  return dump(report_json(report));
}

std::string theorem_report_to_json(const TheoremReport& report) {
  return dump(theorem_json(report));
}

std::string census_to_json(const CensusTable& table) { return dump(census_json(table)); }

std::string region_report_to_json(int order, const Coupling& j, const RegionLabel& label,
                                  const GroundStateDescriptor& descriptor) {
  return dump(json{
      {"k", order},
      {"coupling", coupling_json(j)},
      {"region", region_json(label)},
      {"ground_states", descriptor_json(descriptor)},
  });
}

std::string enumeration_to_json(const std::vector<EnumeratedGroundState>& results) {
  json arr = json::array();
  for (const auto& g : results)
    arr.push_back({{"label", g.label},
                   {"periodicity", to_string(g.periodicity)},
                   {"rule", rule_json(g.rule)},
                   {"report", report_json(g.report)}});
  return dump(arr);
}

std::string check_suite_to_json(const CensusTable& census,
                                const std::vector<TheoremReport>& theorem2,
                                const std::vector<TheoremReport>& theorem3) {
  bool all = census.counts_match && census.energies_match;
  json t2 = json::array(), t3 = json::array();
  for (const auto& r : theorem2) {
    all = all && r.agrees;
    t2.push_back(theorem_json(r));
  }
  for (const auto& r : theorem3) {
    all = all && r.agrees;
    t3.push_back(theorem_json(r));
  }
  return dump(json{
      {"census", census_json(census)},
      {"theorem2", t2},
      {"theorem3", t3},
      {"all_agree", all},
  });
}

std::string verification_to_json(const WeakPeriodicRule& rule,
                                 const VerificationReport& report) {
  return dump(json{
      {"label", rule_label(rule)},
      {"periodicity", to_string(classify_periodicity(rule))},
      {"rule", rule_json(rule)},
      {"report", report_json(report)},
  });
}

}  // namespace cayley
