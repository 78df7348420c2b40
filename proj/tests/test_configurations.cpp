#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cayley/configurations.hpp"
#include "cayley/group.hpp"

using namespace cayley;

namespace {

GroupWord w(int k, std::initializer_list<int> letters) {
  std::vector<std::uint8_t> ls;
  for (int l : letters) ls.push_back(static_cast<std::uint8_t>(l));
  return GroupWord(k, std::move(ls));
}

WeakPeriodicRule by_label(const std::vector<int>& a, int k, const std::string& name) {
  for (const auto& rule : catalog_index2(a, k))
    if (rule_label(rule) == name) return rule;
  throw std::runtime_error("no such rule: " + name);
}

}  // namespace

TEST_CASE("evaluate follows the (parent-class, vertex-class) table") {
  // phi7 collapses to a function of the vertex class: -1 on H_0, +1 on H_1
  SpinConfigView phi7(by_label({1}, 1, "phi7"));
  CHECK(evaluate(phi7, w(1, {1, 2})) == +1);  // w_1 odd -> H_1

  SpinConfigView phi8(by_label({1}, 1, "phi8"));
  CHECK(evaluate(phi8, w(1, {1})) == -1);  // parent e in H_0, x in H_1

  SpinConfigView all_plus(by_label({1}, 1, "phi1"));
  for (const auto& x : enumerate_ball(1, 4)) CHECK(evaluate(all_plus, x) == +1);

  CHECK_THROWS_AS(evaluate(phi8, GroupWord(2)), std::invalid_argument);
}

TEST_CASE("index-2 catalog: sixteen distinct rules closed under sign flip") {
  auto rules = catalog_index2({1, 2}, 2);
  REQUIRE(rules.size() == 16);
  std::set<std::vector<int>> tables;
  for (const auto& rule : rules) {
    std::vector<int> t;
    for (const auto& [p, v] : rule.table_pairs()) t.push_back(rule.spin(p, v));
    tables.insert(t);
  }
  CHECK(tables.size() == 16);  // no duplicates
  for (int i = 0; i < 8; ++i) {
    CHECK(rule_label(rules[i]) == "phi" + std::to_string(i + 1));
    CHECK(rule_label(rules[i + 8]) == "-phi" + std::to_string(i + 1));
    CHECK(rules[i + 8] == negate(rules[i]));
  }
  // phi1 all +1; phi8 is (+1,-1,-1,+1) over (0,0),(0,1),(1,0),(1,1)
  for (const auto& [p, v] : rules[0].table_pairs()) CHECK(rules[0].spin(p, v) == 1);
  CHECK(rules[7].spin(0, 0) == +1);
  CHECK(rules[7].spin(0, 1) == -1);
  CHECK(rules[7].spin(1, 0) == -1);
  CHECK(rules[7].spin(1, 1) == +1);
}

TEST_CASE("named index-4 tables match their displays") {
  auto p = phi_prime({1, 2}, 3);
  auto pp = phi_double_prime({1, 2}, 3);
  CHECK(p.spin(1, 3) == +1);
  CHECK(p.spin(3, 1) == +1);
  CHECK(p.spin(0, 3) == -1);
  CHECK(p.spin(3, 0) == -1);
  CHECK(p.spin(2, 1) == -1);
  CHECK(p.spin(1, 2) == -1);
  CHECK(p.spin(0, 2) == +1);
  CHECK(p.spin(2, 0) == +1);
  CHECK(pp.spin(1, 3) == -1);
  CHECK(pp.spin(3, 1) == +1);
  CHECK(pp.spin(0, 3) == +1);
  CHECK(pp.spin(3, 0) == -1);
  CHECK(pp.spin(2, 1) == -1);
  CHECK(pp.spin(1, 2) == +1);
  CHECK(pp.spin(0, 2) == -1);
  CHECK(pp.spin(2, 0) == +1);
  CHECK(negate(p).spin(1, 3) == -1);
  CHECK(rule_label(p) == "phi'");
  CHECK(rule_label(negate(p)) == "-phi'");
  CHECK(rule_label(pp) == "phi''");
  // index-4 tables never cover same-length-parity pairs
  CHECK_FALSE(p.has_entry(0, 0));
  CHECK_FALSE(p.has_entry(2, 3));
  CHECK_THROWS_AS(phi_prime({1, 2, 3, 4}, 3), std::invalid_argument);
}

TEST_CASE("index-4 catalog covers all 256 sign tables") {
  auto rules = catalog_index4({1}, 2);
  REQUIRE(rules.size() == 256);
  int prime_hits = 0;
  for (const auto& rule : rules) {
    auto label = rule_label(rule);
    if (label == "phi'" || label == "-phi'" || label == "phi''" || label == "-phi''")
      ++prime_hits;
  }
  CHECK(prime_hits == 4);
}

TEST_CASE("global negation flips every evaluation") {
  for (const auto& rule : catalog_index2({1}, 2)) {
    SpinConfigView view(rule), nview(negate(rule));
    for (const auto& x : enumerate_ball(2, 5))
      CHECK(evaluate(nview, x) == -evaluate(view, x));
  }
  auto rule4 = phi_double_prime({2}, 2);
  SpinConfigView view(rule4), nview(negate(rule4));
  for (const auto& x : enumerate_ball(2, 5))
    CHECK(evaluate(nview, x) == -evaluate(view, x));
}

TEST_CASE("index-2 evaluation depends only on the class pair") {
  for (const auto& rule : catalog_index2({1, 3}, 2)) {
    SpinConfigView view(rule);
    std::map<std::pair<int, int>, int> seen;
    for (const auto& x : enumerate_ball(2, 6)) {
      if (x.is_identity()) continue;
      auto key = std::make_pair(coset_class(parent(x), rule.subgroup()),
                                coset_class(x, rule.subgroup()));
      int s = evaluate(view, x);
      auto [it, inserted] = seen.emplace(key, s);
      if (!inserted) CHECK(it->second == s);
    }
  }
}

TEST_CASE("phi7 evaluation collapses to the vertex class") {
  auto phi7 = by_label({1, 2}, 3, "phi7");
  SpinConfigView view(phi7);
  for (const auto& x : enumerate_ball(3, 5)) {
    int cls = coset_class(x, phi7.subgroup());
    CHECK(evaluate(view, x) == (cls == 0 ? -1 : +1));
  }
}

TEST_CASE("periodicity classification") {
  CHECK(classify_periodicity(by_label({1}, 2, "phi1")) ==
        PeriodicityVerdict::TranslationInvariant);
  CHECK(classify_periodicity(by_label({1}, 2, "-phi1")) ==
        PeriodicityVerdict::TranslationInvariant);
  CHECK(classify_periodicity(by_label({1}, 2, "phi7")) ==
        PeriodicityVerdict::SubgroupPeriodic);
  CHECK(classify_periodicity(by_label({1}, 2, "phi8")) ==
        PeriodicityVerdict::StrictlyWeakPeriodic);
  CHECK(classify_periodicity(by_label({1}, 2, "phi2")) ==
        PeriodicityVerdict::StrictlyWeakPeriodic);
  CHECK(classify_periodicity(phi_prime({1, 2}, 3)) ==
        PeriodicityVerdict::StrictlyWeakPeriodic);

  // |A| = k+1: only the cross-class pairs are realizable, so tables that
  // differ from a constant only on same-class pairs denote translation-
  // invariant configurations, and checkerboard-valued ones periodic
  CHECK(classify_periodicity(by_label({1, 2}, 1, "phi2")) ==
        PeriodicityVerdict::TranslationInvariant);
  CHECK(classify_periodicity(by_label({1, 2}, 1, "phi4")) ==
        PeriodicityVerdict::SubgroupPeriodic);
  CHECK(classify_periodicity(by_label({1, 2}, 1, "phi8")) ==
        PeriodicityVerdict::TranslationInvariant);
}

TEST_CASE("periodic reference configurations") {
  auto sigma0 = periodic_sigma(0, 3);
  for (const auto& [p, v] : sigma0.table_pairs()) CHECK(sigma0.spin(p, v) == +1);

  auto sigma2 = periodic_sigma(2, 3);
  CHECK(sigma2.subgroup().members == std::vector<int>{1, 2});
  CHECK(rule_label(sigma2) == "phi7");

  // i = k+1 is the checkerboard by |x| parity
  auto top = periodic_sigma(3, 2);
  SpinConfigView view(top);
  for (const auto& x : enumerate_ball(2, 5))
    CHECK(evaluate(view, x) == (x.length() % 2 == 0 ? -1 : +1));

  CHECK_THROWS_AS(periodic_sigma(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(periodic_sigma(-1, 2), std::invalid_argument);
}

TEST_CASE("root conventions make evaluation total") {
  SpinConfigView v2(by_label({1}, 2, "phi8"));
  CHECK(v2.root_parent_class == 0);
  CHECK(evaluate(v2, GroupWord(2)) == +1);  // table (0,0)
  SpinConfigView v4(phi_prime({1}, 2));
  CHECK(v4.root_parent_class == 2);
  CHECK(evaluate(v4, GroupWord(2)) == +1);  // table (2,0)
}
