#include "cayley/configurations.hpp"

#include <algorithm>
#include <stdexcept>

namespace cayley {

namespace {

constexpr std::array<std::pair<int, int>, 4> kIndex2Pairs = {
    {{0, 0}, {0, 1}, {1, 0}, {1, 1}}};

// Eq.-order of the index-four table: edges always join an even-length
// class {0,1} with an odd-length class {2,3}.
constexpr std::array<std::pair<int, int>, 8> kIndex4Pairs = {
    {{1, 3}, {3, 1}, {0, 3}, {3, 0}, {2, 1}, {1, 2}, {0, 2}, {2, 0}}};

constexpr std::array<std::array<int, 4>, 8> kIndex2Catalog = {{
    {+1, +1, +1, +1},  // phi1
    {-1, +1, +1, +1},  // phi2
    {+1, -1, +1, +1},  // phi3
    {+1, +1, -1, +1},  // phi4
    {+1, +1, +1, -1},  // phi5
    {-1, -1, +1, +1},  // phi6
    {-1, +1, -1, +1},  // phi7
    {+1, -1, -1, +1},  // phi8
}};

constexpr std::array<int, 8> kPhiPrime = {+1, +1, -1, -1, -1, -1, +1, +1};
constexpr std::array<int, 8> kPhiDoublePrime = {-1, +1, +1, -1, -1, +1, -1, +1};

int spin_from(int v) {
  if (v != 1 && v != -1)
    throw std::invalid_argument("WeakPeriodicRule: spins must be +1 or -1");
  return v;
}

}  // namespace

std::string to_string(PeriodicityVerdict v) {
  switch (v) {
    case PeriodicityVerdict::TranslationInvariant: return "translation_invariant";
    case PeriodicityVerdict::SubgroupPeriodic: return "subgroup_periodic";
    case PeriodicityVerdict::StrictlyWeakPeriodic: return "strictly_weak_periodic";
  }
  throw std::logic_error("unreachable");
}

WeakPeriodicRule WeakPeriodicRule::index2(std::vector<int> a, int order,
                                          const std::array<int, 4>& spins) {
  auto spec = SubgroupSpec::index_two(std::move(a));
  spec.validate(order);
  WeakPeriodicRule rule(std::move(spec), order);
  for (std::size_t p = 0; p < kIndex2Pairs.size(); ++p)
    rule.table_[kIndex2Pairs[p].first][kIndex2Pairs[p].second] = spin_from(spins[p]);
  return rule;
}

WeakPeriodicRule WeakPeriodicRule::index4(std::vector<int> a, int order,
                                          const std::array<int, 8>& spins) {
  auto spec = SubgroupSpec::index_four(std::move(a));
  spec.validate(order);
  WeakPeriodicRule rule(std::move(spec), order);
  for (std::size_t p = 0; p < kIndex4Pairs.size(); ++p)
    rule.table_[kIndex4Pairs[p].first][kIndex4Pairs[p].second] = spin_from(spins[p]);
  return rule;
}

int WeakPeriodicRule::spin(CosetClass parent_class, CosetClass vertex_class) const {
  int n = class_count(subgroup_);
  if (parent_class < 0 || parent_class >= n || vertex_class < 0 || vertex_class >= n)
    throw std::invalid_argument("WeakPeriodicRule::spin: class out of range");
  int v = table_[parent_class][vertex_class];
  if (v == 0)
    throw std::invalid_argument("WeakPeriodicRule::spin: pair not in table");
  return v;
}

bool WeakPeriodicRule::has_entry(CosetClass p, CosetClass v) const {
  return p >= 0 && p < 4 && v >= 0 && v < 4 && table_[p][v] != 0;
}

std::vector<std::pair<int, int>> WeakPeriodicRule::table_pairs() const {
  if (subgroup_.kind == SubgroupKind::IndexTwo)
    return {kIndex2Pairs.begin(), kIndex2Pairs.end()};
  return {kIndex4Pairs.begin(), kIndex4Pairs.end()};
}

std::vector<std::pair<int, int>> WeakPeriodicRule::realizable_pairs() const {
  int i = set_size();
  if (subgroup_.kind == SubgroupKind::IndexTwo) {
    std::vector<std::pair<int, int>> out = {{0, 1}, {1, 0}};
    if (i <= order_) {
      out.push_back({0, 0});
      out.push_back({1, 1});
    }
    return out;
  }
  return {kIndex4Pairs.begin(), kIndex4Pairs.end()};
}

WeakPeriodicRule negate(const WeakPeriodicRule& rule) {
  WeakPeriodicRule out = rule;
  for (auto& row : out.table_)
    for (auto& v : row) v = -v;
  return out;
}

std::vector<WeakPeriodicRule> catalog_index2(const std::vector<int>& a, int order) {
  std::vector<WeakPeriodicRule> out;
  out.reserve(16);
  for (const auto& spins : kIndex2Catalog)
    out.push_back(WeakPeriodicRule::index2(a, order, spins));
  for (int i = 0; i < 8; ++i) out.push_back(negate(out[i]));
  return out;
}

std::vector<WeakPeriodicRule> catalog_index4(const std::vector<int>& a, int order) {
  std::vector<WeakPeriodicRule> out;
  out.reserve(256);
  for (int mask = 0; mask < 256; ++mask) {
    std::array<int, 8> spins;
    for (int b = 0; b < 8; ++b) spins[b] = (mask >> b) & 1 ? -1 : +1;
    out.push_back(WeakPeriodicRule::index4(a, order, spins));
  }
  return out;
}

WeakPeriodicRule phi_prime(const std::vector<int>& a, int order) {
  return WeakPeriodicRule::index4(a, order, kPhiPrime);
}

WeakPeriodicRule phi_double_prime(const std::vector<int>& a, int order) {
  return WeakPeriodicRule::index4(a, order, kPhiDoublePrime);
}

WeakPeriodicRule periodic_sigma(int i, int order) {
  if (i < 0 || i > order + 1)
    throw std::invalid_argument("periodic_sigma: i must lie in 0..k+1");
  if (i == 0) return WeakPeriodicRule::index2({1}, order, kIndex2Catalog[0]);
  std::vector<int> a(i);
  for (int j = 0; j < i; ++j) a[j] = j + 1;
  return WeakPeriodicRule::index2(std::move(a), order, kIndex2Catalog[6]);  // phi7
}

std::string rule_label(const WeakPeriodicRule& rule) {
  if (rule.subgroup().kind == SubgroupKind::IndexTwo) {
    for (int p = 0; p < 8; ++p) {
      bool plain = true, negated = true;
      for (std::size_t q = 0; q < kIndex2Pairs.size(); ++q) {
        int v = rule.spin(kIndex2Pairs[q].first, kIndex2Pairs[q].second);
        plain = plain && v == kIndex2Catalog[p][q];
        negated = negated && v == -kIndex2Catalog[p][q];
      }
      if (plain) return "phi" + std::to_string(p + 1);
      if (negated) return "-phi" + std::to_string(p + 1);
    }
    throw std::logic_error("rule_label: index-2 table outside the catalog");
  }
  std::array<int, 8> spins;
  for (std::size_t q = 0; q < kIndex4Pairs.size(); ++q)
    spins[q] = rule.spin(kIndex4Pairs[q].first, kIndex4Pairs[q].second);
  if (spins == kPhiPrime) return "phi'";
  if (spins == kPhiDoublePrime) return "phi''";
  std::array<int, 8> flipped;
  for (int q = 0; q < 8; ++q) flipped[q] = -spins[q];
  if (flipped == kPhiPrime) return "-phi'";
  if (flipped == kPhiDoublePrime) return "-phi''";
  std::string s = "idx4:";
  for (int v : spins) s += v > 0 ? '+' : '-';
  return s;
}

PeriodicityVerdict classify_periodicity(const WeakPeriodicRule& rule) {
  auto pairs = rule.realizable_pairs();
  bool all_equal = true;
  int first = rule.spin(pairs[0].first, pairs[0].second);
  for (const auto& [p, v] : pairs)
    all_equal = all_equal && rule.spin(p, v) == first;
  if (all_equal) return PeriodicityVerdict::TranslationInvariant;

  std::array<int, 4> per_vertex{};  // 0 unset, else the common spin seen so far
  bool vertex_only = true;
  for (const auto& [p, v] : pairs) {
    int s = rule.spin(p, v);
    if (per_vertex[v] == 0)
      per_vertex[v] = s;
    else if (per_vertex[v] != s)
      vertex_only = false;
  }
  if (vertex_only) return PeriodicityVerdict::SubgroupPeriodic;
  return PeriodicityVerdict::StrictlyWeakPeriodic;
}

int evaluate(const SpinConfigView& view, const GroupWord& x) {
  if (x.order() != view.rule.order())
    throw std::invalid_argument("evaluate: word order does not match rule");
  CosetClass vertex = coset_class(x, view.rule.subgroup());
  CosetClass par = x.is_identity()
                       ? view.root_parent_class
                       : coset_class(parent(x), view.rule.subgroup());
  return view.rule.spin(par, vertex);
}

}  // namespace cayley
