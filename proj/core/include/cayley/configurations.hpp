#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "cayley/group.hpp"

namespace cayley {

/// How much symmetry a weak-periodic rule actually has, judged on the
/// class pairs realizable by a tree edge for the rule's (A, k):
///   TranslationInvariant - every realizable entry equal;
///   SubgroupPeriodic     - realizable entries depend on the vertex class only;
///   StrictlyWeakPeriodic - genuine dependence on the parent class.
enum class PeriodicityVerdict {
  TranslationInvariant,
  SubgroupPeriodic,
  StrictlyWeakPeriodic,
};

std::string to_string(PeriodicityVerdict v);

/// A finite sign table indexed by (parent-class, vertex-class) pairs.
/// Together with a subgroup spec and the tree order it defines a full
/// spin configuration: sigma(x) = table[class(parent(x)), class(x)].
class WeakPeriodicRule {
 public:
  /// Index-two rule; spins given in pair order (0,0),(0,1),(1,0),(1,1).
  static WeakPeriodicRule index2(std::vector<int> a, int order,
                                 const std::array<int, 4>& spins);

  /// Index-four rule; spins given in the pair order
  /// (1,3),(3,1),(0,3),(3,0),(2,1),(1,2),(0,2),(2,0).
  static WeakPeriodicRule index4(std::vector<int> a, int order,
                                 const std::array<int, 8>& spins);

  const SubgroupSpec& subgroup() const { return subgroup_; }
  int order() const { return order_; }
  int set_size() const { return static_cast<int>(subgroup_.members.size()); }

  /// Spin for a vertex in class `vertex` whose parent is in class `parent`.
  int spin(CosetClass parent_class, CosetClass vertex_class) const;
  bool has_entry(CosetClass parent_class, CosetClass vertex_class) const;

  /// All table pairs, in the canonical order above.
  std::vector<std::pair<int, int>> table_pairs() const;

  /// Pairs that an actual tree edge can realize for this (A, k). For
  /// index two the same-class pairs (0,0),(1,1) drop out at |A| = k+1;
  /// for index four (A proper) all eight pairs remain.
  std::vector<std::pair<int, int>> realizable_pairs() const;

  friend bool operator==(const WeakPeriodicRule& a, const WeakPeriodicRule& b) {
    return a.subgroup_ == b.subgroup_ && a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  WeakPeriodicRule(SubgroupSpec s, int order) : subgroup_(std::move(s)), order_(order) {}

  friend WeakPeriodicRule negate(const WeakPeriodicRule& rule);

  SubgroupSpec subgroup_;
  int order_;
  std::array<std::array<int, 4>, 4> table_{};  // 0 = unset
};

WeakPeriodicRule negate(const WeakPeriodicRule& rule);

/// Canonical name: "phi1".."phi8" and negations for index two,
/// "phi'"/"phi''" and negations for the named index-four rules, and a
/// sign-vector name "idx4:+-..-" for the remaining index-four tables.
std::string rule_label(const WeakPeriodicRule& rule);

/// The sixteen H_A-weak periodic configurations: phi_1..phi_8 and their
/// global negations, in that order.
std::vector<WeakPeriodicRule> catalog_index2(const std::vector<int>& a, int order);

/// All 256 index-four sign tables, ordered by sign mask.
std::vector<WeakPeriodicRule> catalog_index4(const std::vector<int>& a, int order);

WeakPeriodicRule phi_prime(const std::vector<int>& a, int order);
WeakPeriodicRule phi_double_prime(const std::vector<int>& a, int order);

/// The periodic reference configuration whose every complete ball lies
/// in class C_i: all-plus for i = 0, otherwise -1 on H_0 / +1 on H_1
/// for A = {1,...,i} (the |x|-parity checkerboard when i = k+1).
WeakPeriodicRule periodic_sigma(int i, int order);

PeriodicityVerdict classify_periodicity(const WeakPeriodicRule& rule);

/// A rule plus the root convention that makes evaluation total: the
/// root has no parent, so its table lookup uses root_parent_class.
/// Verdicts never depend on it (balls near the root are not checked).
struct SpinConfigView {
  WeakPeriodicRule rule;
  CosetClass root_parent_class;

  explicit SpinConfigView(WeakPeriodicRule r)
      : rule(std::move(r)),
        root_parent_class(rule.subgroup().kind == SubgroupKind::IndexTwo ? 0 : 2) {}
  SpinConfigView(WeakPeriodicRule r, CosetClass root_class)
      : rule(std::move(r)), root_parent_class(root_class) {}
};

/// sigma(x) per the rule's table; total on all words of matching order.
int evaluate(const SpinConfigView& view, const GroupWord& x);

}  // namespace cayley
