#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cayley/configurations.hpp"
#include "cayley/energy.hpp"

namespace cayley {

/// One observed (parent-class, center-class, parent-spin) situation.
struct CaseTriple {
  int parent_class;
  int center_class;
  int parent_spin;
  auto operator<=>(const CaseTriple&) const = default;
};

/// A ball that fails minimality: where, which class, which energy.
struct BallWitness {
  GroupWord center;
  BallClass ball_class;
  Rational energy;
};

struct VerificationReport {
  bool is_ground_state = false;
  std::map<int, std::int64_t> classes_seen;  // ball class -> count
  std::set<CaseTriple> case_coverage;
  int radius_used = 0;
  std::optional<BallWitness> witness;

  std::set<int> class_set() const;
};

/// Brute-force ground-state check: evaluates the rule on V_n and tests
/// every complete ball centered at 2 <= |x| <= n-1 against the minimal
/// level energy. Balls centered at |x| <= 1 are excluded so the verdict
/// never depends on the root convention.
VerificationReport verify(const WeakPeriodicRule& rule, const Coupling& j, int radius);

struct EnumeratedGroundState {
  WeakPeriodicRule rule;
  std::string label;
  PeriodicityVerdict periodicity;
  VerificationReport report;
};

/// Runs verify over all 16 index-2 or 256 index-4 sign tables for the
/// given A and returns the ground states, in catalog order.
std::vector<EnumeratedGroundState> enumerate_ground_states(int index,
                                                           const std::vector<int>& a,
                                                           int order, const Coupling& j,
                                                           int radius);

/// Enumeration outcome for one (k, A, J) against a theorem's predicted
/// strictly-weak-periodic ground-state set. Disagreement is recorded,
/// never thrown: the tool's job is to check the claim, not assume it.
struct TheoremReport {
  int order = 0;
  std::vector<int> a;
  Coupling j;
  int radius = 0;
  std::vector<std::string> predicted;
  std::vector<std::string> observed;
  bool agrees = false;
  std::vector<std::string> strictly_weak_periodic_members;
  std::vector<std::string> ground_states;
};

/// Index-2 sweep at the critical point J = (2,1): strictly weak-periodic
/// ground states must appear iff |A| = (k+1)/2, and then be exactly
/// {phi8, -phi8}. One report per |A| in 1..k+1.
std::vector<TheoremReport> check_theorem2(int order, int radius = 6);

/// Index-4 sweep at J = (2,1) over all 256 sign tables: strictly
/// weak-periodic ground states must appear iff |A| = (k+1)/2, and then
/// be exactly {phi', -phi', phi'', -phi''}. One report per proper |A|.
std::vector<TheoremReport> check_theorem3(int order, int radius = 6);

struct CensusTable {
  int order = 0;
  std::uint64_t total = 0;                 // 2^(k+2)
  std::vector<std::int64_t> counts;        // observed per class 0..k+1
  std::vector<std::int64_t> expected;      // 2(k+1)!/(i!(k+1-i)!)
  bool counts_match = false;
  bool energies_match = false;             // ball energies == U_i at sampled J
};

inline constexpr unsigned kDefaultCensusSeed = 20250808;

/// Enumerates all 2^(k+2) ball configurations, tallies the classes
/// against the closed-form census and checks every ball energy against
/// the level formula at five seeded rational coupling points.
CensusTable lemma1_census(int order, unsigned seed = kDefaultCensusSeed);

struct CaseRow {
  int parent_class;
  int center_class;
  int parent_spin;
  int ball_class;
  auto operator<=>(const CaseRow&) const = default;
};

/// Symbolic evaluation of a rule's realizable ball situations from the
/// coset-transition counts alone (i = |A| neighbors change class under
/// an A-letter, k+1-i under the rest) - no tree enumeration. Serves as
/// the independent route the brute-force class sets are checked against.
std::set<CaseRow> case_table(const WeakPeriodicRule& rule);

std::set<int> case_table_classes(const WeakPeriodicRule& rule);

}  // namespace cayley
