#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "cayley/configurations.hpp"
#include "cayley/group.hpp"
#include "cayley/rational.hpp"

namespace cayley {

/// Exact coupling pair (J1 nearest-neighbor, J2 next-nearest-neighbor).
/// No floating point anywhere: region and minimum decisions happen on
/// boundary lines that floats would misclassify.
struct Coupling {
  Rational j1;
  Rational j2;
};

/// Spins on one unit ball: the center and the multiset of its k+1
/// neighbor spins. Energies depend only on the counts, so the multiset
/// is stored as the number of -1 neighbors.
struct BallConfig {
  int order;           // k
  int center_spin;     // +1 or -1
  int minus_neighbors; // count of -1 spins among the k+1 neighbors

  static BallConfig from_spins(int order, int center, std::span<const int> leaves);

  int plus_neighbors() const { return order + 1 - minus_neighbors; }
};

/// Index i of the class C_i the ball belongs to: the number of
/// minority-sign neighbors relative to the center spin.
using BallClass = int;

/// Energy of one unit ball: (1/2) J1 over the k+1 center-leaf edges
/// plus J2 over the C(k+1,2) leaf pairs at distance two.
Rational ball_energy(const BallConfig& b, const Coupling& j);

BallClass class_of(const BallConfig& b);

/// Closed-form energy U_i shared by every ball in class C_i:
/// ((k+1)/2 - i) J1 + (k(k+1)/2 + 2i(i-k-1)) J2.
Rational level_energy(int order, int i, const Coupling& j);

/// All i in 0..k+1 attaining min U_i; exact ties preserved.
std::vector<int> min_level_set(int order, const Coupling& j);

/// A total spin assignment on the finite ball V_n, the finite-volume
/// object the Hamiltonian sums run over.
class SpinAssignment {
 public:
  SpinAssignment(int order, int radius, int fill = +1);

  int order() const { return order_; }
  int radius() const { return radius_; }
  const std::vector<GroupWord>& words() const { return words_; }

  int spin(const GroupWord& x) const;
  int spin_at(std::size_t index) const { return spins_[index]; }
  void set_spin(const GroupWord& x, int s);

 private:
  std::size_t index_of(const GroupWord& x) const;

  int order_;
  int radius_;
  std::vector<GroupWord> words_;
  std::vector<int> spins_;
  std::map<std::vector<std::uint8_t>, std::size_t> index_;
};

SpinAssignment materialize(const SpinConfigView& view, int radius);

/// Free-boundary Hamiltonian over V_n: J1 over edges inside V_n plus
/// J2 over distance-two pairs inside V_n.
Rational total_energy(const SpinAssignment& a, const Coupling& j);

Rational finite_volume_energy(const SpinConfigView& view, int radius, const Coupling& j);

/// Energy difference of two assignments that agree outside a finite
/// set strictly inside V_{n-2}; throws if the difference set touches
/// the boundary shell, where the sums would be truncated.
Rational relative_hamiltonian(const SpinAssignment& sigma, const SpinAssignment& phi,
                              const Coupling& j);

/// Sum of ball-energy differences over every complete ball in V_n
/// (centers |x| <= n-1). Equals relative_hamiltonian for assignments
/// meeting its precondition: each edge lies in exactly two unit balls,
/// matching the 1/2 edge factor, each distance-two pair in exactly one.
Rational ball_sum_difference(const SpinAssignment& sigma, const SpinAssignment& phi,
                             const Coupling& j);

}  // namespace cayley
