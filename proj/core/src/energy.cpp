#include "cayley/energy.hpp"

#include <stdexcept>

namespace cayley {

BallConfig BallConfig::from_spins(int order, int center, std::span<const int> leaves) {
  if (center != 1 && center != -1)
    throw std::invalid_argument("BallConfig: center spin must be +1 or -1");
  if (static_cast<int>(leaves.size()) != order + 1)
    throw std::invalid_argument("BallConfig: a unit ball has exactly k+1 neighbors");
  int minus = 0;
  for (int s : leaves) {
    if (s != 1 && s != -1)
      throw std::invalid_argument("BallConfig: neighbor spin must be +1 or -1");
    minus += (s == -1);
  }
  return BallConfig{order, center, minus};
}

Rational ball_energy(const BallConfig& b, const Coupling& j) {
  // leaf-spin sum S determines both terms:
  //   edges: (1/2) J1 * center * S
  //   pairs: J2 * (S^2 - (k+1)) / 2
  std::int64_t s = b.plus_neighbors() - b.minus_neighbors;
  Rational edge_term = j.j1 * Rational(b.center_spin * s, 2);
  Rational pair_term = j.j2 * Rational(s * s - (b.order + 1), 2);
  return edge_term + pair_term;
}

BallClass class_of(const BallConfig& b) {
  return b.center_spin == 1 ? b.minus_neighbors : b.plus_neighbors();
}

Rational level_energy(int order, int i, const Coupling& j) {
  if (i < 0 || i > order + 1)
    throw std::invalid_argument("level_energy: class index outside 0..k+1");
  std::int64_t k = order;
  Rational c1 = Rational(k + 1, 2) - Rational(i);
  Rational c2 = Rational(k * (k + 1), 2) + Rational(2ll * i * (i - k - 1));
  return c1 * j.j1 + c2 * j.j2;
}

std::vector<int> min_level_set(int order, const Coupling& j) {
  Rational best = level_energy(order, 0, j);
  for (int i = 1; i <= order + 1; ++i) {
    Rational u = level_energy(order, i, j);
    if (u < best) best = u;
  }
  std::vector<int> out;
  for (int i = 0; i <= order + 1; ++i)
    if (level_energy(order, i, j) == best) out.push_back(i);
  return out;
}

SpinAssignment::SpinAssignment(int order, int radius, int fill)
    : order_(order), radius_(radius) {
  if (radius < 0) throw std::invalid_argument("SpinAssignment: negative radius");
  if (fill != 1 && fill != -1)
    throw std::invalid_argument("SpinAssignment: fill spin must be +1 or -1");
  words_ = enumerate_ball(order, radius);
  spins_.assign(words_.size(), fill);
  for (std::size_t i = 0; i < words_.size(); ++i) index_[words_[i].letters()] = i;
}

std::size_t SpinAssignment::index_of(const GroupWord& x) const {
  if (x.order() != order_)
    throw std::invalid_argument("SpinAssignment: word order mismatch");
  auto it = index_.find(x.letters());
  if (it == index_.end())
    throw std::invalid_argument("SpinAssignment: word outside V_n");
  return it->second;
}

int SpinAssignment::spin(const GroupWord& x) const { return spins_[index_of(x)]; }

void SpinAssignment::set_spin(const GroupWord& x, int s) {
  if (s != 1 && s != -1)
    throw std::invalid_argument("SpinAssignment: spin must be +1 or -1");
  spins_[index_of(x)] = s;
}

SpinAssignment materialize(const SpinConfigView& view, int radius) {
  SpinAssignment out(view.rule.order(), radius);
  for (const auto& w : out.words()) out.set_spin(w, evaluate(view, w));
  return out;
}

namespace {

// Walks every edge (via child words) and every distance-two pair (via
// midpoints) inside V_n exactly once.
template <typename EdgeFn, typename PairFn>
void for_each_term(const SpinAssignment& a, EdgeFn&& edge, PairFn&& pair) {
  for (const auto& x : a.words()) {
    if (!x.is_identity()) edge(parent(x), x);
    if (static_cast<int>(x.length()) <= a.radius() - 1) {
      auto nb = neighbors(x);
      for (std::size_t u = 0; u < nb.size(); ++u)
        for (std::size_t v = u + 1; v < nb.size(); ++v) pair(nb[u], nb[v]);
    }
  }
}

}  // namespace

Rational total_energy(const SpinAssignment& a, const Coupling& j) {
  std::int64_t edge_sum = 0, pair_sum = 0;
  for_each_term(
      a,
      [&](const GroupWord& x, const GroupWord& y) { edge_sum += a.spin(x) * a.spin(y); },
      [&](const GroupWord& x, const GroupWord& y) { pair_sum += a.spin(x) * a.spin(y); });
  return j.j1 * Rational(edge_sum) + j.j2 * Rational(pair_sum);
}

Rational finite_volume_energy(const SpinConfigView& view, int radius, const Coupling& j) {
  if (radius < 0)
    throw std::invalid_argument("finite_volume_energy: negative radius");
  return total_energy(materialize(view, radius), j);
}

Rational relative_hamiltonian(const SpinAssignment& sigma, const SpinAssignment& phi,
                              const Coupling& j) {
  if (sigma.order() != phi.order() || sigma.radius() != phi.radius())
    throw std::invalid_argument("relative_hamiltonian: assignments on different volumes");
  int n = sigma.radius();
  for (std::size_t i = 0; i < sigma.words().size(); ++i) {
    if (sigma.spin_at(i) != phi.spin_at(i) &&
        static_cast<int>(sigma.words()[i].length()) > n - 3)
      throw std::invalid_argument(
          "relative_hamiltonian: difference set touches the boundary shell");
  }
  std::int64_t edge_sum = 0, pair_sum = 0;
  for_each_term(
      sigma,
      [&](const GroupWord& x, const GroupWord& y) {
        edge_sum += sigma.spin(x) * sigma.spin(y) - phi.spin(x) * phi.spin(y);
      },
      [&](const GroupWord& x, const GroupWord& y) {
        pair_sum += sigma.spin(x) * sigma.spin(y) - phi.spin(x) * phi.spin(y);
      });
  return j.j1 * Rational(edge_sum) + j.j2 * Rational(pair_sum);
}

Rational ball_sum_difference(const SpinAssignment& sigma, const SpinAssignment& phi,
                             const Coupling& j) {
  if (sigma.order() != phi.order() || sigma.radius() != phi.radius())
    throw std::invalid_argument("ball_sum_difference: assignments on different volumes");
  Rational sum(0);
  for (const auto& c : sigma.words()) {
    if (static_cast<int>(c.length()) > sigma.radius() - 1) continue;
    std::vector<int> ls, lp;
    for (const auto& y : neighbors(c)) {
      ls.push_back(sigma.spin(y));
      lp.push_back(phi.spin(y));
    }
    auto bs = BallConfig::from_spins(sigma.order(), sigma.spin(c), ls);
    auto bp = BallConfig::from_spins(phi.order(), phi.spin(c), lp);
    sum += ball_energy(bs, j) - ball_energy(bp, j);
  }
  return sum;
}

}  // namespace cayley
