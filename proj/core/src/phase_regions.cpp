#include "cayley/phase_regions.hpp"

#include <random>
#include <stdexcept>

namespace cayley {

namespace {

std::vector<int> members_by_inequalities(const Coupling& j, int k) {
  std::vector<int> out;
  const Rational zero(0);
  if (j.j1 <= zero && j.j1 + Rational(2 * k) * j.j2 <= zero) out.push_back(0);
  for (int m = 1; m <= k; ++m) {
    if (j.j2 >= zero && Rational(2 * (2 * m - k - 2)) * j.j2 <= j.j1 &&
        j.j1 <= Rational(2 * (2 * m - k)) * j.j2)
      out.push_back(m);
  }
  if (j.j1 >= zero && j.j1 - Rational(2 * k) * j.j2 >= zero) out.push_back(k + 1);
  return out;
}

}  // namespace

std::string to_string(RegionDetail d) {
  switch (d) {
    case RegionDetail::Origin: return "origin";
    case RegionDetail::Interior: return "interior";
    case RegionDetail::BoundarySegment: return "boundary_segment";
    case RegionDetail::AntipodalBoundary: return "antipodal_boundary";
  }
  throw std::logic_error("unreachable");
}

RegionLabel classify(const Coupling& j, int order) {
  std::vector<int> ineq = members_by_inequalities(j, order);
  std::vector<int> argmin = min_level_set(order, j);
  if (ineq != argmin)
    throw std::logic_error(
        "classify: explicit inequalities and argmin of the level energies disagree "
        "at J = (" + j.j1.str() + ", " + j.j2.str() + "), k = " + std::to_string(order));
  if (ineq.empty())
    throw std::logic_error("classify: empty membership, regions must cover R^2");

  RegionLabel label{ineq, RegionDetail::Interior, -1};
  bool at_origin = j.j1.is_zero() && j.j2.is_zero();
  if (at_origin) {
    label.detail = RegionDetail::Origin;
  } else if (ineq.size() == 1) {
    label.detail = RegionDetail::Interior;
    label.detail_index = ineq[0];
  } else if (ineq.size() == 2 && ineq[1] == ineq[0] + 1) {
    label.detail = RegionDetail::BoundarySegment;
    label.detail_index = ineq[0];
  } else if (ineq.size() == 2 && ineq[0] == 0 && ineq[1] == order + 1) {
    label.detail = RegionDetail::AntipodalBoundary;
  } else {
    throw std::logic_error("classify: unexpected membership pattern");
  }
  return label;
}

IntersectionCase intersection_check(int i, int j, int order) {
  if (i == j || i < 0 || j < 0 || i > order + 1 || j > order + 1)
    throw std::invalid_argument("intersection_check: need distinct i, j in 0..k+1");
  if (i > j) std::swap(i, j);
  IntersectionCase c{IntersectionKind::OriginOnly, i, j, order, 0};
  if (j == i + 1) {
    c.kind = IntersectionKind::ConsecutiveHalfLine;
    c.slope = 2 * (2 * i - order);
  } else if (j - i == order + 1) {
    c.kind = IntersectionKind::AntipodalHalfLine;
  }
  if (!validate_intersection(c, 5, 5, 2026))
    throw std::logic_error("intersection_check: sample validation failed");
  return c;
}

bool validate_intersection(const IntersectionCase& c, int num_on, int num_off,
                           unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(1, 40);
  std::uniform_int_distribution<int> den(1, 12);
  auto positive = [&] { return Rational(num(rng), den(rng)); };

  auto both_members = [&](const Coupling& j) {
    auto m = classify(j, c.order).members;
    bool has_i = false, has_j = false;
    for (int v : m) {
      has_i = has_i || v == c.i;
      has_j = has_j || v == c.j;
    }
    return has_i && has_j;
  };

  for (int t = 0; t < num_on; ++t) {
    Coupling j;
    switch (c.kind) {
      case IntersectionKind::ConsecutiveHalfLine: {
        Rational j2 = t == 0 ? Rational(0) : positive();
        j = {Rational(c.slope) * j2, j2};
        break;
      }
      case IntersectionKind::OriginOnly:
        j = {Rational(0), Rational(0)};
        break;
      case IntersectionKind::AntipodalHalfLine:
        j = {Rational(0), t == 0 ? Rational(0) : -positive()};
        break;
    }
    if (!both_members(j)) return false;
  }

  for (int t = 0; t < num_off; ++t) {
    Coupling j;
    Rational tt = positive();
    Rational delta = positive();
    switch (c.kind) {
      case IntersectionKind::ConsecutiveHalfLine:
        // off the line for J2 > 0, or the mirrored ray J2 < 0
        j = t % 2 == 0 ? Coupling{Rational(c.slope) * tt + delta, tt}
                       : Coupling{Rational(c.slope) * -tt, -tt};
        break;
      case IntersectionKind::OriginOnly:
        j = t % 2 == 0 ? Coupling{tt, delta} : Coupling{-tt, delta};
        break;
      case IntersectionKind::AntipodalHalfLine:
        j = t % 2 == 0 ? Coupling{delta, -tt} : Coupling{Rational(0), tt};
        break;
    }
    if (both_members(j)) return false;
  }
  return true;
}

std::string to_string(GroundStateCase c) {
  switch (c) {
    case GroundStateCase::AllConfigs: return "all_configs";
    case GroundStateCase::Pair: return "pair";
    case GroundStateCase::BoundaryFamily: return "boundary_family";
    case GroundStateCase::AntipodalQuadruple: return "antipodal_quadruple";
  }
  throw std::logic_error("unreachable");
}

GroundStateDescriptor ground_state_descriptor(const Coupling& j, int order) {
  RegionLabel label = classify(j, order);
  switch (label.detail) {
    case RegionDetail::Origin:
      return {GroundStateCase::AllConfigs, -1};
    case RegionDetail::Interior:
      return {GroundStateCase::Pair, label.detail_index};
    case RegionDetail::BoundarySegment:
      return {GroundStateCase::BoundaryFamily, label.detail_index};
    case RegionDetail::AntipodalBoundary:
      return {GroundStateCase::AntipodalQuadruple, -1};
  }
  throw std::logic_error("unreachable");
}

}  // namespace cayley
