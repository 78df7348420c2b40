#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cayley/energy.hpp"

namespace cayley {

enum class RegionDetail {
  Origin,            // J = (0,0): every level ties
  Interior,          // inside exactly one A_m
  BoundarySegment,   // on B_i = A_i cap A_{i+1}, J != 0
  AntipodalBoundary, // on B = A_0 cap A_{k+1}, J != 0
};

std::string to_string(RegionDetail d);

/// Membership verdict for a coupling point: the set of m with J in A_m
/// plus the derived boundary/interior detail.
struct RegionLabel {
  std::vector<int> members;  // sorted
  RegionDetail detail;
  int detail_index;          // m for Interior, i for BoundarySegment, else -1
};

/// Classifies J against the regions A_0..A_{k+1}. Membership is decided
/// twice, from the explicit inequalities and from the argmin of the
/// level energies; any disagreement is an implementation bug and throws.
RegionLabel classify(const Coupling& j, int order);

enum class IntersectionKind {
  ConsecutiveHalfLine,  // A_i cap A_{i+1} = {J1 = 2(2i-k) J2, J2 >= 0}
  OriginOnly,           // 1 < |i-j| < k+1
  AntipodalHalfLine,    // A_0 cap A_{k+1} = {J1 = 0, J2 <= 0}
};

struct IntersectionCase {
  IntersectionKind kind;
  int i, j, order;
  std::int64_t slope;  // the 2(2i-k) coefficient; meaningful for ConsecutiveHalfLine
};

/// Which of the three intersection cases applies to A_i cap A_j. The
/// result is smoke-checked on a few exact sample points before return.
IntersectionCase intersection_check(int i, int j, int order);

/// Samples num_on points on the claimed set (both indices must be
/// members) and num_off points off it (must not both be members).
/// Returns false on any counterexample.
bool validate_intersection(const IntersectionCase& c, int num_on, int num_off,
                           unsigned seed);

enum class GroundStateCase {
  AllConfigs,          // J = (0,0): every configuration is a ground state
  Pair,                // interior of A_i: the two reference states of class i
  BoundaryFamily,      // B_i: the four reference states plus the set S_i
  AntipodalQuadruple,  // B: the four states of classes 0 and k+1
};

struct GroundStateDescriptor {
  GroundStateCase kind;
  int index;  // i for Pair/BoundaryFamily, else -1
};

std::string to_string(GroundStateCase c);

GroundStateDescriptor ground_state_descriptor(const Coupling& j, int order);

}  // namespace cayley
