#pragma once

#include <string_view>
#include <vector>

#include "rigrot/common.hpp"
#include "rigrot/geometry.hpp"

namespace rigrot {

/// Hermitian line bundles over the rotational space, up to equivalence.
/// Plus is the trivial bundle (integer j); Minus is the non-trivial one,
/// available only over SO(3), and hosts half-odd-integer j.
enum class BundleKind { Plus, Minus };

const char* to_string(BundleKind b);
const char* display_name(BundleKind b);  // "trivial" / "nontrivial"

/// Classification data for one degeneracy class. The cohomology groups are
/// fixed facts about SO(3) and S^2, not computed.
struct StructureSet {
  std::vector<BundleKind> bundles;
  std::string_view second_cohomology;  // "Z2" for SO(3), "Z" for S^2
  std::string_view rotational_space;   // "SO(3)" or "S^2"

  bool admits(BundleKind b) const;
};

StructureSet admissible_structures(DegeneracyClass c);

/// A polynomial of total degree d on S^3 descends to a section of the Plus
/// bundle iff it is even under z -> -z, and of the Minus bundle iff odd.
constexpr bool parity_projects(int degree, BundleKind kind) {
  const bool even = degree % 2 == 0;
  return kind == BundleKind::Plus ? even : !even;
}

/// The bundle hosting polynomials of total degree d.
constexpr BundleKind bundle_for_degree(int degree) {
  return degree % 2 == 0 ? BundleKind::Plus : BundleKind::Minus;
}

/// j = d / 2.
constexpr HalfInteger j_from_degree(int degree) { return HalfInteger::from_twice(degree); }

/// True iff the quantum number j can occur on this bundle.
constexpr bool j_allowed(HalfInteger j, BundleKind kind) {
  return parity_projects(j.twice, kind);
}

}  // namespace rigrot
