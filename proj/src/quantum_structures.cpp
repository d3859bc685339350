#include "rigrot/quantum_structures.hpp"

#include <algorithm>

namespace rigrot {

const char* to_string(BundleKind b) { return b == BundleKind::Plus ? "Plus" : "Minus"; }

const char* display_name(BundleKind b) {
  return b == BundleKind::Plus ? "trivial" : "nontrivial";
}

bool StructureSet::admits(BundleKind b) const {
  return std::find(bundles.begin(), bundles.end(), b) != bundles.end();
}

StructureSet admissible_structures(DegeneracyClass c) {
  if (is_degenerate(c)) {
    // H^2(S^2, Z) = Z but only the class of the (vanishing) symplectic form
    // is admissible: exactly one structure.
    return {{BundleKind::Plus}, "Z", "S^2"};
  }
  return {{BundleKind::Plus, BundleKind::Minus}, "Z2", "SO(3)"};
}

}  // namespace rigrot
