#pragma once

#include <functional>
#include <span>
#include <string>

#include "rigrot/common.hpp"
#include "rigrot/geometry.hpp"

namespace rigrot {

/// Observed electric and magnetic fields as functions of position.
/// `spacelikely_affine` marks fields that are uniform in space.
struct PatternField {
  std::function<Vec3(const Vec3&)> electric;
  std::function<Vec3(const Vec3&)> magnetic;
  bool constant = false;
  bool spacelikely_affine = false;

  /// Position-independent fields; flagged constant and spacelikely affine.
  static PatternField uniform(const Vec3& e, const Vec3& b);
  static PatternField zero() { return uniform(Vec3::Zero(), Vec3::Zero()); }

  Vec3 e(const Vec3& x) const { return electric ? electric(x) : Vec3::Zero(); }
  Vec3 b(const Vec3& x) const { return magnetic ? magnetic(x) : Vec3::Zero(); }
  bool is_zero() const;
};

/// Spacetime vector (time, space) seen by the observer.
struct SpacetimeVector {
  double time = 0.0;
  Vec3 space = Vec3::Zero();
};

/// F(v, w) = 2 (-v0 E.w + w0 E.v + B.(v x w)).
double field_form(const Vec3& e, const Vec3& b, const SpacetimeVector& v, const SpacetimeVector& w);

/// Tangent vector to the rigid configuration space: observer time component,
/// center-of-mass velocity and angular velocity.
struct RigidTangent {
  double time = 0.0;
  Vec3 center = Vec3::Zero();
  Vec3 omega = Vec3::Zero();
};

struct SplitFieldValue {
  double cen = 0.0;
  double rot = 0.0;
  double mixed = 0.0;

  double total() const { return cen + rot + mixed; }
};

/// Pullback of the multi-field sum_i (q_i / m) F(e_i) to the rigid
/// configuration space, split into center, rotational and mixed parts.
SplitFieldValue split_field(const ParticleSystem& system, const RigidConfiguration& config,
                            const PatternField& field, const RigidTangent& v, const RigidTangent& w);

/// sum_i (q_i / m) F(e_i)(v_i, w_i) with v_i = (v0, v_cen + omega x r_i).
double unsplit_field(const ParticleSystem& system, const RigidConfiguration& config,
                     const PatternField& field, const RigidTangent& v, const RigidTangent& w);

struct DecouplingReport {
  bool decoupled = false;
  bool charges_proportional = false;
  bool field_affine = false;
  std::string report;
};

/// The mixed component vanishes identically when q_i = k m_i and the field
/// is spacelikely affine. A zero field decouples trivially.
DecouplingReport decoupling_check(const ParticleSystem& system, const PatternField& field,
                                  double rel_tol = 1e-9);

/// Potential covector A_i = (a0, a) at particle i, acting as a0 v0 + a.v.
using PotentialValue = SpacetimeVector;

struct SplitPotentialValue {
  double cen = 0.0;
  double rot = 0.0;
};

/// A_cen(v) = sum_i (q_i / m) A_i(v0, v_cen) and A_rot(v) = sum_i (q_i / m) A_i(0, omega x r_i).
SplitPotentialValue split_potential(const ParticleSystem& system, const RigidConfiguration& config,
                                    std::span<const PotentialValue> potential, const RigidTangent& v);

}  // namespace rigrot
