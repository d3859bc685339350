#include "rigrot/classical_em.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Geometry>

namespace rigrot {

namespace {

void check_sizes(const ParticleSystem& system, const RigidConfiguration& config) {
  if (system.size() != config.size()) {
    throw Error(ErrorCode::InvalidArgument, "particle system and configuration sizes differ");
  }
}

double pairing(const SpacetimeVector& a, const SpacetimeVector& v) {
  return a.time * v.time + a.space.dot(v.space);
}

}  // namespace

PatternField PatternField::uniform(const Vec3& e, const Vec3& b) {
  PatternField f;
  f.electric = [e](const Vec3&) { return e; };
  f.magnetic = [b](const Vec3&) { return b; };
  f.constant = true;
  f.spacelikely_affine = true;
  return f;
}

bool PatternField::is_zero() const {
  return constant && e(Vec3::Zero()).isZero(0.0) && b(Vec3::Zero()).isZero(0.0);
}

double field_form(const Vec3& e, const Vec3& b, const SpacetimeVector& v, const SpacetimeVector& w) {
  return 2.0 * (-v.time * e.dot(w.space) + w.time * e.dot(v.space) + b.dot(v.space.cross(w.space)));
}

SplitFieldValue split_field(const ParticleSystem& system, const RigidConfiguration& config,
                            const PatternField& field, const RigidTangent& v, const RigidTangent& w) {
  check_sizes(system, config);
  const double m = config.total_mass();
  const SpacetimeVector v_cen{v.time, v.center};
  const SpacetimeVector w_cen{w.time, w.center};

  SplitFieldValue out;
  for (std::size_t i = 0; i < config.size(); ++i) {
    const double c = system.charges[i] / m;
    if (c == 0.0) continue;
    const Vec3& r = config.relatives[i];
    const Vec3 x = config.center + r;
    const Vec3 e = field.e(x);
    const Vec3 b = field.b(x);
    const SpacetimeVector v_rot{0.0, v.omega.cross(r)};
    const SpacetimeVector w_rot{0.0, w.omega.cross(r)};
    out.cen += c * field_form(e, b, v_cen, w_cen);
    out.rot += c * field_form(e, b, v_rot, w_rot);
    out.mixed += c * (field_form(e, b, v_cen, w_rot) + field_form(e, b, v_rot, w_cen));
  }
  return out;
}

double unsplit_field(const ParticleSystem& system, const RigidConfiguration& config,
                     const PatternField& field, const RigidTangent& v, const RigidTangent& w) {
  check_sizes(system, config);
  const double m = config.total_mass();
  double acc = 0.0;
  for (std::size_t i = 0; i < config.size(); ++i) {
    const Vec3& r = config.relatives[i];
    const Vec3 x = config.center + r;
    const SpacetimeVector vi{v.time, v.center + v.omega.cross(r)};
    const SpacetimeVector wi{w.time, w.center + w.omega.cross(r)};
    acc += system.charges[i] / m * field_form(field.e(x), field.b(x), vi, wi);
  }
  return acc;
}

DecouplingReport decoupling_check(const ParticleSystem& system, const PatternField& field,
                                  double rel_tol) {
  system.validate();
  DecouplingReport out;
  const double k = system.total_charge() / system.total_mass();
  double scale = 0.0;
  for (double q : system.charges) scale = std::max(scale, std::abs(q));
  out.charges_proportional = true;
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (std::abs(system.charges[i] - k * system.masses[i]) > rel_tol * scale) {
      out.charges_proportional = false;
    }
  }
  out.field_affine = field.spacelikely_affine;

  std::ostringstream msg;
  if (field.is_zero()) {
    out.decoupled = true;
    msg << "zero field: decoupled";
  } else if (out.charges_proportional && out.field_affine) {
    out.decoupled = true;
    msg << "charges proportional to masses (k = " << k << ") and field spacelikely affine: decoupled";
  } else {
    if (!out.charges_proportional) msg << "charges are not proportional to masses";
    if (!out.charges_proportional && !out.field_affine) msg << "; ";
    if (!out.field_affine) msg << "field is not spacelikely affine";
  }
  out.report = msg.str();
  return out;
}

SplitPotentialValue split_potential(const ParticleSystem& system, const RigidConfiguration& config,
                                    std::span<const PotentialValue> potential, const RigidTangent& v) {
  check_sizes(system, config);
  if (potential.size() != config.size()) {
    throw Error(ErrorCode::InvalidArgument, "expected one potential value per particle");
  }
  const double m = config.total_mass();
  const SpacetimeVector v_cen{v.time, v.center};
  SplitPotentialValue out;
  for (std::size_t i = 0; i < config.size(); ++i) {
    const double c = system.charges[i] / m;
    out.cen += c * pairing(potential[i], v_cen);
    out.rot += c * pairing(potential[i], {0.0, v.omega.cross(config.relatives[i])});
  }
  return out;
}

}  // namespace rigrot
