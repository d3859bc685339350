#include "rigrot/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Dense>

namespace rigrot {

std::string to_string(HalfInteger h) {
  if (h.is_integer()) return std::to_string(h.twice / 2);
  return std::to_string(h.twice) + "/2";
}

double ParticleSystem::total_mass() const {
  return std::accumulate(masses.begin(), masses.end(), 0.0);
}

double ParticleSystem::total_charge() const {
  return std::accumulate(charges.begin(), charges.end(), 0.0);
}

void ParticleSystem::validate() const {
  if (masses.size() != positions.size() || charges.size() != positions.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "masses, charges and positions must have equal length");
  }
  if (positions.size() < 2) {
    throw Error(ErrorCode::TooFewParticles, "a rigid body needs at least 2 particles");
  }
  for (std::size_t i = 0; i < masses.size(); ++i) {
    if (!(masses[i] > 0.0) || !std::isfinite(masses[i])) {
      throw Error(ErrorCode::NonPositiveMass,
                  "particle " + std::to_string(i) + " has non-positive mass");
    }
    if (!positions[i].allFinite() || !std::isfinite(charges[i])) {
      throw Error(ErrorCode::InvalidArgument,
                  "particle " + std::to_string(i) + " has non-finite data");
    }
  }
}

const char* to_string(DegeneracyClass c) {
  switch (c) {
    case DegeneracyClass::Degenerate: return "Degenerate";
    case DegeneracyClass::WeaklyNonDegenerate: return "WeaklyNonDegenerate";
    case DegeneracyClass::StronglyNonDegenerate: return "StronglyNonDegenerate";
  }
  return "?";
}

double RigidConfiguration::total_mass() const {
  return std::accumulate(masses.begin(), masses.end(), 0.0);
}

DegeneracyClass degeneracy_from_characteristic(int c_rot) {
  switch (c_rot) {
    case 1: return DegeneracyClass::Degenerate;
    case 2: return DegeneracyClass::WeaklyNonDegenerate;
    case 3: return DegeneracyClass::StronglyNonDegenerate;
    default:
      throw Error(ErrorCode::AllCoincident, "configuration has no rotational degrees of freedom");
  }
}

int characteristic(std::span<const Vec3> relatives, const Tolerances& tol) {
  if (relatives.size() < 2) return 0;
  // span{r_i - r_j} = span{r_i - r_0}
  Eigen::MatrixXd diffs(static_cast<Eigen::Index>(relatives.size() - 1), 3);
  for (std::size_t i = 1; i < relatives.size(); ++i) {
    diffs.row(static_cast<Eigen::Index>(i - 1)) = (relatives[i] - relatives[0]).transpose();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(diffs);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double threshold = tol.rel * s(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > threshold) ++rank;
  }
  return rank;
}

RigidConfiguration canonicalize(const ParticleSystem& system, const Tolerances& tol) {
  system.validate();

  RigidConfiguration config;
  const std::size_t n = system.size();
  const double m = system.total_mass();

  config.masses = system.masses;
  config.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) config.weights[i] = system.masses[i] / m;

  for (std::size_t i = 0; i < n; ++i) config.center += config.weights[i] * system.positions[i];

  config.relatives.resize(n);
  double max_norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    config.relatives[i] = system.positions[i] - config.center;
    max_norm = std::max(max_norm, config.relatives[i].norm());
  }
  if (max_norm <= tol.abs) {
    throw Error(ErrorCode::AllCoincident, "all particles coincide with the center of mass");
  }

  // Remove the rounding drift of the weighted sum so that sum mu_i r_i = 0
  // holds to machine precision relative to the body size.
  Vec3 drift = Vec3::Zero();
  for (std::size_t i = 0; i < n; ++i) drift += config.weights[i] * config.relatives[i];
  for (auto& r : config.relatives) r -= drift;
  config.center += drift;

  config.distances.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      config.distances(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          (config.relatives[i] - config.relatives[j]).norm();
    }
  }

  config.characteristic = characteristic(config.relatives, tol);
  if (config.characteristic == 0) {
    throw Error(ErrorCode::AllCoincident, "all particles coincide");
  }
  config.degeneracy = degeneracy_from_characteristic(config.characteristic);
  return config;
}

DegeneracyClass classify(const RigidConfiguration& config) {
  return degeneracy_from_characteristic(config.characteristic);
}

std::vector<Vec3> SplitVector::recombine() const {
  std::vector<Vec3> out(relative.size());
  for (std::size_t i = 0; i < relative.size(); ++i) out[i] = center + relative[i];
  return out;
}

static void require_per_particle(const RigidConfiguration& config, std::size_t got) {
  if (got != config.size()) {
    throw Error(ErrorCode::InvalidArgument, "expected one vector per particle");
  }
}

SplitVector split_velocity(const RigidConfiguration& config,
                           std::span<const Vec3> velocities) {
  require_per_particle(config, velocities.size());
  SplitVector out;
  for (std::size_t i = 0; i < velocities.size(); ++i) {
    out.center += config.weights[i] * velocities[i];
  }
  out.relative.resize(velocities.size());
  for (std::size_t i = 0; i < velocities.size(); ++i) {
    out.relative[i] = velocities[i] - out.center;
  }
  return out;
}

SplitVector split_covector(const RigidConfiguration& config,
                           std::span<const Vec3> covectors) {
  require_per_particle(config, covectors.size());
  SplitVector out;
  for (const auto& a : covectors) out.center += a;
  out.relative.resize(covectors.size());
  for (std::size_t i = 0; i < covectors.size(); ++i) {
    out.relative[i] = covectors[i] - config.weights[i] * out.center;
  }
  return out;
}

double weighted_inner(const RigidConfiguration& config, std::span<const Vec3> a,
                      std::span<const Vec3> b) {
  require_per_particle(config, a.size());
  require_per_particle(config, b.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += config.weights[i] * a[i].dot(b[i]);
  return acc;
}

std::vector<Vec3> rigid_velocities(const RigidConfiguration& config, const Vec3& omega) {
  std::vector<Vec3> out(config.size());
  for (std::size_t i = 0; i < config.size(); ++i) out[i] = omega.cross(config.relatives[i]);
  return out;
}

Vec3 body_axis(const RigidConfiguration& config) {
  const auto it = std::max_element(
      config.relatives.begin(), config.relatives.end(),
      [](const Vec3& a, const Vec3& b) { return a.squaredNorm() < b.squaredNorm(); });
  return it->normalized();
}

Vec3 angular_velocity(const RigidConfiguration& config,
                      std::span<const Vec3> relative_velocities, const Tolerances& tol) {
  require_per_particle(config, relative_velocities.size());
  const auto n = static_cast<Eigen::Index>(config.size());

  // v_i = omega x r_i = -[r_i]_x omega, stacked into a 3n x 3 system.
  Eigen::MatrixXd a(3 * n, 3);
  Eigen::VectorXd b(3 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Vec3& r = config.relatives[static_cast<std::size_t>(i)];
    Mat3 skew;
    skew << 0.0, r.z(), -r.y(),
           -r.z(), 0.0, r.x(),
            r.y(), -r.x(), 0.0;
    a.block(3 * i, 0, 3, 3) = skew;
    b.segment(3 * i, 3) = relative_velocities[static_cast<std::size_t>(i)];
  }

  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod;
  cod.setThreshold(tol.rel);
  cod.compute(a);
  // Minimum-norm solution: for a collinear body this is the representative
  // orthogonal to the axis.
  Vec3 omega = cod.solve(b);

  const double residual = (a * omega - b).norm();
  if (residual > tol.rel * b.norm() + tol.abs) {
    throw Error(ErrorCode::NotRigidVelocity,
                "velocities are not those of a rigid rotation (residual " +
                    std::to_string(residual) + ")");
  }
  if (is_degenerate(config.degeneracy)) {
    const Vec3 axis = body_axis(config);
    omega -= axis * axis.dot(omega);
  }
  return omega;
}

}  // namespace rigrot
