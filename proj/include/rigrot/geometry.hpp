#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "rigrot/common.hpp"

namespace rigrot {

/// Raw input: n point particles with masses, charges and absolute positions.
struct ParticleSystem {
  std::vector<double> masses;
  std::vector<double> charges;
  std::vector<Vec3> positions;

  std::size_t size() const { return masses.size(); }
  double total_mass() const;
  double total_charge() const;

  /// Throws TooFewParticles / NonPositiveMass / InvalidArgument.
  void validate() const;
};

enum class DegeneracyClass {
  Degenerate,             // collinear body, rotational space ~ S^2
  WeaklyNonDegenerate,    // planar body, rotational space ~ SO(3)
  StronglyNonDegenerate,  // full-rank body, rotational space ~ SO(3)
};

const char* to_string(DegeneracyClass c);

inline bool is_degenerate(DegeneracyClass c) {
  return c == DegeneracyClass::Degenerate;
}

/// Center-of-mass frame of a rigid body. relatives[i] = positions[i] - center
/// and the mass-weighted sum of relatives vanishes.
struct RigidConfiguration {
  Vec3 center = Vec3::Zero();
  std::vector<Vec3> relatives;
  std::vector<double> masses;
  std::vector<double> weights;  // m_i / m
  Eigen::MatrixXd distances;    // |r_i - r_j|
  int characteristic = 0;       // rank of span{r_i - r_j}
  DegeneracyClass degeneracy = DegeneracyClass::Degenerate;

  std::size_t size() const { return relatives.size(); }
  double total_mass() const;
};

RigidConfiguration canonicalize(const ParticleSystem& system,
                                const Tolerances& tol = {});

/// Rank of the difference matrix, using a threshold of tol.rel * sigma_max.
int characteristic(std::span<const Vec3> relatives, const Tolerances& tol = {});

DegeneracyClass classify(const RigidConfiguration& config);

DegeneracyClass degeneracy_from_characteristic(int c_rot);

/// Per-particle vector split into its center-of-mass part and relative parts.
struct SplitVector {
  Vec3 center = Vec3::Zero();
  std::vector<Vec3> relative;

  std::vector<Vec3> recombine() const;
};

SplitVector split_velocity(const RigidConfiguration& config,
                           std::span<const Vec3> velocities);

/// Covector splitting: center = sum of alpha_i, relative_i = alpha_i - mu_i * center.
SplitVector split_covector(const RigidConfiguration& config,
                           std::span<const Vec3> covectors);

/// Weighted multi-metric sum_i mu_i a_i . b_i.
double weighted_inner(const RigidConfiguration& config, std::span<const Vec3> a,
                      std::span<const Vec3> b);

/// Inverse of the angular-velocity map: the unique omega with v_i = omega x r_i
/// (or, for a collinear body, the representative orthogonal to the axis).
/// Throws NotRigidVelocity when the residual exceeds tol.rel * |v|.
Vec3 angular_velocity(const RigidConfiguration& config,
                      std::span<const Vec3> relative_velocities,
                      const Tolerances& tol = {});

/// omega x r_i for every particle.
std::vector<Vec3> rigid_velocities(const RigidConfiguration& config,
                                   const Vec3& omega);

/// Unit vector along the body axis of a collinear configuration.
Vec3 body_axis(const RigidConfiguration& config);

}  // namespace rigrot
