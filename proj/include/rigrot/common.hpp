#pragma once

#include <compare>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace rigrot {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

enum class ErrorCode {
  TooFewParticles,
  NonPositiveMass,
  AllCoincident,
  NotRigidVelocity,
  RepresentationClosure,
  NotSelfAdjoint,
  InvalidArgument,
  Schema,
  InvalidBundle,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Numerical tolerances shared by the geometric and spectral layers.
/// `abs` is in length units, `rel` and `spec` are dimensionless.
struct Tolerances {
  double abs = 1e-12;
  double rel = 1e-9;
  double spec = 1e-9;
};

/// A non-negative or signed half-integer stored as twice its value, so that
/// j = 3/2 is HalfInteger{3}. Angular momentum quantum numbers use this.
struct HalfInteger {
  int twice = 0;

  static constexpr HalfInteger from_twice(int t) { return HalfInteger{t}; }
  static constexpr HalfInteger integer(int n) { return HalfInteger{2 * n}; }

  constexpr bool is_integer() const { return twice % 2 == 0; }
  constexpr double value() const { return 0.5 * twice; }
  constexpr HalfInteger abs() const { return HalfInteger{twice < 0 ? -twice : twice}; }
  constexpr HalfInteger operator-() const { return HalfInteger{-twice}; }

  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;
};

/// "3/2", "-1/2", "2".
std::string to_string(HalfInteger h);

}  // namespace rigrot
