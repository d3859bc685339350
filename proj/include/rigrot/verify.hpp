#pragma once

#include <string>
#include <vector>

#include "rigrot/common.hpp"
#include "rigrot/rational.hpp"

namespace rigrot {

/// Deliberate faults, used to check that the suite catches them.
enum class Fault { None, CasimirSign };

struct VerifyOptions {
  HalfInteger j_max = HalfInteger::integer(6);
  Fault fault = Fault::None;
  bool parallel = true;
  unsigned long seed = 20240611;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  bool passed() const;
  /// nullptr when every check passed.
  const CheckResult* first_failure() const;
};

/// Runs the invariant and oracle suite.
VerifyReport run_verify(const VerifyOptions& options = {});

/// Energies of the rotor (hbar/2) sum_a J_a^2 / I_a on the spin-j
/// representation built from ladder operators, ascending, 2j+1 values.
std::vector<double> ladder_oracle_energies(double i1, double i2, double i3, double hbar, int twice_j);

}  // namespace rigrot
