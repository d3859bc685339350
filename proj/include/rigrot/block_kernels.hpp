#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rigrot/exact_eigen.hpp"
#include "rigrot/polyalg.hpp"
#include "rigrot/quantum_structures.hpp"

namespace rigrot {

struct BlockKey {
  int p = 0;
  int q = 0;

  int degree() const { return p + q; }
  friend bool operator==(BlockKey, BlockKey) = default;
};

/// Every (p, q) with p + q <= max_degree, optionally restricted to the degrees
/// projectable on one bundle; ordered by degree, then by p descending.
std::vector<BlockKey> blocks_up_to(int max_degree, std::optional<BundleKind> bundle = std::nullopt);

/// Parameters of the rotor Hamiltonian on each block.
struct RotorParameters {
  Rational i1 = 1;
  Rational i2 = 1;
  Rational i3 = 1;
  Rational hbar = 1;
  Rational shift = 0;
  /// Blocks of total degree up to this limit are certified through the exact
  /// characteristic polynomial; larger ones use floating point only.
  int exact_degree_limit = 4;
};

struct BlockResult {
  BlockKey key;
  EigenDecomposition eigen;
};

BlockResult diagonalize_block(BlockKey key, const RotorParameters& params);

/// Serial reference implementation.
std::vector<BlockResult> diagonalize_blocks_serial(std::span<const BlockKey> keys,
                                                   const RotorParameters& params);

/// OpenMP-parallel over blocks; output order matches `keys`.
std::vector<BlockResult> diagonalize_blocks_parallel(std::span<const BlockKey> keys,
                                                     const RotorParameters& params);

std::vector<BidegreeSpace> build_spaces_serial(std::span<const BlockKey> keys);
std::vector<BidegreeSpace> build_spaces_parallel(std::span<const BlockKey> keys);

/// Number of OpenMP threads available to the parallel kernels.
int parallel_threads();

}  // namespace rigrot
