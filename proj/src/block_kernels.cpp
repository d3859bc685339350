#include "rigrot/block_kernels.hpp"

#include <exception>

#include <omp.h>

namespace rigrot {

std::vector<BlockKey> blocks_up_to(int max_degree, std::optional<BundleKind> bundle) {
  std::vector<BlockKey> keys;
  for (int d = 0; d <= max_degree; ++d) {
    if (bundle && !parity_projects(d, *bundle)) continue;
    for (int p = d; p >= 0; --p) keys.push_back({p, d - p});
  }
  return keys;
}

BlockResult diagonalize_block(BlockKey key, const RotorParameters& params) {
  const BidegreeSpace space = harmonic_basis(key.p, key.q);
  const OperatorMatrix h =
      hamiltonian_matrix(space, params.i1, params.i2, params.i3, params.hbar, params.shift);
  EigenOptions options;
  options.use_characteristic_polynomial = key.degree() <= params.exact_degree_limit;
  return {key, diagonalize(h.matrix, gram_matrix(space), options)};
}

std::vector<BlockResult> diagonalize_blocks_serial(std::span<const BlockKey> keys,
                                                   const RotorParameters& params) {
  std::vector<BlockResult> out;
  out.reserve(keys.size());
  for (const auto& key : keys) out.push_back(diagonalize_block(key, params));
  return out;
}

namespace {

// Runs body(i) for i in [0, n) across OpenMP threads and rethrows the first
// exception on the calling thread.
template <class Body>
void parallel_for(std::size_t n, Body body) {
  std::exception_ptr error;
  const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(rigrot_block_error)
      {
        if (!error) error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<BlockResult> diagonalize_blocks_parallel(std::span<const BlockKey> keys,
                                                     const RotorParameters& params) {
  std::vector<BlockResult> out(keys.size());
  parallel_for(keys.size(), [&](std::size_t i) { out[i] = diagonalize_block(keys[i], params); });
  return out;
}

std::vector<BidegreeSpace> build_spaces_serial(std::span<const BlockKey> keys) {
  std::vector<BidegreeSpace> out;
  out.reserve(keys.size());
  for (const auto& key : keys) out.push_back(harmonic_basis(key.p, key.q));
  return out;
}

std::vector<BidegreeSpace> build_spaces_parallel(std::span<const BlockKey> keys) {
  std::vector<BidegreeSpace> out(keys.size());
  parallel_for(keys.size(), [&](std::size_t i) { out[i] = harmonic_basis(keys[i].p, keys[i].q); });
  return out;
}

int parallel_threads() { return omp_get_max_threads(); }

}  // namespace rigrot
