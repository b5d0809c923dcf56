#pragma once

// Random state generators. All draws come from the caller's engine, so a
// fixed seed reproduces the same sample sequence.

#include <cstddef>
#include <random>

#include "isospec/linalg.hpp"

namespace isospec {

using Rng = std::mt19937_64;

/// Normalized complex standard normal vector.
StateVector random_pure_state(std::size_t dim, Rng& rng);

/// tr_C |psi><psi| for a random pure psi on (dimA dimB) (x) C^ancilla.
/// ancilla = 0 means ancilla = dimA * dimB, which gives full rank almost surely.
BipartiteState random_mixed_state(std::size_t dim_a, std::size_t dim_b, Rng& rng, std::size_t ancilla = 0,
                                  double tol = kDefaultTol);

/// Uniform mixture of K random product pure states, K uniform in 1..2 dimA dimB.
BipartiteState random_separable_state(std::size_t dim_a, std::size_t dim_b, Rng& rng, double tol = kDefaultTol);

/// Haar-random unitary from Gram-Schmidt on a complex Ginibre matrix.
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);

/// Random Hermitian matrix (G + G^dagger) / 2 with complex standard normal G.
ComplexMatrix random_hermitian(std::size_t dim, Rng& rng);

}  // namespace isospec
