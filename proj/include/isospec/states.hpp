#pragma once

// Named bipartite states: Werner family, the maximally entangled basis, the
// separable projectors built from it, and separable isospectral counterparts.

#include <cstddef>
#include <vector>

#include "isospec/linalg.hpp"

namespace isospec {

/// Swap operator F|i,j> = |j,i> on C^d (x) C^d.
ComplexMatrix flip_operator(std::size_t d);
/// (1 + F) / 2, rank (d^2 + d) / 2.
ComplexMatrix symmetric_projector(std::size_t d);
/// (1 - F) / 2, rank (d^2 - d) / 2.
ComplexMatrix antisymmetric_projector(std::size_t d);

inline std::size_t symmetric_rank(std::size_t d) { return (d * d + d) / 2; }
inline std::size_t antisymmetric_rank(std::size_t d) { return (d * d - d) / 2; }

/// (1-p) P+/r+ + p P-/r-. Entangled iff p > 1/2.
BipartiteState werner(std::size_t d, double p, double tol = kDefaultTol);

/// Maximally entangled basis vector
///   (1/sqrt d) sum_n exp(2 pi i j n / d) |n, n+k mod d>.
/// j and k are 1-based (1..d); k = d is the same shift as k = 0.
StateVector me_basis_state(std::size_t d, std::size_t j, std::size_t k);

/// P_k = sum_n |n><n| (x) |n+k><n+k|, the diagonal product form (k 1-based).
ComplexMatrix separable_projector(std::size_t d, std::size_t k);
/// P_k = sum_j |Psi_jk><Psi_jk|, the same operator assembled from the ME basis.
ComplexMatrix separable_projector_from_me_basis(std::size_t d, std::size_t k);

struct SpectrumBlock {
  double eigenvalue = 0.0;
  std::size_t multiplicity = 0;
};
using SpectrumBlocks = std::vector<SpectrumBlock>;

/// The two Werner eigenvalue blocks {((1-p)/r+, r+), (p/r-, r-)}.
SpectrumBlocks werner_blocks(std::size_t d, double p);

/// Separable state with the given spectrum and maximally mixed reductions.
///
/// Each block consumes multiplicity/d consecutive projectors P_k, starting at
/// k = 1 and continuing in input order. Throws DomainError when a multiplicity
/// is not a multiple of d, the blocks need more than d projectors or do not
/// cover all d^2 dimensions, and InvalidStateError when the spectrum is not
/// normalized within tol.
BipartiteState isospectral_counterpart(const SpectrumBlocks& blocks, std::size_t d, double tol = kDefaultTol);

/// Counterpart of werner(d, p) for odd d; DomainError for even d.
BipartiteState werner_counterpart(std::size_t d, double p, double tol = kDefaultTol);

/// (|Phi+><Phi+| + |01><01|) / 2 on two qubits.
BipartiteState rank_counterexample(double tol = kDefaultTol);

}  // namespace isospec
