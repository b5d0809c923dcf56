#pragma once

// Two-qubit Pauli-correlation representation and the controlled-phase pair
// of isospectral states with equal reductions.

#include <array>
#include <vector>

#include "isospec/criteria.hpp"
#include "isospec/linalg.hpp"

namespace isospec {

/// sigma_0 = 1, sigma_1..3 = X, Y, Z with sigma_2 = [[0, -i], [i, 0]].
ComplexMatrix pauli(int i);

/// R_ij = tr(rho sigma_i (x) sigma_j), i, j in 0..3.
class RMatrix {
 public:
  RMatrix() = default;
  explicit RMatrix(const std::array<std::array<double, 4>, 4>& entries) : entries_(entries) {}

  double& operator()(std::size_t i, std::size_t j) { return entries_[i][j]; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }

  double max_abs_diff(const RMatrix& other) const;

 private:
  std::array<std::array<double, 4>, 4> entries_{};
};

RMatrix r_matrix(const BipartiteState& s);
RMatrix r_matrix(const ComplexMatrix& rho);

/// rho = 1/4 sum_ij R_ij sigma_i (x) sigma_j. Requires R_00 = 1 (DomainError
/// otherwise); the result is Hermitian with unit trace but NOT necessarily positive.
ComplexMatrix rho_from_r(const RMatrix& r);

/// Controlled phase gate |0><0| (x) 1 + |1><1| (x) sigma_3 = diag(1, 1, 1, -1).
ComplexMatrix phase_gate();

/// U rho U^dagger.
ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& rho);

/// Positivity boundary of the family: |r| <= 3/8.
inline constexpr double kFamilyRMax = 0.375;
/// Slack allowed past kFamilyRMax before family constructors refuse.
inline constexpr double kFamilyBand = 1e-9;

/// R with R_00 = 1, R_01 = R_10 = R_13 = R_31 = r, R_11 = 1/2.
RMatrix family_r_matrix(double r);
/// Same as family_r_matrix with R_11 -> 0 and R_22 -> 1/2.
RMatrix family_prime_r_matrix(double r);

/// rho(r). Throws InvalidStateError when |r| > 3/8 + kFamilyBand.
BipartiteState family_state(double r, double tol = kDefaultTol);
/// rho'(r) = U rho(r) U^dagger, cross-checked against the swapped R' matrix
/// (a disagreement beyond 1e-12 throws Error).
BipartiteState family_transformed(double r, double tol = kDefaultTol);

/// det(rho^{T_A}); negative certifies two-qubit entanglement.
double det_partial_transpose(const BipartiteState& s);

struct QubitPairAudit {
  double r = 0.0;
  CriterionReport original;
  CriterionReport transformed;
  double det_pt_original = 0.0;
  double det_pt_transformed = 0.0;
  double spectrum_diff = 0.0;
  double reduction_diff = 0.0;
  bool spectra_match = false;
  bool reductions_match = false;
};

/// Criteria reports for rho(r) and rho'(r) side by side. Spectra and both
/// reductions are compared at 1e-10.
QubitPairAudit qubit_pair_audit(double r, const std::vector<double>& alphas = default_alpha_grid(),
                                double tol = kDefaultTol);

}  // namespace isospec
