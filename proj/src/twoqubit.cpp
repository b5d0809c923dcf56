#include "isospec/twoqubit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace isospec {

ComplexMatrix pauli(int i) {
  using namespace std::complex_literals;
  switch (i) {
    case 0: return {{1.0, 0.0}, {0.0, 1.0}};
    case 1: return {{0.0, 1.0}, {1.0, 0.0}};
    case 2: return {{0.0, -1i}, {1i, 0.0}};
    case 3: return {{1.0, 0.0}, {0.0, -1.0}};
    default: throw DomainError("Pauli index must be in 0..3");
  }
}

double RMatrix::max_abs_diff(const RMatrix& other) const {
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) d = std::max(d, std::abs(entries_[i][j] - other.entries_[i][j]));
  }
  return d;
}

RMatrix r_matrix(const ComplexMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) throw DimensionError("R-matrix needs a 4x4 operator");
  RMatrix r;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) r(i, j) = (rho * kron(pauli(i), pauli(j))).trace().real();
  }
  return r;
}

RMatrix r_matrix(const BipartiteState& s) {
  if (s.dim_a() != 2 || s.dim_b() != 2) throw DimensionError("R-matrix is defined for two qubits");
  return r_matrix(s.matrix());
}

ComplexMatrix rho_from_r(const RMatrix& r) {
  if (std::abs(r(0, 0) - 1.0) > 1e-12) throw DomainError("R-matrix must have R_00 = 1");
  ComplexMatrix rho(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (r(i, j) != 0.0) rho += (0.25 * r(i, j)) * kron(pauli(i), pauli(j));
    }
  }
  return rho;
}

ComplexMatrix phase_gate() {
  const auto up = ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}};
  const auto down = ComplexMatrix{{0.0, 0.0}, {0.0, 1.0}};
  return kron(up, pauli(0)) + kron(down, pauli(3));
}

ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& rho) { return u * rho * u.adjoint(); }

namespace {

RMatrix family_base(double r) {
  RMatrix m;
  m(0, 0) = 1.0;
  m(0, 1) = m(1, 0) = m(1, 3) = m(3, 1) = r;
  return m;
}

void check_family_range(double r) {
  if (!(std::abs(r) <= kFamilyRMax + kFamilyBand)) {
    std::ostringstream msg;
    msg << "|r| = " << std::abs(r) << " exceeds 3/8, the state is not positive";
    throw InvalidStateError(StateViolation::NegativeEigenvalue, msg.str());
  }
}

double sorted_diff(const Spectrum& a, const Spectrum& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a.values[k] - b.values[k]));
  return d;
}

}  // namespace

RMatrix family_r_matrix(double r) {
  auto m = family_base(r);
  m(1, 1) = 0.5;
  return m;
}

RMatrix family_prime_r_matrix(double r) {
  auto m = family_base(r);
  m(2, 2) = 0.5;
  return m;
}

BipartiteState family_state(double r, double tol) {
  check_family_range(r);
  return BipartiteState(rho_from_r(family_r_matrix(r)), 2, 2, tol);
}

BipartiteState family_transformed(double r, double tol) {
  check_family_range(r);
  const auto via_gate = conjugate(phase_gate(), rho_from_r(family_r_matrix(r)));
  const auto via_r = rho_from_r(family_prime_r_matrix(r));
  if (const double d = max_abs_diff(via_gate, via_r); d > 1e-12) {
    std::ostringstream msg;
    msg << "phase-gate and swapped-R constructions disagree by " << d;
    throw Error(msg.str());
  }
  return BipartiteState(via_gate, 2, 2, tol);
}

double det_partial_transpose(const BipartiteState& s) {
  if (s.dim_a() != 2 || s.dim_b() != 2) throw DimensionError("determinant test is defined for two qubits");
  double det = 1.0;
  for (double lambda : eigenvalues(partial_transpose(s), s.tol()).values) det *= lambda;
  return det;
}

QubitPairAudit qubit_pair_audit(double r, const std::vector<double>& alphas, double tol) {
  const auto rho = family_state(r, tol);
  const auto rho_prime = family_transformed(r, tol);

  QubitPairAudit audit;
  audit.r = r;
  audit.original = evaluate(rho, alphas);
  audit.transformed = evaluate(rho_prime, alphas);
  audit.det_pt_original = det_partial_transpose(rho);
  audit.det_pt_transformed = det_partial_transpose(rho_prime);
  audit.spectrum_diff = sorted_diff(audit.original.spectrum, audit.transformed.spectrum);
  audit.reduction_diff = std::max(max_abs_diff(reduced_a(rho), reduced_a(rho_prime)),
                                  max_abs_diff(reduced_b(rho), reduced_b(rho_prime)));
  audit.spectra_match = audit.spectrum_diff <= 1e-10;
  audit.reductions_match = audit.reduction_diff <= 1e-10;
  return audit;
}

}  // namespace isospec
