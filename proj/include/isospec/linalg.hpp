#pragma once

// Dense complex linear algebra for small bipartite systems.
//
// Index convention: subsystem A is the leftmost tensor factor. The product
// basis vector |i,k> (i < dimA, k < dimB) sits at row-major index i*dimB + k.

#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "isospec/errors.hpp"

namespace isospec {

using Complex = std::complex<double>;
using StateVector = std::vector<Complex>;

inline constexpr double kDefaultTol = 1e-10;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  /// Row-wise literal, e.g. {{1, 0}, {0, -1}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static ComplexMatrix diagonal(std::span<const double> values);
  /// |psi><phi|
  static ComplexMatrix outer(std::span<const Complex> psi, std::span<const Complex> phi);
  static ComplexMatrix projector(std::span<const Complex> psi) { return outer(psi, psi); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;
  /// Largest entry modulus.
  double max_abs() const;
  /// Frobenius norm.
  double norm() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex scalar);
StateVector operator*(const ComplexMatrix& m, std::span<const Complex> v);

/// max_{ij} |a_ij - b_ij|; throws DimensionError on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// max_{ij} |m_ij - conj(m_ji)|
double hermiticity_defect(const ComplexMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
StateVector kron(std::span<const Complex> a, std::span<const Complex> b);

double vector_norm(std::span<const Complex> v);
Complex inner(std::span<const Complex> a, std::span<const Complex> b);  // <a|b>

/// Sorted (ascending) real eigenvalues carrying the tolerance used to produce them.
struct Spectrum {
  std::vector<double> values;
  double tol = kDefaultTol;

  std::size_t size() const noexcept { return values.size(); }
  double min() const { return values.front(); }
  double max() const { return values.back(); }
  double sum() const;
  /// Number of eigenvalues strictly above tol.
  std::size_t rank() const;
};

struct EigenDecomposition {
  Spectrum spectrum;
  /// Column j is the normalized eigenvector for spectrum.values[j].
  ComplexMatrix vectors;
};

/// Cyclic complex Jacobi eigensolver for Hermitian matrices.
///
/// Throws DimensionError for non-square input, DomainError if the input is
/// not Hermitian within tol (relative to max(1, max|m_ij|)), and
/// ConvergenceError after kMaxJacobiSweeps sweeps.
EigenDecomposition hermitian_eig(const ComplexMatrix& m, double tol = kDefaultTol);
Spectrum eigenvalues(const ComplexMatrix& m, double tol = kDefaultTol);

inline constexpr int kMaxJacobiSweeps = 100;

/// V f(diag) V^dagger for Hermitian m.
ComplexMatrix apply_function(const ComplexMatrix& m, const std::function<double(double)>& f,
                             double tol = kDefaultTol);
ComplexMatrix hermitian_exp(const ComplexMatrix& m, double tol = kDefaultTol);

/// Result of raising a PSD operator (or its spectrum) to a real power.
struct PowerResult {
  ComplexMatrix matrix;
  /// Set when alpha <= 0 and some eigenvalues were dropped as zero.
  bool support_restricted = false;
};

struct PowerTrace {
  double value = 0.0;
  bool support_restricted = false;
};

/// m^alpha on the eigenbasis of m. Eigenvalues <= tol count as exact zeros:
/// 0^alpha = 0 for alpha > 0, and for alpha <= 0 they are dropped (so that
/// tr m^0 equals rank). Throws InvalidStateError if an eigenvalue is below -tol.
PowerResult matrix_power(const ComplexMatrix& m, double alpha, double tol = kDefaultTol);

/// tr(m^alpha) computed from a spectrum with the same zero convention as matrix_power.
PowerTrace power_trace(const Spectrum& spectrum, double alpha);

enum class Subsystem { A, B };

/// A density matrix on C^dimA (x) C^dimB.
///
/// Construction validates shape, Hermiticity, unit trace and positivity
/// against tol and throws InvalidStateError on the first violated invariant.
class BipartiteState {
 public:
  BipartiteState(ComplexMatrix matrix, std::size_t dim_a, std::size_t dim_b,
                 double tol = kDefaultTol);

  static BipartiteState from_pure(std::span<const Complex> psi, std::size_t dim_a,
                                  std::size_t dim_b, double tol = kDefaultTol);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim_a() const noexcept { return dim_a_; }
  std::size_t dim_b() const noexcept { return dim_b_; }
  std::size_t dim() const noexcept { return dim_a_ * dim_b_; }
  double tol() const noexcept { return tol_; }

 private:
  ComplexMatrix matrix_;
  std::size_t dim_a_;
  std::size_t dim_b_;
  double tol_;
};

/// Checks every BipartiteState invariant; throws InvalidStateError.
void validate_density_matrix(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b,
                             double tol = kDefaultTol);

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b,
                            Subsystem traced_out);
/// Reduced state of the subsystem that is kept, i.e. tr_B for which = B yields rho_A.
ComplexMatrix partial_trace(const BipartiteState& s, Subsystem traced_out);
inline ComplexMatrix reduced_a(const BipartiteState& s) { return partial_trace(s, Subsystem::B); }
inline ComplexMatrix reduced_b(const BipartiteState& s) { return partial_trace(s, Subsystem::A); }

/// Transpose on subsystem A: <k l|m^{T_A}|m n> = <m l|m|k n>.
ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b);
ComplexMatrix partial_transpose(const BipartiteState& s);

/// Schmidt coefficients (squared) of a normalized pure state, descending, zeros dropped.
std::vector<double> schmidt_coefficients(std::span<const Complex> psi, std::size_t dim_a,
                                         std::size_t dim_b, double tol = kDefaultTol);

}  // namespace isospec
