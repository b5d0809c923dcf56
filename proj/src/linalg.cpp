#include "isospec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace isospec {

const char* to_string(StateViolation v) {
  switch (v) {
    case StateViolation::Shape: return "shape mismatch";
    case StateViolation::NonHermitian: return "not Hermitian";
    case StateViolation::Trace: return "trace is not 1";
    case StateViolation::NegativeEigenvalue: return "negative eigenvalue";
  }
  return "invalid state";
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("entry count does not match rows x cols");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> psi, std::span<const Complex> phi) {
  ComplexMatrix m(psi.size(), phi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    for (std::size_t j = 0; j < phi.size(); ++j) m(i, j) = psi[i] * std::conj(phi[j]);
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) throw DimensionError("trace of a non-square matrix");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::norm() const {
  double s = 0.0;
  for (const auto& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix sum shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix difference shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (auto& z : entries_) z *= scalar;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex scalar, ComplexMatrix m) { return m *= scalar; }
ComplexMatrix operator*(ComplexMatrix m, Complex scalar) { return m *= scalar; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

StateVector operator*(const ComplexMatrix& m, std::span<const Complex> v) {
  if (m.cols() != v.size()) throw DimensionError("matrix-vector shape mismatch");
  StateVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("comparing matrices of different shape");
  double d = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) d = std::max(d, std::abs(a.entries()[k] - b.entries()[k]));
  return d;
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("Hermiticity of a non-square matrix");
  double d = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.cols(); ++j) d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
  }
  return d;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1) {
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Complex aij = a(i1, j1);
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2) {
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
          out(i1 * b.rows() + i2, j1 * b.cols() + j2) = aij * b(i2, j2);
        }
      }
    }
  }
  return out;
}

StateVector kron(std::span<const Complex> a, std::span<const Complex> b) {
  StateVector out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(x * y);
  }
  return out;
}

double vector_norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw DimensionError("inner product of vectors of different length");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double Spectrum::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

std::size_t Spectrum::rank() const {
  return static_cast<std::size_t>(std::count_if(values.begin(), values.end(), [&](double v) { return v > tol; }));
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

// Annihilates a(p,q) by A <- J^dagger A J, V <- V J, where J is the identity
// outside rows/cols p,q. With a(p,q) = g e^{i phi}, J = diag(1, e^{-i phi}) R
// and R is the real symmetric Jacobi rotation for the phase-stripped block.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double g = std::abs(apq);
  const Complex phase = apq / g;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * g);
  const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex jpp = c;
  const Complex jpq = s;
  const Complex jqp = -s * std::conj(phase);
  const Complex jqq = c * std::conj(phase);

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * jpp + akq * jqp;
    a(k, q) = akp * jpq + akq * jqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * jpp + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * jqq;
  }
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& m, double tol) {
  if (!m.is_square() || m.rows() == 0) throw DimensionError("eigendecomposition needs a non-empty square matrix");
  const double scale = std::max(1.0, m.max_abs());
  if (const double defect = hermiticity_defect(m); defect > tol * scale) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian (defect " << defect << ")";
    throw DomainError(msg.str());
  }

  const std::size_t n = m.rows();
  ComplexMatrix a = 0.5 * (m + m.adjoint());
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double fro = a.norm();

  int sweep = 0;
  for (; sweep < kMaxJacobiSweeps; ++sweep) {
    const double off = off_diagonal_norm(a);
    if (off == 0.0 || off <= 1e-15 * fro) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double g = std::abs(a(p, q));
        if (g == 0.0) continue;
        if (sweep > 3 && g < 1e-18 * fro) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        rotate(a, v, p, q);
      }
    }
  }
  if (sweep == kMaxJacobiSweeps) throw ConvergenceError("Jacobi eigensolver did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition out{Spectrum{std::vector<double>(n), tol}, ComplexMatrix(n, n)};
  for (std::size_t c = 0; c < n; ++c) {
    out.spectrum.values[c] = a(order[c], order[c]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = v(r, order[c]);
  }
  return out;
}

Spectrum eigenvalues(const ComplexMatrix& m, double tol) { return hermitian_eig(m, tol).spectrum; }

ComplexMatrix apply_function(const ComplexMatrix& m, const std::function<double(double)>& f, double tol) {
  const auto eig = hermitian_eig(m, tol);
  const std::size_t n = m.rows();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = f(eig.spectrum.values[k]);
    if (fk == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = fk * eig.vectors(i, k);
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(eig.vectors(j, k));
    }
  }
  return out;
}

ComplexMatrix hermitian_exp(const ComplexMatrix& m, double tol) {
  return apply_function(m, [](double x) { return std::exp(x); }, tol);
}

namespace {

void check_psd(const Spectrum& spectrum) {
  if (spectrum.min() < -spectrum.tol) {
    std::ostringstream msg;
    msg << "minimum eigenvalue " << spectrum.min() << " below -" << spectrum.tol;
    throw InvalidStateError(StateViolation::NegativeEigenvalue, msg.str());
  }
}

// lambda^alpha with eigenvalues <= tol treated as exact zeros. For alpha <= 0
// such eigenvalues are excluded and `dropped` is raised.
double scalar_power(double lambda, double alpha, double tol, bool& dropped) {
  if (lambda <= tol) {
    if (alpha <= 0.0) dropped = true;
    return 0.0;
  }
  return std::pow(lambda, alpha);
}

}  // namespace

PowerResult matrix_power(const ComplexMatrix& m, double alpha, double tol) {
  const auto eig = hermitian_eig(m, tol);
  check_psd(eig.spectrum);
  bool dropped = false;
  const std::size_t n = m.rows();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double pk = scalar_power(eig.spectrum.values[k], alpha, tol, dropped);
    if (pk == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = pk * eig.vectors(i, k);
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(eig.vectors(j, k));
    }
  }
  // tr(m^0) = rank is a property of the support; for alpha == 0 nothing diverges.
  return {std::move(out), dropped && alpha < 0.0};
}

PowerTrace power_trace(const Spectrum& spectrum, double alpha) {
  check_psd(spectrum);
  bool dropped = false;
  double t = 0.0;
  for (double lambda : spectrum.values) t += scalar_power(lambda, alpha, spectrum.tol, dropped);
  return {t, dropped && alpha < 0.0};
}

void validate_density_matrix(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b, double tol) {
  if (dim_a == 0 || dim_b == 0) {
    throw InvalidStateError(StateViolation::Shape, "subsystem dimensions must be positive");
  }
  if (!m.is_square() || m.rows() != dim_a * dim_b) {
    std::ostringstream msg;
    msg << "matrix is " << m.rows() << "x" << m.cols() << " but dimA*dimB = " << dim_a * dim_b;
    throw InvalidStateError(StateViolation::Shape, msg.str());
  }
  if (const double defect = hermiticity_defect(m); defect > tol) {
    std::ostringstream msg;
    msg << "max |M - M^dagger| = " << defect << " exceeds " << tol;
    throw InvalidStateError(StateViolation::NonHermitian, msg.str());
  }
  if (const Complex tr = m.trace(); std::abs(tr - 1.0) > tol) {
    std::ostringstream msg;
    msg << "trace = " << tr.real() << " differs from 1 by more than " << tol;
    throw InvalidStateError(StateViolation::Trace, msg.str());
  }
  check_psd(eigenvalues(m, tol));
}

BipartiteState::BipartiteState(ComplexMatrix matrix, std::size_t dim_a, std::size_t dim_b, double tol)
    : matrix_(std::move(matrix)), dim_a_(dim_a), dim_b_(dim_b), tol_(tol) {
  validate_density_matrix(matrix_, dim_a_, dim_b_, tol_);
}

BipartiteState BipartiteState::from_pure(std::span<const Complex> psi, std::size_t dim_a, std::size_t dim_b,
                                         double tol) {
  return BipartiteState(ComplexMatrix::projector(psi), dim_a, dim_b, tol);
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b, Subsystem traced_out) {
  if (!m.is_square() || m.rows() != dim_a * dim_b) throw DimensionError("partial trace: matrix does not match dimA*dimB");
  if (traced_out == Subsystem::B) {
    ComplexMatrix out(dim_a, dim_a);
    for (std::size_t i = 0; i < dim_a; ++i) {
      for (std::size_t j = 0; j < dim_a; ++j) {
        for (std::size_t k = 0; k < dim_b; ++k) out(i, j) += m(i * dim_b + k, j * dim_b + k);
      }
    }
    return out;
  }
  ComplexMatrix out(dim_b, dim_b);
  for (std::size_t i = 0; i < dim_b; ++i) {
    for (std::size_t j = 0; j < dim_b; ++j) {
      for (std::size_t k = 0; k < dim_a; ++k) out(i, j) += m(k * dim_b + i, k * dim_b + j);
    }
  }
  return out;
}

ComplexMatrix partial_trace(const BipartiteState& s, Subsystem traced_out) {
  return partial_trace(s.matrix(), s.dim_a(), s.dim_b(), traced_out);
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b) {
  if (!m.is_square() || m.rows() != dim_a * dim_b) throw DimensionError("partial transpose: matrix does not match dimA*dimB");
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t k = 0; k < dim_a; ++k) {
    for (std::size_t l = 0; l < dim_b; ++l) {
      for (std::size_t mm = 0; mm < dim_a; ++mm) {
        for (std::size_t n = 0; n < dim_b; ++n) {
          out(k * dim_b + l, mm * dim_b + n) = m(mm * dim_b + l, k * dim_b + n);
        }
      }
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const BipartiteState& s) { return partial_transpose(s.matrix(), s.dim_a(), s.dim_b()); }

std::vector<double> schmidt_coefficients(std::span<const Complex> psi, std::size_t dim_a, std::size_t dim_b,
                                         double tol) {
  if (psi.size() != dim_a * dim_b) throw DimensionError("state vector length does not match dimA*dimB");
  if (std::abs(vector_norm(psi) - 1.0) > tol) throw DomainError("state vector is not normalized");
  const auto rho_a = partial_trace(ComplexMatrix::projector(psi), dim_a, dim_b, Subsystem::B);
  const auto spectrum = eigenvalues(rho_a, tol);
  std::vector<double> out;
  for (auto it = spectrum.values.rbegin(); it != spectrum.values.rend(); ++it) {
    if (*it > tol) out.push_back(*it);
  }
  return out;
}

}  // namespace isospec
