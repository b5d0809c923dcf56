#pragma once

// Test-only reference computations. Everything here goes through Eigen so it
// shares no code path with the library routines it checks.

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <vector>

#include "isospec/linalg.hpp"

namespace oracle {

using Mat = Eigen::MatrixXcd;

inline Mat to_eigen(const isospec::ComplexMatrix& m) {
  Mat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

inline isospec::ComplexMatrix from_eigen(const Mat& m) {
  isospec::ComplexMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

/// Ascending eigenvalues from Eigen's self-adjoint solver.
inline std::vector<double> eigenvalues(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

inline std::vector<double> eigenvalues(const isospec::ComplexMatrix& m) { return oracle::eigenvalues(to_eigen(m)); }

inline double min_eigenvalue(const isospec::ComplexMatrix& m) { return oracle::eigenvalues(m).front(); }

/// sum_k lambda_k^alpha over eigenvalues above tol (0^alpha := 0).
inline double power_trace(const std::vector<double>& ev, double alpha, double tol = 1e-10) {
  double t = 0.0;
  for (double l : ev) {
    if (l > tol) t += std::pow(l, alpha);
  }
  return t;
}

inline Mat kron(const Mat& a, const Mat& b) { return Eigen::kroneckerProduct(a, b).eval(); }

/// Block view: rho = sum_ij |i><j| (x) B_ij with B_ij a dimB x dimB block.
inline Mat partial_trace_b(const Mat& rho, Eigen::Index da, Eigen::Index db) {
  Mat out(da, da);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) out(i, j) = rho.block(i * db, j * db, db, db).trace();
  }
  return out;
}

inline Mat partial_trace_a(const Mat& rho, Eigen::Index da, Eigen::Index db) {
  Mat out = Mat::Zero(db, db);
  for (Eigen::Index i = 0; i < da; ++i) out += rho.block(i * db, i * db, db, db);
  return out;
}

inline Mat partial_transpose_a(const Mat& rho, Eigen::Index da, Eigen::Index db) {
  Mat out(rho.rows(), rho.cols());
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) out.block(j * db, i * db, db, db) = rho.block(i * db, j * db, db, db);
  }
  return out;
}

inline double max_diff(const Mat& a, const Mat& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace oracle
