#include "isospec/sampling.hpp"

#include <cmath>

namespace isospec {

namespace {

Complex complex_normal(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

StateVector ginibre_vector(std::size_t dim, Rng& rng) {
  StateVector v(dim);
  for (auto& z : v) z = complex_normal(rng);
  return v;
}

}  // namespace

StateVector random_pure_state(std::size_t dim, Rng& rng) {
  auto v = ginibre_vector(dim, rng);
  const double n = vector_norm(v);
  for (auto& z : v) z /= n;
  return v;
}

BipartiteState random_mixed_state(std::size_t dim_a, std::size_t dim_b, Rng& rng, std::size_t ancilla, double tol) {
  const std::size_t dim = dim_a * dim_b;
  if (ancilla == 0) ancilla = dim;
  const auto psi = random_pure_state(dim * ancilla, rng);
  auto rho = partial_trace(ComplexMatrix::projector(psi), dim, ancilla, Subsystem::B);
  return BipartiteState(std::move(rho), dim_a, dim_b, tol);
}

BipartiteState random_separable_state(std::size_t dim_a, std::size_t dim_b, Rng& rng, double tol) {
  std::uniform_int_distribution<std::size_t> count(1, 2 * dim_a * dim_b);
  const std::size_t terms = count(rng);
  ComplexMatrix rho(dim_a * dim_b, dim_a * dim_b);
  for (std::size_t t = 0; t < terms; ++t) {
    const auto a = random_pure_state(dim_a, rng);
    const auto b = random_pure_state(dim_b, rng);
    rho += ComplexMatrix::projector(kron(a, b));
  }
  rho *= 1.0 / static_cast<double>(terms);
  return BipartiteState(std::move(rho), dim_a, dim_b, tol);
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  std::vector<StateVector> columns;
  columns.reserve(dim);
  while (columns.size() < dim) {
    auto v = ginibre_vector(dim, rng);
    for (const auto& q : columns) {
      const Complex overlap = inner(q, v);
      for (std::size_t i = 0; i < dim; ++i) v[i] -= overlap * q[i];
    }
    const double n = vector_norm(v);
    if (n < 1e-8) continue;
    for (auto& z : v) z /= n;
    columns.push_back(std::move(v));
  }
  ComplexMatrix u(dim, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t r = 0; r < dim; ++r) u(r, c) = columns[c][r];
  }
  return u;
}

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
  ComplexMatrix g(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = complex_normal(rng);
  }
  return 0.5 * (g + g.adjoint());
}

}  // namespace isospec
