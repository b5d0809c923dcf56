#include "isospec/states.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace isospec {

namespace {

void require_dimension(std::size_t d) {
  if (d < 2) throw DomainError("local dimension must be at least 2");
}

void require_index(std::size_t d, std::size_t index, const char* name) {
  if (index < 1 || index > d) {
    std::ostringstream msg;
    msg << name << " = " << index << " outside 1.." << d;
    throw DomainError(msg.str());
  }
}

}  // namespace

ComplexMatrix flip_operator(std::size_t d) {
  require_dimension(d);
  ComplexMatrix f(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) f(j * d + i, i * d + j) = 1.0;
  }
  return f;
}

ComplexMatrix symmetric_projector(std::size_t d) {
  return 0.5 * (ComplexMatrix::identity(d * d) + flip_operator(d));
}

ComplexMatrix antisymmetric_projector(std::size_t d) {
  return 0.5 * (ComplexMatrix::identity(d * d) - flip_operator(d));
}

BipartiteState werner(std::size_t d, double p, double tol) {
  require_dimension(d);
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("Werner parameter p must lie in [0, 1]");
  const double r_plus = static_cast<double>(symmetric_rank(d));
  const double r_minus = static_cast<double>(antisymmetric_rank(d));
  auto rho = ((1.0 - p) / r_plus) * symmetric_projector(d) + (p / r_minus) * antisymmetric_projector(d);
  return BipartiteState(std::move(rho), d, d, tol);
}

StateVector me_basis_state(std::size_t d, std::size_t j, std::size_t k) {
  require_dimension(d);
  require_index(d, j, "j");
  require_index(d, k, "k");
  StateVector psi(d * d);
  const double amplitude = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t n = 0; n < d; ++n) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * n) % d) / static_cast<double>(d);
    psi[n * d + (n + k) % d] = amplitude * std::polar(1.0, angle);
  }
  return psi;
}

ComplexMatrix separable_projector(std::size_t d, std::size_t k) {
  require_dimension(d);
  require_index(d, k, "k");
  ComplexMatrix p(d * d, d * d);
  for (std::size_t n = 0; n < d; ++n) {
    const std::size_t idx = n * d + (n + k) % d;
    p(idx, idx) = 1.0;
  }
  return p;
}

ComplexMatrix separable_projector_from_me_basis(std::size_t d, std::size_t k) {
  require_dimension(d);
  require_index(d, k, "k");
  ComplexMatrix p(d * d, d * d);
  for (std::size_t j = 1; j <= d; ++j) p += ComplexMatrix::projector(me_basis_state(d, j, k));
  return p;
}

SpectrumBlocks werner_blocks(std::size_t d, double p) {
  require_dimension(d);
  const std::size_t r_plus = symmetric_rank(d);
  const std::size_t r_minus = antisymmetric_rank(d);
  return {{(1.0 - p) / static_cast<double>(r_plus), r_plus}, {p / static_cast<double>(r_minus), r_minus}};
}

BipartiteState isospectral_counterpart(const SpectrumBlocks& blocks, std::size_t d, double tol) {
  require_dimension(d);
  std::size_t total = 0;
  double norm = 0.0;
  for (const auto& block : blocks) {
    if (block.multiplicity == 0 || block.multiplicity % d != 0) {
      std::ostringstream msg;
      msg << "multiplicity " << block.multiplicity << " is not a positive multiple of d = " << d;
      throw DomainError(msg.str());
    }
    if (block.eigenvalue < -tol) {
      throw InvalidStateError(StateViolation::NegativeEigenvalue, "spectrum block has a negative eigenvalue");
    }
    total += block.multiplicity;
    norm += block.eigenvalue * static_cast<double>(block.multiplicity);
  }
  if (total > d * d) throw DomainError("spectrum blocks need more than d separable projectors");
  if (total < d * d) throw DomainError("spectrum block multiplicities must sum to d^2");
  if (std::abs(norm - 1.0) > tol) {
    std::ostringstream msg;
    msg << "spectrum sums to " << norm;
    throw InvalidStateError(StateViolation::Trace, msg.str());
  }

  ComplexMatrix rho(d * d, d * d);
  std::size_t k = 1;
  for (const auto& block : blocks) {
    for (std::size_t used = 0; used < block.multiplicity / d; ++used, ++k) {
      rho += block.eigenvalue * separable_projector(d, k);
    }
  }
  return BipartiteState(std::move(rho), d, d, tol);
}

BipartiteState werner_counterpart(std::size_t d, double p, double tol) {
  require_dimension(d);
  if (d % 2 == 0) {
    throw DomainError("Werner counterparts need odd d: the eigenvalue multiplicities are not multiples of d");
  }
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("Werner parameter p must lie in [0, 1]");
  return isospectral_counterpart(werner_blocks(d, p), d, tol);
}

BipartiteState rank_counterexample(double tol) {
  const double s = 1.0 / std::sqrt(2.0);
  const StateVector phi_plus{s, 0.0, 0.0, s};
  const StateVector ket01{0.0, 1.0, 0.0, 0.0};
  auto rho = 0.5 * (ComplexMatrix::projector(phi_plus) + ComplexMatrix::projector(ket01));
  return BipartiteState(std::move(rho), 2, 2, tol);
}

}  // namespace isospec
