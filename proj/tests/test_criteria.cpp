#include <doctest.h>

#include <cmath>

#include "isospec/criteria.hpp"
#include "isospec/sampling.hpp"
#include "isospec/states.hpp"
#include "isospec/twoqubit.hpp"
#include "oracles.hpp"

using namespace isospec;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

BipartiteState phi_plus_state() { return BipartiteState::from_pure(StateVector{kInvSqrt2, 0.0, 0.0, kInvSqrt2}, 2, 2); }

BipartiteState maximally_mixed(std::size_t da, std::size_t db) {
  return BipartiteState((1.0 / static_cast<double>(da * db)) * ComplexMatrix::identity(da * db), da, db);
}

// tr(rho_A^alpha) - tr(rho^alpha) through Eigen.
double oracle_gap(const BipartiteState& s, double alpha) {
  const auto m = oracle::to_eigen(s.matrix());
  const auto ra = oracle::partial_trace_b(m, s.dim_a(), s.dim_b());
  return oracle::power_trace(oracle::eigenvalues(ra), alpha) - oracle::power_trace(oracle::eigenvalues(m), alpha);
}

BipartiteState locally_rotated(const BipartiteState& s, Rng& rng) {
  const auto u = kron(random_unitary(s.dim_a(), rng), random_unitary(s.dim_b(), rng));
  auto m = u * s.matrix() * u.adjoint();
  m = 0.5 * (m + m.adjoint());
  return BipartiteState(std::move(m), s.dim_a(), s.dim_b());
}

}  // namespace

TEST_CASE("renyi_entropy") {
  for (std::size_t d : {2u, 3u, 4u}) {
    const auto rho = (1.0 / static_cast<double>(d)) * ComplexMatrix::identity(d);
    for (double alpha : {0.0, 0.5, 1.0, 2.0, 3.0, kInfinity}) {
      CHECK(renyi_entropy(rho, alpha) == doctest::Approx(std::log(static_cast<double>(d))).epsilon(1e-12));
    }
  }

  const auto pure = ComplexMatrix::projector(StateVector{0.6, Complex(0.0, 0.8)});
  for (double alpha : {0.0, 0.5, 1.0, 2.0, kInfinity}) CHECK(std::abs(renyi_entropy(pure, alpha)) <= 1e-12);

  SUBCASE("diag(3/4, 1/4) at alpha = 2") {
    const std::vector<double> d{0.75, 0.25};
    const auto rho = ComplexMatrix::diagonal(d);
    const double expected = -std::log(oracle::power_trace(oracle::eigenvalues(rho), 2.0));
    CHECK(expected == doctest::Approx(std::log(8.0 / 5.0)).epsilon(1e-14));
    CHECK(renyi_entropy(rho, 2.0) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(renyi_entropy(rho, 1.0) == doctest::Approx(-(0.75 * std::log(0.75) + 0.25 * std::log(0.25))).epsilon(1e-12));
    CHECK(renyi_entropy(rho, kInfinity) == doctest::Approx(-std::log(0.75)).epsilon(1e-12));
  }

  CHECK_THROWS_AS(renyi_entropy(pure, -1.0), DomainError);
}

TEST_CASE("entropic_gap") {
  Rng rng(8);
  SUBCASE("product with a pure B factor has zero gap") {
    const auto a = random_mixed_state(3, 1, rng);
    const auto b = ComplexMatrix::projector(random_pure_state(2, rng));
    const BipartiteState s(kron(a.matrix(), b), 3, 2);
    for (double alpha : {0.0, 0.25, 0.5, 1.5, 2.0, 5.0}) CHECK(std::abs(entropic_gap(s, alpha)) <= 1e-10);
  }
  SUBCASE("rank counterexample at alpha = 2") {
    const auto s = rank_counterexample();
    CHECK(oracle_gap(s, 2.0) == doctest::Approx(0.125).epsilon(1e-14));
    CHECK(entropic_gap(s, 2.0) == doctest::Approx(0.125).epsilon(1e-12));
  }
  SUBCASE("maximally entangled state at alpha = 2") {
    const auto s = phi_plus_state();
    CHECK(oracle_gap(s, 2.0) == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(entropic_gap(s, 2.0) == doctest::Approx(-0.5).epsilon(1e-12));
  }
  SUBCASE("matches the oracle on random states") {
    for (int trial = 0; trial < 20; ++trial) {
      const auto s = random_mixed_state(2, 3, rng);
      for (double alpha : {0.25, 0.5, 2.0, 3.0}) CHECK(std::abs(entropic_gap(s, alpha) - oracle_gap(s, alpha)) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(entropic_gap(phi_plus_state(), -1.0), DomainError);
  CHECK_THROWS_AS(entropic_gap(phi_plus_state(), kInfinity), DomainError);
}

TEST_CASE("conditional_tsallis") {
  SUBCASE("rank counterexample") {
    const auto s = rank_counterexample();
    CHECK(conditional_tsallis(s, 2.0).value == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(std::abs(conditional_tsallis(s, 0.0).value) <= 1e-12);
    CHECK(conditional_tsallis(s, kInfinity).value == 0.0);
  }
  SUBCASE("independent maximally mixed qubits are strictly positive") {
    const auto s = maximally_mixed(2, 2);
    for (double alpha : {0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 5.0}) CHECK(conditional_tsallis(s, alpha).value > 0.0);
  }
  SUBCASE("singlet at alpha = 2") {
    const auto s = werner(2, 1.0);
    const auto m = oracle::to_eigen(s.matrix());
    const double tr_a = oracle::power_trace(oracle::eigenvalues(oracle::partial_trace_b(m, 2, 2)), 2.0);
    const double tr = oracle::power_trace(oracle::eigenvalues(m), 2.0);
    const double expected = (tr_a - tr) / tr_a;
    CHECK(expected == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(conditional_tsallis(s, 2.0).value == doctest::Approx(expected).epsilon(1e-12));
    CHECK(conditional_tsallis(s, kInfinity).value == -kInfinity);
  }
  SUBCASE("continuity at alpha = 1") {
    Rng rng(21);
    for (int trial = 0; trial < 50; ++trial) {
      const auto s = random_mixed_state(2, 3, rng);
      const double t1 = conditional_tsallis(s, 1.0).value;
      CHECK(std::abs(conditional_tsallis(s, 1.0 + 1e-4).value - t1) <= 1e-3);
      CHECK(std::abs(conditional_tsallis(s, 1.0 - 1e-4).value - t1) <= 1e-3);
    }
  }
  SUBCASE("negative alpha on a singular state is flagged") {
    CHECK(conditional_tsallis(rank_counterexample(), -1.0).support_restricted);
    CHECK_FALSE(conditional_tsallis(maximally_mixed(2, 2), -1.0).support_restricted);
  }
}

TEST_CASE("reduction and PPT criteria") {
  Rng rng(4);
  SUBCASE("product states pass both") {
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = random_mixed_state(2, 1, rng);
      const auto b = random_mixed_state(3, 1, rng);
      const BipartiteState s(kron(a.matrix(), b.matrix()), 2, 3);
      CHECK(reduction_criterion(s) >= -kDefaultTol);
      CHECK(ppt_criterion(s) >= -kDefaultTol);
    }
  }
  SUBCASE("maximally entangled and singlet states") {
    for (const auto& s : {phi_plus_state(), werner(2, 1.0)}) {
      const auto m = oracle::to_eigen(s.matrix());
      const oracle::Mat op = oracle::kron(oracle::partial_trace_b(m, 2, 2), oracle::Mat::Identity(2, 2)) - m;
      const double red = oracle::eigenvalues(op).front();
      const double pt = oracle::eigenvalues(oracle::partial_transpose_a(m, 2, 2)).front();
      CHECK(red == doctest::Approx(-0.5).epsilon(1e-14));
      CHECK(pt == doctest::Approx(-0.5).epsilon(1e-14));
      CHECK(reduction_criterion(s) == doctest::Approx(red).epsilon(1e-12));
      CHECK(ppt_criterion(s) == doctest::Approx(pt).epsilon(1e-12));
    }
  }
  SUBCASE("Werner states fail PPT exactly when p > 1/2") {
    for (std::size_t d : {2u, 3u, 4u}) {
      CHECK(ppt_criterion(werner(d, 0.45)) >= -kDefaultTol);
      CHECK(ppt_criterion(werner(d, 0.5)) >= -kDefaultTol);
      CHECK(ppt_criterion(werner(d, 0.55)) < -kDefaultTol);
    }
  }
  SUBCASE("separable constructions pass PPT") {
    for (double p : {0.0, 0.5, 1.0}) CHECK(ppt_criterion(werner_counterpart(3, p)) >= -kDefaultTol);
    CHECK(ppt_criterion(family_state(0.3)) >= -kDefaultTol);
  }
}

TEST_CASE("negative_alpha_bound") {
  SUBCASE("maximally mixed d x d at alpha = -1") {
    for (std::size_t d : {2u, 3u}) {
      const auto s = maximally_mixed(d, d);
      const auto m = oracle::to_eigen(s.matrix());
      const double expected = oracle::power_trace(oracle::eigenvalues(m), -1.0) -
                              oracle::power_trace(oracle::eigenvalues(oracle::partial_trace_b(m, d, d)), -1.0);
      const double dd = static_cast<double>(d);
      CHECK(expected == doctest::Approx(dd * dd * (dd * dd - 1.0)).epsilon(1e-12));
      const auto got = negative_alpha_bound(s, -1.0);
      CHECK(got.value == doctest::Approx(expected).epsilon(1e-10));
      CHECK_FALSE(got.support_restricted);
    }
  }
  SUBCASE("random full-rank two-qubit states") {
    Rng rng(17);
    for (int trial = 0; trial < 200; ++trial) {
      CHECK(negative_alpha_bound(random_mixed_state(2, 2, rng), -1.0).value >= -kDefaultTol);
    }
  }
  SUBCASE("full-rank Werner mixtures at alpha = -2") {
    for (double p : {0.1, 0.5, 0.9, 0.99}) CHECK(negative_alpha_bound(werner(2, p), -2.0).value >= -kDefaultTol);
  }
  CHECK_THROWS_AS(negative_alpha_bound(maximally_mixed(2, 2), 0.5), DomainError);
}

TEST_CASE("proposition1_harness") {
  Rng rng(31);
  const std::vector<double> alphas{0.25, 0.5, 1.5, 2.0, 3.0};
  SUBCASE("random separable mixtures") {
    std::size_t violations = 0;
    for (auto [da, db] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 3}}) {
      for (int trial = 0; trial < 1000; ++trial) {
        const auto result = proposition1_harness(random_separable_state(da, db, rng), alphas);
        REQUIRE(result.applicable);
        violations += result.violations();
      }
    }
    CHECK(violations == 0);
  }
  SUBCASE("Werner state inside the reduction region") {
    const auto s = werner(3, 0.4);
    CHECK(reduction_criterion(s) >= -kDefaultTol);
    const auto result = proposition1_harness(s, alphas);
    CHECK(result.applicable);
    CHECK(result.checks.size() == alphas.size());
    CHECK(result.violations() == 0);
  }
  SUBCASE("entangled pure state is not applicable") {
    const auto result = proposition1_harness(phi_plus_state(), alphas);
    CHECK_FALSE(result.applicable);
    CHECK(result.checks.empty());
  }
}

TEST_CASE("horodecki_chsh") {
  CHECK(std::abs(horodecki_chsh(maximally_mixed(2, 2))) <= 1e-15);

  const auto phi = phi_plus_state();
  const auto r = r_matrix(phi);
  CHECK(r(1, 1) == doctest::Approx(1.0));
  CHECK(r(2, 2) == doctest::Approx(-1.0));
  CHECK(r(3, 3) == doctest::Approx(1.0));
  CHECK(horodecki_chsh(phi) == doctest::Approx(2.0).epsilon(1e-12));

  CHECK(horodecki_chsh(family_transformed(0.3)) <= 1.0);
  CHECK_THROWS_AS(horodecki_chsh(werner(3, 0.2)), DimensionError);
}

TEST_CASE("evaluate") {
  SUBCASE("rank counterexample report") {
    const auto report = evaluate(rank_counterexample());
    CHECK(report.tsallis_values.at(2.0) == doctest::Approx(0.2));
    CHECK(report.tsallis_values.at(kInfinity) == 0.0);
    CHECK(report.entropic_gaps.count(kInfinity) == 0);
    CHECK(report.verdicts.at("ppt") == Verdict::Fail);
    CHECK(report.verdicts.at("reduction") == Verdict::Fail);
    CHECK(report.verdicts.at("tsallis") == Verdict::Pass);
    CHECK(report.chsh.has_value());
  }
  SUBCASE("singlet fails every criterion") {
    const auto report = evaluate(werner(2, 1.0));
    for (const char* key : {"ppt", "reduction", "tsallis", "renyi", "renyi_inf"}) CHECK(report.verdicts.at(key) == Verdict::Fail);
    CHECK(report.verdicts.at("chsh") == Verdict::Fail);
  }
  SUBCASE("negative alphas raise the support flag on singular states") {
    const auto report = evaluate(rank_counterexample(), {-1.0, 2.0});
    CHECK(report.flags.count("support_restricted") == 1);
    CHECK(report.renyi_conditional.count(-1.0) == 0);
  }
  SUBCASE("verdicts follow the tolerance rule") {
    Rng rng(12);
    for (int trial = 0; trial < 50; ++trial) {
      const auto s = random_mixed_state(2, 2, rng);
      const auto report = evaluate(s);
      CHECK((report.verdicts.at("ppt") == Verdict::Pass) == (report.ppt_min_eig >= -s.tol()));
      CHECK((report.verdicts.at("reduction") == Verdict::Pass) == (report.reduction_min_eig >= -s.tol()));
    }
  }
  SUBCASE("local unitary invariance") {
    Rng rng(13);
    for (auto [da, db] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 3}}) {
      for (int trial = 0; trial < 10; ++trial) {
        const auto s = random_mixed_state(da, db, rng);
        const auto a = evaluate(s);
        const auto b = evaluate(locally_rotated(s, rng));
        CHECK(std::abs(a.ppt_min_eig - b.ppt_min_eig) <= 1e-8);
        CHECK(std::abs(a.reduction_min_eig - b.reduction_min_eig) <= 1e-8);
        for (const auto& [alpha, v] : a.entropic_gaps) CHECK(std::abs(v - b.entropic_gaps.at(alpha)) <= 1e-8);
        for (const auto& [alpha, v] : a.renyi_conditional) CHECK(std::abs(v - b.renyi_conditional.at(alpha)) <= 1e-8);
        for (const auto& [alpha, v] : a.tsallis_values) {
          if (std::isinf(v)) {
            CHECK(v == b.tsallis_values.at(alpha));
          } else {
            CHECK(std::abs(v - b.tsallis_values.at(alpha)) <= 1e-8);
          }
        }
        for (std::size_t k = 0; k < a.spectrum.size(); ++k) CHECK(std::abs(a.spectrum.values[k] - b.spectrum.values[k]) <= 1e-8);
        if (a.chsh) CHECK(std::abs(*a.chsh - *b.chsh) <= 1e-8);
        CHECK(a.verdicts == b.verdicts);
      }
    }
  }
}

TEST_CASE("implication chain on random states") {
  Rng rng(55);
  for (auto [da, db] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 3}}) {
    std::size_t ppt_not_reduction = 0;
    std::size_t sign_violations = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const auto s = trial % 2 == 0 ? random_separable_state(da, db, rng) : random_mixed_state(da, db, rng);
      const auto prop1 = proposition1_harness(s, default_alpha_grid());
      if (ppt_criterion(s) >= -kDefaultTol && !prop1.applicable) ++ppt_not_reduction;
      sign_violations += prop1.violations();
    }
    CHECK(ppt_not_reduction == 0);
    CHECK(sign_violations == 0);
  }
}
