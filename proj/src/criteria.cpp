#include "isospec/criteria.hpp"

#include <algorithm>
#include <cmath>

#include "isospec/twoqubit.hpp"

namespace isospec {

std::vector<double> default_alpha_grid() { return {0.0, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 5.0, kInfinity}; }

const char* to_string(Verdict v) { return v == Verdict::Pass ? "pass" : "fail"; }

double renyi_entropy(const Spectrum& spectrum, double alpha) {
  if (std::isnan(alpha) || alpha < 0.0) throw DomainError("Renyi entropy needs alpha >= 0");
  if (std::isinf(alpha)) return -std::log(spectrum.max());
  if (alpha == 0.0) return std::log(static_cast<double>(spectrum.rank()));
  if (alpha == 1.0) {
    double s = 0.0;
    for (double lambda : spectrum.values) {
      if (lambda > spectrum.tol) s -= lambda * std::log(lambda);
    }
    return s;
  }
  return std::log(power_trace(spectrum, alpha).value) / (1.0 - alpha);
}

double renyi_entropy(const ComplexMatrix& rho, double alpha, double tol) {
  return renyi_entropy(eigenvalues(rho, tol), alpha);
}

namespace {

struct SpectraPair {
  Spectrum joint;
  Spectrum reduced;  // rho_A
};

SpectraPair spectra(const BipartiteState& s) {
  return {eigenvalues(s.matrix(), s.tol()), eigenvalues(reduced_a(s), s.tol())};
}

double gap_from(const SpectraPair& sp, double alpha) {
  return power_trace(sp.reduced, alpha).value - power_trace(sp.joint, alpha).value;
}

TsallisValue tsallis_from(const SpectraPair& sp, double alpha) {
  if (std::isinf(alpha) && alpha > 0) {
    const bool bounded = sp.joint.max() <= sp.reduced.max() * (1.0 + sp.joint.tol);
    return {bounded ? 0.0 : -kInfinity, false};
  }
  if (alpha == 1.0) return {renyi_entropy(sp.joint, 1.0) - renyi_entropy(sp.reduced, 1.0), false};
  const auto reduced = power_trace(sp.reduced, alpha);
  const auto joint = power_trace(sp.joint, alpha);
  return {(reduced.value - joint.value) / ((alpha - 1.0) * reduced.value),
          reduced.support_restricted || joint.support_restricted};
}

double renyi_conditional_from(const SpectraPair& sp, double alpha) {
  return renyi_entropy(sp.joint, alpha) - renyi_entropy(sp.reduced, alpha);
}

double reduction_min_eig(const BipartiteState& s, const ComplexMatrix& rho_a) {
  const auto op = kron(rho_a, ComplexMatrix::identity(s.dim_b())) - s.matrix();
  return eigenvalues(op, s.tol()).min();
}

}  // namespace

double entropic_gap(const BipartiteState& s, double alpha) {
  if (std::isnan(alpha) || alpha < 0.0 || std::isinf(alpha)) throw DomainError("entropic gap needs finite alpha >= 0");
  return gap_from(spectra(s), alpha);
}

TsallisValue conditional_tsallis(const BipartiteState& s, double alpha) {
  if (std::isnan(alpha) || alpha == -kInfinity) throw DomainError("conditional Tsallis entropy needs real alpha or +inf");
  return tsallis_from(spectra(s), alpha);
}

double reduction_criterion(const BipartiteState& s) { return reduction_min_eig(s, reduced_a(s)); }

double ppt_criterion(const BipartiteState& s) { return eigenvalues(partial_transpose(s), s.tol()).min(); }

TsallisValue negative_alpha_bound(const BipartiteState& s, double alpha) {
  if (!(alpha < 0.0) || std::isinf(alpha)) throw DomainError("negative-alpha bound needs finite alpha < 0");
  const auto sp = spectra(s);
  const auto joint = power_trace(sp.joint, alpha);
  const auto reduced = power_trace(sp.reduced, alpha);
  return {joint.value - reduced.value, joint.support_restricted || reduced.support_restricted};
}

std::size_t Proposition1Result::violations() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const AlphaCheck& c) { return !c.holds; }));
}

Proposition1Result proposition1_harness(const BipartiteState& s, const std::vector<double>& alphas, double eps) {
  Proposition1Result result;
  result.reduction_min_eig = reduction_criterion(s);
  result.applicable = result.reduction_min_eig >= -s.tol();
  if (!result.applicable) return result;

  const auto sp = spectra(s);
  for (double alpha : alphas) {
    // alpha == 1 has a trivially zero gap and no sign claim.
    if (alpha == 1.0 || alpha < 0.0 || std::isinf(alpha)) continue;
    AlphaCheck check{alpha, gap_from(sp, alpha), true, 0.0};
    if (alpha > 1.0 && check.gap < -eps) check.violation = -eps - check.gap;
    if (alpha < 1.0 && check.gap > eps) check.violation = check.gap - eps;
    check.holds = check.violation == 0.0;
    result.checks.push_back(check);
  }
  return result;
}

double horodecki_chsh(const BipartiteState& s) {
  if (s.dim_a() != 2 || s.dim_b() != 2) throw DimensionError("CHSH quantity is defined for two qubits");
  const RMatrix r = r_matrix(s);
  // T^T T is real symmetric; reuse the Hermitian solver.
  ComplexMatrix tt(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < 3; ++k) acc += r(k + 1, i + 1) * r(k + 1, j + 1);
      tt(i, j) = acc;
    }
  }
  const auto ev = eigenvalues(tt, s.tol()).values;
  return ev[1] + ev[2];
}

CriterionReport evaluate(const BipartiteState& s, const std::vector<double>& alphas) {
  const auto rho_a = reduced_a(s);
  SpectraPair sp{eigenvalues(s.matrix(), s.tol()), eigenvalues(rho_a, s.tol())};

  CriterionReport report;
  report.spectrum = sp.joint;
  report.spectrum_a = sp.reduced;
  report.spectrum_b = eigenvalues(reduced_b(s), s.tol());
  report.ppt_min_eig = ppt_criterion(s);
  report.reduction_min_eig = reduction_min_eig(s, rho_a);

  bool tsallis_ok = true;
  bool renyi_ok = true;
  for (double alpha : alphas) {
    if (std::isnan(alpha) || alpha == -kInfinity) throw DomainError("alpha grid holds an invalid value");
    const auto t = tsallis_from(sp, alpha);
    report.tsallis_values[alpha] = t.value;
    if (t.support_restricted) report.flags.insert("support_restricted");
    tsallis_ok = tsallis_ok && t.value >= -kSignBand;
    if (alpha >= 0.0) {
      if (!std::isinf(alpha)) report.entropic_gaps[alpha] = gap_from(sp, alpha);
      const double dr = renyi_conditional_from(sp, alpha);
      report.renyi_conditional[alpha] = dr;
      renyi_ok = renyi_ok && dr >= -kSignBand;
    }
  }

  const auto verdict = [](bool ok) { return ok ? Verdict::Pass : Verdict::Fail; };
  report.verdicts["ppt"] = verdict(report.ppt_min_eig >= -s.tol());
  report.verdicts["reduction"] = verdict(report.reduction_min_eig >= -s.tol());
  report.verdicts["tsallis"] = verdict(tsallis_ok);
  report.verdicts["renyi"] = verdict(renyi_ok);
  report.verdicts["renyi_inf"] = verdict(renyi_conditional_from(sp, kInfinity) >= -kSignBand);
  if (s.dim_a() == 2 && s.dim_b() == 2) {
    report.chsh = horodecki_chsh(s);
    report.verdicts["chsh"] = verdict(*report.chsh <= 1.0 + s.tol());
  }
  return report;
}

}  // namespace isospec
