#include "isospec/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "isospec/state_io.hpp"
#include "isospec/states.hpp"
#include "isospec/twoqubit.hpp"

namespace isospec {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double parse_real(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("cannot parse " + what + " from \"" + text + "\"");
  }
  if (used != text.size()) throw UsageError("cannot parse " + what + " from \"" + text + "\"");
  return value;
}

std::size_t parse_dim(const std::string& text) {
  const double d = parse_real(text, "dimension");
  if (d < 2 || d > 10 || d != std::floor(d)) throw UsageError("dimension must be an integer in 2..10");
  return static_cast<std::size_t>(d);
}

double max_sorted_diff(const Spectrum& a, const Spectrum& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a.values[k] - b.values[k]));
  return d;
}

double reduction_diff(const BipartiteState& a, const BipartiteState& b) {
  return std::max(max_abs_diff(reduced_a(a), reduced_a(b)), max_abs_diff(reduced_b(a), reduced_b(b)));
}

const char* pass_fail(bool ok) { return ok ? "pass" : "fail"; }

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
  if (text.empty()) return {};
  std::vector<double> grid;
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw UsageError("grid range must be start:stop:step");
    const double start = parse_real(parts[0], "grid start");
    const double stop = parse_real(parts[1], "grid stop");
    const double step = parse_real(parts[2], "grid step");
    if (!(step > 0.0) || !std::isfinite(start) || !std::isfinite(stop)) throw UsageError("grid needs finite bounds and step > 0");
    if (stop < start) return {};
    const double span = (stop - start) / step;
    if (span + 1 > static_cast<double>(kMaxGridPoints)) throw UsageError("grid exceeds 10000 points");
    const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
    for (std::size_t i = 0; i < count; ++i) grid.push_back(start + static_cast<double>(i) * step);
    return grid;
  }
  for (const auto& part : split(text, ',')) grid.push_back(parse_real(part, "grid point"));
  if (grid.size() > kMaxGridPoints) throw UsageError("grid exceeds 10000 points");
  return grid;
}

std::vector<double> parse_alpha_list(const std::string& text) {
  std::vector<double> alphas;
  for (const auto& part : split(text, ',')) {
    if (part == "inf" || part == "+inf") {
      alphas.push_back(kInfinity);
    } else {
      const double a = parse_real(part, "alpha");
      if (!std::isfinite(a)) throw UsageError("alpha must be finite or \"inf\"");
      alphas.push_back(a);
    }
  }
  if (alphas.empty()) throw UsageError("alpha list is empty");
  return alphas;
}

BipartiteState build_state(const std::string& spec, double tol) {
  const auto parts = split(spec, ':');
  const std::string& kind = parts.front();
  const auto need = [&](std::size_t n) {
    if (parts.size() != n) throw UsageError("state spec \"" + spec + "\" has the wrong number of fields");
  };
  try {
    if (kind == "werner") {
      need(3);
      return werner(parse_dim(parts[1]), parse_real(parts[2], "p"), tol);
    }
    if (kind == "counterpart") {
      need(3);
      return werner_counterpart(parse_dim(parts[1]), parse_real(parts[2], "p"), tol);
    }
    if (kind == "family") {
      need(2);
      return family_state(parse_real(parts[1], "r"), tol);
    }
    if (kind == "family-prime") {
      need(2);
      return family_transformed(parse_real(parts[1], "r"), tol);
    }
    if (kind == "rank-counterexample") {
      need(1);
      return rank_counterexample(tol);
    }
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  } catch (const InvalidStateError& e) {
    throw UsageError(e.what());
  }
  if (!std::filesystem::is_regular_file(spec)) throw UsageError("unknown state spec \"" + spec + "\"");
  return read_state_file(spec, tol);
}

std::string alpha_label(double alpha) {
  if (std::isinf(alpha)) return alpha > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", alpha);
  return buf;
}

ReportRow eval_row(const std::string& scenario, const BipartiteState& s, const std::vector<double>& alphas) {
  const auto report = evaluate(s, alphas);
  ReportRow row;
  row.scenario = scenario;
  row.param("dimA", static_cast<double>(s.dim_a())).param("dimB", static_cast<double>(s.dim_b()));

  row.quantity("ppt_min_eig", report.ppt_min_eig);
  row.quantity("reduction_min_eig", report.reduction_min_eig);
  row.quantity("rank", static_cast<double>(report.spectrum.rank()));
  row.quantity("rank_a", static_cast<double>(report.spectrum_a.rank()));
  for (const auto& [alpha, t] : report.tsallis_values) row.quantity("T_" + alpha_label(alpha), t);
  for (const auto& [alpha, g] : report.entropic_gaps) row.quantity("gap_" + alpha_label(alpha), g);
  for (const auto& [alpha, dr] : report.renyi_conditional) row.quantity("dS_" + alpha_label(alpha), dr);
  if (report.chsh) {
    row.quantity("chsh_M", *report.chsh);
    row.quantity("det_pt", det_partial_transpose(s));
  }
  for (std::size_t k = 0; k < report.spectrum.size(); ++k) row.quantity("spec_" + std::to_string(k), report.spectrum.values[k]);
  for (std::size_t k = 0; k < report.spectrum_a.size(); ++k) row.quantity("spec_a_" + std::to_string(k), report.spectrum_a.values[k]);
  for (std::size_t k = 0; k < report.spectrum_b.size(); ++k) row.quantity("spec_b_" + std::to_string(k), report.spectrum_b.values[k]);

  for (const auto& [name, v] : report.verdicts) row.verdict(name, to_string(v));
  std::string flags;
  for (const auto& f : report.flags) flags += (flags.empty() ? "" : ";") + f;
  row.verdict("flags", flags.empty() ? "none" : flags);
  return row;
}

ReportRow werner_sweep_row(std::size_t d, double p, double tol) {
  const auto w = werner(d, p, tol);
  ReportRow row;
  row.scenario = "werner-sweep";
  row.param("d", static_cast<double>(d)).param("p", p);

  const double w_ppt = ppt_criterion(w);
  const double w_red = reduction_criterion(w);
  row.quantity("werner_ppt_min_eig", w_ppt).quantity("werner_reduction_min_eig", w_red);
  row.quantity("werner_T_2", conditional_tsallis(w, 2.0).value);

  if (d % 2 == 1) {
    const auto c = werner_counterpart(d, p, tol);
    const double c_ppt = ppt_criterion(c);
    const double c_red = reduction_criterion(c);
    const double spec_diff = max_sorted_diff(eigenvalues(w.matrix(), tol), eigenvalues(c.matrix(), tol));
    const double red_diff = reduction_diff(w, c);
    row.quantity("counterpart_ppt_min_eig", c_ppt).quantity("counterpart_reduction_min_eig", c_red);
    row.quantity("counterpart_T_2", conditional_tsallis(c, 2.0).value);
    row.quantity("spectrum_diff", spec_diff).quantity("reduction_diff", red_diff);
    row.verdict("werner_ppt", pass_fail(w_ppt >= -tol)).verdict("werner_reduction", pass_fail(w_red >= -tol));
    row.verdict("counterpart_ppt", pass_fail(c_ppt >= -tol)).verdict("counterpart_reduction", pass_fail(c_red >= -tol));
    row.verdict("spectra_match", pass_fail(spec_diff <= 1e-10)).verdict("reductions_match", pass_fail(red_diff <= 1e-10));
  } else {
    const double nan = std::nan("");
    row.quantity("counterpart_ppt_min_eig", nan).quantity("counterpart_reduction_min_eig", nan);
    row.quantity("counterpart_T_2", nan).quantity("spectrum_diff", nan).quantity("reduction_diff", nan);
    row.verdict("werner_ppt", pass_fail(w_ppt >= -tol)).verdict("werner_reduction", pass_fail(w_red >= -tol));
    row.verdict("counterpart_ppt", "n/a").verdict("counterpart_reduction", "n/a");
    row.verdict("spectra_match", "n/a").verdict("reductions_match", "n/a");
  }
  return row;
}

ReportRow family_sweep_row(double r, double tol) {
  const auto audit = qubit_pair_audit(r, {2.0}, tol);
  ReportRow row;
  row.scenario = "family-sweep";
  row.param("r", r);
  row.quantity("rho_min_eig", audit.original.spectrum.min());
  row.quantity("rho_prime_min_eig", audit.transformed.spectrum.min());
  row.quantity("rho_ppt_min_eig", audit.original.ppt_min_eig);
  row.quantity("rho_prime_ppt_min_eig", audit.transformed.ppt_min_eig);
  row.quantity("rho_det_pt", audit.det_pt_original);
  row.quantity("rho_prime_det_pt", audit.det_pt_transformed);
  row.quantity("rho_chsh_M", audit.original.chsh.value_or(std::nan("")));
  row.quantity("rho_prime_chsh_M", audit.transformed.chsh.value_or(std::nan("")));
  row.quantity("rho_T_2", audit.original.tsallis_values.at(2.0));
  row.quantity("rho_prime_T_2", audit.transformed.tsallis_values.at(2.0));
  row.quantity("spectrum_diff", audit.spectrum_diff).quantity("reduction_diff", audit.reduction_diff);

  row.verdict("rho_det_pt_sign", pass_fail(audit.det_pt_original >= -tol));
  row.verdict("rho_prime_det_pt_sign", pass_fail(audit.det_pt_transformed >= -tol));
  row.verdict("rho_ppt", to_string(audit.original.verdicts.at("ppt")));
  row.verdict("rho_prime_ppt", to_string(audit.transformed.verdicts.at("ppt")));
  row.verdict("rho_prime_chsh", to_string(audit.transformed.verdicts.at("chsh")));
  row.verdict("spectra_match", pass_fail(audit.spectra_match));
  row.verdict("reductions_match", pass_fail(audit.reductions_match));
  return row;
}

RandomAudit audit_random_states(std::size_t dim_a, std::size_t dim_b, std::size_t reduction_target, Rng& rng,
                                double tol) {
  RandomAudit audit;
  audit.dim_a = dim_a;
  audit.dim_b = dim_b;
  const std::size_t max_draws = 50 * std::max<std::size_t>(reduction_target, 1);

  while (audit.reduction_pass < reduction_target && audit.samples < max_draws) {
    const bool separable = audit.samples % 2 == 0;
    const auto s = separable ? random_separable_state(dim_a, dim_b, rng, tol) : random_mixed_state(dim_a, dim_b, rng, 0, tol);
    ++audit.samples;

    const bool ppt = ppt_criterion(s) >= -tol;
    const auto prop1 = proposition1_harness(s, kProposition1Alphas);
    audit.ppt_pass += ppt;
    audit.reduction_pass += prop1.applicable;
    if (ppt && !prop1.applicable) ++audit.ppt_pass_reduction_fail;
    for (const auto& check : prop1.checks) {
      audit.worst_prop1_violation = std::max(audit.worst_prop1_violation, check.violation);
    }
    audit.prop1_violations += prop1.violations();

    if (eigenvalues(s.matrix(), tol).rank() == s.dim()) {
      ++audit.full_rank;
      for (double alpha : kNegativeAlphas) {
        audit.min_negative_alpha_tsallis = std::min(audit.min_negative_alpha_tsallis, conditional_tsallis(s, alpha).value);
      }
    }
  }
  return audit;
}

Report harness_report(const HarnessOptions& options) {
  Rng rng(options.seed);
  Report report;
  for (const auto& [da, db] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 3}}) {
    const auto audit = audit_random_states(da, db, options.samples, rng, options.tol);
    ReportRow row;
    row.scenario = "random-audit";
    row.param("dimA", static_cast<double>(da)).param("dimB", static_cast<double>(db));
    row.param("seed", static_cast<double>(options.seed));
    row.quantity("samples", static_cast<double>(audit.samples));
    row.quantity("full_rank", static_cast<double>(audit.full_rank));
    row.quantity("ppt_pass", static_cast<double>(audit.ppt_pass));
    row.quantity("reduction_pass", static_cast<double>(audit.reduction_pass));
    row.quantity("ppt_pass_reduction_fail", static_cast<double>(audit.ppt_pass_reduction_fail));
    row.quantity("prop1_violations", static_cast<double>(audit.prop1_violations));
    row.quantity("worst_prop1_violation", audit.worst_prop1_violation);
    row.quantity("min_negative_alpha_T", audit.min_negative_alpha_tsallis);
    row.verdict("implication_chain", pass_fail(audit.ppt_pass_reduction_fail == 0 && audit.prop1_violations == 0));
    row.verdict("negative_alpha_bound", pass_fail(audit.min_negative_alpha_tsallis >= -kSignBand));
    report.push_back(std::move(row));
  }
  return report;
}

}  // namespace isospec
