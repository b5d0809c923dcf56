#pragma once

// Builders shared by the command-line tool: state specs, parameter grids and
// the report rows for evaluations and sweeps.

#include <cstdint>
#include <string>
#include <vector>

#include "isospec/criteria.hpp"
#include "isospec/report.hpp"
#include "isospec/sampling.hpp"

namespace isospec {

/// Bad command-line input: unknown spec, malformed grid, out-of-range parameter.
class UsageError : public Error {
 public:
  using Error::Error;
};

inline constexpr std::size_t kMaxGridPoints = 10000;

/// "start:stop:step" (inclusive of stop within 1e-9 step), "a,b,c", or "" for
/// an empty grid. Throws UsageError beyond kMaxGridPoints or on bad syntax.
std::vector<double> parse_grid(const std::string& text);

/// "0,0.5,inf" style list of alphas; "inf" accepted.
std::vector<double> parse_alpha_list(const std::string& text);

/// Resolves werner:d:p, counterpart:d:p, family:r, family-prime:r,
/// rank-counterexample, or else treats the spec as a state file path.
/// Builder parameter problems raise UsageError; file contents raise
/// FormatError / InvalidStateError.
BipartiteState build_state(const std::string& spec, double tol = kDefaultTol);

/// Label used in quantity names: "0.25", "2", "inf".
std::string alpha_label(double alpha);

ReportRow eval_row(const std::string& scenario, const BipartiteState& s, const std::vector<double>& alphas);

/// Werner state against its separable counterpart (odd d only; counterpart
/// columns are nan / "n/a" for even d).
ReportRow werner_sweep_row(std::size_t d, double p, double tol = kDefaultTol);

/// rho(r) against rho'(r).
ReportRow family_sweep_row(double r, double tol = kDefaultTol);

/// Counts from auditing random states on one dimension pair.
struct RandomAudit {
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  std::size_t samples = 0;
  std::size_t full_rank = 0;
  std::size_t ppt_pass = 0;
  std::size_t reduction_pass = 0;
  std::size_t ppt_pass_reduction_fail = 0;
  std::size_t prop1_violations = 0;
  double worst_prop1_violation = 0.0;
  /// Smallest T_alpha over alpha in {-0.5, -1, -2} on full-rank samples.
  double min_negative_alpha_tsallis = kInfinity;
};

inline const std::vector<double> kProposition1Alphas{0.25, 0.5, 0.75, 1.5, 2.0, 3.0, 5.0};
inline const std::vector<double> kNegativeAlphas{-0.5, -1.0, -2.0};

/// Alternates random separable and random mixed states until
/// `reduction_target` samples satisfy the reduction criterion (capped at 50x
/// as many draws) and tallies every criterion on every draw.
RandomAudit audit_random_states(std::size_t dim_a, std::size_t dim_b, std::size_t reduction_target,
                                Rng& rng, double tol = kDefaultTol);

struct HarnessOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
};

/// Random-sample audit per dimension pair (2x2, 2x3, 3x3): implication chain
/// PPT => reduction => entropic sign pattern, plus the negative-alpha bound.
Report harness_report(const HarnessOptions& options);

}  // namespace isospec
