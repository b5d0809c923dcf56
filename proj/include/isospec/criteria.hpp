#pragma once

// Spectrum-based separability tests and the partial-transpose / reduction
// criteria they are compared against.
//
// alpha = +infinity is spelled std::numeric_limits<double>::infinity().

#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "isospec/linalg.hpp"

namespace isospec {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Tolerance band for every sign verdict on gap-like quantities.
inline constexpr double kSignBand = 1e-8;

/// {0, 0.25, 0.5, 0.75, 1, 1.5, 2, 3, 5, inf}
std::vector<double> default_alpha_grid();

/// Renyi entropy with natural log. alpha must be >= 0 or +inf.
/// alpha = 0: log rank, alpha = 1: von Neumann entropy, alpha = inf: -log lambda_max.
double renyi_entropy(const Spectrum& spectrum, double alpha);
double renyi_entropy(const ComplexMatrix& rho, double alpha, double tol = kDefaultTol);

/// tr(rho_A^alpha) - tr(rho^alpha), alpha >= 0.
double entropic_gap(const BipartiteState& s, double alpha);

/// A Tsallis value that may be -inf (alpha = inf limit) and may have been
/// computed on the support only (alpha < 0 on a singular state).
struct TsallisValue {
  double value = 0.0;
  bool support_restricted = false;
};

/// Conditional Tsallis entropy (tr rho_A^a - tr rho^a) / ((a - 1) tr rho_A^a).
/// alpha = 1 returns S_1(rho) - S_1(rho_A); alpha = inf returns 0 when
/// lambda_max(rho) <= lambda_max(rho_A)(1 + tol) and -inf otherwise.
TsallisValue conditional_tsallis(const BipartiteState& s, double alpha);

/// Minimum eigenvalue of rho_A (x) 1 - rho. The criterion holds iff >= -tol.
double reduction_criterion(const BipartiteState& s);
/// Minimum eigenvalue of the partial transpose on A. Holds iff >= -tol.
double ppt_criterion(const BipartiteState& s);

/// tr(rho^alpha) - tr(rho_A^alpha) for alpha < 0; nonnegative for every state.
TsallisValue negative_alpha_bound(const BipartiteState& s, double alpha);

struct AlphaCheck {
  double alpha = 0.0;
  double gap = 0.0;
  bool holds = true;
  /// Distance past the sign band, 0 when the sign is right.
  double violation = 0.0;
};

struct Proposition1Result {
  /// False when the state violates the reduction criterion (nothing is asserted).
  bool applicable = false;
  double reduction_min_eig = 0.0;
  std::vector<AlphaCheck> checks;

  std::size_t violations() const;
};

/// For a state satisfying the reduction criterion, checks that the entropic
/// gap is >= -eps for alpha > 1 and <= +eps for 0 <= alpha < 1.
Proposition1Result proposition1_harness(const BipartiteState& s, const std::vector<double>& alphas,
                                        double eps = kSignBand);

/// Horodecki quantity M(rho): the two largest eigenvalues of T^T T summed,
/// T being the 3x3 correlation block. CHSH is violated iff M > 1.
double horodecki_chsh(const BipartiteState& s);

enum class Verdict { Pass, Fail };
const char* to_string(Verdict v);

struct CriterionReport {
  Spectrum spectrum;
  Spectrum spectrum_a;
  Spectrum spectrum_b;
  double ppt_min_eig = 0.0;
  double reduction_min_eig = 0.0;
  /// alpha -> tr(rho_A^alpha) - tr(rho^alpha), finite alpha >= 0 only.
  std::map<double, double> entropic_gaps;
  /// alpha -> T_alpha, may hold -inf.
  std::map<double, double> tsallis_values;
  /// alpha -> S_alpha(rho) - S_alpha(rho_A), alpha >= 0.
  std::map<double, double> renyi_conditional;
  std::optional<double> chsh;
  std::map<std::string, Verdict> verdicts;
  std::set<std::string> flags;
};

/// Evaluates every criterion on one state.
///
/// Verdict keys: "ppt", "reduction", "tsallis" (all T_alpha >= -eps),
/// "renyi" (all conditional Renyi entropies >= -eps), "renyi_inf"
/// (||rho|| <= ||rho_A||) and, for two qubits, "chsh" (pass = no violation).
CriterionReport evaluate(const BipartiteState& s, const std::vector<double>& alphas = default_alpha_grid());

}  // namespace isospec
