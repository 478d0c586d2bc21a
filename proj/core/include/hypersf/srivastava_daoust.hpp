#pragma once

#include <hypersf/types.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace hypersf {

/// A parameter shared by all variables: (value)_{m . shifts}.
struct SDGlobalParam {
  cplx value;
  std::vector<int> shifts;  // one integer per variable, may be negative
};

/// A parameter attached to a single variable: (value)_{m_i * shift}.
struct SDLocalParam {
  cplx value;
  int shift = 1;
};

/// Coefficient tableau of a Srivastava-Daoust series
///
///   sum_m Omega(m) prod x_i^{m_i} / m_i!
///
/// Shifts are integers. Negative shifts are allowed; the corresponding
/// Pochhammer symbols use the negative-index extension.
struct SDSpec {
  std::size_t variable_count = 0;
  std::vector<SDGlobalParam> upper_global;
  std::vector<SDGlobalParam> lower_global;
  std::vector<std::vector<SDLocalParam>> upper_per_variable;
  std::vector<std::vector<SDLocalParam>> lower_per_variable;

  void validate() const;  // throws ParameterError
};

inline constexpr std::size_t kDefaultSdMaxIndex = 300;

/// Sum over expanding simplices |m| = 0, 1, 2, ... in lexicographic order
/// within each simplex. Stops when the absolute mass of a whole simplex falls
/// below tol * |partial sum| twice in a row, or when a simplex is empty
/// (truncating parameters). est_error extrapolates the last simplex
/// geometrically. When the simplices shrink slowly, the partial sums over the
/// last 17 simplices are also passed through Wynn's epsilon algorithm, and
/// the extrapolated value is returned once it moves by less than
/// tol * |value| three times in a row; est_error is then that movement.
SeriesValue sd_eval(const SDSpec& spec, const std::vector<cplx>& x, double tol = 1e-12,
                    std::size_t max_index = kDefaultSdMaxIndex);

/// log of one coefficient Omega(m) prod x^m / m!; `zero` when a numerator
/// Pochhammer vanishes or some x_i = 0 with m_i > 0.
struct SDTermLog {
  cplx log{0.0, 0.0};
  bool zero = false;
};
SDTermLog sd_term_log(const SDSpec& spec, const std::vector<long>& m, const std::vector<cplx>& x);

enum class SDCase { I, II, IIa, IIb, III, unclassified };
const char* to_string(SDCase c);

struct SDConvergenceReport {
  std::vector<int> deltas;
  SDCase case_label = SDCase::unclassified;
  bool uniform = false;              // theta and psi rows equal across variables
  std::vector<double> G;             // uniform branch only
  double Omega = 0.0;                // uniform branch only
  std::vector<double> rho;           // non-uniform Case II: numeric min of E_i (heuristic)
  std::vector<double> axis_ratio;    // empirical per-variable term ratio
  double joint_ratio = 0.0;          // empirical ratio over whole simplices
  std::vector<bool> variable_ok;
  bool region_ok = false;
  std::string diagnostics;
};

/// Delta_i per variable and the case label; for Case II the region test.
/// Never throws for a well-formed spec.
SDConvergenceReport sd_classify(const SDSpec& spec, const std::vector<cplx>& x);

}  // namespace hypersf
