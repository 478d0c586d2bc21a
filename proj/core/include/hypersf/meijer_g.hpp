#pragma once

#include <hypersf/hypergeometric.hpp>
#include <hypersf/types.hpp>

#include <string>
#include <vector>

namespace hypersf {

/// Parameters of G^{m,n}_{p,q}(argument | a; b). The first n entries of `a`
/// and the first m entries of `b` are the distinguished ones.
struct GSpec {
  std::vector<cplx> a;
  std::vector<cplx> b;
  int m = 1;
  int n = 0;
  cplx argument{1.0, 0.0};

  int p() const { return static_cast<int>(a.size()); }
  int q() const { return static_cast<int>(b.size()); }
  void validate() const;  // throws ParameterError on a shape violation
};

/// G^{2,2}_{2,2}(z | a1, a2; b1, b2) through the 2F1(1 - z) conversion.
/// Requires |1 - z| < 1.
cplx g2222_to_2f1(cplx a1, cplx a2, cplx b1, cplx b2, cplx z, double tol = 1e-15);

/// One term of the decomposition: coefficient * qF_{p-1}(series).
struct GDecompositionTerm {
  int h = 0;                 // 1-based index of the distinguished a_h
  cplx gamma_factor{0.0};    // the Gamma quotient alone
  cplx coefficient{0.0};     // gamma_factor * z^(a_h - 1)
  PFQParams series;
  SeriesValue series_value;  // left empty when the coefficient vanishes
  cplx value{0.0};
};

struct GDecomposition {
  std::vector<GDecompositionTerm> terms;
  cplx value{0.0};
  std::vector<std::string> warnings;
};

/// Expansion of G^{m,n}_{p,q} into n series in (-1)^(q-m-n) / z.
///
/// Requires p >= 1 and no two of a_1..a_n differing by an integer. Among the
/// applicability conditions only p = q shapes can occur (p <= q); they need
/// m+n = p+1 with z outside (-1, 0), m+n > p+1, or m+n = p with |z| > 1.
/// A warning is attached when |1/z| > 0.9.
GDecomposition g_decompose(const GSpec& spec, double tol = 1e-15);

/// Parameters of the surface-area kernel G^{2,2}_{3,3}(z | 3/2, -m, 2+n; 0, 1+n, 0).
GSpec area_kernel_spec(int m, int n, double z);

/// Kernel value by decomposition. The a_2 = -m term vanishes through the
/// 1/Gamma(-m) factor, so only the 3F2(-1/z) term from a_1 = 3/2 survives.
/// Requires z > 1.
double g2233_area_kernel(int m, int n, double z, double tol = 1e-15);

}  // namespace hypersf
