#pragma once

namespace hypersf {

/// Cap of x^2/a^2 + y^2/b^2 - z^2/c^2 = 1 between z = 0 and z = H.
struct GeometryParams {
  double a = 1.0;
  double b = 1.0;
  double c = 1.0;
  double H = 0.0;
  bool allow_circular = false;  // admit a == b

  /// a > b > 0 (or a == b with allow_circular), c > 0, H >= 0.
  /// Throws ParameterError.
  void validate() const;

  /// sqrt(1 + H^2 / c^2)
  double lambda() const;
};

}  // namespace hypersf
