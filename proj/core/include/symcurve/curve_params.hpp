#pragma once

#include <string>
#include <vector>

namespace symcurve {

/// Numerical data of the space curve (t^(2q+1), t^(2q+1+m), t^(2q+1+2m)).
/// Requires q >= 1, m >= 1 and gcd(2q+1, m) = 1; the exponents form an
/// arithmetic sequence n1 < n2 < n3 with common difference m and also serve
/// as the grading weights of the three ring variables.
struct CurveParams {
  int q;
  int m;

  CurveParams(int q, int m);

  int n1() const { return 2 * q + 1; }
  int n2() const { return n1() + m; }
  int n3() const { return n1() + 2 * m; }
  /// Multiplicity of the curve: 2q+1.
  int multiplicity() const { return n1(); }
  std::vector<int> weights() const { return {n1(), n2(), n3()}; }

  std::string label() const;

  friend bool operator==(const CurveParams&, const CurveParams&) = default;
};

/// The five-curve default verification grid.
std::vector<CurveParams> defaultGrid();

}  // namespace symcurve
