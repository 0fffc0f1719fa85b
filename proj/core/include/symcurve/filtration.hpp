#pragma once

#include <cstdint>
#include <map>

#include "symcurve/curve_params.hpp"
#include "symcurve/monomial_ideal.hpp"

namespace symcurve {

/// The monomial filtration in two variables attached to a curve:
///   J1 = (x2^2, x2*x3^q, x3^(q+1)),   J2 = (x3^(2q+1)),
///   I_n = sum over a1 + 2*a2 = n of J1^a1 * J2^a2   (I_0 is the unit ideal).
/// I_n is cached; not safe for concurrent mutation, so parallel callers build
/// one filtration per task.
class MonomialFiltration {
public:
  explicit MonomialFiltration(CurveParams params);

  const CurveParams& params() const { return params_; }
  const MonomialIdeal& J1() const { return j1_; }
  const MonomialIdeal& J2() const { return j2_; }

  /// n >= 0.
  const MonomialIdeal& In(int n);

  /// ell(T'/I_n); 0 for n <= 0 so alternating length identities evaluate
  /// uniformly at small n.
  std::int64_t lengthIn(int n);

private:
  CurveParams params_;
  MonomialIdeal j1_;
  MonomialIdeal j2_;
  std::map<int, MonomialIdeal> cache_;
};

}  // namespace symcurve
