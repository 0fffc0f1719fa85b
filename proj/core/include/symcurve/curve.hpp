#pragma once

#include <map>
#include <optional>
#include <stdexcept>

#include "symcurve/curve_params.hpp"
#include "symcurve/filtration.hpp"
#include "symcurve/groebner.hpp"

namespace symcurve {

/// The defining binomials and certificate elements of a curve:
///   g1 = x1^(m+q)*x2 - x3^(q+1)
///   g2 = x1^(m+q+1) - x2*x3^q
///   g3 = x2^2 - x1*x3          (f1 := g3)
///   f2 = -x1^(2(m+q)+1) - x1^(m+q-1)*x2^3*x3^(q-1) + 3*x1^(m+q)*x2*x3^q - x3^(2q+1)
/// together with the prime ideal (g1, g2, g3) under the weighted order.
template <CoefficientField K>
struct CurveIdeals {
  CurveParams params;
  MonomialOrder order;
  Poly<K> g1, g2, g3, f1, f2;
  PolyIdeal<K> prime;
  PolyIdeal<K> f2Ideal;
};

/// Builds the curve data and validates it two ways before returning: the
/// defining identity x3*f2 = -g1^2 + x1^(m+q-1)*g2*g3 must hold exactly, and
/// (g1, g2, g3) must coincide with the elimination-computed toric kernel.
/// Throws std::logic_error if either check fails.
template <CoefficientField K>
CurveIdeals<K> buildCurve(const CurveParams& p) {
  MonomialOrder ord = MonomialOrder::wgrlex(p.weights());
  auto mono = [&](int e1, int e2, int e3) { return Monomial{e1, e2, e3}; };
  auto make = [&](std::vector<Term<K>> ts) { return Poly<K>::fromTerms(ord, std::move(ts)); };

  const K one = K::one();
  Poly<K> g1 = make({{mono(p.m + p.q, 1, 0), one}, {mono(0, 0, p.q + 1), -one}});
  Poly<K> g2 = make({{mono(p.m + p.q + 1, 0, 0), one}, {mono(0, 1, p.q), -one}});
  Poly<K> g3 = make({{mono(0, 2, 0), one}, {mono(1, 0, 1), -one}});
  Poly<K> f2 = make({{mono(2 * (p.m + p.q) + 1, 0, 0), -one},
                     {mono(p.m + p.q - 1, 3, p.q - 1), -one},
                     {mono(p.m + p.q, 1, p.q), K(3)},
                     {mono(0, 0, 2 * p.q + 1), -one}});

  // x3*f2 + g1^2 - x1^(m+q-1)*g2*g3 must vanish identically.
  Poly<K> x3 = Poly<K>::variable(ord, 2);
  Poly<K> shifted = mulTerm(mul(g2, g3), mono(p.m + p.q - 1, 0, 0), one);
  Poly<K> identity = sub(add(mul(x3, f2), mul(g1, g1)), shifted);
  if (!identity.isZero())
    throw std::logic_error("curve construction: the defining identity of f2 fails for " +
                           p.label());

  PolyIdeal<K> prime({g1, g2, g3}, ord);
  if (!idealEqual(prime, toricIdeal<K>(p.n1(), p.n2(), p.n3())))
    throw std::logic_error("curve construction: minor generators disagree with the toric kernel for " +
                           p.label());

  PolyIdeal<K> f2Ideal({f2}, ord);
  return CurveIdeals<K>{p, ord, g1, g2, g3, g3, f2, std::move(prime), std::move(f2Ideal)};
}

/// Caches the three ideal towers of one curve: ordinary powers of the prime,
/// the two-generator layer sums, and the symbolic powers obtained by
/// saturating with respect to x1. One instance per worker thread.
template <CoefficientField K>
class Filtration {
public:
  explicit Filtration(const CurveParams& p) : curve_(buildCurve<K>(p)), monomial_(p) {}

  const CurveIdeals<K>& curve() const { return curve_; }
  MonomialFiltration& monomial() { return monomial_; }
  const CurveParams& params() const { return curve_.params; }

  /// The prime power p^n (unit ideal at n = 0).
  const PolyIdeal<K>& primePower(int n) {
    if (n < 0) throw std::invalid_argument("negative power index");
    auto it = primePowers_.find(n);
    if (it != primePowers_.end()) return it->second;
    return primePowers_.emplace(n, power(curve_.prime, n)).first->second;
  }

  /// The layer sum over a1 + 2*a2 = n of p^a1 * (f2)^a2.
  const PolyIdeal<K>& calIn(int n) {
    if (n < 0) throw std::invalid_argument("negative layer index");
    auto it = calIn_.find(n);
    if (it != calIn_.end()) return it->second;
    PolyIdeal<K> acc = PolyIdeal<K>::zeroIdeal(curve_.order);
    for (int a2 = 0; 2 * a2 <= n; ++a2) {
      int a1 = n - 2 * a2;
      PolyIdeal<K> layer = product(primePower(a1), power(curve_.f2Ideal, a2));
      acc = sum(acc, layer);
    }
    return calIn_.emplace(n, std::move(acc)).first->second;
  }

  /// The symbolic power, computed as the x1-saturation of p^n. n >= 1.
  const PolyIdeal<K>& symbolicPower(int n) {
    if (n < 1) throw std::invalid_argument("symbolic power index must be at least 1");
    auto it = symbolic_.find(n);
    if (it != symbolic_.end()) return it->second.ideal;
    Saturation<K> s = saturate(primePower(n), variablePoly(0));
    return symbolic_.emplace(n, std::move(s)).first->second.ideal;
  }

  /// Smallest s with (p^n : x1^s) stable; populated by symbolicPower.
  int saturationExponent(int n) {
    symbolicPower(n);
    return symbolic_.at(n).exponent;
  }

  /// Independent route: saturation by another variable (x3 by default).
  PolyIdeal<K> symbolicPowerVia(int varIndex, int n) {
    return saturate(primePower(n), variablePoly(varIndex)).ideal;
  }

  /// Hard error when the x1- and x3-saturations disagree; both remove only
  /// components at the irrelevant maximal ideal, so they must coincide.
  void crossValidate(int n) {
    if (!idealEqual(symbolicPower(n), symbolicPowerVia(2, n)))
      throw std::logic_error("symbolic power cross-validation failed at n=" + std::to_string(n) +
                             " for " + params().label());
  }

  Poly<K> variablePoly(int index) const { return Poly<K>::variable(curve_.order, index); }

private:
  CurveIdeals<K> curve_;
  MonomialFiltration monomial_;
  std::map<int, PolyIdeal<K>> primePowers_;
  std::map<int, PolyIdeal<K>> calIn_;
  std::map<int, Saturation<K>> symbolic_;
};

/// Image of a polynomial under x1 -> 0 when that image is a nonzero constant
/// multiple of a single monomial in x2, x3; nullopt otherwise (including the
/// zero image).
template <CoefficientField K>
std::optional<Monomial> imageModX1(const Poly<K>& p) {
  std::optional<Monomial> found;
  for (const Term<K>& t : p.terms()) {
    if (t.mono.exp(0) != 0) continue;
    if (found) return std::nullopt;
    found = Monomial{t.mono.exp(1), t.mono.exp(2)};
  }
  return found;
}

/// The monomial shadow of an ideal's generators under x1 -> 0; throws unless
/// every generator maps to a single monomial (the layer-sum generators do).
template <CoefficientField K>
MonomialIdeal shadowModX1(const PolyIdeal<K>& I) {
  std::vector<Monomial> gens;
  for (const Poly<K>& g : I.generators()) {
    std::optional<Monomial> m = imageModX1(g);
    if (!m)
      throw std::invalid_argument("shadowModX1: generator does not reduce to a monomial: " + g.str());
    gens.push_back(*m);
  }
  return MonomialIdeal(2, std::move(gens));
}

}  // namespace symcurve
