#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>

#include "symcurve/curve.hpp"
#include "symcurve/report.hpp"

namespace symcurve {

struct SuiteOptions {
  int nmax = 10;
  int nmaxGb = 4;
};

/// (2q+1) * binom(n+1, 2).
std::int64_t lengthFormula(const CurveParams& p, int n);

/// The identity suites over the two-variable monomial filtration.
std::vector<CheckResult> checkSection3(MonomialFiltration& F, const SuiteOptions& opt);
std::vector<CheckResult> checkSection4(MonomialFiltration& F, const SuiteOptions& opt);

/// Staircase length against the closed formula, one row per n.
std::vector<CheckResult> lengthsSuite(MonomialFiltration& F, int nmax);

/// Row count the verify command schedules per grid point; tests cross-check
/// this against the emitted reports.
int scheduledVerifyChecks(const SuiteOptions& opt);

namespace detail {

template <typename F>
void addCheck(std::vector<CheckResult>& out, std::string suite, std::string name,
              std::optional<int> q, std::optional<int> m, std::optional<int> n,
              std::optional<int> k, std::string expected, F&& computeFn) {
  auto t0 = std::chrono::steady_clock::now();
  std::string computed = computeFn();
  auto t1 = std::chrono::steady_clock::now();
  CheckResult r = makeCheck(std::move(suite), std::move(name), q, m, n, k, std::move(expected),
                            std::move(computed));
  r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  out.push_back(std::move(r));
}

/// Informational row: the computed value is echoed as the expectation.
template <typename F>
void addInfo(std::vector<CheckResult>& out, std::string suite, std::string name,
             std::optional<int> q, std::optional<int> m, std::optional<int> n,
             std::optional<int> k, F&& computeFn) {
  auto t0 = std::chrono::steady_clock::now();
  std::string computed = computeFn();
  auto t1 = std::chrono::steady_clock::now();
  CheckResult r = makeCheck(std::move(suite), std::move(name), q, m, n, k, computed, computed);
  r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  out.push_back(std::move(r));
}

std::string monomialEqStr(const MonomialIdeal& a, const MonomialIdeal& b);

template <CoefficientField K>
std::string polyEqStr(const PolyIdeal<K>& a, const PolyIdeal<K>& b) {
  if (idealEqual(a, b)) return "equal";
  return "not equal: lhs=" + a.basisStr() + " rhs=" + b.basisStr();
}

}  // namespace detail

/// Huneke certificate length, membership of f2 in the symbolic square, and
/// the layer-sum containments.
template <CoefficientField K>
std::vector<CheckResult> checkSection2(Filtration<K>& F, const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  const CurveParams& p = F.params();
  const CurveIdeals<K>& C = F.curve();
  Poly<K> x1 = F.variablePoly(0);

  detail::addCheck(out, "s2", "huneke_certificate_length", p.q, p.m, std::nullopt, std::nullopt,
                   std::to_string(2 * (2 * p.q + 1)), [&] {
                     PolyIdeal<K> cert({x1, C.f1, C.f2}, C.order);
                     return standardMonomialLength(cert).str();
                   });
  detail::addCheck(out, "s2", "f2_in_symbolic_square", p.q, p.m, std::nullopt, std::nullopt,
                   "member", [&] {
                     Poly<K> nf = normalForm(C.f2, F.symbolicPower(2));
                     return nf.isZero() ? std::string("member")
                                        : "not member: normal form " + nf.str();
                   });
  for (int n = 1; n <= opt.nmaxGb; ++n) {
    detail::addCheck(out, "s2", "layer_sum_inside_symbolic", p.q, p.m, n, std::nullopt, "subset",
                     [&] {
                       return isSubset(F.calIn(n), F.symbolicPower(n))
                                  ? std::string("subset")
                                  : "not subset: lhs=" + F.calIn(n).basisStr();
                     });
  }
  for (int n = 1; n <= opt.nmaxGb; ++n) {
    detail::addCheck(out, "s2", "layer_sum_plus_x1_artinian", p.q, p.m, n, std::nullopt,
                     "artinian", [&] {
                       LengthValue len = standardMonomialLength(sum(F.calIn(n), x1));
                       return len.isFinite() ? std::string("artinian") : "not artinian";
                     });
  }
  return out;
}

/// Length identities tying the three rings together, and the two-route
/// description of the symbolic powers.
template <CoefficientField K>
std::vector<CheckResult> checkSection5(Filtration<K>& F, const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  const CurveParams& p = F.params();
  const CurveIdeals<K>& C = F.curve();
  MonomialFiltration& M = F.monomial();
  Poly<K> x1 = F.variablePoly(0);
  const Monomial x2sq{2, 0};
  const Monomial x3pow{0, 2 * p.q + 1};

  for (int n = 1; n <= opt.nmax; ++n) {
    detail::addCheck(out, "s5", "staircase_length_formula", p.q, p.m, n, std::nullopt,
                     std::to_string(lengthFormula(p, n)),
                     [&] { return std::to_string(M.lengthIn(n)); });
  }
  for (int n = 1; n <= opt.nmaxGb; ++n) {
    detail::addCheck(out, "s5", "length_layer_sum_plus_x1", p.q, p.m, n, std::nullopt,
                     std::to_string(M.lengthIn(n)),
                     [&] { return standardMonomialLength(sum(F.calIn(n), x1)).str(); });
  }
  for (int n = 1; n <= opt.nmaxGb; ++n) {
    detail::addCheck(out, "s5", "length_symbolic_plus_x1", p.q, p.m, n, std::nullopt,
                     std::to_string(M.lengthIn(n)),
                     [&] { return standardMonomialLength(sum(F.symbolicPower(n), x1)).str(); });
  }
  for (int n = 1; n <= opt.nmaxGb; ++n) {
    detail::addCheck(out, "s5", "length_symbolic_plus_x1_f1", p.q, p.m, n, 1,
                     quotientLength(sum(M.In(n), MonomialIdeal(2, {x2sq}))).str(), [&] {
                       PolyIdeal<K> lhs = sum(sum(F.symbolicPower(n), x1), C.f1);
                       return standardMonomialLength(lhs).str();
                     });
    detail::addCheck(out, "s5", "length_symbolic_plus_x1_f1_f2", p.q, p.m, n, 2,
                     quotientLength(sum(M.In(n), MonomialIdeal(2, {x2sq, x3pow}))).str(), [&] {
                       PolyIdeal<K> lhs = sum(sum(sum(F.symbolicPower(n), x1), C.f1), C.f2);
                       return standardMonomialLength(lhs).str();
                     });
  }
  for (int n = 1; n <= opt.nmaxGb; ++n) {
    detail::addCheck(out, "s5", "symbolic_equals_layer_sum", p.q, p.m, n, std::nullopt, "equal",
                     [&] { return detail::polyEqStr(F.symbolicPower(n), F.calIn(n)); });
  }
  for (int n = 1; n <= opt.nmaxGb; ++n) {
    detail::addCheck(out, "s5", "symbolic_from_prime_and_square", p.q, p.m, n, std::nullopt,
                     "equal", [&] {
                       PolyIdeal<K> acc = PolyIdeal<K>::zeroIdeal(C.order);
                       for (int a2 = 0; 2 * a2 <= n; ++a2) {
                         int a1 = n - 2 * a2;
                         acc = sum(acc, product(F.primePower(a1), power(F.symbolicPower(2), a2)));
                       }
                       return detail::polyEqStr(F.symbolicPower(n), acc);
                     });
  }
  return out;
}

/// The colon ladder for f1 and f2 and the two-generator description of the
/// symbolic layers.
template <CoefficientField K>
std::vector<CheckResult> checkSection6(Filtration<K>& F, const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  const CurveParams& p = F.params();
  const CurveIdeals<K>& C = F.curve();
  Poly<K> x1 = F.variablePoly(0);

  for (int n = 1; n <= opt.nmaxGb; ++n) {
    detail::addCheck(out, "s6", "colon_f1_steps_down_one", p.q, p.m, n, 1, "equal", [&] {
      PolyIdeal<K> lhs = colon(sum(F.symbolicPower(n + 1), x1), C.f1);
      PolyIdeal<K> rhs = sum(F.symbolicPower(n), x1);
      return detail::polyEqStr(lhs, rhs);
    });
  }
  for (int n = 2; n <= opt.nmaxGb; ++n) {
    detail::addCheck(out, "s6", "colon_f2_steps_down_two", p.q, p.m, n, 2, "equal", [&] {
      PolyIdeal<K> lhs = colon(sum(sum(F.symbolicPower(n + 1), x1), C.f1), C.f2);
      PolyIdeal<K> rhs = sum(sum(F.symbolicPower(n - 1), x1), C.f1);
      return detail::polyEqStr(lhs, rhs);
    });
  }
  for (int n = 1; n <= opt.nmaxGb; ++n) {
    detail::addCheck(out, "s6", "rees_layers_generate", p.q, p.m, n, std::nullopt, "equal", [&] {
      PolyIdeal<K> acc = PolyIdeal<K>::zeroIdeal(C.order);
      for (int a2 = 0; 2 * a2 <= n; ++a2) {
        int a1 = n - 2 * a2;
        PolyIdeal<K> f2part({polyPow(C.f2, a2)}, C.order);
        acc = sum(acc, product(F.primePower(a1), f2part));
      }
      return detail::polyEqStr(F.symbolicPower(n), acc);
    });
  }
  return out;
}

/// Reduced generators of each symbolic power plus the strictness verdicts.
template <CoefficientField K>
std::vector<CheckResult> symbolicSuite(Filtration<K>& F, int nmaxGb) {
  std::vector<CheckResult> out;
  const CurveParams& p = F.params();

  detail::addCheck(out, "symbolic", "symbolic_equals_prime", p.q, p.m, 1, std::nullopt, "equal",
                   [&] { return detail::polyEqStr(F.symbolicPower(1), F.curve().prime); });
  for (int n = 1; n <= nmaxGb; ++n) {
    detail::addCheck(out, "symbolic", "symbolic_power_basis", p.q, p.m, n, std::nullopt,
                     F.calIn(n).basisStr(), [&] { return F.symbolicPower(n).basisStr(); });
    detail::addInfo(out, "symbolic", "minimal_generator_count", p.q, p.m, n, std::nullopt,
                    [&] { return std::to_string(minimalGeneratorCount(F.symbolicPower(n))); });
    if (n >= 2) {
      detail::addCheck(out, "symbolic", "symbolic_strictly_exceeds_power", p.q, p.m, n,
                       std::nullopt, "proper", [&] {
                         if (idealEqual(F.symbolicPower(n), F.primePower(n)))
                           return std::string("equal");
                         return isSubset(F.primePower(n), F.symbolicPower(n))
                                    ? std::string("proper")
                                    : std::string("incomparable");
                       });
    }
  }
  return out;
}

/// Data-only exploration of an arbitrary coprime curve (a, b, c): toric
/// kernel, symbolic powers, generator counts, lengths and a certificate
/// search. Draws no structural conclusions.
template <CoefficientField K>
std::vector<CheckResult> exploreSuite(int a, int b, int c, int nmax) {
  if (a < 1 || b < 1 || c < 1)
    throw std::invalid_argument("curve exponents must be positive");
  auto coprime = [](int x, int y) { return std::gcd(x, y) == 1; };
  if (!coprime(a, b) || !coprime(b, c) || !coprime(a, c))
    throw std::invalid_argument("curve exponents must be pairwise coprime: gcd(" +
                                std::to_string(a) + "," + std::to_string(b) + ")=" +
                                std::to_string(std::gcd(a, b)) + ", gcd(" + std::to_string(b) +
                                "," + std::to_string(c) + ")=" + std::to_string(std::gcd(b, c)) +
                                ", gcd(" + std::to_string(a) + "," + std::to_string(c) +
                                ")=" + std::to_string(std::gcd(a, c)));

  std::vector<CheckResult> out;
  PolyIdeal<K> P = toricIdeal<K>(a, b, c);
  const MonomialOrder& ord = P.homeOrder();
  Poly<K> x1 = Poly<K>::variable(ord, 0);

  detail::addInfo(out, "explore", "toric_ideal_basis", std::nullopt, std::nullopt, std::nullopt,
                  std::nullopt, [&] { return P.basisStr(); });
  detail::addInfo(out, "explore", "complete_intersection", std::nullopt, std::nullopt,
                  std::nullopt, std::nullopt,
                  [&] { return minimalGeneratorCount(P) == 2 ? std::string("true") : std::string("false"); });

  std::map<int, PolyIdeal<K>> symPow;
  auto symbolic = [&](int n) -> const PolyIdeal<K>& {
    auto it = symPow.find(n);
    if (it != symPow.end()) return it->second;
    return symPow.emplace(n, saturate(power(P, n), x1).ideal).first->second;
  };

  for (int n = 1; n <= nmax; ++n) {
    detail::addInfo(out, "explore", "minimal_generator_count", std::nullopt, std::nullopt, n,
                    std::nullopt, [&] { return std::to_string(minimalGeneratorCount(symbolic(n))); });
    detail::addInfo(out, "explore", "symbolic_length_mod_x1", std::nullopt, std::nullopt, n,
                    std::nullopt, [&] { return standardMonomialLength(sum(symbolic(n), x1)).str(); });
    detail::addInfo(out, "explore", "symbolic_equals_ordinary", std::nullopt, std::nullopt, n,
                    std::nullopt, [&] {
                      return idealEqual(symbolic(n), power(P, n)) ? std::string("true")
                                                                  : std::string("false");
                    });
  }

  detail::addInfo(out, "explore", "huneke_certificate_search", std::nullopt, std::nullopt,
                  std::nullopt, std::nullopt, [&] {
                    LengthValue e = standardMonomialLength(sum(P, x1));
                    if (!e.isFinite()) return std::string("none (multiplicity not finite)");
                    std::int64_t target = 2 * e.value();
                    for (const Poly<K>& u : P.basis())
                      for (const Poly<K>& v : symbolic(2).basis()) {
                        PolyIdeal<K> cert({x1, u, v}, ord);
                        LengthValue len = standardMonomialLength(cert);
                        if (len.isFinite() && len.value() == target)
                          return "u=" + u.str() + ", v=" + v.str() +
                                 ", length=" + std::to_string(target);
                      }
                    return "none (target " + std::to_string(target) + ")";
                  });
  return out;
}

/// All verify-mode suites for one grid point, in report order.
template <CoefficientField K>
std::vector<CheckResult> verifySuites(const CurveParams& p, const SuiteOptions& opt) {
  Filtration<K> F(p);
  std::vector<CheckResult> out = checkSection2(F, opt);
  auto append = [&out](std::vector<CheckResult> more) {
    for (CheckResult& r : more) out.push_back(std::move(r));
  };
  append(checkSection3(F.monomial(), opt));
  append(checkSection4(F.monomial(), opt));
  append(checkSection5(F, opt));
  append(checkSection6(F, opt));
  return out;
}

}  // namespace symcurve
