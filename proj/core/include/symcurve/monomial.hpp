#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

namespace symcurve {

/// A monomial in 2, 3 or 4 variables with non-negative integer exponents.
///
/// The arity is fixed at construction; combining monomials of different
/// arities throws. Display names follow the ambient ring: {x2, x3} in two
/// variables, {x1, x2, x3} in three, {x1, x2, x3, t} in four (t is the
/// elimination tag used internally by ideal quotients).
class Monomial {
public:
  static constexpr int kMaxArity = 4;

  /// The unit monomial (all exponents zero) of the given arity.
  explicit Monomial(int arity);

  /// Exponent-vector constructor; the arity is the list size.
  Monomial(std::initializer_list<int> exps);

  static Monomial fromExponents(std::span<const int> exps);

  /// index-th variable raised to `power` (power >= 0).
  static Monomial var(int arity, int index, int power = 1);

  int arity() const { return arity_; }
  int exp(int i) const;
  bool isUnit() const;
  long long totalDegree() const;
  long long weightedDegree(std::span<const int> weights) const;

  /// Canonical text form, e.g. "x2^3*x3" (arity 2) or "x1*x3^2" (arity 3);
  /// the unit monomial renders as "1".
  std::string str() const;
  /// Inverse of str(); accepts optional whitespace around '*'.
  static Monomial parse(std::string_view text, int arity);

  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  std::array<int, kMaxArity> e_{};
  int arity_ = 0;

  friend bool divides(const Monomial&, const Monomial&);
  friend Monomial lcm(const Monomial&, const Monomial&);
  friend Monomial gcd(const Monomial&, const Monomial&);
  friend Monomial operator*(const Monomial&, const Monomial&);
  friend Monomial exactQuotient(const Monomial&, const Monomial&);
  friend int lexCompare(const Monomial&, const Monomial&);
};

/// a | b, i.e. the exponent vector of a is componentwise <= b's.
bool divides(const Monomial& a, const Monomial& b);

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);

/// a / b; throws unless b | a.
Monomial exactQuotient(const Monomial& a, const Monomial& b);

/// u / gcd(u, v): the generator image under the colon by v.
Monomial colonQuotient(const Monomial& u, const Monomial& v);

/// Lexicographic comparison of exponent vectors (first variable weighs most).
/// Returns <0, 0 or >0.
int lexCompare(const Monomial& a, const Monomial& b);
bool lexLess(const Monomial& a, const Monomial& b);

/// Copy into a larger arity; new trailing exponents are zero.
Monomial extendArity(const Monomial& m, int newArity);

/// Remove variable `var` (its exponent must be zero), decreasing the arity.
Monomial dropVar(const Monomial& m, int var);

/// Variable display name for the given arity, e.g. (2, 0) -> "x2".
std::string_view variableName(int arity, int index);

}  // namespace symcurve
