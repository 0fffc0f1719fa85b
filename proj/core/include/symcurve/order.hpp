#pragma once

#include <string>
#include <vector>

#include "symcurve/monomial.hpp"

namespace symcurve {

/// Admissible monomial orders:
///  - Lex: x1 > x2 > x3 (> t), plain lexicographic.
///  - WGrLex: weighted total degree first, ties broken lexicographically.
///  - Elim(k): exponent of variable k first, ties broken by weighted degree
///    on the remaining variables, then lex. Any basis computed under Elim(k)
///    is an elimination basis for variable k.
class MonomialOrder {
public:
  enum class Kind { Lex, WGrLex, Elim };

  static MonomialOrder lex(int arity);
  static MonomialOrder wgrlex(std::vector<int> weights);
  static MonomialOrder elim(int var, std::vector<int> weights);

  Kind kind() const { return kind_; }
  int arity() const { return arity_; }
  const std::vector<int>& weights() const { return weights_; }
  int elimVar() const { return elimVar_; }
  bool eliminates(int var) const { return kind_ == Kind::Elim && elimVar_ == var; }

  /// Sign of (a - b) in the order; 0 only for identical monomials.
  int cmp(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

  std::string str() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
  MonomialOrder(Kind kind, int arity, std::vector<int> weights, int elimVar);
  Kind kind_;
  int arity_;
  std::vector<int> weights_;
  int elimVar_;
};

}  // namespace symcurve
