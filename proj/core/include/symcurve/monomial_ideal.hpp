#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symcurve/monomial.hpp"

namespace symcurve {

/// Length of a quotient ring as a k-vector space, with an explicit marker for
/// quotients that are not finite-dimensional.
class LengthValue {
public:
  static LengthValue finite(std::int64_t n);
  static LengthValue infinite() { return LengthValue(); }

  bool isFinite() const { return finite_; }
  /// Throws std::logic_error when infinite.
  std::int64_t value() const;
  std::string str() const;

  friend bool operator==(const LengthValue&, const LengthValue&) = default;

private:
  LengthValue() = default;
  bool finite_ = false;
  std::int64_t value_ = 0;
};

/// A monomial ideal stored by its unique minimal generating set, sorted in
/// descending lex order so that equal ideals have identical representations.
/// The empty generator set is the zero ideal; the unit ideal is generated
/// by the unit monomial.
class MonomialIdeal {
public:
  /// Minimalizes and canonically sorts the given generators.
  MonomialIdeal(int arity, std::vector<Monomial> gens);

  static MonomialIdeal zero(int arity) { return MonomialIdeal(arity, {}); }
  static MonomialIdeal unit(int arity) { return MonomialIdeal(arity, {Monomial(arity)}); }

  int arity() const { return arity_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool isZero() const { return gens_.empty(); }
  bool isUnit() const { return gens_.size() == 1 && gens_[0].isUnit(); }

  /// "(x2^2, x2*x3, x3^2)"; the zero ideal renders as "(0)".
  std::string str() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  int arity_;
  std::vector<Monomial> gens_;
};

/// The unique minimal generating set of the ideal generated by `gens`.
MonomialIdeal minimalize(int arity, std::vector<Monomial> gens);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const Monomial& v);
/// power(I, 0) is the unit ideal.
MonomialIdeal power(const MonomialIdeal& a, int k);

/// (I : v) = ({ u / gcd(u, v) : u generator of I }).
MonomialIdeal colon(const MonomialIdeal& I, const Monomial& v);

/// (I : J) over all generators of J; J must be nonzero.
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);

/// Computed via pairwise lcms of the generators.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// Membership: some generator divides w.
bool contains(const MonomialIdeal& I, const Monomial& w);
bool isSubset(const MonomialIdeal& inner, const MonomialIdeal& outer);

/// Number of monomials outside I (the staircase count); infinite unless I
/// contains a pure power of every variable.
LengthValue quotientLength(const MonomialIdeal& I);

/// dim_k(small/big) for big <= small, both Artinian; throws otherwise,
/// naming a violating generator.
std::int64_t quotientDim(const MonomialIdeal& small, const MonomialIdeal& big);

}  // namespace symcurve
