#pragma once

#include <algorithm>
#include <concepts>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "symcurve/monomial.hpp"
#include "symcurve/order.hpp"
#include "symcurve/poly_text.hpp"

namespace symcurve {

/// Coefficient field contract shared by Rat and Fp.
template <typename K>
concept CoefficientField = requires(K a, K b, std::string_view s) {
  { K::zero() } -> std::convertible_to<K>;
  { K::one() } -> std::convertible_to<K>;
  { K::parse(s) };
  { a.isZero() } -> std::convertible_to<bool>;
  { a.isOne() } -> std::convertible_to<bool>;
  { a.isNegative() } -> std::convertible_to<bool>;
  { a.abs() } -> std::convertible_to<K>;
  { a.inverse() } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a* b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { a == b } -> std::convertible_to<bool>;
  { a.str() } -> std::convertible_to<std::string>;
};

template <CoefficientField K>
struct Term {
  Monomial mono;
  K coeff;
};

/// A sparse polynomial: nonzero terms sorted strictly descending under the
/// order fixed at construction. Immutable; arithmetic returns new values.
template <CoefficientField K>
class Poly {
public:
  explicit Poly(MonomialOrder ord) : ord_(std::move(ord)) {}

  /// Merges duplicate monomials and drops zero coefficients.
  static Poly fromTerms(MonomialOrder ord, std::vector<Term<K>> terms) {
    Poly p(std::move(ord));
    for (const Term<K>& t : terms)
      if (t.mono.arity() != p.arity())
        throw std::invalid_argument("term arity does not match polynomial order");
    std::sort(terms.begin(), terms.end(), [&p](const Term<K>& a, const Term<K>& b) {
      return p.ord_.cmp(a.mono, b.mono) > 0;
    });
    for (Term<K>& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
        p.terms_.back().coeff += t.coeff;
      else
        p.terms_.push_back(std::move(t));
    }
    std::erase_if(p.terms_, [](const Term<K>& t) { return t.coeff.isZero(); });
    return p;
  }

  static Poly constant(MonomialOrder ord, K c) {
    Monomial unit(ord.arity());
    return fromTerms(std::move(ord), {{unit, std::move(c)}});
  }

  static Poly monomialTerm(MonomialOrder ord, Monomial m, K c = K::one()) {
    return fromTerms(std::move(ord), {{std::move(m), std::move(c)}});
  }

  static Poly variable(MonomialOrder ord, int var, int pow = 1) {
    int arity = ord.arity();
    return monomialTerm(std::move(ord), Monomial::var(arity, var, pow));
  }

  const MonomialOrder& order() const { return ord_; }
  int arity() const { return ord_.arity(); }
  bool isZero() const { return terms_.empty(); }
  std::size_t termCount() const { return terms_.size(); }
  std::span<const Term<K>> terms() const { return terms_; }

  const Term<K>& leading() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
    return terms_.front();
  }
  const Monomial& leadingMono() const { return leading().mono; }
  const K& leadingCoeff() const { return leading().coeff; }

  Poly resorted(const MonomialOrder& ord) const {
    if (ord == ord_) return *this;
    std::vector<Term<K>> ts(terms_.begin(), terms_.end());
    return fromTerms(ord, std::move(ts));
  }

  Poly monic() const {
    if (isZero()) return *this;
    if (leadingCoeff().isOne()) return *this;
    K inv = leadingCoeff().inverse();
    Poly out(ord_);
    out.terms_.reserve(terms_.size());
    for (const Term<K>& t : terms_) out.terms_.push_back({t.mono, t.coeff * inv});
    return out;
  }

  /// Canonical text form, e.g. "x1^2*x2 - x3^2" or "-x1^5 + 1/2*x3".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const Term<K>& t = terms_[i];
      bool neg = K::kHasSign && t.coeff.isNegative();
      K mag = neg ? t.coeff.abs() : t.coeff;
      if (i == 0)
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (t.mono.isUnit())
        out += mag.str();
      else if (mag.isOne())
        out += t.mono.str();
      else
        out += mag.str() + "*" + t.mono.str();
    }
    return out;
  }

  /// Inverse of str(); throws std::invalid_argument on malformed input.
  static Poly parse(std::string_view text, MonomialOrder ord) {
    std::vector<detail::TextTerm> raw = detail::splitPolyText(text, ord.arity());
    std::vector<Term<K>> terms;
    terms.reserve(raw.size());
    for (detail::TextTerm& r : raw) {
      auto c = K::parse(r.coeff);
      if (!c) throw std::invalid_argument("bad coefficient \"" + r.coeff + "\"");
      K coeff = r.negative ? -*c : *c;
      terms.push_back({r.mono, std::move(coeff)});
    }
    return fromTerms(std::move(ord), std::move(terms));
  }

  /// Equality as polynomials (order-independent).
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.arity() != b.arity() || a.terms_.size() != b.terms_.size()) return false;
    if (a.ord_ == b.ord_) {
      for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].mono == b.terms_[i].mono && a.terms_[i].coeff == b.terms_[i].coeff))
          return false;
      return true;
    }
    auto canon = [](const Poly& p) {
      std::vector<Term<K>> ts(p.terms_.begin(), p.terms_.end());
      std::sort(ts.begin(), ts.end(),
                [](const Term<K>& x, const Term<K>& y) { return lexLess(x.mono, y.mono); });
      return ts;
    };
    auto ta = canon(a), tb = canon(b);
    for (std::size_t i = 0; i < ta.size(); ++i)
      if (!(ta[i].mono == tb[i].mono && ta[i].coeff == tb[i].coeff)) return false;
    return true;
  }

private:
  std::vector<Term<K>> terms_;
  MonomialOrder ord_;
};

namespace detail {
template <CoefficientField K>
void requireSameOrder(const Poly<K>& a, const Poly<K>& b) {
  if (!(a.order() == b.order()))
    throw std::invalid_argument("polynomial order mismatch");
}
}  // namespace detail

template <CoefficientField K>
Poly<K> add(const Poly<K>& a, const Poly<K>& b) {
  detail::requireSameOrder(a, b);
  std::vector<Term<K>> out;
  out.reserve(a.termCount() + b.termCount());
  auto ta = a.terms(), tb = b.terms();
  std::size_t i = 0, j = 0;
  const MonomialOrder& ord = a.order();
  while (i < ta.size() && j < tb.size()) {
    int c = ord.cmp(ta[i].mono, tb[j].mono);
    if (c > 0) {
      out.push_back(ta[i++]);
    } else if (c < 0) {
      out.push_back(tb[j++]);
    } else {
      K s = ta[i].coeff + tb[j].coeff;
      if (!s.isZero()) out.push_back({ta[i].mono, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < ta.size(); ++i) out.push_back(ta[i]);
  for (; j < tb.size(); ++j) out.push_back(tb[j]);
  Poly<K> r = Poly<K>::fromTerms(ord, std::move(out));
  return r;
}

template <CoefficientField K>
Poly<K> neg(const Poly<K>& a) {
  std::vector<Term<K>> out;
  out.reserve(a.termCount());
  for (const Term<K>& t : a.terms()) out.push_back({t.mono, -t.coeff});
  return Poly<K>::fromTerms(a.order(), std::move(out));
}

template <CoefficientField K>
Poly<K> sub(const Poly<K>& a, const Poly<K>& b) {
  return add(a, neg(b));
}

/// a * (c * m).
template <CoefficientField K>
Poly<K> mulTerm(const Poly<K>& a, const Monomial& m, const K& c) {
  if (c.isZero()) return Poly<K>(a.order());
  std::vector<Term<K>> out;
  out.reserve(a.termCount());
  for (const Term<K>& t : a.terms()) out.push_back({t.mono * m, t.coeff * c});
  return Poly<K>::fromTerms(a.order(), std::move(out));
}

template <CoefficientField K>
Poly<K> mul(const Poly<K>& a, const Poly<K>& b) {
  detail::requireSameOrder(a, b);
  std::vector<Term<K>> out;
  out.reserve(a.termCount() * b.termCount());
  for (const Term<K>& ta : a.terms())
    for (const Term<K>& tb : b.terms()) out.push_back({ta.mono * tb.mono, ta.coeff * tb.coeff});
  return Poly<K>::fromTerms(a.order(), std::move(out));
}

template <CoefficientField K>
Poly<K> polyPow(const Poly<K>& a, int k) {
  if (k < 0) throw std::invalid_argument("negative polynomial power");
  Poly<K> acc = Poly<K>::constant(a.order(), K::one());
  for (int i = 0; i < k; ++i) acc = mul(acc, a);
  return acc;
}

/// Both terms of every binomial share one weighted degree; general test.
template <CoefficientField K>
bool isWeightedHomogeneous(const Poly<K>& p, std::span<const int> weights) {
  if (p.isZero()) return true;
  long long d = p.leadingMono().weightedDegree(weights);
  for (const Term<K>& t : p.terms())
    if (t.mono.weightedDegree(weights) != d) return false;
  return true;
}

}  // namespace symcurve
