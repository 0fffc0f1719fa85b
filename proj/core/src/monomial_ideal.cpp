#include "symcurve/monomial_ideal.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace symcurve {

namespace {

void checkSameArity(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.arity() != b.arity())
    throw std::invalid_argument("ideal arity mismatch: " + std::to_string(a.arity()) +
                                " vs " + std::to_string(b.arity()));
}

// Minimal pure-power exponent of variable v, or -1 if no generator is a pure
// power of v. Generators are minimal, so at most one qualifies.
int purePowerExponent(const MonomialIdeal& I, int v) {
  for (const Monomial& g : I.gens()) {
    bool pure = true;
    for (int i = 0; i < I.arity(); ++i)
      if (i != v && g.exp(i) != 0) { pure = false; break; }
    if (pure) return g.exp(v);
  }
  return -1;
}

}  // namespace

LengthValue LengthValue::finite(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("negative length");
  LengthValue v;
  v.finite_ = true;
  v.value_ = n;
  return v;
}

std::int64_t LengthValue::value() const {
  if (!finite_) throw std::logic_error("length is infinite");
  return value_;
}

std::string LengthValue::str() const { return finite_ ? std::to_string(value_) : "inf"; }

MonomialIdeal::MonomialIdeal(int arity, std::vector<Monomial> gens) : arity_(arity) {
  Monomial probe(arity);  // validates the arity range
  (void)probe;
  for (const Monomial& g : gens)
    if (g.arity() != arity)
      throw std::invalid_argument("generator arity mismatch in monomial ideal");

  // Canonical form: descending lex, distinct, and no generator divides another.
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return lexCompare(a, b) > 0; });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i != j && divides(gens[j], gens[i])) { redundant = true; break; }
    }
    if (!redundant) gens_.push_back(gens[i]);
  }
}

std::string MonomialIdeal::str() const {
  if (isZero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].str();
  }
  out += ')';
  return out;
}

MonomialIdeal minimalize(int arity, std::vector<Monomial> gens) {
  return MonomialIdeal(arity, std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  checkSameArity(a, b);
  std::vector<Monomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(a.arity(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  checkSameArity(a, b);
  if (a.isZero() || b.isZero()) return MonomialIdeal::zero(a.arity());
  std::vector<Monomial> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const Monomial& u : a.gens())
    for (const Monomial& v : b.gens()) gens.push_back(u * v);
  return MonomialIdeal(a.arity(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const Monomial& v) {
  std::vector<Monomial> gens;
  gens.reserve(a.gens().size());
  for (const Monomial& u : a.gens()) gens.push_back(u * v);
  return MonomialIdeal(a.arity(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, int k) {
  if (k < 0) throw std::invalid_argument("negative ideal power");
  MonomialIdeal acc = MonomialIdeal::unit(a.arity());
  for (int i = 0; i < k; ++i) acc = product(acc, a);
  return acc;
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& v) {
  if (v.arity() != I.arity()) throw std::invalid_argument("colon arity mismatch");
  std::vector<Monomial> gens;
  gens.reserve(I.gens().size());
  for (const Monomial& u : I.gens()) gens.push_back(colonQuotient(u, v));
  return MonomialIdeal(I.arity(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  checkSameArity(I, J);
  if (J.isZero())
    throw std::invalid_argument("colon by the zero ideal must be requested explicitly");
  bool first = true;
  MonomialIdeal acc = MonomialIdeal::zero(I.arity());
  for (const Monomial& v : J.gens()) {
    MonomialIdeal c = colon(I, v);
    acc = first ? c : intersect(acc, c);
    first = false;
  }
  return acc;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  checkSameArity(a, b);
  if (a.isZero() || b.isZero()) return MonomialIdeal::zero(a.arity());
  std::vector<Monomial> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const Monomial& u : a.gens())
    for (const Monomial& v : b.gens()) gens.push_back(lcm(u, v));
  return MonomialIdeal(a.arity(), std::move(gens));
}

bool contains(const MonomialIdeal& I, const Monomial& w) {
  if (w.arity() != I.arity()) throw std::invalid_argument("membership arity mismatch");
  for (const Monomial& g : I.gens())
    if (divides(g, w)) return true;
  return false;
}

bool isSubset(const MonomialIdeal& inner, const MonomialIdeal& outer) {
  checkSameArity(inner, outer);
  for (const Monomial& g : inner.gens())
    if (!contains(outer, g)) return false;
  return true;
}

LengthValue quotientLength(const MonomialIdeal& I) {
  if (I.isZero()) return LengthValue::infinite();
  if (I.isUnit()) return LengthValue::finite(0);

  const int n = I.arity();
  std::vector<int> bound(n);
  for (int v = 0; v < n; ++v) {
    int e = purePowerExponent(I, v);
    if (e < 0) return LengthValue::infinite();
    bound[v] = e;
  }

  if (n == 2) {
    // Row scan: for each x3-exponent b, the monomials outside I are exactly
    // those with x2-exponent below min{ g.exp(0) : g generator, g.exp(1) <= b }.
    std::int64_t total = 0;
    for (int b = 0; b < bound[1]; ++b) {
      int minA = std::numeric_limits<int>::max();
      for (const Monomial& g : I.gens())
        if (g.exp(1) <= b) minA = std::min(minA, g.exp(0));
      total += minA;
    }
    return LengthValue::finite(total);
  }

  // Bounded box scan for arity >= 3.
  std::vector<int> e(n, 0);
  std::int64_t total = 0;
  while (true) {
    Monomial w = Monomial::fromExponents(e);
    if (!contains(I, w)) ++total;
    int i = 0;
    for (; i < n; ++i) {
      if (++e[i] < bound[i]) break;
      e[i] = 0;
    }
    if (i == n) break;
  }
  return LengthValue::finite(total);
}

std::int64_t quotientDim(const MonomialIdeal& small, const MonomialIdeal& big) {
  checkSameArity(small, big);
  for (const Monomial& g : big.gens())
    if (!contains(small, g))
      throw std::invalid_argument("quotientDim: containment failure, generator " + g.str() +
                                  " of the inner ideal is outside the outer ideal");
  LengthValue ls = quotientLength(small);
  LengthValue lb = quotientLength(big);
  if (!ls.isFinite() || !lb.isFinite())
    throw std::invalid_argument("quotientDim requires Artinian ideals");
  return lb.value() - ls.value();
}

}  // namespace symcurve
