#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "symcurve/monomial_ideal.hpp"
#include "symcurve/polynomial.hpp"

namespace symcurve {

template <CoefficientField K>
using PolyList = std::vector<Poly<K>>;

namespace detail {

// Full division: no remainder term is divisible by any leading monomial of G.
// The reducer is always the first match, so the result is deterministic for
// any fixed G; for a reduced basis it is the canonical normal form.
template <CoefficientField K>
Poly<K> reduceFully(const Poly<K>& f, const PolyList<K>& G) {
  const MonomialOrder& ord = f.order();
  Poly<K> cur = f;
  std::vector<Term<K>> remainder;
  while (!cur.isZero()) {
    const Term<K>& lt = cur.leading();
    const Poly<K>* reducer = nullptr;
    for (const Poly<K>& g : G) {
      if (!g.isZero() && divides(g.leadingMono(), lt.mono)) {
        reducer = &g;
        break;
      }
    }
    if (reducer) {
      Monomial shift = exactQuotient(lt.mono, reducer->leadingMono());
      K scale = lt.coeff / reducer->leadingCoeff();
      cur = sub(cur, mulTerm(*reducer, shift, scale));
    } else {
      remainder.push_back(lt);
      std::vector<Term<K>> tail(cur.terms().begin() + 1, cur.terms().end());
      cur = Poly<K>::fromTerms(ord, std::move(tail));
    }
  }
  return Poly<K>::fromTerms(ord, std::move(remainder));
}

// S-polynomial of monic inputs.
template <CoefficientField K>
Poly<K> sPoly(const Poly<K>& f, const Poly<K>& g) {
  Monomial L = lcm(f.leadingMono(), g.leadingMono());
  Poly<K> a = mulTerm(f, exactQuotient(L, f.leadingMono()), K::one() / f.leadingCoeff());
  Poly<K> b = mulTerm(g, exactQuotient(L, g.leadingMono()), K::one() / g.leadingCoeff());
  return sub(a, b);
}

// Mutual reduction to a self-reduced monic set, sorted by ascending leading
// monomial. Restarts after every change; terminates because each replacement
// strictly decreases in the term order.
template <CoefficientField K>
PolyList<K> interreduce(PolyList<K> B, const MonomialOrder& ord) {
  std::erase_if(B, [](const Poly<K>& p) { return p.isZero(); });
  for (Poly<K>& p : B) p = p.monic();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < B.size(); ++i) {
      PolyList<K> others;
      others.reserve(B.size() - 1);
      for (std::size_t j = 0; j < B.size(); ++j)
        if (j != i) others.push_back(B[j]);
      Poly<K> r = reduceFully(B[i], others);
      if (!(r == B[i])) {
        if (r.isZero())
          B.erase(B.begin() + static_cast<std::ptrdiff_t>(i));
        else
          B[i] = r.monic();
        changed = true;
        break;
      }
    }
  }
  std::sort(B.begin(), B.end(), [&ord](const Poly<K>& a, const Poly<K>& b) {
    return ord.cmp(a.leadingMono(), b.leadingMono()) < 0;
  });
  return B;
}

}  // namespace detail

/// Buchberger with normal pair selection (smallest lcm first), the coprime
/// criterion and the chain criterion, followed by full inter-reduction.
/// The result is the unique reduced basis: monic, self-reduced, sorted by
/// ascending leading monomial. Deterministic for fixed input and order.
template <CoefficientField K>
PolyList<K> reducedBasis(PolyList<K> gens, const MonomialOrder& ord) {
  PolyList<K> B;
  for (Poly<K>& g : gens) {
    if (g.isZero()) continue;
    B.push_back(g.resorted(ord).monic());
  }
  if (B.empty()) return B;
  B = detail::interreduce(std::move(B), ord);

  struct PairRef {
    Monomial lcm;
    int i, j;
  };
  auto pairLess = [&ord](const PairRef& a, const PairRef& b) {
    int c = ord.cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::set<PairRef, decltype(pairLess)> queue(pairLess);
  std::set<std::pair<int, int>> pending;

  auto push = [&](int i, int j) {
    queue.insert({lcm(B[i].leadingMono(), B[j].leadingMono()), i, j});
    pending.insert({i, j});
  };
  for (int j = 1; j < static_cast<int>(B.size()); ++j)
    for (int i = 0; i < j; ++i) push(i, j);

  constexpr std::size_t kBasisLimit = 4096;
  while (!queue.empty()) {
    PairRef pr = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pr.i, pr.j});

    const Monomial& li = B[pr.i].leadingMono();
    const Monomial& lj = B[pr.j].leadingMono();
    if (pr.lcm == li * lj) continue;  // coprime leading monomials

    bool chained = false;
    for (int k = 0; k < static_cast<int>(B.size()) && !chained; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!divides(B[k].leadingMono(), pr.lcm)) continue;
      auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!pending.contains(key(pr.i, k)) && !pending.contains(key(pr.j, k))) chained = true;
    }
    if (chained) continue;

    Poly<K> r = detail::reduceFully(detail::sPoly(B[pr.i], B[pr.j]), B);
    if (r.isZero()) continue;
    B.push_back(r.monic());
    if (B.size() > kBasisLimit)
      throw std::runtime_error("Groebner basis computation exceeded the element limit");
    int n = static_cast<int>(B.size()) - 1;
    for (int i = 0; i < n; ++i) push(i, n);
  }

  return detail::interreduce(std::move(B), ord);
}

/// An ideal of the polynomial ring: immutable generators plus a lazily
/// computed reduced basis per order. Copies share the cache; the cache is
/// guarded so concurrent readers are safe.
template <CoefficientField K>
class PolyIdeal {
public:
  PolyIdeal(PolyList<K> gens, MonomialOrder home) : state_(std::make_shared<State>(std::move(home))) {
    for (Poly<K>& g : gens) {
      if (g.arity() != state_->home.arity())
        throw std::invalid_argument("generator arity does not match the ideal order");
      if (!g.isZero()) state_->gens.push_back(g.resorted(state_->home));
    }
  }

  static PolyIdeal zeroIdeal(MonomialOrder home) { return PolyIdeal({}, std::move(home)); }
  static PolyIdeal unitIdeal(MonomialOrder home) {
    Poly<K> one = Poly<K>::constant(home, K::one());
    return PolyIdeal({one}, std::move(home));
  }

  int arity() const { return state_->home.arity(); }
  const MonomialOrder& homeOrder() const { return state_->home; }
  const PolyList<K>& generators() const { return state_->gens; }

  /// Reduced basis under the home order.
  const PolyList<K>& basis() const { return basis(state_->home); }

  /// Reduced basis under an arbitrary order; computed once per order.
  const PolyList<K>& basis(const MonomialOrder& ord) const {
    std::lock_guard<std::mutex> lock(state_->mu);
    for (const auto& entry : state_->cache)
      if (entry.first == ord) return *entry.second;
    auto computed = std::make_shared<PolyList<K>>(reducedBasis(state_->gens, ord));
    state_->cache.emplace_back(ord, computed);
    return *state_->cache.back().second;
  }

  bool isZeroIdeal() const { return basis().empty(); }
  bool isUnitIdeal() const {
    const PolyList<K>& b = basis();
    return b.size() == 1 && !b[0].isZero() && b[0].leadingMono().isUnit();
  }

  /// "(g1, g2, ...)" over the reduced basis under the home order.
  std::string basisStr() const {
    const PolyList<K>& b = basis();
    if (b.empty()) return "(0)";
    std::string out = "(";
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) out += ", ";
      out += b[i].str();
    }
    return out + ")";
  }

private:
  struct State {
    explicit State(MonomialOrder h) : home(std::move(h)) {}
    MonomialOrder home;
    PolyList<K> gens;
    mutable std::mutex mu;
    mutable std::vector<std::pair<MonomialOrder, std::shared_ptr<PolyList<K>>>> cache;
  };
  std::shared_ptr<State> state_;
};

/// Canonical remainder of f modulo the reduced basis of I. The sort order of
/// f must match the ideal's home order.
template <CoefficientField K>
Poly<K> normalForm(const Poly<K>& f, const PolyIdeal<K>& I) {
  if (!(f.order() == I.homeOrder()))
    throw std::invalid_argument("normalForm: polynomial order does not match the cached basis order");
  return detail::reduceFully(f, I.basis());
}

template <CoefficientField K>
bool idealContains(const PolyIdeal<K>& I, const Poly<K>& f) {
  return normalForm(f.resorted(I.homeOrder()), I).isZero();
}

template <CoefficientField K>
bool isSubset(const PolyIdeal<K>& inner, const PolyIdeal<K>& outer) {
  for (const Poly<K>& g : inner.generators())
    if (!idealContains(outer, g)) return false;
  return true;
}

/// Reduced bases under one shared order are unique, so ideal equality is
/// basis equality.
template <CoefficientField K>
bool idealEqual(const PolyIdeal<K>& I, const PolyIdeal<K>& J) {
  if (I.arity() != J.arity()) throw std::invalid_argument("ideal arity mismatch");
  const MonomialOrder& ord = I.homeOrder();
  const PolyList<K>& a = I.basis(ord);
  const PolyList<K>& b = J.basis(ord);
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

template <CoefficientField K>
PolyIdeal<K> sum(const PolyIdeal<K>& I, const PolyIdeal<K>& J) {
  if (I.arity() != J.arity()) throw std::invalid_argument("ideal arity mismatch");
  PolyList<K> gens = I.generators();
  for (const Poly<K>& g : J.generators()) gens.push_back(g.resorted(I.homeOrder()));
  return PolyIdeal<K>(std::move(gens), I.homeOrder());
}

template <CoefficientField K>
PolyIdeal<K> sum(const PolyIdeal<K>& I, const Poly<K>& f) {
  PolyList<K> gens = I.generators();
  gens.push_back(f.resorted(I.homeOrder()));
  return PolyIdeal<K>(std::move(gens), I.homeOrder());
}

template <CoefficientField K>
PolyIdeal<K> product(const PolyIdeal<K>& I, const PolyIdeal<K>& J) {
  if (I.arity() != J.arity()) throw std::invalid_argument("ideal arity mismatch");
  PolyList<K> gens;
  for (const Poly<K>& a : I.generators())
    for (const Poly<K>& b : J.generators()) {
      Poly<K> p = mul(a, b.resorted(I.homeOrder()));
      bool dup = false;
      for (const Poly<K>& seen : gens)
        if (seen == p) { dup = true; break; }
      if (!dup) gens.push_back(std::move(p));
    }
  return PolyIdeal<K>(std::move(gens), I.homeOrder());
}

/// power(I, 0) is the unit ideal; generators are the distinct k-fold products.
template <CoefficientField K>
PolyIdeal<K> power(const PolyIdeal<K>& I, int k) {
  if (k < 0) throw std::invalid_argument("negative ideal power");
  if (k == 0) return PolyIdeal<K>::unitIdeal(I.homeOrder());
  const PolyList<K>& g = I.generators();
  if (g.empty()) return PolyIdeal<K>::zeroIdeal(I.homeOrder());
  PolyList<K> gens;
  std::vector<int> pick(static_cast<std::size_t>(k), 0);
  // multisets of size k over g (combinations with repetition)
  while (true) {
    Poly<K> p = Poly<K>::constant(I.homeOrder(), K::one());
    for (int idx : pick) p = mul(p, g[static_cast<std::size_t>(idx)]);
    gens.push_back(std::move(p));
    int pos = k - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == static_cast<int>(g.size()) - 1) --pos;
    if (pos < 0) break;
    int v = pick[static_cast<std::size_t>(pos)] + 1;
    for (int t = pos; t < k; ++t) pick[static_cast<std::size_t>(t)] = v;
  }
  return PolyIdeal<K>(std::move(gens), I.homeOrder());
}

/// Exact single-divisor division; nullopt when den does not divide num.
template <CoefficientField K>
std::optional<Poly<K>> exactDivide(const Poly<K>& num, const Poly<K>& den) {
  if (den.isZero()) throw std::invalid_argument("division by the zero polynomial");
  detail::requireSameOrder(num, den);
  Poly<K> cur = num;
  std::vector<Term<K>> quotient;
  while (!cur.isZero()) {
    const Term<K>& lt = cur.leading();
    if (!divides(den.leadingMono(), lt.mono)) return std::nullopt;
    Monomial qm = exactQuotient(lt.mono, den.leadingMono());
    K qc = lt.coeff / den.leadingCoeff();
    cur = sub(cur, mulTerm(den, qm, qc));
    quotient.push_back({std::move(qm), std::move(qc)});
  }
  return Poly<K>::fromTerms(num.order(), std::move(quotient));
}

namespace detail {

template <CoefficientField K>
Poly<K> embedPoly(const Poly<K>& p, const MonomialOrder& bigOrd) {
  std::vector<Term<K>> terms;
  terms.reserve(p.termCount());
  for (const Term<K>& t : p.terms()) terms.push_back({extendArity(t.mono, bigOrd.arity()), t.coeff});
  return Poly<K>::fromTerms(bigOrd, std::move(terms));
}

template <CoefficientField K>
Poly<K> projectPoly(const Poly<K>& p, int var, const MonomialOrder& smallOrd) {
  std::vector<Term<K>> terms;
  terms.reserve(p.termCount());
  for (const Term<K>& t : p.terms()) terms.push_back({dropVar(t.mono, var), t.coeff});
  return Poly<K>::fromTerms(smallOrd, std::move(terms));
}

inline std::vector<int> orderWeightsOrOnes(const MonomialOrder& ord) {
  if (ord.kind() == MonomialOrder::Kind::Lex) return std::vector<int>(static_cast<std::size_t>(ord.arity()), 1);
  return ord.weights();
}

}  // namespace detail

/// Sub-ideal of basis elements free of `var`; requires the basis to be
/// computed under an elimination order for `var`.
template <CoefficientField K>
PolyIdeal<K> eliminate(const PolyIdeal<K>& I, int var) {
  if (!I.homeOrder().eliminates(var))
    throw std::invalid_argument("eliminate: the ideal's order is not an elimination order for " +
                                std::string(variableName(I.arity(), var)));
  PolyList<K> kept;
  for (const Poly<K>& g : I.basis()) {
    bool free = true;
    for (const Term<K>& t : g.terms())
      if (t.mono.exp(var) != 0) { free = false; break; }
    if (free) kept.push_back(g);
  }
  return PolyIdeal<K>(std::move(kept), I.homeOrder());
}

/// (I : f) through the tag-variable intersection I ∩ (f) followed by exact
/// division. Throws std::logic_error if a computed intersection generator
/// fails to divide by f (an internal invariant violation).
template <CoefficientField K>
PolyIdeal<K> colon(const PolyIdeal<K>& I, const Poly<K>& f) {
  if (f.isZero()) throw std::invalid_argument("colon by the zero polynomial");
  const MonomialOrder& home = I.homeOrder();
  int arity = I.arity();
  if (arity + 1 > Monomial::kMaxArity)
    throw std::invalid_argument("colon: no spare elimination variable at arity 4");

  std::vector<int> w4 = detail::orderWeightsOrOnes(home);
  w4.push_back(1);
  MonomialOrder ord4 = MonomialOrder::elim(arity, w4);

  Poly<K> tag = Poly<K>::variable(ord4, arity);
  Poly<K> oneMinusTag = sub(Poly<K>::constant(ord4, K::one()), tag);
  PolyList<K> gens4;
  for (const Poly<K>& g : I.basis()) gens4.push_back(mul(tag, detail::embedPoly(g, ord4)));
  gens4.push_back(mul(oneMinusTag, detail::embedPoly(f.resorted(home), ord4)));

  PolyIdeal<K> J4(std::move(gens4), ord4);
  PolyIdeal<K> inter4 = eliminate(J4, arity);

  Poly<K> fh = f.resorted(home);
  PolyList<K> quotients;
  for (const Poly<K>& g4 : inter4.basis()) {
    Poly<K> g = detail::projectPoly(g4, arity, home);
    std::optional<Poly<K>> q = exactDivide(g, fh);
    if (!q)
      throw std::logic_error("colon: intersection generator is not divisible by the divisor");
    quotients.push_back(std::move(*q));
  }
  return PolyIdeal<K>(std::move(quotients), home);
}

template <CoefficientField K>
struct Saturation {
  PolyIdeal<K> ideal;
  int exponent;  // smallest s with (I : f^s) = (I : f^infinity)
};

/// Iterated colon until stabilization.
template <CoefficientField K>
Saturation<K> saturate(const PolyIdeal<K>& I, const Poly<K>& f) {
  PolyIdeal<K> cur = I;
  for (int step = 0; step < 64; ++step) {
    PolyIdeal<K> next = colon(cur, f);
    if (idealEqual(cur, next)) return {cur, step};
    cur = next;
  }
  throw std::runtime_error("saturation did not stabilize within 64 steps");
}

/// Length of the quotient by I via the staircase of the leading-term ideal.
template <CoefficientField K>
LengthValue standardMonomialLength(const PolyIdeal<K>& I) {
  const PolyList<K>& B = I.basis();
  if (B.empty()) return LengthValue::infinite();
  std::vector<Monomial> lt;
  lt.reserve(B.size());
  for (const Poly<K>& g : B) lt.push_back(g.leadingMono());
  return quotientLength(MonomialIdeal(I.arity(), std::move(lt)));
}

/// Kernel of x1 -> t^a, x2 -> t^b, x3 -> t^c, by eliminating the tag.
template <CoefficientField K>
PolyIdeal<K> toricIdeal(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("toric exponents must be positive");
  if (a == b || b == c || a == c) throw std::invalid_argument("toric exponents must be pairwise distinct");
  std::vector<int> w{a, b, c};
  MonomialOrder home = MonomialOrder::wgrlex(w);
  MonomialOrder ord4 = MonomialOrder::elim(3, {a, b, c, 1});

  PolyList<K> gens;
  int powers[3] = {a, b, c};
  for (int i = 0; i < 3; ++i) {
    gens.push_back(Poly<K>::fromTerms(
        ord4, {{Monomial::var(4, i), K::one()}, {Monomial::var(4, 3, powers[i]), -K::one()}}));
  }
  PolyIdeal<K> J4(std::move(gens), ord4);
  PolyIdeal<K> inter = eliminate(J4, 3);
  PolyList<K> projected;
  for (const Poly<K>& g : inter.basis()) projected.push_back(detail::projectPoly(g, 3, home));
  return PolyIdeal<K>(std::move(projected), home);
}

/// Certifies the cached basis: every original generator and every
/// S-polynomial of the basis reduces to zero.
template <CoefficientField K>
bool basisIsGroebner(const PolyIdeal<K>& I) {
  const PolyList<K>& B = I.basis();
  if (B.empty()) return I.generators().empty();
  for (const Poly<K>& g : I.generators())
    if (!detail::reduceFully(g, B).isZero()) return false;
  for (std::size_t j = 1; j < B.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!detail::reduceFully(detail::sPoly(B[i], B[j]), B).isZero()) return false;
  return true;
}

/// Size of a minimal homogeneous generating set, by the ascending-degree
/// greedy filter over the reduced basis. Meaningful for weighted-homogeneous
/// ideals (all ideals in this engine are).
template <CoefficientField K>
int minimalGeneratorCount(const PolyIdeal<K>& I) {
  const PolyList<K>& B = I.basis();
  if (B.empty()) return 0;
  PolyList<K> kept;
  for (const Poly<K>& g : B) {
    if (kept.empty()) {
      kept.push_back(g);
      continue;
    }
    PolyIdeal<K> J(kept, I.homeOrder());
    if (!normalForm(g, J).isZero()) kept.push_back(g);
  }
  return static_cast<int>(kept.size());
}

}  // namespace symcurve
