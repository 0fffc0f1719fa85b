#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "symcurve/polynomial.hpp"
#include "symcurve/prime_field.hpp"
#include "symcurve/rational.hpp"

using namespace symcurve;

namespace {

const MonomialOrder kOrd = MonomialOrder::wgrlex({3, 4, 5});

Poly<Rat> rp(const std::string& text) { return Poly<Rat>::parse(text, kOrd); }

template <CoefficientField K>
Poly<K> randomPoly(std::mt19937& rng, const MonomialOrder& ord, int maxTerms, int maxExp) {
  std::uniform_int_distribution<int> termCount(0, maxTerms);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::vector<Term<K>> terms;
  int n = termCount(rng);
  for (int i = 0; i < n; ++i)
    terms.push_back({test::randomMonomial(rng, ord.arity(), maxExp), K(coeff(rng))});
  return Poly<K>::fromTerms(ord, std::move(terms));
}

}  // namespace

TEST_CASE("construction and leading data") {
  Poly<Rat> zero(kOrd);
  CHECK(zero.isZero());
  CHECK(zero.str() == "0");
  CHECK_THROWS_AS(zero.leading(), std::logic_error);

  Poly<Rat> g3 = rp("x2^2 - x1*x3");
  CHECK(g3.termCount() == 2);
  // weights (3,4,5): x1*x3 and x2^2 tie at 8, lex prefers x1
  CHECK(g3.leadingMono() == Monomial{1, 0, 1});
  CHECK(g3.leadingCoeff() == Rat(-1));
  CHECK(g3.monic().leadingCoeff().isOne());
  CHECK(g3.monic().str() == "x1*x3 - x2^2");

  // duplicate monomials merge, zero coefficients vanish
  Poly<Rat> merged = Poly<Rat>::fromTerms(
      kOrd, {{Monomial{1, 0, 0}, Rat(2)}, {Monomial{1, 0, 0}, Rat(-2)}, {Monomial(3), Rat(1)}});
  CHECK(merged.termCount() == 1);
  CHECK(merged.str() == "1");
}

TEST_CASE("arithmetic identities") {
  std::mt19937 rng(97);
  for (int i = 0; i < 60; ++i) {
    Poly<Rat> a = randomPoly<Rat>(rng, kOrd, 6, 4);
    Poly<Rat> b = randomPoly<Rat>(rng, kOrd, 6, 4);
    Poly<Rat> c = randomPoly<Rat>(rng, kOrd, 4, 3);
    CHECK(add(a, b) == add(b, a));
    CHECK(mul(a, b) == mul(b, a));
    CHECK(sub(a, a).isZero());
    CHECK(mul(add(a, b), c) == add(mul(a, c), mul(b, c)));
    // (a+b)(a-b) = a^2 - b^2
    CHECK(mul(add(a, b), sub(a, b)) == sub(mul(a, a), mul(b, b)));
  }
  CHECK(polyPow(rp("x1 - x2"), 2) == rp("x1^2 - 2*x1*x2 + x2^2"));
  CHECK(polyPow(rp("x1"), 0) == rp("1"));
}

TEST_CASE("parse and print round trip") {
  std::mt19937 rng(101);
  for (int i = 0; i < 250; ++i) {
    Poly<Rat> p = randomPoly<Rat>(rng, kOrd, 7, 5);
    CHECK(Poly<Rat>::parse(p.str(), kOrd) == p);
  }
  Fp::setModulus(32003);
  MonomialOrder ord2 = MonomialOrder::lex(3);
  for (int i = 0; i < 250; ++i) {
    Poly<Fp> p = randomPoly<Fp>(rng, ord2, 7, 5);
    CHECK(Poly<Fp>::parse(p.str(), ord2) == p);
  }

  // terms print in descending weighted order: x2 (weight 4) before x1 (weight 3)
  CHECK(rp("1/2*x1 - x2").str() == "-x2 + 1/2*x1");
  CHECK(rp("-x3^2").str() == "-x3^2");
  CHECK(rp("x1^2*x2 - x3^2").str() == "x1^2*x2 - x3^2");
  CHECK(rp("3").str() == "3");
  CHECK(rp("x1 + 0*x2") == rp("x1"));

  CHECK_THROWS_AS(rp(""), std::invalid_argument);
  CHECK_THROWS_AS(rp("x1 +"), std::invalid_argument);
  CHECK_THROWS_AS(rp("x1 x2"), std::invalid_argument);
  CHECK_THROWS_AS(rp("* x1"), std::invalid_argument);
  CHECK_THROWS_AS(rp("x9"), std::invalid_argument);
  CHECK_THROWS_AS(rp("2^3"), std::invalid_argument);
}

TEST_CASE("resorting between orders") {
  Poly<Rat> p = rp("x2^2 - x1*x3");
  Poly<Rat> lexed = p.resorted(MonomialOrder::lex(3));
  CHECK(lexed.leadingMono() == Monomial{1, 0, 1});
  CHECK(lexed == p);
  Poly<Rat> back = lexed.resorted(kOrd);
  CHECK(back == p);
  CHECK_THROWS_AS(add(p, Poly<Rat>::parse("x1", MonomialOrder::lex(3))), std::invalid_argument);
}

TEST_CASE("weighted homogeneity") {
  std::vector<int> w{3, 4, 5};
  CHECK(isWeightedHomogeneous(rp("x2^2 - x1*x3"), w));
  CHECK(isWeightedHomogeneous(rp("x1^2*x2 - x3^2"), w));
  CHECK(isWeightedHomogeneous(rp("x1^3 - x2*x3"), w));
  // the certificate element for (q,m)=(1,1), weight 15 throughout
  CHECK(isWeightedHomogeneous(rp("-x1^5 - x1*x2^3 + 3*x1^2*x2*x3 - x3^3"), w));
  CHECK_FALSE(isWeightedHomogeneous(rp("x1 + x2"), w));
  CHECK(isWeightedHomogeneous(Poly<Rat>(kOrd), w));
}
