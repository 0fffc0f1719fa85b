// Acceptance suite: every criterion below runs exactly, with zero tolerance,
// and prints one pass/fail line. Run the binary directly to see the lines,
// or through ctest (target name: acceptance).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <random>
#include <sstream>

#include "support/oracles.hpp"
#include "symcurve/checks.hpp"
#include "symcurve/rational.hpp"
#include "symcurve/version.hpp"

using namespace symcurve;

namespace {

struct Criterion {
  std::vector<std::string> failures;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void finish(int number, const std::string& description) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::printf("[criterion %d] %s — %s (%lld ms)\n", number,
                failures.empty() ? "PASS" : "FAIL", description.c_str(),
                static_cast<long long>(ms));
    for (const std::string& f : failures) std::printf("    failure: %s\n", f.c_str());
    std::fflush(stdout);
  }
};

// Filtrations shared across criteria so symbolic powers are computed once.
Filtration<Rat>& filtrationFor(const CurveParams& p) {
  static std::map<std::pair<int, int>, std::unique_ptr<Filtration<Rat>>> cache;
  auto key = std::make_pair(p.q, p.m);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::make_unique<Filtration<Rat>>(p)).first;
  return *it->second;
}

const std::vector<CurveParams>& gbCurves() {
  static const std::vector<CurveParams> curves = {CurveParams(1, 1), CurveParams(1, 2),
                                                  CurveParams(2, 1)};
  return curves;
}

}  // namespace

TEST_CASE("criterion 1: staircase lengths match the closed formula") {
  Criterion c;
  for (const CurveParams& p : defaultGrid()) {
    MonomialFiltration F{p};
    for (int n = 1; n <= 10; ++n) {
      std::int64_t staircase = F.lengthIn(n);
      std::int64_t formula = lengthFormula(p, n);
      c.expect(staircase == formula,
               p.label() + " n=" + std::to_string(n) + ": staircase " +
                   std::to_string(staircase) + " vs formula " + std::to_string(formula));
    }
  }
  c.finish(1, "length formula (2q+1)*binom(n+1,2), n=1..10, default grid");
  REQUIRE(c.failures.empty());
}

TEST_CASE("criterion 2: certificate length is 2(2q+1)") {
  Criterion c;
  for (const CurveParams& p : defaultGrid()) {
    Filtration<Rat>& F = filtrationFor(p);
    PolyIdeal<Rat> cert({F.variablePoly(0), F.curve().f1, F.curve().f2}, F.curve().order);
    LengthValue len = standardMonomialLength(cert);
    c.expect(len == LengthValue::finite(2 * (2 * p.q + 1)),
             p.label() + ": length " + len.str() + " vs " + std::to_string(2 * (2 * p.q + 1)));
    if (p.q == 1 && p.m == 1)
      c.expect(len == LengthValue::finite(6), "(q=1,m=1) certificate length must be 6");
  }
  c.finish(2, "certificate length ell(T/(x1,f1,f2)) = 2(2q+1), default grid");
  REQUIRE(c.failures.empty());
}

TEST_CASE("criterion 3: colon identities of the filtration") {
  Criterion c;
  for (const CurveParams& p : defaultGrid()) {
    MonomialFiltration F{p};
    const Monomial x2sq{2, 0};
    const Monomial x3pow{0, 2 * p.q + 1};
    for (int n = 2; n <= 10; ++n)
      c.expect(colon(F.In(n), x2sq) == F.In(n - 1),
               p.label() + " n=" + std::to_string(n) + ": (I_n : x2^2) != I_{n-1}");
    for (int n = 1; n <= 8; ++n) {
      MonomialIdeal lhs = colon(sum(F.In(n + 2), product(F.In(n + 1), x2sq)), x3pow);
      MonomialIdeal rhs = sum(F.In(n), product(F.In(n - 1), x2sq));
      c.expect(lhs == rhs,
               p.label() + " n=" + std::to_string(n) + ": x3^(2q+1) colon identity fails");
    }
  }
  c.finish(3, "colon identities, n=2..10 and n=1..8, default grid");
  REQUIRE(c.failures.empty());
}

TEST_CASE("criterion 4: inductive quotient dimension equals n") {
  Criterion c;
  for (const CurveParams& p : defaultGrid()) {
    MonomialFiltration F{p};
    const Monomial x3q{0, p.q};
    for (int n = 1; n <= 10; ++n) {
      MonomialIdeal cn = colon(F.In(n), x3q);
      c.expect(isSubset(cn, F.In(n - 1)),
               p.label() + " n=" + std::to_string(n) + ": colon not inside previous layer");
      std::int64_t dim = quotientDim(F.In(n - 1), cn);
      c.expect(dim == n, p.label() + " n=" + std::to_string(n) + ": dim " + std::to_string(dim));
    }
  }
  c.finish(4, "dim_k(I_{n-1}/(I_n : x3^q)) = n, n=1..10, default grid");
  REQUIRE(c.failures.empty());
}

TEST_CASE("criterion 5: length equalities across the three rings") {
  Criterion c;
  for (const CurveParams& p : gbCurves()) {
    Filtration<Rat>& F = filtrationFor(p);
    Poly<Rat> x1 = F.variablePoly(0);
    const Monomial x2sq{2, 0};
    const Monomial x3pow{0, 2 * p.q + 1};
    for (int n = 1; n <= 4; ++n) {
      std::int64_t base = F.monomial().lengthIn(n);
      LengthValue viaLayers = standardMonomialLength(sum(F.calIn(n), x1));
      LengthValue viaSymbolic = standardMonomialLength(sum(F.symbolicPower(n), x1));
      c.expect(viaLayers == LengthValue::finite(base),
               p.label() + " n=" + std::to_string(n) + ": layer-sum length " + viaLayers.str());
      c.expect(viaSymbolic == LengthValue::finite(base),
               p.label() + " n=" + std::to_string(n) + ": symbolic length " + viaSymbolic.str());

      LengthValue withF1 = standardMonomialLength(sum(sum(F.symbolicPower(n), x1), F.curve().f1));
      LengthValue wantF1 = quotientLength(sum(F.monomial().In(n), MonomialIdeal(2, {x2sq})));
      c.expect(withF1 == wantF1, p.label() + " n=" + std::to_string(n) + ": f1-augmented " +
                                     withF1.str() + " vs " + wantF1.str());

      LengthValue withF2 =
          standardMonomialLength(sum(sum(sum(F.symbolicPower(n), x1), F.curve().f1), F.curve().f2));
      LengthValue wantF2 =
          quotientLength(sum(F.monomial().In(n), MonomialIdeal(2, {x2sq, x3pow})));
      c.expect(withF2 == wantF2, p.label() + " n=" + std::to_string(n) + ": f2-augmented " +
                                     withF2.str() + " vs " + wantF2.str());
    }
  }
  c.finish(5, "length chain through x1, f1, f2, n=1..4, three curves");
  REQUIRE(c.failures.empty());
}

TEST_CASE("criterion 6: triangulated symbolic-power identity") {
  Criterion c;
  for (const CurveParams& p : gbCurves()) {
    Filtration<Rat>& F = filtrationFor(p);
    for (int n = 1; n <= 4; ++n) {
      const PolyIdeal<Rat>& viaX1 = F.symbolicPower(n);
      PolyIdeal<Rat> viaX3 = F.symbolicPowerVia(2, n);
      const PolyIdeal<Rat>& viaLayers = F.calIn(n);
      c.expect(idealEqual(viaX1, viaX3),
               p.label() + " n=" + std::to_string(n) + ": x1- and x3-saturations differ");
      c.expect(idealEqual(viaX1, viaLayers),
               p.label() + " n=" + std::to_string(n) + ": saturation differs from layer sum");
    }
    c.expect(!idealEqual(F.symbolicPower(2), F.primePower(2)),
             p.label() + ": symbolic square must exceed the ordinary square");
  }
  c.finish(6, "saturations by x1 and x3 equal the layer sums, n=1..4, three curves");
  REQUIRE(c.failures.empty());
}

TEST_CASE("criterion 7: colon ladder of the symbolic tower") {
  Criterion c;
  for (const CurveParams& p : {CurveParams(1, 1), CurveParams(1, 2)}) {
    Filtration<Rat>& F = filtrationFor(p);
    Poly<Rat> x1 = F.variablePoly(0);
    for (int n = 1; n <= 3; ++n) {
      PolyIdeal<Rat> lhs = colon(sum(F.symbolicPower(n + 1), x1), F.curve().f1);
      PolyIdeal<Rat> rhs = sum(F.symbolicPower(n), x1);
      c.expect(idealEqual(lhs, rhs),
               p.label() + " n=" + std::to_string(n) + ": f1 colon step fails");
    }
    for (int n = 2; n <= 3; ++n) {
      PolyIdeal<Rat> lhs = colon(sum(sum(F.symbolicPower(n + 1), x1), F.curve().f1), F.curve().f2);
      PolyIdeal<Rat> rhs = sum(sum(F.symbolicPower(n - 1), x1), F.curve().f1);
      c.expect(idealEqual(lhs, rhs),
               p.label() + " n=" + std::to_string(n) + ": f2 colon step fails");
    }
  }
  c.finish(7, "colon steps by f1 (n=1..3) and f2 (n=2..3) on (1,1) and (1,2)");
  REQUIRE(c.failures.empty());
}

TEST_CASE("criterion 8: property suites") {
  Criterion c;

  // colon-membership agreement on randomized monomial ideals (>= 500 cases)
  std::mt19937 rng(2024);
  for (int i = 0; i < 520; ++i) {
    MonomialIdeal I = test::randomIdeal(rng, 2, 6, 6);
    Monomial v = test::randomMonomial(rng, 2, 6);
    MonomialIdeal col = colon(I, v);
    for (const Monomial& w : test::monomialsUpToDegree(2, 10)) {
      if (contains(col, w) != contains(I, w * v)) {
        c.expect(false, "colon-membership mismatch at I=" + I.str() + " v=" + v.str() +
                            " w=" + w.str());
        break;
      }
    }
  }

  for (const CurveParams& p : gbCurves()) {
    Filtration<Rat>& F = filtrationFor(p);
    const std::vector<int> w = p.weights();

    // every cached basis passes the S-pair certificate
    for (int n = 1; n <= 4; ++n) {
      c.expect(basisIsGroebner(F.primePower(n)),
               p.label() + ": S-pair certificate fails for power n=" + std::to_string(n));
      c.expect(basisIsGroebner(F.symbolicPower(n)),
               p.label() + ": S-pair certificate fails for symbolic n=" + std::to_string(n));
      c.expect(basisIsGroebner(F.calIn(n)),
               p.label() + ": S-pair certificate fails for layer sum n=" + std::to_string(n));
    }

    // reduced-basis uniqueness under generator shuffling
    std::mt19937 shuffleRng(5000 + p.q * 10 + p.m);
    PolyList<Rat> gens = F.calIn(2).generators();
    PolyList<Rat> reference = reducedBasis(gens, F.curve().order);
    for (int s = 0; s < 21; ++s) {
      std::shuffle(gens.begin(), gens.end(), shuffleRng);
      PolyList<Rat> shuffled = reducedBasis(gens, F.curve().order);
      bool same = shuffled.size() == reference.size();
      for (std::size_t i = 0; same && i < shuffled.size(); ++i)
        same = shuffled[i] == reference[i];
      c.expect(same, p.label() + ": shuffled basis " + std::to_string(s) + " differs");
    }

    // binomiality where a binomial generating set exists (the prime itself;
    // higher powers are not binomially generated), weighted homogeneity of
    // both towers
    for (const Poly<Rat>& b : F.curve().prime.basis())
      c.expect(b.termCount() <= 2, p.label() + ": non-binomial basis element in the prime");
    for (int n = 1; n <= 4; ++n) {
      for (const Poly<Rat>& b : F.symbolicPower(n).basis())
        c.expect(isWeightedHomogeneous(b, w),
                 p.label() + ": inhomogeneous element in symbolic n=" + std::to_string(n));
      for (const Poly<Rat>& b : F.primePower(n).basis())
        c.expect(isWeightedHomogeneous(b, w),
                 p.label() + ": inhomogeneous element in power n=" + std::to_string(n));
    }

    // saturation is idempotent and stabilizes quickly
    Poly<Rat> x1 = F.variablePoly(0);
    Saturation<Rat> again = saturate(F.symbolicPower(2), x1);
    c.expect(again.exponent == 0 && idealEqual(again.ideal, F.symbolicPower(2)),
             p.label() + ": saturation of the symbolic square is not idempotent");
    for (int n = 1; n <= 4; ++n)
      c.expect(F.saturationExponent(n) <= 10,
               p.label() + ": saturation exponent " + std::to_string(F.saturationExponent(n)) +
                   " exceeds 10 at n=" + std::to_string(n));

    // monotone towers
    for (int n = 1; n <= 4; ++n) {
      c.expect(isSubset(F.primePower(n), F.symbolicPower(n)),
               p.label() + ": ordinary power escapes the symbolic power at n=" + std::to_string(n));
      if (n >= 2)
        c.expect(isSubset(F.symbolicPower(n), F.symbolicPower(n - 1)),
                 p.label() + ": symbolic tower is not descending at n=" + std::to_string(n));
    }
  }

  c.finish(8, "randomized colon-membership, S-pair certificates, shuffles, homogeneity");
  REQUIRE(c.failures.empty());
}

namespace {

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Timing fields are the only permitted difference between identical runs.
std::string withoutTimings(const std::string& jsonText) {
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(jsonText);
  j["total_ms"] = 0;
  for (auto& check : j["checks"]) check["ms"] = 0;
  return j.dump(2);
}

}  // namespace

TEST_CASE("criterion 9: byte-identical reports across runs") {
  Criterion c;
#ifdef SYMCURVE_CLI_PATH
  const std::string cli = SYMCURVE_CLI_PATH;
  const std::string out1 = "/tmp/symcurve_determinism_1.json";
  const std::string out2 = "/tmp/symcurve_determinism_2.json";
  const std::string args = " verify --grid default --nmax 8 --nmax-gb 2 --format json --out ";
  int rc1 = std::system((cli + args + out1).c_str());
  int rc2 = std::system((cli + args + out2).c_str());
  c.expect(rc1 == 0, "first run exited with " + std::to_string(rc1));
  c.expect(rc2 == 0, "second run exited with " + std::to_string(rc2));
  if (rc1 == 0 && rc2 == 0) {
    std::string a = readFile(out1);
    std::string b = readFile(out2);
    c.expect(!a.empty(), "first report is empty");
    c.expect(withoutTimings(a) == withoutTimings(b),
             "reports differ outside the timing fields");
  }
  std::remove(out1.c_str());
  std::remove(out2.c_str());
#else
  c.expect(false, "CLI path not provided at build time");
#endif
  c.finish(9, "two consecutive full runs emit byte-identical JSON modulo timings");
  REQUIRE(c.failures.empty());
}
