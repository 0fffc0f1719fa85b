#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "symcurve/checks.hpp"
#include "symcurve/rational.hpp"

using namespace symcurve;

namespace {

std::map<std::string, const CheckResult*> byKey(const std::vector<CheckResult>& rows) {
  std::map<std::string, const CheckResult*> out;
  for (const CheckResult& r : rows) {
    std::string key = r.suite + "/" + r.name;
    if (r.n) key += "#n" + std::to_string(*r.n);
    if (r.k) key += "#k" + std::to_string(*r.k);
    out[key] = &r;
  }
  return out;
}

bool allPass(const std::vector<CheckResult>& rows) {
  for (const CheckResult& r : rows)
    if (!r.pass) return false;
  return !rows.empty();
}

}  // namespace

TEST_CASE("section 2 rows") {
  SuiteOptions opt{6, 2};
  Filtration<Rat> F(CurveParams(1, 1));
  auto rows = checkSection2(F, opt);
  CHECK(allPass(rows));
  auto idx = byKey(rows);
  CHECK(idx.at("s2/huneke_certificate_length")->expected == "6");
  CHECK(idx.at("s2/huneke_certificate_length")->computed == "6");
  CHECK(idx.at("s2/f2_in_symbolic_square")->computed == "member");
  CHECK(idx.count("s2/layer_sum_inside_symbolic#n2") == 1);
  CHECK(idx.count("s2/layer_sum_plus_x1_artinian#n2") == 1);

  // q = 2 doubles the certificate length to 10
  Filtration<Rat> G(CurveParams(2, 1));
  auto rows2 = checkSection2(G, SuiteOptions{4, 1});
  CHECK(allPass(rows2));
  CHECK(byKey(rows2).at("s2/huneke_certificate_length")->computed == "10");
}

TEST_CASE("section 3 rows") {
  SuiteOptions opt{6, 2};
  MonomialFiltration F{CurveParams(1, 1)};
  auto rows = checkSection3(F, opt);
  CHECK(allPass(rows));
  auto idx = byKey(rows);
  // colon identities present over the requested window
  CHECK(idx.count("s3/colon_x2sq_drops_one_level#n2") == 1);
  CHECK(idx.count("s3/colon_x2sq_drops_one_level#n6") == 1);
  CHECK(idx.count("s3/colon_x2sq_drops_one_level#n7") == 0);
  CHECK(idx.count("s3/colon_x3pow_drops_two_levels#n4") == 1);
  CHECK(idx.count("s3/colon_x3pow_drops_two_levels#n5") == 0);
  // length of I_2 + (x2^2): 9 - 3 = 6
  CHECK(idx.at("s3/length_mod_x2sq#n2")->computed == "6");
  // alternating identity at n=3: 18 - 9 - 3 + 0 = 6
  CHECK(idx.at("s3/length_mod_x2sq_x3pow#n3")->expected == "6");
  CHECK(idx.at("s3/length_mod_x2sq_x3pow#n3")->computed == "6");
}

TEST_CASE("section 4 rows") {
  SuiteOptions opt{6, 2};
  for (CurveParams p : {CurveParams(1, 1), CurveParams(2, 1), CurveParams(1, 2)}) {
    MonomialFiltration F{p};
    auto rows = checkSection4(F, opt);
    CHECK(allPass(rows));
    auto idx = byKey(rows);
    for (int n = 1; n <= 6; ++n) {
      CHECK(idx.at("s4/quotient_dim_equals_n#n" + std::to_string(n))->computed ==
            std::to_string(n));
      // the branch printed for the parity of n-1 always matches
      const CheckResult* match = idx.at("s4/parity_branch_match#n" + std::to_string(n));
      std::string want = (n - 1) % 2 == 0 ? "pure-power-form" : "split-form";
      CHECK(match->computed.find(want) != std::string::npos);
    }
  }
}

TEST_CASE("section 5 rows") {
  SuiteOptions opt{4, 2};
  Filtration<Rat> F(CurveParams(1, 1));
  auto rows = checkSection5(F, opt);
  CHECK(allPass(rows));
  auto idx = byKey(rows);
  CHECK(idx.at("s5/staircase_length_formula#n1")->computed == "3");
  CHECK(idx.at("s5/staircase_length_formula#n2")->computed == "9");
  CHECK(idx.at("s5/staircase_length_formula#n3")->computed == "18");
  CHECK(idx.at("s5/staircase_length_formula#n4")->computed == "30");
  CHECK(idx.at("s5/length_symbolic_plus_x1#n2")->computed == "9");
  CHECK(idx.at("s5/length_symbolic_plus_x1_f1#n2#k1")->computed == "6");
  CHECK(idx.at("s5/symbolic_equals_layer_sum#n2")->computed == "equal");
}

TEST_CASE("section 6 rows") {
  SuiteOptions opt{4, 2};
  Filtration<Rat> F(CurveParams(1, 1));
  auto rows = checkSection6(F, opt);
  CHECK(allPass(rows));
  auto idx = byKey(rows);
  CHECK(idx.count("s6/colon_f1_steps_down_one#n1#k1") == 1);
  CHECK(idx.count("s6/colon_f2_steps_down_two#n2#k2") == 1);
  CHECK(idx.count("s6/rees_layers_generate#n2") == 1);
}

TEST_CASE("length formula helper") {
  CHECK(lengthFormula(CurveParams(1, 1), 6) == 63);
  CHECK(lengthFormula(CurveParams(2, 1), 5) == 75);
  CHECK(lengthFormula(CurveParams(3, 1), 1) == 7);
}

TEST_CASE("scheduled check count matches the emitted rows") {
  for (SuiteOptions opt : {SuiteOptions{6, 2}, SuiteOptions{4, 3}, SuiteOptions{3, 1}}) {
    auto rows = verifySuites<Rat>(CurveParams(1, 1), opt);
    CHECK(static_cast<int>(rows.size()) == scheduledVerifyChecks(opt));
    CHECK(allPass(rows));
  }
}

TEST_CASE("lengths suite") {
  MonomialFiltration F{CurveParams(2, 1)};
  auto rows = lengthsSuite(F, 5);
  CHECK(rows.size() == 5);
  CHECK(allPass(rows));
  CHECK(rows[4].expected == "75");
}

TEST_CASE("symbolic suite") {
  Filtration<Rat> F(CurveParams(1, 1));
  auto rows = symbolicSuite(F, 2);
  CHECK(allPass(rows));
  auto idx = byKey(rows);
  // the reduced basis of the symbolic square contains the quartic certificate
  const CheckResult* basis = idx.at("symbolic/symbolic_power_basis#n2");
  CHECK(basis->computed.find("x1^5") != std::string::npos);
  CHECK(idx.at("symbolic/symbolic_strictly_exceeds_power#n2")->computed == "proper");
  CHECK(idx.at("symbolic/symbolic_equals_prime#n1")->computed == "equal");
  // three minors generate the prime; the symbolic square needs one more
  CHECK(idx.at("symbolic/minimal_generator_count#n1")->computed == "3");
  CHECK(idx.at("symbolic/minimal_generator_count#n2")->computed == "4");
}

TEST_CASE("explore suite") {
  auto rows = exploreSuite<Rat>(3, 4, 5, 2);
  CHECK(allPass(rows));
  auto idx = byKey(rows);
  CHECK(idx.at("explore/complete_intersection")->computed == "false");
  CHECK(idx.at("explore/minimal_generator_count#n1")->computed == "3");
  CHECK(idx.at("explore/symbolic_equals_ordinary#n2")->computed == "false");
  const CheckResult* cert = idx.at("explore/huneke_certificate_search");
  CHECK(cert->computed.find("length=6") != std::string::npos);
  CHECK(cert->computed.find("x2^2") != std::string::npos);  // u is the conic minor

  auto smooth = exploreSuite<Rat>(1, 2, 3, 2);
  auto sIdx = byKey(smooth);
  CHECK(sIdx.at("explore/complete_intersection")->computed == "true");
  CHECK(sIdx.at("explore/symbolic_equals_ordinary#n2")->computed == "true");

  CHECK_THROWS_AS(exploreSuite<Rat>(4, 6, 9, 2), std::invalid_argument);
  CHECK_THROWS_AS(exploreSuite<Rat>(0, 1, 2, 2), std::invalid_argument);
}
