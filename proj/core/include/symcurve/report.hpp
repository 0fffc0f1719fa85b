#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symcurve/curve_params.hpp"

namespace symcurve {

/// Outcome of one executable identity. The verdict is exact equality of the
/// expected and computed strings; informational rows echo the computed value
/// as the expectation. Ideal-equality rows embed both reduced bases in the
/// computed string when they differ, so failures are diagnosable.
struct CheckResult {
  std::string suite;
  std::string name;
  std::optional<int> q, m, n, k;
  std::string expected;
  std::string computed;
  bool pass = false;
  std::int64_t ms = 0;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

CheckResult makeCheck(std::string suite, std::string name, std::optional<int> q,
                      std::optional<int> m, std::optional<int> n, std::optional<int> k,
                      std::string expected, std::string computed);

struct FieldSpec {
  enum class Kind { Rationals, Prime };
  Kind kind = Kind::Rationals;
  std::uint64_t p = 0;

  std::string str() const;
  /// "q" or "fp:P".
  static std::optional<FieldSpec> parse(const std::string& text);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

struct RunConfig {
  enum class Command { Verify, Lengths, Symbolic, Explore };
  enum class Format { Text, Json, Csv };

  Command command = Command::Verify;
  std::vector<CurveParams> grid;       // verify / lengths / symbolic
  std::array<int, 3> curve{0, 0, 0};   // explore
  int nmax = 10;
  int nmaxGb = 4;
  FieldSpec field;
  Format format = Format::Text;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

std::string commandName(RunConfig::Command c);
std::string formatName(RunConfig::Format f);

struct Report {
  std::string version;
  RunConfig config;
  std::vector<CheckResult> checks;
  std::int64_t totalMs = 0;

  int passCount() const;
  int failCount() const;

  friend bool operator==(const Report&, const Report&) = default;
};

/// Stable-schema JSON:
/// {version, config, checks:[{name,q,m,n,k,expected,computed,verdict,ms}],
///  summary:{pass,fail}, total_ms}. Keys never reorder between runs.
std::string renderJson(const Report& report);

/// Inverse of renderJson; throws std::invalid_argument on malformed input.
Report parseJson(const std::string& text);

/// Fixed header: suite,name,q,m,n,expected,computed,verdict.
std::string renderCsv(const Report& report);

std::string renderText(const Report& report);

std::string render(const Report& report, RunConfig::Format format);

/// 0 when every check passed, 1 otherwise.
int exitCode(const Report& report);

}  // namespace symcurve
