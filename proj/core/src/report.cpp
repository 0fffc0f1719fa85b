#include "symcurve/report.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace symcurve {

using ordered_json = nlohmann::ordered_json;

CheckResult makeCheck(std::string suite, std::string name, std::optional<int> q,
                      std::optional<int> m, std::optional<int> n, std::optional<int> k,
                      std::string expected, std::string computed) {
  CheckResult r;
  r.suite = std::move(suite);
  r.name = std::move(name);
  r.q = q;
  r.m = m;
  r.n = n;
  r.k = k;
  r.pass = expected == computed;
  r.expected = std::move(expected);
  r.computed = std::move(computed);
  return r;
}

std::string FieldSpec::str() const {
  return kind == Kind::Rationals ? "q" : "fp:" + std::to_string(p);
}

std::optional<FieldSpec> FieldSpec::parse(const std::string& text) {
  if (text == "q" || text == "Q") return FieldSpec{};
  if (text.rfind("fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty()) return std::nullopt;
    std::uint64_t p = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') return std::nullopt;
      p = p * 10 + static_cast<std::uint64_t>(c - '0');
      if (p >= (1ull << 31)) return std::nullopt;
    }
    return FieldSpec{Kind::Prime, p};
  }
  return std::nullopt;
}

std::string commandName(RunConfig::Command c) {
  switch (c) {
    case RunConfig::Command::Verify: return "verify";
    case RunConfig::Command::Lengths: return "lengths";
    case RunConfig::Command::Symbolic: return "symbolic";
    case RunConfig::Command::Explore: return "explore";
  }
  return "?";
}

std::string formatName(RunConfig::Format f) {
  switch (f) {
    case RunConfig::Format::Text: return "text";
    case RunConfig::Format::Json: return "json";
    case RunConfig::Format::Csv: return "csv";
  }
  return "?";
}

int Report::passCount() const {
  int n = 0;
  for (const CheckResult& c : checks) n += c.pass ? 1 : 0;
  return n;
}

int Report::failCount() const { return static_cast<int>(checks.size()) - passCount(); }

namespace {

ordered_json optInt(const std::optional<int>& v) {
  if (v) return *v;
  return nullptr;
}

ordered_json configJson(const RunConfig& cfg) {
  ordered_json grid = ordered_json::array();
  for (const CurveParams& p : cfg.grid) grid.push_back({{"q", p.q}, {"m", p.m}});
  ordered_json curve;
  if (cfg.command == RunConfig::Command::Explore)
    curve = ordered_json::array({cfg.curve[0], cfg.curve[1], cfg.curve[2]});
  else
    curve = nullptr;
  return ordered_json{{"subcommand", commandName(cfg.command)},
                      {"grid", std::move(grid)},
                      {"curve", std::move(curve)},
                      {"nmax", cfg.nmax},
                      {"nmax_gb", cfg.nmaxGb},
                      {"field", cfg.field.str()},
                      {"format", formatName(cfg.format)}};
}

RunConfig configFromJson(const ordered_json& j) {
  RunConfig cfg;
  const std::string cmd = j.at("subcommand").get<std::string>();
  if (cmd == "verify") cfg.command = RunConfig::Command::Verify;
  else if (cmd == "lengths") cfg.command = RunConfig::Command::Lengths;
  else if (cmd == "symbolic") cfg.command = RunConfig::Command::Symbolic;
  else if (cmd == "explore") cfg.command = RunConfig::Command::Explore;
  else throw std::invalid_argument("unknown subcommand in report: " + cmd);

  for (const auto& g : j.at("grid")) cfg.grid.emplace_back(g.at("q").get<int>(), g.at("m").get<int>());
  if (!j.at("curve").is_null()) {
    const auto& c = j.at("curve");
    cfg.curve = {c.at(0).get<int>(), c.at(1).get<int>(), c.at(2).get<int>()};
  }
  cfg.nmax = j.at("nmax").get<int>();
  cfg.nmaxGb = j.at("nmax_gb").get<int>();
  auto field = FieldSpec::parse(j.at("field").get<std::string>());
  if (!field) throw std::invalid_argument("unknown field in report");
  cfg.field = *field;
  const std::string fmt = j.at("format").get<std::string>();
  if (fmt == "text") cfg.format = RunConfig::Format::Text;
  else if (fmt == "json") cfg.format = RunConfig::Format::Json;
  else if (fmt == "csv") cfg.format = RunConfig::Format::Csv;
  else throw std::invalid_argument("unknown format in report: " + fmt);
  return cfg;
}

// The JSON check entries carry no separate suite column; the name field is
// "suite/name" and check names themselves never contain '/'.
std::string jsonCheckName(const CheckResult& c) { return c.suite + "/" + c.name; }

std::string csvEscape(const std::string& s) {
  bool needsQuote = s.find_first_of(",\"\n") != std::string::npos;
  if (!needsQuote) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string renderJson(const Report& report) {
  ordered_json checks = ordered_json::array();
  for (const CheckResult& c : report.checks) {
    checks.push_back(ordered_json{{"name", jsonCheckName(c)},
                                  {"q", optInt(c.q)},
                                  {"m", optInt(c.m)},
                                  {"n", optInt(c.n)},
                                  {"k", optInt(c.k)},
                                  {"expected", c.expected},
                                  {"computed", c.computed},
                                  {"verdict", c.pass ? "pass" : "fail"},
                                  {"ms", c.ms}});
  }
  ordered_json j{{"version", report.version},
                 {"config", configJson(report.config)},
                 {"checks", std::move(checks)},
                 {"summary", ordered_json{{"pass", report.passCount()}, {"fail", report.failCount()}}},
                 {"total_ms", report.totalMs}};
  return j.dump(2) + "\n";
}

Report parseJson(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report JSON: ") + e.what());
  }
  Report report;
  try {
    report.version = j.at("version").get<std::string>();
    report.config = configFromJson(j.at("config"));
    for (const auto& c : j.at("checks")) {
      CheckResult r;
      const std::string full = c.at("name").get<std::string>();
      std::size_t slash = full.find('/');
      if (slash == std::string::npos) throw std::invalid_argument("check name lacks a suite prefix");
      r.suite = full.substr(0, slash);
      r.name = full.substr(slash + 1);
      auto grab = [&](const char* key) -> std::optional<int> {
        if (c.at(key).is_null()) return std::nullopt;
        return c.at(key).get<int>();
      };
      r.q = grab("q");
      r.m = grab("m");
      r.n = grab("n");
      r.k = grab("k");
      r.expected = c.at("expected").get<std::string>();
      r.computed = c.at("computed").get<std::string>();
      r.pass = c.at("verdict").get<std::string>() == "pass";
      r.ms = c.at("ms").get<std::int64_t>();
      report.checks.push_back(std::move(r));
    }
    report.totalMs = j.at("total_ms").get<std::int64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report JSON: ") + e.what());
  }
  return report;
}

std::string renderCsv(const Report& report) {
  std::string out = "suite,name,q,m,n,expected,computed,verdict\n";
  auto cell = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
  for (const CheckResult& c : report.checks) {
    out += csvEscape(c.suite) + ',' + csvEscape(c.name) + ',' + cell(c.q) + ',' + cell(c.m) + ',' +
           cell(c.n) + ',' + csvEscape(c.expected) + ',' + csvEscape(c.computed) + ',' +
           (c.pass ? "pass" : "fail") + '\n';
  }
  return out;
}

std::string renderText(const Report& report) {
  std::ostringstream out;
  out << "symcurve " << report.version << " — " << commandName(report.config.command) << "\n";
  out << "field: " << report.config.field.str();
  if (report.config.field.kind == FieldSpec::Kind::Prime)
    out << " (heuristic: prime-field arithmetic, results are not characteristic-0 certificates)";
  out << "\n";
  if (!report.config.grid.empty()) {
    out << "grid:";
    for (const CurveParams& p : report.config.grid) out << ' ' << p.label();
    out << "\n";
  }
  if (report.config.command == RunConfig::Command::Explore) {
    out << "curve: (" << report.config.curve[0] << ", " << report.config.curve[1] << ", "
        << report.config.curve[2] << ")\n";
  }
  out << "\n";
  for (const CheckResult& c : report.checks) {
    out << (c.pass ? "[pass] " : "[FAIL] ") << c.suite << '/' << c.name;
    if (c.q) out << " q=" << *c.q;
    if (c.m) out << " m=" << *c.m;
    if (c.n) out << " n=" << *c.n;
    if (c.k) out << " k=" << *c.k;
    out << ": expected " << c.expected << ", computed " << c.computed << " (" << c.ms << " ms)\n";
  }
  out << "\nsummary: " << report.passCount() << " passed, " << report.failCount() << " failed ("
      << report.totalMs << " ms)\n";
  return out.str();
}

std::string render(const Report& report, RunConfig::Format format) {
  switch (format) {
    case RunConfig::Format::Text: return renderText(report);
    case RunConfig::Format::Json: return renderJson(report);
    case RunConfig::Format::Csv: return renderCsv(report);
  }
  return {};
}

int exitCode(const Report& report) { return report.failCount() == 0 ? 0 : 1; }

}  // namespace symcurve
