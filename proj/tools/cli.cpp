#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <future>
#include <iostream>

#include "symcurve/checks.hpp"
#include "symcurve/prime_field.hpp"
#include "symcurve/rational.hpp"
#include "symcurve/version.hpp"

namespace symcurve::cli {

namespace {

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<CurveParams> parseGrid(const std::string& spec) {
  if (spec == "default") return defaultGrid();
  std::vector<CurveParams> grid;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t end = spec.find(';', pos);
    std::string pair = spec.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    std::size_t comma = pair.find(',');
    if (comma == std::string::npos)
      throw ConfigError("bad --grid entry \"" + pair + "\": expected q,m");
    try {
      int q = std::stoi(pair.substr(0, comma));
      int m = std::stoi(pair.substr(comma + 1));
      grid.emplace_back(q, m);
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw ConfigError("bad --grid entry \"" + pair + "\": " + e.what());
    }
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  if (grid.empty()) throw ConfigError("--grid selected no curves");
  return grid;
}

std::array<int, 3> parseCurve(const std::string& spec) {
  std::array<int, 3> out{};
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    std::size_t end = i < 2 ? spec.find(',', pos) : std::string::npos;
    if (i < 2 && end == std::string::npos)
      throw ConfigError("bad --curve \"" + spec + "\": expected a,b,c");
    std::string item = spec.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    try {
      out[static_cast<std::size_t>(i)] = std::stoi(item);
    } catch (const std::exception&) {
      throw ConfigError("bad --curve entry \"" + item + "\"");
    }
    pos = end == std::string::npos ? spec.size() : end + 1;
  }
  return out;
}

template <CoefficientField K>
Report buildReportFor(const RunConfig& cfg) {
  Report report;
  report.version = kVersion;
  report.config = cfg;
  auto t0 = std::chrono::steady_clock::now();

  SuiteOptions opt{cfg.nmax, cfg.nmaxGb};
  switch (cfg.command) {
    case RunConfig::Command::Verify: {
      std::vector<std::future<std::vector<CheckResult>>> futures;
      futures.reserve(cfg.grid.size());
      for (const CurveParams& p : cfg.grid)
        futures.push_back(
            std::async(std::launch::async, [p, opt] { return verifySuites<K>(p, opt); }));
      for (auto& f : futures)
        for (CheckResult& r : f.get()) report.checks.push_back(std::move(r));
      break;
    }
    case RunConfig::Command::Lengths: {
      for (const CurveParams& p : cfg.grid) {
        MonomialFiltration F(p);
        for (CheckResult& r : lengthsSuite(F, cfg.nmax)) report.checks.push_back(std::move(r));
      }
      break;
    }
    case RunConfig::Command::Symbolic: {
      std::vector<std::future<std::vector<CheckResult>>> futures;
      futures.reserve(cfg.grid.size());
      int nmaxGb = cfg.nmaxGb;
      for (const CurveParams& p : cfg.grid)
        futures.push_back(std::async(std::launch::async, [p, nmaxGb] {
          Filtration<K> F(p);
          return symbolicSuite(F, nmaxGb);
        }));
      for (auto& f : futures)
        for (CheckResult& r : f.get()) report.checks.push_back(std::move(r));
      break;
    }
    case RunConfig::Command::Explore: {
      report.checks = exploreSuite<K>(cfg.curve[0], cfg.curve[1], cfg.curve[2], cfg.nmax);
      break;
    }
  }

  auto t1 = std::chrono::steady_clock::now();
  report.totalMs = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return report;
}

int emit(const Report& report, const RunConfig& cfg, const std::string& outPath) {
  std::string rendered = render(report, cfg.format);
  if (!outPath.empty()) {
    std::ofstream out(outPath, std::ios::binary);
    if (!out) throw ConfigError("cannot write output file " + outPath);
    out << rendered;
  } else {
    std::cout << rendered;
  }
  return exitCode(report);
}

}  // namespace

Report buildReport(const RunConfig& config) {
  if (config.field.kind == FieldSpec::Kind::Prime) {
    Fp::setModulus(config.field.p);
    return buildReportFor<Fp>(config);
  }
  return buildReportFor<Rat>(config);
}

int run(const std::vector<std::string>& args) {
  CLI::App app{"exact verification engine for the ideal towers of monomial space curves"};
  app.require_subcommand(1);

  int q = 1, m = 1, nmax = 10, nmaxGb = 4;
  std::string gridSpec, fieldSpec = "q", formatSpec = "text", outPath, curveSpec;

  auto addCommon = [&](CLI::App* sub, bool gridded) {
    sub->add_option("--nmax", nmax, "largest filtration index (monomial routes)");
    sub->add_option("--nmax-gb", nmaxGb, "largest index for Groebner-backed routes");
    sub->add_option("--field", fieldSpec, "coefficient field: q | fp:P");
    sub->add_option("--format", formatSpec, "output format: text | json | csv");
    sub->add_option("--out", outPath, "write the report to this path instead of stdout");
    if (gridded) {
      auto* qOpt = sub->add_option("--q", q, "curve parameter q (>= 1)");
      auto* mOpt = sub->add_option("--m", m, "curve parameter m (>= 1), gcd(2q+1, m) = 1");
      auto* gOpt = sub->add_option("--grid", gridSpec, "curve grid: default | q,m;q,m;...");
      gOpt->excludes(qOpt);
      gOpt->excludes(mOpt);
    }
  };

  CLI::App* verify = app.add_subcommand("verify", "run every identity suite");
  addCommon(verify, true);
  CLI::App* lengths = app.add_subcommand("lengths", "staircase lengths against the closed formula");
  addCommon(lengths, true);
  CLI::App* symbolic = app.add_subcommand("symbolic", "reduced generators of the symbolic powers");
  addCommon(symbolic, true);
  CLI::App* explore = app.add_subcommand("explore", "survey an arbitrary coprime curve (a, b, c)");
  addCommon(explore, false);
  explore->add_option("--curve", curveSpec, "curve exponents a,b,c")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    RunConfig cfg;
    if (app.got_subcommand(verify)) cfg.command = RunConfig::Command::Verify;
    else if (app.got_subcommand(lengths)) cfg.command = RunConfig::Command::Lengths;
    else if (app.got_subcommand(symbolic)) cfg.command = RunConfig::Command::Symbolic;
    else cfg.command = RunConfig::Command::Explore;

    if (nmax < 1) throw ConfigError("--nmax must be at least 1, got " + std::to_string(nmax));
    if (nmaxGb < 1) throw ConfigError("--nmax-gb must be at least 1, got " + std::to_string(nmaxGb));
    cfg.nmax = nmax;
    cfg.nmaxGb = nmaxGb;

    auto field = FieldSpec::parse(fieldSpec);
    if (!field) throw ConfigError("bad --field \"" + fieldSpec + "\": expected q or fp:P");
    if (field->kind == FieldSpec::Kind::Prime) {
      try {
        Fp::setModulus(field->p);
      } catch (const std::invalid_argument& e) {
        throw ConfigError("bad --field: " + std::string(e.what()));
      }
    }
    cfg.field = *field;

    if (formatSpec == "text") cfg.format = RunConfig::Format::Text;
    else if (formatSpec == "json") cfg.format = RunConfig::Format::Json;
    else if (formatSpec == "csv") cfg.format = RunConfig::Format::Csv;
    else throw ConfigError("bad --format \"" + formatSpec + "\": expected text, json or csv");

    if (cfg.command == RunConfig::Command::Explore) {
      cfg.curve = parseCurve(curveSpec);
    } else {
      try {
        cfg.grid = gridSpec.empty() ? std::vector<CurveParams>{CurveParams(q, m)}
                                    : parseGrid(gridSpec);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    }

    Report report = buildReport(cfg);
    return emit(report, cfg, outPath);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}

int runMain(int argc, const char* const* argv) {
  std::vector<std::string> args;
  args.reserve(static_cast<std::size_t>(argc));
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args);
}

}  // namespace symcurve::cli
