// Command-line front end: evaluate scenario batches, re-check the bundled
// batches against their frozen expectations, and run the built-in
// verification suites.  Exit codes: 0 success, 2 schema error, 3 engine
// error, 4 when any evaluated scenario raises a DISCREPANCY warning.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "euchar/bundled.hpp"
#include "euchar/report.hpp"
#include "euchar/scenario.hpp"
#include "euchar/selftest.hpp"
#include "euchar/types.hpp"

namespace {

using euchar::ordered_json;

int cmd_run(const std::string& path, const std::string& format) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "schema error: cannot open " << path << "\n";
    return 2;
  }
  std::stringstream ss;
  ss << in.rdbuf();

  bool discrepancy = false;
  ordered_json reports = ordered_json::array();
  auto batch = euchar::parse_batch(ss.str());
  for (const auto& sc : batch) {
    auto out = euchar::evaluate_scenario(sc, false);
    discrepancy = discrepancy || out.discrepancy;
    reports.push_back(std::move(out.report));
  }

  if (format == "text") {
    std::cout << euchar::render_text(reports);
  } else {
    std::cout << reports.dump(2) << "\n";
  }
  return discrepancy ? 4 : 0;
}

int cmd_verify(const std::string& format) {
  int failures = 0;
  ordered_json rows = ordered_json::array();
  for (const auto& name : euchar::bundled_names()) {
    auto batch = euchar::parse_batch(euchar::bundled_text(name));
    for (const auto& sc : batch) {
      auto out = euchar::evaluate_scenario(sc, true);
      ordered_json row;
      row["batch"] = name;
      row["scenario_id"] = out.id;
      row["ok"] = out.expect_failures.empty();
      row["failures"] = out.expect_failures;
      rows.push_back(std::move(row));
      failures += out.expect_failures.empty() ? 0 : 1;
    }
  }

  if (format == "text") {
    for (const auto& row : rows) {
      std::cout << row["batch"].get<std::string>() << " / "
                << row["scenario_id"].get<std::string>() << ": "
                << (row["ok"].get<bool>() ? "ok" : "FAIL") << "\n";
      for (const auto& f : row["failures"])
        std::cout << "    " << f.get<std::string>() << "\n";
    }
    if (failures == 0) {
      std::cout << "all expectations held (" << rows.size() << " scenarios)\n";
    } else {
      std::cout << failures << " scenario(s) failed their expectations\n";
    }
  } else {
    std::cout << rows.dump(2) << "\n";
  }
  return failures == 0 ? 0 : 1;
}

int cmd_selftest(const std::string& filter, std::uint64_t seed,
                 const std::string& format) {
  auto results = euchar::run_selftest(filter, seed);
  if (results.empty()) {
    std::cerr << "schema error: no suite matches filter \"" << filter
              << "\"\n";
    return 2;
  }

  int failed = 0;
  if (format == "text") {
    for (const auto& r : results) {
      std::cout << r.name << ": " << r.passed << " passed, " << r.failed
                << " failed\n";
      for (const auto& f : r.failures) std::cout << "    FAIL " << f << "\n";
      failed += r.failed;
    }
    std::cout << (failed == 0 ? "selftest passed" : "selftest FAILED") << "\n";
  } else {
    ordered_json rows = ordered_json::array();
    for (const auto& r : results) {
      ordered_json row;
      row["suite"] = r.name;
      row["passed"] = r.passed;
      row["failed"] = r.failed;
      row["failures"] = r.failures;
      rows.push_back(std::move(row));
      failed += r.failed;
    }
    std::cout << rows.dump(2) << "\n";
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Second partial global Euler characteristic calculator for finite "
      "Galois modules"};
  app.require_subcommand(1);

  std::string run_file;
  std::string run_format = "json";
  auto* run = app.add_subcommand("run", "Evaluate a scenario batch file");
  run->add_option("file", run_file, "scenario batch (JSON)")->required();
  run->add_option("--format", run_format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  std::string verify_format = "text";
  auto* verify = app.add_subcommand(
      "verify-examples",
      "Re-evaluate the bundled batches against their frozen expectations");
  verify->add_option("--format", verify_format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  std::string st_filter;
  std::uint64_t st_seed = 0;
  std::string st_format = "text";
  auto* st =
      app.add_subcommand("selftest", "Run the built-in verification suites");
  st->add_option("--filter", st_filter, "only suites whose name contains this");
  st->add_option("--seed", st_seed,
                 "seed for the randomized corpora (others are deterministic)");
  st->add_option("--format", st_format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(run_file, run_format);
    if (verify->parsed()) return cmd_verify(verify_format);
    return cmd_selftest(st_filter, st_seed, st_format);
  } catch (const euchar::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const euchar::EngineError& e) {
    std::cerr << "engine error: " << e.what() << "\n";
    return 3;
  }
}
