#include <fstream>
#include <sstream>

#include "doctest.h"

#include "cstardyn/cli/commands.hpp"

using namespace cstardyn;
using namespace cstardyn::cli;

namespace {

std::string data_file(const std::string& name) { return std::string(CSTARDYN_DATA_DIR) + "/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunConfig config(const std::string& command) {
  RunConfig c;
  c.command = command;
  return c;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("verify the trivial representation of Sigma_2") {
    RunConfig c = config("verify");
    c.system_file = data_file("sigma2_trivial_rep.json");
    const CommandResult r = run_command(c);
    CHECK(r.exit_code == kPass);
    CHECK(r.report["passed"] == true);
    CHECK(r.report["regularCovariant"]["passed"] == true);
    CHECK(r.report["config"]["seed"] == 42);
  }

  TEST_CASE("verify reports the failing cocycle relation") {
    RunConfig c = config("verify");
    c.system_file = data_file("faulty_cocycle.json");
    const CommandResult r = run_command(c);
    CHECK(r.exit_code == kVerificationFailure);
    CHECK(r.summary.find("cocycle.cocycle_identity") != std::string::npos);
  }

  TEST_CASE("inline payload matches the file") {
    RunConfig from_file = config("verify");
    from_file.system_file = data_file("z3_cycle_rep.json");
    RunConfig from_inline = config("verify");
    from_inline.inline_json = read_file(data_file("z3_cycle_rep.json"));
    const CommandResult a = run_command(from_file), b = run_command(from_inline);
    CHECK(a.exit_code == kPass);
    Json ra = a.report, rb = b.report;
    ra.erase("config");
    rb.erase("config");
    CHECK(ra == rb);
  }

  TEST_CASE("usage errors") {
    RunConfig both = config("verify");
    both.system_file = data_file("z3_cycle_rep.json");
    both.inline_json = "{}";
    CHECK_THROWS_AS(run_command(both), UsageError);
    CHECK_THROWS_AS(run_command(config("verify")), UsageError);
    RunConfig broken = config("verify");
    broken.inline_json = "{\"system\": ";
    CHECK_THROWS_WITH_AS(run_command(broken), doctest::Contains("byte"), UsageError);
    RunConfig shape = config("verify");
    shape.inline_json = R"({"system": {"group": {"cyclic": 2}, "space": 2}})";
    CHECK_THROWS_AS(run_command(shape), UsageError);
    CHECK_THROWS_AS(run_command(config("frobnicate")), UsageError);
    RunConfig tol = config("trace-cone");
    tol.tol = -1.0;
    CHECK_THROWS_AS(run_command(tol), UsageError);
    RunConfig ex = config("example");
    ex.name = "omega_n";
    ex.n = 1;
    CHECK_THROWS_AS(run_command(ex), UsageError);
    ex.name = "tau_n";
    ex.n = 2;
    CHECK_THROWS_AS(run_command(ex), UsageError);
  }

  TEST_CASE("example reports") {
    for (const char* name : {"omega_n", "sigma_n"}) {
      RunConfig c = config("example");
      c.name = name;
      c.n = 3;
      const CommandResult r = run_command(c);
      CHECK(r.exit_code == kPass);
      CHECK(r.report["spanDimension"] == 27);
      CHECK(r.report["expectedSpanDimension"] == 27);
      CHECK(r.report["maxDeviationFromMatrixUnits"].get<double>() <= 1e-9);
      CHECK(r.report["identification"].size() == 27);
      CHECK(r.report["identification"][5]["summand"] == r.report["identification"][5]["p"]);
    }
  }

  TEST_CASE("pd verdicts") {
    RunConfig c = config("pd");
    c.system_file = data_file("omega2_false_multiplier.json");
    CommandResult r = run_command(c);
    CHECK(r.exit_code == kVerificationFailure);
    CHECK(r.report["agreement"] == true);
    CHECK(r.report["positiveDefinite"] == false);
    CHECK(r.report["fiberwiseCriterion"]["witness"]["eigenvalue"].get<double>() < 0.0);

    c.system_file = data_file("z3_unit_multiplier.json");
    r = run_command(c);
    CHECK(r.exit_code == kPass);
    CHECK(r.report["positiveDefinite"] == true);
  }

  TEST_CASE("trace-cone report") {
    RunConfig c = config("trace-cone");
    c.count = 500;
    c.sigma_count = 50;
    const CommandResult r = run_command(c);
    CHECK(r.report["omega2"]["passed"] == true);
    CHECK(r.report["note"].get<std::string>().find("Computed") != std::string::npos);
    CHECK(r.report["printedFormulaCheck"]["positiveDefinite"] == false);
    CHECK(r.report["printedFormulaCheck"]["tr1"][1].get<double>() == doctest::Approx(2.0));
    CHECK(r.exit_code == (r.report["separationWitnessed"] == true ? kPass : kVerificationFailure));
  }

  TEST_CASE("reports are deterministic for a fixed seed") {
    RunConfig c = config("pd");
    c.system_file = data_file("omega2_false_multiplier.json");
    c.trials = 200;
    CHECK(run_command(c).report.dump() == run_command(c).report.dump());
    RunConfig t = config("trace-cone");
    t.count = 200;
    t.sigma_count = 20;
    CHECK(run_command(t).report.dump() == run_command(t).report.dump());
  }
}
