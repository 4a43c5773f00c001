#include "cstardyn/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "cstardyn/core/errors.hpp"
#include "cstardyn/multiplier/examples.hpp"
#include "cstardyn/multiplier/trace_cone.hpp"

namespace cstardyn::cli {

namespace {

Json config_echo(const RunConfig& config) {
  Json out{{"command", config.command}, {"seed", config.seed}, {"tol", config.tol}};
  if (config.command == "example") {
    out["name"] = config.name.value_or("");
    out["n"] = config.n;
  }
  if (config.command == "trace-cone") {
    out["omegaCount"] = config.count;
    out["sigmaCount"] = config.sigma_count;
  }
  if (config.command == "pd") out["trials"] = config.trials;
  return out;
}

System payload_system(const Json& payload) {
  if (!payload.is_object() || !payload.contains("system")) throw UsageError("payload needs a \"system\" member");
  return system_from_json(payload["system"]);
}

std::string verdict(bool pass) { return pass ? "pass" : "FAIL"; }

}  // namespace

Json load_payload(const RunConfig& config) {
  if (config.system_file.has_value() == config.inline_json.has_value())
    throw UsageError("give exactly one of --system FILE or --inline JSON");
  std::string text;
  std::string origin;
  if (config.system_file) {
    std::ifstream in(*config.system_file);
    if (!in) throw UsageError("cannot read " + *config.system_file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
    origin = *config.system_file;
  } else {
    text = *config.inline_json;
    origin = "--inline";
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(origin + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

CommandResult cmd_verify(const RunConfig& config) {
  const Json payload = load_payload(config);
  const System system = payload_system(payload);
  if (!payload.contains("rep") && !payload.contains("cocycle"))
    throw UsageError("verify needs a \"rep\" or \"cocycle\" payload");

  CommandResult result;
  result.report["config"] = config_echo(config);
  result.report["system"] = system_to_json(system);
  bool pass = true;
  std::string failing;
  const auto record = [&](const char* key, const VerificationReport& r) {
    result.report[key] = report_to_json(r);
    for (const auto& c : r.checks)
      if (!c.pass) failing += std::string(failing.empty() ? "" : ", ") + key + "." + c.name;
    pass = pass && r.passed();
  };
  if (payload.contains("rep")) record("rep", verify_equivariant(rep_from_json(system, payload["rep"]), config.tol));
  if (payload.contains("cocycle"))
    record("cocycle", verify_cocycle(cocycle_from_json(system, payload["cocycle"]), config.tol));

  const CovariantRep regular = regular_covariant(system);
  VerificationReport covariance;
  covariance.add("covariance", regular.covariance_residual(), config.tol);
  covariance.add("representation", regular.representation_residual(), config.tol);
  record("regularCovariant", covariance);

  result.report["passed"] = pass;
  result.exit_code = pass ? kPass : kVerificationFailure;
  result.summary = "verify: " + verdict(pass) + (failing.empty() ? "" : " (failing: " + failing + ")");
  return result;
}

CommandResult cmd_example(const RunConfig& config) {
  if (!config.name || (*config.name != "omega_n" && *config.name != "sigma_n"))
    throw UsageError("example needs --name omega_n or --name sigma_n");
  if (config.n < 2) throw UsageError("example needs --n >= 2");
  const bool sigma = *config.name == "sigma_n";
  const int n = config.n;
  const System system = sigma ? System::shift_cyclic(n) : System::trivial_cyclic(n);

  double deviation = 0.0;
  bool reps_ok = true;
  std::vector<Multiplier> units;
  Json identification = Json::array();
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      for (int p = 0; p < n; ++p) {
        const Realization r = sigma ? sigma_example(n, k, l, p) : omega_example(n, k, l, p);
        reps_ok = reps_ok && verify_equivariant(r.rep, config.tol).passed();
        const Multiplier t = coefficient(r.rep, r.xi, r.eta);
        deviation = std::max(deviation, t.distance(matrix_unit_multiplier(system, k, l, p)));
        units.push_back(t);
        identification.push_back({{"k", k}, {"l", l}, {"p", p}, {"summand", p}, {"matrixUnit", {k, l}}});
      }
  const int span = span_dimension(units, config.tol);
  const int expected = n * n * n;
  const bool pass = reps_ok && deviation <= config.tol && span == expected;

  CommandResult result;
  result.report["config"] = config_echo(config);
  result.report["system"] = system_to_json(system);
  result.report["representationsVerified"] = reps_ok;
  result.report["maxDeviationFromMatrixUnits"] = deviation;
  result.report["spanDimension"] = span;
  result.report["expectedSpanDimension"] = expected;
  result.report["identification"] = std::move(identification);
  result.report["passed"] = pass;
  result.exit_code = pass ? kPass : kVerificationFailure;
  result.summary = "example " + *config.name + " n=" + std::to_string(n) + ": span " + std::to_string(span) + "/" +
                   std::to_string(expected) + ", max deviation " + std::to_string(deviation) + " -> " + verdict(pass);
  return result;
}

CommandResult cmd_trace_cone(const RunConfig& config) {
  if (config.count < 1 || config.sigma_count < 1) throw UsageError("sample counts must be positive");
  const TraceSample omega = trace_image_sample(ConeSystem::Omega2, config.count, config.seed, config.tol);
  const TraceSample sigma = trace_image_sample(ConeSystem::Sigma2, config.sigma_count, config.seed, config.tol);

  const bool omega_ok = omega.max_abs_imag_tr1 <= 1e-12 && omega.min_real_tr0 >= -1e-12 && omega.pd_failures == 0;
  Json witness = nullptr;
  for (std::size_t i = 0; i < sigma.points.size(); ++i)
    if (std::abs(sigma.points[i].tr1.imag()) >= 0.5) {
      witness = {{"index", i}, {"tr0", complex_to_json(sigma.points[i].tr0)},
                 {"tr1", complex_to_json(sigma.points[i].tr1)}};
      break;
    }
  const bool separated = omega_ok && !witness.is_null();

  CVector xi(2), eta(2);
  xi << 1.0, 0.0;
  eta << 0.0, Complex(0.0, 1.0);
  const Multiplier printed = sigma2_formula_printed({1, -1}, xi, eta);

  CommandResult result;
  result.report["config"] = config_echo(config);
  result.report["omega2"] = {{"samples", config.count},
                             {"pdFailures", omega.pd_failures},
                             {"maxAbsImagTr1", omega.max_abs_imag_tr1},
                             {"minRealTr0", omega.min_real_tr0},
                             {"passed", omega_ok}};
  result.report["sigma2"] = {{"samples", config.sigma_count},
                             {"pdFailures", sigma.pd_failures},
                             {"maxAbsImagTr1", sigma.max_abs_imag_tr1},
                             {"minRealTr0", sigma.min_real_tr0},
                             {"imaginaryWitness", witness}};
  result.report["printedFormulaCheck"] = {{"eps", {1, -1}},
                                          {"xi", vector_to_json(xi)},
                                          {"eta", vector_to_json(eta)},
                                          {"tr1", complex_to_json(trace_point(printed).tr1)},
                                          {"positiveDefinite", is_positive_definite(printed, config.tol).positive}};
  result.report["note"] = std::string(kTraceDiscrepancyNote);
  result.report["separationWitnessed"] = separated;
  result.report["passed"] = separated;
  result.exit_code = separated ? kPass : kVerificationFailure;
  result.summary = "trace-cone: Omega_2 " + verdict(omega_ok) + " (max |Im tr T_1| " +
                   std::to_string(omega.max_abs_imag_tr1) + "), Sigma_2 max |Im tr T_1| " +
                   std::to_string(sigma.max_abs_imag_tr1) + " -> separation " + (separated ? "witnessed" : "NOT witnessed");
  return result;
}

CommandResult cmd_pd(const RunConfig& config) {
  if (config.trials < 1) throw UsageError("--trials must be positive");
  const Json payload = load_payload(config);
  const System system = payload_system(payload);
  if (!payload.contains("multiplier")) throw UsageError("pd needs a \"multiplier\" payload");
  const Multiplier t = multiplier_from_json(system, payload["multiplier"]);

  const PdCertificate fibre = is_positive_definite(t, config.tol);
  const PdCertificate sampled = pd_sample_oracle(t, config.trials, config.seed, config.tol);
  const ReducedCrossedProduct rcp = build_reduced(system, config.tol);
  const PdCertificate cp = is_completely_positive(rcp, induced_map(rcp, t), config.tol);
  const bool agree = fibre.positive == sampled.positive && sampled.positive == cp.positive;
  const bool pass = agree && fibre.positive;

  CommandResult result;
  result.report["config"] = config_echo(config);
  result.report["system"] = system_to_json(system);
  result.report["multiplier"] = multiplier_to_json(t);
  result.report["fiberwiseCriterion"] = certificate_to_json(fibre);
  result.report["sampledDefinition"] = certificate_to_json(sampled);
  result.report["completelyPositive"] = certificate_to_json(cp);
  result.report["agreement"] = agree;
  result.report["positiveDefinite"] = agree && fibre.positive;
  result.report["passed"] = pass;
  result.exit_code = pass ? kPass : kVerificationFailure;
  result.summary = std::string("pd: fiberwise ") + (fibre.positive ? "true" : "false") + ", sampled " +
                   (sampled.positive ? "true" : "false") + ", completely positive " + (cp.positive ? "true" : "false") +
                   (agree ? "" : " -- DISAGREEMENT");
  return result;
}

CommandResult run_command(const RunConfig& config) {
  if (!(config.tol > 0.0) || !std::isfinite(config.tol)) throw UsageError("--tol must be positive");
  try {
    if (config.command == "verify") return cmd_verify(config);
    if (config.command == "example") return cmd_example(config);
    if (config.command == "trace-cone") return cmd_trace_cone(config);
    if (config.command == "pd") return cmd_pd(config);
  } catch (const JsonFormatError& e) {
    throw UsageError(std::string("invalid payload at ") + e.what());
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown command \"" + config.command + "\" (expected verify, example, trace-cone or pd)");
}

}  // namespace cstardyn::cli
