// Copyright 2026 The cohread Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cohread/cli.h"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>

#include "CLI11.hpp"

#include "cohread/channels.h"
#include "cohread/json_io.h"
#include "cohread/povm.h"
#include "cohread/random.h"
#include "cohread/readout_model.h"
#include "cohread/solver.h"
#include "cohread/state.h"

namespace cohread {
namespace {

constexpr double kClassicalTol = 1e-12;
constexpr double kClosedFormTol = 1e-12;
constexpr double kNegativeProbabilityTol = 1e-10;

struct RunConfig {
  std::string channel_path;
  std::string state_path;
  std::string model_path;
  std::string z_path;
  std::string counts_path;
  std::string out_path;
  std::string mode = "both";
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  double tol = kPhysicalTol;
  int max_iterations = SolverOptions{}.max_iterations;
  double residual_tol = SolverOptions{}.residual_tol;
  std::optional<double> step_size;
};

void emit(const Json& doc, const RunConfig& config, std::ostream& out) {
  if (config.out_path.empty()) {
    out << doc.dump(2) << "\n";
    return;
  }
  std::ofstream file(config.out_path);
  if (!file) throw FormatError("cannot write " + config.out_path);
  file << doc.dump(2) << "\n";
}

KrausChannel load_cptp_channel(const std::string& path, std::ostream& err) {
  KrausChannel channel = channel_from_json(read_json_file(path));
  const auto report = validate_cptp(channel);
  if (!report.passed) {
    err << "channel is not CPTP: completeness defect " << report.defect << "\n";
    throw std::domain_error("channel failed CPTP validation");
  }
  return channel;
}

int cmd_channel_validate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const KrausChannel channel = channel_from_json(read_json_file(config.channel_path));
  const auto cptp = validate_cptp(channel, config.tol);
  const auto povm = povm_defects(heisenberg_projectors(channel));
  const double kernel_defect = kernel_diag_defect(channel);
  const bool classical = kernel_defect <= kClassicalTol;
  const bool passed = cptp.passed && povm.passed(config.tol);

  emit({{"dim", channel.dim()},
        {"kraus_count", channel.kraus_ops().size()},
        {"cptp_defect", cptp.defect},
        {"cptp_passed", cptp.passed},
        {"povm_hermitian_defect", povm.hermitian},
        {"povm_min_eigenvalue", povm.min_eigenvalue},
        {"povm_completeness_defect", povm.completeness},
        {"povm_passed", povm.passed(config.tol)},
        {"kernel_diag_defect", kernel_defect},
        {"C-classical", classical},
        {"passed", passed}},
       config, out);
  err << "CPTP defect: " << cptp.defect << (cptp.passed ? " (pass)" : " (FAIL)") << "\n"
      << "POVM hermitian defect: " << povm.hermitian << "\n"
      << "POVM min eigenvalue: " << povm.min_eigenvalue << "\n"
      << "POVM completeness defect: " << povm.completeness << "\n"
      << "kernel diagonal defect: " << kernel_defect << "\n"
      << "C-classical: " << (classical ? "true" : "false") << "\n";
  return passed ? kExitOk : kExitDomainFailure;
}

int cmd_model_extract(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const KrausChannel channel = load_cptp_channel(config.channel_path, err);
  const ReadoutModel model = extract(effective_povm(channel));
  Json doc = model_to_json(model);
  doc["nonclassicality_max"] = nonclassicality(model, NormKind::kMax);
  doc["nonclassicality_frobenius"] = nonclassicality(model, NormKind::kFrobenius);
  emit(doc, config, out);
  return kExitOk;
}

int cmd_forward(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const KrausChannel channel = load_cptp_channel(config.channel_path, err);
  const DensityMatrix rho = state_from_json(read_json_file(config.state_path));
  if (rho.dim() != channel.dim()) {
    throw std::invalid_argument("state dimension " + std::to_string(rho.dim()) +
                                " does not match channel dimension " +
                                std::to_string(channel.dim()));
  }
  Json doc = Json::object();
  RealVector z_model;
  RealVector z_oracle;
  if (config.mode == "model" || config.mode == "both") {
    z_model = forward(extract(effective_povm(channel)), decompose(rho));
    doc["z_model"] = z_model;
  }
  if (config.mode == "oracle" || config.mode == "both") {
    z_oracle = oracle_probabilities(channel, rho);
    doc["z_oracle"] = z_oracle;
  }
  if (config.mode == "both") {
    double discrepancy = 0.0;
    for (std::size_t k = 0; k < z_model.size(); ++k) {
      discrepancy = std::max(discrepancy, std::abs(z_model[k] - z_oracle[k]));
    }
    doc["max_abs_discrepancy"] = discrepancy;
  }
  emit(doc, config, out);
  return kExitOk;
}

int cmd_sample(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const KrausChannel channel = load_cptp_channel(config.channel_path, err);
  const DensityMatrix rho = state_from_json(read_json_file(config.state_path));
  if (rho.dim() != channel.dim()) {
    throw std::invalid_argument("state dimension does not match channel dimension");
  }
  const RealVector z = oracle_probabilities(channel, rho);
  const auto counts = sample_counts(z, config.shots, config.seed);
  emit({{"shots", config.shots}, {"seed", config.seed}, {"z", z}, {"counts", counts}},
       config, out);
  return kExitOk;
}

RealVector load_observed(const RunConfig& config) {
  if (!config.z_path.empty()) {
    const Json doc = read_json_file(config.z_path);
    if (!doc.is_object() || !doc.contains("z")) throw FormatError("z file needs a \"z\" array");
    return vector_from_json(doc.at("z"));
  }
  const Json doc = read_json_file(config.counts_path);
  if (!doc.is_object() || !doc.contains("counts")) {
    throw FormatError("counts file needs a \"counts\" array");
  }
  RealVector freq = vector_from_json(doc.at("counts"));
  double total = 0.0;
  for (double c : freq) {
    if (c < 0.0) throw FormatError("counts must be non-negative");
    total += c;
  }
  if (!(total > 0.0)) throw FormatError("counts must not all be zero");
  for (double& c : freq) c /= total;
  return freq;
}

int cmd_mitigate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::optional<ReadoutModel> model;
  if (!config.model_path.empty()) {
    model = model_from_json(read_json_file(config.model_path));
  } else {
    model = extract(effective_povm(load_cptp_channel(config.channel_path, err)));
  }
  SolverOptions options;
  options.max_iterations = config.max_iterations;
  options.residual_tol = config.residual_tol;
  options.step_size = config.step_size;
  options.seed = config.seed;
  const MitigationResult result =
      mitigate(MitigationProblem(*std::move(model), load_observed(config)), options);
  emit(result_to_json(result), config, out);
  if (!result.converged) {
    err << "solver stopped after " << result.iterations
        << " iterations without converging; residual " << result.residual << "\n";
  }
  return kExitOk;
}

struct ClosedFormExample {
  std::string name;
  double parameter;
  KrausChannel channel;
  RealMatrix a_expected;
  RealMatrix c_expected;
};

RealMatrix matrix2(double a00, double a01, double a10, double a11) {
  RealMatrix m(2, 2);
  m(0, 0) = a00;
  m(0, 1) = a01;
  m(1, 0) = a10;
  m(1, 1) = a11;
  return m;
}

std::vector<ClosedFormExample> closed_form_examples() {
  std::vector<ClosedFormExample> examples;
  const RealMatrix no_coherence(2, 2);
  for (double lambda : {0.0, 0.5, 1.0}) {
    examples.push_back({"dephasing", lambda, dephasing(lambda), matrix2(1, 0, 0, 1),
                        no_coherence});
  }
  for (double gamma : {0.0, 0.3, 1.0}) {
    examples.push_back({"amplitude_damping", gamma, amplitude_damping(gamma),
                        matrix2(1, gamma, 0, 1 - gamma), no_coherence});
  }
  for (double theta : {0.0, 0.3, std::numbers::pi / 2, std::numbers::pi}) {
    const double c2 = std::pow(std::cos(theta / 2), 2);
    const double s2 = std::pow(std::sin(theta / 2), 2);
    const double s = std::sin(theta);
    examples.push_back({"rotation_y", theta, rotation_y(theta), matrix2(c2, s2, s2, c2),
                        matrix2(s, 0, -s, 0)});
  }
  return examples;
}

double max_difference(const RealMatrix& a, const RealMatrix& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    d = std::max(d, std::abs(a.data()[i] - b.data()[i]));
  }
  return d;
}

int cmd_closed_forms(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Json records = Json::array();
  bool all_passed = true;
  for (const auto& ex : closed_form_examples()) {
    const ReadoutModel model = extract(effective_povm(ex.channel));
    const double error = std::max(max_difference(model.A(), ex.a_expected),
                                  max_difference(model.C(), ex.c_expected));
    const bool passed = error <= kClosedFormTol;
    all_passed = all_passed && passed;
    records.push_back({{"name", ex.name},
                       {"parameter", ex.parameter},
                       {"A", real_matrix_to_json(model.A())},
                       {"A_closed_form", real_matrix_to_json(ex.a_expected)},
                       {"C", real_matrix_to_json(model.C())},
                       {"C_closed_form", real_matrix_to_json(ex.c_expected)},
                       {"nonclassicality_max", nonclassicality(model, NormKind::kMax)},
                       {"max_abs_error", error},
                       {"passed", passed}});
    err << (passed ? "PASS " : "FAIL ") << ex.name << " parameter=" << std::setprecision(17)
        << ex.parameter << " max_abs_error=" << std::setprecision(3) << error << "\n";
  }
  emit({{"examples", records}, {"passed", all_passed}}, config, out);
  return all_passed ? kExitOk : kExitDomainFailure;
}

}  // namespace

std::vector<std::uint64_t> sample_counts(std::span<const double> probabilities,
                                         std::uint64_t shots, std::uint64_t seed) {
  if (probabilities.empty()) throw std::invalid_argument("no outcome probabilities");
  RealVector cumulative;
  cumulative.reserve(probabilities.size());
  double total = 0.0;
  for (double p : probabilities) {
    if (!std::isfinite(p) || p < -kNegativeProbabilityTol) {
      throw std::domain_error("outcome probability " + std::to_string(p) +
                              " is not physical");
    }
    total += std::max(p, 0.0);
    cumulative.push_back(total);
  }
  if (!(total > 0.0)) throw std::domain_error("outcome probabilities sum to zero");

  Rng rng(seed);
  std::vector<std::uint64_t> counts(probabilities.size(), 0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * total;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    // Skip zero-probability outcomes that share a cumulative value.
    while (it != cumulative.begin() && *(it - 1) == *it) --it;
    ++counts[static_cast<std::size_t>(it - cumulative.begin())];
  }
  return counts;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coherence-sensitive readout models: z = A x + C y", "cohread"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", config.out_path, "Write JSON here instead of stdout");
  };

  auto* validate = app.add_subcommand("channel-validate", "Check CPTP and POVM axioms");
  validate->add_option("--channel", config.channel_path, "Channel JSON")->required();
  validate->add_option("--tol", config.tol, "Physicality tolerance")
      ->check(CLI::PositiveNumber);
  add_out(validate);

  auto* model_extract = app.add_subcommand("model-extract", "Emit A and C for a channel");
  model_extract->add_option("--channel", config.channel_path, "Channel JSON")->required();
  add_out(model_extract);

  auto* fwd = app.add_subcommand("forward", "Outcome probabilities via the readout model");
  fwd->add_option("--channel", config.channel_path, "Channel JSON")->required();
  fwd->add_option("--state", config.state_path, "State JSON")->required();
  fwd->add_option("--mode", config.mode, "model, oracle or both")
      ->check(CLI::IsMember({"model", "oracle", "both"}));
  add_out(fwd);

  auto* oracle = app.add_subcommand("oracle", "Outcome probabilities via the superoperator");
  oracle->add_option("--channel", config.channel_path, "Channel JSON")->required();
  oracle->add_option("--state", config.state_path, "State JSON")->required();
  add_out(oracle);

  auto* sample = app.add_subcommand("sample", "Draw finite-shot counts");
  sample->add_option("--channel", config.channel_path, "Channel JSON")->required();
  sample->add_option("--state", config.state_path, "State JSON")->required();
  sample->add_option("--shots", config.shots, "Number of shots")
      ->required()
      ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
  sample->add_option("--seed", config.seed, "RNG seed");
  add_out(sample);

  auto* mit = app.add_subcommand("mitigate", "Recover a physical (x, y) from observed z");
  auto* model_opt = mit->add_option("--model", config.model_path, "Model JSON");
  auto* channel_opt = mit->add_option("--channel", config.channel_path, "Channel JSON");
  model_opt->excludes(channel_opt);
  auto* z_opt = mit->add_option("--z", config.z_path, "JSON with a \"z\" array");
  auto* counts_opt = mit->add_option("--counts", config.counts_path,
                                     "JSON with a \"counts\" array");
  z_opt->excludes(counts_opt);
  mit->add_option("--max-iters", config.max_iterations, "Iteration limit")
      ->check(CLI::PositiveNumber);
  mit->add_option("--tol", config.residual_tol, "Residual tolerance")
      ->check(CLI::PositiveNumber);
  mit->add_option("--step", config.step_size, "Fixed gradient step (default 1/L)")
      ->check(CLI::PositiveNumber);
  mit->add_option("--seed", config.seed, "Power-iteration seed");
  add_out(mit);

  auto* examples = app.add_subcommand("paper-examples",
                                      "Check dephasing, damping and rotation closed forms");
  add_out(examples);

  try {
    app.parse(argc, argv);
    if (mit->parsed()) {
      if (config.model_path.empty() && config.channel_path.empty()) {
        throw CLI::RequiredError("mitigate needs --model or --channel");
      }
      if (config.z_path.empty() && config.counts_path.empty()) {
        throw CLI::RequiredError("mitigate needs --z or --counts");
      }
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_channel_validate(config, out, err);
    if (model_extract->parsed()) return cmd_model_extract(config, out, err);
    if (fwd->parsed()) return cmd_forward(config, out, err);
    if (oracle->parsed()) {
      RunConfig oracle_config = config;
      oracle_config.mode = "oracle";
      return cmd_forward(oracle_config, out, err);
    }
    if (sample->parsed()) return cmd_sample(config, out, err);
    if (mit->parsed()) return cmd_mitigate(config, out, err);
    if (examples->parsed()) return cmd_closed_forms(config, out, err);
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainFailure;
  }
  return kExitUsage;
}

}  // namespace cohread
