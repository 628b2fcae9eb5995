#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "herd/criteria.hpp"
#include "herd/errors.hpp"
#include "herd/generators.hpp"
#include "herd/graph.hpp"
#include "herd/leader_design.hpp"
#include "herd/model_io.hpp"
#include "herd/positivity.hpp"
#include "herd/report.hpp"
#include "herd/synthesis.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitInputError = 2;
constexpr int kExitNotHerdable = 3;
constexpr int kExitInternalError = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw herd::InvalidInputError("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct OutputOptions {
  std::string format = "text";
  std::string report_path;
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--format", out.format, "Output format on stdout")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  cmd->add_option("--report", out.report_path, "Write the JSON report to this file");
}

class Stopwatch {
 public:
  long elapsed_ms() const {
    const auto now = std::chrono::steady_clock::now();
    return std::chrono::duration_cast<std::chrono::milliseconds>(now - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(herd::Report& report, const Stopwatch& watch, const OutputOptions& out) {
  report.timing_ms = watch.elapsed_ms();
  if (!out.report_path.empty()) {
    std::ofstream f(out.report_path, std::ios::binary);
    if (!f) throw herd::InvalidInputError("cannot write report: " + out.report_path);
    f << herd::report_to_json(report);
  }
  if (out.format == "json") {
    std::cout << herd::report_to_json(report);
  } else {
    std::cout << herd::report_to_text(report);
  }
}

herd::Report start_report(const std::string& command, const herd::ParsedModel& model) {
  herd::Report report;
  report.command = command;
  report.model_name = model.name;
  return report;
}

int run_check(const std::string& model_path, const OutputOptions& out) {
  const Stopwatch watch;
  const herd::ParsedModel model = herd::parse_model_file(read_file(model_path));
  herd::Report report = start_report("check", model);
  report.verdict = herd::decide_herdability(model.pair);
  emit(report, watch, out);
  return report.verdict->herdable ? kExitSuccess : kExitNotHerdable;
}

int run_criteria(const std::string& model_path, const OutputOptions& out) {
  const Stopwatch watch;
  const herd::ParsedModel model = herd::parse_model_file(read_file(model_path));
  herd::Report report = start_report("criteria", model);
  herd::CriteriaRun run = herd::run_all_criteria(model.pair);
  const bool consistent = run.consistency_failures.empty();
  report.verdict = run.verdict;
  report.criteria = std::move(run);
  emit(report, watch, out);
  return consistent ? kExitSuccess : kExitInternalError;
}

int run_balance(const std::string& model_path, const OutputOptions& out) {
  const Stopwatch watch;
  const herd::ParsedModel model = herd::parse_model_file(read_file(model_path));
  herd::Report report = start_report("balance", model);
  const herd::SignedDigraph g(model.pair.A);
  report.balance_requested = true;
  report.clustering = herd::clustering_balance(g);
  report.structural = herd::structural_balance(g);
  emit(report, watch, out);
  return kExitSuccess;
}

int run_tree(const std::string& model_path, int leader_1based, const OutputOptions& out) {
  const Stopwatch watch;
  const herd::ParsedModel model = herd::parse_model_file(read_file(model_path));
  const int n = model.pair.state_dim();
  if (leader_1based < 1 || leader_1based > n) {
    throw herd::InvalidInputError("--leader must lie in [1, n]");
  }
  const int leader = leader_1based - 1;
  const herd::SignedDigraph g(model.pair.A);
  herd::Report report = start_report("tree", model);
  report.tree = herd::layer_decomposition(g, leader);

  const herd::SystemPair selection = herd::SystemPair::from_leaders(model.pair.A, {leader});
  herd::CriteriaRun run;
  run.verdict = herd::decide_herdability(selection);
  run.reports.push_back(herd::check_tree_layer_sign_criterion(selection));
  if (report.tree->depth() <= 1) {
    run.reports.push_back(herd::check_tree_depth1_criterion(selection));
  }
  if (report.tree->depth() <= 2) {
    run.reports.push_back(herd::check_tree_depth2_criterion(selection));
  }
  run.consistency_failures = herd::criteria_consistency_failures(run.reports, run.verdict);
  const bool consistent = run.consistency_failures.empty();
  report.verdict = run.verdict;
  report.criteria = std::move(run);
  emit(report, watch, out);
  return consistent ? kExitSuccess : kExitInternalError;
}

int run_synthesize(const std::string& model_path, const std::string& x0_path,
                   const std::string& threshold, const OutputOptions& out) {
  const Stopwatch watch;
  const herd::ParsedModel model = herd::parse_model_file(read_file(model_path));
  const herd::RationalVector x0 = herd::parse_rational_vector(read_file(x0_path));
  const auto h = herd::Rational::parse(threshold);
  if (!h) throw herd::InvalidInputError("--h: not a rational \"p\" or \"p/q\"");
  herd::Report report = start_report("synthesize", model);
  herd::SynthesisOutcome outcome = herd::herding_input(model.pair, x0, *h);
  report.verdict = outcome.verdict;
  report.x0 = x0;
  if (outcome.plan) report.plan = std::move(outcome.plan);
  emit(report, watch, out);
  return report.verdict->herdable ? kExitSuccess : kExitNotHerdable;
}

int run_design(const std::string& model_path, int max_size, bool max_size_given,
               const OutputOptions& out) {
  const Stopwatch watch;
  const herd::ParsedModel model = herd::parse_model_file(read_file(model_path));
  int budget = max_size;
  if (!max_size_given) budget = std::min(budget, model.pair.state_dim());
  herd::Report report = start_report("design", model);
  report.design = herd::minimal_herdable_leader_sets(model.pair.A, budget);
  emit(report, watch, out);
  return kExitSuccess;
}

int run_verify_report(const std::string& model_path, const std::string& report_path) {
  const herd::SystemPair pair = herd::parse_model(read_file(model_path));
  const std::vector<std::string> problems = herd::verify_report(pair, read_file(report_path));
  if (problems.empty()) {
    std::cout << "report verifies against the model\n";
    return kExitSuccess;
  }
  for (const std::string& p : problems) std::cout << "problem: " << p << "\n";
  return kExitInternalError;
}

int run_fuzz(unsigned long long seed) {
  herd::Rng rng(seed);
  constexpr int kCases = 100;
  std::vector<std::string> failures;
  for (int i = 0; i < kCases && failures.empty(); ++i) {
    const int n = rng.uniform_int(1, 6);
    const int m = rng.uniform_int(1, 2);
    const herd::SystemPair pair = herd::random_pair(rng, n, m, herd::default_weight_pool(), 60);
    const std::string tag = "case " + std::to_string(i);

    const herd::CriteriaRun run = herd::run_all_criteria(pair);
    for (const std::string& f : run.consistency_failures) failures.push_back(tag + ": " + f);

    const herd::RationalMatrix r = herd::controllability_matrix(pair);
    if (run.verdict.herdable) {
      if (!run.verdict.primal_certificate ||
          !herd::verify_primal_certificate(r, *run.verdict.primal_certificate)) {
        failures.push_back(tag + ": primal certificate does not verify");
      }
    } else {
      if (!run.verdict.dual_certificate ||
          !herd::verify_dual_certificate(r, *run.verdict.dual_certificate)) {
        failures.push_back(tag + ": dual certificate does not verify");
      }
    }

    const herd::SystemPair reparsed = herd::parse_model(herd::model_to_json(pair, "fuzz"));
    if (reparsed.A != pair.A || reparsed.B != pair.B) {
      failures.push_back(tag + ": model serialization does not round-trip");
    }
  }
  if (!failures.empty()) {
    for (const std::string& f : failures) std::cerr << "fuzz failure: " << f << "\n";
    return kExitInternalError;
  }
  std::cout << "fuzz: " << kCases << " cases with seed " << seed << " verified\n";
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact herdability analysis for linear agent networks"};
  app.require_subcommand(1);

  std::string model_path;
  std::string x0_path;
  std::string threshold = "1";
  std::string report_path_in;
  int leader = 1;
  int max_size = 3;
  unsigned long long seed = 1;
  OutputOptions out;

  CLI::App* check = app.add_subcommand("check", "Decide herdability and print a certificate");
  check->add_option("model", model_path, "Model file (JSON)")->required();
  add_output_flags(check, out);

  CLI::App* criteria =
      app.add_subcommand("criteria", "Run reductions and all applicable structural criteria");
  criteria->add_option("model", model_path, "Model file (JSON)")->required();
  add_output_flags(criteria, out);

  CLI::App* balance =
      app.add_subcommand("balance", "Report clustering and structural balance partitions");
  balance->add_option("model", model_path, "Model file (JSON)")->required();
  add_output_flags(balance, out);

  CLI::App* tree =
      app.add_subcommand("tree", "Analyze A as an undirected tree seen from one leader");
  tree->add_option("model", model_path, "Model file (JSON)")->required();
  tree->add_option("--leader", leader, "Leader node (1-based)")->required();
  add_output_flags(tree, out);

  CLI::App* synthesize =
      app.add_subcommand("synthesize", "Compute an input sequence driving the state above h");
  synthesize->set_help_flag("--help", "Print this help message and exit");
  synthesize->add_option("model", model_path, "Model file (JSON)")->required();
  synthesize->add_option("--x0", x0_path, "Initial state file (JSON array of rationals)")
      ->required();
  synthesize->add_option("--h", threshold, "Threshold p or p/q")->capture_default_str();
  add_output_flags(synthesize, out);

  CLI::App* design =
      app.add_subcommand("design", "Search minimal herdable leader sets up to a size budget");
  design->add_option("model", model_path, "Model file (JSON)")->required();
  CLI::Option* max_size_opt =
      design->add_option("--max-size", max_size, "Largest leader-set size to try")
          ->capture_default_str();
  add_output_flags(design, out);

  CLI::App* verify =
      app.add_subcommand("verify-report", "Re-check every certificate in a report");
  verify->add_option("model", model_path, "Model file (JSON)")->required();
  verify->add_option("report", report_path_in, "Report file (JSON)")->required();

  CLI::App* fuzz =
      app.add_subcommand("fuzz", "Developer smoke test on randomly generated pairs");
  fuzz->add_option("--seed", seed, "Generator seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (check->parsed()) return run_check(model_path, out);
    if (criteria->parsed()) return run_criteria(model_path, out);
    if (balance->parsed()) return run_balance(model_path, out);
    if (tree->parsed()) return run_tree(model_path, leader, out);
    if (synthesize->parsed()) return run_synthesize(model_path, x0_path, threshold, out);
    if (design->parsed()) {
      return run_design(model_path, max_size, max_size_opt->count() > 0, out);
    }
    if (verify->parsed()) return run_verify_report(model_path, report_path_in);
    if (fuzz->parsed()) return run_fuzz(seed);
  } catch (const herd::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
