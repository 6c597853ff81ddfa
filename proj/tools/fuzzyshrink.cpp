// fuzzyshrink command-line driver.
//
//   fuzzyshrink fit      --builtin dataset2 [--estimator ls|lad|bootstrap|fuzzy-input]
//   fuzzyshrink shrink   --builtin dataset2 --fixture 14a --k 0.0972
//   fuzzyshrink sweep    --builtin dataset3 --fixture 15a --metric dh --k-max 10
//   fuzzyshrink evaluate --builtin dataset1 --fixture 13a-published-fitted --metric dlr
//   fuzzyshrink demo 2

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fuzzyshrink/cli.hpp"

namespace fc = fuzzyshrink::cli;

namespace {

void add_common(CLI::App& sub, fc::RunConfig& cfg, std::string& metric, std::string& output,
                std::string& center_rule, std::string& spread_rule, bool& no_intercept, bool& no_timestamp) {
  sub.add_option("--metric", metric, "dlr, dlr:WL,WR, dh, d2q, dpq:P,Q")->capture_default_str();
  sub.add_option("--output", output, "table, json or csv")->capture_default_str();
  sub.add_option("--threads", cfg.threads, "worker threads for sweeps and bootstrap")->capture_default_str();
  sub.add_option("--center-rule", center_rule, "stein, positive-stein or none")->capture_default_str();
  sub.add_option("--spread-rule", spread_rule, "positive-stein or none")->capture_default_str();
  sub.add_flag("--no-intercept-shrink", no_intercept, "leave the intercept coefficient unshrunk");
  sub.add_flag("--no-timestamp", no_timestamp, "write a null timestamp so reports compare byte for byte");
}

void add_source(CLI::App& sub, fc::RunConfig& cfg, std::string& builtin, std::string& csv, std::string& estimator) {
  sub.add_option("--builtin", builtin, "dataset1 .. dataset4");
  sub.add_option("--csv", csv, "path to a csv dataset");
  sub.add_option("--fixture", cfg.fixture, "named model (13a, 14a, ...) or <name>-published-fitted|shrunk");
  sub.add_option("--estimator", estimator, "ls, lad, bootstrap or fuzzy-input");
  sub.add_option("--replicates", cfg.replicates, "bootstrap replicates")->capture_default_str();
  sub.add_option("--seed", cfg.seed, "bootstrap seed")->capture_default_str();
}

fuzzyshrink::CenterRule parse_center_rule(const std::string& s) {
  if (s == "stein") return fuzzyshrink::CenterRule::Stein;
  if (s == "positive-stein") return fuzzyshrink::CenterRule::PositiveStein;
  if (s == "none") return fuzzyshrink::CenterRule::None;
  throw fc::UsageError("unknown center rule '" + s + "'");
}

fuzzyshrink::SpreadRule parse_spread_rule(const std::string& s) {
  if (s == "positive-stein") return fuzzyshrink::SpreadRule::PositiveStein;
  if (s == "none") return fuzzyshrink::SpreadRule::None;
  throw fc::UsageError("unknown spread rule '" + s + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shrinkage-improved fuzzy linear regression"};
  app.require_subcommand(1);
  app.set_version_flag("--version", fuzzyshrink::kToolVersion);

  fc::RunConfig cfg;
  std::string builtin, csv, estimator, metric = "dlr", output = "table";
  std::string center_rule = "stein", spread_rule = "positive-stein";
  bool no_intercept = false, no_timestamp = false;

  auto* fit = app.add_subcommand("fit", "fit a model and report its goodness of fit");
  auto* shrink = app.add_subcommand("shrink", "apply a given shrinkage constant");
  auto* sweep = app.add_subcommand("sweep", "search for the best shrinkage constant and its optimal boundary");
  auto* evaluate = app.add_subcommand("evaluate", "score a fixture model, a published column or csv yhat columns");
  auto* demo = app.add_subcommand("demo", "reproduce one of the four worked examples");

  for (auto* sub : {fit, shrink, sweep, evaluate}) {
    add_source(*sub, cfg, builtin, csv, estimator);
    add_common(*sub, cfg, metric, output, center_rule, spread_rule, no_intercept, no_timestamp);
  }
  add_common(*demo, cfg, metric, output, center_rule, spread_rule, no_intercept, no_timestamp);
  demo->add_option("number", cfg.demo, "example number 1-4")->required();
  demo->add_option("--resolution", cfg.resolution, "k grid step")->capture_default_str();
  shrink->add_option("--k", cfg.k, "shrinkage constant")->required();
  sweep->add_option("--k-max", cfg.k_max, "upper end of the k grid (default: largest squared component)");
  sweep->add_option("--resolution", cfg.resolution, "k grid step")->capture_default_str();
  // Accepted everywhere so that invalid combinations produce a usage error from validation.
  for (auto* sub : {fit, evaluate}) sub->add_option("--k", cfg.k, "not used by this command");
  for (auto* sub : {fit, shrink, evaluate}) {
    sub->add_option("--k-max", cfg.k_max, "not used by this command");
    sub->add_option("--resolution", cfg.resolution, "not used by this command");
  }
  sweep->add_option("--k", cfg.k, "not accepted by sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : fc::kUsage;
  }

  const bool json = output == "json";
  try {
    if (app.got_subcommand(fit)) cfg.command = fc::Command::Fit;
    if (app.got_subcommand(shrink)) cfg.command = fc::Command::Shrink;
    if (app.got_subcommand(sweep)) cfg.command = fc::Command::Sweep;
    if (app.got_subcommand(evaluate)) cfg.command = fc::Command::Evaluate;
    if (app.got_subcommand(demo)) cfg.command = fc::Command::Demo;
    if (!builtin.empty()) cfg.builtin = builtin;
    if (!csv.empty()) cfg.csv_path = csv;
    if (!estimator.empty()) cfg.estimator = fc::parse_estimator(estimator);
    cfg.output = fc::parse_output(output);
    cfg.metric = fuzzyshrink::parse_metric(metric);
    cfg.policy = {parse_center_rule(center_rule), parse_spread_rule(spread_rule), !no_intercept};
    cfg.timestamp = !no_timestamp;
  } catch (const std::exception& e) {
    if (json) {
      std::cerr << fc::detail::error_json("usage", e.what()).dump() << "\n";
    } else {
      std::cerr << "error[usage]: " << e.what() << "\n";
    }
    return fc::kUsage;
  }
  return fc::run(cfg, std::cout, std::cerr);
}
