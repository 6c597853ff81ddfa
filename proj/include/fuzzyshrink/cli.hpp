#ifndef FUZZYSHRINK_CLI_HPP
#define FUZZYSHRINK_CLI_HPP

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fuzzyshrink/datasets.hpp"
#include "fuzzyshrink/errors.hpp"
#include "fuzzyshrink/metrics.hpp"
#include "fuzzyshrink/regression.hpp"
#include "fuzzyshrink/report.hpp"
#include "fuzzyshrink/shrinkage.hpp"

namespace fuzzyshrink::cli {

enum class Command { Fit, Shrink, Sweep, Evaluate, Demo };
enum class Estimator { LeastSquares, LeastAbsolutes, Bootstrap, FuzzyInput };
enum class OutputFormat { Table, Json, Csv };

enum ExitCode : int { kOk = 0, kUsage = 2, kData = 3, kNumerical = 4 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::Fit;
  std::optional<std::string> builtin;
  std::optional<std::string> csv_path;
  std::optional<std::string> fixture;
  std::optional<Estimator> estimator;
  GofMetric metric = GofMetric::dlr();
  std::optional<double> k;
  std::optional<double> k_max;
  double resolution = kDefaultResolution;
  std::size_t replicates = kDefaultBootstrapReplicates;
  std::uint64_t seed = 42;
  OutputFormat output = OutputFormat::Table;
  unsigned threads = 1;
  int demo = 0;
  ShrinkagePolicy policy{};
  bool timestamp = true;
};

inline const char* to_string(Command c) {
  switch (c) {
    case Command::Fit: return "fit";
    case Command::Shrink: return "shrink";
    case Command::Sweep: return "sweep";
    case Command::Evaluate: return "evaluate";
    case Command::Demo: return "demo";
  }
  return "?";
}

inline const char* to_string(Estimator e) {
  switch (e) {
    case Estimator::LeastSquares: return "ls";
    case Estimator::LeastAbsolutes: return "lad";
    case Estimator::Bootstrap: return "bootstrap";
    case Estimator::FuzzyInput: return "fuzzy-input";
  }
  return "?";
}

inline const char* to_string(OutputFormat o) {
  switch (o) {
    case OutputFormat::Table: return "table";
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
  }
  return "?";
}

inline Estimator parse_estimator(std::string_view s) {
  if (s == "ls") return Estimator::LeastSquares;
  if (s == "lad") return Estimator::LeastAbsolutes;
  if (s == "bootstrap") return Estimator::Bootstrap;
  if (s == "fuzzy-input") return Estimator::FuzzyInput;
  throw UsageError("unknown estimator '" + std::string(s) + "' (expected ls, lad, bootstrap, fuzzy-input)");
}

inline OutputFormat parse_output(std::string_view s) {
  if (s == "table") return OutputFormat::Table;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw UsageError("unknown output format '" + std::string(s) + "' (expected table, json, csv)");
}

// ---------------------------------------------------------------------------
// Logging, controlled by FUZZYSHRINK_LOG = off|error|warn|info|debug (default warn).

enum class LogLevel { Off = 0, Error, Warn, Info, Debug };

inline LogLevel log_level() {
  static const LogLevel level = [] {
    const char* env = std::getenv("FUZZYSHRINK_LOG");
    const std::string v = env ? env : "";
    if (v == "off") return LogLevel::Off;
    if (v == "error") return LogLevel::Error;
    if (v == "info") return LogLevel::Info;
    if (v == "debug") return LogLevel::Debug;
    return LogLevel::Warn;
  }();
  return level;
}

inline void log(LogLevel level, const std::string& message) {
  static const char* names[] = {"", "error", "warn", "info", "debug"};
  if (level != LogLevel::Off && level <= log_level()) {
    std::clog << "[fuzzyshrink " << names[static_cast<int>(level)] << "] " << message << "\n";
  }
}

// ---------------------------------------------------------------------------

namespace detail {

inline void validate(const RunConfig& config) {
  const int sources = (config.builtin ? 1 : 0) + (config.csv_path ? 1 : 0);
  if (config.command == Command::Demo) {
    if (config.demo < 1 || config.demo > 4) throw UsageError("demo number must be 1, 2, 3 or 4");
    if (sources != 0) throw UsageError("demo takes no dataset source");
  } else if (sources != 1) {
    throw UsageError("exactly one of --builtin or --csv is required");
  }
  if (config.command == Command::Shrink && !config.k) throw UsageError("shrink requires --k");
  if (config.command == Command::Sweep && config.k) throw UsageError("sweep does not accept --k");
  if (config.k && !(*config.k > 0.0)) throw UsageError("--k must be positive");
  if (config.k_max && !(*config.k_max > 0.0)) throw UsageError("--k-max must be positive");
  if (!(config.resolution > 0.0)) throw UsageError("--resolution must be positive");
  if (config.replicates == 0) throw UsageError("--replicates must be at least 1");
  if (config.threads == 0) throw UsageError("--threads must be at least 1");
}

inline std::string timestamp_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(ParseError::Kind::Empty, 0, 0, "cannot open csv file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Source {
  Dataset data;
  std::optional<BuiltinDataset> builtin;
  std::vector<Tfn> csv_fitted;
  std::string source;
};

inline Source load_source(const RunConfig& config) {
  Source s;
  if (config.builtin) {
    s.builtin = load_builtin(parse_builtin_id(*config.builtin));
    s.data = s.builtin->data;
    s.source = "builtin:" + *config.builtin;
  } else {
    auto table = parse_csv_table(read_file(*config.csv_path));
    s.data = std::move(table.data);
    s.csv_fitted = std::move(table.fitted);
    s.source = "csv:" + *config.csv_path;
    if (dataset_name(s.data).empty()) {
      std::visit([&](auto& d) { d.name = *config.csv_path; }, s.data);
    }
  }
  return s;
}

inline Json config_echo(const RunConfig& config) {
  Json j;
  j["command"] = to_string(config.command);
  j["builtin"] = config.builtin ? Json(*config.builtin) : Json(nullptr);
  j["csv"] = config.csv_path ? Json(*config.csv_path) : Json(nullptr);
  j["fixture"] = config.fixture ? Json(*config.fixture) : Json(nullptr);
  j["estimator"] = config.estimator ? Json(to_string(*config.estimator)) : Json(nullptr);
  j["metric"] = config.metric.name();
  j["k"] = config.k ? Json(*config.k) : Json(nullptr);
  j["k_max"] = config.k_max ? Json(*config.k_max) : Json(nullptr);
  j["resolution"] = config.resolution;
  j["replicates"] = config.replicates;
  j["seed"] = config.seed;
  j["output"] = to_string(config.output);
  j["policy"] = to_json(config.policy);
  if (config.command == Command::Demo) j["demo"] = config.demo;
  return j;
}

inline Json new_report(const RunConfig& config, const Dataset& data, const std::string& source) {
  Json r;
  r["schema"] = kReportSchema;
  r["schema_version"] = kReportSchemaVersion;
  r["command"] = to_string(config.command);
  Json prov;
  prov["tool"] = kToolName;
  prov["version"] = kToolVersion;
  prov["dataset"] = Json{{"name", dataset_name(data)},
                         {"source", source},
                         {"rows", responses(data).size()},
                         {"fingerprint", dataset_fingerprint(data)}};
  prov["config"] = config_echo(config);
  prov["timestamp"] = config.timestamp ? Json(timestamp_now()) : Json(nullptr);
  r["provenance"] = std::move(prov);
  return r;
}

inline std::vector<GofMetric> report_metrics(const GofMetric& selected) {
  std::vector<GofMetric> out{GofMetric::dlr(), GofMetric::d2_half(), GofMetric::dh()};
  bool present = false;
  for (const auto& m : out) present = present || m == selected;
  if (!present) out.push_back(selected);
  return out;
}

inline Json metric_block(const std::vector<GofMetric>& metrics, std::span<const Tfn> y, std::span<const Tfn> fitted) {
  Json block;
  for (const auto& m : metrics) block[m.name()] = to_json(aggregate(m, y, fitted));
  return block;
}

inline std::vector<Tfn> predict_any(const AnyModel& model, const Dataset& data) {
  if (const auto* flr = std::get_if<FLRModel>(&model)) {
    const auto* crisp = std::get_if<CrispInputDataset>(&data);
    if (!crisp) throw DomainError("crisp-input model needs a crisp-input dataset");
    return predict_all(*flr, *crisp);
  }
  const auto* fz = std::get_if<FuzzyInputDataset>(&data);
  if (!fz) throw DomainError("fuzzy-input model needs a fuzzy-input dataset");
  return predict_all(std::get<FuzzyInputModel>(model), *fz);
}

inline AnyModel shrink_any(const AnyModel& model, double k, const ShrinkagePolicy& policy) {
  return std::visit([&](const auto& m) -> AnyModel { return shrink_model(m, k, policy); }, model);
}

inline ShrinkageReport optimize_any(const AnyModel& model, const Dataset& data, const GofMetric& metric,
                                    double k_max, double resolution, const SearchOptions& options) {
  if (const auto* flr = std::get_if<FLRModel>(&model)) {
    return optimize_k(*flr, std::get<CrispInputDataset>(data), metric, k_max, resolution, options);
  }
  return optimize_k(std::get<FuzzyInputModel>(model), std::get<FuzzyInputDataset>(data), metric, k_max, resolution,
                    options);
}

inline double k_max_any(const AnyModel& model, const ShrinkagePolicy& policy) {
  return std::visit([&](const auto& m) { return default_k_max(m, policy); }, model);
}

inline AnyModel fit_any(const RunConfig& config, const Dataset& data) {
  const bool fuzzy = std::holds_alternative<FuzzyInputDataset>(data);
  const Estimator est = config.estimator.value_or(fuzzy ? Estimator::FuzzyInput : Estimator::LeastSquares);
  if (fuzzy != (est == Estimator::FuzzyInput)) {
    throw UsageError(std::string("estimator '") + to_string(est) + "' does not match a " +
                     (fuzzy ? "fuzzy-input" : "crisp-input") + " dataset");
  }
  log(LogLevel::Info, std::string("fitting with estimator ") + to_string(est));
  switch (est) {
    case Estimator::LeastSquares:
      return fit_least_squares(std::get<CrispInputDataset>(data));
    case Estimator::LeastAbsolutes:
      return fit_least_absolutes(std::get<CrispInputDataset>(data));
    case Estimator::Bootstrap:
      return fit_bootstrap(std::get<CrispInputDataset>(data), config.replicates, config.seed, config.threads);
    case Estimator::FuzzyInput:
      return fit_fuzzy_input(std::get<FuzzyInputDataset>(data));
  }
  throw InternalError("unknown estimator");
}

// Resolves --fixture to either a model or a published fitted column.
struct FixtureChoice {
  std::optional<AnyModel> model;
  std::optional<std::vector<Tfn>> column;
  std::string label;
};

inline FixtureChoice resolve_fixture(const RunConfig& config, const Source& src) {
  FixtureChoice out;
  const std::string& name = *config.fixture;
  out.label = name;
  if (!src.builtin) throw UsageError("--fixture requires --builtin");
  auto ends_with = [&](std::string_view suffix) {
    return name.size() > suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  auto check_base = [&](std::string_view suffix) {
    const std::string base = name.substr(0, name.size() - suffix.size());
    if (!src.builtin->fixture(base)) throw UsageError("unknown fixture '" + name + "'");
  };
  if (ends_with("-published-fitted")) {
    check_base("-published-fitted");
    out.column = src.builtin->published_fitted;
  } else if (ends_with("-published-shrunk")) {
    check_base("-published-shrunk");
    out.column = src.builtin->published_shrunk;
  } else if (const auto* m = src.builtin->fixture(name)) {
    out.model = *m;
  } else {
    std::string known;
    for (const auto& f : src.builtin->fixture_models) known += (known.empty() ? "" : ", ") + f.name;
    throw UsageError("unknown fixture '" + name + "' for " + *config.builtin + " (known: " + known +
                     ", plus <name>-published-fitted / <name>-published-shrunk)");
  }
  return out;
}

inline AnyModel obtain_model(const RunConfig& config, const Source& src) {
  if (config.fixture) {
    auto f = resolve_fixture(config, src);
    if (!f.model) throw UsageError("fixture '" + *config.fixture + "' is a published column, not a model");
    return *f.model;
  }
  return fit_any(config, src.data);
}

// ---------------------------------------------------------------------------
// Commands

inline Json run_fit(const RunConfig& config, const Source& src, std::vector<Tfn>& csv_fitted) {
  Json r = new_report(config, src.data, src.source);
  const AnyModel model = obtain_model(config, src);
  const auto fitted = predict_any(model, src.data);
  const auto& y = responses(src.data);
  r["model"]["baseline"] = to_json(model);
  r["observed"] = to_json(y);
  r["fitted"]["baseline"] = to_json(fitted);
  r["metrics"]["baseline"] = metric_block(report_metrics(config.metric), y, fitted);
  csv_fitted = fitted;
  return r;
}

inline Json run_shrink(const RunConfig& config, const Source& src, std::vector<Tfn>& csv_fitted) {
  Json r = new_report(config, src.data, src.source);
  const AnyModel model = obtain_model(config, src);
  const AnyModel shrunk = shrink_any(model, *config.k, config.policy);
  const auto base_fit = predict_any(model, src.data);
  const auto shrunk_fit = predict_any(shrunk, src.data);
  const auto& y = responses(src.data);
  const auto metrics = report_metrics(config.metric);
  r["model"]["baseline"] = to_json(model);
  r["model"]["shrunk"] = to_json(shrunk);
  r["observed"] = to_json(y);
  r["fitted"]["baseline"] = to_json(base_fit);
  r["fitted"]["shrunk"] = to_json(shrunk_fit);
  r["metrics"]["baseline"] = metric_block(metrics, y, base_fit);
  r["metrics"]["shrunk"] = metric_block(metrics, y, shrunk_fit);
  r["shrinkage"] = Json{{"metric", config.metric.name()}, {"k", *config.k}, {"policy", to_json(config.policy)}};
  csv_fitted = shrunk_fit;
  return r;
}

inline double resolve_k_max(const RunConfig& config, const AnyModel& model) {
  if (config.k_max) return *config.k_max;
  const double k_max = k_max_any(model, config.policy);
  if (!(k_max > 0.0)) throw DomainError("model has no nonzero component to shrink");
  return k_max;
}

// Keeps the default grid below a million points for models with large components.
inline double resolve_resolution(const RunConfig& config, double k_max) {
  const double res = std::max(config.resolution, k_max / 1e6);
  if (res != config.resolution) {
    log(LogLevel::Warn, "coarsening k grid to resolution " + std::to_string(res) + " for k_max " + std::to_string(k_max));
  }
  return res;
}

inline Json run_sweep(const RunConfig& config, const Source& src, std::vector<Tfn>& csv_fitted) {
  Json r = new_report(config, src.data, src.source);
  const AnyModel model = obtain_model(config, src);
  const double k_max = resolve_k_max(config, model);
  const double resolution = config.k_max ? config.resolution : resolve_resolution(config, k_max);
  log(LogLevel::Info, "sweeping k over (0, " + std::to_string(k_max) + "]");
  const auto report = optimize_any(model, src.data, config.metric, k_max, resolution, {config.policy, config.threads});
  const AnyModel shrunk = shrink_any(model, report.k_star, config.policy);
  const auto base_fit = predict_any(model, src.data);
  const auto shrunk_fit = predict_any(shrunk, src.data);
  const auto& y = responses(src.data);
  const auto metrics = report_metrics(config.metric);
  r["model"]["baseline"] = to_json(model);
  r["model"]["shrunk"] = to_json(shrunk);
  r["observed"] = to_json(y);
  r["fitted"]["baseline"] = to_json(base_fit);
  r["fitted"]["shrunk"] = to_json(shrunk_fit);
  r["metrics"]["baseline"] = metric_block(metrics, y, base_fit);
  r["metrics"]["shrunk"] = metric_block(metrics, y, shrunk_fit);
  r["shrinkage"] = to_json(report);
  r["shrinkage"]["policy"] = to_json(config.policy);
  csv_fitted = shrunk_fit;
  return r;
}

inline Json run_evaluate(const RunConfig& config, const Source& src, std::vector<Tfn>& csv_fitted) {
  Json r = new_report(config, src.data, src.source);
  const auto& y = responses(src.data);
  std::vector<Tfn> fitted;
  if (config.fixture) {
    auto f = resolve_fixture(config, src);
    if (f.model) {
      r["model"]["baseline"] = to_json(*f.model);
      fitted = predict_any(*f.model, src.data);
      r["mode"] = "re-predicted from fixture model " + f.label;
    } else {
      fitted = *f.column;
      r["mode"] = "published column " + f.label;
    }
  } else if (!src.csv_fitted.empty()) {
    fitted = src.csv_fitted;
    r["mode"] = "yhat columns from csv";
  } else {
    const AnyModel model = fit_any(config, src.data);
    r["model"]["baseline"] = to_json(model);
    fitted = predict_any(model, src.data);
    r["mode"] = "re-predicted from fitted model";
  }
  r["observed"] = to_json(y);
  r["fitted"]["baseline"] = to_json(fitted);
  r["metrics"]["baseline"] = metric_block(report_metrics(config.metric), y, fitted);
  r["evaluation"] = Json{{"metric", config.metric.name()}, {"value", aggregate(config.metric, y, fitted).aggregate}};
  csv_fitted = fitted;
  return r;
}

// ---------------------------------------------------------------------------
// Demos: end-to-end reproduction of the four worked examples.

struct Comparison {
  Json rows = Json::array();
  void add(const std::string& label, double computed, std::optional<double> published, const std::string& mode) {
    rows.push_back(Json{{"label", label},
                        {"computed", computed},
                        {"published", published ? Json(*published) : Json(nullptr)},
                        {"mode", mode}});
  }
};

inline void add_coefficients(Comparison& cmp, const std::string& prefix, const FLRModel& computed,
                             const FLRModel& published) {
  for (std::size_t j = 0; j < computed.coefficients.size(); ++j) {
    const std::string name = j == 0 ? "intercept" : "x" + std::to_string(j);
    cmp.add(prefix + " " + name + " center", computed.coefficients[j].m(), published.coefficients[j].m(), "coefficient");
    cmp.add(prefix + " " + name + " left spread", computed.coefficients[j].l(), published.coefficients[j].l(),
            "coefficient");
  }
}

inline Json run_demo(const RunConfig& config) {
  const BuiltinId id = static_cast<BuiltinId>(config.demo - 1);
  const BuiltinDataset b = load_builtin(id);
  Json r = new_report(config, b.data, "builtin:" + to_string(id));
  r["demo"] = config.demo;
  r["notes"] = b.notes.empty() ? Json("") : Json(b.notes);
  const auto& y = responses(b.data);
  Comparison cmp;
  const SearchOptions search{config.policy, config.threads};

  switch (config.demo) {
    case 1: {
      const auto& data = std::get<CrispInputDataset>(b.data);
      const auto& m13a = std::get<FLRModel>(*b.fixture("13a"));
      const auto& m13b = std::get<FLRModel>(*b.fixture("13b"));
      const double k = 0.0044;
      const FLRModel shrunk = shrink_model(m13a, k, config.policy);
      r["mode"] = "published columns for the metric table (re-prediction with 13a does not match them); "
                  "re-predicted for the k search";
      r["model"]["13a"] = to_json(m13a);
      r["model"]["shrunk k=0.0044"] = to_json(shrunk);
      r["observed"] = to_json(y);
      r["fitted"]["published fitted"] = to_json(b.published_fitted);
      r["fitted"]["published shrunk"] = to_json(b.published_shrunk);
      r["metrics"]["published fitted"] = metric_block(report_metrics(config.metric), y, b.published_fitted);
      r["metrics"]["published shrunk"] = metric_block(report_metrics(config.metric), y, b.published_shrunk);
      add_coefficients(cmp, "shrink(13a, 0.0044)", shrunk, m13b);
      cmp.add("D_LR published fitted column", aggregate(GofMetric::dlr(), y, b.published_fitted).aggregate, 20.1521,
              "published columns");
      cmp.add("D_LR published shrunk column", aggregate(GofMetric::dlr(), y, b.published_shrunk).aggregate, 19.4929,
              "published columns");
      const auto rep = optimize_k(m13a, data, GofMetric::dlr(), 0.2, config.resolution, search);
      r["shrinkage"] = to_json(rep);
      cmp.add("k_star (D_LR)", rep.k_star, 0.0044, "re-predicted");
      cmp.add("optimal boundary sup (D_LR)", rep.boundary_sup, 0.0308, "re-predicted");
      break;
    }
    case 2: {
      const auto& data = std::get<CrispInputDataset>(b.data);
      const auto& m14a = std::get<FLRModel>(*b.fixture("14a"));
      const auto& m14b = std::get<FLRModel>(*b.fixture("14b"));
      const auto rep = optimize_k(m14a, data, GofMetric::dlr(), 1.0, config.resolution, search);
      const FLRModel fixed_k = shrink_model(m14a, 0.0972, config.policy);
      const auto base_fit = predict_all(m14a, data);
      const auto shrunk_fit = predict_all(fixed_k, data);
      r["mode"] = "re-predicted from 14a";
      r["model"]["14a"] = to_json(m14a);
      r["model"]["shrunk k=0.0972"] = to_json(fixed_k);
      r["observed"] = to_json(y);
      r["fitted"]["14a"] = to_json(base_fit);
      r["fitted"]["shrunk k=0.0972"] = to_json(shrunk_fit);
      r["metrics"]["14a"] = metric_block(report_metrics(config.metric), y, base_fit);
      r["metrics"]["shrunk k=0.0972"] = metric_block(report_metrics(config.metric), y, shrunk_fit);
      r["shrinkage"] = to_json(rep);
      add_coefficients(cmp, "shrink(14a, 0.0972)", fixed_k, m14b);
      cmp.add("D_LR baseline", rep.metric_baseline, 6.06747, "re-predicted");
      cmp.add("D_LR shrunk (k=0.0972)", aggregate(GofMetric::dlr(), y, shrunk_fit).aggregate, 5.85522, "re-predicted");
      cmp.add("k_star (D_LR)", rep.k_star, 0.0972, "re-predicted");
      cmp.add("D_LR at k_star", rep.metric_shrunk, 5.85522, "re-predicted");
      cmp.add("optimal boundary sup (D_LR)", rep.boundary_sup, 0.2138, "re-predicted");
      break;
    }
    case 3: {
      const auto& data = std::get<CrispInputDataset>(b.data);
      const auto& m15a = std::get<FLRModel>(*b.fixture("15a"));
      r["mode"] = "published columns for the baseline metrics; re-predicted from 15a for the k searches";
      r["model"]["15a"] = to_json(m15a);
      r["observed"] = to_json(y);
      r["fitted"]["published fitted"] = to_json(b.published_fitted);
      r["fitted"]["15a re-predicted"] = to_json(predict_all(m15a, data));
      r["metrics"]["published fitted"] = metric_block(report_metrics(config.metric), y, b.published_fitted);
      r["metrics"]["published shrunk"] = metric_block(report_metrics(config.metric), y, b.published_shrunk);
      struct Row {
        GofMetric metric;
        double base, shrunk, k, sup;
      };
      const Row rows[] = {{GofMetric::dlr(), 89.9129, 88.0382, 1.183, 1.759},
                          {GofMetric::d2_half(), 68.3101, 65.0767, 0.965, 1.929},
                          {GofMetric::dh(), 157.9474, 146.2433, 1.524, 4.335}};
      Json sweeps = Json::array();
      for (const auto& row : rows) {
        const std::string n = row.metric.name();
        cmp.add(n + " published fitted column", aggregate(row.metric, y, b.published_fitted).aggregate, row.base,
                "published columns");
        cmp.add(n + " published shrunk column", aggregate(row.metric, y, b.published_shrunk).aggregate, row.shrunk,
                "published columns");
        const auto rep = optimize_k(m15a, data, row.metric, 10.0, config.resolution * 10.0, search);
        sweeps.push_back(to_json(rep));
        cmp.add(n + " k_star", rep.k_star, row.k, "re-predicted");
        cmp.add(n + " optimal boundary sup", rep.boundary_sup, row.sup, "re-predicted");
      }
      r["sweeps"] = std::move(sweeps);
      break;
    }
    case 4: {
      const auto& data = std::get<FuzzyInputDataset>(b.data);
      const auto& m17a = std::get<FuzzyInputModel>(*b.fixture("17a"));
      const double k = 0.041;
      const FuzzyInputModel shrunk = shrink_model(m17a, k, config.policy);
      const auto base_fit = predict_all(m17a, data);
      const auto shrunk_fit = predict_all(shrunk, data);
      r["mode"] = "re-predicted from 17a; published aggregate metrics are not recomputable (response column "
                  "duplicates the input column)";
      r["model"]["17a"] = to_json(m17a);
      r["model"]["shrunk k=0.041"] = to_json(shrunk);
      r["observed"] = to_json(y);
      r["fitted"]["17a"] = to_json(base_fit);
      r["fitted"]["published fitted"] = to_json(b.published_fitted);
      r["fitted"]["shrunk k=0.041"] = to_json(shrunk_fit);
      r["fitted"]["published shrunk"] = to_json(b.published_shrunk);
      double max_base = 0.0, max_shrunk = 0.0;
      for (std::size_t i = 0; i < y.size(); ++i) {
        max_base = std::max({max_base, std::abs(base_fit[i].m() - b.published_fitted[i].m()),
                             std::abs(base_fit[i].l() - b.published_fitted[i].l())});
        max_shrunk = std::max({max_shrunk, std::abs(shrunk_fit[i].m() - b.published_shrunk[i].m()),
                               std::abs(shrunk_fit[i].l() - b.published_shrunk[i].l())});
      }
      cmp.add("max |17a prediction - published fitted|", max_base, std::nullopt, "re-predicted");
      cmp.add("max |shrink(17a,0.041) - published shrunk|", max_shrunk, std::nullopt, "re-predicted");
      cmp.add("D_LR 17a vs response column", aggregate(GofMetric::dlr(), y, base_fit).aggregate, 6.9350,
              "not comparable");
      cmp.add("D_2,1/2 17a vs response column", aggregate(GofMetric::d2_half(), y, base_fit).aggregate, 5.6933,
              "not comparable");
      cmp.add("D_H 17a vs response column", aggregate(GofMetric::dh(), y, base_fit).aggregate, 7.6550,
              "not comparable");
      break;
    }
    default:
      throw UsageError("demo number must be 1, 2, 3 or 4");
  }
  r["comparison"] = std::move(cmp.rows);
  return r;
}

inline Json error_json(const char* kind, const std::string& message, std::size_t row = 0, std::size_t column = 0) {
  Json e{{"kind", kind}, {"message", message}};
  if (row || column) {
    e["row"] = row;
    e["column"] = column;
  }
  return Json{{"error", std::move(e)}};
}

}  // namespace detail

/// Executes one command. The report goes to `out`; structured errors go to `err`.
/// Returns 0 on success, 2 for usage errors, 3 for data/parse errors, 4 for numerical failures.
inline int run(const RunConfig& config, std::ostream& out, std::ostream& err, Json* report_out = nullptr) {
  auto fail = [&](int code, const char* kind, const std::string& message, std::size_t row = 0, std::size_t col = 0) {
    if (config.output == OutputFormat::Json) {
      err << detail::error_json(kind, message, row, col).dump() << "\n";
    } else {
      err << "error[" << kind << "]: " << message << "\n";
    }
    return code;
  };
  try {
    detail::validate(config);
    Json report;
    std::vector<Tfn> csv_fitted;
    std::optional<Dataset> csv_data;
    if (config.command == Command::Demo) {
      report = detail::run_demo(config);
      const auto b = load_builtin(static_cast<BuiltinId>(config.demo - 1));
      csv_data = b.data;
      csv_fitted = b.published_fitted;
    } else {
      const auto src = detail::load_source(config);
      csv_data = src.data;
      switch (config.command) {
        case Command::Fit: report = detail::run_fit(config, src, csv_fitted); break;
        case Command::Shrink: report = detail::run_shrink(config, src, csv_fitted); break;
        case Command::Sweep: report = detail::run_sweep(config, src, csv_fitted); break;
        case Command::Evaluate: report = detail::run_evaluate(config, src, csv_fitted); break;
        case Command::Demo: break;
      }
    }
    switch (config.output) {
      case OutputFormat::Json: out << report.dump(2) << "\n"; break;
      case OutputFormat::Table: render_table(out, report); break;
      case OutputFormat::Csv: out << write_csv(*csv_data, csv_fitted); break;
    }
    if (report_out) *report_out = std::move(report);
    return kOk;
  } catch (const UsageError& e) {
    return fail(kUsage, "usage", e.what());
  } catch (const ParseError& e) {
    return fail(kData, "parse", e.what(), e.row(), e.column());
  } catch (const DomainError& e) {
    return fail(kUsage, "domain", e.what());
  } catch (const SingularDesignError& e) {
    return fail(kNumerical, "singular-design", e.what());
  } catch (const DegenerateDataError& e) {
    return fail(kNumerical, "degenerate-data", e.what());
  } catch (const InternalError& e) {
    return fail(kNumerical, "internal", e.what());
  } catch (const std::exception& e) {
    return fail(kNumerical, "failure", e.what());
  }
}

}  // namespace fuzzyshrink::cli

#endif  // FUZZYSHRINK_CLI_HPP
