#ifndef FUZZYSHRINK_REPORT_HPP
#define FUZZYSHRINK_REPORT_HPP

#include <cstdio>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fuzzyshrink/datasets.hpp"
#include "fuzzyshrink/fuzzy_number.hpp"
#include "fuzzyshrink/metrics.hpp"
#include "fuzzyshrink/regression.hpp"
#include "fuzzyshrink/shrinkage.hpp"

namespace fuzzyshrink {

inline constexpr const char* kToolName = "fuzzyshrink";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportSchema = "fuzzyshrink.report";
inline constexpr int kReportSchemaVersion = 1;

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Value -> JSON

inline Json to_json(const Tfn& v) { return Json{{"l", v.l()}, {"m", v.m()}, {"r", v.r()}}; }

inline Json to_json(std::span<const Tfn> values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

inline Json to_json(const FLRModel& model) {
  Json coeffs = Json::array();
  for (const auto& c : model.coefficients) coeffs.push_back(to_json(c));
  return Json{{"type", "crisp-input"}, {"coefficients", std::move(coeffs)}};
}

inline Json to_json(const FuzzyInputModel& model) {
  return Json{{"type", "fuzzy-input"}, {"center_coeffs", model.center_coeffs}, {"spread_coeffs", model.spread_coeffs}};
}

inline Json to_json(const AnyModel& model) {
  return std::visit([](const auto& m) { return to_json(m); }, model);
}

inline const char* to_string(Aggregation rule) {
  return rule == Aggregation::Sum ? "sum" : "mean_of_squares";
}

inline Json to_json(const GofValue& value) {
  return Json{{"aggregate", value.aggregate}, {"rule", to_string(value.rule)}, {"per_observation", value.per_observation}};
}

inline const char* to_string(CenterRule rule) {
  switch (rule) {
    case CenterRule::Stein: return "stein";
    case CenterRule::PositiveStein: return "positive-stein";
    case CenterRule::None: return "none";
  }
  return "?";
}

inline const char* to_string(SpreadRule rule) {
  return rule == SpreadRule::PositiveStein ? "positive-stein" : "none";
}

inline Json to_json(const ShrinkagePolicy& policy) {
  return Json{{"center_rule", to_string(policy.center)},
              {"spread_rule", to_string(policy.spread)},
              {"include_intercept", policy.include_intercept}};
}

inline Json to_json(const ShrinkageReport& report) {
  return Json{{"metric", report.metric.name()},
              {"k_star", report.k_star},
              {"metric_baseline", report.metric_baseline},
              {"metric_shrunk", report.metric_shrunk},
              {"boundary_sup", report.boundary_sup},
              {"improved", report.improved},
              {"k_max", report.k_max},
              {"grid_resolution", report.grid_resolution}};
}

inline FLRModel flr_model_from_json(const Json& j) {
  FLRModel model;
  for (const auto& c : j.at("coefficients")) {
    model.coefficients.emplace_back(c.at("l").get<double>(), c.at("m").get<double>(), c.at("r").get<double>());
  }
  return model;
}

// ---------------------------------------------------------------------------
// Table rendering. Everything printed here is read back out of the report.

namespace detail {

inline std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

inline std::string tfn_cell(const Json& v, int digits = 4) {
  const double l = v.at("l").get<double>();
  const double m = v.at("m").get<double>();
  const double r = v.at("r").get<double>();
  if (l == r) return "(" + fixed(m, digits) + ", " + fixed(l, digits) + ")_T";
  return "(" + fixed(l, digits) + ", " + fixed(m, digits) + ", " + fixed(r, digits) + ")_T";
}

inline std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

inline void render_model(std::ostream& os, const std::string& title, const Json& model) {
  os << title << ":\n";
  if (model.at("type") == "crisp-input") {
    std::size_t j = 0;
    for (const auto& c : model.at("coefficients")) {
      os << "  " << pad(j == 0 ? "intercept" : "x" + std::to_string(j), 10) << tfn_cell(c, 6) << "\n";
      ++j;
    }
  } else {
    const auto& a = model.at("center_coeffs");
    const auto& c = model.at("spread_coeffs");
    for (std::size_t j = 0; j < a.size(); ++j) {
      os << "  " << pad(j == 0 ? "intercept" : "x" + std::to_string(j), 10) << "center " << fixed(a[j].get<double>(), 6)
         << "  spread " << fixed(c[j].get<double>(), 6) << "\n";
    }
  }
}

}  // namespace detail

inline void render_table(std::ostream& os, const Json& report) {
  using detail::fixed;
  using detail::pad;
  const auto& prov = report.at("provenance");
  os << "command: " << report.at("command").get<std::string>();
  if (report.contains("demo")) os << " " << report.at("demo").get<int>();
  os << "\n";
  const auto& ds = prov.at("dataset");
  os << "dataset: " << ds.at("name").get<std::string>() << " (" << ds.at("source").get<std::string>()
     << ", n=" << ds.at("rows").get<std::size_t>() << ")\n";
  if (report.contains("mode")) os << "mode: " << report.at("mode").get<std::string>() << "\n";
  if (report.contains("notes")) os << "notes: " << report.at("notes").get<std::string>() << "\n";

  if (report.contains("model")) {
    for (const auto& [key, model] : report.at("model").items()) {
      os << "\n";
      detail::render_model(os, "model (" + key + ")", model);
    }
  }

  if (report.contains("fitted")) {
    const auto& fitted = report.at("fitted");
    const auto& observed = report.at("observed");
    os << "\n" << pad("obs", 5) << pad("observed", 24);
    for (const auto& [key, _] : fitted.items()) os << pad(key, 24);
    os << "\n";
    for (std::size_t i = 0; i < observed.size(); ++i) {
      os << pad(std::to_string(i + 1), 5) << pad(detail::tfn_cell(observed[i]), 24);
      for (const auto& [key, col] : fitted.items()) os << pad(detail::tfn_cell(col[i]), 24);
      os << "\n";
    }
  }

  if (report.contains("metrics")) {
    os << "\n" << pad("metric", 12);
    for (const auto& [key, _] : report.at("metrics").items()) os << pad(key, 16);
    os << "\n";
    const auto& first = report.at("metrics").begin().value();
    for (const auto& [name, _] : first.items()) {
      os << pad(name, 12);
      for (const auto& [key, block] : report.at("metrics").items()) {
        os << pad(block.contains(name) ? fixed(block.at(name).at("aggregate").get<double>(), 6) : "-", 16);
      }
      os << "\n";
    }
  }

  if (report.contains("shrinkage")) {
    const auto& s = report.at("shrinkage");
    os << "\nshrinkage (" << s.at("metric").get<std::string>() << "):\n";
    if (s.contains("k")) os << "  k              " << fixed(s.at("k").get<double>(), 6) << "\n";
    if (s.contains("k_star")) {
      os << "  k_star         " << fixed(s.at("k_star").get<double>(), 6) << "\n"
         << "  baseline       " << fixed(s.at("metric_baseline").get<double>(), 6) << "\n"
         << "  shrunk         " << fixed(s.at("metric_shrunk").get<double>(), 6) << "\n"
         << "  boundary       (0, " << fixed(s.at("boundary_sup").get<double>(), 6) << "]"
         << (s.at("improved").get<bool>() ? "" : "  (no improving k)") << "\n";
    }
  }

  if (report.contains("comparison")) {
    os << "\n" << pad("quantity", 46) << pad("computed", 14) << pad("published", 14) << "mode\n";
    for (const auto& row : report.at("comparison")) {
      os << pad(row.at("label").get<std::string>(), 46) << pad(fixed(row.at("computed").get<double>(), 6), 14)
         << pad(row.at("published").is_null() ? "-" : fixed(row.at("published").get<double>(), 6), 14)
         << row.at("mode").get<std::string>() << "\n";
    }
  }
}

}  // namespace fuzzyshrink

#endif  // FUZZYSHRINK_REPORT_HPP
