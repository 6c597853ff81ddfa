#ifndef FUZZYSHRINK_DATASETS_HPP
#define FUZZYSHRINK_DATASETS_HPP

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "fuzzyshrink/errors.hpp"
#include "fuzzyshrink/fuzzy_number.hpp"
#include "fuzzyshrink/metrics.hpp"
#include "fuzzyshrink/regression.hpp"

namespace fuzzyshrink {

using Dataset = std::variant<CrispInputDataset, FuzzyInputDataset>;
using AnyModel = std::variant<FLRModel, FuzzyInputModel>;

inline const std::vector<Tfn>& responses(const Dataset& d) {
  return std::visit([](const auto& v) -> const std::vector<Tfn>& { return v.y; }, d);
}

inline const std::string& dataset_name(const Dataset& d) {
  return std::visit([](const auto& v) -> const std::string& { return v.name; }, d);
}

/// Symmetric fuzzy responses with spread = fraction * |center|.
inline std::vector<Tfn> spreads_from_centers(std::span<const double> centers, double fraction = 0.15) {
  if (!(fraction >= 0.0)) throw DomainError("spread fraction must be nonnegative");
  std::vector<Tfn> out;
  out.reserve(centers.size());
  for (double c : centers) out.push_back(Tfn::symmetric(c, fraction * std::abs(c)));
  return out;
}

// ---------------------------------------------------------------------------
// Built-in datasets

enum class BuiltinId { Dataset1, Dataset2, Dataset3, Dataset4 };

struct NamedModel {
  std::string name;
  AnyModel model;
};

struct BuiltinDataset {
  BuiltinId id = BuiltinId::Dataset1;
  Dataset data;
  std::vector<Tfn> published_fitted;
  std::vector<Tfn> published_shrunk;
  std::vector<NamedModel> fixture_models;
  std::string notes;

  const AnyModel* fixture(std::string_view name) const {
    for (const auto& f : fixture_models) {
      if (f.name == name) return &f.model;
    }
    return nullptr;
  }
};

inline std::string to_string(BuiltinId id) {
  switch (id) {
    case BuiltinId::Dataset1:
      return "dataset1";
    case BuiltinId::Dataset2:
      return "dataset2";
    case BuiltinId::Dataset3:
      return "dataset3";
    case BuiltinId::Dataset4:
      return "dataset4";
  }
  return "?";
}

inline BuiltinId parse_builtin_id(std::string_view text) {
  for (auto id : {BuiltinId::Dataset1, BuiltinId::Dataset2, BuiltinId::Dataset3, BuiltinId::Dataset4}) {
    if (text == to_string(id)) return id;
  }
  throw DomainError("unknown builtin dataset '" + std::string(text) + "' (expected dataset1..dataset4)");
}

namespace detail {

inline Tfn sym(double m, double s) { return Tfn::symmetric(m, s); }

inline BuiltinDataset make_dataset1() {
  // Cognitive response time of a nuclear power plant control room crew.
  struct Row {
    double x1, x2, x3;
    Tfn y, fitted, shrunk;
  };
  const Row rows[] = {
      {2.00, 0.00, 15.25, sym(5.83, 3.56), sym(6.97, 1.78), sym(6.96, 0.94)},
      {0.00, 5.00, 14.13, sym(0.85, 0.52), sym(0.85, 2.29), sym(0.83, 1.45)},
      {1.13, 1.50, 14.13, sym(13.93, 8.50), sym(4.05, 1.80), sym(4.04, 1.00)},
      {2.00, 1.25, 13.63, sym(4.00, 2.44), sym(3.35, 1.92), sym(3.35, 1.14)},
      {2.19, 3.75, 14.75, sym(1.58, 0.96), sym(2.46, 2.61), sym(2.47, 1.72)},
      {0.25, 3.50, 13.75, sym(1.58, 0.96), sym(1.72, 1.99), sym(1.70, 1.19)},
      {0.75, 5.25, 15.25, sym(8.18, 4.99), sym(2.06, 2.63), sym(2.05, 1.71)},
      {4.25, 2.00, 13.50, sym(1.85, 1.13), sym(1.85, 2.64), sym(1.89, 1.81)},
  };
  BuiltinDataset b;
  b.id = BuiltinId::Dataset1;
  CrispInputDataset d;
  d.name = "dataset1";
  d.symmetric = true;
  d.x.resize(std::size(rows), 3);
  for (std::size_t i = 0; i < std::size(rows); ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    d.x(r, 0) = rows[i].x1;
    d.x(r, 1) = rows[i].x2;
    d.x(r, 2) = rows[i].x3;
    d.y.push_back(rows[i].y);
    b.published_fitted.push_back(rows[i].fitted);
    b.published_shrunk.push_back(rows[i].shrunk);
  }
  b.data = std::move(d);
  b.fixture_models = {
      {"13a", FLRModel{{sym(-14.8998, 0.2500), sym(-0.2505, 0.2500), sym(-0.9558, 0.2216), sym(1.4670, 0.0837)}}},
      {"13b", FLRModel{{sym(-14.8995, 0.2324), sym(-0.2329, 0.2324), sym(-0.99137, 0.2017), sym(1.4640, 0.0310)}}},
  };
  b.notes =
      "Published fitted column was produced with a different fuzzy product than scalar_mul; "
      "re-predicting with 13a does not reproduce it (row 2 center 1.05 vs 0.85). "
      "13b x2 center -0.99137 is a transcription slip; shrinking 13a at k=0.0044 gives -0.9512.";
  return b;
}

inline BuiltinDataset make_dataset2() {
  BuiltinDataset b;
  b.id = BuiltinId::Dataset2;
  CrispInputDataset d;
  d.name = "dataset2";
  d.symmetric = true;
  d.x.resize(5, 1);
  d.x << 1, 2, 3, 4, 5;
  d.y = {sym(8.00, 1.80), sym(6.40, 2.20), sym(9.50, 2.60), sym(13.50, 2.60), sym(13.00, 2.40)};
  b.published_fitted = {sym(6.72, 2.00), sym(8.41, 2.16), sym(10.09, 2.32), sym(11.78, 2.47), sym(13.47, 2.63)};
  b.published_shrunk = {sym(6.65, 1.79), sym(8.27, 1.79), sym(9.90, 1.79), sym(11.53, 1.79), sym(13.16, 1.79)};
  b.data = std::move(d);
  b.fixture_models = {
      {"14a", FLRModel{{sym(5.0365, 1.8469), sym(1.6862, 0.1565)}}},
      {"14b", FLRModel{{sym(5.0172, 1.7943), sym(1.6285, 0.0)}}},
  };
  return b;
}

inline BuiltinDataset make_dataset3() {
  // Cheese tasting scores; spreads are 15% of the centers.
  struct Row {
    double acetic, h2s, lactic;
    Tfn y, fitted, shrunk;
  };
  const Row rows[] = {
      {4.543, 3.135, 0.86, sym(12.30, 1.845), sym(6.89, 1.243), sym(7.49, 1.390)},
      {5.159, 5.043, 1.53, sym(20.90, 3.135), sym(22.34, 2.059), sym(23.32, 2.304)},
      {5.366, 5.438, 1.57, sym(39.00, 5.850), sym(27.74, 2.188), sym(28.83, 2.447)},
      {5.759, 7.496, 1.81, sym(47.90, 7.185), sym(34.62, 2.874), sym(36.30, 3.206)},
      {4.663, 3.807, 0.99, sym(5.60, 0.840), sym(9.02, 1.488), sym(9.80, 1.662)},
      {5.697, 7.601, 1.09, sym(25.90, 3.885), sym(30.40, 2.616), sym(32.36, 2.900)},
      {5.892, 8.726, 1.29, sym(37.30, 5.595), sym(33.73, 3.018), sym(35.99, 3.347)},
      {6.078, 7.966, 1.78, sym(21.90, 3.285), sym(43.09, 2.997), sym(44.92, 3.340)},
      {4.898, 3.85, 1.29, sym(18.10, 2.715), sym(17.04, 1.621), sym(17.72, 1.817)},
      {5.242, 4.176, 1.58, sym(21.00, 3.150), sym(27.59, 1.830), sym(28.26, 2.056)},
      {5.74, 6.142, 1.68, sym(34.90, 5.235), sym(37.62, 2.434), sym(38.90, 2.720)},
      {6.446, 7.908, 1.9, sym(57.20, 8.580), sym(55.04, 3.028), sym(56.80, 3.378)},
      {4.477, 2.996, 1.06, sym(0.70, 0.105), sym(5.79, 1.279), sym(6.284, 1.440)},
      {5.236, 4.942, 1.3, sym(25.90, 3.885), sym(24.39, 1.937), sym(25.42, 2.164)},
      {6.151, 6.752, 1.52, sym(54.90, 8.235), sym(48.19, 2.545), sym(49.71, 2.836)},
  };
  BuiltinDataset b;
  b.id = BuiltinId::Dataset3;
  CrispInputDataset d;
  d.name = "dataset3";
  d.symmetric = true;
  d.x.resize(std::size(rows), 3);
  for (std::size_t i = 0; i < std::size(rows); ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    d.x(r, 0) = rows[i].acetic;
    d.x(r, 1) = rows[i].h2s;
    d.x(r, 2) = rows[i].lactic;
    d.y.push_back(rows[i].y);
    b.published_fitted.push_back(rows[i].fitted);
    b.published_shrunk.push_back(rows[i].shrunk);
  }
  b.data = std::move(d);
  b.fixture_models = {
      {"15a", FLRModel{{Tfn(0, -127.6929, 0), Tfn(0, 31.1153, 0), Tfn(0.57328, -2.9192, 0), Tfn(0.8013, 2.7644, 0)}}},
      {"15b", FLRModel{{Tfn(0, -127.6854, 0), Tfn(0, 31.0843, 0), Tfn(0.6276, -2.5886, 0), Tfn(0.9438, 2.7644, 0)}}},
  };
  b.notes =
      "15a centers equal ordinary least squares on this data. The published fitted spreads are half "
      "the left spread 15a produces. 15b is not a single-k shrinkage of 15a.";
  return b;
}

inline BuiltinDataset make_dataset4() {
  const double xm[] = {2.00, 3.50, 5.50, 7.00, 8.50, 10.50, 11.00, 12.50};
  const double xs[] = {0.50, 0.50, 1.00, 0.50, 0.50, 1.00, 0.50, 0.50};
  const double fm[] = {4.68, 5.51, 6.61, 7.43, 8.26, 9.36, 9.63, 10.46};
  const double fs[] = {0.50, 0.50, 1.00, 0.50, 0.50, 1.00, 0.50, 0.50};
  const double sm[] = {4.52, 5.23, 6.18, 6.90, 7.61, 8.56, 8.80, 9.51};
  const double ss[] = {0.48, 0.48, 0.96, 0.48, 0.48, 0.96, 0.48, 0.48};
  BuiltinDataset b;
  b.id = BuiltinId::Dataset4;
  FuzzyInputDataset d;
  d.name = "dataset4";
  for (std::size_t i = 0; i < std::size(xm); ++i) {
    d.x.push_back({sym(xm[i], xs[i])});
    // The published response column repeats the input column; kept verbatim.
    d.y.push_back(sym(xm[i], xs[i]));
    b.published_fitted.push_back(sym(fm[i], fs[i]));
    b.published_shrunk.push_back(sym(sm[i], ss[i]));
  }
  b.data = std::move(d);
  b.fixture_models = {
      {"17a", FuzzyInputModel{{3.58, 0.55}, {0.00, 1.00}}},
      {"17b", FuzzyInputModel{{3.57, 0.48}, {0.00, 0.96}}},
  };
  b.notes =
      "anomaly: the published response column duplicates the input column, so the true responses are "
      "unknown and the published aggregate metrics cannot be recomputed.";
  return b;
}

}  // namespace detail

inline BuiltinDataset load_builtin(BuiltinId id) {
  switch (id) {
    case BuiltinId::Dataset1:
      return detail::make_dataset1();
    case BuiltinId::Dataset2:
      return detail::make_dataset2();
    case BuiltinId::Dataset3:
      return detail::make_dataset3();
    case BuiltinId::Dataset4:
      return detail::make_dataset4();
  }
  throw DomainError("unknown builtin dataset");
}

// ---------------------------------------------------------------------------
// CSV
//
// Columns are grouped by name: a plain name ("x1") is a crisp input, "<v>_l,<v>_m,<v>_r"
// a fuzzy triple and "<v>_m,<v>_s" a symmetric pair. The group "y" is the response and
// the optional group "yhat" holds fitted values. Lines starting with '#' are comments;
// "# name: <text>" sets the dataset name.

struct CsvTable {
  Dataset data;
  std::vector<Tfn> fitted;  // empty when the file has no yhat group
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

struct ColumnGroup {
  std::string name;
  int crisp = -1, l = -1, m = -1, r = -1, s = -1;

  bool is_crisp() const { return crisp >= 0; }
};

inline std::string format17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

inline CsvTable parse_csv_table(std::string_view text) {
  using detail::ColumnGroup;
  std::string name;
  std::vector<std::string_view> header;
  std::vector<std::vector<std::string_view>> rows;
  bool have_header = false;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    const auto line = detail::trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      auto body = detail::trim(line.substr(1));
      if (body.substr(0, 5) == "name:") name = std::string(detail::trim(body.substr(5)));
      continue;
    }
    if (!have_header) {
      header = detail::split_commas(line);
      have_header = true;
    } else {
      rows.push_back(detail::split_commas(line));
    }
  }
  if (!have_header) throw ParseError(ParseError::Kind::Empty, 0, 0, "csv has no header row");

  // Group columns by variable name, keeping first-appearance order.
  std::vector<ColumnGroup> groups;
  auto group_for = [&](const std::string& g) -> ColumnGroup& {
    for (auto& existing : groups) {
      if (existing.name == g) return existing;
    }
    groups.push_back({g});
    return groups.back();
  };
  for (std::size_t c = 0; c < header.size(); ++c) {
    const std::string col(header[c]);
    if (col.empty()) throw ParseError(ParseError::Kind::BadHeader, 0, c + 1, "empty column name in header");
    const auto under = col.rfind('_');
    int* slot = nullptr;
    std::string base = col;
    if (under != std::string::npos && under + 2 == col.size() && under > 0) {
      base = col.substr(0, under);
      auto& g = group_for(base);
      switch (col.back()) {
        case 'l': slot = &g.l; break;
        case 'm': slot = &g.m; break;
        case 'r': slot = &g.r; break;
        case 's': slot = &g.s; break;
        default: base = col; break;
      }
      if (slot == nullptr) {
        // Not a role suffix after all; undo the speculative group if it is empty.
        if (g.l < 0 && g.m < 0 && g.r < 0 && g.s < 0 && g.crisp < 0) groups.pop_back();
      }
    }
    if (slot == nullptr) slot = &group_for(col).crisp;
    if (*slot >= 0) throw ParseError(ParseError::Kind::BadHeader, 0, c + 1, "duplicate column '" + col + "'");
    *slot = static_cast<int>(c);
  }

  for (const auto& g : groups) {
    const bool fuzzy = g.l >= 0 || g.m >= 0 || g.r >= 0 || g.s >= 0;
    if (g.crisp >= 0 && fuzzy) {
      throw ParseError(ParseError::Kind::BadHeader, 0, static_cast<std::size_t>(g.crisp) + 1,
                       "column '" + g.name + "' is both crisp and fuzzy");
    }
    if (!fuzzy) continue;
    auto missing = [&](const char* suffix) {
      return ParseError(ParseError::Kind::MissingColumn, 0, 0,
                        "column group '" + g.name + "' is missing " + g.name + suffix);
    };
    if (g.m < 0) throw missing("_m");
    if (g.s >= 0 && (g.l >= 0 || g.r >= 0)) {
      throw ParseError(ParseError::Kind::BadHeader, 0, static_cast<std::size_t>(g.s) + 1,
                       "column group '" + g.name + "' mixes _s with _l/_r");
    }
    if (g.s < 0) {
      if (g.l < 0) throw missing("_l");
      if (g.r < 0) throw missing("_r");
    }
  }

  const ColumnGroup* response = nullptr;
  const ColumnGroup* fitted = nullptr;
  std::vector<const ColumnGroup*> inputs;
  for (const auto& g : groups) {
    if (g.name == "y") {
      response = &g;
    } else if (g.name == "yhat") {
      fitted = &g;
    } else {
      inputs.push_back(&g);
    }
  }
  if (response == nullptr) throw ParseError(ParseError::Kind::MissingColumn, 0, 0, "csv has no response group y_m");
  if (response->is_crisp()) throw ParseError(ParseError::Kind::BadHeader, 0, static_cast<std::size_t>(response->crisp) + 1, "response y must be fuzzy (y_m,y_s or y_l,y_m,y_r)");
  if (fitted != nullptr && fitted->is_crisp()) throw ParseError(ParseError::Kind::BadHeader, 0, static_cast<std::size_t>(fitted->crisp) + 1, "yhat must be fuzzy");

  bool any_fuzzy_input = false;
  for (const auto* g : inputs) any_fuzzy_input = any_fuzzy_input || !g->is_crisp();

  auto cell = [&](std::size_t row, int col) -> double {
    try {
      return detail::parse_number(rows[row][static_cast<std::size_t>(col)]);
    } catch (const DomainError&) {
      throw ParseError(ParseError::Kind::NonNumeric, row + 1, static_cast<std::size_t>(col) + 1,
                       "non-numeric cell '" + std::string(rows[row][static_cast<std::size_t>(col)]) + "' at row " +
                           std::to_string(row + 1) + ", column " + std::to_string(col + 1));
    }
  };
  auto fuzzy_value = [&](std::size_t row, const ColumnGroup& g) -> Tfn {
    const double m = cell(row, g.m);
    const int lcol = g.s >= 0 ? g.s : g.l;
    const int rcol = g.s >= 0 ? g.s : g.r;
    const double l = cell(row, lcol);
    const double r = cell(row, rcol);
    if (l < 0.0 || r < 0.0) {
      throw ParseError(ParseError::Kind::NegativeSpread, row + 1, static_cast<std::size_t>(l < 0.0 ? lcol : rcol) + 1,
                       "negative spread at row " + std::to_string(row + 1));
    }
    return {l, m, r};
  };

  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != header.size()) {
      throw ParseError(ParseError::Kind::RaggedRow, i + 1, 0,
                       "row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                           " cells, header has " + std::to_string(header.size()));
    }
  }

  CsvTable table;
  std::vector<Tfn> y;
  y.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    y.push_back(fuzzy_value(i, *response));
    if (fitted != nullptr) table.fitted.push_back(fuzzy_value(i, *fitted));
  }

  if (any_fuzzy_input) {
    FuzzyInputDataset d;
    d.name = name;
    d.y = std::move(y);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Tfn> row;
      for (const auto* g : inputs) row.push_back(g->is_crisp() ? Tfn::crisp(cell(i, g->crisp)) : fuzzy_value(i, *g));
      d.x.push_back(std::move(row));
    }
    table.data = std::move(d);
  } else {
    CrispInputDataset d;
    d.name = name;
    d.x.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(inputs.size()));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < inputs.size(); ++j) {
        d.x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = cell(i, inputs[j]->crisp);
      }
    }
    d.symmetric = all_symmetric(y);
    d.y = std::move(y);
    table.data = std::move(d);
  }
  return table;
}

inline Dataset parse_csv(std::string_view text) { return parse_csv_table(text).data; }

namespace detail {

inline void append_group_header(std::string& out, const std::string& name, bool symmetric) {
  if (!out.empty()) out += ',';
  out += symmetric ? name + "_m," + name + "_s" : name + "_l," + name + "_m," + name + "_r";
}

inline void append_value(std::string& out, const Tfn& v, bool symmetric) {
  if (!out.empty()) out += ',';
  if (symmetric) {
    out += format17(v.m()) + ',' + format17(v.l());
  } else {
    out += format17(v.l()) + ',' + format17(v.m()) + ',' + format17(v.r());
  }
}

}  // namespace detail

/// Serializes a dataset (and optionally a fitted column as the yhat group) so that
/// parse_csv reproduces it exactly.
inline std::string write_csv(const Dataset& dataset, std::span<const Tfn> fitted = {}) {
  const auto& y = responses(dataset);
  if (!fitted.empty() && fitted.size() != y.size()) throw DomainError("fitted column length differs from dataset");
  // Exact equality here: the "_s" form must not drop a tiny asymmetry.
  auto exactly_symmetric = [](std::span<const Tfn> values) {
    return std::all_of(values.begin(), values.end(), [](const Tfn& v) { return v.l() == v.r(); });
  };
  const bool y_sym = exactly_symmetric(y);
  const bool f_sym = exactly_symmetric(fitted);

  std::string header;
  std::vector<std::string> lines(y.size());
  if (const auto* crisp = std::get_if<CrispInputDataset>(&dataset)) {
    for (Eigen::Index j = 0; j < crisp->x.cols(); ++j) {
      if (!header.empty()) header += ',';
      header += "x" + std::to_string(j + 1);
    }
    for (std::size_t i = 0; i < y.size(); ++i) {
      for (Eigen::Index j = 0; j < crisp->x.cols(); ++j) {
        if (!lines[i].empty()) lines[i] += ',';
        lines[i] += detail::format17(crisp->x(static_cast<Eigen::Index>(i), j));
      }
    }
  } else {
    const auto& fz = std::get<FuzzyInputDataset>(dataset);
    const std::size_t p = fz.inputs();
    for (std::size_t j = 0; j < p; ++j) {
      bool sym = true;
      for (const auto& row : fz.x) sym = sym && row[j].l() == row[j].r();
      detail::append_group_header(header, "x" + std::to_string(j + 1), sym);
      for (std::size_t i = 0; i < y.size(); ++i) detail::append_value(lines[i], fz.x[i][j], sym);
    }
  }
  detail::append_group_header(header, "y", y_sym);
  for (std::size_t i = 0; i < y.size(); ++i) detail::append_value(lines[i], y[i], y_sym);
  if (!fitted.empty()) {
    detail::append_group_header(header, "yhat", f_sym);
    for (std::size_t i = 0; i < y.size(); ++i) detail::append_value(lines[i], fitted[i], f_sym);
  }
  std::string out;
  if (!dataset_name(dataset).empty()) out += "# name: " + dataset_name(dataset) + "\n";
  out += header + "\n";
  for (const auto& line : lines) out += line + "\n";
  return out;
}

/// FNV-1a 64-bit hash of the canonical CSV form, as 16 hex digits.
inline std::string dataset_fingerprint(const Dataset& dataset) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : write_csv(dataset)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace fuzzyshrink

#endif  // FUZZYSHRINK_DATASETS_HPP
