#ifndef FUZZYSHRINK_SHRINKAGE_HPP
#define FUZZYSHRINK_SHRINKAGE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "fuzzyshrink/detail/parallel.hpp"
#include "fuzzyshrink/errors.hpp"
#include "fuzzyshrink/fuzzy_number.hpp"
#include "fuzzyshrink/metrics.hpp"
#include "fuzzyshrink/regression.hpp"

namespace fuzzyshrink {

// ---------------------------------------------------------------------------
// Scalar rules

namespace detail {
inline void check_k(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("shrinkage constant k must be positive and finite");
}
}  // namespace detail

/// Stein-type shrinkage (1 - k / v^2) v. Zero stays zero.
inline double shrink_value(double v, double k) {
  detail::check_k(k);
  if (v == 0.0) return 0.0;
  return v - k / v;
}

/// Positive-rule shrinkage for a nonnegative estimate: max{0, (1 - k / v^2) v}.
inline double shrink_positive(double v, double k) {
  detail::check_k(k);
  if (!(v >= 0.0)) throw DomainError("positive-rule shrinkage needs a nonnegative estimate");
  return std::max(0.0, shrink_value(v, k));
}

/// Positive-part factor applied to a signed estimate: (1 - k / v^2)^+ v.
/// Never changes the sign of v; coincides with shrink_positive for v >= 0.
inline double shrink_positive_part(double v, double k) {
  detail::check_k(k);
  if (v == 0.0) return 0.0;
  const double factor = 1.0 - k / (v * v);
  return factor > 0.0 ? factor * v : 0.0;
}

// ---------------------------------------------------------------------------
// Model shrinkage

enum class CenterRule { Stein, PositiveStein, None };
// No plain Stein rule for spreads: a spread must stay nonnegative.
enum class SpreadRule { PositiveStein, None };

struct ShrinkagePolicy {
  CenterRule center = CenterRule::Stein;
  SpreadRule spread = SpreadRule::PositiveStein;
  bool include_intercept = true;

  friend bool operator==(const ShrinkagePolicy&, const ShrinkagePolicy&) = default;
};

inline double apply_center_rule(CenterRule rule, double v, double k) {
  switch (rule) {
    case CenterRule::Stein:
      return shrink_value(v, k);
    case CenterRule::PositiveStein:
      return shrink_positive_part(v, k);
    case CenterRule::None:
      detail::check_k(k);
      return v;
  }
  throw InternalError("unknown center rule");
}

inline double apply_spread_rule(SpreadRule rule, double v, double k) {
  switch (rule) {
    case SpreadRule::PositiveStein:
      return shrink_positive(v, k);
    case SpreadRule::None:
      detail::check_k(k);
      if (!(v >= 0.0)) throw DomainError("spread must be nonnegative");
      return v;
  }
  throw InternalError("unknown spread rule");
}

inline Tfn shrink_coefficient(const Tfn& a, double k, const ShrinkagePolicy& policy = {}) {
  return {apply_spread_rule(policy.spread, a.l(), k), apply_center_rule(policy.center, a.m(), k),
          apply_spread_rule(policy.spread, a.r(), k)};
}

/// Shrinks every coefficient componentwise: centers by the center rule, left
/// and right spreads independently by the spread rule.
inline FLRModel shrink_model(const FLRModel& model, double k, const ShrinkagePolicy& policy = {}) {
  detail::check_k(k);
  FLRModel out;
  out.coefficients.reserve(model.coefficients.size());
  for (std::size_t j = 0; j < model.coefficients.size(); ++j) {
    const auto& c = model.coefficients[j];
    out.coefficients.push_back(j == 0 && !policy.include_intercept ? c : shrink_coefficient(c, k, policy));
  }
  return out;
}

inline FuzzyInputModel shrink_model(const FuzzyInputModel& model, double k, const ShrinkagePolicy& policy = {}) {
  detail::check_k(k);
  FuzzyInputModel out = model;
  const std::size_t first = policy.include_intercept ? 0 : 1;
  for (std::size_t j = first; j < out.center_coeffs.size(); ++j) {
    out.center_coeffs[j] = apply_center_rule(policy.center, model.center_coeffs[j], k);
  }
  for (std::size_t j = first; j < out.spread_coeffs.size(); ++j) {
    out.spread_coeffs[j] = apply_spread_rule(policy.spread, model.spread_coeffs[j], k);
  }
  return out;
}

/// Largest squared component the policy acts on. Beyond this k every shrunk
/// component has flipped sign or hit zero.
inline double default_k_max(const FLRModel& model, const ShrinkagePolicy& policy = {}) {
  double best = 0.0;
  for (std::size_t j = policy.include_intercept ? 0 : 1; j < model.coefficients.size(); ++j) {
    const auto& c = model.coefficients[j];
    if (policy.center != CenterRule::None) best = std::max(best, c.m() * c.m());
    if (policy.spread != SpreadRule::None) best = std::max({best, c.l() * c.l(), c.r() * c.r()});
  }
  return best;
}

inline double default_k_max(const FuzzyInputModel& model, const ShrinkagePolicy& policy = {}) {
  double best = 0.0;
  for (std::size_t j = policy.include_intercept ? 0 : 1; j < model.center_coeffs.size(); ++j) {
    if (policy.center != CenterRule::None) best = std::max(best, model.center_coeffs[j] * model.center_coeffs[j]);
    if (policy.spread != SpreadRule::None && j < model.spread_coeffs.size()) {
      best = std::max(best, model.spread_coeffs[j] * model.spread_coeffs[j]);
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Search over k

inline constexpr double kDefaultResolution = 1e-4;

struct SearchOptions {
  ShrinkagePolicy policy{};
  unsigned threads = 1;
};

struct ShrinkageReport {
  double k_star = 0.0;
  double metric_baseline = 0.0;
  double metric_shrunk = 0.0;
  double boundary_sup = 0.0;
  bool improved = false;  // some k in the searched range beats the baseline
  GofMetric metric{};
  double k_max = 0.0;
  double grid_resolution = kDefaultResolution;
};

struct BoundaryResult {
  double sup = 0.0;
  bool improved = false;
};

/// Aggregate metric of a model (optionally shrunk by k) on a dataset.
template <class Model, class Data>
double shrunk_metric(const Model& model, const Data& data, const GofMetric& metric, double k,
                     const ShrinkagePolicy& policy = {}) {
  const auto fitted = k > 0.0 ? predict_all(shrink_model(model, k, policy), data) : predict_all(model, data);
  return aggregate(metric, data.y, fitted).aggregate;
}

namespace detail {

struct GridScan {
  std::vector<double> k;
  std::vector<double> value;
  double baseline = 0.0;
};

inline std::vector<double> k_grid(double k_max, double resolution) {
  if (!(k_max > 0.0) || !std::isfinite(k_max)) throw DomainError("k_max must be positive");
  if (!(resolution > 0.0) || !std::isfinite(resolution)) throw DomainError("resolution must be positive");
  const double steps = std::ceil(k_max / resolution * (1.0 - 1e-12));
  if (steps > 5e7) throw DomainError("k grid too fine: more than 5e7 points");
  const auto count = std::max<std::size_t>(1, static_cast<std::size_t>(steps));
  std::vector<double> k(count);
  for (std::size_t i = 0; i < count; ++i) k[i] = std::min(k_max, static_cast<double>(i + 1) * resolution);
  return k;
}

template <class Model, class Data>
GridScan scan(const Model& model, const Data& data, const GofMetric& metric, double k_max, double resolution,
              const SearchOptions& options) {
  if (data.y.empty()) throw DomainError("cannot search k on an empty dataset");
  GridScan out;
  out.k = k_grid(k_max, resolution);
  out.value.resize(out.k.size());
  out.baseline = shrunk_metric(model, data, metric, 0.0, options.policy);
  parallel_for(out.k.size(), options.threads,
               [&](std::size_t i) { out.value[i] = shrunk_metric(model, data, metric, out.k[i], options.policy); });
  return out;
}

// Golden-section search on [lo, hi]; returns the best evaluated point.
template <class F>
std::pair<double, double> golden_section(F&& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  std::pair<double, double> best = fc <= fd ? std::pair{c, fc} : std::pair{d, fd};
  for (int it = 0; it < 200 && (hi - lo) > tol; ++it) {
    if (fc <= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
      if (fc < best.second || (fc == best.second && c < best.first)) best = {c, fc};
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
      if (fd < best.second) best = {d, fd};
    }
  }
  return best;
}

template <class Model, class Data>
std::pair<double, double> refine_minimum(const Model& model, const Data& data, const GofMetric& metric,
                                         const GridScan& grid, double resolution, const SearchOptions& options) {
  const std::size_t n = grid.k.size();
  std::size_t arg = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (grid.value[i] < grid.value[arg]) arg = i;
  }
  // Refine every plateau-start local minimum, best first, up to a fixed budget.
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < n; ++i) {
    const bool left_ok = i == 0 || grid.value[i] < grid.value[i - 1];
    const bool right_ok = i + 1 == n || grid.value[i] <= grid.value[i + 1];
    if (left_ok && right_ok) candidates.push_back(i);
  }
  std::sort(candidates.begin(), candidates.end(),
            [&](std::size_t a, std::size_t b) { return grid.value[a] < grid.value[b] || (grid.value[a] == grid.value[b] && a < b); });
  if (candidates.size() > 16) candidates.resize(16);

  std::pair<double, double> best{grid.k[arg], grid.value[arg]};
  auto f = [&](double k) { return shrunk_metric(model, data, metric, k, options.policy); };
  const double tol = resolution * 1e-6;
  for (std::size_t i : candidates) {
    const double lo = i == 0 ? std::min(grid.k[0], resolution) * 1e-6 : grid.k[i - 1];
    const double hi = i + 1 == n ? grid.k[i] : grid.k[i + 1];
    if (!(hi > lo)) continue;
    const auto found = golden_section(f, lo, hi, tol);
    if (found.second < best.second || (found.second == best.second && found.first < best.first)) best = found;
  }
  return best;
}

template <class Model, class Data>
BoundaryResult locate_boundary(const Model& model, const Data& data, const GofMetric& metric, const GridScan& grid,
                               double resolution, const SearchOptions& options) {
  const std::size_t n = grid.k.size();
  std::size_t last = n;
  for (std::size_t i = n; i-- > 0;) {
    if (grid.value[i] < grid.baseline) {
      last = i;
      break;
    }
  }
  if (last == n) return {0.0, false};
  if (last + 1 == n) return {grid.k[last], true};
  double lo = grid.k[last];
  double hi = grid.k[last + 1];
  const double tol = resolution / 100.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (shrunk_metric(model, data, metric, mid, options.policy) < grid.baseline) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, true};
}

}  // namespace detail

/// Sup of the k in (0, k_max] whose shrunk model scores strictly better than the
/// unshrunk one: grid scan, then bisection on the last sign change to resolution/100.
/// Returns {0, false} when no grid point improves.
template <class Model, class Data>
BoundaryResult optimal_boundary(const Model& model, const Data& data, const GofMetric& metric, double k_max,
                                double resolution = kDefaultResolution, const SearchOptions& options = {}) {
  const auto grid = detail::scan(model, data, metric, k_max, resolution, options);
  return detail::locate_boundary(model, data, metric, grid, resolution, options);
}

/// Minimizes the aggregate metric over k: uniform grid on (0, k_max] then
/// golden-section refinement around the grid minima. Ties go to the smaller k.
/// The report also carries the optimal boundary computed from the same scan.
template <class Model, class Data>
ShrinkageReport optimize_k(const Model& model, const Data& data, const GofMetric& metric, double k_max,
                           double resolution = kDefaultResolution, const SearchOptions& options = {}) {
  const auto grid = detail::scan(model, data, metric, k_max, resolution, options);
  const auto [k_star, value] = detail::refine_minimum(model, data, metric, grid, resolution, options);
  const auto boundary = detail::locate_boundary(model, data, metric, grid, resolution, options);
  ShrinkageReport report;
  report.k_star = k_star;
  report.metric_baseline = grid.baseline;
  report.metric_shrunk = value;
  report.boundary_sup = boundary.sup;
  report.improved = boundary.improved;
  report.metric = metric;
  report.k_max = k_max;
  report.grid_resolution = resolution;
  return report;
}

}  // namespace fuzzyshrink

#endif  // FUZZYSHRINK_SHRINKAGE_HPP
