#ifndef FUZZYSHRINK_METRICS_HPP
#define FUZZYSHRINK_METRICS_HPP

#include <charconv>
#include <cmath>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "fuzzyshrink/errors.hpp"
#include "fuzzyshrink/fuzzy_number.hpp"

namespace fuzzyshrink {

/// Goodness-of-fit distance between observed and fitted fuzzy responses.
///
///  - Dpq:    Sadeghpour-Gien D_{p,q}, mean over observations of the per-pair
///            weighted alpha-cut endpoint integrals.
///  - D2Half: the triangular closed form of D_{2,1/2}.
///  - Dh:     Hassanpour et al., summed absolute componentwise differences.
///  - Dlr:    Kelkinnama-Taheri, with shape weights w_l, w_r (1/2 for triangular).
struct GofMetric {
  enum class Kind { Dpq, D2Half, Dh, Dlr };

  Kind kind = Kind::Dlr;
  double p = 2.0;
  double q = 0.5;
  double w_l = 0.5;
  double w_r = 0.5;

  static GofMetric dpq(double p, double q) {
    if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("D_pq requires p > 0");
    if (!(q >= 0.0 && q <= 1.0)) throw DomainError("D_pq requires 0 <= q <= 1");
    return {Kind::Dpq, p, q, 0.5, 0.5};
  }
  static GofMetric d2_half() { return {Kind::D2Half, 2.0, 0.5, 0.5, 0.5}; }
  static GofMetric dh() { return {Kind::Dh, 2.0, 0.5, 0.5, 0.5}; }
  static GofMetric dlr(double w_l = 0.5, double w_r = 0.5) {
    if (!(w_l > 0.0) || !(w_r > 0.0) || !std::isfinite(w_l) || !std::isfinite(w_r)) {
      throw DomainError("D_LR requires positive shape weights");
    }
    return {Kind::Dlr, 2.0, 0.5, w_l, w_r};
  }

  /// Selection string understood by parse_metric().
  std::string name() const;

  friend bool operator==(const GofMetric&, const GofMetric&) = default;
};

enum class Aggregation { Sum, MeanOfSquares };

struct GofValue {
  std::vector<double> per_observation;
  double aggregate = 0.0;
  Aggregation rule = Aggregation::Sum;
};

inline Aggregation aggregation_rule(const GofMetric& metric) noexcept {
  switch (metric.kind) {
    case GofMetric::Kind::Dpq:
    case GofMetric::Kind::D2Half:
      return Aggregation::MeanOfSquares;
    case GofMetric::Kind::Dh:
    case GofMetric::Kind::Dlr:
      return Aggregation::Sum;
  }
  return Aggregation::Sum;
}

namespace detail {

// Integral over t in [0,1] of f(t)^p where f is linear with f(0) = a, f(1) = b.
// Integer p uses the exact power sum (signed, as written); other p integrates |f|^p.
inline double linear_power_integral(double a, double b, double p) {
  const double rounded = std::round(p);
  if (rounded == p && p <= 64.0) {
    const int n = static_cast<int>(rounded);
    // (1/(n+1)) * sum_j a^j b^(n-j)
    double sum = 0.0;
    double apow = 1.0;
    for (int j = 0; j <= n; ++j) {
      sum += apow * std::pow(b, n - j);
      apow *= a;
    }
    return sum / (n + 1);
  }
  auto integrand = [=](double t) { return std::pow(std::abs(a + (b - a) * t), p); };
  using boost::math::quadrature::gauss_kronrod;
  constexpr double tol = 1e-12;
  // Split at the sign change so each piece is smooth.
  if ((a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0)) {
    const double t0 = a / (a - b);
    return gauss_kronrod<double, 31>::integrate(integrand, 0.0, t0, 15, tol) +
           gauss_kronrod<double, 31>::integrate(integrand, t0, 1.0, 15, tol);
  }
  return gauss_kronrod<double, 31>::integrate(integrand, 0.0, 1.0, 15, tol);
}

}  // namespace detail

/// Per-observation D^2_{p,q}(i): weighted integrals of the alpha-cut endpoint
/// differences (fitted minus observed) raised to the power p.
///
/// For integer p the signed difference is used literally, which is a proper
/// squared distance only for even p. Non-integer p uses absolute differences.
inline double d_pq_pair(const Tfn& y, const Tfn& yhat, double p, double q) {
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("D_pq requires p > 0");
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("D_pq requires 0 <= q <= 1");
  const double dm = yhat.m() - y.m();
  // Lower endpoint difference runs from dm - dl at alpha=0 to dm at alpha=1.
  const double lower_at0 = (yhat.m() - yhat.l()) - (y.m() - y.l());
  const double upper_at0 = (yhat.m() + yhat.r()) - (y.m() + y.r());
  const double lower = detail::linear_power_integral(lower_at0, dm, p);
  const double upper = detail::linear_power_integral(upper_at0, dm, p);
  return (1.0 - q) * lower + q * upper;
}

/// Six-term closed form of D^2_{2,1/2}(i) for triangular numbers.
inline double d2_half_triangular(const Tfn& y, const Tfn& yhat) noexcept {
  const double lo = (yhat.m() - yhat.l()) - (y.m() - y.l());
  const double mid = yhat.m() - y.m();
  const double hi = (yhat.m() + yhat.r()) - (y.m() + y.r());
  return (lo * lo + 2.0 * mid * mid + hi * hi + lo * mid + hi * mid) / 6.0;
}

inline double d_h_pair(const Tfn& y, const Tfn& yhat) noexcept {
  return std::abs(yhat.m() - y.m()) + std::abs(yhat.r() - y.r()) + std::abs(yhat.l() - y.l());
}

inline double d_lr_pair(const Tfn& y, const Tfn& yhat, double w_l = 0.5, double w_r = 0.5) {
  if (!(w_l > 0.0) || !(w_r > 0.0)) throw DomainError("D_LR requires positive shape weights");
  const double dm = yhat.m() - y.m();
  const double dr = yhat.r() - y.r();
  const double dl = yhat.l() - y.l();
  return (std::abs(dm) + std::abs(dm + w_r * dr) + std::abs(dm - w_l * dl)) / 3.0;
}

inline double pair_distance(const GofMetric& metric, const Tfn& y, const Tfn& yhat) {
  switch (metric.kind) {
    case GofMetric::Kind::Dpq:
      return d_pq_pair(y, yhat, metric.p, metric.q);
    case GofMetric::Kind::D2Half:
      return d2_half_triangular(y, yhat);
    case GofMetric::Kind::Dh:
      return d_h_pair(y, yhat);
    case GofMetric::Kind::Dlr:
      return d_lr_pair(y, yhat, metric.w_l, metric.w_r);
  }
  throw InternalError("unknown metric kind");
}

/// Scores fitted against observed responses. D_H and D_LR are summed over
/// observations; D_{p,q} and D_{2,1/2} average the per-pair squared distances.
inline GofValue aggregate(const GofMetric& metric, std::span<const Tfn> ys,
                          std::span<const Tfn> yhats) {
  if (ys.size() != yhats.size()) {
    throw DomainError("observed and fitted response counts differ");
  }
  if (ys.empty()) throw DomainError("cannot aggregate over zero observations");
  GofValue out;
  out.rule = aggregation_rule(metric);
  out.per_observation.reserve(ys.size());
  double total = 0.0;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    const double d = pair_distance(metric, ys[i], yhats[i]);
    out.per_observation.push_back(d);
    total += d;
  }
  out.aggregate =
      out.rule == Aggregation::Sum ? total : total / static_cast<double>(ys.size());
  return out;
}

namespace detail {

inline std::string format_number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

inline double parse_number(std::string_view text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  while (first < last && (*first == ' ' || *first == '\t')) ++first;
  while (last > first && (last[-1] == ' ' || last[-1] == '\t' || last[-1] == '\r')) --last;
  if (first < last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw DomainError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace detail

inline std::string GofMetric::name() const {
  switch (kind) {
    case Kind::Dpq:
      return "dpq:" + detail::format_number(p) + "," + detail::format_number(q);
    case Kind::D2Half:
      return "d2q";
    case Kind::Dh:
      return "dh";
    case Kind::Dlr:
      if (w_l == 0.5 && w_r == 0.5) return "dlr";
      return "dlr:" + detail::format_number(w_l) + "," + detail::format_number(w_r);
  }
  return "?";
}

/// Parses "dlr", "dh", "d2q", "dlr:wl,wr" or "dpq:p,q".
inline GofMetric parse_metric(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  auto two_params = [&]() -> std::pair<double, double> {
    if (colon == std::string_view::npos) throw DomainError("metric '" + std::string(text) + "' needs parameters");
    const std::string_view rest = text.substr(colon + 1);
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) {
      throw DomainError("metric parameters must be two comma-separated numbers");
    }
    return {detail::parse_number(rest.substr(0, comma)), detail::parse_number(rest.substr(comma + 1))};
  };
  if (head == "dlr") {
    if (colon == std::string_view::npos) return GofMetric::dlr();
    auto [wl, wr] = two_params();
    return GofMetric::dlr(wl, wr);
  }
  if (head == "dpq") {
    auto [p, q] = two_params();
    return GofMetric::dpq(p, q);
  }
  if (colon == std::string_view::npos) {
    if (head == "dh") return GofMetric::dh();
    if (head == "d2q") return GofMetric::d2_half();
  }
  throw DomainError("unknown metric '" + std::string(text) + "' (expected dlr, dh, d2q, dlr:wl,wr, dpq:p,q)");
}

}  // namespace fuzzyshrink

#endif  // FUZZYSHRINK_METRICS_HPP
