#ifndef FUZZYSHRINK_FUZZY_NUMBER_HPP
#define FUZZYSHRINK_FUZZY_NUMBER_HPP

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <string>

#include "fuzzyshrink/errors.hpp"

namespace fuzzyshrink {

/// Closed real interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  constexpr double width() const noexcept { return hi - lo; }
  constexpr bool contains(double x) const noexcept { return lo <= x && x <= hi; }
  constexpr bool contains(const Interval& other) const noexcept {
    return lo <= other.lo && other.hi <= hi;
  }
  friend constexpr bool operator==(const Interval&, const Interval&) = default;
};

inline Interval operator+(const Interval& a, const Interval& b) noexcept {
  return {a.lo + b.lo, a.hi + b.hi};
}

/// Triangular LR fuzzy number (l, m, r)_T with linear shape functions
/// L(x) = R(x) = max{0, 1 - |x|}.
///
/// Spreads are nonnegative. A zero spread is allowed and makes that side crisp,
/// so (0, m, 0)_T is the ordinary real number m.
class TriangularFuzzyNumber {
 public:
  constexpr TriangularFuzzyNumber() = default;

  TriangularFuzzyNumber(double left, double center, double right)
      : l_(left), m_(center), r_(right) {
    if (!(left >= 0.0) || !(right >= 0.0) || !std::isfinite(left) || !std::isfinite(right) ||
        !std::isfinite(center)) {
      throw DomainError("triangular fuzzy number requires finite center and nonnegative spreads");
    }
  }

  static TriangularFuzzyNumber symmetric(double center, double spread) {
    return {spread, center, spread};
  }
  static TriangularFuzzyNumber crisp(double value) { return {0.0, value, 0.0}; }

  constexpr double l() const noexcept { return l_; }
  constexpr double m() const noexcept { return m_; }
  constexpr double r() const noexcept { return r_; }

  bool is_symmetric(double tol = 1e-12) const noexcept { return std::abs(l_ - r_) <= tol; }
  constexpr bool is_crisp() const noexcept { return l_ == 0.0 && r_ == 0.0; }

  friend constexpr bool operator==(const TriangularFuzzyNumber&,
                                   const TriangularFuzzyNumber&) = default;

 private:
  double l_ = 0.0;
  double m_ = 0.0;
  double r_ = 0.0;
};

using Tfn = TriangularFuzzyNumber;

/// Degree of membership of x in a.
inline double membership(const Tfn& a, double x) noexcept {
  if (x <= a.m()) {
    if (a.l() == 0.0) return x == a.m() ? 1.0 : 0.0;
    return std::max(0.0, 1.0 - (a.m() - x) / a.l());
  }
  if (a.r() == 0.0) return 0.0;
  return std::max(0.0, 1.0 - (x - a.m()) / a.r());
}

/// alpha-cut [m - (1-alpha) l, m + (1-alpha) r]. alpha = 0 gives the closed support.
inline Interval alpha_cut(const Tfn& a, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError("alpha-cut level must lie in [0, 1]");
  }
  const double w = 1.0 - alpha;
  return {a.m() - w * a.l(), a.m() + w * a.r()};
}

inline Tfn operator+(const Tfn& a, const Tfn& b) {
  return {a.l() + b.l(), a.m() + b.m(), a.r() + b.r()};
}

inline Tfn add(const Tfn& a, const Tfn& b) { return a + b; }

/// Scalar multiple. A negative factor mirrors the number, so the spreads swap.
inline Tfn scalar_mul(double lambda, const Tfn& a) {
  if (lambda > 0.0) return {lambda * a.l(), lambda * a.m(), lambda * a.r()};
  if (lambda < 0.0) return {-lambda * a.r(), lambda * a.m(), -lambda * a.l()};
  if (lambda == 0.0) return {};
  throw DomainError("scalar multiplier must be a real number");
}

inline Tfn operator*(double lambda, const Tfn& a) { return scalar_mul(lambda, a); }

/// "(l, m, r)_T", or "(m, s)_T" when the number is symmetric and `shorthand` is set.
inline std::string to_string(const Tfn& a, int precision = 6, bool shorthand = true) {
  std::ostringstream os;
  os.precision(precision);
  if (shorthand && a.is_symmetric()) {
    os << '(' << a.m() << ", " << a.l() << ")_T";
  } else {
    os << '(' << a.l() << ", " << a.m() << ", " << a.r() << ")_T";
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Tfn& a) {
  return os << to_string(a, static_cast<int>(os.precision()));
}

}  // namespace fuzzyshrink

#endif  // FUZZYSHRINK_FUZZY_NUMBER_HPP
