#ifndef FUZZYSHRINK_REGRESSION_HPP
#define FUZZYSHRINK_REGRESSION_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fuzzyshrink/detail/lad.hpp"
#include "fuzzyshrink/detail/nnls.hpp"
#include "fuzzyshrink/detail/parallel.hpp"
#include "fuzzyshrink/errors.hpp"
#include "fuzzyshrink/fuzzy_number.hpp"

namespace fuzzyshrink {

/// Crisp-input FLR model  Y = A0 + A1 x1 + ... + Ap xp  with fuzzy coefficients.
/// coefficients[0] is the intercept.
struct FLRModel {
  std::vector<Tfn> coefficients;

  std::size_t inputs() const noexcept { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  friend bool operator==(const FLRModel&, const FLRModel&) = default;
};

/// Fuzzy-input model: centers map through center_coeffs, spreads through spread_coeffs.
/// Index 0 of each vector is the intercept.
struct FuzzyInputModel {
  std::vector<double> center_coeffs;
  std::vector<double> spread_coeffs;

  std::size_t inputs() const noexcept { return center_coeffs.empty() ? 0 : center_coeffs.size() - 1; }
  friend bool operator==(const FuzzyInputModel&, const FuzzyInputModel&) = default;
};

struct CrispInputDataset {
  Eigen::MatrixXd x;  // n x p
  std::vector<Tfn> y;
  std::string name;
  bool symmetric = false;

  std::size_t rows() const noexcept { return y.size(); }
  std::size_t inputs() const noexcept { return static_cast<std::size_t>(x.cols()); }

  friend bool operator==(const CrispInputDataset& a, const CrispInputDataset& b) {
    return a.name == b.name && a.symmetric == b.symmetric && a.y == b.y && a.x.rows() == b.x.rows() &&
           a.x.cols() == b.x.cols() && (a.x.array() == b.x.array()).all();
  }
};

struct FuzzyInputDataset {
  std::vector<std::vector<Tfn>> x;  // n rows of p fuzzy inputs
  std::vector<Tfn> y;
  std::string name;

  std::size_t rows() const noexcept { return y.size(); }
  std::size_t inputs() const noexcept { return x.empty() ? 0 : x.front().size(); }
  friend bool operator==(const FuzzyInputDataset&, const FuzzyInputDataset&) = default;
};

inline bool all_symmetric(std::span<const Tfn> values) {
  for (const auto& v : values) {
    if (!v.is_symmetric()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Prediction

inline Tfn predict_crisp(const FLRModel& model, std::span<const double> x) {
  if (model.coefficients.empty() || x.size() != model.inputs()) {
    throw DomainError("predict: model has " + std::to_string(model.inputs()) + " inputs, got " +
                      std::to_string(x.size()));
  }
  Tfn acc = model.coefficients[0];
  for (std::size_t j = 0; j < x.size(); ++j) acc = acc + scalar_mul(x[j], model.coefficients[j + 1]);
  return acc;
}

inline Tfn predict_crisp(const FLRModel& model, const Eigen::Ref<const Eigen::RowVectorXd>& x) {
  std::vector<double> row(static_cast<std::size_t>(x.size()));
  for (Eigen::Index j = 0; j < x.size(); ++j) row[static_cast<std::size_t>(j)] = x(j);
  return predict_crisp(model, std::span<const double>(row));
}

inline Tfn predict_fuzzy(const FuzzyInputModel& model, std::span<const Tfn> x) {
  if (model.center_coeffs.empty() || model.spread_coeffs.size() != model.center_coeffs.size() ||
      x.size() != model.inputs()) {
    throw DomainError("predict: fuzzy-input model dimension mismatch");
  }
  double center = model.center_coeffs[0];
  double left = model.spread_coeffs[0];
  double right = model.spread_coeffs[0];
  for (std::size_t j = 0; j < x.size(); ++j) {
    center += model.center_coeffs[j + 1] * x[j].m();
    left += model.spread_coeffs[j + 1] * x[j].l();
    right += model.spread_coeffs[j + 1] * x[j].r();
  }
  return {left, center, right};
}

inline std::vector<Tfn> predict_all(const FLRModel& model, const CrispInputDataset& data) {
  std::vector<Tfn> out;
  out.reserve(data.rows());
  for (Eigen::Index i = 0; i < data.x.rows(); ++i) out.push_back(predict_crisp(model, data.x.row(i)));
  return out;
}

inline std::vector<Tfn> predict_all(const FuzzyInputModel& model, const FuzzyInputDataset& data) {
  std::vector<Tfn> out;
  out.reserve(data.rows());
  for (const auto& row : data.x) out.push_back(predict_fuzzy(model, row));
  return out;
}

// ---------------------------------------------------------------------------
// Fitting

namespace detail {

inline Eigen::MatrixXd with_intercept(const Eigen::MatrixXd& x) {
  Eigen::MatrixXd d(x.rows(), x.cols() + 1);
  d.col(0).setOnes();
  d.rightCols(x.cols()) = x;
  return d;
}

inline bool full_column_rank(const Eigen::MatrixXd& design) {
  if (design.rows() < design.cols()) return false;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  qr.setThreshold(1e-10);
  return qr.rank() == design.cols();
}

inline Eigen::VectorXd solve_ols(const Eigen::MatrixXd& design, const Eigen::VectorXd& target) {
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  qr.setThreshold(1e-10);
  if (design.rows() < design.cols() || qr.rank() != design.cols()) {
    throw SingularDesignError("design matrix is rank deficient (" + std::to_string(qr.rank()) + " of " +
                              std::to_string(design.cols()) + " columns independent)");
  }
  return qr.solve(target);
}

inline void check_crisp(const CrispInputDataset& data) {
  if (static_cast<std::size_t>(data.x.rows()) != data.y.size()) {
    throw DomainError("dataset has " + std::to_string(data.x.rows()) + " input rows but " +
                      std::to_string(data.y.size()) + " responses");
  }
  if (data.y.size() < data.inputs() + 1) {
    throw SingularDesignError("need at least p + 1 = " + std::to_string(data.inputs() + 1) + " observations");
  }
}

// Stacked spread system for crisp inputs. Unknowns are [left spreads (p+1) | right spreads (p+1)].
// Following scalar_mul, a negative input maps the coefficient's right spread onto the
// response's left spread and vice versa.
inline void spread_system(const Eigen::MatrixXd& x, std::span<const Tfn> y, Eigen::MatrixXd& a, Eigen::VectorXd& b) {
  const Eigen::Index n = x.rows();
  const Eigen::Index k = x.cols() + 1;
  a = Eigen::MatrixXd::Zero(2 * n, 2 * k);
  b.resize(2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    a(i, 0) = 1.0;          // left response <- left intercept spread
    a(n + i, k) = 1.0;      // right response <- right intercept spread
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      const double v = x(i, j);
      if (v >= 0.0) {
        a(i, j + 1) = v;
        a(n + i, k + j + 1) = v;
      } else {
        a(i, k + j + 1) = -v;
        a(n + i, j + 1) = -v;
      }
    }
    b(i) = y[static_cast<std::size_t>(i)].l();
    b(n + i) = y[static_cast<std::size_t>(i)].r();
  }
}

inline FLRModel assemble(const Eigen::VectorXd& centers, const Eigen::VectorXd& spreads) {
  const Eigen::Index k = centers.size();
  FLRModel model;
  model.coefficients.reserve(static_cast<std::size_t>(k));
  for (Eigen::Index j = 0; j < k; ++j) {
    model.coefficients.emplace_back(std::max(0.0, spreads(j)), centers(j), std::max(0.0, spreads(k + j)));
  }
  return model;
}

inline Eigen::VectorXd centers_of(std::span<const Tfn> y) {
  Eigen::VectorXd m(static_cast<Eigen::Index>(y.size()));
  for (std::size_t i = 0; i < y.size(); ++i) m(static_cast<Eigen::Index>(i)) = y[i].m();
  return m;
}

}  // namespace detail

/// Fuzzy least squares: ordinary least squares for the centers, nonnegative
/// least squares for the left and right spreads.
inline FLRModel fit_least_squares(const CrispInputDataset& data) {
  detail::check_crisp(data);
  const Eigen::MatrixXd design = detail::with_intercept(data.x);
  const Eigen::VectorXd centers = detail::solve_ols(design, detail::centers_of(data.y));
  Eigen::MatrixXd a;
  Eigen::VectorXd b;
  detail::spread_system(data.x, data.y, a, b);
  return detail::assemble(centers, detail::nnls(a, b));
}

/// Fuzzy least absolutes: LAD for centers (free coefficients) and for spreads
/// (nonnegative coefficients), each solved as a linear program.
inline FLRModel fit_least_absolutes(const CrispInputDataset& data) {
  detail::check_crisp(data);
  const Eigen::MatrixXd design = detail::with_intercept(data.x);
  if (!detail::full_column_rank(design)) throw SingularDesignError("design matrix is rank deficient");
  const Eigen::VectorXd centers = detail::least_absolute_deviations(
      design, detail::centers_of(data.y), std::vector<bool>(static_cast<std::size_t>(design.cols()), false));
  Eigen::MatrixXd a;
  Eigen::VectorXd b;
  detail::spread_system(data.x, data.y, a, b);
  const Eigen::VectorXd spreads =
      detail::least_absolute_deviations(a, b, std::vector<bool>(static_cast<std::size_t>(a.cols()), true));
  return detail::assemble(centers, spreads);
}

inline constexpr std::size_t kDefaultBootstrapReplicates = 1000;
inline constexpr int kMaxBootstrapRedraws = 100;

/// Engine for one bootstrap replicate. Streams depend only on (seed, replicate),
/// so results do not depend on how replicates are scheduled.
inline std::mt19937_64 bootstrap_engine(std::uint64_t seed, std::size_t replicate) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(replicate), static_cast<std::uint32_t>(replicate >> 32)};
  return std::mt19937_64(seq);
}

inline std::vector<std::size_t> draw_resample(std::size_t n, std::mt19937_64& engine) {
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::size_t> rows(n);
  for (auto& r : rows) r = pick(engine);
  return rows;
}

inline CrispInputDataset select_rows(const CrispInputDataset& data, std::span<const std::size_t> rows) {
  CrispInputDataset out;
  out.name = data.name;
  out.symmetric = data.symmetric;
  out.x.resize(static_cast<Eigen::Index>(rows.size()), data.x.cols());
  out.y.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.x.row(static_cast<Eigen::Index>(i)) = data.x.row(static_cast<Eigen::Index>(rows[i]));
    out.y.push_back(data.y[rows[i]]);
  }
  return out;
}

/// Bootstrap-averaged fuzzy least squares. Each replicate resamples rows with
/// replacement, redrawing rank-deficient resamples, and the fitted models are
/// averaged componentwise.
inline FLRModel fit_bootstrap(const CrispInputDataset& data, std::size_t replicates, std::uint64_t seed,
                              unsigned threads = 1) {
  if (replicates == 0) throw DomainError("bootstrap needs at least one replicate");
  detail::check_crisp(data);
  if (!detail::full_column_rank(detail::with_intercept(data.x))) {
    throw SingularDesignError("design matrix is rank deficient");
  }
  const std::size_t n = data.rows();
  std::vector<FLRModel> fits(replicates);
  detail::parallel_for(replicates, threads, [&](std::size_t rep) {
    auto engine = bootstrap_engine(seed, rep);
    for (int attempt = 0;; ++attempt) {
      if (attempt >= kMaxBootstrapRedraws) {
        throw DegenerateDataError("bootstrap: " + std::to_string(kMaxBootstrapRedraws) +
                                  " consecutive rank-deficient resamples");
      }
      const auto rows = draw_resample(n, engine);
      const auto sample = select_rows(data, rows);
      if (!detail::full_column_rank(detail::with_intercept(sample.x))) continue;
      fits[rep] = fit_least_squares(sample);
      return;
    }
  });

  const std::size_t k = data.inputs() + 1;
  std::vector<double> l(k, 0.0), m(k, 0.0), r(k, 0.0);
  for (const auto& fit : fits) {
    for (std::size_t j = 0; j < k; ++j) {
      l[j] += fit.coefficients[j].l();
      m[j] += fit.coefficients[j].m();
      r[j] += fit.coefficients[j].r();
    }
  }
  FLRModel out;
  const auto count = static_cast<double>(replicates);
  for (std::size_t j = 0; j < k; ++j) {
    out.coefficients.emplace_back(std::max(0.0, l[j] / count), m[j] / count, std::max(0.0, r[j] / count));
  }
  return out;
}

/// Fuzzy-input fit: least squares of output centers on input centers, and one
/// nonnegative spread-coefficient vector fitted jointly to left and right spreads.
inline FuzzyInputModel fit_fuzzy_input(const FuzzyInputDataset& data) {
  const std::size_t n = data.rows();
  const std::size_t p = data.inputs();
  if (data.x.size() != n) throw DomainError("dataset input and response row counts differ");
  for (const auto& row : data.x) {
    if (row.size() != p) throw DomainError("ragged fuzzy input rows");
  }
  if (n < p + 1) throw SingularDesignError("need at least p + 1 = " + std::to_string(p + 1) + " observations");

  const auto rows = static_cast<Eigen::Index>(n);
  const auto k = static_cast<Eigen::Index>(p + 1);
  Eigen::MatrixXd center_design(rows, k);
  Eigen::MatrixXd spread_design(2 * rows, k);
  Eigen::VectorXd spread_target(2 * rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& xi = data.x[static_cast<std::size_t>(i)];
    const auto& yi = data.y[static_cast<std::size_t>(i)];
    center_design(i, 0) = 1.0;
    spread_design(i, 0) = 1.0;
    spread_design(rows + i, 0) = 1.0;
    for (Eigen::Index j = 1; j < k; ++j) {
      const auto& v = xi[static_cast<std::size_t>(j - 1)];
      center_design(i, j) = v.m();
      spread_design(i, j) = v.l();
      spread_design(rows + i, j) = v.r();
    }
    spread_target(i) = yi.l();
    spread_target(rows + i) = yi.r();
  }
  const Eigen::VectorXd a = detail::solve_ols(center_design, detail::centers_of(data.y));
  const Eigen::VectorXd c = detail::nnls(spread_design, spread_target);
  return {{a.data(), a.data() + a.size()}, {c.data(), c.data() + c.size()}};
}

}  // namespace fuzzyshrink

#endif  // FUZZYSHRINK_REGRESSION_HPP
