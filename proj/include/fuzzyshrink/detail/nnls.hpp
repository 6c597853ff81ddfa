#ifndef FUZZYSHRINK_DETAIL_NNLS_HPP
#define FUZZYSHRINK_DETAIL_NNLS_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "fuzzyshrink/errors.hpp"

namespace fuzzyshrink::detail {

namespace nnls_impl {

// Least squares on the columns flagged in `passive`; other entries of the result are zero.
inline Eigen::VectorXd solve_passive(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                                     const std::vector<bool>& passive) {
  std::vector<Eigen::Index> cols;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    if (passive[static_cast<std::size_t>(j)]) cols.push_back(j);
  }
  Eigen::VectorXd z = Eigen::VectorXd::Zero(a.cols());
  if (cols.empty()) return z;
  Eigen::MatrixXd sub(a.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) sub.col(static_cast<Eigen::Index>(k)) = a.col(cols[k]);
  const Eigen::VectorXd zs = sub.colPivHouseholderQr().solve(b);
  for (std::size_t k = 0; k < cols.size(); ++k) z(cols[k]) = zs(static_cast<Eigen::Index>(k));
  return z;
}

}  // namespace nnls_impl

/// Lawson-Hanson active-set solver for min ||A x - b||_2 subject to x >= 0.
inline Eigen::VectorXd nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  const Eigen::Index n = a.cols();
  if (a.rows() != b.size()) throw DomainError("nnls: row count mismatch");
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  if (n == 0) return x;

  const double tol = 10.0 * std::numeric_limits<double>::epsilon() *
                     std::max<double>(1.0, a.cwiseAbs().colwise().sum().maxCoeff()) *
                     static_cast<double>(std::max(a.rows(), n));
  std::vector<bool> passive(static_cast<std::size_t>(n), false);
  std::vector<bool> rejected(static_cast<std::size_t>(n), false);
  Eigen::VectorXd w = a.transpose() * (b - a * x);

  const int max_outer = static_cast<int>(3 * n + 10);
  for (int outer = 0; outer < max_outer; ++outer) {
    Eigen::Index t = -1;
    double best = tol;
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto js = static_cast<std::size_t>(j);
      if (!passive[js] && !rejected[js] && w(j) > best) {
        best = w(j);
        t = j;
      }
    }
    if (t < 0) break;
    passive[static_cast<std::size_t>(t)] = true;

    Eigen::VectorXd z = nnls_impl::solve_passive(a, b, passive);
    if (z(t) <= 0.0) {
      // Column adds nothing in the positive direction (dependent on the passive set).
      passive[static_cast<std::size_t>(t)] = false;
      rejected[static_cast<std::size_t>(t)] = true;
      continue;
    }

    for (int inner = 0; inner < 3 * n + 10; ++inner) {
      bool feasible = true;
      double alpha = std::numeric_limits<double>::infinity();
      for (Eigen::Index j = 0; j < n; ++j) {
        if (passive[static_cast<std::size_t>(j)] && z(j) <= 0.0) {
          feasible = false;
          alpha = std::min(alpha, x(j) / (x(j) - z(j)));
        }
      }
      if (feasible) break;
      x += alpha * (z - x);
      for (Eigen::Index j = 0; j < n; ++j) {
        if (passive[static_cast<std::size_t>(j)] && x(j) <= tol) {
          passive[static_cast<std::size_t>(j)] = false;
          x(j) = 0.0;
        }
      }
      z = nnls_impl::solve_passive(a, b, passive);
    }
    x = z;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!passive[static_cast<std::size_t>(j)]) x(j) = 0.0;
    }
    w = a.transpose() * (b - a * x);
    std::fill(rejected.begin(), rejected.end(), false);
  }
  return x.cwiseMax(0.0);
}

}  // namespace fuzzyshrink::detail

#endif  // FUZZYSHRINK_DETAIL_NNLS_HPP
