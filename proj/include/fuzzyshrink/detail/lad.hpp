#ifndef FUZZYSHRINK_DETAIL_LAD_HPP
#define FUZZYSHRINK_DETAIL_LAD_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "fuzzyshrink/errors.hpp"

namespace fuzzyshrink::detail {

// Dense tableau simplex for  min c^T x  s.t.  A x = b, x >= 0,  started from a
// caller-supplied feasible basis whose columns are unit vectors in A (b >= 0).
// Bland's rule keeps the highly degenerate LAD programs from cycling.
class TableauSimplex {
 public:
  TableauSimplex(Eigen::MatrixXd a, Eigen::VectorXd b, Eigen::VectorXd c, std::vector<Eigen::Index> basis)
      : a0_(a), b0_(b), tableau_(std::move(a)), rhs_(std::move(b)), cost_(std::move(c)), basis_(std::move(basis)) {}

  Eigen::VectorXd solve() {
    const Eigen::Index m = tableau_.rows();
    const Eigen::Index n = tableau_.cols();
    const double eps = 1e-11 * std::max(1.0, tableau_.cwiseAbs().maxCoeff());

    const std::size_t max_iter = 200 * static_cast<std::size_t>(m + n) + 1000;
    for (std::size_t iter = 0;; ++iter) {
      if (iter > max_iter) throw InternalError("simplex iteration limit reached");
      Eigen::VectorXd cb(m);
      for (Eigen::Index i = 0; i < m; ++i) cb(i) = cost_(basis_[static_cast<std::size_t>(i)]);
      const Eigen::RowVectorXd reduced = cost_.transpose() - cb.transpose() * tableau_;

      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (reduced(j) < -eps && !is_basic(j)) {
          enter = j;
          break;
        }
      }
      if (enter < 0) break;

      Eigen::Index leave = -1;
      double best_ratio = 0.0;
      for (Eigen::Index i = 0; i < m; ++i) {
        const double piv = tableau_(i, enter);
        if (piv > eps) {
          const double ratio = rhs_(i) / piv;
          if (leave < 0 || ratio < best_ratio - eps ||
              (std::abs(ratio - best_ratio) <= eps &&
               basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)])) {
            leave = i;
            best_ratio = ratio;
          }
        }
      }
      if (leave < 0) throw SingularDesignError("linear program is unbounded");
      pivot(leave, enter);
    }

    // Recompute basic values from the original system to shed accumulated pivot error.
    Eigen::MatrixXd basis_matrix(m, m);
    for (Eigen::Index i = 0; i < m; ++i) basis_matrix.col(i) = a0_.col(basis_[static_cast<std::size_t>(i)]);
    const Eigen::VectorXd xb = basis_matrix.fullPivLu().solve(b0_);
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    for (Eigen::Index i = 0; i < m; ++i) x(basis_[static_cast<std::size_t>(i)]) = std::max(0.0, xb(i));
    return x;
  }

 private:
  bool is_basic(Eigen::Index j) const {
    for (auto k : basis_) {
      if (k == j) return true;
    }
    return false;
  }

  void pivot(Eigen::Index row, Eigen::Index col) {
    const double p = tableau_(row, col);
    tableau_.row(row) /= p;
    rhs_(row) /= p;
    for (Eigen::Index i = 0; i < tableau_.rows(); ++i) {
      if (i == row) continue;
      const double f = tableau_(i, col);
      if (f != 0.0) {
        tableau_.row(i) -= f * tableau_.row(row);
        rhs_(i) -= f * rhs_(row);
      }
    }
    basis_[static_cast<std::size_t>(row)] = col;
  }

  Eigen::MatrixXd a0_;
  Eigen::VectorXd b0_;
  Eigen::MatrixXd tableau_;
  Eigen::VectorXd rhs_;
  Eigen::VectorXd cost_;
  std::vector<Eigen::Index> basis_;
};

/// Least absolute deviations: argmin_beta sum_i |y_i - (D beta)_i|.
/// Coefficients flagged in `nonnegative` are constrained to be >= 0; the rest are free.
///
/// LP form: D(beta+ - beta-) + u - v = y with u, v >= 0, minimising sum(u + v).
inline Eigen::VectorXd least_absolute_deviations(const Eigen::MatrixXd& design, const Eigen::VectorXd& y,
                                                 const std::vector<bool>& nonnegative) {
  const Eigen::Index n = design.rows();
  const Eigen::Index k = design.cols();
  if (y.size() != n || static_cast<Eigen::Index>(nonnegative.size()) != k) {
    throw DomainError("lad: dimension mismatch");
  }
  // Column layout: [beta+ (k) | beta- (free ones) | u (n) | v (n)]
  std::vector<Eigen::Index> neg_col(static_cast<std::size_t>(k), -1);
  Eigen::Index cols = k;
  for (Eigen::Index j = 0; j < k; ++j) {
    if (!nonnegative[static_cast<std::size_t>(j)]) neg_col[static_cast<std::size_t>(j)] = cols++;
  }
  const Eigen::Index u0 = cols;
  const Eigen::Index v0 = cols + n;
  cols += 2 * n;

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, cols);
  Eigen::VectorXd b(n);
  Eigen::VectorXd c = Eigen::VectorXd::Zero(cols);
  c.segment(u0, 2 * n).setOnes();
  std::vector<Eigen::Index> basis(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    const double sign = y(i) < 0.0 ? -1.0 : 1.0;
    for (Eigen::Index j = 0; j < k; ++j) {
      a(i, j) = sign * design(i, j);
      if (neg_col[static_cast<std::size_t>(j)] >= 0) a(i, neg_col[static_cast<std::size_t>(j)]) = -sign * design(i, j);
    }
    a(i, u0 + i) = sign;
    a(i, v0 + i) = -sign;
    b(i) = sign * y(i);
    basis[static_cast<std::size_t>(i)] = sign > 0.0 ? u0 + i : v0 + i;
  }

  const Eigen::VectorXd x = TableauSimplex(a, b, c, std::move(basis)).solve();
  Eigen::VectorXd beta(k);
  for (Eigen::Index j = 0; j < k; ++j) {
    beta(j) = x(j);
    if (neg_col[static_cast<std::size_t>(j)] >= 0) beta(j) -= x(neg_col[static_cast<std::size_t>(j)]);
  }
  return beta;
}

}  // namespace fuzzyshrink::detail

#endif  // FUZZYSHRINK_DETAIL_LAD_HPP
