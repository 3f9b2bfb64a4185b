#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace clumplab {

enum class Direction { minimize, maximize };
enum class Sense { less_equal, greater_equal, equal };
enum class LPStatus { optimal, unbounded, infeasible };

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <class Scalar>
struct LinearProgram {
  Direction direction = Direction::maximize;
  DenseVector<Scalar> objective;
  DenseMatrix<Scalar> matrix;
  DenseVector<Scalar> rhs;
  std::vector<Sense> senses;
  // Lower bound per variable; std::nullopt leaves the variable free.
  std::vector<std::optional<Scalar>> lower;

  Eigen::Index variables() const { return objective.size(); }
  Eigen::Index constraints() const { return rhs.size(); }

  void validate() const {
    if (matrix.rows() != rhs.size() || matrix.cols() != objective.size() ||
        static_cast<Eigen::Index>(senses.size()) != rhs.size() ||
        static_cast<Eigen::Index>(lower.size()) != objective.size()) {
      throw std::invalid_argument("inconsistent linear program dimensions");
    }
  }
};

template <class Scalar>
struct LPResult {
  LPStatus status = LPStatus::infeasible;
  Scalar value{0};
  DenseVector<Scalar> x;
  // Multipliers per constraint; value == y·b + (c - Aᵀy)·l at optimality.
  DenseVector<Scalar> y;
  Scalar dual_value{0};
  std::size_t pivots = 0;
};

// Solves the square system m·z = v exactly; returns std::nullopt when m is singular.
template <class Scalar>
std::optional<DenseVector<Scalar>> solve_exact(DenseMatrix<Scalar> m, DenseVector<Scalar> v) {
  const Eigen::Index n = m.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && m(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      std::swap(v(pivot), v(col));
    }
    const Scalar inv = Scalar(1) / m(col, col);
    m.row(col) *= inv;
    v(col) *= inv;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || m(r, col) == Scalar(0)) continue;
      const Scalar f = m(r, col);
      m.row(r) -= f * m.row(col);
      v(r) -= f * v(col);
    }
  }
  return v;
}

namespace detail {

// Dense tableau over the standard form max cᵀz, Mz = q, z >= 0, q >= 0.
template <class Scalar>
class Tableau {
 public:
  Tableau(DenseMatrix<Scalar> m, DenseVector<Scalar> q, std::vector<Eigen::Index> basis)
      : t_(m.rows() + 1, m.cols() + 1), basis_(std::move(basis)), banned_(m.cols(), false) {
    t_.setZero();
    t_.topLeftCorner(m.rows(), m.cols()) = m;
    t_.topRightCorner(m.rows(), 1) = q;
  }

  Eigen::Index rows() const { return t_.rows() - 1; }
  Eigen::Index cols() const { return t_.cols() - 1; }
  const std::vector<Eigen::Index>& basis() const { return basis_; }
  const Scalar& at(Eigen::Index r, Eigen::Index c) const { return t_(r, c); }
  const Scalar& rhs(Eigen::Index r) const { return t_(r, cols()); }
  void ban(Eigen::Index col) { banned_[static_cast<std::size_t>(col)] = true; }
  std::size_t pivots() const { return pivots_; }

  void set_objective(const DenseVector<Scalar>& c) {
    objective_ = c;
    const Eigen::Index z = rows();
    t_.row(z).setZero();
    t_.row(z).head(cols()) = -c.transpose();
    for (Eigen::Index r = 0; r < rows(); ++r) {
      const Scalar cb = c(basis_[static_cast<std::size_t>(r)]);
      if (cb != Scalar(0)) t_.row(z) += cb * t_.row(r);
    }
  }
  Scalar objective_value() const { return t_(rows(), cols()); }

  void pivot(Eigen::Index r, Eigen::Index c) {
    const Scalar inv = Scalar(1) / t_(r, c);
    t_.row(r) *= inv;
    for (Eigen::Index i = 0; i < t_.rows(); ++i) {
      if (i == r || t_(i, c) == Scalar(0)) continue;
      const Scalar f = t_(i, c);
      t_.row(i) -= f * t_.row(r);
    }
    basis_[static_cast<std::size_t>(r)] = c;
    ++pivots_;
  }

  // Bland's rule. Returns false if unbounded.
  bool optimize() {
    while (true) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < cols(); ++j) {
        if (!banned_[static_cast<std::size_t>(j)] && t_(rows(), j) < Scalar(0)) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      Eigen::Index leave = -1;
      Scalar best{0};
      for (Eigen::Index r = 0; r < rows(); ++r) {
        if (t_(r, enter) <= Scalar(0)) continue;
        const Scalar ratio = rhs(r) / t_(r, enter);
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[static_cast<std::size_t>(r)] < basis_[static_cast<std::size_t>(leave)])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  void drop_row(Eigen::Index r) {
    DenseMatrix<Scalar> next(t_.rows() - 1, t_.cols());
    next.topRows(r) = t_.topRows(r);
    next.bottomRows(t_.rows() - 1 - r) = t_.bottomRows(t_.rows() - 1 - r);
    t_ = std::move(next);
    basis_.erase(basis_.begin() + r);
  }

 private:
  DenseMatrix<Scalar> t_;
  std::vector<Eigen::Index> basis_;
  std::vector<bool> banned_;
  DenseVector<Scalar> objective_;
  std::size_t pivots_ = 0;
};

}  // namespace detail

template <class Scalar>
LPResult<Scalar> simplex_solve(const LinearProgram<Scalar>& lp) {
  lp.validate();
  const Eigen::Index m = lp.constraints();
  const Eigen::Index n = lp.variables();
  const Scalar zero(0), one(1);
  const Scalar sign = lp.direction == Direction::maximize ? one : -one;

  // Column map: shifted variables get one column, free variables a +/- pair.
  std::vector<Eigen::Index> plus(static_cast<std::size_t>(n)), minus(static_cast<std::size_t>(n), -1);
  DenseVector<Scalar> shift = DenseVector<Scalar>::Zero(n);
  Eigen::Index width = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto& lo = lp.lower[static_cast<std::size_t>(j)];
    plus[static_cast<std::size_t>(j)] = width++;
    if (lo) {
      shift(j) = *lo;
    } else {
      minus[static_cast<std::size_t>(j)] = width++;
    }
  }
  const Eigen::Index structural = width;

  DenseVector<Scalar> q = lp.rhs - lp.matrix * shift;
  std::vector<Sense> senses = lp.senses;
  std::vector<Scalar> flip(static_cast<std::size_t>(m), one);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (q(i) < zero) {
      flip[static_cast<std::size_t>(i)] = -one;
      q(i) = -q(i);
      Sense& s = senses[static_cast<std::size_t>(i)];
      if (s == Sense::less_equal) {
        s = Sense::greater_equal;
      } else if (s == Sense::greater_equal) {
        s = Sense::less_equal;
      }
    }
  }
  Eigen::Index slacks = 0, artificials = 0;
  for (Sense s : senses) {
    slacks += s == Sense::equal ? 0 : 1;
    artificials += s == Sense::less_equal ? 0 : 1;
  }
  const Eigen::Index total = structural + slacks + artificials;
  DenseMatrix<Scalar> std_m = DenseMatrix<Scalar>::Zero(m, total);
  std::vector<Eigen::Index> basis(static_cast<std::size_t>(m));
  std::vector<bool> is_artificial(static_cast<std::size_t>(total), false);
  Eigen::Index next_slack = structural, next_art = structural + slacks;
  for (Eigen::Index i = 0; i < m; ++i) {
    const Scalar f = flip[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < n; ++j) {
      const Scalar a = f * lp.matrix(i, j);
      std_m(i, plus[static_cast<std::size_t>(j)]) = a;
      if (minus[static_cast<std::size_t>(j)] >= 0) std_m(i, minus[static_cast<std::size_t>(j)]) = -a;
    }
    const Sense s = senses[static_cast<std::size_t>(i)];
    if (s == Sense::less_equal) {
      std_m(i, next_slack) = one;
      basis[static_cast<std::size_t>(i)] = next_slack++;
    } else {
      if (s == Sense::greater_equal) std_m(i, next_slack++) = -one;
      std_m(i, next_art) = one;
      is_artificial[static_cast<std::size_t>(next_art)] = true;
      basis[static_cast<std::size_t>(i)] = next_art++;
    }
  }

  LPResult<Scalar> result;
  detail::Tableau<Scalar> tab(std_m, q, basis);
  std::vector<Eigen::Index> row_origin(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) row_origin[static_cast<std::size_t>(i)] = i;

  if (artificials > 0) {
    DenseVector<Scalar> phase1 = DenseVector<Scalar>::Zero(total);
    for (Eigen::Index j = 0; j < total; ++j) {
      if (is_artificial[static_cast<std::size_t>(j)]) phase1(j) = -one;
    }
    tab.set_objective(phase1);
    tab.optimize();
    if (tab.objective_value() < zero) {
      result.status = LPStatus::infeasible;
      result.pivots = tab.pivots();
      return result;
    }
    for (Eigen::Index r = tab.rows() - 1; r >= 0; --r) {
      if (!is_artificial[static_cast<std::size_t>(tab.basis()[static_cast<std::size_t>(r)])]) continue;
      Eigen::Index col = -1;
      for (Eigen::Index j = 0; j < total && col < 0; ++j) {
        if (!is_artificial[static_cast<std::size_t>(j)] && tab.at(r, j) != zero) col = j;
      }
      if (col >= 0) {
        tab.pivot(r, col);
      } else {
        tab.drop_row(r);
        row_origin.erase(row_origin.begin() + r);
      }
    }
    for (Eigen::Index j = 0; j < total; ++j) {
      if (is_artificial[static_cast<std::size_t>(j)]) tab.ban(j);
    }
  }

  DenseVector<Scalar> cost = DenseVector<Scalar>::Zero(total);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Scalar c = sign * lp.objective(j);
    cost(plus[static_cast<std::size_t>(j)]) = c;
    if (minus[static_cast<std::size_t>(j)] >= 0) cost(minus[static_cast<std::size_t>(j)]) = -c;
  }
  tab.set_objective(cost);
  const bool bounded = tab.optimize();
  result.pivots = tab.pivots();
  if (!bounded) {
    result.status = LPStatus::unbounded;
    return result;
  }

  DenseVector<Scalar> z = DenseVector<Scalar>::Zero(total);
  for (Eigen::Index r = 0; r < tab.rows(); ++r) z(tab.basis()[static_cast<std::size_t>(r)]) = tab.rhs(r);
  result.x = shift;
  for (Eigen::Index j = 0; j < n; ++j) {
    result.x(j) += z(plus[static_cast<std::size_t>(j)]);
    if (minus[static_cast<std::size_t>(j)] >= 0) result.x(j) -= z(minus[static_cast<std::size_t>(j)]);
  }
  result.value = lp.objective.dot(result.x);

  // y solves yᵀB = c_B over the surviving rows of the standardized system.
  const Eigen::Index kept = tab.rows();
  DenseMatrix<Scalar> bt(kept, kept);
  DenseVector<Scalar> cb(kept);
  for (Eigen::Index r = 0; r < kept; ++r) {
    const Eigen::Index col = tab.basis()[static_cast<std::size_t>(r)];
    cb(r) = cost(col);
    for (Eigen::Index i = 0; i < kept; ++i) bt(r, i) = std_m(row_origin[static_cast<std::size_t>(i)], col);
  }
  const auto y_std = solve_exact<Scalar>(bt, cb);
  if (!y_std) throw std::logic_error("optimal basis is singular");
  result.y = DenseVector<Scalar>::Zero(m);
  for (Eigen::Index i = 0; i < kept; ++i) {
    const Eigen::Index orig = row_origin[static_cast<std::size_t>(i)];
    result.y(orig) = sign * flip[static_cast<std::size_t>(orig)] * (*y_std)(i);
  }
  result.dual_value = result.y.dot(lp.rhs) + (lp.objective - lp.matrix.transpose() * result.y).dot(shift);
  if (result.dual_value != result.value) throw std::logic_error("strong duality check failed");
  result.status = LPStatus::optimal;
  return result;
}

// Vertices of {z : G z >= h}, each obtained from a nonsingular tight subsystem.
template <class Scalar>
std::vector<DenseVector<Scalar>> enumerate_vertices(const DenseMatrix<Scalar>& g, const DenseVector<Scalar>& h) {
  const Eigen::Index rows = g.rows(), dim = g.cols();
  std::vector<DenseVector<Scalar>> out;
  std::vector<Eigen::Index> pick(static_cast<std::size_t>(dim));
  auto consider = [&] {
    DenseMatrix<Scalar> sub(dim, dim);
    DenseVector<Scalar> rhs(dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
      sub.row(r) = g.row(pick[static_cast<std::size_t>(r)]);
      rhs(r) = h(pick[static_cast<std::size_t>(r)]);
    }
    const auto z = solve_exact<Scalar>(sub, rhs);
    if (!z) return;
    const DenseVector<Scalar> lhs = g * (*z);
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (lhs(r) < h(r)) return;
    }
    for (const auto& v : out) {
      if (v == *z) return;
    }
    out.push_back(*z);
  };
  auto recurse = [&](auto&& self, Eigen::Index depth, Eigen::Index start) -> void {
    if (depth == dim) {
      consider();
      return;
    }
    for (Eigen::Index r = start; r < rows; ++r) {
      pick[static_cast<std::size_t>(depth)] = r;
      self(self, depth + 1, r + 1);
    }
  };
  recurse(recurse, 0, 0);
  return out;
}

}  // namespace clumplab
