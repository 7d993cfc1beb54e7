#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toricvar/matrix.hpp"
#include "toricvar/numeric.hpp"

namespace toricvar {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  RatVector x;
  Rational value;
};

namespace detail {

// Dense simplex tableau over Q. Rows 0..m-1 are constraints, the last row holds
// reduced costs of the (maximization) objective; the last column is the rhs.
class Tableau {
 public:
  Tableau(std::size_t constraints, std::size_t variables)
      : m_(constraints), n_(variables), t_(constraints + 1, variables + 1), basis_(constraints) {}

  Rational& at(std::size_t i, std::size_t j) { return t_(i, j); }
  Rational& rhs(std::size_t i) { return t_(i, n_); }
  Rational& cost(std::size_t j) { return t_(m_, j); }
  Rational& objective() { return t_(m_, n_); }
  std::vector<std::size_t>& basis() { return basis_; }
  std::size_t constraints() const { return m_; }

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / t_(r, c);
    for (std::size_t j = 0; j <= n_; ++j) t_(r, j) *= inv;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r || t_(i, c) == 0) continue;
      Rational f = -t_(i, c);
      t_.add_row(i, r, f);
    }
    basis_[r] = c;
  }

  // Maximizes over columns < `usable`. Bland's rule: lowest entering index with
  // negative reduced cost, lowest basic index among ratio ties.
  bool run(std::size_t usable) {
    while (true) {
      std::size_t enter = usable;
      for (std::size_t j = 0; j < usable; ++j)
        if (t_(m_, j) < 0) {
          enter = j;
          break;
        }
      if (enter == usable) return true;
      std::size_t leave = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_(i, enter) <= 0) continue;
        Rational ratio = t_(i, n_) / t_(i, enter);
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) return false;  // unbounded
      pivot(leave, enter);
    }
  }

  void drop_row(std::size_t r) {
    RatMatrix next(t_.rows() - 1, t_.cols());
    for (std::size_t i = 0, k = 0; i < t_.rows(); ++i) {
      if (i == r) continue;
      for (std::size_t j = 0; j < t_.cols(); ++j) next(k, j) = t_(i, j);
      ++k;
    }
    t_ = std::move(next);
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --m_;
  }

 private:
  std::size_t m_, n_;
  RatMatrix t_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

// maximize c.x  subject to  A x = b,  x >= 0.  Exact two-phase simplex.
inline LpResult maximize(const RatVector& c, const RatMatrix& A, const RatVector& b) {
  const std::size_t m = A.rows(), n = A.cols();
  detail::Tableau tab(m, n + m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) tab.at(i, j) = flip ? Rational(-A(i, j)) : A(i, j);
    tab.at(i, n + i) = 1;
    tab.rhs(i) = flip ? Rational(-b[i]) : b[i];
    tab.basis()[i] = n + i;
  }
  // Phase 1: maximize -(sum of artificials).
  for (std::size_t j = 0; j < n; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < m; ++i) s += tab.at(i, j);
    tab.cost(j) = -s;
  }
  {
    Rational s = 0;
    for (std::size_t i = 0; i < m; ++i) s += tab.rhs(i);
    tab.objective() = -s;
  }
  tab.run(n + m);
  LpResult result;
  if (tab.objective() != 0) return result;  // infeasible

  // Drive artificials out of the basis; rows that cannot pivot are redundant.
  for (std::size_t i = 0; i < tab.constraints();) {
    if (tab.basis()[i] < n) {
      ++i;
      continue;
    }
    std::size_t c = n;
    for (std::size_t j = 0; j < n; ++j)
      if (tab.at(i, j) != 0) {
        c = j;
        break;
      }
    if (c == n) {
      tab.drop_row(i);
      continue;
    }
    tab.pivot(i, c);
    ++i;
  }

  // Phase 2: reduced costs for the real objective.
  for (std::size_t j = 0; j < n + m; ++j) tab.cost(j) = j < n ? Rational(-c[j]) : Rational(0);
  tab.objective() = 0;
  for (std::size_t i = 0; i < tab.constraints(); ++i) {
    std::size_t bj = tab.basis()[i];
    Rational cb = bj < n ? c[bj] : Rational(0);
    if (cb == 0) continue;
    for (std::size_t j = 0; j < n + m; ++j) tab.cost(j) += cb * tab.at(i, j);
    tab.objective() += cb * tab.rhs(i);
  }
  if (!tab.run(n)) {
    result.status = LpStatus::Unbounded;
    return result;
  }
  result.status = LpStatus::Optimal;
  result.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < tab.constraints(); ++i)
    if (tab.basis()[i] < n) result.x[tab.basis()[i]] = tab.rhs(i);
  result.value = 0;
  for (std::size_t j = 0; j < n; ++j) result.value += c[j] * result.x[j];
  return result;
}

// Builder for small LPs with free and nonnegative variables, equalities and
// one-sided inequalities; lowered to the standard form above.
class LinearProgram {
 public:
  enum class Sense { Equal, AtLeast, AtMost };

  std::size_t add_variable(bool free) {
    free_.push_back(free);
    for (auto& row : rows_) row.emplace_back(0);
    objective_.emplace_back(0);
    return free_.size() - 1;
  }

  void add_constraint(const RatVector& coefficients, Sense sense, const Rational& rhs) {
    RatVector row = coefficients;
    row.resize(free_.size(), Rational(0));
    rows_.push_back(std::move(row));
    senses_.push_back(sense);
    rhs_.push_back(rhs);
  }

  void set_objective(const RatVector& c) {
    objective_ = c;
    objective_.resize(free_.size(), Rational(0));
  }

  std::size_t variables() const { return free_.size(); }

  // Returns the optimal point in the builder's variables (objective maximized).
  LpResult solve() const {
    // Column layout: each variable gets a + column, free ones also a - column,
    // then one slack per inequality.
    std::vector<std::size_t> pos(free_.size()), neg(free_.size(), 0);
    std::size_t cols = 0;
    for (std::size_t v = 0; v < free_.size(); ++v) {
      pos[v] = cols++;
      if (free_[v]) neg[v] = cols++;
    }
    std::vector<std::size_t> slack(rows_.size(), 0);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (senses_[i] != Sense::Equal) slack[i] = cols++;

    RatMatrix A(rows_.size(), cols);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      for (std::size_t v = 0; v < free_.size(); ++v) {
        A(i, pos[v]) = rows_[i][v];
        if (free_[v]) A(i, neg[v]) = -rows_[i][v];
      }
      if (senses_[i] == Sense::AtLeast) A(i, slack[i]) = -1;
      if (senses_[i] == Sense::AtMost) A(i, slack[i]) = 1;
    }
    RatVector c(cols, Rational(0));
    for (std::size_t v = 0; v < free_.size(); ++v) {
      c[pos[v]] = objective_[v];
      if (free_[v]) c[neg[v]] = -objective_[v];
    }
    LpResult std_result = maximize(c, A, rhs_);
    LpResult out;
    out.status = std_result.status;
    if (std_result.status != LpStatus::Optimal) return out;
    out.x.assign(free_.size(), Rational(0));
    for (std::size_t v = 0; v < free_.size(); ++v) {
      out.x[v] = std_result.x[pos[v]];
      if (free_[v]) out.x[v] -= std_result.x[neg[v]];
    }
    out.value = std_result.value;
    return out;
  }

 private:
  std::vector<bool> free_;
  std::vector<RatVector> rows_;
  std::vector<Sense> senses_;
  RatVector rhs_;
  RatVector objective_;
};

}  // namespace toricvar
