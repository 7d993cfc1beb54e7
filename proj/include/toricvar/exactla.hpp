#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "toricvar/error.hpp"
#include "toricvar/matrix.hpp"
#include "toricvar/numeric.hpp"

namespace toricvar {

struct SmithForm {
  IntMatrix U;  // unimodular, rows x rows
  IntMatrix D;  // diagonal, d1 | d2 | ..., nonnegative
  IntMatrix V;  // unimodular, cols x cols
};

// U * A * V = D. Pivot: smallest nonzero |entry| in the active block, ties by lowest
// (row, col), so results are reproducible.
inline SmithForm smith_normal_form(const IntMatrix& A) {
  const std::size_t rows = A.rows(), cols = A.cols();
  SmithForm f{IntMatrix::identity(rows), A, IntMatrix::identity(cols)};
  IntMatrix& D = f.D;
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (D(i, j) == 0) continue;
          if (pi == rows || abs(D(i, j)) < abs(D(pi, pj))) pi = i, pj = j;
        }
      if (pi == rows) return f;  // remaining block is zero

      D.swap_rows(t, pi);
      f.U.swap_rows(t, pi);
      D.swap_cols(t, pj);
      f.V.swap_cols(t, pj);

      bool cleared = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (D(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        D.add_row(i, t, -q);
        f.U.add_row(i, t, -q);
        if (D(i, t) != 0) cleared = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (D(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        D.add_col(j, t, -q);
        f.V.add_col(j, t, -q);
        if (D(t, j) != 0) cleared = false;
      }
      if (!cleared) continue;

      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (D(i, j) % D(t, t) != 0) {
            D.add_row(t, i, Integer(1));
            f.U.add_row(t, i, Integer(1));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      f.U.negate_row(t);
    }
  }
  return f;
}

// Fraction-free (Bareiss) determinant.
inline Integer determinant(IntMatrix M) {
  const std::size_t n = M.rows();
  if (n == 0) return 1;
  Integer prev = 1;
  int sgn_flip = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && M(p, k) == 0) ++p;
      if (p == n) return 0;
      M.swap_rows(k, p);
      sgn_flip = -sgn_flip;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = M(i, j) * M(k, k) - M(i, k) * M(k, j);
        M(i, j) = v / prev;  // exact by Sylvester's identity
      }
    prev = M(k, k);
  }
  return sgn_flip * M(n - 1, n - 1);
}

struct RowEchelon {
  RatMatrix reduced;               // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

inline RowEchelon rref(RatMatrix M) {
  RowEchelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
    std::size_t p = r;
    while (p < M.rows() && M(p, c) == 0) ++p;
    if (p == M.rows()) continue;
    M.swap_rows(r, p);
    Rational inv = 1 / M(r, c);
    for (std::size_t j = 0; j < M.cols(); ++j) M(r, j) *= inv;
    for (std::size_t i = 0; i < M.rows(); ++i) {
      if (i == r || M(i, c) == 0) continue;
      Rational f = -M(i, c);
      M.add_row(i, r, f);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(M);
  return e;
}

inline std::size_t rank(const RatMatrix& M) { return rref(M).pivots.size(); }
inline std::size_t rank(const IntMatrix& M) { return rank(to_rational(M)); }

template <class Vec>
std::size_t rank_of_vectors(const std::vector<Vec>& vs, std::size_t dim) {
  return rank(RatMatrix::from_rows(vs, dim));
}

// Basis of the rational null space, one vector per free column.
inline std::vector<RatVector> nullspace(const RatMatrix& A) {
  RowEchelon e = rref(A);
  std::vector<bool> is_pivot(A.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < A.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(A.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// One exact solution of A x = b with zeros in the non-pivot positions, or nullopt.
inline std::optional<RatVector> solve_particular(const RatMatrix& A, const RatVector& b) {
  if (b.size() != A.rows()) throw Error(ErrorCode::LengthMismatch, "right-hand side length");
  RatMatrix aug(A.rows(), A.cols() + 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
    aug(i, A.cols()) = b[i];
  }
  RowEchelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == A.cols()) return std::nullopt;
  RatVector x(A.cols(), Rational(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, A.cols());
  return x;
}

inline std::optional<RatVector> solve_particular(const IntMatrix& A, const RatVector& b) {
  return solve_particular(to_rational(A), b);
}

// Row-style Hermite normal form of the lattice spanned by the rows of M: echelon,
// positive pivots, entries above each pivot reduced into [0, pivot). Zero rows dropped.
inline IntMatrix hermite_normal_form(IntMatrix M) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
    while (true) {
      std::size_t p = M.rows();
      for (std::size_t i = r; i < M.rows(); ++i) {
        if (M(i, c) == 0) continue;
        if (p == M.rows() || abs(M(i, c)) < abs(M(p, c))) p = i;
      }
      if (p == M.rows()) break;
      M.swap_rows(r, p);
      bool done = true;
      for (std::size_t i = r + 1; i < M.rows(); ++i) {
        if (M(i, c) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), M(i, c).get_mpz_t(), M(r, c).get_mpz_t());
        M.add_row(i, r, -q);
        if (M(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (M(r, c) == 0) continue;
    if (M(r, c) < 0) M.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), M(i, c).get_mpz_t(), M(r, c).get_mpz_t());
      if (q != 0) M.add_row(i, r, -q);
    }
    ++r;
  }
  IntMatrix out(r, M.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) out(i, j) = M(i, j);
  return out;
}

// Canonical basis of a lattice given by spanning rows: Hermite form taken with the
// coordinate order reversed, so pivots sit on the trailing coordinates and basis
// vector k carries the k-th trailing pivot. For kernels of fan maps this reproduces
// the "free trailing coordinates" bases used in hand computations.
inline std::vector<IntVector> canonical_lattice_basis(const std::vector<IntVector>& rows, std::size_t dim) {
  IntMatrix M(rows.size(), dim);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) M(i, dim - 1 - j) = rows[i][j];
  IntMatrix H = hermite_normal_form(M);
  std::vector<IntVector> basis;
  for (std::size_t i = H.rows(); i-- > 0;) {
    IntVector v(dim);
    for (std::size_t j = 0; j < dim; ++j) v[j] = H(i, dim - 1 - j);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Saturated basis of ker(A) ∩ Z^cols, canonicalized; no rank requirement.
inline std::vector<IntVector> lattice_kernel(const IntMatrix& A) {
  SmithForm f = smith_normal_form(A);
  std::size_t r = 0;
  while (r < std::min(A.rows(), A.cols()) && f.D(r, r) != 0) ++r;
  std::vector<IntVector> raw;
  for (std::size_t j = r; j < A.cols(); ++j) raw.push_back(f.V.column(j));
  return canonical_lattice_basis(raw, A.cols());
}

// Lattice basis of ker(A) for a full-row-rank A (a fan map); count = cols - rows.
inline std::vector<IntVector> kernel_basis(const IntMatrix& A) {
  if (rank(A) < A.rows()) {
    throw Error(ErrorCode::RankDeficientFan, "fan map has rank below its row count");
  }
  return lattice_kernel(A);
}

// Nonzero diagonal entries of the Smith form.
inline std::vector<Integer> invariant_factors(const IntMatrix& A) {
  SmithForm f = smith_normal_form(A);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(A.rows(), A.cols()); ++i)
    if (f.D(i, i) != 0) out.push_back(f.D(i, i));
  return out;
}

// Primitive integer normal (canonical sign) of the hyperplane spanned by `vectors`
// in Q^dim. Requires rank(vectors) == dim - 1.
template <class Vec>
IntVector hyperplane_normal(const std::vector<Vec>& vectors, std::size_t dim) {
  std::vector<RatVector> ns = nullspace(RatMatrix::from_rows(vectors, dim));
  assert(ns.size() == 1);
  return canonical_sign(primitive_multiple(ns.front()));
}

}  // namespace toricvar
