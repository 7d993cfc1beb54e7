#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "toricvar/error.hpp"
#include "toricvar/exactla.hpp"
#include "toricvar/matrix.hpp"
#include "toricvar/numeric.hpp"

namespace toricvar {

// Ray data of a fan: d primitive vectors u_i in Z^n spanning Q^n.
struct FanInput {
  std::size_t n = 0;
  std::vector<IntVector> u;

  std::size_t d() const { return u.size(); }

  friend bool operator==(const FanInput&, const FanInput&) = default;
};

// Quotient data of the fan map pi: Z^d -> Z^n. `kernel` is a saturated basis
// theta_1..theta_m of ker(pi); weights[i][k] = theta_k[i] is the image of the i-th
// coordinate functional in m*, written in the dual basis.
struct QuotientData {
  FanInput fan;
  std::size_t m_rank = 0;
  std::vector<IntVector> kernel;
  std::vector<IntVector> weights;

  std::size_t d() const { return fan.d(); }
  std::size_t n() const { return fan.n; }

  friend bool operator==(const QuotientData&, const QuotientData&) = default;
};

struct RegularityFlags {
  bool regular_fan = true;
  std::vector<IndexSet> notes;  // offending n-subsets (determinant not +-1)

  friend bool operator==(const RegularityFlags&, const RegularityFlags&) = default;
};

// n x d matrix whose columns are the u_i.
inline IntMatrix fan_matrix(const FanInput& fan) { return IntMatrix::from_columns(fan.u, fan.n); }

// m x d matrix whose columns are the weights a_i.
inline RatMatrix weight_matrix(const QuotientData& q) {
  return RatMatrix::from_columns(q.weights, q.m_rank);
}

// Sum of lift_i * a_i.
inline RatVector moment_value(const QuotientData& q, const RatVector& lift) {
  if (lift.size() != q.d()) throw Error(ErrorCode::LengthMismatch, "lift length differs from d");
  return combine(lift, q.weights, q.m_rank);
}

namespace detail {

// Builds quotient data without the primitivity check; used for the induced
// quotients on walls, whose rays need not be primitive in degenerate situations.
inline QuotientData quotient_from_rays(FanInput fan) {
  QuotientData q;
  q.kernel = kernel_basis(fan_matrix(fan));
  q.m_rank = q.kernel.size();
  q.weights.assign(fan.d(), IntVector(q.m_rank));
  for (std::size_t i = 0; i < fan.d(); ++i)
    for (std::size_t k = 0; k < q.m_rank; ++k) q.weights[i][k] = q.kernel[k][i];
  q.fan = std::move(fan);
  return q;
}

}  // namespace detail

inline void validate(const FanInput& fan) {
  if (fan.n == 0) throw Error(ErrorCode::InvalidInput, "n must be positive");
  if (fan.d() < fan.n) throw Error(ErrorCode::RankDeficientFan, "fewer rays than the dimension n");
  for (std::size_t i = 0; i < fan.d(); ++i) {
    if (fan.u[i].size() != fan.n)
      throw Error(ErrorCode::LengthMismatch, "ray " + std::to_string(i + 1) + " has wrong length");
    if (!is_primitive(fan.u[i]))
      throw Error(ErrorCode::NonPrimitiveGenerator, "ray " + std::to_string(i + 1) + " is not primitive");
  }
}

inline QuotientData build_quotient(const FanInput& fan) {
  validate(fan);
  return detail::quotient_from_rays(fan);
}

// Exhaustive determinant check over all n-subsets of rays.
inline RegularityFlags check_regular_fan(const FanInput& fan) {
  RegularityFlags flags;
  for_each_combination(fan.d(), fan.n, [&](const IndexSet& s) {
    IntMatrix M(fan.n, fan.n);
    for (std::size_t c = 0; c < s.size(); ++c)
      for (std::size_t r = 0; r < fan.n; ++r) M(r, c) = fan.u[s[c]][r];
    Integer det = determinant(M);
    if (det != 0 && abs(det) != 1) {
      flags.regular_fan = false;
      flags.notes.push_back(s);
    }
  });
  return flags;
}

}  // namespace toricvar
