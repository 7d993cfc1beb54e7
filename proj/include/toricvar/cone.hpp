#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "toricvar/lp.hpp"
#include "toricvar/numeric.hpp"

namespace toricvar {

enum class ConeMode { Nonnegative, StrictlyPositive };

struct ConeCertificate {
  RatVector coefficients;  // one per generator
  ConeMode mode = ConeMode::Nonnegative;

  friend bool operator==(const ConeCertificate&, const ConeCertificate&) = default;
};

// Exact check that the certificate satisfies its sign constraint and reproduces p.
template <class Vec>
bool verify_certificate(const ConeCertificate& cert, const RatVector& p, const std::vector<Vec>& gens) {
  if (cert.coefficients.size() != gens.size()) return false;
  for (const auto& c : cert.coefficients) {
    if (cert.mode == ConeMode::Nonnegative && c < 0) return false;
    if (cert.mode == ConeMode::StrictlyPositive && c <= 0) return false;
  }
  return combine(cert.coefficients, gens, p.size()) == p;
}

// Decides p ∈ cone(gens) (nonnegative mode) or p ∈ relint-style strictly positive span
// (every generator weighted > 0). The strict case maximizes a uniform lower bound t on
// all coefficients, capped at 1, and accepts iff the optimum is positive.
template <class Vec>
std::optional<ConeCertificate> cone_membership(const RatVector& p, const std::vector<Vec>& gens, ConeMode mode) {
  const std::size_t dim = p.size(), k = gens.size();
  for (const auto& g : gens)
    if (g.size() != dim) throw Error(ErrorCode::LengthMismatch, "generator dimension");

  LinearProgram lp;
  for (std::size_t j = 0; j < k; ++j) lp.add_variable(false);
  std::size_t t = 0;
  if (mode == ConeMode::StrictlyPositive) t = lp.add_variable(false);
  for (std::size_t r = 0; r < dim; ++r) {
    RatVector row(lp.variables(), Rational(0));
    for (std::size_t j = 0; j < k; ++j) row[j] = Rational(gens[j][r]);
    lp.add_constraint(row, LinearProgram::Sense::Equal, p[r]);
  }
  if (mode == ConeMode::StrictlyPositive) {
    for (std::size_t j = 0; j < k; ++j) {
      RatVector row(lp.variables(), Rational(0));
      row[j] = 1;
      row[t] = -1;
      lp.add_constraint(row, LinearProgram::Sense::AtLeast, Rational(0));
    }
    RatVector cap(lp.variables(), Rational(0));
    cap[t] = 1;
    lp.add_constraint(cap, LinearProgram::Sense::AtMost, Rational(1));
    lp.set_objective(cap);
  }
  LpResult res = lp.solve();
  if (res.status != LpStatus::Optimal) return std::nullopt;
  if (mode == ConeMode::StrictlyPositive && k > 0 && res.x[t] <= 0) return std::nullopt;
  ConeCertificate cert;
  cert.mode = mode;
  cert.coefficients.assign(res.x.begin(), res.x.begin() + static_cast<std::ptrdiff_t>(k));
  return cert;
}

// Does the half-open segment {from + s (to - from) : 0 < s <= 1} meet cone(gens)?
template <class Vec>
bool segment_meets_cone(const RatVector& from, const RatVector& to, const std::vector<Vec>& gens) {
  const std::size_t dim = from.size(), k = gens.size();
  LinearProgram lp;
  for (std::size_t j = 0; j < k; ++j) lp.add_variable(false);
  const std::size_t s = lp.add_variable(false);
  for (std::size_t r = 0; r < dim; ++r) {
    RatVector row(lp.variables(), Rational(0));
    for (std::size_t j = 0; j < k; ++j) row[j] = Rational(gens[j][r]);
    row[s] = from[r] - to[r];
    lp.add_constraint(row, LinearProgram::Sense::Equal, from[r]);
  }
  RatVector cap(lp.variables(), Rational(0));
  cap[s] = 1;
  lp.add_constraint(cap, LinearProgram::Sense::AtMost, Rational(1));
  lp.set_objective(cap);
  LpResult res = lp.solve();
  return res.status == LpStatus::Optimal && res.x[s] > 0;
}

// A signed linear constraint  sign * <normal, x>  > 0  on Q^dim.
struct SignedHyperplane {
  IntVector normal;
  int sign = 1;

  friend bool operator==(const SignedHyperplane&, const SignedHyperplane&) = default;
  friend auto operator<=>(const SignedHyperplane& a, const SignedHyperplane& b) {
    if (a.normal != b.normal) return a.normal < b.normal ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.sign <=> b.sign;
  }
};

// A point x with sign * <normal, x> >= 1 for every strict constraint and
// <e, x> = 0 for every equality, or nullopt if the open region is empty.
inline std::optional<RatVector> strict_point(std::size_t dim, const std::vector<SignedHyperplane>& strict,
                                             const std::vector<IntVector>& equalities = {}) {
  LinearProgram lp;
  for (std::size_t j = 0; j < dim; ++j) lp.add_variable(true);
  for (const auto& h : strict) {
    RatVector row(dim);
    for (std::size_t j = 0; j < dim; ++j) row[j] = Rational(h.sign * h.normal[j]);
    lp.add_constraint(row, LinearProgram::Sense::AtLeast, Rational(1));
  }
  for (const auto& e : equalities) lp.add_constraint(to_rational(e), LinearProgram::Sense::Equal, Rational(0));
  LpResult res = lp.solve();
  if (res.status != LpStatus::Optimal) return std::nullopt;
  return res.x;
}

}  // namespace toricvar
