#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "toricvar/error.hpp"

namespace toricvar {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;
// Sorted, 0-based index subsets of {0, ..., d-1}.
using IndexSet = std::vector<std::size_t>;

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts "p", "-p", "p/q" with q > 0. Anything that looks like a float is rejected.
inline Rational parse_rational(std::string_view text) {
  auto bad = [&] {
    return Error(ErrorCode::InvalidInput, "not an exact rational: '" + std::string(text) + "'");
  };
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  std::size_t digits = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos, ++digits;
  if (digits == 0) throw bad();
  if (pos < text.size()) {
    if (text[pos] != '/') throw bad();
    ++pos;
    std::size_t den_digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos, ++den_digits;
    if (den_digits == 0 || pos != text.size()) throw bad();
  }
  std::string s(text);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw bad();
  if (q.get_den() == 0) throw Error(ErrorCode::InvalidInput, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

inline Integer parse_integer(std::string_view text) {
  Rational q = parse_rational(text);
  if (q.get_den() != 1) {
    throw Error(ErrorCode::InvalidInput, "expected an integer, got '" + std::string(text) + "'");
  }
  return q.get_num();
}

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

template <class T>
Rational dot(const std::vector<T>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

inline Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

inline Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

inline bool is_primitive(const IntVector& v) { return content(v) == 1; }

inline bool is_zero(const RatVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

// Smallest positive integer multiple of v with coprime entries; zero stays zero.
inline IntVector primitive_multiple(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x.get_num() * (l / x.get_den()));
  Integer g = content(out);
  if (g != 0)
    for (auto& x : out) x /= g;
  return out;
}

// Flip sign so the first nonzero entry is positive.
inline IntVector canonical_sign(IntVector v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

inline RatVector add(const RatVector& a, const RatVector& b) {
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline RatVector sub(const RatVector& a, const RatVector& b) {
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline RatVector scale(const Rational& s, const RatVector& a) {
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

// Weighted sum of generators; every generator has length `dim`.
template <class Vec>
RatVector combine(const RatVector& coefficients, const std::vector<Vec>& gens, std::size_t dim) {
  RatVector out(dim, Rational(0));
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t k = 0; k < dim; ++k) out[k] += coefficients[j] * Rational(gens[j][k]);
  return out;
}

inline IndexSet complement(const IndexSet& s, std::size_t d) {
  IndexSet out;
  std::size_t j = 0;
  for (std::size_t i = 0; i < d; ++i) {
    if (j < s.size() && s[j] == i) {
      ++j;
      continue;
    }
    out.push_back(i);
  }
  return out;
}

// Calls f(subset) for every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  IndexSet idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(static_cast<const IndexSet&>(idx));
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace toricvar
