#pragma once

#include <random>
#include <vector>

#include "toricvar/quotient.hpp"

namespace fixtures {

using namespace toricvar;

// Projective line as a quotient of C^3.
inline FanInput circle_fan() { return {1, {{-1}, {1}, {1}}}; }

// The Hirzebruch surface fan f1, f2, -f1-f2, -f2.
inline FanInput hirzebruch_fan() { return {2, {{1, 0}, {0, 1}, {-1, -1}, {0, -1}}}; }

// Same fan with u2 reversed; the positive cone becomes all of m*.
inline FanInput reoriented_fan() { return {2, {{1, 0}, {0, -1}, {-1, -1}, {0, -1}}}; }

// C^2 with the diagonal circle removed: u = (1, -1).
inline FanInput diagonal_fan() { return {1, {{1}, {-1}}}; }

inline RatVector rat(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Random rational point with small numerators and denominators.
inline RatVector random_point(std::mt19937& rng, std::size_t dim, int range, int den_max) {
  std::uniform_int_distribution<int> num(-range, range), den(1, den_max);
  RatVector p;
  for (std::size_t i = 0; i < dim; ++i) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    p.push_back(q);
  }
  return p;
}

}  // namespace fixtures
