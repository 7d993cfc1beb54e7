#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "toricvar/arrangement.hpp"
#include "toricvar/chambers.hpp"
#include "toricvar/error.hpp"
#include "toricvar/hyperkahler.hpp"
#include "toricvar/numeric.hpp"
#include "toricvar/quotient.hpp"

namespace toricvar::svg {

// Round half up to `digits` decimals, computed exactly; trailing zeros dropped.
inline std::string decimal(const Rational& x, unsigned digits = 3) {
  Integer scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  Rational scaled = x * scale;
  Integer twice_num = 2 * scaled.get_num() + scaled.get_den();
  Integer den = 2 * scaled.get_den();
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), twice_num.get_mpz_t(), den.get_mpz_t());
  const bool negative = r < 0;
  if (negative) r = -r;
  std::string s = r.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  std::string whole = s.substr(0, s.size() - digits), frac = s.substr(s.size() - digits);
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = (negative ? "-" : "") + whole;
  if (!frac.empty()) out += "." + frac;
  return out == "-0" ? "0" : out;
}

struct Box {
  Rational xmin, ymin, xmax, ymax;
};

namespace detail {

inline const std::vector<std::string>& palette() {
  static const std::vector<std::string> colors{"#cfe2f3", "#f4cccc", "#d9ead3", "#fff2cc", "#d9d2e9", "#fce5cd"};
  return colors;
}

class Canvas {
 public:
  explicit Canvas(Box box, const std::string& title) : box_(std::move(box)) {
    Rational w = box_.xmax - box_.xmin, h = box_.ymax - box_.ymin;
    scale_ = Rational(480) / std::max(w, h);
    width_ = w * scale_;
    height_ = h * scale_;
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << decimal(width_) << "\" height=\""
         << decimal(height_) << "\" viewBox=\"0 0 " << decimal(width_) << " " << decimal(height_) << "\">\n"
         << "<title>" << title << "</title>\n"
         << "<metadata>clip-box " << to_string(box_.xmin) << " " << to_string(box_.ymin) << " "
         << to_string(box_.xmax) << " " << to_string(box_.ymax) << "</metadata>\n"
         << "<rect x=\"0\" y=\"0\" width=\"" << decimal(width_) << "\" height=\"" << decimal(height_)
         << "\" fill=\"white\"/>\n";
  }

  std::string X(const Rational& x) const { return decimal((x - box_.xmin) * scale_); }
  std::string Y(const Rational& y) const { return decimal((box_.ymax - y) * scale_); }
  Rational unit() const { return std::max(box_.xmax - box_.xmin, box_.ymax - box_.ymin); }
  const Box& box() const { return box_; }

  void polygon(const std::vector<RatVector>& pts, const std::string& fill) {
    if (pts.empty()) return;
    out_ << "<polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) out_ << (i ? " " : "") << X(pts[i][0]) << "," << Y(pts[i][1]);
    out_ << "\" fill=\"" << fill << "\" stroke=\"none\"/>\n";
  }
  void line(const RatVector& a, const RatVector& b, const std::string& stroke, const std::string& width) {
    out_ << "<line x1=\"" << X(a[0]) << "\" y1=\"" << Y(a[1]) << "\" x2=\"" << X(b[0]) << "\" y2=\"" << Y(b[1])
         << "\" stroke=\"" << stroke << "\" stroke-width=\"" << width << "\"/>\n";
  }
  void arrow(const RatVector& from, const RatVector& to, const std::string& stroke) {
    line(from, to, stroke, "1.5");
    out_ << "<circle cx=\"" << X(to[0]) << "\" cy=\"" << Y(to[1]) << "\" r=\"2.5\" fill=\"" << stroke << "\"/>\n";
  }
  void dot(const RatVector& p, const std::string& fill) {
    out_ << "<circle cx=\"" << X(p[0]) << "\" cy=\"" << Y(p[1]) << "\" r=\"3\" fill=\"" << fill << "\"/>\n";
  }
  void text(const RatVector& p, const std::string& s) {
    out_ << "<text x=\"" << X(p[0]) << "\" y=\"" << Y(p[1])
         << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" << s << "</text>\n";
  }
  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  Box box_;
  Rational scale_, width_, height_;
  std::ostringstream out_;
};

inline std::vector<HalfSpace> box_halfspaces(const Box& b) {
  return {{{1, 0}, -b.xmin}, {{-1, 0}, b.xmax}, {{0, 1}, -b.ymin}, {{0, -1}, b.ymax}};
}

// Vertices of a convex polygon in counterclockwise order around their average.
inline std::vector<RatVector> ccw(std::vector<RatVector> pts) {
  if (pts.size() < 3) return pts;
  RatVector c{0, 0};
  for (const auto& p : pts) c = add(c, p);
  c = scale(Rational(1, static_cast<unsigned long>(pts.size())), c);
  auto half = [&](const RatVector& p) {
    Rational dx = p[0] - c[0], dy = p[1] - c[1];
    return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
  };
  std::sort(pts.begin(), pts.end(), [&](const RatVector& a, const RatVector& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    Rational cross = (a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0]);
    return cross > 0;
  });
  return pts;
}

// Region {h >= 0 for h in hs} inside the box, as a polygon.
inline std::vector<RatVector> clipped_region(const std::vector<HalfSpace>& hs, const Box& box) {
  std::vector<HalfSpace> all = hs;
  for (auto& h : box_halfspaces(box)) all.push_back(h);
  Polytope P = polytope_from_halfspaces(2, all);
  return ccw(P.vertices);
}

// The part of the line <u, x> + c = 0 inside the box.
inline std::vector<RatVector> clipped_line(const IntVector& u, const Rational& c, const Box& box) {
  std::vector<RatVector> pts;
  auto add_point = [&](RatVector p) {
    if (p[0] < box.xmin || p[0] > box.xmax || p[1] < box.ymin || p[1] > box.ymax) return;
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
  };
  const Rational a(u[0]), b(u[1]);
  for (const Rational& x : {box.xmin, box.xmax})
    if (b != 0) add_point({x, (-c - a * x) / b});
  for (const Rational& y : {box.ymin, box.ymax})
    if (a != 0) add_point({(-c - b * y) / a, y});
  std::sort(pts.begin(), pts.end());
  if (pts.size() > 2) pts = {pts.front(), pts.back()};
  return pts;
}

inline Box padded(Rational xmin, Rational xmax, Rational ymin, Rational ymax) {
  if (xmax == xmin) {
    xmin -= 1;
    xmax += 1;
  }
  if (ymax == ymin) {
    ymin -= 1;
    ymax += 1;
  }
  Rational mx = (xmax - xmin) / 10, my = (ymax - ymin) / 10;
  return {xmin - mx, ymin - my, xmax + mx, ymax + my};
}

inline RatVector linf_unit(const RatVector& v) {
  Rational m = 0;
  for (const auto& x : v) m = std::max(m, Rational(abs(x)));
  return m == 0 ? v : scale(1 / m, v);
}

}  // namespace detail

// Hyperplanes with orientation markers and the shaded polytope, for n <= 2.
inline std::string plot_arrangement(const OrientedArrangement& arr) {
  using namespace detail;
  if (arr.n > 2 || arr.n == 0) throw Error(ErrorCode::DimensionTooLarge, "arrangement plots need n = 1 or 2");
  const Polytope P = polytope_of(arr);
  const auto hs = halfspaces(arr);

  if (arr.n == 1) {
    std::vector<Rational> xs;
    for (const auto& h : arr.items) xs.push_back(-h.offset / h.normal[0]);
    for (const auto& v : P.vertices) xs.push_back(v[0]);
    Rational lo = *std::min_element(xs.begin(), xs.end()), hi = *std::max_element(xs.begin(), xs.end());
    if (!P.bounded) {
      for (const auto& r : P.rays) (r[0] > 0 ? hi : lo) += (r[0] > 0 ? 1 : -1) * std::max(Rational(1), Rational(hi - lo));
    }
    Box box = padded(lo, hi, Rational(0), Rational(0));
    Rational half = (box.xmax - box.xmin) / 8;
    box.ymin = -half;
    box.ymax = half;
    Canvas cv(box, "oriented arrangement");
    if (!P.empty) {
      Rational a = P.vertices.front()[0], b = a;
      for (const auto& v : P.vertices) {
        a = std::min(a, v[0]);
        b = std::max(b, v[0]);
      }
      for (const auto& r : P.rays) (r[0] > 0 ? b : a) = (r[0] > 0 ? box.xmax : box.xmin);
      Rational t = half / 6;
      cv.polygon({{a, -t}, {b, -t}, {b, t}, {a, t}}, palette()[0]);
    }
    cv.line({box.xmin, 0}, {box.xmax, 0}, "#999999", "1");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      Rational x = -arr.items[i].offset / arr.items[i].normal[0];
      cv.line({x, -half / 2}, {x, half / 2}, "black", "1.5");
      Rational dir = Rational(hs[i].normal[0]) * (box.xmax - box.xmin) / 20;
      cv.arrow({x, half / 3}, {x + dir, half / 3}, "#cc0000");
      cv.text({x, -half * 3 / 4}, "H" + std::to_string(i + 1));
    }
    return cv.finish();
  }

  std::vector<RatVector> pts = P.vertices;
  for (std::size_t i = 0; i < arr.size(); ++i)
    for (std::size_t j = i + 1; j < arr.size(); ++j) {
      RatMatrix A(2, 2);
      RatVector b(2);
      for (std::size_t c = 0; c < 2; ++c) {
        A(0, c) = Rational(arr.items[i].normal[c]);
        A(1, c) = Rational(arr.items[j].normal[c]);
      }
      b[0] = -arr.items[i].offset;
      b[1] = -arr.items[j].offset;
      if (rank(A) == 2) pts.push_back(*solve_particular(A, b));
    }
  if (pts.empty()) pts.push_back({0, 0});
  for (const auto& [v, r] : P.ray_edges) pts.push_back(add(P.vertices[v], to_rational(P.rays[r])));
  Rational xmin = pts[0][0], xmax = xmin, ymin = pts[0][1], ymax = ymin;
  for (const auto& p : pts) {
    xmin = std::min(xmin, p[0]);
    xmax = std::max(xmax, p[0]);
    ymin = std::min(ymin, p[1]);
    ymax = std::max(ymax, p[1]);
  }
  const Box box = padded(xmin, xmax, ymin, ymax);
  Canvas cv(box, "oriented arrangement");
  if (!P.empty) cv.polygon(clipped_region(hs, box), palette()[0]);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    auto seg = clipped_line(arr.items[i].normal, arr.items[i].offset, box);
    if (seg.size() < 2) continue;
    cv.line(seg[0], seg[1], "black", "1.5");
    RatVector mid = scale(Rational(1, 2), add(seg[0], seg[1]));
    RatVector dir = scale(cv.unit() / 16, linf_unit(to_rational(hs[i].normal)));
    cv.arrow(mid, add(mid, dir), "#cc0000");
    RatVector label = add(seg[1], scale(cv.unit() / 30, linf_unit(sub(seg[0], seg[1]))));
    cv.text(label, "H" + std::to_string(i + 1));
  }
  for (const auto& v : P.vertices) cv.dot(v, "#1f4e79");
  return cv.finish();
}

// Wall cones and labelled chambers of the positive cone, for m <= 2.
inline std::string plot_chambers(const QuotientData& q) {
  using namespace detail;
  if (q.m_rank > 2 || q.m_rank == 0) throw Error(ErrorCode::DimensionTooLarge, "chamber plots need m = 1 or 2");
  const auto walls = enumerate_walls(q);
  const auto chambers = enumerate_chambers(q);
  const Box box{Rational(-11, 10), Rational(-11, 10), Rational(11, 10), Rational(11, 10)};
  Canvas cv(box, "chambers of the positive cone");

  if (q.m_rank == 1) {
    cv.line({box.xmin, 0}, {box.xmax, 0}, "#999999", "1");
    for (std::size_t c = 0; c < chambers.size(); ++c) {
      Rational s = chambers[c].representative[0] > 0 ? 1 : -1;
      cv.polygon({{0, Rational(-1, 20)}, {s, Rational(-1, 20)}, {s, Rational(1, 20)}, {0, Rational(1, 20)}},
                 palette()[c % palette().size()]);
      cv.text({s / 2, Rational(1, 5)}, "C" + std::to_string(c + 1));
    }
    cv.dot({0, 0}, "black");
    cv.text({0, Rational(-1, 4)}, "W1");
    return cv.finish();
  }

  for (std::size_t c = 0; c < chambers.size(); ++c) {
    std::vector<HalfSpace> hs;
    for (const auto& h : chambers[c].cone.constraints) {
      IntVector w = h.normal;
      for (auto& x : w) x *= h.sign;
      hs.push_back({w, Rational(0)});
    }
    auto poly = clipped_region(hs, {-1, -1, 1, 1});
    cv.polygon(poly, palette()[c % palette().size()]);
    RatVector centre{0, 0};
    for (const auto& p : poly) centre = add(centre, p);
    if (!poly.empty()) centre = scale(Rational(1, static_cast<unsigned long>(poly.size())), centre);
    cv.text(centre, "C" + std::to_string(c + 1));
  }
  for (std::size_t s = 0; s < walls.size(); ++s) {
    std::vector<RatVector> dirs;
    for (const auto& g : walls[s].cone_generators) {
      RatVector u = linf_unit(to_rational(g));
      if (std::find(dirs.begin(), dirs.end(), u) == dirs.end()) dirs.push_back(u);
    }
    std::sort(dirs.begin(), dirs.end());
    for (const auto& u : dirs) {
      cv.line({0, 0}, u, walls[s].boundary ? "#1f4e79" : "#cc0000", "2");
      cv.text(scale(Rational(21, 20), u), "W" + std::to_string(s + 1));
    }
  }
  for (std::size_t i = 0; i < q.d(); ++i) cv.dot(linf_unit(to_rational(q.weights[i])), "black");
  return cv.finish();
}

// Full hyperplanes of the hk arrangement in m* with labelled regions, for m <= 2.
inline std::string plot_hk_chambers(const QuotientData& q) {
  using namespace detail;
  if (q.m_rank > 2 || q.m_rank == 0) throw Error(ErrorCode::DimensionTooLarge, "chamber plots need m = 1 or 2");
  const auto walls = hk_walls(q);
  const auto regions = hk_chambers(q);
  const Box box{Rational(-11, 10), Rational(-11, 10), Rational(11, 10), Rational(11, 10)};
  Canvas cv(box, "hyperkahler chambers");

  if (q.m_rank == 1) {
    cv.line({box.xmin, 0}, {box.xmax, 0}, "#999999", "1");
    for (std::size_t c = 0; c < regions.size(); ++c) {
      Rational s = regions[c].representative[0] > 0 ? 1 : -1;
      cv.polygon({{0, Rational(-1, 20)}, {s, Rational(-1, 20)}, {s, Rational(1, 20)}, {0, Rational(1, 20)}},
                 palette()[c % palette().size()]);
      cv.text({s / 2, Rational(1, 5)}, "R" + std::to_string(c + 1));
    }
    cv.dot({0, 0}, "black");
    return cv.finish();
  }

  for (std::size_t c = 0; c < regions.size(); ++c) {
    std::vector<HalfSpace> hs;
    for (std::size_t s = 0; s < walls.size(); ++s) {
      IntVector w = walls[s].theta;
      for (auto& x : w) x *= regions[c].signs[s];
      hs.push_back({w, Rational(0)});
    }
    auto poly = clipped_region(hs, {-1, -1, 1, 1});
    cv.polygon(poly, palette()[c % palette().size()]);
    RatVector centre{0, 0};
    for (const auto& p : poly) centre = add(centre, p);
    if (!poly.empty()) centre = scale(Rational(1, static_cast<unsigned long>(poly.size())), centre);
    cv.text(centre, "R" + std::to_string(c + 1));
  }
  for (std::size_t s = 0; s < walls.size(); ++s) {
    auto seg = clipped_line(walls[s].theta, Rational(0), {-1, -1, 1, 1});
    if (seg.size() < 2) continue;
    cv.line(seg[0], seg[1], "#cc0000", "2");
    cv.text(scale(Rational(21, 20), seg[1]), "W" + std::to_string(s + 1));
  }
  for (std::size_t i = 0; i < q.d(); ++i) cv.dot(linf_unit(to_rational(q.weights[i])), "black");
  return cv.finish();
}

}  // namespace toricvar::svg
