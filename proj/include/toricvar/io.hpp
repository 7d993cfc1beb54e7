#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <json.hpp>

#include "toricvar/arrangement.hpp"
#include "toricvar/chambers.hpp"
#include "toricvar/cone.hpp"
#include "toricvar/error.hpp"
#include "toricvar/hyperkahler.hpp"
#include "toricvar/numeric.hpp"
#include "toricvar/product.hpp"
#include "toricvar/quotient.hpp"
#include "toricvar/variation.hpp"

// JSON encoding of every report type. Rationals are strings "p" or "p/q"; integers
// are JSON numbers when they fit in 64 bits and strings otherwise; every index that
// refers to a hyperplane, weight, wall or vertex is 1-based. The functions live in
// namespace toricvar so that argument-dependent lookup finds them from the generic
// container overloads; toricvar::io re-exports the entry points.
namespace toricvar {

using json = nlohmann::ordered_json;

[[noreturn]] inline void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

// ---- scalars

inline json encode(const Rational& q) { return to_string(q); }
inline json encode(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}
inline json encode(int v) { return v; }
inline json encode(bool v) { return v; }

inline void decode(const json& j, Rational& q) {
  if (j.is_string()) q = parse_rational(j.get<std::string>());
  else if (j.is_number_integer()) q = Rational(parse_integer(j.dump()));
  else bad("expected an exact rational (string or integer), got " + j.dump());
}
inline void decode(const json& j, Integer& z) {
  if (j.is_string()) z = parse_integer(j.get<std::string>());
  else if (j.is_number_integer()) z = parse_integer(j.dump());
  else bad("expected an integer, got " + j.dump());
}
inline void decode(const json& j, int& v) {
  if (!j.is_number_integer()) bad("expected an integer, got " + j.dump());
  v = j.get<int>();
}
inline void decode(const json& j, bool& v) {
  if (!j.is_boolean()) bad("expected a boolean, got " + j.dump());
  v = j.get<bool>();
}
inline void decode(const json& j, std::size_t& v) {
  if (!j.is_number_unsigned()) bad("expected a count, got " + j.dump());
  v = j.get<std::size_t>();
}

// ---- containers

template <class T>
  requires(!std::is_same_v<T, std::size_t>)
json encode(const std::vector<T>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(encode(x));
  return a;
}

template <class T>
  requires(!std::is_same_v<T, std::size_t>)
void decode(const json& j, std::vector<T>& v) {
  if (!j.is_array()) bad("expected an array, got " + j.dump());
  v.clear();
  for (const auto& x : j) {
    T item{};
    decode(x, item);
    v.push_back(std::move(item));
  }
}

template <class T>
json encode(const std::optional<T>& v) {
  return v ? encode(*v) : json(nullptr);
}

inline json encode_indices(const std::vector<std::size_t>& v) {
  json a = json::array();
  for (auto i : v) a.push_back(i + 1);
  return a;
}

inline void decode_indices(const json& j, std::vector<std::size_t>& v) {
  if (!j.is_array()) bad("expected an index array, got " + j.dump());
  v.clear();
  for (const auto& x : j) {
    if (!x.is_number_unsigned() || x.get<std::size_t>() == 0) bad("indices are positive integers");
    v.push_back(x.get<std::size_t>() - 1);
  }
}

inline json encode_pairs(const std::vector<Edge>& edges) {
  json a = json::array();
  for (const auto& [x, y] : edges) a.push_back(json::array({x + 1, y + 1}));
  return a;
}

inline void decode_pairs(const json& j, std::vector<Edge>& edges) {
  edges.clear();
  for (const auto& x : j) {
    std::vector<std::size_t> p;
    decode_indices(x, p);
    if (p.size() != 2) bad("expected an index pair");
    edges.emplace_back(p[0], p[1]);
  }
}

template <class T>
void field(const json& j, const char* key, T& out) {
  if (!j.contains(key)) bad(std::string("missing field '") + key + "'");
  decode(j.at(key), out);
}

template <class T>
void field(const json& j, const char* key, std::optional<T>& out) {
  if (!j.contains(key) || j.at(key).is_null()) {
    out.reset();
    return;
  }
  T v{};
  decode(j.at(key), v);
  out = std::move(v);
}

inline void index_field(const json& j, const char* key, std::vector<std::size_t>& out) {
  if (!j.contains(key)) bad(std::string("missing field '") + key + "'");
  decode_indices(j.at(key), out);
}

// ---- enums

inline const char* name(LocationKind k) {
  switch (k) {
    case LocationKind::OutsidePositiveCone: return "OutsidePositiveCone";
    case LocationKind::Interior: return "Interior";
    case LocationKind::OnGenericWall: return "OnGenericWall";
    case LocationKind::NonGeneric: return "NonGeneric";
  }
  return "";
}
inline const char* name(MorphismKind k) {
  return k == MorphismKind::BundleProjection ? "BundleProjection" : "TwoSidedDesingularization";
}
inline const char* name(FlipKind k) {
  switch (k) {
    case FlipKind::Flip: return "Flip";
    case FlipKind::BlowDown: return "BlowDown";
    case FlipKind::Isomorphism: return "Isomorphism";
  }
  return "";
}
inline const char* name(ConeMode m) { return m == ConeMode::Nonnegative ? "nonnegative" : "strictly_positive"; }

inline json encode(LocationKind k) { return name(k); }
inline json encode(MorphismKind k) { return name(k); }
inline json encode(FlipKind k) { return name(k); }
inline json encode(ConeMode m) { return name(m); }

template <class E>
void decode_enum(const json& j, E& out, std::initializer_list<E> values) {
  if (j.is_string())
    for (E v : values)
      if (j.get<std::string>() == name(v)) {
        out = v;
        return;
      }
  bad("unknown enumeration value " + j.dump());
}
inline void decode(const json& j, LocationKind& k) {
  decode_enum(j, k, {LocationKind::OutsidePositiveCone, LocationKind::Interior, LocationKind::OnGenericWall,
                     LocationKind::NonGeneric});
}
inline void decode(const json& j, MorphismKind& k) {
  decode_enum(j, k, {MorphismKind::BundleProjection, MorphismKind::TwoSidedDesingularization});
}
inline void decode(const json& j, FlipKind& k) {
  decode_enum(j, k, {FlipKind::Flip, FlipKind::BlowDown, FlipKind::Isomorphism});
}
inline void decode(const json& j, ConeMode& m) {
  decode_enum(j, m, {ConeMode::Nonnegative, ConeMode::StrictlyPositive});
}

// ---- quotient data

inline json encode(const FanInput& f) { return {{"n", f.n}, {"rays", encode(f.u)}}; }
inline void decode(const json& j, FanInput& f) {
  field(j, "n", f.n);
  field(j, "rays", f.u);
}

inline json encode(const QuotientData& q) {
  return {{"fan", encode(q.fan)}, {"m_rank", q.m_rank}, {"kernel", encode(q.kernel)}, {"weights", encode(q.weights)}};
}
inline void decode(const json& j, QuotientData& q) {
  field(j, "fan", q.fan);
  field(j, "m_rank", q.m_rank);
  field(j, "kernel", q.kernel);
  field(j, "weights", q.weights);
}

inline json encode(const RegularityFlags& r) {
  json notes = json::array();
  for (const auto& s : r.notes) notes.push_back(encode_indices(s));
  return {{"regular_fan", r.regular_fan}, {"notes", notes}};
}
inline void decode(const json& j, RegularityFlags& r) {
  field(j, "regular_fan", r.regular_fan);
  r.notes.clear();
  for (const auto& s : j.at("notes")) {
    IndexSet idx;
    decode_indices(s, idx);
    r.notes.push_back(std::move(idx));
  }
}

inline json encode(const ConeCertificate& c) {
  return {{"coefficients", encode(c.coefficients)}, {"mode", encode(c.mode)}};
}
inline void decode(const json& j, ConeCertificate& c) {
  field(j, "coefficients", c.coefficients);
  field(j, "mode", c.mode);
}

// ---- arrangements and polytopes

inline json encode(const OrientedHyperplane& h) {
  return {{"normal", encode(h.normal)}, {"offset", encode(h.offset)}, {"orientation", h.orientation}};
}
inline void decode(const json& j, OrientedHyperplane& h) {
  field(j, "normal", h.normal);
  field(j, "offset", h.offset);
  field(j, "orientation", h.orientation);
}

inline json encode(const OrientedArrangement& a) { return {{"n", a.n}, {"hyperplanes", encode(a.items)}}; }
inline void decode(const json& j, OrientedArrangement& a) {
  field(j, "n", a.n);
  field(j, "hyperplanes", a.items);
}

inline json encode(const HalfSpace& h) { return {{"normal", encode(h.normal)}, {"offset", encode(h.offset)}}; }
inline void decode(const json& j, HalfSpace& h) {
  field(j, "normal", h.normal);
  field(j, "offset", h.offset);
}

inline json encode(const Polytope& p) {
  json tight = json::array();
  for (const auto& t : p.vertex_tight) tight.push_back(encode_indices(t));
  return {{"n", p.n},
          {"empty", p.empty},
          {"bounded", p.bounded},
          {"dimension", p.dimension()},
          {"hrep", encode(p.hrep)},
          {"vertices", encode(p.vertices)},
          {"vertex_tight", tight},
          {"rays", encode(p.rays)},
          {"edges", encode_pairs(p.edges)},
          {"ray_edges", encode_pairs(p.ray_edges)}};
}
inline void decode(const json& j, Polytope& p) {
  field(j, "n", p.n);
  field(j, "empty", p.empty);
  field(j, "bounded", p.bounded);
  field(j, "hrep", p.hrep);
  field(j, "vertices", p.vertices);
  p.vertex_tight.clear();
  for (const auto& t : j.at("vertex_tight")) {
    IndexSet idx;
    decode_indices(t, idx);
    p.vertex_tight.push_back(std::move(idx));
  }
  field(j, "rays", p.rays);
  decode_pairs(j.at("edges"), p.edges);
  decode_pairs(j.at("ray_edges"), p.ray_edges);
}

inline json encode(const SingularFlat& f) {
  return {{"point", encode(f.point)},
          {"directions", encode(f.directions)},
          {"incident", encode_indices(f.incident)},
          {"codimension", f.codimension}};
}
inline void decode(const json& j, SingularFlat& f) {
  field(j, "point", f.point);
  field(j, "directions", f.directions);
  index_field(j, "incident", f.incident);
  field(j, "codimension", f.codimension);
}

inline json encode(const ArrangementClass& c) {
  return {{"regular", c.regular},
          {"simplicial", c.simplicial},
          {"smooth", c.smooth},
          {"singular_flats", encode(c.singular_flats)}};
}
inline void decode(const json& j, ArrangementClass& c) {
  field(j, "regular", c.regular);
  field(j, "simplicial", c.simplicial);
  field(j, "smooth", c.smooth);
  field(j, "singular_flats", c.singular_flats);
}

// ---- walls and chambers

inline json encode(const Wall& w) {
  return {{"theta", encode(w.theta)},
          {"span_indices", encode_indices(w.span_indices)},
          {"cone_generators", encode(w.cone_generators)},
          {"boundary", w.boundary}};
}
inline void decode(const json& j, Wall& w) {
  field(j, "theta", w.theta);
  index_field(j, "span_indices", w.span_indices);
  field(j, "cone_generators", w.cone_generators);
  field(j, "boundary", w.boundary);
}

inline json encode(const ChamberLocation& l) {
  return {{"kind", encode(l.kind)}, {"walls", encode_indices(l.walls)}, {"sign_vector", encode(l.sign_vector)}};
}
inline void decode(const json& j, ChamberLocation& l) {
  field(j, "kind", l.kind);
  index_field(j, "walls", l.walls);
  field(j, "sign_vector", l.sign_vector);
}

inline json encode(const SignedHyperplane& h) { return {{"normal", encode(h.normal)}, {"sign", h.sign}}; }
inline void decode(const json& j, SignedHyperplane& h) {
  field(j, "normal", h.normal);
  field(j, "sign", h.sign);
}

inline json encode(const ChamberCone& c) { return encode(c.constraints); }
inline void decode(const json& j, ChamberCone& c) { decode(j, c.constraints); }

inline json encode(const Chamber& c) {
  return {{"representative", encode(c.representative)}, {"constraints", encode(c.cone)}};
}
inline void decode(const json& j, Chamber& c) {
  field(j, "representative", c.representative);
  field(j, "constraints", c.cone);
}

// ---- variation

inline json encode(const SupportStability& s) {
  return {{"support", encode_indices(s.support)},
          {"semistable", s.semistable},
          {"closed_orbit", s.closed_orbit},
          {"certificate", encode(s.certificate)}};
}
inline void decode(const json& j, SupportStability& s) {
  index_field(j, "support", s.support);
  field(j, "semistable", s.semistable);
  field(j, "closed_orbit", s.closed_orbit);
  field(j, "certificate", s.certificate);
}

inline json encode(const WallRestriction& w) {
  return {{"indices", encode_indices(w.indices)},
          {"flat_basis", encode(w.flat_basis)},
          {"sub_quotient", encode(w.sub_quotient)},
          {"lift", encode(w.lift)},
          {"alpha", encode(w.alpha)},
          {"arrangement", encode(w.arrangement)}};
}
inline void decode(const json& j, WallRestriction& w) {
  index_field(j, "indices", w.indices);
  field(j, "flat_basis", w.flat_basis);
  field(j, "sub_quotient", w.sub_quotient);
  field(j, "lift", w.lift);
  field(j, "alpha", w.alpha);
  field(j, "arrangement", w.arrangement);
}

inline json encode(const VariationReport& r) {
  return {{"wall", encode(r.wall)},
          {"theta1", encode(r.theta1)},
          {"alpha_plus", encode(r.alpha_plus)},
          {"alpha1", encode(r.alpha1)},
          {"J1", encode_indices(r.J1)},
          {"J1_plus", encode_indices(r.J1_plus)},
          {"J1_minus", encode_indices(r.J1_minus)},
          {"kind", encode(r.kind)},
          {"fiber_dim_plus", r.fiber_dim_plus},
          {"fiber_dim_minus", r.fiber_dim_minus ? json(*r.fiber_dim_minus) : json(nullptr)},
          {"dim_V1", r.dim_V1},
          {"dim_V_plus", r.dim_V_plus},
          {"dim_V_minus", r.dim_V_minus ? json(*r.dim_V_minus) : json(nullptr)},
          {"restriction", encode(r.restriction)}};
}
inline void decode(const json& j, VariationReport& r) {
  field(j, "wall", r.wall);
  field(j, "theta1", r.theta1);
  field(j, "alpha_plus", r.alpha_plus);
  field(j, "alpha1", r.alpha1);
  index_field(j, "J1", r.J1);
  index_field(j, "J1_plus", r.J1_plus);
  index_field(j, "J1_minus", r.J1_minus);
  field(j, "kind", r.kind);
  field(j, "fiber_dim_plus", r.fiber_dim_plus);
  field(j, "fiber_dim_minus", r.fiber_dim_minus);
  field(j, "dim_V1", r.dim_V1);
  field(j, "dim_V_plus", r.dim_V_plus);
  field(j, "dim_V_minus", r.dim_V_minus);
  field(j, "restriction", r.restriction);
}

inline json encode(const FlipReport& f) {
  return {{"alpha1", encode(f.alpha1)},
          {"kind", encode(f.kind)},
          {"exceptional_dim_plus", f.exceptional_dim_plus},
          {"exceptional_dim_minus", f.exceptional_dim_minus},
          {"common_supports", f.common_supports},
          {"plus", encode(f.plus)},
          {"minus", encode(f.minus)}};
}
inline void decode(const json& j, FlipReport& f) {
  field(j, "alpha1", f.alpha1);
  field(j, "kind", f.kind);
  field(j, "exceptional_dim_plus", f.exceptional_dim_plus);
  field(j, "exceptional_dim_minus", f.exceptional_dim_minus);
  field(j, "common_supports", f.common_supports);
  field(j, "plus", f.plus);
  field(j, "minus", f.minus);
}

inline json encode(const FibredDecomposition& f) {
  return {{"wall", encode(f.wall)},
          {"alpha1", encode(f.alpha1)},
          {"r", f.r},
          {"polytope", encode(f.polytope)},
          {"base_polytope", encode(f.base_polytope)},
          {"grouping", encode_indices(f.grouping)},
          {"grouping_consistent", f.grouping_consistent},
          {"product_check", encode(f.product_check)}};
}
inline void decode(const json& j, FibredDecomposition& f) {
  field(j, "wall", f.wall);
  field(j, "alpha1", f.alpha1);
  field(j, "r", f.r);
  field(j, "polytope", f.polytope);
  field(j, "base_polytope", f.base_polytope);
  index_field(j, "grouping", f.grouping);
  field(j, "grouping_consistent", f.grouping_consistent);
  field(j, "product_check", f.product_check);
}

inline json encode(const ProductDecomposition& p) {
  json labels = json::array();
  for (auto l : p.fiber_label) labels.push_back(l);
  return {{"r", p.r}, {"base", encode(p.base)}, {"grouping", encode_indices(p.grouping)}, {"fiber_label", labels}};
}
inline void decode(const json& j, ProductDecomposition& p) {
  field(j, "r", p.r);
  field(j, "base", p.base);
  index_field(j, "grouping", p.grouping);
  p.fiber_label.clear();
  for (const auto& x : j.at("fiber_label")) {
    std::size_t v = 0;
    decode(x, v);
    p.fiber_label.push_back(v);
  }
}

// ---- hyperkahler

inline json encode(const HkWall& w) {
  return {{"theta", encode(w.theta)}, {"span_indices", encode_indices(w.span_indices)}};
}
inline void decode(const json& j, HkWall& w) {
  field(j, "theta", w.theta);
  index_field(j, "span_indices", w.span_indices);
}

inline json encode(const HkLocation& l) {
  return {{"regular", l.regular()}, {"walls", encode_indices(l.walls)}, {"sign_vector", encode(l.sign_vector)}};
}
inline void decode(const json& j, HkLocation& l) {
  index_field(j, "walls", l.walls);
  field(j, "sign_vector", l.sign_vector);
}

inline json encode(const HkChamber& c) {
  return {{"signs", encode(c.signs)}, {"representative", encode(c.representative)}};
}
inline void decode(const json& j, HkChamber& c) {
  field(j, "signs", c.signs);
  field(j, "representative", c.representative);
}

inline json encode(const ExtendedCoreComponent& c) {
  return {{"epsilon", encode(c.epsilon)}, {"bounded", c.bounded}, {"polytope", encode(c.polytope)}};
}
inline void decode(const json& j, ExtendedCoreComponent& c) {
  field(j, "epsilon", c.epsilon);
  field(j, "bounded", c.bounded);
  field(j, "polytope", c.polytope);
}

inline json encode(const FibredPiece& p) {
  return {{"epsilon_tilde", encode(p.epsilon_tilde)},
          {"base_dim", p.base_dim},
          {"piece_dim", p.piece_dim},
          {"bounded", p.bounded},
          {"base", encode(p.base)}};
}
inline void decode(const json& j, FibredPiece& p) {
  field(j, "epsilon_tilde", p.epsilon_tilde);
  field(j, "base_dim", p.base_dim);
  field(j, "piece_dim", p.piece_dim);
  field(j, "bounded", p.bounded);
  field(j, "base", p.base);
}

inline json encode(const HkVariationReport& r) {
  return {{"wall", encode(r.wall)},
          {"theta1", encode(r.theta1)},
          {"alpha_plus", encode(r.alpha_plus)},
          {"alpha1", encode(r.alpha1)},
          {"J1", encode_indices(r.J1)},
          {"J1_plus", encode_indices(r.J1_plus)},
          {"J1_minus", encode_indices(r.J1_minus)},
          {"fiber_dim", r.fiber_dim},
          {"codim_V1", r.codim_V1},
          {"codim_V_pm", r.codim_V_pm},
          {"restriction", encode(r.restriction)},
          {"fibred_pieces", encode(r.fibred_pieces)}};
}
inline void decode(const json& j, HkVariationReport& r) {
  field(j, "wall", r.wall);
  field(j, "theta1", r.theta1);
  field(j, "alpha_plus", r.alpha_plus);
  field(j, "alpha1", r.alpha1);
  index_field(j, "J1", r.J1);
  index_field(j, "J1_plus", r.J1_plus);
  index_field(j, "J1_minus", r.J1_minus);
  field(j, "fiber_dim", r.fiber_dim);
  field(j, "codim_V1", r.codim_V1);
  field(j, "codim_V_pm", r.codim_V_pm);
  field(j, "restriction", r.restriction);
  field(j, "fibred_pieces", r.fibred_pieces);
}

inline json encode(const MukaiFlopReport& f) {
  return {{"alpha1", encode(f.alpha1)},
          {"J1_size", f.J1_size},
          {"biholomorphic", f.biholomorphic},
          {"plus", encode(f.plus)},
          {"minus", encode(f.minus)}};
}
inline void decode(const json& j, MukaiFlopReport& f) {
  field(j, "alpha1", f.alpha1);
  field(j, "J1_size", f.J1_size);
  field(j, "biholomorphic", f.biholomorphic);
  field(j, "plus", f.plus);
  field(j, "minus", f.minus);
}

template <class T>
T from_json(const json& j) {
  T out{};
  decode(j, out);
  return out;
}

namespace io {
using toricvar::bad;
using toricvar::decode;
using toricvar::decode_indices;
using toricvar::encode;
using toricvar::encode_indices;
using toricvar::field;
using toricvar::from_json;
using toricvar::json;
}  // namespace io

}  // namespace toricvar
