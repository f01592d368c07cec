#pragma once

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mink/completeness.hpp"
#include "mink/constructions.hpp"
#include "mink/errors.hpp"
#include "mink/hull.hpp"
#include "mink/metrics.hpp"
#include "mink/norm.hpp"
#include "mink/polytope.hpp"

// JSON forms.  Rationals are always written as strings ("p/q" or "p") and
// read from strings or JSON integers; floats are rejected.
//
//   body / ball:  {"dim": d, "vertices": [[...], ...]}
//                 {"dim": d, "facets": [{"a": [...], "b": "p/q"}, ...]}
//   custom ball:  {"dim": d, "vertices": [...], "facets": [...]}
//   cut:          {"a": [...], "b": "p/q"}
namespace mink::io {

using nlohmann::json;

inline json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(mpz_class(std::to_string(j.get<unsigned long long>())));
    return Rational(mpz_class(std::to_string(j.get<long long>())));
  }
  throw ParseError("expected a rational string or integer, got " + j.dump());
}

inline json to_json(const QVec& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(c.str());
  return a;
}

inline QVec vec_from_json(const json& j, std::size_t dim) {
  if (!j.is_array()) throw ParseError("expected an array of rationals, got " + j.dump());
  if (j.size() != dim) {
    throw DomainError("vector of length " + std::to_string(j.size()) + " in dimension " + std::to_string(dim));
  }
  std::vector<Rational> cs;
  cs.reserve(j.size());
  for (const auto& x : j) cs.push_back(rational_from_json(x));
  return QVec(std::move(cs));
}

inline json to_json(const QMat& m) {
  json rows = json::array();
  for (const auto& r : m.row_list()) rows.push_back(to_json(r));
  return rows;
}

inline json to_json(const Halfspace& h) { return {{"a", to_json(h.normal())}, {"b", h.rhs().str()}}; }

inline json to_json(const VPolytope& p) {
  json vs = json::array();
  for (const auto& v : p.vertices()) vs.push_back(to_json(v));
  return {{"dim", p.dim()}, {"vertices", vs}};
}

inline json to_json(const HPolytope& p) {
  json fs = json::array();
  for (const auto& f : p.facets()) fs.push_back(to_json(f));
  return {{"dim", p.dim()}, {"facets", fs}};
}

namespace detail {

inline std::size_t dim_of(const json& j) {
  if (!j.is_object() || !j.contains("dim")) throw ParseError("body object needs a \"dim\" field");
  const auto& d = j.at("dim");
  if (!d.is_number_integer() || d.get<long long>() < 1) throw ParseError("\"dim\" must be a positive integer");
  return d.get<std::size_t>();
}

inline std::vector<QVec> vertices_from_json(const json& j, std::size_t dim) {
  const auto& vs = j.at("vertices");
  if (!vs.is_array()) throw ParseError("\"vertices\" must be an array");
  std::vector<QVec> out;
  for (const auto& v : vs) out.push_back(vec_from_json(v, dim));
  return out;
}

}  // namespace detail

inline Halfspace halfspace_from_json(const json& j, std::size_t dim) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b")) {
    throw ParseError("halfspace needs \"a\" and \"b\" fields");
  }
  return Halfspace(vec_from_json(j.at("a"), dim), rational_from_json(j.at("b")));
}

inline HPolytope hpolytope_from_json(const json& j) {
  const auto dim = detail::dim_of(j);
  const auto& fs = j.at("facets");
  if (!fs.is_array()) throw ParseError("\"facets\" must be an array");
  std::vector<Halfspace> out;
  for (const auto& f : fs) out.push_back(halfspace_from_json(f, dim));
  return HPolytope(dim, std::move(out));
}

inline VPolytope vpolytope_from_json(const json& j) {
  const auto dim = detail::dim_of(j);
  return VPolytope(detail::vertices_from_json(j, dim));
}

/// A body in either representation, converted to vertices (H-bodies go
/// through vertex enumeration and must be bounded).
inline VPolytope body_from_json(const json& j) {
  const auto dim = detail::dim_of(j);
  if (j.contains("vertices")) return VPolytope(detail::vertices_from_json(j, dim));
  if (j.contains("facets")) return vertex_enumeration(hpolytope_from_json(j));
  throw ParseError("body needs \"vertices\" or \"facets\"");
}

inline PolytopalNorm ball_from_json(const json& j) {
  if (!j.contains("vertices") || !j.contains("facets")) {
    throw ParseError("custom ball needs both \"vertices\" and \"facets\"");
  }
  return PolytopalNorm::custom(vpolytope_from_json(j), hpolytope_from_json(j));
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

/// "l1", "linf", or the path of a custom-ball JSON file.
inline PolytopalNorm ball_from_spec(const std::string& spec, std::size_t dim) {
  if (spec == "l1") return l1_ball(dim);
  if (spec == "linf") return linf_ball(dim);
  auto ball = ball_from_json(read_json_file(spec));
  mink::detail::require_same_dim(ball.dim(), dim, "ball");
  return ball;
}

// Reports.

inline json pair_json(const std::pair<std::size_t, std::size_t>& p) { return json::array({p.first, p.second}); }

inline json to_json(const std::vector<CheckItem>& items) {
  json a = json::array();
  for (const auto& c : items) {
    json o = {{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) o["detail"] = c.detail;
    a.push_back(std::move(o));
  }
  return a;
}

inline json to_json(const MetricsReport& r) {
  json j = {{"diameter", r.diameter.str()},
            {"diameter_witness", pair_json(r.diameter_witness)},
            {"thickness", r.thickness.str()},
            {"thickness_direction", to_json(r.thickness_direction)},
            {"thickness_mode", std::string(to_string(r.thickness_mode))},
            {"constant_width", r.thickness == r.diameter}};
  if (r.inball_scale) {
    j["inball_scale"] = r.inball_scale->str();
  } else {
    j["inball_scale"] = nullptr;
    j["inball_note"] = r.inball_note;
  }
  return j;
}

inline json to_json(const DiameterRealization& r) {
  json partners = json::array();
  for (const auto& p : r.partner) partners.push_back(p ? json(*p) : json(nullptr));
  return {{"holds", r.holds}, {"diameter", r.diameter.str()}, {"partner", partners}};
}

inline json to_json(const CompletenessReport& r) {
  json j = {{"diameter", r.diameter.str()},
            {"ball_hull_facets", to_json(r.ball_hull_facets)},
            {"contains_body", r.contains_body},
            {"is_complete", r.is_complete}};
  if (r.violation) {
    j["violation"] = {{"facet_index", r.violation->facet_index},
                      {"facet", to_json(r.violation->facet)},
                      {"lp_optimum", r.violation->lp_optimum.str()},
                      {"point", to_json(r.violation->point)}};
  } else {
    j["violation"] = nullptr;
  }
  return j;
}

inline json to_json(const ReductionWitness& w) {
  return {{"cut", to_json(w.cut)},
          {"removed_vertices", w.removed_vertices},
          {"cut_body", to_json(w.cut_body)},
          {"thickness_before", w.thickness_before.str()},
          {"thickness_after", w.thickness_after.str()},
          {"thickness_after_direction", to_json(w.thickness_after_direction)},
          {"inball_survives", w.inball_survives},
          {"valid", w.valid}};
}

inline json to_json(const ClaimsReport& r) {
  json pairs = json::array();
  for (const auto& p : r.diameter_pairs) pairs.push_back(pair_json(p));
  json cents = json::array();
  for (const auto& c : r.vertex_centroid_distances) cents.push_back(c.str());
  return {{"body", to_json(r.body)},
          {"diameter", r.diameter.str()},
          {"diameter_pairs", pairs},
          {"vertex_centroid_distances", cents},
          {"ball_inside", r.ball_inside},
          {"is_complete", r.is_complete},
          {"thickness", r.thickness_exact_lp.str()},
          {"thickness_direction", to_json(r.thickness_direction)},
          {"thickness_difference_body", r.thickness_difference_body.str()},
          {"inball_scale", r.inball_scale.str()},
          {"witness", to_json(r.witness)},
          {"checks", to_json(r.checks)},
          {"passed", r.passed()},
          {"seconds", r.seconds}};
}

inline json to_json(const PropositionReport& r) {
  json item2 = json::array();
  for (const auto& d : r.item2_vertex_facet_distances) {
    json fv = json::array();
    for (const auto& x : d.facet_vertex_distances) fv.push_back(x.str());
    item2.push_back({{"centroid_distance", d.centroid_distance.str()},
                     {"facet_vertex_distances", fv},
                     {"hyperplane_distance", d.hyperplane_distance.str()}});
  }
  json j = {{"n", r.n},
            {"dim", r.dim},
            {"mode", std::string(to_string(r.mode))},
            {"diameter", r.item1_diameter.str()},
            {"item1_all_pairs_equal", r.item1_all_pairs_equal},
            {"item2_vertex_facet_distances", item2},
            {"item2_note", "the facet claim is checked at every facet vertex and the facet centroid; "
                           "convexity of the distance extends it to the whole facet"},
            {"item3_ball_contained", r.item3_ball_contained},
            {"item3_facets_support_ball", r.item3_facets_support_ball},
            {"item4_thickness", r.item4_thickness ? json(r.item4_thickness->str()) : json(nullptr)},
            {"item4_bounds",
             {{"lower", r.item4_bounds.lower.str()},
              {"upper", r.item4_bounds.upper.str()},
              {"direction", to_json(r.item4_bounds.direction)}}},
            {"item5_witness", to_json(r.item5_witness)},
            {"completeness", r.completeness ? json(*r.completeness) : json(nullptr)},
            {"thickness_to_diameter", r.thickness_to_diameter.str()},
            {"checks", to_json(r.checks)},
            {"passed", r.passed()},
            {"seconds", r.seconds}};
  if (!r.completeness_note.empty()) j["completeness_note"] = r.completeness_note;
  return j;
}

inline json error_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace mink::io
