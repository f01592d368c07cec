#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mink/errors.hpp"
#include "mink/hull.hpp"
#include "mink/metrics.hpp"
#include "mink/norm.hpp"
#include "mink/polytope.hpp"

namespace mink {

/// ⋂_{x∈P} (x + r·B): for each ball facet (a, b) the constraint
/// a·y <= r·b - h_P(-a).
inline HPolytope ball_hull(const VPolytope& p, const Rational& r, const PolytopalNorm& n) {
  detail::require_same_dim(p.dim(), n.dim(), "ball_hull");
  if (r.sign() <= 0) throw DomainError("ball_hull: radius must be positive");
  std::vector<Halfspace> fs;
  fs.reserve(n.ball_h().size());
  for (const auto& f : n.ball_h().facets()) fs.emplace_back(f.normal(), r * f.rhs() - support(p, -f.normal()));
  return HPolytope(p.dim(), std::move(fs));
}

struct CompletenessViolation {
  std::size_t facet_index;  // facet of P exceeded by the ball hull
  Halfspace facet;
  Rational lp_optimum;  // max of the facet normal over the ball hull, > facet rhs
  QVec point;           // ball-hull point attaining lp_optimum
};

struct CompletenessReport {
  Rational diameter;
  HPolytope ball_hull_facets;
  HPolytope body_facets;
  bool contains_body = false;  // P ⊆ ball hull, re-checked on vertices
  bool is_complete = false;
  std::optional<CompletenessViolation> violation;
};

/// Decides completeness as equality of P and its ball hull at radius
/// diam(P): the hull always contains P, so one LP per facet of P decides
/// the reverse inclusion.
inline CompletenessReport is_complete(const VPolytope& p, const PolytopalNorm& n,
                                      std::size_t dim_limit = kDefaultHullDimLimit) {
  if (p.size() < 2) throw DegeneracyError("is_complete: need at least two vertices");
  detail::require_body(p, "is_complete");
  CompletenessReport rep;
  rep.diameter = diameter(p, n).value;
  rep.ball_hull_facets = ball_hull(p, rep.diameter, n);
  rep.body_facets = facets_of(p, dim_limit);
  rep.contains_body = is_subset(p, rep.ball_hull_facets);
  if (!rep.contains_body) throw std::logic_error("is_complete: body escapes its own ball hull");
  rep.is_complete = true;
  for (std::size_t i = 0; i < rep.body_facets.size(); ++i) {
    const auto& f = rep.body_facets.facet(i);
    const auto out = rep.ball_hull_facets.maximize(f.normal());
    if (out.status != LpStatus::optimal) {
      throw std::logic_error("is_complete: ball hull LP is " + std::string(to_string(out.status)));
    }
    if (out.optimum > f.rhs()) {
      rep.is_complete = false;
      rep.violation = CompletenessViolation{i, f, out.optimum, out.point};
      break;
    }
  }
  return rep;
}

struct DiameterRealization {
  bool holds = false;
  Rational diameter;
  std::vector<std::optional<std::size_t>> partner;  // per vertex: a vertex at distance diam, if any
};

/// Whether every vertex sits at distance diam(P) from some vertex.  This is
/// necessary for completeness, not sufficient (the cube in l1 passes).
inline DiameterRealization vertex_diameter_realization(const VPolytope& p, const PolytopalNorm& n) {
  if (p.size() < 2) throw DegeneracyError("vertex_diameter_realization: need at least two vertices");
  DiameterRealization out;
  out.diameter = diameter(p, n).value;
  out.holds = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::optional<std::size_t> found;
    for (std::size_t j = 0; j < p.size() && !found; ++j) {
      if (j != i && norm(p.vertex(i) - p.vertex(j), n) == out.diameter) found = j;
    }
    if (!found) out.holds = false;
    out.partner.push_back(found);
  }
  return out;
}

struct ReductionWitness {
  Halfspace cut;
  std::vector<std::size_t> removed_vertices;  // vertices of P strictly outside the cut
  VPolytope cut_body;
  Rational thickness_before;
  Rational thickness_after;
  QVec thickness_after_direction;
  bool inball_survives = false;  // λ*·B (at the inball center) still inside P ∩ h
  bool valid = false;
};

namespace detail {

/// Center c and scale λ of a largest translate c + λ·B inside P.
struct Inball {
  QVec center;
  Rational scale;
};

inline Inball largest_inball(const HPolytope& p, const PolytopalNorm& n) {
  const std::size_t d = p.dim();
  LpProblem lp{QVec::unit(d + 1, d), {}};
  for (const auto& f : p.facets()) {
    QVec row(d + 1);
    for (std::size_t i = 0; i < d; ++i) row[i] = f.normal()[i];
    row[d] = dual_support(f.normal(), n);
    lp.constraints.push_back({std::move(row), f.rhs()});
  }
  const auto out = lp_max(lp);
  if (out.status != LpStatus::optimal) throw UnboundedError("largest_inball: polytope is unbounded or empty");
  QVec c(d);
  for (std::size_t i = 0; i < d; ++i) c[i] = out.point[i];
  return {std::move(c), out.optimum};
}

inline bool scaled_ball_inside(const HPolytope& body, const QVec& center, const Rational& scale,
                               const PolytopalNorm& n) {
  for (const auto& w : n.ball_v().vertices()) {
    if (!contains(body, center + scale * w)) return false;
  }
  return true;
}

}  // namespace detail

/// Checks whether P ∩ h is a proper subbody with the same thickness, which
/// proves P is not reduced.
inline ReductionWitness verify_reduction_witness(const VPolytope& p, const Halfspace& h, const PolytopalNorm& n,
                                                 std::size_t dim_limit = kDefaultHullDimLimit) {
  detail::require_same_dim(h.dim(), p.dim(), "verify_reduction_witness");
  ReductionWitness w;
  w.cut = h;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (h.slack(p.vertex(i)).sign() > 0) w.removed_vertices.push_back(i);
  }
  w.cut_body = cut_polytope(p, h, dim_limit);
  detail::require_body(w.cut_body, "verify_reduction_witness: cut body");
  w.thickness_before = thickness_exact_lp(p, n).value;
  auto after = thickness_exact_lp(w.cut_body, n);
  w.thickness_after = std::move(after.value);
  w.thickness_after_direction = std::move(after.direction);
  w.valid = !w.removed_vertices.empty() && w.thickness_after == w.thickness_before;

  const HPolytope body_h = facets_of(p, dim_limit).with(h);
  try {
    const auto ball = detail::largest_inball(facets_of(p, dim_limit), n);
    w.inball_survives = detail::scaled_ball_inside(body_h, ball.center, ball.scale, n);
  } catch (const Error&) {
    w.inball_survives = false;
  }
  return w;
}

/// Tries the facet-parallel cuts tangent to a largest inscribed ball: for a
/// facet with outward normal a, the halfspace -a·(x - c) <= λ*·h_B(-a).
/// Returns the first valid witness; nullopt proves nothing.
inline std::optional<ReductionWitness> search_reduction_witness(const VPolytope& p, const PolytopalNorm& n,
                                                                std::size_t dim_limit = kDefaultHullDimLimit) {
  detail::require_body(p, "search_reduction_witness");
  const HPolytope facets = facets_of(p, dim_limit);
  const auto ball = detail::largest_inball(facets, n);
  for (const auto& f : facets.facets()) {
    const QVec a = -f.normal();
    const Halfspace cut(a, ball.scale * dual_support(a, n) + dot(a, ball.center));
    try {
      auto w = verify_reduction_witness(p, cut, n, dim_limit);
      if (w.valid) return w;
    } catch (const DegeneracyError&) {
      continue;
    } catch (const EmptinessError&) {
      continue;
    }
  }
  return std::nullopt;
}

}  // namespace mink
