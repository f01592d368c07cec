#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mink/errors.hpp"
#include "mink/hull.hpp"
#include "mink/lp.hpp"
#include "mink/norm.hpp"
#include "mink/polytope.hpp"

namespace mink {

enum class ThicknessMode { exact_lp, difference_body, certificate };

inline std::string_view to_string(ThicknessMode m) {
  switch (m) {
    case ThicknessMode::exact_lp: return "exact_lp";
    case ThicknessMode::difference_body: return "difference_body";
    case ThicknessMode::certificate: return "certificate";
  }
  return "unknown";
}

inline ThicknessMode parse_thickness_mode(std::string_view s) {
  if (s == "exact_lp") return ThicknessMode::exact_lp;
  if (s == "difference_body") return ThicknessMode::difference_body;
  throw DomainError("unknown thickness mode \"" + std::string(s) + "\"");
}

/// Minkowskian distance between the two supporting hyperplanes of P with
/// Euclidean normal u: (h_P(u) + h_P(-u)) / h_B(u).
inline Rational width(const VPolytope& p, const QVec& u, const PolytopalNorm& n) {
  detail::require_same_dim(u.size(), p.dim(), "width");
  if (u.is_zero()) throw DomainError("width: zero direction");
  return (support(p, u) + support(p, -u)) / dual_support(u, n);
}

struct DiameterResult {
  Rational value;
  std::pair<std::size_t, std::size_t> witness;  // first maximizing vertex pair, i < j
};

/// Largest vertex-pair distance.  The distance is convex in each argument,
/// so this is the diameter of the hull.
inline DiameterResult diameter(const VPolytope& p, const PolytopalNorm& n) {
  detail::require_same_dim(p.dim(), n.dim(), "diameter");
  DiameterResult best{Rational(0), {0, 0}};
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      Rational dist = norm(p.vertex(i) - p.vertex(j), n);
      if (dist > best.value) best = {std::move(dist), {i, j}};
    }
  }
  return best;
}

struct ThicknessResult {
  Rational value;
  QVec direction;
  ThicknessMode mode = ThicknessMode::exact_lp;
};

namespace detail {

inline void require_body(const VPolytope& p, std::string_view what) {
  const auto r = affine_rank(p.vertices());
  if (r != p.dim()) {
    throw DegeneracyError(std::string(what) + ": body is lower-dimensional (affine rank " +
                          std::to_string(r) + " in dimension " + std::to_string(p.dim()) + ")");
  }
}

/// minimize t - s over (u, s, t) with s <= u·v <= t for all vertices v of P
/// and u on the face of the polar body where ball vertex m is active.
inline LpOutcome thickness_piece(const VPolytope& p, const PolytopalNorm& n, std::size_t m) {
  const std::size_t d = p.dim();
  const std::size_t s_idx = d;
  const std::size_t t_idx = d + 1;
  LpProblem lp{QVec(d + 2), {}};
  lp.objective[s_idx] = 1;
  lp.objective[t_idx] = -1;
  for (const auto& v : p.vertices()) {
    QVec lower(d + 2), upper(d + 2);
    for (std::size_t i = 0; i < d; ++i) {
      lower[i] = -v[i];
      upper[i] = v[i];
    }
    lower[s_idx] = 1;
    upper[t_idx] = -1;
    lp.constraints.push_back({std::move(lower), Rational(0)});
    lp.constraints.push_back({std::move(upper), Rational(0)});
  }
  const auto& balls = n.ball_v().vertices();
  for (std::size_t l = 0; l < balls.size(); ++l) {
    QVec row(d + 2);
    for (std::size_t i = 0; i < d; ++i) row[i] = balls[l][i];
    if (l == m) lp.constraints.push_back({-row, Rational(-1)});
    lp.constraints.push_back({std::move(row), Rational(1)});
  }
  return lp_max(lp);
}

}  // namespace detail

/// Exact thickness: one LP per unit-ball vertex, since {u : h_B(u) = 1} is
/// covered by the pieces on which a single ball vertex attains h_B.  The
/// first piece (in ball-vertex order) reaching the minimum supplies the
/// direction.
inline ThicknessResult thickness_exact_lp(const VPolytope& p, const PolytopalNorm& n) {
  detail::require_same_dim(p.dim(), n.dim(), "thickness");
  detail::require_body(p, "thickness");
  std::optional<ThicknessResult> best;
  for (std::size_t m = 0; m < n.ball_v().size(); ++m) {
    const auto out = detail::thickness_piece(p, n, m);
    if (out.status != LpStatus::optimal) {
      throw std::logic_error("thickness LP piece " + std::to_string(m) + " is " +
                             std::string(to_string(out.status)));
    }
    Rational w = -out.optimum;
    if (!best || w < best->value) {
      QVec u(p.dim());
      for (std::size_t i = 0; i < p.dim(); ++i) u[i] = out.point[i];
      best = ThicknessResult{std::move(w), std::move(u), ThicknessMode::exact_lp};
    }
  }
  return *best;
}

/// Thickness as the inradius of P - P with respect to B:
/// min over facets (a, β) of the difference body of β / h_B(a).
inline ThicknessResult thickness_difference_body(const VPolytope& p, const PolytopalNorm& n,
                                                 std::size_t dim_limit = kDefaultHullDimLimit) {
  detail::require_same_dim(p.dim(), n.dim(), "thickness");
  detail::require_body(p, "thickness");
  const HPolytope hull = dd_hull(difference_body(p), dim_limit);
  std::optional<ThicknessResult> best;
  for (const auto& f : hull.facets()) {
    Rational w = f.rhs() / dual_support(f.normal(), n);
    if (!best || w < best->value) best = ThicknessResult{std::move(w), f.normal(), ThicknessMode::difference_body};
  }
  return *best;
}

inline ThicknessResult thickness(const VPolytope& p, const PolytopalNorm& n,
                                 ThicknessMode mode = ThicknessMode::exact_lp) {
  switch (mode) {
    case ThicknessMode::exact_lp: return thickness_exact_lp(p, n);
    case ThicknessMode::difference_body: return thickness_difference_body(p, n);
    case ThicknessMode::certificate: break;
  }
  throw DomainError("thickness: certificate mode yields bounds, not a value; use thickness_bounds");
}

/// Largest λ with λ·B ⊆ P, for P containing the origin in its interior.
inline Rational inball_scale(const HPolytope& p, const PolytopalNorm& n) {
  detail::require_same_dim(p.dim(), n.dim(), "inball_scale");
  if (p.size() == 0) throw UnboundedError("inball_scale: polytope has no facets");
  std::optional<Rational> best;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& f = p.facet(i);
    if (f.rhs().sign() <= 0) {
      throw DomainError("inball_scale: origin is not interior (facet " + std::to_string(i) + ": " + f.str() +
                        ")");
    }
    Rational s = f.rhs() / dual_support(f.normal(), n);
    if (!best || s < *best) best = std::move(s);
  }
  return *best;
}

/// Sandwich bounds 2·inball_scale <= thickness <= width(direction).
struct ThicknessBounds {
  Rational lower;
  Rational upper;
  QVec direction;
  [[nodiscard]] bool tight() const { return lower == upper; }
};

inline ThicknessBounds thickness_bounds(const VPolytope& p, const HPolytope& facets, const QVec& direction,
                                        const PolytopalNorm& n) {
  return {Rational(2) * inball_scale(facets, n), width(p, direction, n), direction};
}

struct MetricsReport {
  Rational diameter;
  std::pair<std::size_t, std::size_t> diameter_witness;
  Rational thickness;
  QVec thickness_direction;
  ThicknessMode thickness_mode = ThicknessMode::exact_lp;
  std::optional<Rational> inball_scale;  // absent when the origin is not interior
  std::string inball_note;
};

inline MetricsReport compute_metrics(const VPolytope& p, const PolytopalNorm& n,
                                     ThicknessMode mode = ThicknessMode::exact_lp) {
  MetricsReport r;
  auto d = diameter(p, n);
  r.diameter = std::move(d.value);
  r.diameter_witness = d.witness;
  auto t = thickness(p, n, mode);
  r.thickness = std::move(t.value);
  r.thickness_direction = std::move(t.direction);
  r.thickness_mode = mode;
  try {
    r.inball_scale = inball_scale(facets_of(p), n);
  } catch (const Error& e) {
    r.inball_note = e.what();
  }
  return r;
}

}  // namespace mink
