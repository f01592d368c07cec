#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mink/errors.hpp"
#include "mink/linalg.hpp"
#include "mink/lp.hpp"

namespace mink {

/// Closed halfspace normal·x <= rhs with a primitive integer normal.
class Halfspace {
 public:
  Halfspace() = default;

  /// Rescales (a, b) by a positive factor so that a becomes primitive.
  Halfspace(const QVec& a, const Rational& b) {
    if (a.size() == 0) throw DomainError("halfspace normal has length 0");
    if (a.is_zero()) throw DomainError("halfspace normal is zero");
    auto [normal, factor] = primitive_integer(a);
    normal_ = std::move(normal);
    rhs_ = b * factor;
  }

  [[nodiscard]] const QVec& normal() const { return normal_; }
  [[nodiscard]] const Rational& rhs() const { return rhs_; }
  [[nodiscard]] std::size_t dim() const { return normal_.size(); }

  /// normal·x - rhs: negative inside, zero on the boundary, positive outside.
  [[nodiscard]] Rational slack(const QVec& x) const { return dot(normal_, x) - rhs_; }
  [[nodiscard]] bool contains(const QVec& x) const { return slack(x).sign() <= 0; }
  [[nodiscard]] Halfspace opposite() const { return Halfspace(-normal_, -rhs_); }

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
  friend auto operator<=>(const Halfspace& a, const Halfspace& b) {
    if (auto c = a.normal_ <=> b.normal_; c != 0) return c;
    return a.rhs_ <=> b.rhs_;
  }

  [[nodiscard]] std::string str() const { return normal_.str() + ".x <= " + rhs_.str(); }

 private:
  QVec normal_;
  Rational rhs_;
};

/// Convex hull of a finite, duplicate-free, non-empty point list.
class VPolytope {
 public:
  VPolytope() = default;
  explicit VPolytope(std::vector<QVec> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw DomainError("polytope with no vertices");
    dim_ = vertices_.front().size();
    if (dim_ == 0) throw DomainError("polytope of dimension 0");
    std::set<QVec> seen;
    for (const auto& v : vertices_) {
      detail::require_same_dim(v.size(), dim_, "polytope vertex");
      if (!seen.insert(v).second) throw DomainError("duplicate vertex " + v.str());
    }
  }

  /// Builds a polytope from points, dropping exact duplicates (first kept).
  static VPolytope from_points(const std::vector<QVec>& points) {
    std::vector<QVec> unique;
    std::set<QVec> seen;
    for (const auto& p : points) {
      if (seen.insert(p).second) unique.push_back(p);
    }
    return VPolytope(std::move(unique));
  }

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] std::size_t size() const { return vertices_.size(); }
  [[nodiscard]] const std::vector<QVec>& vertices() const { return vertices_; }
  [[nodiscard]] const QVec& vertex(std::size_t i) const { return vertices_[i]; }

  [[nodiscard]] bool is_full_dimensional() const { return affine_rank(vertices_) == dim_; }
  [[nodiscard]] bool is_simplex() const { return size() == dim_ + 1 && is_full_dimensional(); }

  [[nodiscard]] VPolytope translated(const QVec& t) const {
    std::vector<QVec> vs;
    for (const auto& v : vertices_) vs.push_back(v + t);
    return VPolytope(std::move(vs));
  }
  [[nodiscard]] VPolytope scaled(const Rational& s) const {
    if (s.sign() <= 0) throw DomainError("polytope scale factor must be positive");
    std::vector<QVec> vs;
    for (const auto& v : vertices_) vs.push_back(s * v);
    return VPolytope(std::move(vs));
  }

  /// Equality of vertex sets, ignoring order.
  [[nodiscard]] bool same_vertex_set(const VPolytope& o) const {
    return std::set<QVec>(vertices_.begin(), vertices_.end()) ==
           std::set<QVec>(o.vertices_.begin(), o.vertices_.end());
  }

 private:
  std::size_t dim_ = 0;
  std::vector<QVec> vertices_;
};

/// Intersection of finitely many halfspaces.
class HPolytope {
 public:
  HPolytope() = default;
  HPolytope(std::size_t dim, std::vector<Halfspace> facets) : dim_(dim), facets_(std::move(facets)) {
    if (dim_ == 0) throw DomainError("polytope of dimension 0");
    for (const auto& h : facets_) detail::require_same_dim(h.dim(), dim_, "polytope facet");
  }

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] std::size_t size() const { return facets_.size(); }
  [[nodiscard]] const std::vector<Halfspace>& facets() const { return facets_; }
  [[nodiscard]] const Halfspace& facet(std::size_t i) const { return facets_[i]; }

  [[nodiscard]] HPolytope with(const Halfspace& h) const {
    detail::require_same_dim(h.dim(), dim_, "polytope facet");
    auto fs = facets_;
    fs.push_back(h);
    return HPolytope(dim_, std::move(fs));
  }

  /// LP over this polytope with a given objective.
  [[nodiscard]] LpOutcome maximize(const QVec& objective) const {
    detail::require_same_dim(objective.size(), dim_, "maximize");
    LpProblem p{objective, {}};
    p.constraints.reserve(facets_.size());
    for (const auto& h : facets_) p.constraints.push_back({h.normal(), h.rhs()});
    return lp_max(p);
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Halfspace> facets_;
};

/// Support value h_P(u) = max over vertices of u·v.
inline Rational support(const VPolytope& p, const QVec& u) {
  detail::require_same_dim(u.size(), p.dim(), "support");
  Rational best = dot(u, p.vertex(0));
  for (std::size_t i = 1; i < p.size(); ++i) {
    Rational s = dot(u, p.vertex(i));
    if (s > best) best = std::move(s);
  }
  return best;
}

/// Index of the first vertex attaining the support value in direction u.
inline std::size_t support_vertex(const VPolytope& p, const QVec& u) {
  detail::require_same_dim(u.size(), p.dim(), "support");
  std::size_t arg = 0;
  Rational best = dot(u, p.vertex(0));
  for (std::size_t i = 1; i < p.size(); ++i) {
    Rational s = dot(u, p.vertex(i));
    if (s > best) {
      best = std::move(s);
      arg = i;
    }
  }
  return arg;
}

/// Facets of a full-dimensional simplex.  Facet i is the one opposite
/// vertex i: its hyperplane passes through every other vertex and vertex i
/// satisfies it strictly.
inline HPolytope simplex_hrep(const VPolytope& p) {
  const std::size_t d = p.dim();
  if (p.size() != d + 1) {
    throw DomainError("simplex_hrep: expected " + std::to_string(d + 1) + " vertices, got " +
                      std::to_string(p.size()));
  }
  const auto r = affine_rank(p.vertices());
  if (r != d) {
    throw DegeneracyError("simplex_hrep: vertices are affinely dependent (affine rank " +
                          std::to_string(r) + ")");
  }
  std::vector<Halfspace> facets;
  facets.reserve(d + 1);
  for (std::size_t opposite = 0; opposite <= d; ++opposite) {
    std::vector<QVec> on;
    for (std::size_t j = 0; j <= d; ++j) {
      if (j != opposite) on.push_back(p.vertex(j));
    }
    std::vector<QVec> diffs;
    for (std::size_t j = 1; j < on.size(); ++j) diffs.push_back(on[j] - on[0]);
    QVec normal = nullspace(diffs, d).front();
    Rational rhs = dot(normal, on[0]);
    if (dot(normal, p.vertex(opposite)) > rhs) {
      normal = -normal;
      rhs = -rhs;
    }
    facets.emplace_back(normal, rhs);
  }
  return HPolytope(d, std::move(facets));
}

inline bool contains(const HPolytope& h, const QVec& x) {
  detail::require_same_dim(x.size(), h.dim(), "contains");
  return std::all_of(h.facets().begin(), h.facets().end(),
                     [&](const Halfspace& f) { return f.contains(x); });
}

inline bool is_subset(const VPolytope& p, const HPolytope& q) {
  detail::require_same_dim(p.dim(), q.dim(), "is_subset");
  return std::all_of(p.vertices().begin(), p.vertices().end(), [&](const QVec& v) { return contains(q, v); });
}

/// H-rep containment by one LP per facet of q.  An empty p is a subset of
/// anything; an unbounded p raises UnboundedError.
inline bool is_subset(const HPolytope& p, const HPolytope& q) {
  detail::require_same_dim(p.dim(), q.dim(), "is_subset");
  for (const auto& f : q.facets()) {
    const auto out = p.maximize(f.normal());
    if (out.status == LpStatus::infeasible) return true;
    if (out.status == LpStatus::unbounded) throw UnboundedError("is_subset: left operand is unbounded");
    if (out.optimum > f.rhs()) return false;
  }
  return true;
}

/// Vertices of (simplex ∩ h): the vertices kept by h, then the edge crossing
/// points ordered by (cut vertex, kept vertex).  Every pair of simplex
/// vertices spans an edge, so no adjacency test is needed.
inline VPolytope cut_simplex(const VPolytope& p, const Halfspace& h) {
  detail::require_same_dim(h.dim(), p.dim(), "cut_simplex");
  if (!p.is_simplex()) throw DomainError("cut_simplex: polytope is not a full-dimensional simplex");
  std::vector<Rational> slack;
  slack.reserve(p.size());
  for (const auto& v : p.vertices()) slack.push_back(h.slack(v));

  std::vector<QVec> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (slack[i].sign() <= 0) out.push_back(p.vertex(i));
  }
  if (out.empty()) throw EmptinessError("cut_simplex: halfspace misses the simplex");
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (slack[j].sign() <= 0) continue;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (slack[i].sign() >= 0) continue;
      const Rational t = slack[i] / (slack[i] - slack[j]);
      out.push_back(p.vertex(i) + t * (p.vertex(j) - p.vertex(i)));
    }
  }
  return VPolytope::from_points(out);
}

/// Generating points of P - P: all v_i - v_j (i != j) and the origin.
inline VPolytope difference_body(const VPolytope& p) {
  std::vector<QVec> pts;
  pts.reserve(p.size() * p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (i != j) pts.push_back(p.vertex(i) - p.vertex(j));
    }
  }
  pts.emplace_back(p.dim());
  return VPolytope::from_points(pts);
}

}  // namespace mink
