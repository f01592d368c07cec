#pragma once

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "mink/errors.hpp"
#include "mink/linalg.hpp"
#include "mink/polytope.hpp"

namespace mink {

inline constexpr std::size_t kDefaultHullDimLimit = 8;

namespace detail {

struct Ray {
  QVec z;
  boost::dynamic_bitset<> zeros;  // constraint rows tight at z
};

inline QVec primitive_ray(const QVec& z) { return primitive_integer(z).first; }

}  // namespace detail

/// Extreme rays of the pointed cone {z : M z <= 0} by the double description
/// method.  M must have full column rank; rays come back as primitive
/// integer vectors in a deterministic order.
inline std::vector<QVec> extreme_rays(const std::vector<QVec>& rows) {
  if (rows.empty()) throw DomainError("extreme_rays: no constraints");
  const std::size_t dim = rows.front().size();
  const std::size_t m = rows.size();
  for (const auto& r : rows) detail::require_same_dim(r.size(), dim, "extreme_rays row");

  // Greedy choice of `dim` linearly independent rows for the initial cone.
  std::vector<std::size_t> initial;
  std::vector<QVec> basis;
  for (std::size_t i = 0; i < m && initial.size() < dim; ++i) {
    basis.push_back(rows[i]);
    if (rank(basis) == basis.size()) {
      initial.push_back(i);
    } else {
      basis.pop_back();
    }
  }
  if (initial.size() < dim) {
    throw DegeneracyError("extreme_rays: cone is not pointed (constraint rank " +
                          std::to_string(initial.size()) + " < " + std::to_string(dim) + ")");
  }

  const auto inv = inverse(QMat(basis));
  std::vector<detail::Ray> rays;
  for (std::size_t k = 0; k < dim; ++k) {
    // Column k of -B^{-1} is tight on every initial row except row k.
    QVec z(dim);
    for (std::size_t i = 0; i < dim; ++i) z[i] = -(*inv)(i, k);
    detail::Ray ray{detail::primitive_ray(z), boost::dynamic_bitset<>(m)};
    for (std::size_t j = 0; j < dim; ++j) {
      if (j != k) ray.zeros.set(initial[j]);
    }
    rays.push_back(std::move(ray));
  }

  boost::dynamic_bitset<> processed(m);
  for (auto i : initial) processed.set(i);

  for (std::size_t row = 0; row < m; ++row) {
    if (processed.test(row)) continue;
    std::vector<Rational> value;
    value.reserve(rays.size());
    for (auto& r : rays) {
      value.push_back(dot(rows[row], r.z));
      if (value.back().is_zero()) r.zeros.set(row);
    }
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (value[i].sign() > 0) pos.push_back(i);
      if (value[i].sign() < 0) neg.push_back(i);
    }
    std::vector<detail::Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (value[i].sign() <= 0) next.push_back(rays[i]);
    }
    for (auto p : pos) {
      for (auto n : neg) {
        const auto common = rays[p].zeros & rays[n].zeros & processed;
        if (common.count() + 2 < dim) continue;
        // Combinatorial adjacency: no third ray is tight on all of `common`.
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == n) continue;
          if (common.is_subset_of(rays[o].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        QVec z = value[p] * rays[n].z - value[n] * rays[p].z;
        detail::Ray ray{detail::primitive_ray(z), common};
        ray.zeros.set(row);
        next.push_back(std::move(ray));
      }
    }
    rays = std::move(next);
    processed.set(row);
  }

  std::vector<QVec> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.z));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Irredundant facet description of conv(points).  The points must affinely
/// span the ambient space, whose dimension is capped at `dim_limit`.
inline HPolytope dd_hull(const std::vector<QVec>& points, std::size_t dim_limit = kDefaultHullDimLimit) {
  const VPolytope p = VPolytope::from_points(points);
  const std::size_t d = p.dim();
  if (d > dim_limit) {
    throw SizeError("dd_hull: dimension " + std::to_string(d) + " exceeds limit " + std::to_string(dim_limit));
  }
  const auto r = affine_rank(p.vertices());
  if (r != d) {
    throw DegeneracyError("dd_hull: points span an affine subspace of rank " + std::to_string(r) +
                          " in dimension " + std::to_string(d));
  }
  // A facet a·x <= b of the hull is an extreme ray (a, b) of the cone
  // {(a, b) : a·p - b <= 0 for every point p}.
  std::vector<QVec> rows;
  rows.reserve(p.size());
  for (const auto& v : p.vertices()) {
    QVec row(d + 1);
    for (std::size_t i = 0; i < d; ++i) row[i] = v[i];
    row[d] = -1;
    rows.push_back(std::move(row));
  }
  std::vector<Halfspace> facets;
  for (const auto& z : extreme_rays(rows)) {
    QVec a(d);
    for (std::size_t i = 0; i < d; ++i) a[i] = z[i];
    if (a.is_zero()) continue;
    facets.emplace_back(a, z[d]);
  }
  std::sort(facets.begin(), facets.end());
  return HPolytope(d, std::move(facets));
}

inline HPolytope dd_hull(const VPolytope& p, std::size_t dim_limit = kDefaultHullDimLimit) {
  return dd_hull(p.vertices(), dim_limit);
}

/// Vertices of a bounded H-polytope, via extreme rays of its homogenization
/// {(x, t) : a·x - b t <= 0, t >= 0}.
inline VPolytope vertex_enumeration(const HPolytope& h, std::size_t dim_limit = kDefaultHullDimLimit) {
  const std::size_t d = h.dim();
  if (d > dim_limit) {
    throw SizeError("vertex_enumeration: dimension " + std::to_string(d) + " exceeds limit " +
                    std::to_string(dim_limit));
  }
  std::vector<QVec> normals;
  for (const auto& f : h.facets()) normals.push_back(f.normal());
  if (rank(normals) < d) throw UnboundedError("vertex_enumeration: polytope contains a line");

  std::vector<QVec> rows;
  for (const auto& f : h.facets()) {
    QVec row(d + 1);
    for (std::size_t i = 0; i < d; ++i) row[i] = f.normal()[i];
    row[d] = -f.rhs();
    rows.push_back(std::move(row));
  }
  QVec positive_t(d + 1);
  positive_t[d] = -1;
  rows.push_back(std::move(positive_t));

  std::vector<QVec> vertices;
  for (const auto& z : extreme_rays(rows)) {
    if (z[d].is_zero()) throw UnboundedError("vertex_enumeration: polytope is unbounded");
    QVec x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = z[i] / z[d];
    vertices.push_back(std::move(x));
  }
  if (vertices.empty()) throw EmptinessError("vertex_enumeration: polytope is empty");
  std::sort(vertices.begin(), vertices.end());
  return VPolytope(std::move(vertices));
}

/// Facet description of a full-dimensional V-polytope: the closed-form
/// simplex facets when possible, double description otherwise.
inline HPolytope facets_of(const VPolytope& p, std::size_t dim_limit = kDefaultHullDimLimit) {
  if (p.is_simplex()) return simplex_hrep(p);
  return dd_hull(p, dim_limit);
}

/// Vertices of P ∩ h.  Simplices use the edge-crossing construction; other
/// polytopes go through their facets and vertex enumeration.
inline VPolytope cut_polytope(const VPolytope& p, const Halfspace& h,
                              std::size_t dim_limit = kDefaultHullDimLimit) {
  detail::require_same_dim(h.dim(), p.dim(), "cut_polytope");
  if (p.is_simplex()) return cut_simplex(p, h);
  if (std::none_of(p.vertices().begin(), p.vertices().end(), [&](const QVec& v) { return h.contains(v); })) {
    throw EmptinessError("cut_polytope: halfspace misses the polytope");
  }
  return vertex_enumeration(dd_hull(p, dim_limit).with(h), dim_limit);
}

}  // namespace mink
