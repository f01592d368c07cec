#pragma once

// Generators and brute-force oracles shared by the test binaries.  The
// oracles deliberately avoid the library's LP and double description code.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "mink/mink.hpp"

namespace mink::testing {

inline std::mt19937& rng() {
  static std::mt19937 gen(20240611);
  return gen;
}

inline long rand_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational rand_rational(long range = 6, long max_den = 4) {
  return Rational(rand_int(-range, range), rand_int(1, max_den));
}

inline QVec rand_vec(std::size_t d, long range = 6, long max_den = 1) {
  QVec v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = rand_rational(range, max_den);
  return v;
}

inline QVec rand_nonzero_vec(std::size_t d, long range = 6, long max_den = 1) {
  for (;;) {
    QVec v = rand_vec(d, range, max_den);
    if (!v.is_zero()) return v;
  }
}

/// Random full-dimensional integer simplex.
inline VPolytope rand_simplex(std::size_t d, long range = 5) {
  for (;;) {
    std::vector<QVec> vs;
    for (std::size_t i = 0; i <= d; ++i) vs.push_back(rand_vec(d, range));
    std::set<QVec> unique(vs.begin(), vs.end());
    if (unique.size() != vs.size()) continue;
    if (affine_rank(vs) == d) return VPolytope(std::move(vs));
  }
}

/// Random full-dimensional integer point cloud of `count` distinct points.
inline VPolytope rand_body(std::size_t d, std::size_t count, long range = 5) {
  if (count < d + 1) throw std::invalid_argument("rand_body: need at least d + 1 points");
  for (;;) {
    std::set<QVec> pts;
    while (pts.size() < count) pts.insert(rand_vec(d, range));
    std::vector<QVec> vs(pts.begin(), pts.end());
    std::shuffle(vs.begin(), vs.end(), rng());
    if (affine_rank(vs) == d) return VPolytope(std::move(vs));
  }
}

inline VPolytope cube(std::size_t d) { return linf_ball(d).ball_v(); }

/// Determinant by cofactor expansion; fine for the d <= 4 matrices used here.
inline Rational det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Rational total;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    const Rational term = m[0][c] * det(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

/// Generalized cross product of d-1 vectors in R^d (zero iff dependent).
inline QVec cross(const std::vector<QVec>& vs, std::size_t d) {
  QVec n(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<std::vector<Rational>> m;
    for (const auto& v : vs) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < d; ++k) {
        if (k != i) row.push_back(v[k]);
      }
      m.push_back(std::move(row));
    }
    const Rational minor = d == 1 ? Rational(1) : det(m);
    n[i] = (i % 2 == 0) ? minor : -minor;
  }
  return n;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Facets of conv(points) by trying every d-subset of points as a candidate
/// hyperplane.  Returns normalized halfspaces, sorted and de-duplicated.
inline std::vector<Halfspace> brute_force_facets(const std::vector<QVec>& points) {
  const std::size_t d = points.front().size();
  std::set<Halfspace> facets;
  for_each_subset(points.size(), d, [&](const std::vector<std::size_t>& idx) {
    std::vector<QVec> diffs;
    for (std::size_t k = 1; k < idx.size(); ++k) diffs.push_back(points[idx[k]] - points[idx[0]]);
    QVec a = cross(diffs, d);
    if (a.is_zero()) return;
    Rational b = dot(a, points[idx[0]]);
    bool le = true, ge = true;
    std::vector<QVec> on;
    for (const auto& p : points) {
      const auto s = (dot(a, p) - b).sign();
      if (s > 0) le = false;
      if (s < 0) ge = false;
      if (s == 0) on.push_back(p);
    }
    if (!le && !ge) return;
    if (affine_rank(on) + 1 != d) return;
    if (le) facets.insert(Halfspace(a, b));
    if (ge) facets.insert(Halfspace(-a, -b));
  });
  return {facets.begin(), facets.end()};
}

/// Maximum of an LP by enumerating every basic solution (d-subsets of
/// tight constraints).  Valid when the feasible region is a polytope.
inline std::optional<Rational> brute_force_lp_max(const LpProblem& p) {
  const std::size_t d = p.objective.size();
  std::optional<Rational> best;
  for_each_subset(p.constraints.size(), d, [&](const std::vector<std::size_t>& idx) {
    std::vector<std::vector<Rational>> m;
    for (auto i : idx) m.push_back(p.constraints[i].normal.coords());
    const Rational denom = det(m);
    if (denom.is_zero()) return;
    // Cramer's rule.
    QVec x(d);
    for (std::size_t j = 0; j < d; ++j) {
      auto mj = m;
      for (std::size_t r = 0; r < d; ++r) mj[r][j] = p.constraints[idx[r]].rhs;
      x[j] = det(mj) / denom;
    }
    for (const auto& c : p.constraints) {
      if (dot(c.normal, x) > c.rhs) return;
    }
    Rational v = dot(p.objective, x);
    if (!best || v > *best) best = v;
  });
  return best;
}

/// 3-d custom ball: hexagonal prism, hexagon conv{±(1,0), ±(0,1), ±(1,1)} × [-1, 1].
inline PolytopalNorm hexagonal_prism_ball() {
  const std::vector<std::pair<long, long>> hex = {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}};
  std::vector<QVec> vs;
  for (auto [x, y] : hex) {
    vs.push_back(QVec{x, y, 1});
    vs.push_back(QVec{x, y, -1});
  }
  std::vector<Halfspace> fs = {
      Halfspace(QVec{1, 0, 0}, 1),  Halfspace(QVec{-1, 0, 0}, 1), Halfspace(QVec{0, 1, 0}, 1),
      Halfspace(QVec{0, -1, 0}, 1), Halfspace(QVec{1, -1, 0}, 1), Halfspace(QVec{-1, 1, 0}, 1),
      Halfspace(QVec{0, 0, 1}, 1),  Halfspace(QVec{0, 0, -1}, 1),
  };
  return PolytopalNorm::custom(VPolytope(std::move(vs)), HPolytope(3, std::move(fs)));
}

}  // namespace mink::testing
