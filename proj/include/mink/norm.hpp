#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "mink/errors.hpp"
#include "mink/linalg.hpp"
#include "mink/polytope.hpp"

namespace mink {

inline constexpr std::size_t kDefaultBallDimLimit = 16;

enum class BallKind { l1, linf, custom };

/// Minkowski norm whose unit ball is a centrally symmetric polytope, held in
/// both vertex and facet form.  Custom balls are checked, never converted.
class PolytopalNorm {
 public:
  /// Cross-polytope conv{±e_i}; facets (±1,…,±1)·x <= 1.
  static PolytopalNorm l1(std::size_t d, std::size_t limit = kDefaultBallDimLimit) {
    check_dim(d, limit, "l1 ball");
    std::vector<QVec> vs;
    for (std::size_t i = 0; i < d; ++i) {
      vs.push_back(QVec::unit(d, i));
      vs.push_back(-QVec::unit(d, i));
    }
    return PolytopalNorm(BallKind::l1, VPolytope(std::move(vs)), HPolytope(d, sign_patterns(d)));
  }

  /// Cube [-1,1]^d; facets ±x_i <= 1.
  static PolytopalNorm linf(std::size_t d, std::size_t limit = kDefaultBallDimLimit) {
    check_dim(d, limit, "linf ball");
    std::vector<QVec> vs;
    for (const auto& h : sign_patterns(d)) vs.push_back(h.normal());
    std::vector<Halfspace> fs;
    for (std::size_t i = 0; i < d; ++i) {
      fs.emplace_back(QVec::unit(d, i), 1);
      fs.emplace_back(-QVec::unit(d, i), 1);
    }
    return PolytopalNorm(BallKind::linf, VPolytope(std::move(vs)), HPolytope(d, std::move(fs)));
  }

  /// A user-supplied ball.  Throws DomainError unless both descriptions are
  /// consistent, centrally symmetric, and have the origin in the interior.
  static PolytopalNorm custom(VPolytope ball_v, HPolytope ball_h) {
    validate(ball_v, ball_h);
    return PolytopalNorm(BallKind::custom, std::move(ball_v), std::move(ball_h));
  }

  [[nodiscard]] BallKind kind() const { return kind_; }
  [[nodiscard]] std::size_t dim() const { return ball_v_.dim(); }
  [[nodiscard]] const VPolytope& ball_v() const { return ball_v_; }
  [[nodiscard]] const HPolytope& ball_h() const { return ball_h_; }

  /// λ·B as an H-polytope.
  [[nodiscard]] HPolytope scaled_ball_h(const Rational& lambda) const {
    std::vector<Halfspace> fs;
    for (const auto& f : ball_h_.facets()) fs.emplace_back(f.normal(), lambda * f.rhs());
    return HPolytope(dim(), std::move(fs));
  }

 private:
  PolytopalNorm(BallKind kind, VPolytope v, HPolytope h)
      : kind_(kind), ball_v_(std::move(v)), ball_h_(std::move(h)) {}

  static void check_dim(std::size_t d, std::size_t limit, const char* what) {
    if (d == 0) throw DomainError(std::string(what) + ": dimension must be at least 1");
    if (d > limit) {
      throw SizeError(std::string(what) + ": dimension " + std::to_string(d) + " exceeds limit " +
                      std::to_string(limit));
    }
  }

  static std::vector<Halfspace> sign_patterns(std::size_t d) {
    std::vector<Halfspace> out;
    const std::size_t count = std::size_t{1} << d;
    out.reserve(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
      QVec a(d);
      for (std::size_t i = 0; i < d; ++i) a[i] = (mask >> i) & 1U ? -1 : 1;
      out.emplace_back(a, 1);
    }
    return out;
  }

  static void validate(const VPolytope& v, const HPolytope& h) {
    detail::require_same_dim(v.dim(), h.dim(), "custom ball");
    const std::size_t d = v.dim();
    if (h.size() == 0) throw DomainError("custom ball: no facets");
    for (const auto& f : h.facets()) {
      if (f.rhs().sign() <= 0) throw DomainError("custom ball: origin not interior to facet " + f.str());
    }
    const std::set<QVec> vs(v.vertices().begin(), v.vertices().end());
    for (const auto& x : v.vertices()) {
      if (!vs.contains(-x)) throw DomainError("custom ball: vertex set not symmetric at " + x.str());
    }
    const std::set<Halfspace> fs(h.facets().begin(), h.facets().end());
    for (const auto& f : h.facets()) {
      if (!fs.contains(Halfspace(-f.normal(), f.rhs()))) {
        throw DomainError("custom ball: facet set not symmetric at " + f.str());
      }
    }
    for (const auto& x : v.vertices()) {
      std::size_t tight = 0;
      for (const auto& f : h.facets()) {
        const int s = f.slack(x).sign();
        if (s > 0) throw DomainError("custom ball: vertex " + x.str() + " violates " + f.str());
        if (s == 0) ++tight;
      }
      if (tight < d) throw DomainError("custom ball: vertex " + x.str() + " is not tight on enough facets");
    }
    for (const auto& f : h.facets()) {
      std::vector<QVec> on;
      for (const auto& x : v.vertices()) {
        if (f.slack(x).is_zero()) on.push_back(x);
      }
      if (on.size() < d || affine_rank(on) + 1 != d) {
        throw DomainError("custom ball: facet " + f.str() + " is not spanned by ball vertices");
      }
    }
  }

  BallKind kind_;
  VPolytope ball_v_;
  HPolytope ball_h_;
};

inline PolytopalNorm l1_ball(std::size_t d, std::size_t limit = kDefaultBallDimLimit) {
  return PolytopalNorm::l1(d, limit);
}
inline PolytopalNorm linf_ball(std::size_t d, std::size_t limit = kDefaultBallDimLimit) {
  return PolytopalNorm::linf(d, limit);
}

/// Gauge of x from the facet description: max over facets (a·x)/b, at least 0.
inline Rational norm_via_facets(const QVec& x, const PolytopalNorm& n) {
  detail::require_same_dim(x.size(), n.dim(), "norm");
  Rational best;
  for (const auto& f : n.ball_h().facets()) {
    Rational v = dot(f.normal(), x) / f.rhs();
    if (v > best) best = std::move(v);
  }
  return best;
}

/// ‖x‖.  The l1 and linf balls use their closed forms; see norm_via_facets
/// for the general route.
inline Rational norm(const QVec& x, const PolytopalNorm& n) {
  detail::require_same_dim(x.size(), n.dim(), "norm");
  switch (n.kind()) {
    case BallKind::l1: {
      Rational s;
      for (const auto& c : x) s += c.abs();
      return s;
    }
    case BallKind::linf: {
      Rational m;
      for (const auto& c : x) m = max(m, c.abs());
      return m;
    }
    case BallKind::custom: break;
  }
  return norm_via_facets(x, n);
}

/// h_B(u), the support value of the unit ball (the dual norm of u).
inline Rational dual_support(const QVec& u, const PolytopalNorm& n) {
  detail::require_same_dim(u.size(), n.dim(), "dual_support");
  return support(n.ball_v(), u);
}

inline Rational parallel_hyperplane_distance(const QVec& a, const Rational& c1, const Rational& c2,
                                             const PolytopalNorm& n) {
  if (a.is_zero()) throw DomainError("parallel_hyperplane_distance: zero normal");
  return (c1 - c2).abs() / dual_support(a, n);
}

/// Distance from v to the hyperplane {y : a·y = c}.
inline Rational point_hyperplane_distance(const QVec& v, const QVec& a, const Rational& c,
                                          const PolytopalNorm& n) {
  if (a.is_zero()) throw DomainError("point_hyperplane_distance: zero normal");
  detail::require_same_dim(v.size(), a.size(), "point_hyperplane_distance");
  return (dot(a, v) - c).abs() / dual_support(a, n);
}

}  // namespace mink
