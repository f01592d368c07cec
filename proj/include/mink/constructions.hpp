#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mink/completeness.hpp"
#include "mink/errors.hpp"
#include "mink/metrics.hpp"
#include "mink/norm.hpp"
#include "mink/polytope.hpp"
#include "mink/walsh.hpp"

namespace mink {

inline constexpr unsigned kDefaultWalshSimplexLimit = 4;

/// conv{(-1,-1,-1), (1,1,-1), (1,-1,1), (-1,1,1)}: a complete, non-reduced
/// tetrahedron in l1^3.
inline VPolytope tetrahedron_k() {
  return VPolytope({QVec{-1, -1, -1}, QVec{1, 1, -1}, QVec{1, -1, 1}, QVec{-1, 1, 1}});
}

/// Rows of the Walsh matrix of order 2^n with column 0 dropped: 2^n
/// affinely independent points in dimension 2^n - 1 summing to zero.
inline VPolytope walsh_simplex(unsigned n, unsigned limit = kDefaultWalshSimplexLimit) {
  if (n < 2) throw DomainError("walsh_simplex: n must be at least 2");
  if (n > limit) {
    throw SizeError("walsh_simplex: n = " + std::to_string(n) + " exceeds limit " + std::to_string(limit));
  }
  const QMat h = walsh_matrix(n);
  const std::size_t dim = h.cols() - 1;
  std::vector<QVec> vs;
  vs.reserve(h.rows());
  for (std::size_t i = 0; i < h.rows(); ++i) {
    QVec a(dim);
    for (std::size_t j = 1; j < h.cols(); ++j) a[j - 1] = h(i, j);
    vs.push_back(std::move(a));
  }
  VPolytope s(std::move(vs));
  if (!s.is_simplex()) throw std::logic_error("walsh_simplex: rows are affinely dependent");
  return s;
}

/// One named pass/fail line of a verification report.
struct CheckItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail {

class CheckList {
 public:
  void add(std::string name, bool ok, std::string detail = {}) {
    items_.push_back({std::move(name), ok, std::move(detail)});
  }
  void expect_eq(std::string name, const Rational& got, const Rational& want) {
    add(std::move(name), got == want, "got " + got.str() + ", expected " + want.str());
  }
  [[nodiscard]] std::vector<CheckItem> take() { return std::move(items_); }

 private:
  std::vector<CheckItem> items_;
};

inline bool all_passed(const std::vector<CheckItem>& items) {
  for (const auto& c : items) {
    if (!c.passed) return false;
  }
  return true;
}

}  // namespace detail

struct ClaimsReport {
  VPolytope body;
  Rational diameter;
  std::vector<std::pair<std::size_t, std::size_t>> diameter_pairs;  // every pair at distance diam
  std::vector<Rational> vertex_centroid_distances;                   // ‖a_i - centroid of the rest‖
  bool ball_inside = false;
  bool is_complete = false;
  Rational thickness_exact_lp;
  QVec thickness_direction;
  Rational thickness_difference_body;
  Rational inball_scale;
  ReductionWitness witness;
  std::vector<CheckItem> checks;
  double seconds = 0;

  [[nodiscard]] bool passed() const { return detail::all_passed(checks); }
};

/// Reproduces the dimension-3 statements about K in l1^3: diameter 4,
/// completeness, thickness 2 (both routes), inball scale 1, and the cut
/// x + y + z >= -1 as a same-thickness proper subbody.
inline ClaimsReport verify_claims_dim3() {
  const auto start = std::chrono::steady_clock::now();
  ClaimsReport r;
  detail::CheckList checks;
  r.body = tetrahedron_k();
  const auto ball = l1_ball(3);
  const auto& k = r.body;

  r.diameter = diameter(k, ball).value;
  checks.expect_eq("diameter", r.diameter, 4);
  for (std::size_t i = 0; i < k.size(); ++i) {
    for (std::size_t j = i + 1; j < k.size(); ++j) {
      if (norm(k.vertex(i) - k.vertex(j), ball) == r.diameter) r.diameter_pairs.emplace_back(i, j);
    }
  }
  checks.add("all vertex pairs at distance 4", r.diameter_pairs.size() == 6,
             std::to_string(r.diameter_pairs.size()) + " of 6 pairs");

  bool centroid_ok = true;
  for (std::size_t i = 0; i < k.size(); ++i) {
    std::vector<QVec> rest;
    for (std::size_t j = 0; j < k.size(); ++j) {
      if (j != i) rest.push_back(k.vertex(j));
    }
    r.vertex_centroid_distances.push_back(norm(k.vertex(i) - centroid(rest), ball));
    centroid_ok = centroid_ok && r.vertex_centroid_distances.back() == 4;
  }
  checks.add("vertex to opposite-face centroid distance 4", centroid_ok);

  std::vector<QVec> midpoints;
  for (std::size_t i = 0; i < k.size(); ++i) {
    for (std::size_t j = i + 1; j < k.size(); ++j) midpoints.push_back(Rational(1, 2) * (k.vertex(i) + k.vertex(j)));
  }
  checks.add("edge midpoints are the unit ball vertices",
             VPolytope::from_points(midpoints).same_vertex_set(ball.ball_v()));

  const HPolytope kh = simplex_hrep(k);
  r.ball_inside = is_subset(ball.ball_v(), kh);
  checks.add("unit ball inside K", r.ball_inside);

  r.is_complete = is_complete(k, ball).is_complete;
  checks.add("K is complete", r.is_complete);

  auto lp = thickness_exact_lp(k, ball);
  r.thickness_exact_lp = lp.value;
  r.thickness_direction = lp.direction;
  checks.expect_eq("thickness (exact_lp)", r.thickness_exact_lp, 2);
  r.thickness_difference_body = thickness_difference_body(k, ball).value;
  checks.expect_eq("thickness (difference_body)", r.thickness_difference_body, 2);
  checks.expect_eq("slab gamma = +-1 width", width(k, QVec{0, 0, 1}, ball), 2);

  r.inball_scale = inball_scale(kh, ball);
  checks.expect_eq("inball scale", r.inball_scale, 1);

  r.witness = verify_reduction_witness(k, Halfspace(QVec{-1, -1, -1}, 1), ball);
  checks.add("cut x+y+z >= -1 is a valid non-reducedness witness", r.witness.valid,
             "thickness " + r.witness.thickness_before.str() + " -> " + r.witness.thickness_after.str());
  checks.add("cut removes exactly a1",
             r.witness.removed_vertices == std::vector<std::size_t>{0});
  checks.expect_eq("thickness after cut", r.witness.thickness_after, 2);

  r.checks = checks.take();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

enum class ProofMode { exact, certificate };

inline std::string_view to_string(ProofMode m) { return m == ProofMode::exact ? "exact" : "certificate"; }

/// Finite checks standing in for "‖v - w‖ = 2^n for every w in F_v".
struct VertexFacetDistances {
  Rational centroid_distance;                  // to the centroid of F_v
  std::vector<Rational> facet_vertex_distances;  // to each vertex of F_v
  Rational hyperplane_distance;                // to aff F_v
};

struct PropositionOptions {
  /// Completeness is attempted only when the ball hull has at most this
  /// many constraints (the l1 ball in dimension d has 2^d facets).
  std::size_t completeness_facet_budget = 4096;
};

struct PropositionReport {
  unsigned n = 0;
  std::size_t dim = 0;
  ProofMode mode = ProofMode::exact;
  Rational item1_diameter;
  bool item1_all_pairs_equal = false;
  std::vector<VertexFacetDistances> item2_vertex_facet_distances;
  bool item3_ball_contained = false;
  bool item3_facets_support_ball = false;
  std::optional<Rational> item4_thickness;  // exact mode only
  ThicknessBounds item4_bounds;
  ReductionWitness item5_witness;
  std::optional<bool> completeness;  // nullopt when skipped
  std::string completeness_note;
  Rational thickness_to_diameter;
  std::vector<CheckItem> checks;
  double seconds = 0;

  [[nodiscard]] bool passed() const { return detail::all_passed(checks); }
};

/// Runs every item of the Walsh-simplex construction in l1^{2^n - 1}.
/// Exact mode computes the thickness by LP (n <= 3); certificate mode
/// certifies it by the sandwich 2·inball_scale <= T(S) <= width along
/// e_{2^{n-1}}.
inline PropositionReport verify_proposition(unsigned n, ProofMode mode, const PropositionOptions& opts = {}) {
  if (n < 2 || n > 4) throw DomainError("verify_proposition: n must be 2, 3 or 4");
  if (mode == ProofMode::exact && n > 3) {
    throw DomainError("verify_proposition: exact mode supports n <= 3; use certificate mode");
  }
  const auto start = std::chrono::steady_clock::now();
  PropositionReport r;
  detail::CheckList checks;
  r.n = n;
  r.mode = mode;
  const VPolytope s = walsh_simplex(n);
  r.dim = s.dim();
  const auto ball = l1_ball(r.dim);
  const Rational two_n = Rational(1L << n);
  const Rational facet_count = Rational(static_cast<long>(s.size() - 1));

  // Item 1.
  const auto diam = diameter(s, ball);
  r.item1_diameter = diam.value;
  checks.expect_eq("item 1: diameter", r.item1_diameter, two_n);
  bool pairs = true;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) pairs = pairs && norm(s.vertex(i) - s.vertex(j), ball) == two_n;
  r.item1_all_pairs_equal = pairs;
  checks.add("item 1: all pairwise vertex distances equal 2^n", pairs);

  QVec sum(r.dim);
  for (const auto& v : s.vertices()) sum += v;
  checks.add("vertex sum is the origin", sum.is_zero());

  // Item 2.  Facet i of simplex_hrep is opposite vertex i.
  const HPolytope sh = simplex_hrep(s);
  bool item2 = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    VertexFacetDistances d;
    std::vector<QVec> rest;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j == i) continue;
      rest.push_back(s.vertex(j));
      d.facet_vertex_distances.push_back(norm(s.vertex(i) - s.vertex(j), ball));
      item2 = item2 && d.facet_vertex_distances.back() == two_n;
    }
    const QVec w = centroid(rest);
    item2 = item2 && w == (Rational(-1) / facet_count) * s.vertex(i);
    d.centroid_distance = norm(s.vertex(i) - w, ball);
    d.hyperplane_distance = point_hyperplane_distance(s.vertex(i), sh.facet(i).normal(), sh.facet(i).rhs(), ball);
    item2 = item2 && d.centroid_distance == two_n && d.hyperplane_distance == two_n;
    r.item2_vertex_facet_distances.push_back(std::move(d));
  }
  checks.add("item 2: centroid, facet-vertex and hyperplane distances equal 2^n", item2,
             "finite form: checked at every facet vertex and the facet centroid");

  // Item 3.
  r.item3_ball_contained = is_subset(ball.ball_v(), sh);
  checks.add("item 3: unit ball inside S", r.item3_ball_contained);
  bool supports = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& f = sh.facet(i);
    const QVec touch = (Rational(-1) / facet_count) * s.vertex(i);
    supports = supports && f.slack(touch).is_zero() && norm(touch, ball) == 1 && dual_support(f.normal(), ball) == f.rhs();
  }
  r.item3_facets_support_ball = supports;
  checks.add("item 3: each facet hyperplane supports B at -v/(2^n-1)", supports);

  // Item 4.
  const QVec slab = QVec::unit(r.dim, (std::size_t{1} << (n - 1)) - 1);
  r.item4_bounds = thickness_bounds(s, sh, slab, ball);
  checks.expect_eq("item 4: lower bound 2*inball_scale", r.item4_bounds.lower, 2);
  checks.expect_eq("item 4: width along e_{2^{n-1}}", r.item4_bounds.upper, 2);
  if (mode == ProofMode::exact) {
    r.item4_thickness = thickness_exact_lp(s, ball).value;
    checks.expect_eq("item 4: thickness (exact_lp)", *r.item4_thickness, 2);
  }
  const Rational thick = r.item4_thickness.value_or(r.item4_bounds.upper);

  // Item 5.
  QVec ones(r.dim, Rational(1));
  r.item5_witness = verify_reduction_witness(s, Halfspace(ones, 1), ball);
  checks.add("item 5: cut sum <= 1 is a valid non-reducedness witness", r.item5_witness.valid,
             "thickness " + r.item5_witness.thickness_before.str() + " -> " + r.item5_witness.thickness_after.str());
  checks.add("item 5: cut removes exactly the all-ones vertex",
             r.item5_witness.removed_vertices == std::vector<std::size_t>{0});
  checks.add("item 5: unit ball survives the cut", r.item5_witness.inball_survives);

  // Completeness.
  if (mode == ProofMode::certificate && ball.ball_h().size() > opts.completeness_facet_budget) {
    r.completeness_note = "skipped: ball hull has " + std::to_string(ball.ball_h().size()) +
                          " constraints, over the budget of " + std::to_string(opts.completeness_facet_budget);
  } else {
    r.completeness = is_complete(s, ball).is_complete;
    checks.add("S is complete", *r.completeness);
  }

  r.thickness_to_diameter = thick / r.item1_diameter;
  checks.expect_eq("thickness / diameter", r.thickness_to_diameter, Rational(1) / Rational(1L << (n - 1)));

  r.checks = checks.take();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace mink
