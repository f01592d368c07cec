// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mink/mink.hpp"
#include "test_support.hpp"

namespace {

using namespace mink;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

int failures = 0;

void criterion(const std::string& name, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds) o.require(false, "runtime over " + std::to_string(limit_seconds) + " s");
  if (!o.ok) ++failures;
  std::printf("%s  %-58s %8.3f s%s%s\n", o.ok ? "PASS" : "FAIL", name.c_str(), secs, o.detail.empty() ? "" : "  ",
              o.detail.c_str());
  std::fflush(stdout);
}

QVec ones(std::size_t d) { return QVec(std::vector<Rational>(d, Rational(1))); }

Outcome dimension_three_claims() {
  Outcome o;
  const auto r = verify_claims_dim3();
  for (const auto& c : r.checks) o.require(c.passed, c.name);
  o.require(r.diameter == 4, "diameter " + r.diameter.str());
  o.require(r.is_complete, "K not complete");
  o.require(r.thickness_exact_lp == 2, "exact_lp thickness " + r.thickness_exact_lp.str());
  o.require(r.thickness_difference_body == 2, "difference_body thickness " + r.thickness_difference_body.str());
  o.require(r.inball_scale == 1, "inball scale " + r.inball_scale.str());
  o.require(r.witness.cut == Halfspace(QVec{-1, -1, -1}, 1), "unexpected cut");
  o.require(r.witness.valid && r.witness.thickness_after == 2, "cut is not a valid witness");
  return o;
}

Outcome walsh_three_exact() {
  Outcome o;
  const auto r = verify_proposition(3, ProofMode::exact);
  for (const auto& c : r.checks) o.require(c.passed, c.name);
  o.require(r.dim == 7, "dim");
  o.require(r.item1_diameter == 8 && r.item1_all_pairs_equal, "pairwise distances");
  for (const auto& d : r.item2_vertex_facet_distances) {
    o.require(d.centroid_distance == 8 && d.hyperplane_distance == 8, "vertex-facet distance");
    for (const auto& x : d.facet_vertex_distances) o.require(x == 8, "facet-vertex distance");
  }
  o.require(r.item3_ball_contained, "unit ball not inside S");
  o.require(r.item4_thickness && *r.item4_thickness == 2, "exact_lp thickness");
  o.require(r.item5_witness.cut == Halfspace(ones(7), 1) && r.item5_witness.valid, "cut sum <= 1 not valid");
  o.require(r.completeness && *r.completeness, "S not complete");
  return o;
}

Outcome walsh_four_certificate() {
  Outcome o;
  const auto r = verify_proposition(4, ProofMode::certificate);
  for (const auto& c : r.checks) o.require(c.passed, c.name);
  o.require(r.dim == 15, "dim");
  o.require(r.item1_diameter == 16, "diameter " + r.item1_diameter.str());
  o.require(r.item4_bounds.lower == 2, "2*inball_scale " + r.item4_bounds.lower.str());
  o.require(r.item4_bounds.direction == QVec::unit(15, 7), "slab direction is not e_8");
  o.require(r.item4_bounds.upper == 2, "width along e_8 " + r.item4_bounds.upper.str());
  const auto& w = r.item5_witness;
  o.require(w.removed_vertices == std::vector<std::size_t>{0}, "cut does not remove exactly the all-ones vertex");
  // 15 kept vertices plus one crossing on each edge to the removed vertex.
  o.require(w.cut_body.size() == 30, "cut body has " + std::to_string(w.cut_body.size()) + " vertices");
  o.require(w.thickness_after == 2, "thickness after cut " + w.thickness_after.str());
  o.detail += o.ok ? "cut body: 30 vertices (15 kept + 15 crossings)" : "";
  return o;
}

Outcome ratios() {
  Outcome o;
  const Rational want[] = {Rational(1, 2), Rational(1, 4), Rational(1, 8)};
  for (unsigned n = 2; n <= 4; ++n) {
    const auto r = verify_proposition(n, n == 4 ? ProofMode::certificate : ProofMode::exact);
    o.require(r.thickness_to_diameter == want[n - 2], "n=" + std::to_string(n) + ": " + r.thickness_to_diameter.str());
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::vector<std::pair<std::string, VPolytope>> corpus = {
      {"K", tetrahedron_k()},
      {"walsh_simplex(2)", walsh_simplex(2)},
      {"cube", testing::cube(3)},
      {"crosspolytope", l1_ball(3).ball_v()},
  };
  for (int i = 0; i < 50; ++i) {
    const std::size_t d = 3 + static_cast<std::size_t>(i % 2);
    corpus.emplace_back("random simplex " + std::to_string(i), testing::rand_simplex(d));
  }
  for (const auto& [name, p] : corpus) {
    const auto b = l1_ball(p.dim());
    const auto lp = thickness_exact_lp(p, b).value;
    const auto db = thickness_difference_body(p, b).value;
    o.require(lp == db, name + ": " + lp.str() + " vs " + db.str());
  }
  return o;
}

Outcome property_suites() {
  Outcome o;
  constexpr int kCases = 100;

  for (unsigned k = 1; k <= 6; ++k) {
    const QMat h = walsh_matrix(k);
    const QMat hht = mat_mul(h, transpose(h));
    o.require(hht == scale(Rational(static_cast<long>(h.rows())), QMat::identity(h.rows())), "H Hᵀ != nI at k=" + std::to_string(k));
  }

  for (int which = 0; which < 3; ++which) {
    for (int t = 0; t < kCases; ++t) {
      const std::size_t d = which == 2 ? 3 : static_cast<std::size_t>(testing::rand_int(1, 5));
      const auto b = which == 0 ? l1_ball(d) : which == 1 ? linf_ball(d) : testing::hexagonal_prism_ball();
      const QVec x = testing::rand_vec(d, 6, 3), y = testing::rand_vec(d, 6, 3);
      const Rational lambda = testing::rand_rational(5, 3);
      const bool ok = norm(x, b) >= 0 && norm(x, b).is_zero() == x.is_zero() &&
                      norm(lambda * x, b) == lambda.abs() * norm(x, b) &&
                      norm(x + y, b) <= norm(x, b) + norm(y, b) && norm(x, b) == norm_via_facets(x, b);
      o.require(ok, "norm axioms");
    }
  }

  for (int t = 0; t < kCases; ++t) {
    const std::size_t d = static_cast<std::size_t>(testing::rand_int(1, 3));
    LpProblem p{testing::rand_vec(d, 5, 3), {}};
    for (std::size_t i = 0; i < d; ++i) {
      p.constraints.push_back({QVec::unit(d, i), Rational(8)});
      p.constraints.push_back({-QVec::unit(d, i), Rational(8)});
    }
    for (long k = testing::rand_int(0, 4); k > 0; --k) {
      p.constraints.push_back({testing::rand_nonzero_vec(d, 4), testing::rand_rational(6, 3)});
    }
    const auto out = lp_max(p);
    const auto oracle = testing::brute_force_lp_max(p);
    if (oracle) {
      o.require(out.status == LpStatus::optimal && out.optimum == *oracle && check_certificate(p, out), "LP certificate");
    } else {
      o.require(out.status == LpStatus::infeasible, "LP infeasibility");
    }
  }

  for (int t = 0; t < kCases; ++t) {
    const std::size_t d = static_cast<std::size_t>(testing::rand_int(2, 3));
    const auto b = t % 2 == 0 ? l1_ball(d) : linf_ball(d);
    const auto p = testing::rand_body(d, d + 1 + static_cast<std::size_t>(testing::rand_int(0, 3)));
    const Rational diam = diameter(p, b).value;
    const Rational r2 = diam + Rational(testing::rand_int(1, 4), testing::rand_int(1, 3));
    const auto h1 = ball_hull(p, diam, b);
    o.require(is_subset(p, h1), "P not inside its ball hull");
    o.require(is_subset(h1, ball_hull(p, r2, b)), "ball hull not monotone in r");
  }

  for (int t = 0; t < kCases; ++t) {
    const std::size_t d = static_cast<std::size_t>(testing::rand_int(2, 3));
    const auto b = t % 2 == 0 ? l1_ball(d) : linf_ball(d);
    const auto p = testing::rand_body(d, d + 1 + static_cast<std::size_t>(testing::rand_int(0, 3)));
    const auto th = thickness_exact_lp(p, b);
    o.require(width(p, th.direction, b) == th.value, "width at witness != thickness");
    for (int k = 0; k < 5; ++k) o.require(th.value <= width(p, testing::rand_nonzero_vec(d, 5, 2), b), "width below thickness");
  }

  const auto cube = testing::cube(3);
  o.require(vertex_diameter_realization(cube, l1_ball(3)).holds, "cube: vertex diameter realization");
  o.require(!is_complete(cube, l1_ball(3)).is_complete, "cube: reported complete in l1");
  return o;
}

}  // namespace

int main() {
  criterion("1 dimension-3 claims for K in l1^3", 1.0, dimension_three_claims);
  criterion("2 Walsh simplex n=3 (dim 7), exact", 60.0, walsh_three_exact);
  criterion("3 Walsh simplex n=4 (dim 15), certificate", 300.0, walsh_four_certificate);
  criterion("4 thickness/diameter = 1/2, 1/4, 1/8", 0, ratios);
  criterion("5 exact_lp == difference_body on the fixture corpus", 0, oracle_equivalence);
  criterion("6 property suites", 0, property_suites);
  std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
