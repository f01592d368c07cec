#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mink/errors.hpp"
#include "mink/linalg.hpp"

namespace mink {

/// One inequality normal·x <= rhs.
struct LinearConstraint {
  QVec normal;
  Rational rhs;
};

/// maximize objective·x subject to every constraint; x is unrestricted in sign.
struct LpProblem {
  QVec objective;
  std::vector<LinearConstraint> constraints;
};

enum class LpStatus { optimal, infeasible, unbounded };

inline std::string_view to_string(LpStatus s) {
  switch (s) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
  }
  return "unknown";
}

/// Result of lp_max.  When optimal, `point` is primal feasible,
/// objective·point = optimum, and `dual_multipliers` y >= 0 satisfy
/// yᵀA = objective and yᵀb = optimum.
struct LpOutcome {
  LpStatus status = LpStatus::infeasible;
  Rational optimum;
  QVec point;
  std::vector<Rational> dual_multipliers;
};

namespace detail {

/// Dense simplex tableau for  minimize cost·y  s.t.  E y = f,  y >= 0.
///
/// Rows are sign-flipped so that f >= 0 and one artificial column per row is
/// appended; phase 1 drives the artificials out, phase 2 optimizes `cost`.
/// Bland's rule (lowest index entering, lowest basic index among ratio ties)
/// is used throughout, so the method terminates and is deterministic.
class StandardFormSimplex {
 public:
  enum class Result { optimal, infeasible, unbounded };

  StandardFormSimplex(const std::vector<std::vector<Rational>>& e, std::vector<Rational> f,
                      std::vector<Rational> cost)
      : rows_(f.size()), vars_(cost.size()), cost_(std::move(cost)) {
    const std::size_t cols = vars_ + rows_;
    t_.assign(rows_, std::vector<Rational>(cols));
    rhs_ = std::move(f);
    sign_.assign(rows_, 1);
    basis_.resize(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (rhs_[r].sign() < 0) sign_[r] = -1;
      for (std::size_t j = 0; j < vars_; ++j) t_[r][j] = sign_[r] < 0 ? -e[r][j] : e[r][j];
      if (sign_[r] < 0) rhs_[r] = -rhs_[r];
      t_[r][vars_ + r] = 1;
      basis_[r] = vars_ + r;
    }
  }

  Result run() {
    // Phase 1: minimize the sum of artificials.
    std::vector<Rational> phase1(vars_ + rows_);
    for (std::size_t r = 0; r < rows_; ++r) phase1[vars_ + r] = 1;
    load_objective(phase1);
    if (iterate(vars_ + rows_) == Result::unbounded) {
      throw std::logic_error("phase 1 of the simplex method cannot be unbounded");
    }
    if (objective_value_.sign() != 0) return Result::infeasible;
    drive_out_artificials();

    // Phase 2: artificials stay out; those still basic sit on inert rows.
    std::vector<Rational> phase2(vars_ + rows_);
    for (std::size_t j = 0; j < vars_; ++j) phase2[j] = cost_[j];
    load_objective(phase2);
    return iterate(vars_);
  }

  [[nodiscard]] const Rational& objective_value() const { return objective_value_; }

  /// Values of the structural variables y at the current basis.
  [[nodiscard]] std::vector<Rational> solution() const {
    std::vector<Rational> y(vars_);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] < vars_) y[basis_[r]] = rhs_[r];
    }
    return y;
  }

  /// Simplex multipliers π with respect to the original (unflipped) rows:
  /// cost_j - πᵀE_j is the reduced cost of column j.
  [[nodiscard]] std::vector<Rational> multipliers() const {
    std::vector<Rational> pi(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      // The artificial column of row r started as e_r, so its reduced cost
      // under phase-2 costs (zero for artificials) is -π_r in flipped rows.
      pi[r] = -reduced_[vars_ + r];
      if (sign_[r] < 0) pi[r] = -pi[r];
    }
    return pi;
  }

 private:
  void load_objective(const std::vector<Rational>& c) {
    active_cost_ = c;
    reduced_ = c;
    objective_value_ = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& cb = c[basis_[r]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j < reduced_.size(); ++j) {
        if (!t_[r][j].is_zero()) reduced_[j] -= cb * t_[r][j];
      }
      objective_value_ += cb * rhs_[r];
    }
  }

  Result iterate(std::size_t enter_limit) {
    for (;;) {
      std::size_t enter = enter_limit;
      for (std::size_t j = 0; j < enter_limit; ++j) {
        if (reduced_[j].sign() < 0) {
          enter = j;
          break;
        }
      }
      if (enter == enter_limit) return Result::optimal;

      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (t_[r][enter].sign() <= 0) continue;
        Rational ratio = rhs_[r] / t_[r][enter];
        if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (!leave) return Result::unbounded;
      pivot(*leave, enter);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const std::size_t cols = t_[row].size();
    const Rational inv = Rational(1) / t_[row][col];
    std::vector<std::size_t> nz;
    nz.reserve(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      if (t_[row][j].is_zero()) continue;
      t_[row][j] *= inv;
      nz.push_back(j);
    }
    rhs_[row] *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || t_[r][col].is_zero()) continue;
      const Rational f = t_[r][col];
      for (auto j : nz) t_[r][j] -= f * t_[row][j];
      rhs_[r] -= f * rhs_[row];
    }
    if (!reduced_[col].is_zero()) {
      const Rational f = reduced_[col];
      for (auto j : nz) reduced_[j] -= f * t_[row][j];
      objective_value_ += f * rhs_[row];
    }
    basis_[row] = col;
  }

  void drive_out_artificials() {
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] < vars_) continue;
      for (std::size_t j = 0; j < vars_; ++j) {
        if (!t_[r][j].is_zero()) {
          pivot(r, j);
          break;
        }
      }
    }
  }

  std::size_t rows_;
  std::size_t vars_;
  std::vector<Rational> cost_;
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> rhs_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> active_cost_;
  std::vector<Rational> reduced_;
  Rational objective_value_;
};

inline bool feasible(const LpProblem& p, const QVec& x) {
  for (const auto& c : p.constraints) {
    if (dot(c.normal, x) > c.rhs) return false;
  }
  return true;
}

}  // namespace detail

/// Maximizes a linear objective over {x : Ax <= b} in exact arithmetic.
///
/// The solver runs the two-phase simplex method on the dual standard-form
/// program  min bᵀy  s.t.  Aᵀy = c, y >= 0,  whose tableau has one row per
/// variable instead of one per constraint.  The primal point is read off the
/// final simplex multipliers.  When the dual is infeasible, a Farkas program
/// (min bᵀy s.t. Aᵀy = 0, Σy = 1, y >= 0) separates "infeasible" from
/// "unbounded".
inline LpOutcome lp_max(const LpProblem& p) {
  const std::size_t d = p.objective.size();
  if (d == 0) throw DomainError("lp_max: objective has length 0");
  for (const auto& c : p.constraints) detail::require_same_dim(c.normal.size(), d, "lp_max constraint");
  const std::size_t m = p.constraints.size();

  std::vector<std::vector<Rational>> at(d, std::vector<Rational>(m));
  std::vector<Rational> b(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < d; ++j) at[j][i] = p.constraints[i].normal[j];
    b[i] = p.constraints[i].rhs;
  }

  detail::StandardFormSimplex dual(at, p.objective.coords(), b);
  const auto result = dual.run();

  LpOutcome out;
  if (result == detail::StandardFormSimplex::Result::unbounded) {
    out.status = LpStatus::infeasible;
    return out;
  }
  if (result == detail::StandardFormSimplex::Result::infeasible) {
    std::vector<std::vector<Rational>> farkas = at;
    farkas.emplace_back(m, Rational(1));
    std::vector<Rational> rhs(d + 1);
    rhs[d] = 1;
    detail::StandardFormSimplex sep(farkas, rhs, b);
    const bool separated = sep.run() == detail::StandardFormSimplex::Result::optimal &&
                           sep.objective_value().sign() < 0;
    out.status = separated ? LpStatus::infeasible : LpStatus::unbounded;
    return out;
  }

  out.status = LpStatus::optimal;
  out.optimum = dual.objective_value();
  out.point = QVec(dual.multipliers());
  out.dual_multipliers = dual.solution();

  // Certificate self-check; a failure here is a solver bug, not bad input.
  if (!detail::feasible(p, out.point) || dot(p.objective, out.point) != out.optimum) {
    throw std::logic_error("lp_max: primal certificate check failed");
  }
  return out;
}

/// Verifies the strong-duality certificate of an optimal outcome exactly.
inline bool check_certificate(const LpProblem& p, const LpOutcome& o) {
  if (o.status != LpStatus::optimal) return false;
  if (o.dual_multipliers.size() != p.constraints.size()) return false;
  if (!detail::feasible(p, o.point) || dot(p.objective, o.point) != o.optimum) return false;
  QVec combo(p.objective.size());
  Rational value;
  for (std::size_t i = 0; i < p.constraints.size(); ++i) {
    const auto& y = o.dual_multipliers[i];
    if (y.sign() < 0) return false;
    if (y.is_zero()) continue;
    combo += y * p.constraints[i].normal;
    value += y * p.constraints[i].rhs;
  }
  return combo == p.objective && value == o.optimum;
}

}  // namespace mink
