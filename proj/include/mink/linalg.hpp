#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mink/errors.hpp"
#include "mink/rational.hpp"

namespace mink {

/// Coordinate vector of exact rationals.  Length is fixed at construction.
class QVec {
 public:
  QVec() = default;
  explicit QVec(std::size_t dim, const Rational& fill = Rational{}) : coords_(dim, fill) {
    if (dim == 0) throw DomainError("vector of length 0");
  }
  explicit QVec(std::vector<Rational> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw DomainError("vector of length 0");
  }
  QVec(std::initializer_list<Rational> coords) : coords_(coords) {
    if (coords_.size() == 0) throw DomainError("vector of length 0");
  }

  static QVec unit(std::size_t dim, std::size_t index) {
    QVec v(dim);
    v[index] = 1;
    return v;
  }

  [[nodiscard]] std::size_t size() const { return coords_.size(); }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  [[nodiscard]] auto begin() const { return coords_.begin(); }
  [[nodiscard]] auto end() const { return coords_.end(); }
  [[nodiscard]] auto begin() { return coords_.begin(); }
  [[nodiscard]] auto end() { return coords_.end(); }
  [[nodiscard]] const std::vector<Rational>& coords() const { return coords_; }

  [[nodiscard]] bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r.is_zero(); });
  }

  QVec& operator+=(const QVec& o) {
    detail::require_same_dim(size(), o.size(), "vector add");
    for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  QVec& operator-=(const QVec& o) {
    detail::require_same_dim(size(), o.size(), "vector subtract");
    for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  QVec& operator*=(const Rational& t) {
    for (auto& c : coords_) c *= t;
    return *this;
  }

  friend QVec operator+(QVec a, const QVec& b) { return a += b; }
  friend QVec operator-(QVec a, const QVec& b) { return a -= b; }
  friend QVec operator*(QVec a, const Rational& t) { return a *= t; }
  friend QVec operator*(const Rational& t, QVec a) { return a *= t; }
  friend QVec operator-(QVec a) {
    for (auto& c : a.coords_) c = -c;
    return a;
  }

  friend bool operator==(const QVec& a, const QVec& b) { return a.coords_ == b.coords_; }
  friend auto operator<=>(const QVec& a, const QVec& b) { return a.coords_ <=> b.coords_; }

  [[nodiscard]] std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) s += ",";
      s += coords_[i].str();
    }
    return s + ")";
  }

 private:
  std::vector<Rational> coords_;
};

inline Rational dot(const QVec& a, const QVec& b) {
  detail::require_same_dim(a.size(), b.size(), "dot");
  mpq_class acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].raw() * b[i].raw();
  return Rational(acc.get_num(), acc.get_den());
}

inline QVec add(const QVec& a, const QVec& b) { return a + b; }
inline QVec scale(const Rational& t, const QVec& v) { return t * v; }

/// Sum of a non-empty list of points divided by its size.
inline QVec centroid(std::span<const QVec> points) {
  if (points.empty()) throw DomainError("centroid of empty point set");
  QVec sum(points.front().size());
  for (const auto& p : points) sum += p;
  return sum * Rational(1, static_cast<long>(points.size()));
}

/// Positive rescaling of v to a primitive integer vector (gcd of entries 1).
/// Returns the factor used, so that primitive = factor * v.
inline std::pair<QVec, Rational> primitive_integer(const QVec& v) {
  if (v.is_zero()) throw DomainError("cannot normalize the zero vector");
  mpz_class l = 1;
  for (const auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  mpz_class g = 0;
  for (const auto& c : v) {
    mpz_class scaled = c.num() * (l / c.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational factor(l, g);
  return {v * factor, factor};
}

/// Rectangular matrix of exact rationals, stored by rows.
class QMat {
 public:
  QMat() = default;
  explicit QMat(std::vector<QVec> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw DomainError("matrix with no rows");
    for (const auto& r : rows_) detail::require_same_dim(r.size(), rows_.front().size(), "matrix rows");
  }
  QMat(std::size_t rows, std::size_t cols) : rows_(rows, QVec(cols)) {
    if (rows == 0) throw DomainError("matrix with no rows");
  }

  static QMat identity(std::size_t n) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_.size(); }
  [[nodiscard]] std::size_t cols() const { return rows_.empty() ? 0 : rows_.front().size(); }
  Rational& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  [[nodiscard]] const QVec& row(std::size_t i) const { return rows_[i]; }
  [[nodiscard]] const std::vector<QVec>& row_list() const { return rows_; }
  [[nodiscard]] bool is_square() const { return rows() == cols(); }

  friend bool operator==(const QMat& a, const QMat& b) { return a.rows_ == b.rows_; }

 private:
  std::vector<QVec> rows_;
};

inline QMat transpose(const QMat& m) {
  QMat t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

inline QMat mat_mul(const QMat& a, const QMat& b) {
  if (a.cols() != b.rows()) throw DomainError("mat_mul: inner dimensions differ");
  QMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

inline QMat scale(const Rational& t, const QMat& m) {
  std::vector<QVec> rows;
  rows.reserve(m.rows());
  for (const auto& r : m.row_list()) rows.push_back(t * r);
  return QMat(std::move(rows));
}

inline QVec mat_vec(const QMat& m, const QVec& x) {
  detail::require_same_dim(m.cols(), x.size(), "mat_vec");
  QVec y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) y[i] = dot(m.row(i), x);
  return y;
}

namespace detail {

/// In-place reduced row echelon form over the first `cols` columns (any
/// trailing augmented columns are carried along); returns the pivot columns.
inline std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][col].is_zero()) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[row], a[sel]);
    const Rational inv = Rational(1) / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c < a[row].size(); ++c) {
        if (!a[row][c].is_zero()) a[r][c] -= f * a[row][c];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::vector<std::vector<Rational>> to_rows(std::span<const QVec> vs) {
  std::vector<std::vector<Rational>> a;
  a.reserve(vs.size());
  for (const auto& v : vs) a.push_back(v.coords());
  return a;
}

}  // namespace detail

/// Rank of the span of the given vectors.
inline std::size_t rank(std::span<const QVec> vectors) {
  if (vectors.empty()) return 0;
  auto a = detail::to_rows(vectors);
  return detail::rref(a, vectors.front().size()).size();
}

/// Dimension of the affine hull of a non-empty point set.
inline std::size_t affine_rank(std::span<const QVec> points) {
  if (points.empty()) throw DomainError("affine rank of empty point set");
  std::vector<QVec> diffs;
  diffs.reserve(points.size());
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  return rank(diffs);
}

/// Basis of {x : v·x = 0 for all v in rows}.  Rows must be non-empty and of
/// common length `dim`.
inline std::vector<QVec> nullspace(std::span<const QVec> rows, std::size_t dim) {
  auto a = detail::to_rows(rows);
  const auto pivots = detail::rref(a, dim);
  std::vector<bool> is_pivot(dim, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (std::size_t free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    QVec x(dim);
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -a[r][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Solves A x = b for square non-singular A; nullopt when A is singular.
inline std::optional<QVec> solve(const QMat& a, const QVec& b) {
  if (!a.is_square()) throw DomainError("solve: matrix is not square");
  detail::require_same_dim(a.rows(), b.size(), "solve");
  const std::size_t n = a.rows();
  std::vector<std::vector<Rational>> aug;
  aug.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto r = a.row(i).coords();
    r.push_back(b[i]);
    aug.push_back(std::move(r));
  }
  const auto pivots = detail::rref(aug, n);
  if (pivots.size() < n) return std::nullopt;
  QVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

/// Inverse of a square matrix; nullopt when singular.
inline std::optional<QMat> inverse(const QMat& a) {
  if (!a.is_square()) throw DomainError("inverse: matrix is not square");
  const std::size_t n = a.rows();
  std::vector<std::vector<Rational>> aug;
  for (std::size_t i = 0; i < n; ++i) {
    auto r = a.row(i).coords();
    r.resize(2 * n);
    r[n + i] = 1;
    aug.push_back(std::move(r));
  }
  const auto pivots = detail::rref(aug, n);
  if (pivots.size() < n) return std::nullopt;
  QMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug[i][n + j];
  return inv;
}

}  // namespace mink
