#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mink/linalg.hpp"

namespace mink {

inline constexpr unsigned kDefaultWalshLimit = 16;

/// Sylvester/Walsh matrix of order 2^k, 0-based: H(2) = [[1,1],[1,-1]] and
/// H(2^k) = [[H, H], [H, -H]] with H = H(2^{k-1}).
inline QMat walsh_matrix(unsigned k, unsigned limit = kDefaultWalshLimit) {
  if (k < 1) throw DomainError("walsh_matrix: k must be at least 1");
  if (k > limit) {
    throw SizeError("walsh_matrix: k = " + std::to_string(k) + " exceeds limit " + std::to_string(limit));
  }
  std::vector<std::vector<int>> h{{1, 1}, {1, -1}};
  for (unsigned step = 1; step < k; ++step) {
    const std::size_t half = h.size();
    std::vector<std::vector<int>> next(2 * half, std::vector<int>(2 * half));
    for (std::size_t i = 0; i < half; ++i) {
      for (std::size_t j = 0; j < half; ++j) {
        next[i][j] = h[i][j];
        next[i][j + half] = h[i][j];
        next[i + half][j] = h[i][j];
        next[i + half][j + half] = -h[i][j];
      }
    }
    h = std::move(next);
  }
  QMat m(h.size(), h.size());
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < h.size(); ++j) m(i, j) = h[i][j];
  return m;
}

/// Exact test of M·Mᵀ = n·I for a square ±1 matrix of side n.
inline bool is_hadamard(const QMat& m) {
  if (!m.is_square()) throw DomainError("is_hadamard: matrix is not square");
  for (const auto& row : m.row_list()) {
    for (const auto& x : row) {
      if (x != 1 && x != -1) throw DomainError("is_hadamard: entry " + x.str() + " is not +-1");
    }
  }
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Rational g = dot(m.row(i), m.row(j));
      if (g != (i == j ? Rational(static_cast<long>(n)) : Rational(0))) return false;
    }
  }
  return true;
}

}  // namespace mink
