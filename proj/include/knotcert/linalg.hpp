#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "knotcert/laurent.hpp"

namespace knotcert {

using Rational = boost::multiprecision::cpp_rational;
using IntMatrix = std::vector<std::vector<Integer>>;

/// Determinant of a square integer matrix by fraction-free (Bareiss)
/// elimination. The empty matrix has determinant 1.
inline Integer determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Signature (positive minus negative inertia) of a symmetric integer matrix,
/// computed exactly by symmetric Gaussian elimination over Q.
inline int signature(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);

  auto swap_index = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    std::swap(a[x], a[y]);
    for (auto& row : a) std::swap(row[x], row[y]);
  };

  int result = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][piv] == 0) ++piv;
    if (piv == n) {
      // All remaining diagonal entries vanish; a nonzero off-diagonal entry
      // a[i][j] becomes the diagonal 2*a[i][j] after adding index j to i.
      std::size_t bi = n, bj = n;
      for (std::size_t i = k; i < n && bi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a[i][j] != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi == n) break;
      for (std::size_t c = 0; c < n; ++c) a[bi][c] += a[bj][c];
      for (std::size_t r = 0; r < n; ++r) a[r][bi] += a[r][bj];
      piv = bi;
    }
    swap_index(k, piv);
    const Rational pivot = a[k][k];
    result += pivot > 0 ? 1 : -1;
    // Schur complement; stays symmetric.
    const std::vector<Rational> row = a[k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (row[i] == 0) continue;
      const Rational f = row[i] / pivot;
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= f * row[j];
    }
    for (std::size_t i = k + 1; i < n; ++i) a[i][k] = a[k][i] = 0;
  }
  return result;
}

}  // namespace knotcert
