#pragma once

#include <cstdlib>
#include <vector>

#include "knotcert/braid.hpp"
#include "knotcert/laurent.hpp"

namespace knotcert {

using LaurentMatrix = std::vector<std::vector<LaurentPoly1>>;

/// Unreduced Burau matrix of `w` over Z[t, t^-1]. sigma_i acts on rows i, i+1
/// by [[1-t, t], [1, 0]]; sigma_i^-1 by [[0, 1], [t^-1, 1-t^-1]].
/// Equal braids have equal matrices, so a mismatch proves two words differ.
inline LaurentMatrix burau_matrix(const BraidWord& w) {
  const auto n = static_cast<std::size_t>(w.strands());
  LaurentMatrix m(n, std::vector<LaurentPoly1>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = t_power(0);
  const LaurentPoly1 one = t_power(0);
  for (int e : w.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(e) - 1);
    LaurentPoly1 b00, b01, b10, b11;
    if (e > 0) {
      b00 = one - t_power(1), b01 = t_power(1), b10 = one;
    } else {
      b01 = one, b10 = t_power(-1), b11 = one - t_power(-1);
    }
    // right multiplication touches columns i and i+1
    for (std::size_t r = 0; r < n; ++r) {
      const LaurentPoly1 x = m[r][i], y = m[r][i + 1];
      m[r][i] = x * b00 + y * b10;
      m[r][i + 1] = x * b01 + y * b11;
    }
  }
  return m;
}

namespace detail {

inline LaurentPoly1 laplace_determinant(const LaurentMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return t_power(0);
  if (n == 1) return m[0][0];
  LaurentPoly1 total;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    LaurentMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<LaurentPoly1> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const LaurentPoly1 term = m[0][c] * laplace_determinant(minor);
    total += c % 2 == 0 ? term : -term;
  }
  return total;
}

}  // namespace detail

/// Alexander polynomial of the closure of `w` when it is a knot: a first
/// minor of I - B(w), shifted to lowest degree 0 with positive constant term.
inline LaurentPoly1 burau_alexander(const BraidWord& w) {
  if (permutation_of(w).cycle_count() != 1) throw PreconditionError("closure is not a knot");
  const LaurentMatrix b = burau_matrix(w);
  const std::size_t n = b.size();
  LaurentMatrix minor(n - 1, std::vector<LaurentPoly1>(n - 1));
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) minor[i][j] = (i == j ? t_power(0) : LaurentPoly1()) - b[i][j];
  LaurentPoly1 delta = detail::laplace_determinant(minor);
  if (delta.is_zero()) throw Error("Burau minor vanished for a knot");
  delta = delta.shift({-delta.terms().begin()->first[0]});
  if (delta.terms().begin()->second < 0) delta = -delta;
  return delta;
}

}  // namespace knotcert
