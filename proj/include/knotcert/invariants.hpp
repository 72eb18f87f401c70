#pragma once

#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "knotcert/diagram.hpp"
#include "knotcert/error.hpp"
#include "knotcert/laurent.hpp"

namespace knotcert {

// ---------------------------------------------------------------------------
// Torus knots

/// f_{a,b}(t) = (t^{ab} - 1)(t - 1).
inline LaurentPoly1 torus_numerator(int a, int b) {
  return (t_power(a * b) - t_power(0)) * (t_power(1) - t_power(0));
}

/// g_{a,b}(t) = (t^a - 1)(t^b - 1).
inline LaurentPoly1 torus_denominator(int a, int b) {
  return (t_power(a) - t_power(0)) * (t_power(b) - t_power(0));
}

/// Alexander polynomial of T(a,b) as the exact quotient f/g, unnormalised.
inline LaurentPoly1 torus_alexander(int a, int b) {
  detail::require(a >= 1 && b >= 1, "torus_alexander needs a, b >= 1");
  if (std::gcd(a, b) != 1) throw PreconditionError("T(a,b) with gcd(a,b) > 1 is a link");
  return divide_exact(torus_numerator(a, b), torus_denominator(a, b));
}

inline Integer det_from_alexander(const LaurentPoly1& p) {
  return boost::multiprecision::abs(evaluate(p, -1));
}

/// Derivatives of f_{4,x} and g_{4,x} at t = -1; their ratio is det T(4,x)
/// because both functions vanish there.
struct LHopitalRatio {
  Integer numerator_derivative;
  Integer denominator_derivative;
};

inline LHopitalRatio torus_det_4x_lhopital(int x) {
  const LaurentPoly1 f = torus_numerator(4, x);
  const LaurentPoly1 g = torus_denominator(4, x);
  if (evaluate(f, -1) != 0 || evaluate(g, -1) != 0)
    throw PreconditionError("f and g must both vanish at t = -1");
  return {evaluate(derivative(f), -1), evaluate(derivative(g), -1)};
}

/// det T(4,x) for odd x, computed by the derivative ratio and cross-checked
/// against |Delta(-1)| of the divided polynomial.
inline long torus_det_4x(int x) {
  if (x < 1 || x % 2 == 0) throw PreconditionError("T(4,x) is a knot only for odd x >= 1");
  const auto [df, dg] = torus_det_4x_lhopital(x);
  if (dg == 0 || df % dg != 0) throw Error("derivative ratio is not an integer");
  const Integer ratio = boost::multiprecision::abs(df / dg);
  const Integer via_division = det_from_alexander(torus_alexander(4, x));
  if (ratio != via_division) throw Error("torus determinant paths disagree");
  return ratio.convert_to<long>();
}

inline long torus_genus(int a, int b) {
  detail::require(a >= 1 && b >= 1, "torus_genus needs a, b >= 1");
  if (std::gcd(a, b) != 1) throw PreconditionError("T(a,b) with gcd(a,b) > 1 is a link");
  return static_cast<long>(a - 1) * (b - 1) / 2;
}

// ---------------------------------------------------------------------------
// Positive diagrams

namespace detail {

inline void require_positive_knot(const LinkDiagram& d) {
  if (!is_positive(d)) throw PreconditionError("diagram is not positive");
  if (component_count(d) != 1) throw PreconditionError("diagram is not a knot");
}

}  // namespace detail

/// Genus of a positive knot: Seifert's algorithm on a positive diagram gives
/// a minimal surface, so 2g = c - O + 1.
inline long positive_genus(const LinkDiagram& d) {
  detail::require_positive_knot(d);
  return (d.crossing_count() - seifert_circle_count(d) + 1) / 2;
}

/// Rasmussen invariant of a positive knot: s = c - O + 1 = 2g.
inline long rasmussen_positive(const LinkDiagram& d) {
  detail::require_positive_knot(d);
  return d.crossing_count() - seifert_circle_count(d) + 1;
}

/// s from a positive or negative diagram (s changes sign under mirroring).
inline long rasmussen_from_formula(const LinkDiagram& d) {
  if (is_positive(d)) return rasmussen_positive(d);
  const LinkDiagram m = mirror(d);
  if (is_positive(m)) return -rasmussen_positive(m);
  throw PreconditionError("s is only available for positive or negative diagrams");
}

/// Genus of the odd-family quotient knot, 3(p+q) + (r-3)/2.
inline long genus_Ko(int p, int q, int r) {
  if (p < 3 || q < 3 || p % 2 == 0 || q % 2 == 0)
    throw PreconditionError("genus_Ko needs odd p, q >= 3");
  if (r % 2 == 0) throw PreconditionError("even r gives a two-component link");
  return 3L * (p + q) + (r - 3) / 2;
}

/// Genus of the even-family quotient knot: 6n+3q-1 (r = 4q+1), 6n+3q-2 (r = 4q-1).
inline long genus_Ke(int n, int q, int r) {
  if (n < 1 || q < 3 || q % 2 == 0) throw PreconditionError("genus_Ke needs n >= 1, odd q >= 3");
  if (r == 4 * q + 1) return 6L * n + 3L * q - 1;
  if (r == 4 * q - 1) return 6L * n + 3L * q - 2;
  throw PreconditionError("genus_Ke needs r = 4q+1 or r = 4q-1");
}

// ---------------------------------------------------------------------------
// Certified intervals

/// Closed interval [lo, hi] of even integers bounding an invariant.
class IntInterval {
 public:
  IntInterval(long lo, long hi) : lo_(lo), hi_(hi) {
    if (lo % 2 != 0 || hi % 2 != 0) throw PreconditionError("interval endpoints must be even");
    if (lo > hi) throw PreconditionError("empty interval");
  }
  static IntInterval exactly(long v) { return {v, v}; }

  long lo() const { return lo_; }
  long hi() const { return hi_; }
  long width() const { return hi_ - lo_; }
  bool contains(long v) const { return lo_ <= v && v <= hi_; }

  friend IntInterval operator+(const IntInterval& a, const IntInterval& b) {
    return {a.lo_ + b.lo_, a.hi_ + b.hi_};
  }
  friend IntInterval operator-(const IntInterval& a) { return {-a.hi_, -a.lo_}; }
  friend bool operator==(const IntInterval&, const IntInterval&) = default;
  friend std::ostream& operator<<(std::ostream& os, const IntInterval& i) {
    return os << '[' << i.lo_ << ", " << i.hi_ << ']';
  }

 private:
  long lo_;
  long hi_;
};

namespace detail {
inline void require_even(long v, const char* what) {
  if (v % 2 != 0) throw PreconditionError(std::string(what) + " must be even");
}
}  // namespace detail

/// sigma(K+) <= sigma(K-) <= sigma(K+) + 2, as an interval for sigma(K-).
inline IntInterval crossing_change_sigma_bound(long sigma_plus) {
  detail::require_even(sigma_plus, "signature");
  return {sigma_plus, sigma_plus + 2};
}

/// Interval version: sigma(K+) only known to lie in `sigma_plus`.
inline IntInterval crossing_change_sigma_bound(const IntInterval& sigma_plus) {
  return {sigma_plus.lo(), sigma_plus.hi() + 2};
}

/// s(K-) <= s(K+) <= s(K-) + 2, as an interval for s(K+).
inline IntInterval crossing_change_s_bound(long s_minus) {
  detail::require_even(s_minus, "Rasmussen invariant");
  return {s_minus, s_minus + 2};
}

inline IntInterval crossing_change_s_bound(const IntInterval& s_minus) {
  return {s_minus.lo(), s_minus.hi() + 2};
}

/// Interval for sigma(K') after a sharp move; the width depends on whether
/// the resolved diagram D_0 has two components (2..4) or one (2..6).
inline IntInterval sharp_move_sigma_bound(long sigma_k, int d0_components) {
  detail::require_even(sigma_k, "signature");
  if (d0_components == 2) return {sigma_k + 2, sigma_k + 4};
  if (d0_components == 1) return {sigma_k + 2, sigma_k + 6};
  throw PreconditionError("D_0 must have one or two components");
}

/// s(K) - s(K') for positive knots related by a sharp move with
/// c(D) = c(D') + 8 and O(D) = O(D').
constexpr long sharp_move_s_delta() { return 8; }

// ---------------------------------------------------------------------------

/// Invariants of one knot diagram. Unavailable entries are empty and carry a
/// reason in `notes`.
struct InvariantRecord {
  std::optional<long> s;
  std::optional<long> sigma;
  Integer det = 0;
  std::optional<long> genus;
  std::optional<long> slice_genus;
  long writhe = 0;
  int seifert_circles = 0;
  int components = 0;
  int crossings = 0;
  std::vector<std::pair<std::string, std::string>> notes;
};

inline InvariantRecord invariant_record(const LinkDiagram& d) {
  InvariantRecord rec;
  rec.writhe = writhe(d);
  rec.seifert_circles = seifert_circle_count(d);
  rec.components = component_count(d);
  rec.crossings = d.crossing_count();
  rec.det = determinant(d);
  if (rec.components != 1) {
    for (const char* f : {"s", "sigma", "genus", "slice_genus"})
      rec.notes.emplace_back(f, "input is a " + std::to_string(rec.components) + "-component link");
    return rec;
  }
  if (is_connected(d)) {
    rec.sigma = signature(d);
  } else {
    rec.notes.emplace_back("sigma", "split diagram");
  }
  const bool pos = is_positive(d);
  const bool neg = is_positive(mirror(d));
  if (pos || neg) {
    rec.s = rasmussen_from_formula(d);
    rec.genus = (pos ? rasmussen_positive(d) : rasmussen_positive(mirror(d))) / 2;
    rec.slice_genus = rec.genus;
  } else {
    for (const char* f : {"s", "genus", "slice_genus"})
      rec.notes.emplace_back(f, "diagram is neither positive nor negative");
  }
  return rec;
}

}  // namespace knotcert
