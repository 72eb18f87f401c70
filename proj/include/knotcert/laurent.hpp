#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "knotcert/error.hpp"

namespace knotcert {

using Integer = boost::multiprecision::cpp_int;

/// Sparse Laurent polynomial in `N` variables with exact coefficients.
///
/// Terms are stored in a map keyed by the exponent vector, so iteration is in
/// lexicographic exponent order. Zero coefficients are never stored; the zero
/// polynomial is the empty map.
template <std::size_t N, class Coeff = Integer>
class Laurent {
 public:
  using Exponent = std::array<int, N>;
  using Terms = std::map<Exponent, Coeff>;

  Laurent() = default;

  /// Constant polynomial.
  Laurent(const Coeff& c) {  // NOLINT(google-explicit-constructor)
    add_term(Exponent{}, c);
  }

  Laurent(std::initializer_list<std::pair<Exponent, Coeff>> terms) {
    for (const auto& [e, c] : terms) add_term(e, c);
  }

  static Laurent monomial(const Exponent& e, const Coeff& c = Coeff(1)) {
    Laurent p;
    p.add_term(e, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(const Exponent& e, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Smallest and largest exponent of variable `var` over the support.
  std::pair<int, int> degree_range(std::size_t var) const {
    if (terms_.empty()) throw PreconditionError("degree range of the zero polynomial");
    int lo = terms_.begin()->first[var];
    int hi = lo;
    for (const auto& [e, c] : terms_) {
      lo = std::min(lo, e[var]);
      hi = std::max(hi, e[var]);
    }
    return {lo, hi};
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator-(Laurent a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(shifted(ea, eb), ca * cb);
    return out;
  }

  /// Multiply by the monomial x^e.
  Laurent shift(const Exponent& e) const {
    Laurent out;
    for (const auto& [ee, c] : terms_) out.terms_.emplace(shifted(ee, e), c);
    return out;
  }

  Laurent pow(unsigned k) const {
    Laurent out(Coeff(1));
    for (unsigned i = 0; i < k; ++i) out *= *this;
    return out;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

 private:
  static Exponent shifted(const Exponent& a, const Exponent& b) {
    Exponent out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = a[i] + b[i];
    return out;
  }

  Terms terms_;
};

/// Laurent polynomial in one variable `t`.
using LaurentPoly1 = Laurent<1>;
/// Laurent polynomial in the two HOMFLY variables `(a, z)`.
using LaurentPoly2 = Laurent<2>;

inline LaurentPoly1 t_power(int e, const Integer& c = 1) { return LaurentPoly1::monomial({e}, c); }

/// Value at an integer point; negative exponents require `x` to be a unit.
inline Integer evaluate(const LaurentPoly1& p, const Integer& x) {
  Integer total = 0;
  for (const auto& [e, c] : p.terms()) {
    int k = e[0];
    if (k < 0) {
      if (x != 1 && x != -1) throw PreconditionError("evaluating a negative power at a non-unit");
      k = -k;
    }
    total += c * boost::multiprecision::pow(x, static_cast<unsigned>(k));
  }
  return total;
}

/// Formal derivative d/dt.
inline LaurentPoly1 derivative(const LaurentPoly1& p) {
  LaurentPoly1 out;
  for (const auto& [e, c] : p.terms())
    if (e[0] != 0) out.add_term({e[0] - 1}, c * e[0]);
  return out;
}

/// Exact division in Z[t, t^-1]. Throws PreconditionError when the remainder
/// is nonzero or a leading coefficient does not divide.
inline LaurentPoly1 divide_exact(LaurentPoly1 num, const LaurentPoly1& den) {
  if (den.is_zero()) throw PreconditionError("division by the zero polynomial");
  const auto& [den_exp, den_lead] = *den.terms().rbegin();
  const int den_low = den.terms().begin()->first[0];
  LaurentPoly1 quotient;
  while (!num.is_zero()) {
    const auto [num_exp, num_lead] = *num.terms().rbegin();
    if (num_exp[0] - den_exp[0] < num.terms().begin()->first[0] - den_low ||
        num_lead % den_lead != 0)
      throw PreconditionError("polynomial division leaves a remainder");
    LaurentPoly1 step = t_power(num_exp[0] - den_exp[0], num_lead / den_lead);
    quotient += step;
    num -= step * den;
  }
  return quotient;
}

/// Prints `coeff*t^exp` terms in increasing exponent order, e.g.
/// `1*t^0 - 1*t^1 + 1*t^2`; the zero polynomial prints as `0`.
inline std::string to_string(const LaurentPoly1& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (first) {
      os << c;
    } else {
      os << (c < 0 ? " - " : " + ") << boost::multiprecision::abs(c);
    }
    os << "*t^" << e[0];
    first = false;
  }
  return os.str();
}

/// Prints `c * a^i z^j` terms sorted by (i, j). A lone constant prints as the
/// bare integer, so the unknot's polynomial reads `1`.
inline std::string to_string(const LaurentPoly2& p) {
  if (p.is_zero()) return "0";
  if (p.size() == 1 && p.terms().begin()->first == LaurentPoly2::Exponent{0, 0})
    return p.terms().begin()->second.str();
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (first) {
      os << c;
    } else {
      os << (c < 0 ? " - " : " + ") << boost::multiprecision::abs(c);
    }
    os << " * a^" << e[0] << " z^" << e[1];
    first = false;
  }
  return os.str();
}

}  // namespace knotcert
