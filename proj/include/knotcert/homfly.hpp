#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>
#include <vector>

#include "knotcert/braid.hpp"
#include "knotcert/error.hpp"
#include "knotcert/laurent.hpp"

namespace knotcert {

/// Largest strand count accepted by the Hecke engine (basis size n!).
inline constexpr int kMaxHeckeStrands = 6;

/// Element of the Hecke algebra H_n over Z[z, z^-1] in the basis g_w,
/// w in S_n, with quadratic relation g_i^2 = z g_i + 1 (so g_i^-1 = g_i - z).
/// Coefficients are one-variable Laurent polynomials in z.
class HeckeElement {
 public:
  using Coeff = LaurentPoly1;

  explicit HeckeElement(int strands) : strands_(strands) {
    if (strands < 1) throw PreconditionError("Hecke algebra needs n >= 1");
    if (strands > kMaxHeckeStrands)
      throw ResourceLimit("Hecke basis on " + std::to_string(strands) + " strands exceeds the " +
                          std::to_string(kMaxHeckeStrands) + "-strand guard");
  }

  static HeckeElement identity(int strands) {
    HeckeElement e(strands);
    e.terms_[Permutation(strands)] = Coeff(1);
    return e;
  }

  int strands() const { return strands_; }
  /// Basis permutations in lexicographic one-line order, with coefficients.
  const std::map<Permutation, Coeff>& terms() const { return terms_; }
  Coeff coeff(const Permutation& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Coeff() : it->second;
  }

  /// Right multiplication by g_i (i is 1-based).
  void mul_generator(int i) {
    std::map<Permutation, Coeff> out;
    for (const auto& [w, c] : terms_) {
      Permutation ws = w;
      ws.append_generator(i - 1);
      if (!w.ends_with(i - 1)) {
        add(out, ws, c);
      } else {
        // w = w' s_i: g_w g_i = z g_w + g_{w'}
        add(out, w, c * z());
        add(out, ws, c);
      }
    }
    terms_ = std::move(out);
  }

  /// Right multiplication by g_i^-1 = g_i - z.
  void mul_inverse_generator(int i) {
    HeckeElement shifted = *this;
    shifted.mul_generator(i);
    for (const auto& [w, c] : terms_) add(shifted.terms_, w, -(c * z()));
    terms_ = std::move(shifted.terms_);
  }

  /// Left multiplication by g_i.
  void lmul_generator(int i) {
    std::map<Permutation, Coeff> out;
    for (const auto& [w, c] : terms_) {
      Permutation sw = w;
      sw.prepend_generator(i - 1);
      if (!w.starts_with(i - 1)) {
        add(out, sw, c);
      } else {
        add(out, w, c * z());
        add(out, sw, c);
      }
    }
    terms_ = std::move(out);
  }

  friend HeckeElement operator*(const HeckeElement& x, const HeckeElement& y) {
    if (x.strands_ != y.strands_) throw PreconditionError("Hecke strand mismatch");
    HeckeElement out(x.strands_);
    for (const auto& [v, c] : y.terms_) {
      HeckeElement part = x;
      for (int letter : v.reduced_word()) part.mul_generator(letter);
      for (const auto& [w, pc] : part.terms_) add(out.terms_, w, pc * c);
    }
    return out;
  }

  friend HeckeElement operator+(HeckeElement x, const HeckeElement& y) {
    for (const auto& [w, c] : y.terms_) add(x.terms_, w, c);
    return x;
  }

  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

  static Coeff z() { return t_power(1); }

 private:
  static void add(std::map<Permutation, Coeff>& m, const Permutation& w, const Coeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = m.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) m.erase(it);
    }
  }

  int strands_;
  std::map<Permutation, Coeff> terms_;
};

/// Image of a braid word under sigma_i -> g_i.
inline HeckeElement hecke_image(const BraidWord& w) {
  HeckeElement e = HeckeElement::identity(w.strands());
  for (int letter : w.letters()) {
    if (letter > 0)
      e.mul_generator(letter);
    else
      e.mul_inverse_generator(-letter);
  }
  return e;
}

namespace detail {

inline LaurentPoly2 lift_z(const LaurentPoly1& p) {
  LaurentPoly2 out;
  for (const auto& [e, c] : p.terms()) out.add_term({0, e[0]}, c);
  return out;
}

/// Value of an unlinked unknot: (a - a^-1) / z.
inline LaurentPoly2 unknot_factor() { return LaurentPoly2{{{1, -1}, 1}, {{-1, -1}, -1}}; }

inline Permutation restrict_last(const Permutation& w) {
  std::vector<int> img = w.image();
  img.pop_back();
  return Permutation(std::move(img));
}

/// Trace values on basis elements for H_1 .. H_max, normalised so that the
/// closure of g_w evaluates to a^{length} times the HOMFLY polynomial of the
/// closure of the permutation braid. Markov rules used:
///   tr_m(x) = delta * tr_{m-1}(x)      for x in H_{m-1}
///   tr_m(x g_{m-1} y) = a tr_{m-1}(xy) for x, y in H_{m-1}
class TraceTable {
 public:
  static const TraceTable& instance() {
    static TraceTable table;
    return table;
  }

  const LaurentPoly2& value(const Permutation& w) const {
    return levels_[static_cast<std::size_t>(w.size())].at(w);
  }

 private:
  TraceTable() : levels_(kMaxHeckeStrands + 1) {
    levels_[1][Permutation(1)] = LaurentPoly2(1);
    for (int m = 2; m <= kMaxHeckeStrands; ++m) build_level(m);
  }

  LaurentPoly2 evaluate(const HeckeElement& x) const {
    LaurentPoly2 total;
    for (const auto& [w, c] : x.terms()) total += lift_z(c) * value(w);
    return total;
  }

  void build_level(int m) {
    std::vector<int> img(static_cast<std::size_t>(m));
    std::iota(img.begin(), img.end(), 0);
    do {
      const Permutation w(img);
      levels_[m][w] = compute(w);
    } while (std::next_permutation(img.begin(), img.end()));
  }

  LaurentPoly2 compute(const Permutation& w) const {
    const int m = w.size();
    if (w[m - 1] == m - 1) return unknot_factor() * value(restrict_last(w));
    // w = w' * (s_{m-1} s_{m-2} ... s_k) with w' fixing the last point and
    // lengths adding up.
    for (int k = m - 1; k >= 1; --k) {
      Permutation rest = w;
      for (int i = k; i <= m - 1; ++i) rest.append_generator(i - 1);
      if (rest[m - 1] != m - 1 || rest.length() + (m - k) != w.length()) continue;
      // Cyclically move g_{m-2} ... g_k to the front, then drop g_{m-1}.
      HeckeElement y = HeckeElement::identity(m - 1);
      for (int letter : restrict_last(rest).reduced_word()) y.mul_generator(letter);
      for (int i = k; i <= m - 2; ++i) y.lmul_generator(i);
      return LaurentPoly2::monomial({1, 0}) * evaluate(y);
    }
    throw Error("no coset decomposition found");
  }

  std::vector<std::map<Permutation, LaurentPoly2>> levels_;
};

}  // namespace detail

/// HOMFLY polynomial of the closure of `w`, with a P(L+) - a^-1 P(L-) = z P(L0)
/// and P(unknot) = 1.
inline LaurentPoly2 homfly(const BraidWord& w) {
  const HeckeElement h = hecke_image(w);
  const auto& table = detail::TraceTable::instance();
  LaurentPoly2 total;
  for (const auto& [perm, c] : h.terms()) total += detail::lift_z(c) * table.value(perm);
  return total.shift({static_cast<int>(-exponent_sum(w)), 0});
}

/// Morton-Franks-Williams lower bound on braid index: (a-breadth)/2 + 1.
inline long mfw_bound(const LaurentPoly2& p) {
  if (p.is_zero()) throw PreconditionError("MFW bound of the zero polynomial");
  const auto [lo, hi] = p.degree_range(0);
  return (hi - lo) / 2 + 1;
}

/// Conway polynomial: HOMFLY at a = 1.
inline LaurentPoly1 conway_from_homfly(const LaurentPoly2& p) {
  LaurentPoly1 out;
  for (const auto& [e, c] : p.terms()) out.add_term({e[1]}, c);
  return out;
}

/// |Delta(-1)| = |Conway(2i)|, evaluated over the Gaussian integers.
inline Integer det_from_homfly(const LaurentPoly2& p) {
  const LaurentPoly1 conway = conway_from_homfly(p);
  Integer re = 0, im = 0;
  for (const auto& [e, c] : conway.terms()) {
    const int j = e[0];
    if (j < 0) throw PreconditionError("Conway polynomial has a negative power");
    const Integer mag = c * (Integer(1) << j);
    switch (j % 4) {
      case 0: re += mag; break;
      case 1: im += mag; break;
      case 2: re -= mag; break;
      default: im -= mag; break;
    }
  }
  if (re != 0 && im != 0) throw Error("Conway polynomial mixes parities");
  return boost::multiprecision::abs(re + im);
}

}  // namespace knotcert
