#pragma once

#include <cctype>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "knotcert/error.hpp"

namespace knotcert {

/// A word in the Artin generators of B_n. Letter `+i` is sigma_i, `-i` its
/// inverse. Letters are kept exactly as written; nothing is cancelled.
class BraidWord {
 public:
  BraidWord() = default;

  explicit BraidWord(int strands, std::vector<int> letters = {})
      : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1) throw PreconditionError("a braid needs at least one strand");
    for (int e : letters_)
      if (e == 0 || std::abs(e) > strands_ - 1)
        throw MalformedInput("letter " + std::to_string(e) + " out of range for " +
                             std::to_string(strands_) + " strands");
  }

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  bool is_positive() const {
    for (int e : letters_)
      if (e < 0) return false;
    return true;
  }

  BraidWord& operator*=(const BraidWord& o) {
    check_same_strands(o);
    letters_.insert(letters_.end(), o.letters_.begin(), o.letters_.end());
    return *this;
  }
  friend BraidWord operator*(BraidWord a, const BraidWord& b) { return a *= b; }

  BraidWord pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    BraidWord out(strands_);
    for (int i = 0; i < k; ++i) out *= *this;
    return out;
  }

  BraidWord inverse() const {
    std::vector<int> inv(letters_.rbegin(), letters_.rend());
    for (int& e : inv) e = -e;
    return BraidWord(strands_, std::move(inv));
  }

  /// Same word read in the mirror (every crossing switched).
  BraidWord mirror() const {
    std::vector<int> m = letters_;
    for (int& e : m) e = -e;
    return BraidWord(strands_, std::move(m));
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

  void check_same_strands(const BraidWord& o) const {
    if (o.strands_ != strands_)
      throw PreconditionError("strand count mismatch: " + std::to_string(strands_) + " vs " +
                              std::to_string(o.strands_));
  }

 private:
  int strands_ = 1;
  std::vector<int> letters_;
};

inline std::string to_string(const BraidWord& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.letters().size(); ++i) os << (i ? " " : "") << w.letters()[i];
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const BraidWord& w) { return os << to_string(w); }

/// Parses whitespace-separated signed integers into a word on `strands` strands.
inline BraidWord parse_braid(std::string_view text, int strands) {
  if (strands < 1) throw MalformedInput("strand count must be at least 1");
  std::vector<int> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string token(text.substr(pos, end - pos));
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || used == 0)
      throw MalformedInput("bad braid token '" + token + "' at offset " + std::to_string(pos));
    if (value == 0 || std::labs(value) > strands - 1)
      throw MalformedInput("braid letter '" + token + "' at offset " + std::to_string(pos) +
                           " is out of range for " + std::to_string(strands) + " strands");
    letters.push_back(static_cast<int>(value));
    pos = end;
  }
  return BraidWord(strands, std::move(letters));
}

inline long exponent_sum(const BraidWord& w) {
  long total = 0;
  for (int e : w.letters()) total += e > 0 ? 1 : -1;
  return total;
}

// ---------------------------------------------------------------------------
// Permutations

/// A permutation of {0..n-1}, stored as the image of each point. As a braid
/// permutation, `image[x]` is the bottom position of the strand that starts
/// at top position `x`.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n) : image_(static_cast<std::size_t>(n)) {
    std::iota(image_.begin(), image_.end(), 0);
  }
  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {}

  static Permutation longest(int n) {
    Permutation p(n);
    for (int x = 0; x < n; ++x) p.image_[x] = n - 1 - x;
    return p;
  }

  int size() const { return static_cast<int>(image_.size()); }
  int operator[](int x) const { return image_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& image() const { return image_; }

  bool is_identity() const {
    for (int x = 0; x < size(); ++x)
      if (image_[x] != x) return false;
    return true;
  }
  bool is_longest() const {
    for (int x = 0; x < size(); ++x)
      if (image_[x] != size() - 1 - x) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation out(size());
    for (int x = 0; x < size(); ++x) out.image_[image_[x]] = x;
    return out;
  }

  /// Number of inversions, i.e. the crossing count of the permutation braid.
  int length() const {
    int n = 0;
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (image_[i] > image_[j]) ++n;
    return n;
  }

  /// Apply `*this` first, then `o`. Matches braid concatenation top to bottom.
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    Permutation out(a.size());
    for (int x = 0; x < a.size(); ++x) out.image_[x] = b.image_[a.image_[x]];
    return out;
  }

  /// Disjoint cycles, each starting at its smallest point, fixed points included.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(image_.size(), false);
    for (int x = 0; x < size(); ++x) {
      if (seen[x]) continue;
      std::vector<int> cyc;
      for (int y = x; !seen[y]; y = image_[y]) {
        seen[y] = true;
        cyc.push_back(y);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  std::size_t cycle_count() const { return cycles().size(); }

  // Garside helpers; `i` is 0-based and refers to generator sigma_{i+1}.

  /// sigma_{i+1} left-divides the permutation braid.
  bool starts_with(int i) const { return image_[i] > image_[i + 1]; }
  /// sigma_{i+1} right-divides the permutation braid.
  bool ends_with(int i) const {
    Permutation inv = inverse();
    return inv.image_[i] > inv.image_[i + 1];
  }
  /// Append a crossing at bottom positions (i, i+1).
  void append_generator(int i) {
    for (int& y : image_) {
      if (y == i)
        y = i + 1;
      else if (y == i + 1)
        y = i;
    }
  }
  /// Remove (or add) a crossing at top positions (i, i+1).
  void prepend_generator(int i) { std::swap(image_[i], image_[i + 1]); }

  /// Conjugation by the half twist: x -> n-1-x on both sides.
  Permutation flipped() const {
    Permutation out(size());
    for (int x = 0; x < size(); ++x) out.image_[x] = size() - 1 - image_[size() - 1 - x];
    return out;
  }

  /// A reduced positive word for the permutation braid, 1-based letters.
  std::vector<int> reduced_word() const {
    std::vector<int> word;
    Permutation rest = *this;
    // Peel generators off the left until the identity remains.
    while (!rest.is_identity()) {
      for (int i = 0; i + 1 < size(); ++i) {
        if (rest.starts_with(i)) {
          word.push_back(i + 1);
          rest.prepend_generator(i);
          break;
        }
      }
    }
    return word;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// Cycle notation with 1-based points; fixed points omitted, identity is `()`.
inline std::string to_string(const Permutation& p) {
  std::ostringstream os;
  bool any = false;
  for (const auto& cyc : p.cycles()) {
    if (cyc.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t k = 0; k < cyc.size(); ++k) os << (k ? " " : "") << cyc[k] + 1;
    os << ')';
  }
  return any ? os.str() : "()";
}

/// Image of `w` under B_n -> S_n. Satisfies
/// `permutation_of(u * v) == permutation_of(u) * permutation_of(v)`.
inline Permutation permutation_of(const BraidWord& w) {
  Permutation p(w.strands());
  for (int e : w.letters()) p.append_generator(std::abs(e) - 1);
  return p;
}

// ---------------------------------------------------------------------------
// Garside normal form

/// Left normal form Delta^infimum * A_1 ... A_l with every A_j a proper,
/// nontrivial permutation braid and each adjacent pair left-weighted.
struct GarsideNormalForm {
  int strands = 1;
  long infimum = 0;
  std::vector<Permutation> factors;

  long supremum() const { return infimum + static_cast<long>(factors.size()); }
  friend bool operator==(const GarsideNormalForm&, const GarsideNormalForm&) = default;
};

namespace detail {

/// Moves generators from the front of `right` to the back of `left` until
/// the pair is left-weighted. Returns whether anything moved.
inline bool left_weight(Permutation& left, Permutation& right) {
  bool changed = false;
  const int n = left.size();
  for (bool again = true; again;) {
    again = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (right.starts_with(i) && !left.ends_with(i)) {
        left.append_generator(i);
        right.prepend_generator(i);
        again = changed = true;
      }
    }
  }
  return changed;
}

inline void renormalize(GarsideNormalForm& nf) {
  auto& f = nf.factors;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t j = f.size(); j-- > 1;) changed |= left_weight(f[j - 1], f[j]);
  }
  std::size_t lead = 0;
  while (lead < f.size() && f[lead].is_longest()) ++lead;
  nf.infimum += static_cast<long>(lead);
  f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(lead));
  while (!f.empty() && f.back().is_identity()) f.pop_back();
}

}  // namespace detail

inline GarsideNormalForm normal_form(const BraidWord& w) {
  const int n = w.strands();
  GarsideNormalForm nf;
  nf.strands = n;
  if (n == 1) return nf;
  for (int e : w.letters()) {
    const int i = std::abs(e) - 1;
    Permutation simple(n);
    if (e > 0) {
      simple.append_generator(i);
    } else {
      // sigma_i^-1 = Delta^-1 * (Delta sigma_i^-1); the second factor is
      // Delta with its last crossing at (i, i+1) removed.
      simple = Permutation::longest(n);
      simple.append_generator(i);
      nf.infimum -= 1;
      for (auto& f : nf.factors) f = f.flipped();
    }
    nf.factors.push_back(std::move(simple));
    detail::renormalize(nf);
  }
  return nf;
}

inline bool braids_equal(const BraidWord& a, const BraidWord& b) {
  a.check_same_strands(b);
  return normal_form(a) == normal_form(b);
}

inline std::string to_string(const GarsideNormalForm& nf) {
  std::ostringstream os;
  os << "Delta^" << nf.infimum;
  for (const auto& f : nf.factors) {
    os << " [";
    const auto word = f.reduced_word();
    for (std::size_t k = 0; k < word.size(); ++k) os << (k ? " " : "") << word[k];
    os << ']';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Families

/// Positive half twist Delta_n = (s1 ... s_{n-1})(s1 ... s_{n-2}) ... (s1).
inline BraidWord half_twist(int n) {
  if (n < 1) throw PreconditionError("half twist needs n >= 1");
  std::vector<int> letters;
  for (int top = n - 1; top >= 1; --top)
    for (int i = 1; i <= top; ++i) letters.push_back(i);
  return BraidWord(n, std::move(letters));
}

inline BraidWord full_twist(int n) {
  if (n < 2) throw PreconditionError("full twist needs n >= 2");
  return half_twist(n).pow(2);
}

/// For a positive word: the infimum of the normal form is at least 2.
inline bool contains_full_twist(const BraidWord& w) {
  if (!w.is_positive())
    throw PreconditionError("full-twist detection is only defined for positive words");
  return normal_form(w).infimum >= 2;
}

/// (s1 s2 ... s_{a-1})^b on a strands: the standard torus link T(a, b).
inline BraidWord torus_braid(int a, int b) {
  detail::require(a >= 2 && b >= 1, "torus_braid needs a >= 2, b >= 1");
  std::vector<int> row;
  for (int i = 1; i < a; ++i) row.push_back(i);
  return BraidWord(a, row).pow(b);
}

namespace detail {

// The two four-strand blocks appearing in the quotient braids.
inline BraidWord crossing_block() { return BraidWord(4, {2, 3, 1, 2}); }
inline BraidWord clasp_block() { return BraidWord(4, {2, 3, 3, 2}); }
inline BraidWord sigma1_power(int k) { return BraidWord(4, {1}).pow(k); }

inline void require_odd_at_least_3(int v, const char* name) {
  if (v < 3 || v % 2 == 0)
    throw PreconditionError(std::string(name) + " must be an odd integer >= 3");
}

}  // namespace detail

/// (s2 s3 s1 s2)^q (s2 s3^2 s2)^p s1^(2p+2q+r) in B_4.
inline BraidWord quotient_braid_odd(int p, int q, int r) {
  detail::require_odd_at_least_3(p, "p");
  detail::require_odd_at_least_3(q, "q");
  const int tail = 2 * p + 2 * q + r;
  if (tail < 0) throw PreconditionError("final exponent 2p+2q+r is negative");
  return detail::crossing_block().pow(q) * detail::clasp_block().pow(p) *
         detail::sigma1_power(tail);
}

/// (s2 s3 s1 s2)^q (s2 s3^2 s2)^(2n) s1^(2(2n-q)+r) in B_4.
inline BraidWord quotient_braid_even(int n, int q, int r) {
  detail::require(n >= 1, "n must be >= 1");
  detail::require_odd_at_least_3(q, "q");
  const int tail = 2 * (2 * n - q) + r;
  if (tail < 0) throw PreconditionError("final exponent 2(2n-q)+r is negative");
  return detail::crossing_block().pow(q) * detail::clasp_block().pow(2 * n) *
         detail::sigma1_power(tail);
}

/// Delta_4^2 (s2 s3 s1 s2)^(q-2) (s2 s3^2 s2)^m s1^(t-4): the rewriting of a
/// quotient braid with crossing exponent q, clasp exponent m and tail t that
/// exhibits the full twist.
inline BraidWord full_twist_rewriting(int q, int clasps, int tail) {
  detail::require(q >= 2 && clasps >= 0 && tail >= 4, "rewriting needs q >= 2 and tail >= 4");
  return full_twist(4) * detail::crossing_block().pow(q - 2) * detail::clasp_block().pow(clasps) *
         detail::sigma1_power(tail - 4);
}

inline BraidWord quotient_braid_odd_twisted(int p, int q, int r) {
  return full_twist_rewriting(q, p, 2 * p + 2 * q + r);
}

inline BraidWord quotient_braid_even_twisted(int n, int q, int r) {
  return full_twist_rewriting(q, 2 * n, 2 * (2 * n - q) + r);
}

/// Quotient braids after the sharp move: two consecutive crossing blocks,
/// which together form a full twist of the two strand pairs (8 crossings,
/// pure), are removed. Requires q >= 3 so the result stays positive.
inline BraidWord sharp_partner_odd(int p, int q, int r) {
  const BraidWord full = quotient_braid_odd(p, q, r);
  return BraidWord(4, std::vector<int>(full.letters().begin() + 8, full.letters().end()));
}

inline BraidWord sharp_partner_even(int n, int q, int r) {
  const BraidWord full = quotient_braid_even(n, q, r);
  return BraidWord(4, std::vector<int>(full.letters().begin() + 8, full.letters().end()));
}

// ---------------------------------------------------------------------------
// Conjugacy

/// Word for the braid Delta^infimum * A_1 ... A_l.
inline BraidWord to_braid(const GarsideNormalForm& nf) {
  BraidWord out = half_twist(nf.strands).pow(static_cast<int>(nf.infimum));
  for (const auto& f : nf.factors) out = out * BraidWord(nf.strands, f.reduced_word());
  return out;
}

/// One Garside cycling step: Delta^k A_1 R -> Delta^k R tau^k(A_1), a
/// conjugate of the input.
inline GarsideNormalForm cycling(const GarsideNormalForm& nf) {
  if (nf.factors.empty()) return nf;
  GarsideNormalForm rotated = nf;
  Permutation first = rotated.factors.front();
  rotated.factors.erase(rotated.factors.begin());
  rotated.factors.push_back(nf.infimum % 2 != 0 ? first.flipped() : first);
  return normal_form(to_braid(rotated));
}

/// Largest infimum over the conjugacy class, found by iterated cycling.
/// When the infimum is not yet maximal, some cycling among the next
/// |Delta| steps raises it.
inline long summit_infimum(const BraidWord& w) {
  GarsideNormalForm nf = normal_form(w);
  const int window = w.strands() * (w.strands() - 1) / 2;
  long best = nf.infimum;
  for (int idle = 0; idle < window && !nf.factors.empty(); ++idle) {
    nf = cycling(nf);
    if (nf.infimum > best) {
      best = nf.infimum;
      idle = -1;
    }
  }
  return best;
}

/// sigma_3^2 sigma_1^4: conjugates each quotient braid to its Delta^2 form.
inline BraidWord quotient_rewriting_conjugator() { return BraidWord(4, {3, 3, 1, 1, 1, 1}); }

// ---------------------------------------------------------------------------
// Random rewriting

/// Applies one braid-group relation at a random position of `w`: insert or
/// delete a cancelling pair, swap commuting letters, or replace
/// s_i s_j s_i by s_j s_i s_j for |i - j| = 1 (same signs). The braid is
/// unchanged. Returns false when the chosen move had no place to apply.
template <class Rng>
bool random_relation_rewrite(BraidWord& w, Rng& rng) {
  std::vector<int> l = w.letters();
  const int n = w.strands();
  if (n < 2) return false;
  auto pick = [&](std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound)(rng); };
  // candidate positions for each move type
  std::vector<std::size_t> cancel, commute, braid;
  for (std::size_t k = 0; k + 1 < l.size(); ++k) {
    if (l[k] == -l[k + 1]) cancel.push_back(k);
    if (std::abs(std::abs(l[k]) - std::abs(l[k + 1])) >= 2) commute.push_back(k);
    if (k + 2 < l.size() && l[k] == l[k + 2] && std::abs(std::abs(l[k]) - std::abs(l[k + 1])) == 1 &&
        (l[k] > 0) == (l[k + 1] > 0))
      braid.push_back(k);
  }
  switch (pick(3)) {
    case 0: {
      const int g = static_cast<int>(pick(static_cast<std::size_t>(n - 2))) + 1;
      const int sgn = pick(1) ? 1 : -1;
      const auto at = static_cast<std::ptrdiff_t>(pick(l.size()));
      l.insert(l.begin() + at, {sgn * g, -sgn * g});
      break;
    }
    case 1: {
      if (cancel.empty()) return false;
      const auto k = static_cast<std::ptrdiff_t>(cancel[pick(cancel.size() - 1)]);
      l.erase(l.begin() + k, l.begin() + k + 2);
      break;
    }
    case 2: {
      if (commute.empty()) return false;
      const std::size_t k = commute[pick(commute.size() - 1)];
      std::swap(l[k], l[k + 1]);
      break;
    }
    default: {
      if (braid.empty()) return false;
      const std::size_t k = braid[pick(braid.size() - 1)];
      const int a = l[k], b = l[k + 1];
      l[k] = b, l[k + 1] = a, l[k + 2] = b;
      break;
    }
  }
  w = BraidWord(n, std::move(l));
  return true;
}

}  // namespace knotcert
