#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

#include "knotcert/braid.hpp"

namespace knotcert::testing {

/// Seed for randomized suites: KNOTCERT_SEED if set, otherwise a fixed value.
inline std::uint64_t test_seed() {
  if (const char* env = std::getenv("KNOTCERT_SEED")) return std::stoull(env);
  return 20240611ULL;
}

inline std::mt19937_64 make_rng(std::uint64_t salt = 0) { return std::mt19937_64(test_seed() ^ salt); }

template <class Rng>
BraidWord random_word(Rng& rng, int strands, int length, bool positive = false) {
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::bernoulli_distribution neg(positive ? 0.0 : 0.5);
  std::vector<int> letters;
  for (int k = 0; k < length; ++k) letters.push_back(neg(rng) ? -gen(rng) : gen(rng));
  return BraidWord(strands, std::move(letters));
}

/// Random word whose closure is a knot. The length alternates between
/// `length` and `length + 1`, since only one parity can give an n-cycle.
template <class Rng>
BraidWord random_knot_word(Rng& rng, int strands, int length) {
  for (int attempt = 0;; ++attempt) {
    BraidWord w = random_word(rng, strands, length + attempt % 2);
    if (permutation_of(w).cycle_count() == 1) return w;
  }
}

}  // namespace knotcert::testing
