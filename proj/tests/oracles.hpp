#pragma once

// Brute-force oracles and generators shared by the test suites. These stay
// independent of the library's decision procedures: conjugacy is decided by
// exhaustive conjugator search, outer equality by exhaustive translate
// search, and images are computed by letterwise substitution.

#include <coxrig/automorphism.hpp>
#include <coxrig/word.hpp>

#include <optional>
#include <random>
#include <vector>

namespace oracle {

using coxrig::Automorphism;
using coxrig::Word;

// All reduced words of rank n with length <= max_len, identity included.
inline std::vector<Word> all_words(int rank, int max_len) {
  std::vector<Word> out{Word(rank)};
  std::vector<std::vector<int>> layer{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer)
      for (int a = 1; a <= rank; ++a) {
        if (!w.empty() && w.back() == a) continue;
        auto extended = w;
        extended.push_back(a);
        out.emplace_back(rank, extended);
        next.push_back(std::move(extended));
      }
    layer = std::move(next);
  }
  return out;
}

inline std::optional<Word> conjugator_search(const Word& u, const Word& v, int max_len) {
  for (const Word& g : all_words(u.rank(), max_len))
    if (u.conjugated_by(g) == v) return g;
  return std::nullopt;
}

inline std::optional<Word> outer_witness_search(const Automorphism& a, const Automorphism& b,
                                                int max_len) {
  for (const Word& g : all_words(a.rank(), max_len))
    if (Automorphism::ad(g) * b == a) return g;
  return std::nullopt;
}

// Letterwise substitution of generator images, reduced; independent of
// Automorphism::apply.
inline Word substitute(const std::vector<Word>& images, const Word& u) {
  std::vector<int> raw;
  for (int a : u.letters()) {
    const auto& img = images[static_cast<std::size_t>(a - 1)];
    raw.insert(raw.end(), img.letters().begin(), img.letters().end());
  }
  return Word(u.rank(), raw);
}

struct Rng {
  explicit Rng(unsigned long long seed) : eng(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng); }

  Word word(int rank, int max_len) {
    int len = uniform(0, max_len);
    std::vector<int> raw;
    int prev = 0;
    for (int k = 0; k < len; ++k) {
      int a = uniform(1, rank - 1);
      if (a >= prev) ++a;  // avoid immediate cancellation
      raw.push_back(a);
      prev = a;
    }
    return Word(rank, raw);
  }

  // Random composition of basic generators.
  Automorphism automorphism(int rank, int tokens, int ad_len = 2) {
    Automorphism a = Automorphism::identity(rank);
    for (int k = 0; k < tokens; ++k) {
      switch (uniform(0, 2)) {
        case 0:
          a = a * Automorphism::tau(uniform(1, rank - 1), rank);
          break;
        case 1: {
          int i = uniform(1, rank);
          int j = uniform(1, rank - 1);
          if (j >= i) ++j;
          a = a * Automorphism::sigma(i, j, rank);
          break;
        }
        default:
          a = a * Automorphism::ad(word(rank, ad_len));
      }
    }
    return a;
  }

  std::mt19937_64 eng;
};

}  // namespace oracle
