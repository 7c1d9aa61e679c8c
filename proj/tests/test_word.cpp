#include <coxrig/word.hpp>

#include <map>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using coxrig::are_conjugate;
using coxrig::Word;

namespace {
Word w(int rank, std::vector<int> raw) { return Word(rank, raw); }
}  // namespace

TEST_CASE("reduction cancels involutions") {
  CHECK(w(3, {1, 1}) == Word(3));
  CHECK(w(3, {1, 2, 2, 3}) == w(3, {1, 3}));
  CHECK(w(3, {2, 1, 1, 2, 3}) == w(3, {3}));
  CHECK_THROWS_AS(w(3, {1, 4}), coxrig::IndexOutOfRank);
}

TEST_CASE("reduction is idempotent and respects construction") {
  oracle::Rng rng(1);
  for (int k = 0; k < 200; ++k) {
    // Random unreduced garbage: re-feeding the reduced letters must be a
    // fixed point.
    std::vector<int> raw;
    for (int t = 0; t < 12; ++t) raw.push_back(rng.uniform(1, 4));
    Word u(4, raw);
    CHECK(Word(4, u.letters()) == u);
    for (std::size_t p = 0; p + 1 < u.letters().size(); ++p)
      CHECK(u.letters()[p] != u.letters()[p + 1]);
  }
}

TEST_CASE("multiplication") {
  CHECK(w(3, {1, 2}) * w(3, {2, 1}) == Word(3));
  CHECK(w(3, {1, 2}) * w(3, {3}) == w(3, {1, 2, 3}));
  CHECK(w(3, {2}) * w(3, {1, 2}) == w(3, {2, 1, 2}));
  CHECK_THROWS_AS(Word(3) * Word(4), coxrig::RankMismatch);
}

TEST_CASE("multiplication properties on samples") {
  oracle::Rng rng(2);
  for (int k = 0; k < 200; ++k) {
    Word u = rng.word(4, 6), v = rng.word(4, 6), x = rng.word(4, 6);
    CHECK((u * v) * x == u * (v * x));
    CHECK((u * u.inverse()).is_identity());
  }
}

TEST_CASE("inverse reverses") {
  CHECK(Word(4).inverse() == Word(4));
  CHECK(w(4, {1, 2, 3}).inverse() == w(4, {3, 2, 1}));
  CHECK(w(4, {2, 1, 2}).inverse() == w(4, {2, 1, 2}));
}

TEST_CASE("conjugation") {
  CHECK(w(3, {1}).conjugated_by(w(3, {2})) == w(3, {2, 1, 2}));
  Word u = w(3, {1, 3, 2});
  CHECK(u.conjugated_by(Word(3)) == u);
  CHECK(w(3, {2, 1, 2}).conjugated_by(w(3, {2})) == w(3, {1}));
}

TEST_CASE("cyclic reduction") {
  auto [core, conj] = w(3, {2, 1, 2}).cyclic_reduce();
  CHECK(core == w(3, {1}));
  CHECK(conj == w(3, {2}));

  auto [core2, conj2] = w(3, {1, 2, 3}).cyclic_reduce();
  CHECK(core2 == w(3, {1, 2, 3}));
  CHECK(conj2.is_identity());

  auto [core3, conj3] = Word(3).cyclic_reduce();
  CHECK(core3.is_identity());
  CHECK(conj3.is_identity());

  oracle::Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    Word u = rng.word(3, 8);
    auto [c, g] = u.cyclic_reduce();
    CHECK(c.conjugated_by(g) == u);
    if (c.length() >= 2) CHECK(c.letters().front() != c.letters().back());
  }
}

TEST_CASE("conjugacy: examples") {
  CHECK_FALSE(are_conjugate(w(3, {1}), w(3, {2})));
  CHECK(are_conjugate(w(3, {2, 1, 2}), w(3, {1})));
  // Rotated word: brute-force conjugator search confirms.
  Word u = w(3, {1, 2, 3}), v = w(3, {2, 3, 1});
  auto g = oracle::conjugator_search(u, v, 4);
  REQUIRE(g.has_value());
  CHECK(u.conjugated_by(*g) == v);
  CHECK(are_conjugate(u, v));
}

TEST_CASE("conjugacy agrees with brute force on all short rank-3 pairs") {
  // For |u|,|v| <= 6 any conjugating element can be taken of length <= 5
  // (strip conjugators plus a rotation), so the bounded sweep is exact:
  // mark (u, g u g^-1) for every u and every |g| <= 5 in one pass.
  auto words = oracle::all_words(3, 6);
  auto conjugators = oracle::all_words(3, 5);
  std::map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < words.size(); ++k) index.emplace(words[k].str(), k);
  std::vector<std::vector<bool>> related(words.size(), std::vector<bool>(words.size(), false));
  for (std::size_t k = 0; k < words.size(); ++k)
    for (const Word& g : conjugators) {
      Word v = words[k].conjugated_by(g);
      auto it = index.find(v.str());
      if (it != index.end()) related[k][it->second] = true;
    }
  std::size_t mismatches = 0;
  for (std::size_t a = 0; a < words.size(); ++a)
    for (std::size_t b = 0; b < words.size(); ++b)
      if (are_conjugate(words[a], words[b]) != related[a][b]) {
        ++mismatches;
        CAPTURE(words[a].str(), words[b].str());
        CHECK(are_conjugate(words[a], words[b]) == related[a][b]);
      }
  REQUIRE(mismatches == 0);
}

TEST_CASE("conjugacy is an equivalence relation on samples") {
  oracle::Rng rng(4);
  std::vector<Word> sample;
  for (int k = 0; k < 12; ++k) sample.push_back(rng.word(3, 5));
  for (const Word& a : sample) {
    CHECK(are_conjugate(a, a));
    for (const Word& b : sample) {
      CHECK(are_conjugate(a, b) == are_conjugate(b, a));
      for (const Word& c : sample)
        if (are_conjugate(a, b) && are_conjugate(b, c)) CHECK(are_conjugate(a, c));
    }
  }
}

TEST_CASE("involution decomposition") {
  auto [c1, j1] = w(3, {2, 1, 2}).involution_decompose();
  CHECK(c1 == w(3, {2}));
  CHECK(j1 == 1);

  auto [c2, j2] = w(3, {1}).involution_decompose();
  CHECK(c2.is_identity());
  CHECK(j2 == 1);

  // x1 x2 x3 squares to a nonempty reduced word, so it is not an involution.
  Word u = w(3, {1, 2, 3});
  CHECK_FALSE((u * u).is_identity());
  CHECK_THROWS_AS(u.involution_decompose(), coxrig::NotInvolution);
  CHECK_THROWS_AS(Word(3).involution_decompose(), coxrig::NotInvolution);
}

TEST_CASE("involutions are exactly the decomposable words, and have odd length") {
  for (const Word& u : oracle::all_words(3, 7)) {
    bool is_invol = !u.is_identity() && (u * u).is_identity();
    bool decomposes = true;
    try {
      auto [c, j] = u.involution_decompose();
      // Round-trip and normalization of the unique pair.
      CHECK(Word::generator(3, j).conjugated_by(c) == u);
      CHECK((c.is_identity() || c.letters().back() != j));
    } catch (const coxrig::NotInvolution&) {
      decomposes = false;
    }
    CHECK(is_invol == decomposes);
    if (is_invol) CHECK(u.length() % 2 == 1);
  }
}

TEST_CASE("ordering is by length then lexicographic") {
  CHECK(Word(3) < w(3, {1}));
  CHECK(w(3, {3}) < w(3, {1, 2}));
  CHECK(w(3, {1, 2}) < w(3, {1, 3}));
}

TEST_CASE("text round-trip") {
  CHECK(Word(4).str() == "e");
  CHECK(w(4, {2, 1, 2}).str() == "2 1 2");
  CHECK(Word::parse("2 1 2", 4) == w(4, {2, 1, 2}));
  CHECK(Word::parse("e", 4) == Word(4));
  CHECK(Word::parse("1 1 2", 4) == w(4, {2}));
  CHECK_THROWS_AS(Word::parse("1 x", 4), coxrig::ParseError);
}
