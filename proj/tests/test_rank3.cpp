#include <coxrig/rank3.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"

using coxrig::Automorphism;
using coxrig::epsilon;
using coxrig::FreeWord2;
using coxrig::from_free;
using coxrig::induced_matrix;
using coxrig::Mat2;
using coxrig::to_free;
using coxrig::Word;

namespace {
Word w(std::vector<int> raw) { return Word(3, raw); }

FreeWord2 fw(std::vector<int> ls) {
  FreeWord2 f;
  for (int l : ls) f.push(l);
  return f;
}
}  // namespace

TEST_CASE("parity morphism") {
  CHECK(epsilon(w({1, 2, 3})) == 1);
  CHECK(epsilon(w({1, 2})) == 0);
  CHECK(epsilon(Word(3)) == 0);
  CHECK_THROWS_AS(epsilon(Word(4)), coxrig::RankMismatch);
}

TEST_CASE("rewriting into the free kernel basis") {
  CHECK(to_free(w({2, 1})) == fw({-1}));
  CHECK(to_free(w({1, 3})) == fw({1, 2}));
  // (x2 x1)(x2 x3)(x1 x2) pairs to a^-1 b a.
  CHECK(to_free(w({2, 1, 2, 3, 1, 2})) == fw({-1, 2, 1}));
  CHECK(from_free(fw({-1, 2, 1})) == w({2, 1, 2, 3, 1, 2}));
  CHECK_THROWS_AS(to_free(w({1, 2, 3})), coxrig::OddLength);
}

TEST_CASE("round-trip on all even words up to length 8") {
  std::size_t count = 0;
  for (const Word& u : oracle::all_words(3, 8)) {
    if (u.length() % 2 != 0) continue;
    CHECK(from_free(to_free(u)) == u);
    ++count;
  }
  CHECK(count == 511);  // 1 + 6 + 24 + 96 + 384
}

TEST_CASE("to_free is a homomorphism on the kernel") {
  oracle::Rng rng(21);
  for (int k = 0; k < 300; ++k) {
    Word u = rng.word(3, 8), v = rng.word(3, 8);
    if (u.length() % 2 || v.length() % 2) continue;
    CHECK(to_free(u * v) == to_free(u) * to_free(v));
  }
}

TEST_CASE("induced matrices") {
  SECTION("identity and global conjugations") {
    CHECK(induced_matrix(Automorphism::identity(3)) == Mat2::id());
    for (int i = 1; i <= 3; ++i) {
      Mat2 m = induced_matrix(Automorphism::ad(Word::generator(3, i)));
      CHECK(m == Mat2::id().negated());
      CHECK(m.pgl_trivial());
    }
  }
  SECTION("tau_1 sends a to a^-1 and b to a b") {
    Mat2 m = induced_matrix(Automorphism::tau(1, 3));
    CHECK(m == Mat2{-1, 1, 0, 1});
    CHECK(m.det() == -1);
  }
  SECTION("sigma(1,2) has determinant +-1") {
    CHECK(std::abs(induced_matrix(Automorphism::sigma(1, 2, 3)).det()) == 1);
  }
}

TEST_CASE("matrices are multiplicative up to sign and kill inner classes") {
  oracle::Rng rng(22);
  for (int k = 0; k < 500; ++k) {
    auto x = rng.automorphism(3, 3);
    auto y = rng.automorphism(3, 3);
    Mat2 m = induced_matrix(x * y);
    Mat2 p = induced_matrix(x) * induced_matrix(y);
    CHECK((m == p || m == p.negated()));
    CHECK(std::abs(m.det()) == 1);
  }
  for (int k = 0; k < 100; ++k) {
    Word g = rng.word(3, 7);
    CHECK(induced_matrix(Automorphism::ad(g)).pgl_trivial());
  }
}

TEST_CASE("images of the generators reach the standard GL(2,Z) generators up to sign") {
  // Bounded product search over the matrices of tau_1, tau_2, sigma(1,2).
  std::vector<Mat2> gens{induced_matrix(Automorphism::tau(1, 3)),
                         induced_matrix(Automorphism::tau(2, 3)),
                         induced_matrix(Automorphism::sigma(1, 2, 3))};
  std::set<std::string> seen;
  std::vector<Mat2> layer{Mat2::id()};
  seen.insert(Mat2::id().str());
  for (int depth = 0; depth < 8; ++depth) {
    std::vector<Mat2> next;
    for (const Mat2& m : layer)
      for (const Mat2& g : gens) {
        Mat2 p = (m * g).pgl_normalized();
        if (std::max({std::abs(p.a), std::abs(p.b), std::abs(p.c), std::abs(p.d)}) > 6) continue;
        if (seen.insert(p.str()).second) next.push_back(p);
      }
    layer = std::move(next);
  }
  auto contains = [&seen](const Mat2& m) { return seen.count(m.pgl_normalized().str()) > 0; };
  CHECK(contains(Mat2{1, 1, 0, 1}));   // elementary a-shear
  CHECK(contains(Mat2{1, 0, 1, 1}));   // elementary b-shear
  CHECK(contains(Mat2{0, -1, 1, 0}));  // rotation
  CHECK(contains(Mat2{1, 0, 0, -1}));  // reflection
}
