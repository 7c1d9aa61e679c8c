#include <coxrig/presentation.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <map>

using coxrig::Assignment;
using coxrig::Automorphism;
using coxrig::enumerate_relators;
using coxrig::GenSym;
using coxrig::interpret;
using coxrig::outer;
using coxrig::OuterClass;
using coxrig::Relator;

namespace {

// Instance counts follow directly from the index constraints.
std::size_t expected_count(char family, std::size_t n) {
  switch (family) {
    case 'a': return n;
    case 'b': return n * (n - 1) * n * (n - 1);
    case 'c': return n * (n - 1) * (n - 2);
    case 'd': return n * (n - 1);
    case 'e': return n * (n - 1) * (n - 2) * (n - 3);
    case 'f': return n * (n - 1) * n * (n - 1);
    case 'g': return n * (n - 1) * (n - 2);
    default: return 0;
  }
}

}  // namespace

TEST_CASE("symbol interpretation") {
  CHECK(interpret(GenSym::trans(1, 2), 4) == outer(Automorphism::tau(1, 4)));
  CHECK(interpret(GenSym::sig(1, 2), 4) == outer(Automorphism::sigma(1, 2, 4)));
  CHECK(interpret(GenSym::trans(1, 3), 4) ==
        outer(Automorphism::tau(1, 4) * Automorphism::tau(2, 4) * Automorphism::tau(1, 4)));
  // Transposition symbols are unordered.
  CHECK(GenSym::trans(3, 1) == GenSym::trans(1, 3));
  CHECK_THROWS_AS(GenSym::trans(2, 2), coxrig::EqualIndices);
}

TEST_CASE("relator enumeration counts") {
  for (int n : {3, 4, 5}) {
    CAPTURE(n);
    auto rels = enumerate_relators(n);
    std::map<char, std::size_t> got;
    for (const auto& r : rels) ++got[r.family];
    for (char f : {'a', 'b', 'c', 'd', 'e', 'f', 'g'}) {
      CAPTURE(f);
      CHECK(got[f] == expected_count(f, static_cast<std::size_t>(n)));
    }
  }
  CHECK(enumerate_relators(4, "a").size() == 4);
  CHECK(enumerate_relators(4, "d").size() == 12);
  CHECK(enumerate_relators(4, "g").size() == 24);
}

TEST_CASE("all relators hold in Out(W_n) for n = 3, 4, 5") {
  for (int n : {3, 4, 5}) {
    CAPTURE(n);
    auto check = coxrig::verify_presentation(n);
    CAPTURE(check.details());
    CHECK(check.pass());
  }
}

TEST_CASE("family (g) passes independently of the others at n = 4") {
  CHECK(coxrig::verify_presentation(4, "abcdef").pass());
  CHECK(coxrig::verify_presentation(4, "g").pass());
}

TEST_CASE("a mutated relator fails") {
  // Family (a) with one factor dropped is one twist short of closing up.
  auto rels = enumerate_relators(4, "a");
  Relator broken = rels[0];
  broken.word.pop_back();
  auto value = coxrig::evaluate_relator(broken, 4, [](const GenSym& s) { return interpret(s, 4); });
  CHECK_FALSE(value.is_identity());
}

TEST_CASE("identity assignment extends") {
  auto check = coxrig::check_assignment(coxrig::identity_assignment(4), 4);
  CHECK(check.pass());
}

TEST_CASE("assignments must be total") {
  Assignment partial;
  partial[GenSym::trans(1, 2)] = {GenSym::trans(1, 2)};
  CHECK_THROWS_AS(coxrig::check_assignment(partial, 4), coxrig::Error);
}

TEST_CASE("the complement assignment collapses to the identity in Out(W_4)") {
  // Each sigma sent to the product of the other two with the same target.
  // Relation (a) makes that product equal to the sigma itself in Out(W_4),
  // so this assignment is the identity endomorphism in disguise and extends;
  // the corresponding map genuinely fails only at the Aut(W_4) level, where
  // the product of all three twists is a global conjugation instead of 1.
  CHECK(coxrig::evaluate_symbol_word({GenSym::sig(2, 4), GenSym::sig(3, 4)}, 4) ==
        interpret(GenSym::sig(1, 4), 4));
  Assignment complement;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) complement[GenSym::trans(i, j)] = {GenSym::trans(i, j)};
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      if (i == j) continue;
      std::vector<GenSym> image;
      for (int k = 1; k <= 4; ++k)
        if (k != i && k != j) image.push_back(GenSym::sig(k, j));
      complement[GenSym::sig(i, j)] = image;
    }
  for (const auto& [sym, image] : complement)
    CHECK(coxrig::evaluate_symbol_word(image, 4) == interpret(sym, 4));
  CHECK(coxrig::check_assignment(complement, 4).pass());
}

TEST_CASE("a broken assignment fails to extend") {
  // Send [sigma_{1,2}] to the transposition class [1 2], everything else to
  // itself. A twist commutes with the unrelated twists targeting the same
  // generator, a transposition does not, so families (c) and (f) break.
  Assignment bogus = coxrig::identity_assignment(4);
  bogus[GenSym::sig(1, 2)] = {GenSym::trans(1, 2)};
  auto check = coxrig::check_assignment(bogus, 4);
  CHECK_FALSE(check.pass());
  bool fails_c = false, fails_f = false;
  for (const auto& r : check.failures) {
    if (r.family == 'c') fails_c = true;
    if (r.family == 'f') fails_f = true;
  }
  CHECK(fails_c);
  CHECK(fails_f);
}

TEST_CASE("exceptional assignment of Out(W_4)") {
  auto asg = coxrig::exceptional_w4_assignment();
  // Total on S.
  CHECK(asg.size() == coxrig::generating_set(4).size());

  SECTION("quoted images") {
    using W = std::vector<GenSym>;
    CHECK(asg.at(GenSym::trans(3, 4)) == W{GenSym::trans(1, 2), GenSym::sig(3, 4)});
    CHECK(asg.at(GenSym::sig(3, 4)) == W{GenSym::trans(1, 2), GenSym::trans(3, 4)});
    CHECK(asg.at(GenSym::trans(1, 2)) == W{GenSym::trans(1, 2)});
  }

  SECTION("involution spot value: applying twice to [3 4] returns [3 4]") {
    // alpha(alpha([3 4])) = alpha([1 2][sigma_{3,4}]) = [1 2]([1 2][3 4]) = [3 4].
    std::vector<GenSym> once = asg.at(GenSym::trans(3, 4));
    std::vector<GenSym> twice;
    for (const GenSym& s : once) {
      const auto& w = asg.at(s);
      twice.insert(twice.end(), w.begin(), w.end());
    }
    CHECK(coxrig::evaluate_symbol_word(twice, 4) == interpret(GenSym::trans(3, 4), 4));
  }

  SECTION("full verification report") {
    auto rep = coxrig::verify_exceptional_w4();
    CAPTURE(rep.details);
    CHECK(rep.relators.pass());
    CHECK(rep.involution_on_symbols);
    CHECK(rep.not_inner_witness);
    CHECK(rep.witness_stable_under_conjugation);
    CHECK(rep.exchanges_a4_u4);
    CHECK(rep.klein_image_is_twist_group);
    CHECK(rep.pass());
  }
}
