#pragma once

#include <compare>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "automorphism.hpp"
#include "errors.hpp"
#include "subgroup.hpp"

namespace coxrig {

// Generating set S of Out(W_n) in Gilbert's presentation: the transposition
// classes [i j] (unordered, normalized i < j) and the partial-conjugation
// classes [sigma_{i,j}] (ordered pairs).
struct GenSym {
  bool sigma = false;
  int i = 0, j = 0;

  static GenSym trans(int i, int j) {
    if (i == j) throw EqualIndices("transposition symbol needs distinct indices");
    if (i > j) std::swap(i, j);
    return GenSym{false, i, j};
  }
  static GenSym sig(int i, int j) {
    if (i == j) throw EqualIndices("sigma symbol needs distinct indices");
    return GenSym{true, i, j};
  }

  auto operator<=>(const GenSym&) const = default;

  std::string str() const {
    std::ostringstream os;
    os << (sigma ? 's' : 't') << i << ',' << j;
    return os.str();
  }
};

struct SignedSym {
  GenSym sym;
  bool inverted = false;

  std::string str() const { return inverted ? sym.str() + "'" : sym.str(); }
};

// One instance of a relation family, stored as a single relator word
// (left-hand side times the inverse of the right-hand side).
struct Relator {
  char family = '?';
  std::vector<SignedSym> word;
  std::vector<int> indices;

  std::string str() const {
    std::ostringstream os;
    os << '(' << family << ')';
    for (const auto& s : word) os << ' ' << s.str();
    return os.str();
  }
};

inline std::vector<GenSym> generating_set(int n) {
  std::vector<GenSym> s;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) s.push_back(GenSym::trans(i, j));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) s.push_back(GenSym::sig(i, j));
  return s;
}

// Standard interpretation of a symbol in Out(W_n).
inline OuterClass interpret(const GenSym& s, int n) {
  if (s.sigma) return outer(Automorphism::sigma(s.i, s.j, n));
  return outer(Automorphism::transposition(s.i, s.j, n));
}

namespace detail {

inline void push_side(std::vector<SignedSym>& rel, const std::vector<GenSym>& left,
                      const std::vector<GenSym>& right) {
  for (const GenSym& s : left) rel.push_back({s, false});
  for (auto it = right.rbegin(); it != right.rend(); ++it) rel.push_back({*it, true});
}

inline Relator make_relator(char family, const std::vector<GenSym>& left,
                            const std::vector<GenSym>& right, std::vector<int> indices) {
  Relator r;
  r.family = family;
  r.indices = std::move(indices);
  push_side(r.word, left, right);
  return r;
}

}  // namespace detail

// Every instance of the relation families, with only the stated distinctness
// constraints on the instantiating indices:
//   (a) prod_{j != i} s_{j,i} = 1
//   (b) t_{ij} t_{kl} = t_{T(k)T(l)} t_{ij}        with T = (i j), i!=j, k!=l
//   (c) s_{ij} s_{kj} = s_{kj} s_{ij}              i, k distinct, both != j
//   (d) s_{ij} s_{ij} = 1
//   (e) s_{ij} s_{kl} = s_{kl} s_{ij}              i, j, k, l pairwise distinct
//   (f) t_{ij} s_{kl} = s_{T(k)T(l)} t_{ij}        with T = (i j), i!=j, k!=l
//   (g) s_{ji} s_{ik} s_{jk} = s_{jk} s_{ik} s_{ji} for i, j, k pairwise distinct
inline std::vector<Relator> enumerate_relators(int n, const std::string& families = "abcdefg") {
  if (n < 3) throw Error("relators need n >= 3");
  std::vector<Relator> out;
  auto wanted = [&families](char f) { return families.find(f) != std::string::npos; };

  if (wanted('a'))
    for (int i = 1; i <= n; ++i) {
      std::vector<GenSym> left;
      for (int j = 1; j <= n; ++j)
        if (j != i) left.push_back(GenSym::sig(j, i));
      out.push_back(detail::make_relator('a', left, {}, {i}));
    }

  if (wanted('b'))
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        auto tr = [&](int v) { return v == i ? j : (v == j ? i : v); };
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            if (k == l) continue;
            out.push_back(detail::make_relator(
                'b', {GenSym::trans(i, j), GenSym::trans(k, l)},
                {GenSym::trans(tr(k), tr(l)), GenSym::trans(i, j)}, {i, j, k, l}));
          }
      }

  if (wanted('c'))
    for (int j = 1; j <= n; ++j)
      for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) {
          if (i == j || k == j || i == k) continue;
          out.push_back(detail::make_relator('c', {GenSym::sig(i, j), GenSym::sig(k, j)},
                                             {GenSym::sig(k, j), GenSym::sig(i, j)}, {i, j, k}));
        }

  if (wanted('d'))
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        out.push_back(detail::make_relator('d', {GenSym::sig(i, j), GenSym::sig(i, j)}, {}, {i, j}));
      }

  if (wanted('e'))
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
            out.push_back(detail::make_relator('e', {GenSym::sig(i, j), GenSym::sig(k, l)},
                                               {GenSym::sig(k, l), GenSym::sig(i, j)},
                                               {i, j, k, l}));
          }

  if (wanted('f'))
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        auto tr = [&](int v) { return v == i ? j : (v == j ? i : v); };
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            if (k == l) continue;
            out.push_back(detail::make_relator(
                'f', {GenSym::trans(i, j), GenSym::sig(k, l)},
                {GenSym::sig(tr(k), tr(l)), GenSym::trans(i, j)}, {i, j, k, l}));
          }
      }

  if (wanted('g'))
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
          if (i == j || i == k || j == k) continue;
          out.push_back(detail::make_relator(
              'g', {GenSym::sig(j, i), GenSym::sig(i, k), GenSym::sig(j, k)},
              {GenSym::sig(j, k), GenSym::sig(i, k), GenSym::sig(j, i)}, {i, j, k}));
        }

  return out;
}

// Evaluates a relator word under a symbol interpretation, rightmost factor
// first.
inline OuterClass evaluate_relator(const Relator& r, int n,
                                   const std::function<OuterClass(const GenSym&)>& phi) {
  OuterClass acc = OuterClass::identity(n);
  for (const SignedSym& s : r.word) {
    OuterClass v = phi(s.sym);
    acc = acc * (s.inverted ? v.inverse() : v);
  }
  return acc;
}

struct RelatorCheck {
  int n = 0;
  std::map<char, std::size_t> family_counts;
  std::vector<Relator> failures;
  bool pass() const { return failures.empty(); }
  std::size_t total() const {
    std::size_t t = 0;
    for (auto& [f, c] : family_counts) t += c;
    return t;
  }
  std::string details() const {
    std::ostringstream os;
    os << "instances:";
    for (auto& [f, c] : family_counts) os << ' ' << f << '=' << c;
    if (!failures.empty()) {
      os << "; failing:";
      for (std::size_t k = 0; k < failures.size() && k < 8; ++k) os << ' ' << failures[k].str();
      if (failures.size() > 8) os << " ...";
    }
    return os.str();
  }
};

// Checks that every relator instance evaluates to the identity outer class
// under the standard interpretation.
inline RelatorCheck verify_presentation(int n, const std::string& families = "abcdefg") {
  RelatorCheck out;
  out.n = n;
  for (const Relator& r : enumerate_relators(n, families)) {
    ++out.family_counts[r.family];
    auto value = evaluate_relator(r, n, [n](const GenSym& s) { return interpret(s, n); });
    if (!value.is_identity()) out.failures.push_back(r);
  }
  return out;
}

// A candidate endomorphism presented on generators: each symbol is sent to a
// word in the symbols, so the map can be iterated.
using Assignment = std::map<GenSym, std::vector<GenSym>>;

inline Assignment identity_assignment(int n) {
  Assignment a;
  for (const GenSym& s : generating_set(n)) a[s] = {s};
  return a;
}

inline OuterClass evaluate_symbol_word(const std::vector<GenSym>& word, int n) {
  OuterClass acc = OuterClass::identity(n);
  for (const GenSym& s : word) acc = acc * interpret(s, n);
  return acc;
}

// Substitutes the assignment into every relator; the assignment extends to a
// group endomorphism of Out(W_n) iff every image evaluates to the identity.
inline RelatorCheck check_assignment(const Assignment& asg, int n,
                                     const std::string& families = "abcdefg") {
  for (const GenSym& s : generating_set(n))
    if (!asg.count(s)) throw Error("assignment is not total: missing " + s.str());
  RelatorCheck out;
  out.n = n;
  std::map<GenSym, OuterClass> images;
  for (const auto& [s, w] : asg) images.emplace(s, evaluate_symbol_word(w, n));
  for (const Relator& r : enumerate_relators(n, families)) {
    ++out.family_counts[r.family];
    auto value = evaluate_relator(r, n, [&images](const GenSym& s) { return images.at(s); });
    if (!value.is_identity()) out.failures.push_back(r);
  }
  return out;
}

// The exceptional involution of Out(W_4) on the generating set S:
// identity on the rank-3 transpositions, and for i in {1,2,3} with
// {j,k} = {1,2,3} - {i}:
//   [i 4]          -> [j k][sigma_{i,4}]
//   [sigma_{i,4}]  -> [j k][i 4]
//   [sigma_{i,j}]  -> [sigma_{j,4}][i j][k l][sigma_{j,4}]   (j != 4, {k,l} complement)
inline Assignment exceptional_w4_assignment() {
  Assignment a;
  auto others = [](int i) {
    std::vector<int> rest;
    for (int v = 1; v <= 3; ++v)
      if (v != i) rest.push_back(v);
    return rest;
  };
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) a[GenSym::trans(i, j)] = {GenSym::trans(i, j)};
  for (int i = 1; i <= 3; ++i) {
    auto jk = others(i);
    a[GenSym::trans(i, 4)] = {GenSym::trans(jk[0], jk[1]), GenSym::sig(i, 4)};
    a[GenSym::sig(i, 4)] = {GenSym::trans(jk[0], jk[1]), GenSym::trans(i, 4)};
  }
  for (int j = 1; j <= 3; ++j)
    for (int i = 1; i <= 4; ++i) {
      if (i == j) continue;
      std::vector<int> kl;
      for (int v = 1; v <= 4; ++v)
        if (v != i && v != j) kl.push_back(v);
      a[GenSym::sig(i, j)] = {GenSym::sig(j, 4), GenSym::trans(i, j), GenSym::trans(kl[0], kl[1]),
                              GenSym::sig(j, 4)};
    }
  return a;
}

struct ExceptionalW4Report {
  RelatorCheck relators;
  bool involution_on_symbols = false;
  bool not_inner_witness = false;
  bool witness_stable_under_conjugation = false;
  bool exchanges_a4_u4 = false;
  bool klein_image_is_twist_group = false;
  std::string details;
  bool pass() const {
    return relators.pass() && involution_on_symbols && not_inner_witness &&
           witness_stable_under_conjugation && exchanges_a4_u4 && klein_image_is_twist_group;
  }
};

// Full verification of the exceptional involution: it preserves every
// relator; it squares to the identity on S; the class-permutation invariant
// shows it is not inner; and it exchanges the vertex-stabilizer pairs
// (A_4 <-> U_4, Klein four-group <-> twist image).
inline ExceptionalW4Report verify_exceptional_w4() {
  const int n = 4;
  ExceptionalW4Report rep;
  Assignment asg = exceptional_w4_assignment();
  std::ostringstream os;

  rep.relators = check_assignment(asg, n);
  os << "relators[" << rep.relators.total() << (rep.relators.pass() ? " ok" : " FAIL") << "]";

  rep.involution_on_symbols = true;
  for (const GenSym& s : generating_set(n)) {
    std::vector<GenSym> twice;
    for (const GenSym& t : asg.at(s)) {
      const auto& w = asg.at(t);
      twice.insert(twice.end(), w.begin(), w.end());
    }
    if (!(evaluate_symbol_word(twice, n) == interpret(s, n))) rep.involution_on_symbols = false;
  }
  os << ", involution=" << (rep.involution_on_symbols ? "yes" : "NO");

  // [sigma_{3,4}] has trivial class permutation but its image [1 2][3 4]
  // does not; class permutations are conjugation-equivariant, so no inner
  // automorphism can do that.
  OuterClass s34 = interpret(GenSym::sig(3, 4), n);
  OuterClass img = evaluate_symbol_word(asg.at(GenSym::sig(3, 4)), n);
  rep.not_inner_witness = s34.class_permutation().is_identity() &&
                          img.class_permutation() == Perm::from_cycles(4, {{1, 2}, {3, 4}});
  os << ", not-inner-witness=" << (rep.not_inner_witness ? "yes" : "NO");

  std::vector<OuterClass> a4_gens{interpret(GenSym::trans(1, 2), n), interpret(GenSym::trans(2, 3), n),
                                  interpret(GenSym::trans(3, 4), n)};
  std::vector<OuterClass> u4_gens{interpret(GenSym::trans(1, 2), n), interpret(GenSym::trans(2, 3), n),
                                  interpret(GenSym::sig(1, 4), n)};
  auto a4 = Subgroup<OuterClass>::closure(a4_gens);
  auto u4 = Subgroup<OuterClass>::closure(u4_gens);

  rep.witness_stable_under_conjugation = true;
  for (const auto& grp : {a4, u4})
    for (const OuterClass& g : grp.elements())
      if (!(g * s34 * g.inverse()).class_permutation().is_identity())
        rep.witness_stable_under_conjugation = false;
  os << ", witness-stable=" << (rep.witness_stable_under_conjugation ? "yes" : "NO");

  auto image_of_gens = [&asg, n](const std::vector<GenSym>& gens) {
    std::vector<OuterClass> out;
    for (const GenSym& s : gens) out.push_back(evaluate_symbol_word(asg.at(s), n));
    return out;
  };
  auto img_a4 = Subgroup<OuterClass>::closure(
      image_of_gens({GenSym::trans(1, 2), GenSym::trans(2, 3), GenSym::trans(3, 4)}));
  auto img_u4 = Subgroup<OuterClass>::closure(
      image_of_gens({GenSym::trans(1, 2), GenSym::trans(2, 3), GenSym::sig(1, 4)}));
  rep.exchanges_a4_u4 = a4.order() == 24 && u4.order() == 24 && img_a4.same_elements(u4) &&
                        img_u4.same_elements(a4);
  os << ", A4<->U4=" << (rep.exchanges_a4_u4 ? "yes" : "NO");

  // The Klein four-group inside A_4 is generated by the three double
  // transpositions; its image must be the twist subgroup.
  std::vector<OuterClass> klein_img_gens;
  {
    std::vector<std::pair<GenSym, GenSym>> pairs{
        {GenSym::trans(1, 2), GenSym::trans(3, 4)},
        {GenSym::trans(1, 3), GenSym::trans(2, 4)},
        {GenSym::trans(1, 4), GenSym::trans(2, 3)}};
    for (auto& [p, q] : pairs) {
      std::vector<GenSym> w = asg.at(p);
      const auto& w2 = asg.at(q);
      w.insert(w.end(), w2.begin(), w2.end());
      klein_img_gens.push_back(evaluate_symbol_word(w, n));
    }
  }
  auto twist_image = Subgroup<OuterClass>::closure(
      {interpret(GenSym::sig(1, 4), n), interpret(GenSym::sig(2, 4), n), interpret(GenSym::sig(3, 4), n)});
  auto klein_mapped = Subgroup<OuterClass>::closure(klein_img_gens);
  rep.klein_image_is_twist_group =
      twist_image.order() == 4 && klein_mapped.same_elements(twist_image);
  os << ", Klein->twists=" << (rep.klein_image_is_twist_group ? "yes" : "NO");

  rep.details = os.str();
  return rep;
}

}  // namespace coxrig
