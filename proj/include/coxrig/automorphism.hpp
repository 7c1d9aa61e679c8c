#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "perm.hpp"
#include "word.hpp"

namespace coxrig {

// Construction-trace tokens. An automorphism value only ever arises from the
// invertible constructors below, so inverses are available by reversing the
// trace and inverting each token; no peak reduction is needed.
struct TokTau {
  int i;  // swaps x_i and x_{i+1}
};
struct TokSigma {
  int i, j;  // x_i -> x_j x_i x_j
};
struct TokAd {
  Word w;  // global conjugation u -> w u w^-1
};
struct ImagesData {
  std::vector<Word> fwd;  // images of x_1..x_n
  std::vector<Word> bwd;  // images under the inverse
};
struct TokImages {
  std::shared_ptr<const ImagesData> data;
};
using Token = std::variant<TokTau, TokSigma, TokAd, TokImages>;

namespace detail {

inline Word substitute(const Word& u, const std::vector<Word>& images) {
  Word out(u.rank());
  for (int a : u.letters()) out = out * images[static_cast<std::size_t>(a - 1)];
  return out;
}

inline Word apply_token(const Token& t, const Word& u) {
  if (const auto* tt = std::get_if<TokTau>(&t)) {
    std::vector<int> raw;
    raw.reserve(u.length());
    for (int a : u.letters()) raw.push_back(a == tt->i ? tt->i + 1 : (a == tt->i + 1 ? tt->i : a));
    return Word(u.rank(), raw);
  }
  if (const auto* ts = std::get_if<TokSigma>(&t)) {
    std::vector<int> raw;
    raw.reserve(3 * u.length());
    for (int a : u.letters()) {
      if (a == ts->i) {
        raw.push_back(ts->j);
        raw.push_back(ts->i);
        raw.push_back(ts->j);
      } else {
        raw.push_back(a);
      }
    }
    return Word(u.rank(), raw);
  }
  if (const auto* ta = std::get_if<TokAd>(&t)) return u.conjugated_by(ta->w);
  return substitute(u, std::get<TokImages>(t).data->fwd);
}

inline Token invert_token(const Token& t) {
  if (std::holds_alternative<TokTau>(t) || std::holds_alternative<TokSigma>(t)) return t;
  if (const auto* ta = std::get_if<TokAd>(&t)) return TokAd{ta->w.inverse()};
  const auto& d = std::get<TokImages>(t).data;
  return TokImages{std::make_shared<const ImagesData>(ImagesData{d->bwd, d->fwd})};
}

// Applies the inverse of a token composition: for trace t0∘t1∘...∘tk the
// inverse is tk^-1∘...∘t0^-1, whose rightmost factor t0^-1 acts first.
inline Word apply_inverse_trace(const std::vector<Token>& trace, Word u) {
  for (const Token& t : trace) u = apply_token(invert_token(t), u);
  return u;
}

inline Word apply_trace(const std::vector<Token>& trace, Word u) {
  for (auto it = trace.rbegin(); it != trace.rend(); ++it) u = apply_token(*it, u);
  return u;
}

}  // namespace detail

// Automorphism of W_n in the unique normal form x_i -> w_i x_{pi(i)} w_i^-1
// with every w_i reduced and not ending in x_{pi(i)}. Structural equality of
// (pi, w) is map equality. The construction trace rides along solely to make
// inversion cheap and is ignored by comparisons.
class Automorphism {
 public:
  static Automorphism identity(int rank) { return Automorphism(rank); }

  static Automorphism tau(int i, int rank) {
    if (i < 1 || i + 1 > rank) throw IndexOutOfRank("tau index out of 1..rank-1");
    Automorphism a(rank);
    a.perm_ = Perm::transposition(rank, i, i + 1);
    a.trace_ = {TokTau{i}};
    return a;
  }

  static Automorphism sigma(int i, int j, int rank) {
    if (i < 1 || i > rank || j < 1 || j > rank) throw IndexOutOfRank("sigma index out of rank");
    if (i == j) throw EqualIndices("sigma needs distinct indices");
    Automorphism a(rank);
    a.conj_[static_cast<std::size_t>(i - 1)] = Word::generator(rank, j);
    a.trace_ = {TokSigma{i, j}};
    return a;
  }

  static Automorphism ad(const Word& w) {
    Automorphism a(w.rank());
    for (int i = 1; i <= w.rank(); ++i)
      a.conj_[static_cast<std::size_t>(i - 1)] = normalize_conjugator(w, i);
    a.trace_ = {TokAd{w}};
    return a;
  }

  // Permutation automorphism x_i -> x_{p(i)}, traced as a product of taus.
  static Automorphism from_perm(const Perm& p) {
    Automorphism a(p.degree());
    a.perm_ = p;
    // Bubble-sort the one-line notation; each swap at position k composes
    // tau_k on the right of the inverse, so the recorded sequence reversed
    // is a decomposition of p itself.
    std::vector<int> line(static_cast<std::size_t>(p.degree()));
    for (int i = 1; i <= p.degree(); ++i) line[static_cast<std::size_t>(i - 1)] = p.map(i);
    for (std::size_t pass = 0; pass + 1 < line.size(); ++pass)
      for (std::size_t k = 0; k + 1 < line.size(); ++k)
        if (line[k] > line[k + 1]) {
          std::swap(line[k], line[k + 1]);
          a.trace_.push_back(TokTau{static_cast<int>(k) + 1});
        }
    std::reverse(a.trace_.begin(), a.trace_.end());
    return a;
  }

  static Automorphism transposition(int i, int j, int rank) {
    return from_perm(Perm::transposition(rank, i, j));
  }

  // Builds an automorphism from generator images plus a claimed inverse; both
  // substitution directions must give back the generators.
  static Automorphism from_images(const std::vector<Word>& images,
                                  const std::vector<Word>& inverse_images) {
    if (images.empty() || images.size() != inverse_images.size())
      throw RankMismatch("from_images: image lists must be nonempty and of equal size");
    int rank = images[0].rank();
    if (static_cast<int>(images.size()) != rank)
      throw RankMismatch("from_images: need one image per generator");
    Automorphism a(rank);
    std::vector<int> perm_images(images.size());
    for (int i = 1; i <= rank; ++i) {
      const Word& y = images[static_cast<std::size_t>(i - 1)];
      if (y.rank() != rank || inverse_images[static_cast<std::size_t>(i - 1)].rank() != rank)
        throw RankMismatch("from_images: rank mismatch in image list");
      if (!y.is_involution()) throw NotInvolution("from_images: image of x_" + std::to_string(i) + " is not an involution");
      auto [w, j] = y.involution_decompose();
      perm_images[static_cast<std::size_t>(i - 1)] = j;
      a.conj_[static_cast<std::size_t>(i - 1)] = w;
    }
    try {
      a.perm_ = Perm::from_images(perm_images);
    } catch (const PermutationNotBijective&) {
      throw PermutationNotBijective("from_images: induced generator permutation is not bijective");
    }
    for (int i = 1; i <= rank; ++i) {
      Word xi = Word::generator(rank, i);
      if (detail::substitute(detail::substitute(xi, inverse_images), images) != xi ||
          detail::substitute(detail::substitute(xi, images), inverse_images) != xi)
        throw NotInverse("from_images: claimed inverse does not invert the map");
    }
    a.trace_ = {TokImages{std::make_shared<const ImagesData>(ImagesData{images, inverse_images})}};
    return a;
  }

  int rank() const { return rank_; }
  const Perm& perm() const { return perm_; }
  const std::vector<Word>& conjugators() const { return conj_; }
  const std::vector<Token>& trace() const { return trace_; }

  // Reduced image of x_i.
  Word image_of(int i) const {
    if (i < 1 || i > rank_) throw IndexOutOfRank("image_of: index out of rank");
    return Word::generator(rank_, perm_.map(i)).conjugated_by(conj_[static_cast<std::size_t>(i - 1)]);
  }

  Word apply(const Word& u) const {
    if (u.rank() != rank_) throw RankMismatch("apply: rank mismatch");
    Word out(rank_);
    for (int a : u.letters()) out = out * image_of(a);
    return out;
  }

  // Composition a*b applies b first.
  Automorphism operator*(const Automorphism& b) const {
    if (rank_ != b.rank_) throw RankMismatch("compose: rank mismatch");
    Automorphism r(rank_);
    r.perm_ = perm_ * b.perm_;
    for (int i = 1; i <= rank_; ++i) {
      Word w = apply(b.conj_[static_cast<std::size_t>(i - 1)]) *
               conj_[static_cast<std::size_t>(b.perm_.map(i) - 1)];
      r.conj_[static_cast<std::size_t>(i - 1)] = normalize_conjugator(w, r.perm_.map(i));
    }
    r.trace_ = trace_;
    r.trace_.insert(r.trace_.end(), b.trace_.begin(), b.trace_.end());
    r.compact_if_long();
    return r;
  }

  Automorphism inverse() const {
    Automorphism r(rank_);
    r.perm_ = perm_.inverse();
    for (int j = 1; j <= rank_; ++j) {
      Word v = detail::apply_inverse_trace(trace_, Word::generator(rank_, j));
      r.conj_[static_cast<std::size_t>(j - 1)] = v.involution_decompose().first;
    }
    r.trace_.reserve(trace_.size());
    for (auto it = trace_.rbegin(); it != trace_.rend(); ++it)
      r.trace_.push_back(detail::invert_token(*it));
    return r;
  }

  bool operator==(const Automorphism& o) const {
    return rank_ == o.rank_ && perm_ == o.perm_ && conj_ == o.conj_;
  }

  bool is_identity() const { return *this == Automorphism(rank_); }

  std::string key() const {
    std::ostringstream os;
    os << perm_.key();
    for (const Word& w : conj_) os << '|' << w.str();
    return os.str();
  }

  std::string str() const {
    std::ostringstream os;
    for (int i = 1; i <= rank_; ++i) {
      if (i > 1) os << "; ";
      os << 'x' << i << " -> " << image_of(i).str();
    }
    return os.str();
  }

 private:
  explicit Automorphism(int rank) : rank_(rank), perm_(rank), conj_(static_cast<std::size_t>(rank), Word(rank)) {
    if (rank < 1) throw IndexOutOfRank("automorphism rank must be positive");
  }

  // Strips a trailing x_j: w x_j x_j x_j w^-1 = w x_j w^-1, and a reduced w
  // never ends in two copies, so one strip suffices.
  static Word normalize_conjugator(const Word& w, int j) {
    if (!w.is_identity() && w.letters().back() == j) {
      std::vector<int> raw(w.letters().begin(), w.letters().end() - 1);
      return Word(w.rank(), raw);
    }
    return w;
  }

  // Long traces are folded into a verified image pair so that closure
  // enumerations do not accumulate unbounded histories.
  void compact_if_long() {
    static constexpr std::size_t kTraceLimit = 64;
    if (trace_.size() <= kTraceLimit) return;
    std::vector<Word> fwd, bwd;
    fwd.reserve(static_cast<std::size_t>(rank_));
    bwd.reserve(static_cast<std::size_t>(rank_));
    for (int i = 1; i <= rank_; ++i) {
      fwd.push_back(image_of(i));
      bwd.push_back(detail::apply_inverse_trace(trace_, Word::generator(rank_, i)));
    }
    trace_ = {TokImages{std::make_shared<const ImagesData>(ImagesData{std::move(fwd), std::move(bwd)})}};
  }

  int rank_;
  Perm perm_;
  std::vector<Word> conj_;
  std::vector<Token> trace_;

  friend class OuterClass;
};

// Outer automorphism class with a deterministic canonical representative: of
// the two inner translates that trivialize the first conjugator (the
// centralizer of a generator is the order-2 subgroup it generates), keep the
// smaller normalized tuple.
class OuterClass {
 public:
  explicit OuterClass(const Automorphism& a) : rep_(canonicalize(a)) {}

  static OuterClass identity(int rank) { return OuterClass(Automorphism::identity(rank)); }

  int rank() const { return rep_.rank(); }
  const Automorphism& rep() const { return rep_; }
  const Perm& class_permutation() const { return rep_.perm(); }

  OuterClass operator*(const OuterClass& o) const { return OuterClass(rep_ * o.rep_); }
  OuterClass inverse() const { return OuterClass(rep_.inverse()); }

  bool operator==(const OuterClass& o) const { return rep_ == o.rep_; }
  bool is_identity() const { return rep_.is_identity(); }

  std::string key() const { return rep_.key(); }
  std::string str() const { return rep_.str(); }

  // Smallest k <= bound with c^k trivial.
  int order(int bound = 10000) const {
    if (bound < 1) throw OrderExceedsBound("order: bound must be >= 1");
    OuterClass p = *this;
    for (int k = 1; k <= bound; ++k) {
      if (p.is_identity()) return k;
      p = p * (*this);
    }
    throw OrderExceedsBound("order exceeds bound " + std::to_string(bound));
  }

 private:
  static Automorphism canonicalize(const Automorphism& a) {
    const Word& w1 = a.conj_[0];
    int j1 = a.perm_.map(1);
    Word g0 = w1.inverse();
    Word g1 = Word::generator(a.rank(), j1) * w1.inverse();
    Automorphism best = translate(a, g0);
    Automorphism alt = translate(a, g1);
    if (tuple_less(alt, best)) best = alt;
    return best;
  }

  // ad(g) ∘ a: the permutation is unchanged and conjugators become g*w_i.
  static Automorphism translate(const Automorphism& a, const Word& g) {
    Automorphism r(a.rank());
    r.perm_ = a.perm_;
    for (int i = 1; i <= a.rank(); ++i)
      r.conj_[static_cast<std::size_t>(i - 1)] =
          Automorphism::normalize_conjugator(g * a.conj_[static_cast<std::size_t>(i - 1)], a.perm_.map(i));
    r.trace_ = a.trace_;
    r.trace_.insert(r.trace_.begin(), TokAd{g});
    r.compact_if_long();
    return r;
  }

  static bool tuple_less(const Automorphism& a, const Automorphism& b) {
    for (std::size_t k = 0; k < a.conj_.size(); ++k) {
      if (a.conj_[k] < b.conj_[k]) return true;
      if (b.conj_[k] < a.conj_[k]) return false;
    }
    return false;
  }

  Automorphism rep_;
};

inline OuterClass outer(const Automorphism& a) { return OuterClass(a); }

// True iff a = ad(g) ∘ b for some g; decided on canonical outer forms.
inline bool outer_equal(const Automorphism& a, const Automorphism& b) {
  if (a.rank() != b.rank()) throw RankMismatch("outer_equal: rank mismatch");
  return OuterClass(a) == OuterClass(b);
}

inline Automorphism compose(const Automorphism& a, const Automorphism& b) { return a * b; }

inline Automorphism compose(const Automorphism& a, const Automorphism& b, const Automorphism& c) {
  return a * b * c;
}

// Parses "t1", "s1,2", "ad(2 1 2)", "e", or a ";"-joined composition of those
// (rightmost factor applied first).
inline Automorphism parse_automorphism(const std::string& expr, int rank) {
  Automorphism out = Automorphism::identity(rank);
  std::size_t pos = 0;
  bool any = false;
  while (pos <= expr.size()) {
    std::size_t next = expr.find(';', pos);
    std::string tok = expr.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    std::size_t b = tok.find_first_not_of(" \t");
    std::size_t e = tok.find_last_not_of(" \t");
    tok = b == std::string::npos ? std::string() : tok.substr(b, e - b + 1);
    if (!tok.empty()) {
      Automorphism factor = Automorphism::identity(rank);
      try {
        if (tok == "e" || tok == "id") {
          // identity factor
        } else if (tok[0] == 't') {
          factor = Automorphism::tau(std::stoi(tok.substr(1)), rank);
        } else if (tok[0] == 's') {
          std::size_t comma = tok.find(',');
          if (comma == std::string::npos) throw ParseError("bad automorphism token '" + tok + "'");
          factor = Automorphism::sigma(std::stoi(tok.substr(1, comma - 1)),
                                       std::stoi(tok.substr(comma + 1)), rank);
        } else if (tok.rfind("ad(", 0) == 0 && tok.back() == ')') {
          factor = Automorphism::ad(Word::parse(tok.substr(3, tok.size() - 4), rank));
        } else {
          throw ParseError("bad automorphism token '" + tok + "'");
        }
      } catch (const Error&) {
        throw;
      } catch (const std::exception&) {
        throw ParseError("bad automorphism token '" + tok + "'");
      }
      out = any ? out * factor : factor;
      any = true;
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

}  // namespace coxrig
